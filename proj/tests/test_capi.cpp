#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "samelson/capi.h"

namespace {

struct Ctx {
    sam_ctx* ctx = sam_ctx_new();
    ~Ctx() { sam_ctx_free(ctx); }
};

std::string take(char* s) {
    REQUIRE(s != nullptr);
    std::string out = s;
    sam_string_free(s);
    return out;
}

}  // namespace

TEST_CASE("options are validated") {
    Ctx c;
    CHECK(sam_set_option(c.ctx, "seed", "42") == 0);
    CHECK(sam_set_option(c.ctx, "fixtures", SAMELSON_FIXTURE_DIR) == 0);
    CHECK(sam_set_option(c.ctx, "format", "markdown") == 0);
    CHECK(sam_set_option(c.ctx, "format", "yaml") == 2);
    CHECK(sam_set_option(c.ctx, "nonsense", "1") == 2);
    CHECK(std::string(sam_last_error(c.ctx)).find("unknown option") != std::string::npos);
    CHECK(sam_set_option(c.ctx, "seed", "not-a-number") == 2);
}

TEST_CASE("decompose through the C interface") {
    Ctx c;
    REQUIRE(sam_set_option(c.ctx, "fixtures", SAMELSON_FIXTURE_DIR) == 0);
    char* out = nullptr;
    CHECK(sam_decompose(c.ctx, "F4", 0, 7, &out) == 0);
    auto doc = take(out);
    CHECK(doc.find("B(3,15)") != std::string::npos);
    CHECK(doc.find("B(11,23)") != std::string::npos);

    // structured domain error: code 1 with a document
    CHECK(sam_decompose(c.ctx, "E8", 0, 5, &out) == 1);
    CHECK(take(out).find("not quasi-p-regular") != std::string::npos);
    CHECK(std::string(sam_last_error(c.ctx)) == "not quasi-p-regular");

    // usage error: code 2, no document
    CHECK(sam_decompose(c.ctx, "E9", 0, 7, &out) == 2);
    CHECK(out == nullptr);
    CHECK(sam_decompose(c.ctx, nullptr, 0, 7, &out) == 2);
}

TEST_CASE("order and pi through the C interface") {
    Ctx c;
    char* out = nullptr;
    CHECK(sam_order(c.ctx, "E7", 0, 13, 0, &out) == 0);
    auto doc = take(out);
    CHECK(doc.find("\"lo\": 1") != std::string::npos);
    CHECK(doc.find("\"hi\": 2") != std::string::npos);

    CHECK(sam_pi(c.ctx, "S:7", 20, 5, &out) == 0);
    CHECK(take(out).find("\"group\": \"0\"") != std::string::npos);
    CHECK(sam_pi(c.ctx, "S:3", 1000, 5, &out) == 1);
    CHECK(take(out).find("degree outside Toda range") != std::string::npos);
    CHECK(sam_pi(c.ctx, "Q:3", 10, 5, &out) == 2);
}

TEST_CASE("tables and strict mode") {
    Ctx c;
    REQUIRE(sam_set_option(c.ctx, "fixtures", SAMELSON_FIXTURE_DIR) == 0);
    char* out = nullptr;
    CHECK(sam_table(c.ctx, "exceptional", 0, 0, 0, &out) == 0);
    auto doc = take(out);
    CHECK(doc.find("fixture_diffs") != std::string::npos);

    REQUIRE(sam_set_option(c.ctx, "strict", "1") == 0);
    CHECK(sam_table(c.ctx, "exceptional", 0, 0, 0, &out) == 1);
    take(out);
    REQUIRE(sam_set_option(c.ctx, "strict", "0") == 0);
    CHECK(sam_table(c.ctx, "bogus", 0, 0, 0, &out) == 2);
}

TEST_CASE("verify through the C interface") {
    Ctx c;
    REQUIRE(sam_set_option(c.ctx, "trials", "20") == 0);
    char* out = nullptr;
    CHECK(sam_verify(c.ctx, "hockey", 30, 0, &out) == 0);
    CHECK(take(out).find("\"fail\": 0") != std::string::npos);
    CHECK(sam_verify(c.ctx, "bogus", 0, 0, &out) == 2);
}

TEST_CASE("markdown format flows through") {
    Ctx c;
    REQUIRE(sam_set_option(c.ctx, "format", "markdown") == 0);
    char* out = nullptr;
    CHECK(sam_order(c.ctx, "F4", 0, 7, 0, &out) == 0);
    CHECK(take(out).rfind("# Order", 0) == 0);
}
