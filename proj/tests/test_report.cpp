#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "samelson/report.hpp"

using namespace samelson::report;
using nlohmann::json;

namespace {

Options fixture_options() {
    Options opt;
    opt.fixtures_dir = SAMELSON_FIXTURE_DIR;
    return opt;
}

}  // namespace

TEST_CASE("decompose document") {
    auto r = cmd_decompose("F4", 0, 7, fixture_options());
    CHECK(r.exit_code == 0);
    CHECK(r.doc["group"] == "F4");
    CHECK(r.doc["classification"] == "quasi-p-regular");
    CHECK(r.doc["factors"] == json({"B(3,15)", "B(11,23)"}));
    CHECK(r.doc["a_cells"] == json({"C3{3,15}", "C11{11,23}"}));
    CHECK(r.doc["warnings"].empty());

    auto sphere = cmd_decompose("SU", 4, 7, fixture_options());
    CHECK(sphere.doc["factors"] == json({"S3", "S5", "S7"}));
    CHECK(sphere.doc["classification"] == "p-regular");
}

TEST_CASE("decompose reports structured errors") {
    auto r = cmd_decompose("E8", 0, 5, fixture_options());
    CHECK(r.exit_code == 1);
    CHECK(r.doc["error"] == "not quasi-p-regular");
    CHECK_THROWS_AS(cmd_decompose("E9", 0, 5, fixture_options()), std::invalid_argument);
    CHECK_THROWS_AS(cmd_decompose("SU", 0, 7, fixture_options()), std::invalid_argument);
}

TEST_CASE("decompose flags the mislabeled published row") {
    auto r = cmd_decompose("E8", 0, 23, fixture_options());
    CHECK(r.exit_code == 0);
    REQUIRE(r.doc["warnings"].size() == 1);
    const std::string w = r.doc["warnings"][0];
    CHECK(w.find("fixture mismatch") != std::string::npos);
    // strict mode promotes the diff to a failure
    auto opt = fixture_options();
    opt.strict = true;
    CHECK(cmd_decompose("E8", 0, 23, opt).exit_code == 1);
}

TEST_CASE("order document") {
    auto r = cmd_order("E7", 0, 13, true, fixture_options());
    CHECK(r.exit_code == 0);
    CHECK(r.doc["lo"] == 1);
    CHECK(r.doc["hi"] == 2);
    CHECK(r.doc["gated"] == true);
    CHECK(!r.doc["trace"].empty());
    for (const auto& t : r.doc["trace"]) {
        CHECK(t["exponent"] == 2);
        CHECK(!t["cells"].empty());
    }
    auto g2 = cmd_order("G2", 0, 5, false, fixture_options());
    CHECK(g2.doc["order"] == "1");
    CHECK(!g2.doc.contains("trace"));
    auto err = cmd_order("E8", 0, 5, false, fixture_options());
    CHECK(err.exit_code == 1);
    CHECK(err.doc["error"] == "retractile hypothesis fails");
}

TEST_CASE("pi document") {
    auto r = cmd_pi("S:7", 20, 5, fixture_options());
    CHECK(r.exit_code == 0);
    CHECK(r.doc["group"] == "0");
    auto z = cmd_pi("B:3:11", 18, 5, fixture_options());
    CHECK(z.doc["group"] == "Z/5^2");
    CHECK(z.doc["case"] == "first-family");
    auto free = cmd_pi("B:3:11", 11, 5, fixture_options());
    CHECK(free.doc["group"] == "Z");
    auto range = cmd_pi("S:3", 100, 5, fixture_options());
    CHECK(range.exit_code == 1);
    CHECK(range.doc["error"] == "degree outside Toda range");
    CHECK_THROWS_AS(cmd_pi("X:3", 5, 5, fixture_options()), std::invalid_argument);
}

TEST_CASE("p-regular table matches the condition scheme") {
    auto r = cmd_table("p-regular", 31, 0, 0, fixture_options());
    CHECK(r.exit_code == 0);
    CHECK(r.doc["summary"]["scheme_mismatches"] == 0);
    CHECK(r.doc["summary"]["rows"].get<int>() > 100);
    bool saw_g2_exception = false;
    for (const auto& row : r.doc["rows"]) {
        CHECK(row["match"] == true);
        if (row["group"] == "G2" && row["p"] == 5) {
            saw_g2_exception = true;
            CHECK(row["exception"] == true);
            CHECK(row["order"] == "1");
        }
    }
    CHECK(saw_g2_exception);
}

TEST_CASE("su table matches the five cases where they apply") {
    auto r = cmd_table("su", 0, 7, 13, fixture_options());
    CHECK(r.exit_code == 0);
    CHECK(r.doc["summary"]["case_mismatches"] == 0);
    for (const auto& row : r.doc["rows"])
        if (!row["match"].is_null()) CHECK(row["match"] == true);
}

TEST_CASE("exceptional table pins the known fixture diffs") {
    auto r = cmd_table("exceptional", 0, 0, 0, fixture_options());
    CHECK(r.exit_code == 0);
    CHECK(r.doc["rows"].size() == 13);
    REQUIRE(r.doc["fixture_diffs"].size() == 4);
    auto diff_at = [&](const std::string& g, long p) -> json {
        for (const auto& d : r.doc["fixture_diffs"])
            if (d["group"] == g && d["p"] == p) return d;
        return json();
    };
    CHECK(diff_at("E7", 11)["computed"]["hi"] == 4);
    CHECK(diff_at("E8", 13)["computed"]["hi"] == 6);
    CHECK(diff_at("E8", 17)["computed"]["hi"] == 4);
    CHECK(diff_at("E8", 19)["computed"]["hi"] == 2);
    for (const auto& d : r.doc["fixture_diffs"]) CHECK(!d["trace"].empty());

    auto opt = fixture_options();
    opt.strict = true;
    CHECK(cmd_table("exceptional", 0, 0, 0, opt).exit_code == 1);
}

TEST_CASE("diff-b3 reports the rows that change convention") {
    auto r = cmd_diff_b3(11, 7, 11, fixture_options());
    CHECK(r.exit_code == 0);
    // SU(13)@7, SU(21)@11 and the E7@11 / E8@17 exceptional rows change
    CHECK(r.doc["summary"]["changed_rows"] == 4);
}

TEST_CASE("verify suites pass") {
    auto opt = fixture_options();
    opt.trials = 25;
    auto r = cmd_verify("identities", 0, 0, opt);
    CHECK(r.exit_code == 0);
    CHECK(r.doc["summary"]["fail"] == 0);
    auto h = cmd_verify("hockey", 40, 0, opt);
    CHECK(h.exit_code == 0);
    auto e = cmd_verify("expansion", 0, 1, opt);  // vacuous single-exponent run
    CHECK(e.exit_code == 0);
    CHECK_THROWS_AS(cmd_verify("nonsense", 0, 0, opt), std::invalid_argument);
}

TEST_CASE("rendering is deterministic and round-trips") {
    auto r = cmd_table("exceptional", 0, 0, 0, fixture_options());
    const std::string a = render(r.doc, "json");
    const std::string b = render(cmd_table("exceptional", 0, 0, 0, fixture_options()).doc,
                                 "json");
    CHECK(a == b);
    CHECK(json::parse(a) == r.doc);
    const std::string md = render(r.doc, "markdown");
    CHECK(md.find("# ExceptionalTable") == 0);
    CHECK(md.find("| group |") != std::string::npos);
    CHECK_THROWS_AS(render(r.doc, "yaml"), std::invalid_argument);
}
