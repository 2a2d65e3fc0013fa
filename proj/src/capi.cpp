#include "samelson/capi.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "samelson/report.hpp"

namespace {

using samelson::report::Options;
using samelson::report::Result;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

}  // namespace

struct sam_ctx {
    Options opt;
    std::string last_error;
};

namespace {

// Runs a command, renders its document, and maps exceptions to codes.
template <typename F>
int run_command(sam_ctx* ctx, char** out, F&& f) {
    if (!ctx) return 2;
    if (out) *out = nullptr;
    try {
        Result r = f(ctx->opt);
        if (out) *out = dup_string(samelson::report::render(r.doc, ctx->opt.format));
        if (r.exit_code != 0 && r.doc.contains("error"))
            ctx->last_error = r.doc["error"].get<std::string>();
        else if (r.exit_code != 0)
            ctx->last_error = "command reported failure";
        else
            ctx->last_error.clear();
        return r.exit_code;
    } catch (const std::invalid_argument& e) {
        ctx->last_error = e.what();
        return 2;
    } catch (const std::exception& e) {
        ctx->last_error = e.what();
        return 3;
    }
}

}  // namespace

extern "C" {

sam_ctx* sam_ctx_new(void) {
    auto* ctx = new (std::nothrow) sam_ctx;
    return ctx;
}

void sam_ctx_free(sam_ctx* ctx) { delete ctx; }

const char* sam_last_error(const sam_ctx* ctx) {
    return ctx ? ctx->last_error.c_str() : "null context";
}

int sam_set_option(sam_ctx* ctx, const char* key, const char* value) {
    if (!ctx) return 2;
    if (!key || !value) {
        ctx->last_error = "null option key or value";
        return 2;
    }
    const std::string k = key, v = value;
    try {
        if (k == "seed")
            ctx->opt.seed = std::stoull(v);
        else if (k == "fixtures")
            ctx->opt.fixtures_dir = v;
        else if (k == "format") {
            if (v != "json" && v != "markdown") throw std::invalid_argument(v);
            ctx->opt.format = v;
        } else if (k == "strict")
            ctx->opt.strict = (v == "1" || v == "true");
        else if (k == "dedicated_b3")
            ctx->opt.dedicated_b3 = (v == "1" || v == "true");
        else if (k == "trials")
            ctx->opt.trials = std::stoi(v);
        else {
            ctx->last_error = "unknown option: " + k;
            return 2;
        }
    } catch (const std::exception&) {
        ctx->last_error = "bad value for option " + k + ": " + v;
        return 2;
    }
    ctx->last_error.clear();
    return 0;
}

int sam_decompose(sam_ctx* ctx, const char* family, int n, long p, char** out) {
    return run_command(ctx, out, [&](const Options& opt) {
        if (!family) throw std::invalid_argument("null family");
        return samelson::report::cmd_decompose(family, n, p, opt);
    });
}

int sam_order(sam_ctx* ctx, const char* family, int n, long p, int with_trace, char** out) {
    return run_command(ctx, out, [&](const Options& opt) {
        if (!family) throw std::invalid_argument("null family");
        return samelson::report::cmd_order(family, n, p, with_trace != 0, opt);
    });
}

int sam_pi(sam_ctx* ctx, const char* space, int degree, long p, char** out) {
    return run_command(ctx, out, [&](const Options& opt) {
        if (!space) throw std::invalid_argument("null space");
        return samelson::report::cmd_pi(space, degree, p, opt);
    });
}

int sam_table(sam_ctx* ctx, const char* which, long max_p, long p_lo, long p_hi,
              char** out) {
    return run_command(ctx, out, [&](const Options& opt) {
        if (!which) throw std::invalid_argument("null table name");
        const long mp = max_p > 0 ? max_p : 101;
        const long lo = p_lo > 0 ? p_lo : 7;
        const long hi = p_hi > 0 ? p_hi : 31;
        if (std::string(which) == "diff-b3")
            return samelson::report::cmd_diff_b3(mp, lo, hi, opt);
        return samelson::report::cmd_table(which, mp, lo, hi, opt);
    });
}

int sam_verify(sam_ctx* ctx, const char* suite, long n_max, long n, char** out) {
    return run_command(ctx, out, [&](const Options& opt) {
        return samelson::report::cmd_verify(suite ? suite : "", n_max, n, opt);
    });
}

void sam_string_free(char* s) { std::free(s); }

}  // extern "C"
