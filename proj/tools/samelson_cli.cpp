// Command-line front end; talks to the engine through the C API only.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <CLI11.hpp>

#include "samelson/capi.h"

#ifndef SAMELSON_DEFAULT_FIXTURE_DIR
#define SAMELSON_DEFAULT_FIXTURE_DIR ""
#endif

namespace {

struct CtxGuard {
    sam_ctx* ctx = sam_ctx_new();
    ~CtxGuard() { sam_ctx_free(ctx); }
};

int fail_usage(sam_ctx* ctx) {
    std::fprintf(stderr, "error: %s\n", sam_last_error(ctx));
    return 2;
}

// Simple key=value config: keys seed, fixtures, format, strict,
// dedicated_b3, trials. Blank lines and #-comments are skipped.
bool apply_config(sam_ctx* ctx, const std::string& path, std::string& err) {
    std::ifstream in(path);
    if (!in) {
        err = "cannot open config file: " + path;
        return false;
    }
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            err = "bad config line (expected key=value): " + line;
            return false;
        }
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t");
            const auto e = s.find_last_not_of(" \t");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (sam_set_option(ctx, key.c_str(), value.c_str()) != 0) {
            err = sam_last_error(ctx);
            return false;
        }
    }
    return true;
}

int emit(sam_ctx* ctx, int code, char* out) {
    if (out) {
        std::fputs(out, stdout);
        sam_string_free(out);
    }
    if (code != 0) std::fprintf(stderr, "error: %s\n", sam_last_error(ctx));
    return code;
}

bool parse_prime_range(const std::string& s, long& lo, long& hi) {
    const auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            lo = hi = std::stol(s);
        } else {
            lo = std::stol(s.substr(0, dots));
            hi = std::stol(s.substr(dots + 2));
        }
    } catch (const std::exception&) {
        return false;
    }
    return lo > 0 && hi >= lo;
}

}  // namespace

int main(int argc, char** argv) {
    CtxGuard guard;
    sam_ctx* ctx = guard.ctx;

    CLI::App app{"Samelson product order calculator"};
    app.require_subcommand(1);
    app.fallthrough();  // accept global flags after the subcommand name

    std::string config_path, fixtures = SAMELSON_DEFAULT_FIXTURE_DIR, format = "json";
    std::string seed_str;
    bool strict = false, dedicated_b3 = false;
    int trials = 0;
    app.add_option("--config", config_path, "key=value config file");
    app.add_option("--seed", seed_str, "RNG seed (default: $SAMELSON_SEED or 0)");
    app.add_option("--fixtures", fixtures, "fixture directory");
    app.add_option("--format", format, "output format: json or markdown");
    app.add_flag("--strict", strict, "promote fixture diffs to failures");
    app.add_flag("--dedicated-b3", dedicated_b3,
                 "use the dedicated B(3,2p+1) homotopy table");
    app.add_option("--trials", trials, "override per-suite trial counts");

    std::string family, space, which = "exceptional", suite, prime_range;
    int n = 0, degree = 0;
    long p = 0, max_p = 0, n_max = 0, single_n = 0;
    bool with_trace = false, diff_b3 = false;

    auto* dec = app.add_subcommand("decompose", "product decomposition at p");
    dec->add_option("--group", family, "family name")->required();
    dec->add_option("--n", n, "family parameter");
    dec->add_option("--p", p, "odd prime")->required();

    auto* ord = app.add_subcommand("order", "universal Samelson product order bound");
    ord->add_option("--group", family, "family name")->required();
    ord->add_option("--n", n, "family parameter");
    ord->add_option("--p", p, "odd prime")->required();
    ord->add_flag("--trace", with_trace, "attach the provenance trace");

    auto* pi = app.add_subcommand("pi", "homotopy group lookup");
    pi->add_option("--space", space, "S:<dim> or B:<low>:<high>")->required();
    pi->add_option("--degree", degree, "total degree")->required();
    pi->add_option("--p", p, "odd prime")->required();

    auto* tab = app.add_subcommand("table", "regenerate a full table");
    tab->add_option("--which", which, "p-regular, su, or exceptional");
    tab->add_option("--max-p", max_p, "prime bound for the p-regular grid");
    tab->add_option("--p", prime_range, "prime range lo..hi for the su grid");
    tab->add_flag("--diff-b3", diff_b3,
                  "compare all tables under both B(3,2p+1) conventions");

    auto* ver = app.add_subcommand("verify", "run verification suites");
    ver->add_option("--suite", suite,
                    "identities, oracle, expansion, hockey, binom, or nilvanish");
    ver->add_option("--n-max", n_max, "hockey-stick sweep bound");
    ver->add_option("--n", single_n, "pin the expansion suite to one exponent");

    CLI11_PARSE(app, argc, argv);

    if (seed_str.empty())
        if (const char* env = std::getenv("SAMELSON_SEED")) seed_str = env;
    if (!config_path.empty()) {
        std::string err;
        if (!apply_config(ctx, config_path, err)) {
            std::fprintf(stderr, "error: %s\n", err.c_str());
            return 2;
        }
    }
    // Explicit flags take precedence over the config file.
    if (!seed_str.empty() && sam_set_option(ctx, "seed", seed_str.c_str()) != 0)
        return fail_usage(ctx);
    if (!fixtures.empty() && sam_set_option(ctx, "fixtures", fixtures.c_str()) != 0)
        return fail_usage(ctx);
    if (sam_set_option(ctx, "format", format.c_str()) != 0) return fail_usage(ctx);
    if (strict && sam_set_option(ctx, "strict", "1") != 0) return fail_usage(ctx);
    if (dedicated_b3 && sam_set_option(ctx, "dedicated_b3", "1") != 0)
        return fail_usage(ctx);
    if (trials > 0 &&
        sam_set_option(ctx, "trials", std::to_string(trials).c_str()) != 0)
        return fail_usage(ctx);

    char* out = nullptr;
    if (dec->parsed()) {
        const int code = sam_decompose(ctx, family.c_str(), n, p, &out);
        return emit(ctx, code, out);
    }
    if (ord->parsed()) {
        const int code = sam_order(ctx, family.c_str(), n, p, with_trace ? 1 : 0, &out);
        return emit(ctx, code, out);
    }
    if (pi->parsed()) {
        const int code = sam_pi(ctx, space.c_str(), degree, p, &out);
        return emit(ctx, code, out);
    }
    if (tab->parsed()) {
        long p_lo = 0, p_hi = 0;
        if (!prime_range.empty() && !parse_prime_range(prime_range, p_lo, p_hi)) {
            std::fprintf(stderr, "error: bad prime range: %s\n", prime_range.c_str());
            return 2;
        }
        const char* name = diff_b3 ? "diff-b3" : which.c_str();
        const int code = sam_table(ctx, name, max_p, p_lo, p_hi, &out);
        return emit(ctx, code, out);
    }
    if (ver->parsed()) {
        const int code = sam_verify(ctx, suite.empty() ? nullptr : suite.c_str(), n_max,
                                    single_n, &out);
        return emit(ctx, code, out);
    }
    return 2;
}
