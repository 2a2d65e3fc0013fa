#pragma once

#include <string>

#include <json.hpp>

namespace samelson::report {

struct Options {
    unsigned long long seed = 0;
    std::string fixtures_dir;  // directory holding the table fixture files
    std::string format = "json";  // "json" or "markdown"
    bool strict = false;          // promote fixture diffs to failures
    bool dedicated_b3 = false;    // dedicated B(3,2p+1) homotopy table
    int trials = 0;               // 0 = per-suite default
};

struct Result {
    nlohmann::json doc;
    int exit_code = 0;  // 0 success, 1 failure/diff under strict, 2 usage
};

// Product decomposition of a group at an odd prime.
Result cmd_decompose(const std::string& family, int n, long p, const Options& opt);

// Universal Samelson product order bound; with_trace attaches the
// per-pair provenance entries.
Result cmd_order(const std::string& family, int n, long p, bool with_trace,
                 const Options& opt);

// Single homotopy-group lookup. Space syntax: "S:7" or "B:3:11".
Result cmd_pi(const std::string& space, int degree, long p, const Options& opt);

// Full table regeneration. which is "p-regular" (grid up to max_p),
// "su" (primes in [p_lo, p_hi]), or "exceptional". Each table carries a
// fixture-diff section.
Result cmd_table(const std::string& which, long max_p, long p_lo, long p_hi,
                 const Options& opt);

// Recompute every table under both homotopy-table conventions for
// B(3,2p+1) and report rows whose final interval changes.
Result cmd_diff_b3(long max_p, long p_lo, long p_hi, const Options& opt);

// Verification suites: "identities", "oracle", "expansion", "hockey",
// "binom", "nilvanish", or "" for all. n_max bounds the exhaustive
// hockey-stick sweep; n pins the expansion suite to a single exponent
// (0 = full sweep).
Result cmd_verify(const std::string& suite, long n_max, long n, const Options& opt);

// Render a report document as JSON text or markdown.
std::string render(const nlohmann::json& doc, const std::string& format);

}  // namespace samelson::report
