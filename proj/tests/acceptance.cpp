// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Runs the full grids, so expect roughly a minute of compute.

#include <chrono>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "samelson/collect.hpp"
#include "samelson/homotopy_tables.hpp"
#include "samelson/lie_catalog.hpp"
#include "samelson/matrix_oracle.hpp"
#include "samelson/report.hpp"
#include "samelson/samelson_bounds.hpp"

using namespace samelson;
using nlohmann::json;

namespace {

constexpr unsigned long long kSeed = 20260823ull;

int g_failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    }
};

void report_line(int criterion, bool ok, const std::string& detail) {
    std::printf("criterion %d: %s — %s\n", criterion, ok ? "PASS" : "FAIL",
                detail.c_str());
    if (!ok) ++g_failures;
}

report::Options base_options() {
    report::Options opt;
    opt.seed = kSeed;
    opt.fixtures_dir = SAMELSON_FIXTURE_DIR;
    return opt;
}

std::string secs(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1fs", s);
    return buf;
}

// 1: p-regular grid against the two-column condition scheme.
void criterion_1() {
    Timer t;
    auto r = report::cmd_table("p-regular", 101, 0, 0, base_options());
    const long rows = r.doc["summary"]["rows"].get<long>();
    const long mism = r.doc["summary"]["scheme_mismatches"].get<long>();
    bool g2 = false;
    for (const auto& row : r.doc["rows"])
        if (row["group"] == "G2" && row["p"] == 5 && row["order"] == "1" &&
            row["match"] == true)
            g2 = true;
    const double dt = t.seconds();
    report_line(1, rows > 500 && mism == 0 && g2 && dt < 5.0,
                std::to_string(rows) + " p-regular rows, " + std::to_string(mism) +
                    " scheme mismatches, G2@5 exception order 1, " + secs(dt));
}

// 2: SU(n) quasi-p-regular five-case table.
void criterion_2() {
    Timer t;
    auto r = report::cmd_table("su", 0, 7, 31, base_options());
    const long covered = r.doc["summary"]["covered_by_case"].get<long>();
    const long mism = r.doc["summary"]["case_mismatches"].get<long>();
    const double dt = t.seconds();
    report_line(2, covered > 100 && mism == 0 && dt < 5.0,
                std::to_string(covered) + " rows covered by the five cases, " +
                    std::to_string(mism) + " mismatches, " + secs(dt));
}

// 3: exceptional table, with the documented diff set pinned exactly.
void criterion_3() {
    Timer t;
    auto r = report::cmd_table("exceptional", 0, 0, 0, base_options());
    bool ok = r.doc["rows"].size() == 13;
    // every diff must be one of the four documented rows, with the
    // documented computed value and a complete trace
    const std::map<std::pair<std::string, long>, int> documented = {
        {{"E7", 11}, 4}, {{"E8", 13}, 6}, {{"E8", 17}, 4}, {{"E8", 19}, 2}};
    const auto& diffs = r.doc["fixture_diffs"];
    ok = ok && diffs.size() == documented.size();
    for (const auto& d : diffs) {
        auto it = documented.find({d["group"].get<std::string>(), d["p"].get<long>()});
        ok = ok && it != documented.end() && d["computed"]["hi"].get<int>() == it->second &&
             d["computed"]["lo"].get<int>() == 1 && !d["trace"].empty();
        for (const auto& tr : d["trace"])
            ok = ok && tr.contains("i") && tr.contains("j") && tr.contains("k") &&
                 !tr["cells"].empty();
    }
    // the other nine rows agree with the published table exactly
    const double dt = t.seconds();
    report_line(3, ok && dt < 5.0,
                "13 rows, 9 match the published table, " + std::to_string(diffs.size()) +
                    " diffs = the documented set with full (i,j,k,cell) traces, " +
                    secs(dt));
}

// 4: hi_exp <= 6 on every quasi-p-regular low-rank pair tested.
void criterion_4() {
    long tested = 0, violations = 0, out_of_range = 0;
    const auto groups = lie::catalog_groups(30, 15, 15, 15);
    for (const auto& g : groups)
        for (long p : {5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L}) {
            if (!lie::is_low_rank(g, p)) continue;
            if (lie::classify(g, p) != lie::Regularity::QuasiPRegular) continue;
            try {
                const int hi = bounds::iota_bound(g, p).hi_exp;
                ++tested;
                if (hi > 6) ++violations;
            } catch (const std::out_of_range&) {
                // smash cells past the table range at p = 5; not computable
                ++out_of_range;
            }
        }
    report_line(4, tested > 100 && violations == 0,
                std::to_string(tested) + " quasi-p-regular pairs tested, " +
                    std::to_string(violations) + " above p^6 (" +
                    std::to_string(out_of_range) + " skipped beyond the table range)");
}

// 5: commutator identities, symbolic and in UT(5, Z/9) / UT(5, Z/25).
void criterion_5() {
    auto sym = commcalc::verify_group_identities(5, 1000, kSeed);
    bool ok = sym.all_passed() && sym.entries.size() == 4;
    long sym_pass = 0;
    for (const auto& e : sym.entries) sym_pass += e.pass;
    long mat_pass = 0;
    for (long long m : {9LL, 25LL}) {
        auto rep = oracle::verify_identities(5, m, 1000, kSeed);
        ok = ok && rep.all_passed();
        for (const auto& e : rep.entries) mat_pass += e.pass;
    }
    report_line(5, ok && sym_pass == 4000 && mat_pass == 8000,
                std::to_string(sym_pass) + "/4000 symbolic checks at class 5, " +
                    std::to_string(mat_pass) + "/8000 matrix checks in UT(5)");
}

// 6: expansion lemmas for 1 <= n <= 30, symbolic and in UT(4, Z/m).
void criterion_6() {
    Timer t;
    using namespace commcalc;
    long sym_pass = 0, sym_total = 0;
    for (int cls : {3, 4}) {
        NilContext ctx(cls);
        const Generator a = ctx.add_generator("alpha");
        const Generator b = ctx.add_flat_generator("beta");
        const GroupWord wa = GroupWord::from_gen(a), wb = GroupWord::from_gen(b);
        const GroupWord ab = mul(wa, wb);
        for (long n = 1; n <= 30; ++n) {
            ++sym_total;
            if (equal_in(pow(ab, n), expand_power(a, b, n, ctx), ctx)) ++sym_pass;
            if (n >= 2) {
                ++sym_total;
                GroupWord lhs;
                for (long i = 1; i < n; ++i) lhs = mul(lhs, comm(wb, pow(wa, i)));
                if (equal_in(lhs, expand_bracket_product(a, b, n, ctx), ctx)) ++sym_pass;
            }
        }
    }
    long mat_pass = 0, mat_total = 0;
    for (long long m : {25LL, 27LL, 49LL})
        for (auto lemma : {oracle::ExpansionLemma::PowerExpansion,
                           oracle::ExpansionLemma::BracketProduct})
            for (long n = 1; n <= 30; ++n) {
                auto rep = oracle::check_expansion(lemma, 4, m, n, 17, kSeed + n);
                for (const auto& e : rep.entries) {
                    mat_pass += e.pass;
                    mat_total += e.pass + e.fail;
                }
            }
    const double dt = t.seconds();
    report_line(6,
                sym_pass == sym_total && mat_pass == mat_total && mat_total >= 3000 &&
                    dt < 60.0,
                std::to_string(sym_pass) + "/" + std::to_string(sym_total) +
                    " symbolic at classes 3-4, " + std::to_string(mat_pass) + "/" +
                    std::to_string(mat_total) + " matrix trials (>=500 per modulus), " +
                    secs(dt));
}

// 7: combinatorics, exhaustive.
void criterion_7() {
    long hockey_fail = 0;
    for (long n = 1; n <= 200; ++n)
        for (long j = 0; j < n; ++j) {
            auto [lhs, rhs] = commcalc::hockey_stick(n, j);
            if (lhs != rhs) ++hockey_fail;
        }
    // The exact valuation of C(p^r, j+1) is r - v_p(j+1); the corrected
    // inequality is exhaustive and the uncorrected one fails exactly when
    // p divides j+1 (a documented misstatement in the source material).
    long corrected_fail = 0, pinned_fail = 0;
    for (long p : {3L, 5L, 7L})
        for (int r = 1; r <= 2; ++r) {
            long pr = 1;
            for (int i = 0; i < r; ++i) pr *= p;
            for (long j = 1; j <= pr - 2; ++j) {
                int vk = 0;
                for (long k = j + 1; k % p == 0; k /= p) ++vk;
                const int v = commcalc::binom_p_valuation(pr, j + 1, p);
                if (v < r - vk) ++corrected_fail;
                if ((v >= r) != (vk == 0)) ++pinned_fail;
            }
        }
    report_line(7, hockey_fail == 0 && corrected_fail == 0 && pinned_fail == 0,
                "hockey stick exhaustive to n=200 (" + std::to_string(hockey_fail) +
                    " fail); v_p(C(p^r,j+1)) >= r - v_p(j+1) exhaustive (" +
                    std::to_string(corrected_fail) +
                    " fail), literal >= r fails exactly when p | j+1 (" +
                    std::to_string(pinned_fail) + " deviations)");
}

// 8: iterated bracket vanishing for the composite element.
void criterion_8() {
    using namespace commcalc;
    bool ok = true;
    long mat_pass = 0, mat_total = 0;
    for (int n : {2, 3, 4}) {
        {
            NilContext ctx(n);
            GroupWord beta = make_composite_beta(ctx);
            std::vector<Generator> fs;
            for (int i = 1; i < n; ++i)
                fs.push_back(ctx.add_generator("f" + std::to_string(i)));
            ok = ok && nilpotency_vanishing(beta, fs, ctx).is_identity();
        }
        {
            NilContext ctx(n + 2);
            GroupWord w = make_composite_beta(ctx);
            for (int i = 1; i < n; ++i)
                w = comm(w, GroupWord::from_gen(
                                ctx.add_generator("f" + std::to_string(i))));
            ok = ok && !collect(w, ctx).is_identity();  // non-vacuousness witness
        }
        for (long long m : {5LL, 7LL}) {
            auto rep = oracle::check_expansion(oracle::ExpansionLemma::NilVanishing,
                                               n + 1, m, n, 200, kSeed);
            for (const auto& e : rep.entries) {
                mat_pass += e.pass;
                mat_total += e.pass + e.fail;
            }
        }
    }
    report_line(8, ok && mat_pass == mat_total && mat_total >= 1200,
                std::string("vanishing at classes 2-4 with class+2 witnesses; ") +
                    std::to_string(mat_pass) + "/" + std::to_string(mat_total) +
                    " matrix checks in UT(n+1)");
}

// 9: Toda-table parity over every reachable catalog target.
void criterion_9() {
    std::set<std::pair<long, std::pair<int, int>>> targets;  // (p, (low, high))
    for (const auto& g : lie::catalog_groups(30, 15, 15, 15))
        for (long p : {3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L}) {
            if (lie::classify(g, p) == lie::Regularity::Neither) continue;
            for (const auto& f : lie::decompose(g, p).factors)
                targets.insert({p, {f.low, f.high}});
        }
    long queried = 0, parity_fail = 0, bundle_free_fail = 0, bundles = 0;
    for (const auto& [p, lh] : targets) {
        const auto t = lh.second == 0 ? toda::TargetSpace::sphere(lh.first)
                                      : toda::TargetSpace::bundle(lh.first, lh.second);
        const int top = t.low + (int)toda::toda_range_max(p);
        for (int deg = t.low + 1; deg <= top; deg += 2) {  // even total degrees
            ++queried;
            if (toda::homotopy_group(t, deg, p).free_rank != 0) ++parity_fail;
        }
        if (t.kind == toda::TargetSpace::Kind::Bundle) {
            ++bundles;
            const auto g = toda::homotopy_group(t, t.low + 2 * (int)p - 2, p);
            if (!(g.free_rank == 1 && g.cyclic.empty())) ++bundle_free_fail;
        }
    }
    report_line(9,
                queried > 10000 && parity_fail == 0 && bundles > 50 &&
                    bundle_free_fail == 0,
                std::to_string(queried) + " even-degree lookups over " +
                    std::to_string(targets.size()) + " catalog targets, " +
                    std::to_string(parity_fail) + " free summands; k=2p-2 is Z on all " +
                    std::to_string(bundles) + " bundles");
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    if (g_failures == 0)
        std::printf("acceptance: all 9 criteria passed\n");
    else
        std::printf("acceptance: %d criteria FAILED\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
