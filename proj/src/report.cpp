#include "samelson/report.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "samelson/bigint.hpp"
#include "samelson/collect.hpp"
#include "samelson/homotopy_tables.hpp"
#include "samelson/lie_catalog.hpp"
#include "samelson/matrix_oracle.hpp"
#include "samelson/samelson_bounds.hpp"

namespace samelson::report {

using nlohmann::json;

namespace {

constexpr const char* kToolVersion = "1.0.0";

json metadata(const Options& opt) {
    return json{{"tool_version", kToolVersion},
                {"seed", opt.seed},
                {"dedicated_b3", opt.dedicated_b3},
                {"strict", opt.strict}};
}

std::vector<long> odd_primes_between(long lo, long hi) {
    std::vector<long> ps;
    for (long p = std::max(lo, 3L); p <= hi; ++p)
        if (p % 2 == 1 && is_small_prime(p)) ps.push_back(p);
    return ps;
}

lie::LieGroupSpec parse_group(const std::string& family, int n) {
    auto f = lie::family_from_name(family);
    if (!f) throw std::invalid_argument("unknown family: " + family);
    if (lie::family_has_parameter(*f) && n <= 0)
        throw std::invalid_argument("family " + family + " requires a parameter n");
    return lie::make_group(*f, n);
}

json load_fixture(const std::string& dir, const std::string& name,
                  std::vector<std::string>& warnings) {
    if (dir.empty()) {
        warnings.push_back("no fixtures directory configured; fixture diff skipped");
        return json();
    }
    std::ifstream in(dir + "/" + name);
    if (!in) {
        warnings.push_back("fixture file not found: " + name + "; fixture diff skipped");
        return json();
    }
    json j;
    in >> j;
    return j;
}

json trace_to_json(const bounds::TraceEntry& t) {
    json cells = json::array();
    for (const auto& c : t.cells)
        cells.push_back(json{{"cell_dim", c.cell_dim}, {"target", c.target}, {"group", c.group}});
    return json{{"i", t.i},       {"j", t.j},           {"k", t.k},
                {"a_i", t.a_i},   {"a_j", t.a_j},       {"target", t.target},
                {"exponent", t.exponent}, {"rule", t.rule}, {"cells", cells}};
}

json order_to_json(const bounds::OrderBound& b, bool with_trace) {
    json out{{"lo", b.lo_exp},
             {"hi", b.hi_exp},
             {"gated", b.gated},
             {"gate_note", b.gate_note},
             {"warnings", b.warnings}};
    if (with_trace) {
        json tr = json::array();
        for (const auto& t : b.trace) tr.push_back(trace_to_json(t));
        out["trace"] = tr;
    }
    return out;
}

std::string interval_string(int lo, int hi, long p) {
    if (lo == 0 && hi == 0) return "1";
    if (lo == hi) return "p^" + std::to_string(lo);
    return "p^" + std::to_string(lo) + "..p^" + std::to_string(hi);
}

// ---------------------------------------------------------------------
// Table row generation (shared between cmd_table and cmd_diff_b3).

struct PRegRow {
    std::string group;
    long p = 0;
    int nl = 0;
    int lo = 0, hi = 0;
    bool gated = false;
    int exp_lo = 0, exp_hi = 0;
    bool match = false;
    bool exception = false;
    std::string note;
};

std::vector<PRegRow> pregular_rows(long max_p, bool dedicated_b3, const json& fixture) {
    std::vector<PRegRow> rows;
    const auto groups = lie::catalog_groups(30, 15, 15, 15);
    const auto primes = odd_primes_between(3, max_p);
    for (const auto& g : groups)
        for (long p : primes) {
            if (!lie::is_low_rank(g, p)) continue;
            if (lie::classify(g, p) != lie::Regularity::PRegular) continue;
            PRegRow r;
            r.group = g.name();
            r.p = p;
            r.nl = lie::max_type_n(g);
            const bool hc = lie::is_homotopy_commutative(g, p);
            r.exp_lo = hc ? 0 : 1;
            r.exp_hi = r.exp_lo;
            auto b = bounds::universal_order(g, p, dedicated_b3);
            r.lo = b.lo_exp;
            r.hi = b.hi_exp;
            r.gated = b.gated;
            r.match = r.gated && r.lo == r.exp_lo && r.hi == r.exp_hi;
            rows.push_back(std::move(r));
        }
    // Sub-p-regular exceptional rows of order 1 (homotopy-commutative cases).
    json exceptions = json::array();
    if (fixture.is_object() && fixture.contains("exceptions"))
        exceptions = fixture["exceptions"];
    else
        exceptions = json::parse(
            R"([{"family":"Sp","n":2,"p":3},{"family":"G2","n":0,"p":5}])");
    for (const auto& e : exceptions) {
        const long p = e["p"].get<long>();
        if (p > max_p) continue;
        auto g = parse_group(e["family"].get<std::string>(), e["n"].get<int>());
        PRegRow r;
        r.group = g.name();
        r.p = p;
        r.nl = lie::max_type_n(g);
        r.exception = true;
        r.exp_lo = 0;
        r.exp_hi = 0;
        if (lie::is_low_rank(g, p)) {
            auto b = bounds::universal_order(g, p, dedicated_b3);
            r.lo = b.lo_exp;
            r.hi = b.hi_exp;
            r.gated = b.gated;
        } else {
            // Below the retractile range; the order-1 statement rests on
            // homotopy commutativity alone.
            const bool hc = lie::is_homotopy_commutative(g, p);
            r.lo = hc ? 0 : 1;
            r.hi = r.lo;
            r.gated = hc;
            r.note = "outside the retractile range; order from homotopy commutativity";
        }
        r.match = r.gated && r.lo == 0 && r.hi == 0;
        rows.push_back(std::move(r));
    }
    return rows;
}

struct SURow {
    int n = 0;
    long p = 0;
    int lo = 0, hi = 0;
    bool gated = false;
    int case_id = 0;  // 0 = no published case covers (n, p)
    int exp_lo = 0, exp_hi = 0;
    bool match = true;
};

int su_case_id(int n, long p) {
    if (p > 2L * n) return 1;
    if (n <= p && p < 2L * n) return 2;
    if (n == 2 * p - 1) return 5;
    if (3 * p >= 2L * n + 3 && p < n) return 3;
    if (n < 2 * p && 3 * p <= 2L * n) return 4;
    return 0;
}

std::pair<int, int> su_case_interval(int case_id, const json& fixture) {
    static const int def_lo[] = {0, 0, 1, 1, 1, 1};
    static const int def_hi[] = {0, 0, 1, 2, 3, 6};
    if (fixture.is_object() && fixture.contains("cases"))
        for (const auto& c : fixture["cases"])
            if (c["id"].get<int>() == case_id)
                return {c["lo"].get<int>(), c["hi"].get<int>()};
    return {def_lo[case_id], def_hi[case_id]};
}

std::vector<SURow> su_rows(long p_lo, long p_hi, bool dedicated_b3, const json& fixture) {
    std::vector<SURow> rows;
    for (long p : odd_primes_between(std::max(p_lo, 7L), p_hi))
        for (int n = (int)p + 1; n <= 2 * p; ++n) {
            auto g = lie::make_group(lie::Family::SU, n);
            if (lie::classify(g, p) == lie::Regularity::Neither) continue;
            SURow r;
            r.n = n;
            r.p = p;
            auto b = bounds::universal_order(g, p, dedicated_b3);
            r.lo = b.lo_exp;
            r.hi = b.hi_exp;
            r.gated = b.gated;
            r.case_id = su_case_id(n, p);
            if (r.case_id != 0) {
                auto [el, eh] = su_case_interval(r.case_id, fixture);
                r.exp_lo = el;
                r.exp_hi = eh;
                r.match = r.lo == el && r.hi == eh;
            }
            rows.push_back(std::move(r));
        }
    return rows;
}

struct ExcRow {
    std::string group;
    long p = 0;
    bounds::OrderBound bound;
};

const std::vector<std::pair<lie::Family, long>>& exceptional_grid() {
    static const std::vector<std::pair<lie::Family, long>> grid = {
        {lie::Family::F4, 7},  {lie::Family::F4, 11}, {lie::Family::E6, 7},
        {lie::Family::E6, 11}, {lie::Family::E7, 11}, {lie::Family::E7, 13},
        {lie::Family::E7, 17}, {lie::Family::E8, 11}, {lie::Family::E8, 13},
        {lie::Family::E8, 17}, {lie::Family::E8, 19}, {lie::Family::E8, 23},
        {lie::Family::E8, 29}};
    return grid;
}

std::vector<ExcRow> exceptional_rows(bool dedicated_b3) {
    std::vector<ExcRow> rows;
    for (auto [f, p] : exceptional_grid()) {
        ExcRow r;
        r.group = lie::family_name(f);
        r.p = p;
        r.bound = bounds::universal_order(lie::make_group(f), p, dedicated_b3);
        rows.push_back(std::move(r));
    }
    return rows;
}

Result make_table_doc(const std::string& which, long max_p, long p_lo, long p_hi,
                      const Options& opt) {
    std::vector<std::string> warnings;
    json doc;
    doc["metadata"] = metadata(opt);
    int mismatches = 0;

    if (which == "p-regular") {
        doc["kind"] = "PRegularTable";
        json fixture = load_fixture(opt.fixtures_dir, "pregular_table.json", warnings);
        json rows = json::array();
        for (const auto& r : pregular_rows(max_p, opt.dedicated_b3, fixture)) {
            if (!r.match) ++mismatches;
            json row{{"group", r.group},     {"p", r.p},
                     {"n_l", r.nl},          {"lo", r.lo},
                     {"hi", r.hi},           {"gated", r.gated},
                     {"order", interval_string(r.lo, r.hi, r.p)},
                     {"expected_lo", r.exp_lo}, {"expected_hi", r.exp_hi},
                     {"match", r.match},     {"exception", r.exception}};
            if (!r.note.empty()) row["note"] = r.note;
            rows.push_back(std::move(row));
        }
        doc["rows"] = std::move(rows);
        doc["summary"] = json{{"rows", doc["rows"].size()}, {"scheme_mismatches", mismatches}};
    } else if (which == "su") {
        doc["kind"] = "SUTable";
        json fixture = load_fixture(opt.fixtures_dir, "su_table.json", warnings);
        json rows = json::array();
        int covered = 0;
        for (const auto& r : su_rows(p_lo, p_hi, opt.dedicated_b3, fixture)) {
            if (r.case_id != 0) {
                ++covered;
                if (!r.match) ++mismatches;
            }
            json row{{"n", r.n},   {"p", r.p},       {"lo", r.lo},
                     {"hi", r.hi}, {"gated", r.gated}, {"case", r.case_id},
                     {"match", r.case_id == 0 ? json() : json(r.match)}};
            if (r.case_id != 0) {
                row["expected_lo"] = r.exp_lo;
                row["expected_hi"] = r.exp_hi;
            }
            rows.push_back(std::move(row));
        }
        doc["rows"] = std::move(rows);
        doc["summary"] = json{{"rows", doc["rows"].size()},
                              {"covered_by_case", covered},
                              {"case_mismatches", mismatches}};
    } else if (which == "exceptional") {
        doc["kind"] = "ExceptionalTable";
        json fixture = load_fixture(opt.fixtures_dir, "exceptional_table.json", warnings);
        json rows = json::array();
        json diffs = json::array();
        for (const auto& r : exceptional_rows(opt.dedicated_b3)) {
            rows.push_back(json{{"group", r.group},
                                {"p", r.p},
                                {"lo", r.bound.lo_exp},
                                {"hi", r.bound.hi_exp},
                                {"gated", r.bound.gated},
                                {"order", interval_string(r.bound.lo_exp, r.bound.hi_exp, r.p)}});
            if (!fixture.is_object()) continue;
            for (const auto& f : fixture["rows"])
                if (f["group"].get<std::string>() == r.group && f["p"].get<long>() == r.p) {
                    const int flo = f["lo"].get<int>(), fhi = f["hi"].get<int>();
                    if (flo != r.bound.lo_exp || fhi != r.bound.hi_exp) {
                        json tr = json::array();
                        for (const auto& t : r.bound.trace) tr.push_back(trace_to_json(t));
                        diffs.push_back(json{{"group", r.group},
                                             {"p", r.p},
                                             {"computed", {{"lo", r.bound.lo_exp},
                                                           {"hi", r.bound.hi_exp}}},
                                             {"published", {{"lo", flo}, {"hi", fhi}}},
                                             {"trace", tr}});
                        ++mismatches;
                        warnings.push_back("fixture diff: " + r.group + " at p=" +
                                           std::to_string(r.p) + " computed hi=" +
                                           std::to_string(r.bound.hi_exp) +
                                           " vs published hi=" + std::to_string(fhi));
                    }
                }
        }
        doc["rows"] = std::move(rows);
        doc["fixture_diffs"] = std::move(diffs);
        doc["summary"] = json{{"rows", doc["rows"].size()}, {"fixture_diffs", mismatches}};
    } else {
        throw std::invalid_argument("unknown table: " + which);
    }

    doc["warnings"] = warnings;
    return {doc, (opt.strict && mismatches > 0) ? 1 : 0};
}

}  // namespace

Result cmd_decompose(const std::string& family, int n, long p, const Options& opt) {
    auto g = parse_group(family, n);
    json doc;
    doc["kind"] = "Decomposition";
    doc["metadata"] = metadata(opt);
    doc["group"] = g.name();
    doc["family"] = lie::family_name(g.family);
    doc["p"] = p;
    const auto reg = lie::classify(g, p);
    doc["classification"] = lie::regularity_name(reg);
    std::vector<std::string> warnings;
    if (reg == lie::Regularity::Neither) {
        doc["error"] = "not quasi-p-regular";
        doc["warnings"] = warnings;
        return {doc, 1};
    }
    const auto dec = lie::decompose(g, p);
    std::vector<std::string> factors, a_cells;
    for (const auto& f : dec.factors) factors.push_back(f.to_string());
    for (const auto& c : dec.a_cells) a_cells.push_back(c.to_string(p));
    doc["factors"] = factors;
    doc["a_cells"] = a_cells;

    bool diff = false;
    json fixture = load_fixture(opt.fixtures_dir, "list3_decompositions.json", warnings);
    if (fixture.is_object())
        for (const auto& row : fixture["rows"])
            if (row["group"].get<std::string>() == lie::family_name(g.family) &&
                (!lie::family_has_parameter(g.family) ||
                 (row.contains("n") && row["n"].get<int>() == g.n)) &&
                row["p"].get<long>() == p) {
                auto fx = row["factors"].get<std::vector<std::string>>();
                if (fx != factors) {
                    diff = true;
                    std::string note = "fixture mismatch: published row lists";
                    for (const auto& s : fx) note += " " + s;
                    note += "; computed";
                    for (const auto& s : factors) note += " " + s;
                    if (row.contains("label_mismatch"))
                        note += " (published row label is inconsistent with its bundle gaps; "
                                "cf. computed_p in the fixture)";
                    warnings.push_back(note);
                }
            }
    doc["warnings"] = warnings;
    return {doc, (diff && opt.strict) ? 1 : 0};
}

Result cmd_order(const std::string& family, int n, long p, bool with_trace,
                 const Options& opt) {
    auto g = parse_group(family, n);
    json doc;
    doc["kind"] = "Order";
    doc["metadata"] = metadata(opt);
    doc["group"] = g.name();
    doc["p"] = p;
    doc["classification"] = lie::regularity_name(lie::classify(g, p));
    try {
        auto b = bounds::universal_order(g, p, opt.dedicated_b3);
        json bj = order_to_json(b, with_trace);
        for (auto& [k, v] : bj.items()) doc[k] = v;
        doc["order"] = interval_string(b.lo_exp, b.hi_exp, p);
        return {doc, 0};
    } catch (const std::domain_error& e) {
        doc["error"] = e.what();
        return {doc, 1};
    } catch (const std::out_of_range& e) {
        doc["error"] = e.what();
        return {doc, 1};
    }
}

namespace {

toda::TargetSpace parse_space(const std::string& s) {
    std::string t = s;
    std::replace(t.begin(), t.end(), ',', ':');
    std::stringstream ss(t);
    std::string kind;
    if (!std::getline(ss, kind, ':')) throw std::invalid_argument("bad space: " + s);
    if (kind == "S") {
        int dim;
        char c;
        if (!(ss >> dim) || (ss >> c)) throw std::invalid_argument("bad space: " + s);
        return toda::TargetSpace::sphere(dim);
    }
    if (kind == "B") {
        std::string a, b;
        if (!std::getline(ss, a, ':') || !std::getline(ss, b, ':'))
            throw std::invalid_argument("bad space: " + s);
        return toda::TargetSpace::bundle(std::stoi(a), std::stoi(b));
    }
    throw std::invalid_argument("bad space: " + s);
}

std::string case_label(const toda::TargetSpace& t, int degree, long p,
                       const toda::FinAbGroup& g) {
    const int k = degree - t.low;
    if (g.is_trivial()) return "trivial";
    if (k == 0) return "bottom-cell";
    if (g.free_rank > 0) return "free";
    const long s = 2 * (p - 1);
    if (((k + 1) % s) == 0) return "first-family";
    return "second-family";
}

}  // namespace

Result cmd_pi(const std::string& space, int degree, long p, const Options& opt) {
    const auto t = parse_space(space);
    json doc;
    doc["kind"] = "HomotopyGroup";
    doc["metadata"] = metadata(opt);
    doc["space"] = t.to_string();
    doc["degree"] = degree;
    doc["p"] = p;
    try {
        const auto g = toda::homotopy_group(t, degree, p, opt.dedicated_b3);
        doc["group"] = g.to_string();
        doc["free_rank"] = g.free_rank;
        doc["case"] = case_label(t, degree, p, g);
        return {doc, 0};
    } catch (const std::out_of_range& e) {
        doc["error"] = e.what();
        return {doc, 1};
    }
}

Result cmd_table(const std::string& which, long max_p, long p_lo, long p_hi,
                 const Options& opt) {
    return make_table_doc(which, max_p, p_lo, p_hi, opt);
}

Result cmd_diff_b3(long max_p, long p_lo, long p_hi, const Options& opt) {
    json doc;
    doc["kind"] = "Diff";
    doc["metadata"] = metadata(opt);
    std::vector<std::string> warnings;
    json changed = json::array();

    const json no_fixture;
    auto pa = pregular_rows(max_p, false, no_fixture);
    auto pb = pregular_rows(max_p, true, no_fixture);
    for (size_t i = 0; i < pa.size(); ++i)
        if (pa[i].lo != pb[i].lo || pa[i].hi != pb[i].hi)
            changed.push_back(json{{"table", "p-regular"},
                                   {"group", pa[i].group},
                                   {"p", pa[i].p},
                                   {"general", {{"lo", pa[i].lo}, {"hi", pa[i].hi}}},
                                   {"dedicated", {{"lo", pb[i].lo}, {"hi", pb[i].hi}}}});
    auto sa = su_rows(p_lo, p_hi, false, no_fixture);
    auto sb = su_rows(p_lo, p_hi, true, no_fixture);
    for (size_t i = 0; i < sa.size(); ++i)
        if (sa[i].lo != sb[i].lo || sa[i].hi != sb[i].hi)
            changed.push_back(json{{"table", "su"},
                                   {"group", "SU(" + std::to_string(sa[i].n) + ")"},
                                   {"p", sa[i].p},
                                   {"general", {{"lo", sa[i].lo}, {"hi", sa[i].hi}}},
                                   {"dedicated", {{"lo", sb[i].lo}, {"hi", sb[i].hi}}}});
    auto ea = exceptional_rows(false);
    auto eb = exceptional_rows(true);
    for (size_t i = 0; i < ea.size(); ++i)
        if (ea[i].bound.lo_exp != eb[i].bound.lo_exp ||
            ea[i].bound.hi_exp != eb[i].bound.hi_exp)
            changed.push_back(json{
                {"table", "exceptional"},
                {"group", ea[i].group},
                {"p", ea[i].p},
                {"general", {{"lo", ea[i].bound.lo_exp}, {"hi", ea[i].bound.hi_exp}}},
                {"dedicated", {{"lo", eb[i].bound.lo_exp}, {"hi", eb[i].bound.hi_exp}}}});

    doc["changed"] = changed;
    doc["summary"] = json{{"changed_rows", changed.size()}};
    doc["warnings"] = warnings;
    return {doc, 0};
}

// -----------------------------------------------------------------------
// Verification suites.

namespace {

struct SuiteEntry {
    std::string suite;
    std::string name;
    long pass = 0;
    long fail = 0;
};

void run_identities(std::vector<SuiteEntry>& out, const Options& opt) {
    const int trials = opt.trials > 0 ? opt.trials : 1000;
    auto rep = commcalc::verify_group_identities(5, trials, opt.seed);
    for (const auto& e : rep.entries)
        out.push_back({"identities", e.name + " (class 5)", e.pass, e.fail});
}

void run_oracle(std::vector<SuiteEntry>& out, const Options& opt) {
    const int trials = opt.trials > 0 ? opt.trials : 1000;
    for (long long m : {9LL, 25LL}) {
        auto rep = oracle::verify_identities(5, m, trials, opt.seed);
        for (const auto& e : rep.entries)
            out.push_back({"oracle", "UT(5," + std::to_string(m) + ") " + e.name, e.pass,
                           e.fail});
    }
}

void run_expansion(std::vector<SuiteEntry>& out, long n_single, const Options& opt) {
    using namespace commcalc;
    for (int cls : {3, 4}) {
        SuiteEntry power{"expansion", "power expansion, class " + std::to_string(cls), 0, 0};
        SuiteEntry prod{"expansion", "bracket product, class " + std::to_string(cls), 0, 0};
        NilContext ctx(cls);
        const Generator a = ctx.add_generator("alpha");
        const Generator b = ctx.add_flat_generator("beta");
        const GroupWord wa = GroupWord::from_gen(a);
        const GroupWord wb = GroupWord::from_gen(b);
        const GroupWord ab = mul(wa, wb);
        std::vector<long> ns;
        if (n_single > 0)
            ns = {n_single};
        else
            for (long n = 1; n <= 30; ++n) ns.push_back(n);
        for (long n : ns) {
            (equal_in(pow(ab, n), expand_power(a, b, n, ctx), ctx) ? power.pass
                                                                   : power.fail)++;
            if (n == 1) {
                ++prod.pass;  // empty product: vacuous
                continue;
            }
            GroupWord lhs;
            for (long i = 1; i <= n - 1; ++i) lhs = mul(lhs, comm(wb, pow(wa, i)));
            (equal_in(lhs, expand_bracket_product(a, b, n, ctx), ctx) ? prod.pass
                                                                      : prod.fail)++;
        }
        out.push_back(power);
        out.push_back(prod);
    }
    // Matrix cross-check in UT(4, Z/m) with beta drawn from gamma_2.
    const int trials = opt.trials > 0 ? opt.trials : 10;
    for (long long m : {25LL, 27LL, 49LL}) {
        SuiteEntry pw{"expansion", "UT(4," + std::to_string(m) + ") power expansion", 0, 0};
        SuiteEntry pr{"expansion", "UT(4," + std::to_string(m) + ") bracket product", 0, 0};
        std::vector<long> ns = n_single > 0 ? std::vector<long>{n_single}
                                            : std::vector<long>{2, 3, 5, 10, 30};
        for (long n : ns) {
            auto r1 = oracle::check_expansion(oracle::ExpansionLemma::PowerExpansion, 4, m,
                                              n, trials, opt.seed + (unsigned long long)n);
            auto r2 = oracle::check_expansion(oracle::ExpansionLemma::BracketProduct, 4, m,
                                              n, trials, opt.seed + (unsigned long long)n);
            for (const auto& e : r1.entries) pw.pass += e.pass, pw.fail += e.fail;
            for (const auto& e : r2.entries) pr.pass += e.pass, pr.fail += e.fail;
        }
        out.push_back(pw);
        out.push_back(pr);
    }
}

void run_hockey(std::vector<SuiteEntry>& out, long n_max) {
    SuiteEntry e{"hockey", "hockey stick, n <= " + std::to_string(n_max), 0, 0};
    for (long n = 1; n <= n_max; ++n)
        for (long j = 0; j < n; ++j) {
            auto [lhs, rhs] = commcalc::hockey_stick(n, j);
            (lhs == rhs ? e.pass : e.fail)++;
        }
    out.push_back(e);
}

void run_binom(std::vector<SuiteEntry>& out) {
    // The exact valuation is r - v_p(j+1), so the divisibility-by-p^r
    // reading only holds when j+1 is prime to p; the corrected inequality
    // is exhaustive, and the failure set of the uncorrected one is pinned.
    SuiteEntry e{"binom", "v_p(C(p^r, j+1)) >= r - v_p(j+1) for p in {3,5,7}, r in {1,2}",
                 0, 0};
    SuiteEntry lit{"binom", "uncorrected >= r claim fails exactly when p | j+1", 0, 0};
    for (long p : {3L, 5L, 7L})
        for (int r = 1; r <= 2; ++r) {
            long pr = 1;
            for (int i = 0; i < r; ++i) pr *= p;
            for (long j = 1; j <= pr - 2; ++j) {
                int vk = 0;
                for (long k = j + 1; k % p == 0; k /= p) ++vk;
                const int v = commcalc::binom_p_valuation(pr, j + 1, p);
                (v >= r - vk ? e.pass : e.fail)++;
                ((v >= r) == (vk == 0) ? lit.pass : lit.fail)++;
            }
        }
    out.push_back(e);
    out.push_back(lit);
}

void run_nilvanish(std::vector<SuiteEntry>& out, const Options& opt) {
    using namespace commcalc;
    SuiteEntry sym{"nilvanish", "iterated bracket vanishing, class n", 0, 0};
    SuiteEntry wit{"nilvanish", "nonvanishing witness at class n+2", 0, 0};
    for (int n : {2, 3, 4}) {
        {
            NilContext ctx(n);
            GroupWord beta = make_composite_beta(ctx);
            std::vector<Generator> fs;
            for (int i = 1; i < n; ++i)
                fs.push_back(ctx.add_generator("f" + std::to_string(i)));
            (nilpotency_vanishing(beta, fs, ctx).is_identity() ? sym.pass : sym.fail)++;
        }
        {
            // Same iterated bracket, recollected with the cutoff raised by 2.
            NilContext ctx(n + 2);
            GroupWord w = make_composite_beta(ctx);
            for (int i = 1; i < n; ++i)
                w = comm(w, GroupWord::from_gen(ctx.add_generator("f" + std::to_string(i))));
            (!collect(w, ctx).is_identity() ? wit.pass : wit.fail)++;
        }
    }
    out.push_back(sym);
    out.push_back(wit);
    const int trials = opt.trials > 0 ? opt.trials : 50;
    for (int n : {2, 3, 4}) {
        SuiteEntry mx{"nilvanish",
                      "UT(" + std::to_string(n + 1) + ",25) vanishing, n=" + std::to_string(n),
                      0, 0};
        auto rep = oracle::check_expansion(oracle::ExpansionLemma::NilVanishing, n + 1, 25,
                                           n, trials, opt.seed);
        for (const auto& e : rep.entries) mx.pass += e.pass, mx.fail += e.fail;
        out.push_back(mx);
    }
}

}  // namespace

Result cmd_verify(const std::string& suite, long n_max, long n, const Options& opt) {
    static const std::vector<std::string> known = {"identities", "oracle",  "expansion",
                                                   "hockey",     "binom",   "nilvanish"};
    if (!suite.empty() && std::find(known.begin(), known.end(), suite) == known.end())
        throw std::invalid_argument("unknown suite: " + suite);
    auto want = [&](const char* s) { return suite.empty() || suite == s; };

    std::vector<SuiteEntry> entries;
    if (want("identities")) run_identities(entries, opt);
    if (want("oracle")) run_oracle(entries, opt);
    if (want("expansion")) run_expansion(entries, n, opt);
    if (want("hockey")) run_hockey(entries, n_max > 0 ? n_max : 200);
    if (want("binom")) run_binom(entries);
    if (want("nilvanish")) run_nilvanish(entries, opt);

    long pass = 0, fail = 0;
    json rows = json::array();
    for (const auto& e : entries) {
        pass += e.pass;
        fail += e.fail;
        rows.push_back(json{{"suite", e.suite}, {"name", e.name}, {"pass", e.pass},
                            {"fail", e.fail}});
    }
    json doc;
    doc["kind"] = "IdentitySuite";
    doc["metadata"] = metadata(opt);
    doc["rows"] = rows;
    doc["summary"] = json{{"pass", pass}, {"fail", fail}, {"ok", fail == 0}};
    doc["warnings"] = json::array();
    return {doc, fail == 0 ? 0 : 1};
}

// -----------------------------------------------------------------------
// Rendering.

namespace {

std::string scalar_to_string(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "-";
    return v.dump();
}

void render_rows(std::ostringstream& os, const json& rows) {
    if (!rows.is_array() || rows.empty()) return;
    std::vector<std::string> cols;
    for (const auto& [k, v] : rows.front().items())
        if (!v.is_structured()) cols.push_back(k);
    os << "|";
    for (const auto& c : cols) os << " " << c << " |";
    os << "\n|";
    for (size_t i = 0; i < cols.size(); ++i) os << " --- |";
    os << "\n";
    for (const auto& row : rows) {
        os << "|";
        for (const auto& c : cols)
            os << " " << (row.contains(c) ? scalar_to_string(row[c]) : "-") << " |";
        os << "\n";
    }
}

}  // namespace

std::string render(const nlohmann::json& doc, const std::string& format) {
    if (format == "json") return doc.dump(2) + "\n";
    if (format != "markdown") throw std::invalid_argument("unknown format: " + format);
    std::ostringstream os;
    os << "# " << (doc.contains("kind") ? scalar_to_string(doc["kind"]) : "Report") << "\n\n";
    for (const auto& [k, v] : doc.items()) {
        if (k == "kind" || k == "metadata" || k == "rows" || k == "warnings" ||
            k == "fixture_diffs" || k == "changed" || k == "trace")
            continue;
        os << "- " << k << ": " << scalar_to_string(v) << "\n";
    }
    if (doc.contains("rows")) {
        os << "\n";
        render_rows(os, doc["rows"]);
    }
    for (const char* sect : {"fixture_diffs", "changed", "trace"})
        if (doc.contains(sect) && doc[sect].is_array() && !doc[sect].empty()) {
            os << "\n## " << sect << "\n\n";
            for (const auto& d : doc[sect]) os << "- " << d.dump() << "\n";
        }
    if (doc.contains("warnings") && !doc["warnings"].empty()) {
        os << "\n## warnings\n\n";
        for (const auto& w : doc["warnings"]) os << "- " << scalar_to_string(w) << "\n";
    }
    return os.str();
}

}  // namespace samelson::report
