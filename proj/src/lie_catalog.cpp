#include "samelson/lie_catalog.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "samelson/bigint.hpp"

namespace samelson::lie {

std::string family_name(Family f) {
    switch (f) {
        case Family::SU: return "SU";
        case Family::Sp: return "Sp";
        case Family::SpinOdd: return "SpinOdd";
        case Family::SpinEven: return "SpinEven";
        case Family::G2: return "G2";
        case Family::F4: return "F4";
        case Family::E6: return "E6";
        case Family::E7: return "E7";
        case Family::E8: return "E8";
    }
    throw std::logic_error("bad family");
}

std::optional<Family> family_from_name(const std::string& name) {
    static const std::map<std::string, Family> table = {
        {"SU", Family::SU},           {"Sp", Family::Sp},
        {"SpinOdd", Family::SpinOdd}, {"SpinEven", Family::SpinEven},
        {"Spin+", Family::SpinOdd},   {"Spin-", Family::SpinEven},
        {"G2", Family::G2},           {"F4", Family::F4},
        {"E6", Family::E6},           {"E7", Family::E7},
        {"E8", Family::E8}};
    auto it = table.find(name);
    if (it == table.end()) return std::nullopt;
    return it->second;
}

bool family_has_parameter(Family f) {
    return f == Family::SU || f == Family::Sp || f == Family::SpinOdd ||
           f == Family::SpinEven;
}

std::string LieGroupSpec::name() const {
    switch (family) {
        case Family::SU: return "SU(" + std::to_string(n) + ")";
        case Family::Sp: return "Sp(" + std::to_string(n) + ")";
        case Family::SpinOdd: return "Spin(" + std::to_string(2 * n + 1) + ")";
        case Family::SpinEven: return "Spin(" + std::to_string(2 * n) + ")";
        default: return family_name(family);
    }
}

LieGroupSpec make_group(Family f, int n) {
    switch (f) {
        case Family::SU:
            if (n < 2) throw std::invalid_argument("SU needs n >= 2");
            break;
        case Family::Sp:
            if (n < 1) throw std::invalid_argument("Sp needs n >= 1");
            break;
        case Family::SpinOdd:
            if (n < 2) throw std::invalid_argument("Spin(2n+1) needs n >= 2");
            break;
        case Family::SpinEven:
            if (n < 3) throw std::invalid_argument("Spin(2n) needs n >= 3");
            break;
        default:
            n = 0;
            break;
    }
    return LieGroupSpec{f, n};
}

std::vector<int> type_sequence(const LieGroupSpec& g) {
    std::vector<int> t;
    switch (g.family) {
        case Family::SU:
            for (int i = 2; i <= g.n; ++i) t.push_back(2 * i - 1);
            break;
        case Family::Sp:
        case Family::SpinOdd:
            for (int i = 1; i <= g.n; ++i) t.push_back(4 * i - 1);
            break;
        case Family::SpinEven:
            for (int i = 1; i <= g.n - 1; ++i) t.push_back(4 * i - 1);
            t.push_back(2 * g.n - 1);
            std::sort(t.begin(), t.end());
            break;
        case Family::G2: t = {3, 11}; break;
        case Family::F4: t = {3, 11, 15, 23}; break;
        case Family::E6: t = {3, 9, 11, 15, 17, 23}; break;
        case Family::E7: t = {3, 11, 15, 19, 23, 27, 35}; break;
        case Family::E8: t = {3, 15, 23, 27, 35, 39, 47, 59}; break;
    }
    return t;
}

int max_type_n(const LieGroupSpec& g) {
    auto t = type_sequence(g);
    return (t.back() + 1) / 2;
}

namespace {

void require_odd_prime(long p) {
    if (p == 2) throw std::invalid_argument("p must be odd");
    if (!is_small_prime(p)) throw std::invalid_argument("p must be prime");
}

}  // namespace

bool is_low_rank(const LieGroupSpec& g, long p) {
    require_odd_prime(p);
    const long c = (p - 1) * (p - 2);
    switch (g.family) {
        case Family::SU: return g.n <= c + 1;
        case Family::Sp: return 2 * g.n <= c;
        case Family::SpinOdd: return 2 * g.n <= c;
        case Family::SpinEven: return 2 * g.n - 2 <= c;
        case Family::G2:
        case Family::F4:
        case Family::E6: return p >= 5;
        case Family::E7:
        case Family::E8: return p >= 7;
    }
    throw std::logic_error("bad family");
}

namespace {

// Residue classes of the type degrees mod 2p-2, each sorted ascending.
std::vector<std::vector<int>> residue_classes(const LieGroupSpec& g, long p) {
    std::map<long, std::vector<int>> by_res;
    for (int d : type_sequence(g)) by_res[((long)d) % (2 * p - 2)].push_back(d);
    std::vector<std::vector<int>> out;
    for (auto& [r, ds] : by_res) out.push_back(std::move(ds));
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

}  // namespace

namespace {

// Splits one residue class into (low, high) bundle pairs and leftover
// sphere degrees. A class is admissible when it holds at most two distinct
// degrees; two distinct degrees must differ by exactly 2p-2 and appear with
// equal multiplicity (each low pairs with one high). Repeated equal degrees
// are separate sphere factors.
bool split_class(const std::vector<int>& cls, long p,
                 std::vector<std::pair<int, int>>* bundles, std::vector<int>* spheres) {
    std::vector<int> distinct;
    for (int d : cls)
        if (distinct.empty() || distinct.back() != d) distinct.push_back(d);
    if (distinct.size() == 1) {
        if (spheres) spheres->insert(spheres->end(), cls.begin(), cls.end());
        return true;
    }
    if (distinct.size() != 2 || distinct[1] - distinct[0] != 2 * p - 2) return false;
    const long lo_mult = std::count(cls.begin(), cls.end(), distinct[0]);
    const long hi_mult = (long)cls.size() - lo_mult;
    if (lo_mult != hi_mult) return false;
    if (bundles)
        for (long i = 0; i < lo_mult; ++i) bundles->push_back({distinct[0], distinct[1]});
    return true;
}

}  // namespace

Regularity classify(const LieGroupSpec& g, long p) {
    require_odd_prime(p);
    if (p >= max_type_n(g)) return Regularity::PRegular;
    bool any_pair = false;
    for (const auto& cls : residue_classes(g, p)) {
        std::vector<std::pair<int, int>> bundles;
        if (!split_class(cls, p, &bundles, nullptr)) return Regularity::Neither;
        if (!bundles.empty()) any_pair = true;
    }
    return any_pair ? Regularity::QuasiPRegular : Regularity::Neither;
}

std::string regularity_name(Regularity r) {
    switch (r) {
        case Regularity::PRegular: return "p-regular";
        case Regularity::QuasiPRegular: return "quasi-p-regular";
        case Regularity::Neither: return "neither";
    }
    throw std::logic_error("bad regularity");
}

std::string ACell::to_string(long p) const {
    if (!two_cell) return "S" + std::to_string(dim);
    return "C" + std::to_string(dim) + "{" + std::to_string(dim) + "," +
           std::to_string(dim + 2 * (int)p - 2) + "}";
}

Decomposition decompose(const LieGroupSpec& g, long p) {
    if (classify(g, p) == Regularity::Neither)
        throw std::domain_error("not quasi-p-regular");
    Decomposition dec;
    std::vector<std::pair<int, int>> bundles;  // (low, high)
    std::vector<int> spheres;
    for (const auto& cls : residue_classes(g, p))
        if (!split_class(cls, p, &bundles, &spheres))
            throw std::domain_error("not quasi-p-regular");
    std::sort(bundles.begin(), bundles.end());
    std::sort(spheres.begin(), spheres.end());
    for (auto [lo, hi] : bundles) {
        dec.factors.push_back(toda::TargetSpace::bundle(lo, hi));
        dec.a_cells.push_back(ACell{true, lo});
    }
    for (int d : spheres) {
        dec.factors.push_back(toda::TargetSpace::sphere(d));
        dec.a_cells.push_back(ACell{false, d});
    }
    return dec;
}

NilBoundInfo nil_bound(const LieGroupSpec& g, long p) {
    Regularity r = classify(g, p);
    if (r == Regularity::PRegular) return {3, true, "kaji-kishimoto10"};
    if (r == Regularity::QuasiPRegular && p >= 7) {
        if (g.family == Family::SU) return {3, true, "kishimoto09"};
        if (!family_has_parameter(g.family)) return {2, true, "theriault16"};
    }
    return {0, false, ""};
}

bool is_homotopy_commutative(const LieGroupSpec& g, long p) {
    require_odd_prime(p);
    if (p > 2 * max_type_n(g)) return true;
    if (g.family == Family::Sp && g.n == 2 && p == 3) return true;
    if (g.family == Family::G2 && p == 5) return true;
    return false;
}

std::vector<LieGroupSpec> catalog_groups(int su_max, int sp_max, int spin_odd_max,
                                         int spin_even_max) {
    std::vector<LieGroupSpec> out;
    for (int n = 2; n <= su_max; ++n) out.push_back(make_group(Family::SU, n));
    for (int n = 1; n <= sp_max; ++n) out.push_back(make_group(Family::Sp, n));
    for (int n = 2; n <= spin_odd_max; ++n) out.push_back(make_group(Family::SpinOdd, n));
    for (int n = 3; n <= spin_even_max; ++n) out.push_back(make_group(Family::SpinEven, n));
    for (Family f : {Family::G2, Family::F4, Family::E6, Family::E7, Family::E8})
        out.push_back(make_group(f));
    return out;
}

}  // namespace samelson::lie
