#include "samelson/homotopy_tables.hpp"

#include <stdexcept>

#include "samelson/bigint.hpp"

namespace samelson::toda {

std::string FinAbGroup::to_string() const {
    if (is_trivial()) return "0";
    std::string s;
    for (int r = 0; r < free_rank; ++r) s += (s.empty() ? "Z" : " + Z");
    for (const auto& [p, e] : cyclic) {
        s += (s.empty() ? "" : " + ");
        s += "Z/" + std::to_string(p);
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

std::optional<int> exponent_p_valuation(const FinAbGroup& g, long p) {
    if (g.free_rank > 0) return std::nullopt;
    int v = 0;
    for (const auto& [q, e] : g.cyclic) {
        if (q != p) throw std::invalid_argument("group is not a p-group for this p");
        if (e > v) v = e;
    }
    return v;
}

TargetSpace TargetSpace::sphere(int dim) {
    if (dim < 3 || dim % 2 == 0) throw std::invalid_argument("sphere dimension must be odd and >= 3");
    TargetSpace t;
    t.kind = Kind::Sphere;
    t.low = dim;
    return t;
}

TargetSpace TargetSpace::bundle(int low, int high) {
    if (low < 3 || low % 2 == 0 || high % 2 == 0 || high <= low)
        throw std::invalid_argument("bundle dimensions must be odd with high > low >= 3");
    TargetSpace t;
    t.kind = Kind::Bundle;
    t.low = low;
    t.high = high;
    return t;
}

std::string TargetSpace::to_string() const {
    if (kind == Kind::Sphere) return "S" + std::to_string(low);
    return "B(" + std::to_string(low) + "," + std::to_string(high) + ")";
}

long toda_range_max(long p) { return 2 * p * (p - 1) - 3; }

FinAbGroup homotopy_group(const TargetSpace& space, int total_degree, long p,
                          bool dedicated_b3) {
    if (!is_small_prime(p) || p < 3) throw std::invalid_argument("p must be an odd prime");
    const long k = total_degree - space.low;
    const long n = (space.low + 1) / 2;
    if (space.kind == TargetSpace::Kind::Bundle && space.high - space.low != 2 * p - 2)
        throw std::invalid_argument("bundle top does not match the prime");
    if (k < 0) return FinAbGroup::trivial();
    if (k == 0) return FinAbGroup::free_part();
    if (k > toda_range_max(p)) throw std::out_of_range("degree outside Toda range");

    // k = 2i(p-1)-1 or 2i(p-1)-2 for integral i?
    auto family_index = [&](long offset) -> long {
        long v = k + offset;  // 2i(p-1)
        if (v % (2 * (p - 1)) != 0) return 0;
        return v / (2 * (p - 1));
    };
    const long i1 = family_index(1);
    const long i2 = family_index(2);

    if (space.kind == TargetSpace::Kind::Sphere) {
        if (i1 >= 1 && i1 <= p - 1) return FinAbGroup::mod_p_power(p, 1);
        if (i2 >= n && i2 <= p - 1) return FinAbGroup::mod_p_power(p, 1);
        return FinAbGroup::trivial();
    }
    if (dedicated_b3 && space.low == 3) {
        if (i1 >= 2 && i1 <= p - 1) return FinAbGroup::mod_p_power(p, 1);
        if (k == 2 * p - 2) return FinAbGroup::free_part();
        return FinAbGroup::trivial();
    }
    if (i1 >= 2 && i1 <= p - 1) return FinAbGroup::mod_p_power(p, 2);
    if (i2 >= n && i2 <= p - 1) return FinAbGroup::mod_p_power(p, 1);
    if (k == 2 * p - 2) return FinAbGroup::free_part();
    return FinAbGroup::trivial();
}

}  // namespace samelson::toda
