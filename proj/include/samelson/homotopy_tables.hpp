#pragma once

#include <optional>
#include <string>
#include <vector>

namespace samelson::toda {

// Finite abelian p-group descriptor plus a free rank.
struct FinAbGroup {
    std::vector<std::pair<long, int>> cyclic;  // (p, e) prime power factors
    int free_rank = 0;

    static FinAbGroup trivial() { return {}; }
    static FinAbGroup free_part() {
        FinAbGroup g;
        g.free_rank = 1;
        return g;
    }
    static FinAbGroup mod_p_power(long p, int e) {
        FinAbGroup g;
        g.cyclic.push_back({p, e});
        return g;
    }
    bool is_trivial() const { return cyclic.empty() && free_rank == 0; }
    std::string to_string() const;
    bool operator==(const FinAbGroup& o) const {
        return cyclic == o.cyclic && free_rank == o.free_rank;
    }
};

// p-adic valuation of the group exponent; nullopt when infinite.
std::optional<int> exponent_p_valuation(const FinAbGroup& g, long p);

// Odd sphere S^{2n-1} or the sphere bundle B(2n-1, 2n+2p-3).
struct TargetSpace {
    enum class Kind { Sphere, Bundle };
    Kind kind = Kind::Sphere;
    int low = 3;   // 2n-1
    int high = 0;  // bundle top cell dimension, 0 for spheres

    static TargetSpace sphere(int dim);
    static TargetSpace bundle(int low, int high);
    std::string to_string() const;
    bool operator==(const TargetSpace& o) const {
        return kind == o.kind && low == o.low && high == o.high;
    }
};

long toda_range_max(long p);  // 2p(p-1) - 3

// p-local homotopy group pi_{total_degree}(space). Degrees above the table
// range are a hard error. dedicated_b3 switches B(3, 2p+1) to its dedicated
// formula (Z/p instead of Z/p^2 on the first case family).
FinAbGroup homotopy_group(const TargetSpace& space, int total_degree, long p,
                          bool dedicated_b3 = false);

}  // namespace samelson::toda
