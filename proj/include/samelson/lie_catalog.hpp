#pragma once

#include <optional>
#include <string>
#include <vector>

#include "samelson/homotopy_tables.hpp"

namespace samelson::lie {

enum class Family { SU, Sp, SpinOdd, SpinEven, G2, F4, E6, E7, E8 };

std::string family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);
bool family_has_parameter(Family f);

struct LieGroupSpec {
    Family family;
    int n = 0;  // SU(n), Sp(n), Spin(2n+1), Spin(2n); unused for exceptionals

    std::string name() const;
};

LieGroupSpec make_group(Family f, int n = 0);  // validates the parameter range

// Ascending odd degrees (2n_1-1, ..., 2n_l-1).
std::vector<int> type_sequence(const LieGroupSpec& g);
int max_type_n(const LieGroupSpec& g);  // n_l

bool is_low_rank(const LieGroupSpec& g, long p);

enum class Regularity { PRegular, QuasiPRegular, Neither };
std::string regularity_name(Regularity r);

Regularity classify(const LieGroupSpec& g, long p);

// A_i building block: a sphere cell or a two-cell complex with cells
// {dim, dim + 2p - 2}.
struct ACell {
    bool two_cell = false;
    int dim = 0;
    std::string to_string(long p) const;
};

struct Decomposition {
    std::vector<toda::TargetSpace> factors;
    std::vector<ACell> a_cells;
};

// Product decomposition into spheres and sphere bundles via the pairing
// rule: degrees d and d + 2p - 2 in the same residue class pair up.
Decomposition decompose(const LieGroupSpec& g, long p);

struct NilBoundInfo {
    int bound = 0;
    bool known = false;
    std::string source;
};

NilBoundInfo nil_bound(const LieGroupSpec& g, long p);

bool is_homotopy_commutative(const LieGroupSpec& g, long p);

// Iteration helpers for table generation.
std::vector<LieGroupSpec> catalog_groups(int su_max, int sp_max, int spin_odd_max,
                                         int spin_even_max);

}  // namespace samelson::lie
