#pragma once

#include <string>
#include <vector>

#include "samelson/homotopy_tables.hpp"
#include "samelson/lie_catalog.hpp"

namespace samelson::bounds {

enum class SmashShape { SingleSphere, TwoCellComplex, DoubleTwoCell };

struct SmashCellStructure {
    SmashShape shape = SmashShape::SingleSphere;
    int base_degree = 0;  // even, sum of the two bottom cell dimensions
    std::vector<int> cells(long p) const;
    std::string to_string(long p) const;
};

SmashCellStructure smash(const lie::ACell& a, const lie::ACell& b, long p);

// Exponent bound on [smash, target]: cofibration steps add valuations of the
// cell-degree homotopy groups (the wedge summand of the skeleton contributes
// through a direct sum, so it never adds beyond the two-cell part).
int skeletal_bound(const SmashCellStructure& s, const toda::TargetSpace& target, long p,
                   bool dedicated_b3 = false);

struct TraceCell {
    int cell_dim = 0;
    std::string target;
    std::string group;
};

struct TraceEntry {
    int i = 0, j = 0, k = 0;  // a-cell and factor indices; k = -1 for compressions
    std::string a_i, a_j, target;
    int exponent = 0;
    std::string rule;
    std::vector<TraceCell> cells;
};

struct OrderBound {
    int lo_exp = 0;
    int hi_exp = 0;
    bool gated = false;
    std::string gate_note;
    std::vector<TraceEntry> trace;
    std::vector<std::string> warnings;
};

struct RefinementRule {
    enum class Effect { NullHomotopic, ExponentCap, CompressTarget };
    Effect effect = Effect::ExponentCap;
    int cap = 0;
    std::string description;
    std::string citation;
    int id = 0;
    // Applicability on an unordered a-cell pair within SU(n) at p.
    bool applies(const lie::ACell& a, const lie::ACell& b, int n, long p) const;
    // Compression target dimension 2(j+j'-p)+1 for a lambda-lambda pair.
    int compress_dim(const lie::ACell& a, const lie::ACell& b, long p) const;
};

// The refinement rules available for quasi-p-regular SU(n), p >= 7.
std::vector<RefinementRule> su_refinement_rules(int n, long p);

// Max over all (i, j, k) of the refined bound on [A_i ^ A_j, B_k].
OrderBound iota_bound(const lie::LieGroupSpec& g, long p, bool dedicated_b3 = false);

// iota_bound plus the order-equality gate from the nilpotency hypothesis.
OrderBound universal_order(const lie::LieGroupSpec& g, long p, bool dedicated_b3 = false);

}  // namespace samelson::bounds
