#include "samelson/samelson_bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace samelson::bounds {

std::vector<int> SmashCellStructure::cells(long p) const {
    const int d = base_degree;
    const int s = 2 * (int)p - 2;
    switch (shape) {
        case SmashShape::SingleSphere: return {d};
        case SmashShape::TwoCellComplex: return {d, d + s};
        case SmashShape::DoubleTwoCell: return {d, d + s, d + s, d + 2 * s};
    }
    throw std::logic_error("bad shape");
}

std::string SmashCellStructure::to_string(long p) const {
    switch (shape) {
        case SmashShape::SingleSphere: return "S" + std::to_string(base_degree);
        case SmashShape::TwoCellComplex: return "C" + std::to_string(base_degree);
        case SmashShape::DoubleTwoCell: return "CC" + std::to_string(base_degree);
    }
    throw std::logic_error("bad shape");
}

SmashCellStructure smash(const lie::ACell& a, const lie::ACell& b, long p) {
    if (a.dim % 2 == 0 || b.dim % 2 == 0)
        throw std::invalid_argument("cells must be odd-dimensional");
    (void)p;
    SmashCellStructure s;
    s.base_degree = a.dim + b.dim;
    if (!a.two_cell && !b.two_cell)
        s.shape = SmashShape::SingleSphere;
    else if (a.two_cell && b.two_cell)
        s.shape = SmashShape::DoubleTwoCell;
    else
        s.shape = SmashShape::TwoCellComplex;
    return s;
}

namespace {

int cell_valuation(int degree, const toda::TargetSpace& target, long p, bool dedicated_b3) {
    auto g = toda::homotopy_group(target, degree, p, dedicated_b3);
    auto v = toda::exponent_p_valuation(g, p);
    if (!v) throw std::runtime_error("unexpected free summand");
    return *v;
}

}  // namespace

int skeletal_bound(const SmashCellStructure& s, const toda::TargetSpace& target, long p,
                   bool dedicated_b3) {
    const int d = s.base_degree;
    const int step = 2 * (int)p - 2;
    switch (s.shape) {
        case SmashShape::SingleSphere:
            return cell_valuation(d, target, p, dedicated_b3);
        case SmashShape::TwoCellComplex:
            return cell_valuation(d, target, p, dedicated_b3) +
                   cell_valuation(d + step, target, p, dedicated_b3);
        case SmashShape::DoubleTwoCell: {
            // top cell + skeleton; the skeleton splits as the two-cell part
            // wedge an extra sphere, and a direct sum's exponent is the max
            // of its summands, so the extra sphere never raises the bound.
            int two_cell = cell_valuation(d, target, p, dedicated_b3) +
                           cell_valuation(d + step, target, p, dedicated_b3);
            int extra = cell_valuation(d + step, target, p, dedicated_b3);
            return cell_valuation(d + 2 * step, target, p, dedicated_b3) +
                   std::max(two_cell, extra);
        }
    }
    throw std::logic_error("bad shape");
}

namespace {

// epsilon index i for a sphere cell S^{2i-1}, lambda index j for C_{2j-1}.
int cell_index(const lie::ACell& c) { return (c.dim + 1) / 2; }

}  // namespace

bool RefinementRule::applies(const lie::ACell& a, const lie::ACell& b, int n, long p) const {
    const int t = n - (int)p + 1;
    const lie::ACell& x = a;
    const lie::ACell& y = b;
    switch (id) {
        case 1:
            return !x.two_cell && !y.two_cell;
        case 2: {
            if (x.two_cell == y.two_cell) return false;
            const lie::ACell& eps = x.two_cell ? y : x;
            const lie::ACell& lam = x.two_cell ? x : y;
            return !(cell_index(eps) == (int)p && cell_index(lam) == t);
        }
        case 3:
            return x.two_cell && y.two_cell && cell_index(x) + cell_index(y) <= (int)p;
        case 4: {
            if (!x.two_cell || !y.two_cell) return false;
            int s = cell_index(x) + cell_index(y);
            return s >= (int)p + 1 && s <= 2 * (int)p - 1;
        }
        case 5: {
            if (x.two_cell == y.two_cell || n == 2 * (int)p - 1) return false;
            const lie::ACell& eps = x.two_cell ? y : x;
            const lie::ACell& lam = x.two_cell ? x : y;
            return cell_index(eps) == (int)p && cell_index(lam) == t;
        }
    }
    return false;
}

int RefinementRule::compress_dim(const lie::ACell& a, const lie::ACell& b, long p) const {
    return 2 * (cell_index(a) + cell_index(b) - (int)p) + 1;
}

std::vector<RefinementRule> su_refinement_rules(int n, long p) {
    std::vector<RefinementRule> rules;
    rules.push_back({RefinementRule::Effect::ExponentCap, 1,
                     "sphere-sphere pairs have order at most p", "kishimoto09 (1)", 1});
    rules.push_back({RefinementRule::Effect::ExponentCap, 1,
                     "sphere with two-cell pairs have order at most p away from the "
                     "exceptional pair",
                     "kishimoto09 (2)", 2});
    rules.push_back({RefinementRule::Effect::NullHomotopic, 0,
                     "two-cell pairs with index sum at most p are null", "kishimoto09 (3)",
                     3});
    rules.push_back({RefinementRule::Effect::CompressTarget, 0,
                     "two-cell pairs with index sum in [p+1, 2p-1] compress into a "
                     "low-dimensional sphere",
                     "kishimoto09 (4)", 4});
    rules.push_back({RefinementRule::Effect::ExponentCap, 2,
                     "the exceptional sphere/two-cell pair has order at most p^2 when "
                     "n differs from 2p-1",
                     "exact sequence computation", 5});
    (void)n;
    (void)p;
    return rules;
}

namespace {

TraceEntry make_entry(int i, int j, int k, const lie::ACell& a, const lie::ACell& b,
                      const SmashCellStructure& s, const toda::TargetSpace& target, long p,
                      bool dedicated_b3, int exponent, const std::string& rule) {
    TraceEntry e;
    e.i = i;
    e.j = j;
    e.k = k;
    e.a_i = a.to_string(p);
    e.a_j = b.to_string(p);
    e.target = target.to_string();
    e.exponent = exponent;
    e.rule = rule;
    for (int dim : s.cells(p)) {
        auto g = toda::homotopy_group(target, dim, p, dedicated_b3);
        e.cells.push_back({dim, target.to_string(), g.to_string()});
    }
    return e;
}

}  // namespace

OrderBound iota_bound(const lie::LieGroupSpec& g, long p, bool dedicated_b3) {
    const lie::Regularity reg = lie::classify(g, p);
    if (reg == lie::Regularity::Neither) throw std::domain_error("not quasi-p-regular");
    const lie::Decomposition dec = lie::decompose(g, p);
    const bool su_rules = g.family == lie::Family::SU &&
                          reg == lie::Regularity::QuasiPRegular && p >= 7;
    const auto rules = su_rules ? su_refinement_rules(g.n, p) : std::vector<RefinementRule>{};

    OrderBound out;
    out.lo_exp = lie::is_homotopy_commutative(g, p) ? 0 : 1;
    out.hi_exp = 0;
    std::vector<TraceEntry> best;

    const int nc = (int)dec.a_cells.size();
    for (int i = 0; i < nc; ++i)
        for (int j = 0; j < nc; ++j) {
            const auto& A = dec.a_cells[i];
            const auto& B = dec.a_cells[j];
            const SmashCellStructure s = smash(A, B, p);

            const RefinementRule* null_rule = nullptr;
            const RefinementRule* compress_rule = nullptr;
            int cap = -1;
            std::string cap_tag;
            for (const auto& r : rules) {
                if (!r.applies(A, B, g.n, p)) continue;
                if (r.effect == RefinementRule::Effect::NullHomotopic) null_rule = &r;
                else if (r.effect == RefinementRule::Effect::CompressTarget)
                    compress_rule = &r;
                else if (cap < 0 || r.cap < cap) {
                    cap = r.cap;
                    cap_tag = r.citation;
                }
            }

            if (null_rule) continue;  // contributes exponent 0

            std::vector<TraceEntry> local;
            int pair_bound = 0;
            if (compress_rule) {
                auto target = toda::TargetSpace::sphere(compress_rule->compress_dim(A, B, p));
                int b = skeletal_bound(s, target, p, dedicated_b3);
                pair_bound = b;
                local.push_back(make_entry(i, j, -1, A, B, s, target, p, dedicated_b3, b,
                                           compress_rule->citation));
            } else {
                for (int k = 0; k < nc; ++k) {
                    int b = skeletal_bound(s, dec.factors[k], p, dedicated_b3);
                    std::string tag = "skeletal";
                    if (cap >= 0 && b > cap) {
                        b = cap;
                        tag = cap_tag;
                    }
                    if (b > pair_bound) {
                        pair_bound = b;
                        local.clear();
                    }
                    if (b == pair_bound)
                        local.push_back(make_entry(i, j, k, A, B, s, dec.factors[k], p,
                                                   dedicated_b3, b, tag));
                }
            }
            if (pair_bound > out.hi_exp) {
                out.hi_exp = pair_bound;
                best.clear();
            }
            if (pair_bound == out.hi_exp && pair_bound > 0)
                best.insert(best.end(), local.begin(), local.end());
        }

    out.trace = std::move(best);
    if (out.lo_exp > out.hi_exp) {
        out.warnings.push_back(
            "upper bound below the non-commutativity lower bound; results suspect");
        out.lo_exp = out.hi_exp;
    }
    return out;
}

OrderBound universal_order(const lie::LieGroupSpec& g, long p, bool dedicated_b3) {
    if (!lie::is_low_rank(g, p)) throw std::domain_error("retractile hypothesis fails");
    OrderBound b = iota_bound(g, p, dedicated_b3);
    const auto nb = lie::nil_bound(g, p);
    if (b.hi_exp == 0) {
        if (lie::is_homotopy_commutative(g, p)) {
            b.gated = true;
            b.gate_note = "order equality holds: the group is homotopy commutative";
        } else {
            b.gated = false;
            b.gate_note = "bound on the generating inclusion only; gate not established";
        }
    } else if (nb.known && nb.bound <= p) {
        b.gated = true;
        b.gate_note = "order equality gate established (nilpotency class at most " +
                      std::to_string(nb.bound) + ", " + nb.source + ")";
    } else {
        b.gated = false;
        b.gate_note = "bound on the generating inclusion only; gate not established";
    }
    return b;
}

}  // namespace samelson::bounds
