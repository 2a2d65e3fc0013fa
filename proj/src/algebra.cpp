#include "algebra.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace samelson::commcalc::detail {

namespace {

const long long kCoefLimit = 1LL << 62;

long long narrow128(__int128 v) {
    if (v > (__int128)kCoefLimit || v < -(__int128)kCoefLimit)
        throw std::overflow_error("coefficient overflow");
    return (long long)v;
}

// g = s*a + t*b with g > 0.
BigInt ext_gcd(const BigInt& a, const BigInt& b, BigInt& s, BigInt& t) {
    BigInt r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
        BigInt q = r0 / r1;
        BigInt r2 = r0 - q * r1;
        r0 = r1; r1 = r2;
        BigInt s2 = s0 - q * s1;
        s0 = s1; s1 = s2;
        BigInt t2 = t0 - q * t1;
        t0 = t1; t1 = t2;
    }
    if (r0 < 0) { r0 = -r0; s0 = -s0; t0 = -t0; }
    s = s0; t = t0;
    return r0;
}

}  // namespace

long long checked_narrow(const BigInt& v) {
    if (v > kCoefLimit || v < -kCoefLimit)
        throw std::overflow_error("coefficient overflow");
    return (long long)v;
}

Algebra::Algebra(int nil_class, const std::vector<Generator>& gens,
                 const std::vector<int>& weights, const std::vector<char>& flat)
    : cls_(nil_class) {
    // Letters ordered by (weight, generator id); gens[i].id == i by context.
    std::vector<int> order(gens.size());
    for (size_t i = 0; i < gens.size(); ++i) order[i] = (int)i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return weights[a] < weights[b]; });
    gen_letter_.assign(gens.size(), -1);
    for (int gid : order) {
        gen_letter_[gid] = (int)letter_gen_.size();
        letter_gen_.push_back(gid);
        letter_weight_.push_back(weights[gid]);
        letter_flat_.push_back(flat[gid]);
        if (flat[gid]) any_flat_ = true;
    }
    build_monomials();
    layers_.resize(cls_ + 1);
}

void Algebra::build_monomials() {
    std::set<Mono> seen;
    Mono cur;
    // Depth-first enumeration of all words of weighted degree <= class.
    std::vector<std::pair<Mono, int>> stack;
    stack.push_back({Mono{}, 0});
    while (!stack.empty()) {
        auto [m, deg] = stack.back();
        stack.pop_back();
        seen.insert(canonical(m));
        if (seen.size() > 200000)
            throw std::runtime_error("context too large: monomial space exceeds limit");
        for (size_t l = 0; l < letter_gen_.size(); ++l) {
            int nd = deg + letter_weight_[l];
            if (nd > cls_) continue;
            Mono next = m;
            next.push_back((int)l);
            stack.push_back({std::move(next), nd});
        }
    }
    monos_.assign(seen.begin(), seen.end());
    std::stable_sort(monos_.begin(), monos_.end(), [&](const Mono& a, const Mono& b) {
        int da = 0, db = 0;
        for (int l : a) da += letter_weight_[l];
        for (int l : b) db += letter_weight_[l];
        if (da != db) return da < db;
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    mono_deg_.resize(monos_.size());
    for (size_t i = 0; i < monos_.size(); ++i) {
        int d = 0;
        for (int l : monos_[i]) d += letter_weight_[l];
        mono_deg_[i] = d;
        mono_index_[monos_[i]] = (int)i;
    }
    concat_rows_.assign(monos_.size(), {});
}

Mono Algebra::canonical(const Mono& m) const {
    if (!any_flat_ || m.size() < 2) return m;
    bool has_flat = false;
    for (int l : m)
        if (letter_flat_[l]) { has_flat = true; break; }
    if (!has_flat) return m;
    auto it = canon_cache_.find(m);
    if (it != canon_cache_.end()) return it->second;
    // Closure under swapping adjacent blocks that each contain a flat
    // letter; the representative is the lexicographically least word.
    std::set<Mono> closure;
    std::vector<Mono> queue{m};
    closure.insert(m);
    const int n = (int)m.size();
    while (!queue.empty()) {
        Mono cur = queue.back();
        queue.pop_back();
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = j + 1; k <= n; ++k) {
                    bool lf = false, rf = false;
                    for (int t = i; t < j; ++t) lf |= (bool)letter_flat_[cur[t]];
                    for (int t = j; t < k; ++t) rf |= (bool)letter_flat_[cur[t]];
                    if (!lf || !rf) continue;
                    Mono swapped(cur.begin(), cur.begin() + i);
                    swapped.insert(swapped.end(), cur.begin() + j, cur.begin() + k);
                    swapped.insert(swapped.end(), cur.begin() + i, cur.begin() + j);
                    swapped.insert(swapped.end(), cur.begin() + k, cur.end());
                    if (closure.insert(swapped).second) queue.push_back(swapped);
                }
    }
    Mono best = *closure.begin();
    for (const Mono& c : closure) canon_cache_[c] = best;
    return best;
}

int Algebra::mono_index(const Mono& m) const {
    int d = 0;
    for (int l : m) d += letter_weight_[l];
    if (d > cls_) return -1;
    Mono c = canonical(m);
    auto it = mono_index_.find(c);
    if (it == mono_index_.end())
        throw std::logic_error("monomial missing from enumeration");
    return it->second;
}

int Algebra::concat(int a, int b) const {
    auto& row = const_cast<std::vector<int>&>(concat_rows_[a]);
    if (row.empty()) {
        row.resize(monos_.size());
        for (size_t j = 0; j < monos_.size(); ++j) {
            if (mono_deg_[a] + mono_deg_[j] > cls_) {
                row[j] = -1;
                continue;
            }
            Mono cat = monos_[a];
            cat.insert(cat.end(), monos_[j].begin(), monos_[j].end());
            row[j] = mono_index(cat);
        }
    }
    return row[b];
}

Algebra::Poly Algebra::zero() const {
    Poly p;
    p.c.assign(monos_.size(), 0);
    return p;
}

Algebra::Poly Algebra::one() const {
    Poly p = zero();
    p.c[0] = 1;
    return p;
}

Algebra::Poly Algebra::add(const Poly& a, const Poly& b) const {
    Poly r = a;
    for (size_t i = 0; i < r.c.size(); ++i)
        r.c[i] = narrow128((__int128)r.c[i] + b.c[i]);
    return r;
}

Algebra::Poly Algebra::sub(const Poly& a, const Poly& b) const {
    Poly r = a;
    for (size_t i = 0; i < r.c.size(); ++i)
        r.c[i] = narrow128((__int128)r.c[i] - b.c[i]);
    return r;
}

Algebra::Poly Algebra::mul(const Poly& a, const Poly& b) const {
    std::vector<int> sa, sb;
    for (size_t i = 0; i < a.c.size(); ++i)
        if (a.c[i]) sa.push_back((int)i);
    for (size_t i = 0; i < b.c.size(); ++i)
        if (b.c[i]) sb.push_back((int)i);
    std::vector<__int128> acc(a.c.size(), 0);
    for (int i : sa) {
        const __int128 ai = a.c[i];
        for (int j : sb) {
            int k = concat(i, j);
            if (k >= 0) acc[k] += ai * b.c[j];
        }
    }
    Poly r;
    r.c.resize(a.c.size());
    for (size_t i = 0; i < acc.size(); ++i) r.c[i] = narrow128(acc[i]);
    return r;
}

Algebra::Poly Algebra::unit_pow(const Poly& p, const BigInt& e) const {
    if (p.c[0] != 1) throw std::logic_error("unit_pow on a non-unit");
    Poly n = p;
    n.c[0] = 0;
    int d0 = 0;
    for (size_t i = 1; i < n.c.size(); ++i)
        if (n.c[i]) { d0 = mono_deg_[i]; break; }
    if (d0 == 0) return one();  // p == 1
    Poly result = one();
    Poly npow = n;
    for (int j = 1; j * d0 <= cls_; ++j) {
        if (j > 1) npow = mul(npow, n);
        long long coef = checked_narrow(binomial(e, j));
        if (coef != 0)
            for (size_t i = 0; i < result.c.size(); ++i)
                if (npow.c[i])
                    result.c[i] = narrow128((__int128)result.c[i] +
                                            (__int128)coef * npow.c[i]);
    }
    return result;
}

Algebra::Poly Algebra::eval_term(const TermPtr& t) const {
    if (t->is_leaf()) {
        int gid = t->gen_id();
        if (gid < 0 || gid >= (int)gen_letter_.size() || gen_letter_[gid] < 0)
            throw std::invalid_argument("unknown generator");
        Poly p = one();
        int idx = mono_index(Mono{gen_letter_[gid]});
        if (idx >= 0) p.c[idx] = 1;
        return p;
    }
    Poly u = eval_term(t->left());
    Poly v = eval_term(t->right());
    Poly ui = unit_pow(u, -1);
    Poly vi = unit_pow(v, -1);
    return mul(mul(ui, vi), mul(u, v));
}

Algebra::Poly Algebra::eval_word(const GroupWord& w) const {
    Poly r = one();
    for (const auto& f : w.factors()) {
        if (f.term->is_leaf()) {
            // g^e expands directly to sum_j C(e,j) x^j.
            int gid = f.term->gen_id();
            if (gid < 0 || gid >= (int)gen_letter_.size() || gen_letter_[gid] < 0)
                throw std::invalid_argument("unknown generator");
            int l = gen_letter_[gid];
            Poly p = one();
            Mono m;
            for (int j = 1; j * letter_weight_[l] <= cls_; ++j) {
                m.push_back(l);
                int idx = mono_index(m);
                if (idx < 0) break;
                p.c[idx] = checked_narrow(binomial(f.exponent, j));
            }
            r = mul(r, p);
        } else {
            r = mul(r, unit_pow(eval_term(f.term), f.exponent));
        }
    }
    return r;
}

std::vector<TermPtr> Algebra::layer_candidates(int k) const {
    std::vector<TermPtr> out;
    const int L = (int)letter_gen_.size();
    // All left-normed sequences (l1,...,lm) of total weight k with l1 > l2;
    // single letters of weight k for m = 1. Spanning set, not a basis.
    std::vector<int> seq;
    auto gen_from_letter = [&](int l) {
        Generator g;
        g.id = letter_gen_[l];
        return g;
    };
    std::function<void(int, int)> rec = [&](int pos, int deg) {
        if (deg == k && !seq.empty()) {
            if (seq.size() == 1 || seq[0] > seq[1]) {
                TermPtr t = CommutatorTerm::leaf(gen_from_letter(seq[0]));
                for (size_t i = 1; i < seq.size(); ++i)
                    t = CommutatorTerm::bracket(t, CommutatorTerm::leaf(gen_from_letter(seq[i])));
                out.push_back(t);
            }
            return;
        }
        if (deg >= k) return;
        for (int l = 0; l < L; ++l) {
            if (deg + letter_weight_[l] > k) continue;
            seq.push_back(l);
            rec(pos + 1, deg + letter_weight_[l]);
            seq.pop_back();
        }
    };
    rec(0, 0);
    return out;
}

Algebra::Poly Algebra::lie_image(const TermPtr& t) const {
    std::vector<int> leaves;
    t->collect_leaves(leaves);
    Poly p = zero();
    int i0 = mono_index(Mono{gen_letter_[leaves[0]]});
    if (i0 >= 0) p.c[i0] = 1;
    for (size_t i = 1; i < leaves.size(); ++i) {
        Poly x = zero();
        int xi = mono_index(Mono{gen_letter_[leaves[i]]});
        if (xi >= 0) x.c[xi] = 1;
        p = sub(mul(p, x), mul(x, p));
    }
    return p;
}

void Algebra::build_layer(int k) const {
    Layer& layer = layers_[k];
    if (layer.built) return;
    layer.candidates = layer_candidates(k);
    const size_t M = monos_.size();
    const size_t C = layer.candidates.size();
    for (size_t ci = 0; ci < C; ++ci) {
        Poly img = lie_image(layer.candidates[ci]);
        std::vector<BigInt> v(M);
        bool nz = false;
        for (size_t i = 0; i < M; ++i) {
            v[i] = img.c[i];
            if (img.c[i]) nz = true;
        }
        if (!nz) continue;
        std::vector<BigInt> combo(C);
        combo[ci] = 1;
        // Integer elimination; each row's leftmost nonzero is its pivot.
        for (;;) {
            int pos = -1;
            for (size_t i = 0; i < M; ++i)
                if (v[i] != 0) { pos = (int)i; break; }
            if (pos < 0) break;
            LayerRow* row = nullptr;
            for (auto& r : layer.rows)
                if (r.pivot == pos) { row = &r; break; }
            if (!row) {
                layer.rows.push_back({pos, std::move(v), std::move(combo)});
                break;
            }
            const BigInt a = row->poly[pos];
            const BigInt b = v[pos];
            if (b % a == 0) {
                BigInt q = b / a;
                for (size_t i = pos; i < M; ++i) v[i] -= q * row->poly[i];
                for (size_t i = 0; i < C; ++i) combo[i] -= q * row->combo[i];
            } else {
                BigInt s, t;
                BigInt g = ext_gcd(a, b, s, t);
                std::vector<BigInt> np(M), nc(C), v2(M), c2(C);
                for (size_t i = 0; i < M; ++i) {
                    np[i] = s * row->poly[i] + t * v[i];
                    v2[i] = (a / g) * v[i] - (b / g) * row->poly[i];
                }
                for (size_t i = 0; i < C; ++i) {
                    nc[i] = s * row->combo[i] + t * combo[i];
                    c2[i] = (a / g) * combo[i] - (b / g) * row->combo[i];
                }
                row->poly = std::move(np);
                row->combo = std::move(nc);
                v = std::move(v2);
                combo = std::move(c2);
            }
        }
    }
    layer.built = true;
}

std::vector<Factor> Algebra::extract_normal_form(const Poly& image) const {
    if (image.c[0] != 1) throw std::logic_error("normal form of a non-unit");
    Poly R = image;
    std::vector<Factor> out;
    for (int k = 1; k <= cls_; ++k) {
        bool any = false;
        for (size_t i = 1; i < R.c.size(); ++i) {
            if (mono_deg_[i] > k) break;
            if (mono_deg_[i] < k && R.c[i] != 0)
                throw std::logic_error("residual has unprocessed low-degree part");
            if (mono_deg_[i] == k && R.c[i]) any = true;
        }
        if (!any) continue;
        build_layer(k);
        const Layer& layer = layers_[k];
        const size_t M = monos_.size();
        const size_t C = layer.candidates.size();
        std::vector<BigInt> L(M), exps(C);
        for (size_t i = 0; i < M; ++i)
            if (mono_deg_[i] == k) L[i] = R.c[i];
        for (;;) {
            int pos = -1;
            for (size_t i = 0; i < M; ++i)
                if (L[i] != 0) { pos = (int)i; break; }
            if (pos < 0) break;
            const LayerRow* row = nullptr;
            for (const auto& r : layer.rows)
                if (r.pivot == pos) { row = &r; break; }
            if (!row || L[pos] % row->poly[pos] != 0)
                throw std::logic_error("layer element outside candidate lattice");
            BigInt q = L[pos] / row->poly[pos];
            for (size_t i = pos; i < M; ++i) L[i] -= q * row->poly[i];
            for (size_t i = 0; i < C; ++i) exps[i] += q * row->combo[i];
        }
        Poly prefix = one();
        for (size_t ci = 0; ci < C; ++ci) {
            if (exps[ci] == 0) continue;
            out.push_back({layer.candidates[ci], exps[ci]});
            prefix = mul(prefix, unit_pow(eval_term(layer.candidates[ci]), exps[ci]));
        }
        R = mul(unit_pow(prefix, -1), R);
    }
    for (size_t i = 1; i < R.c.size(); ++i)
        if (R.c[i] != 0) throw std::logic_error("normal form extraction left a residual");
    return out;
}

}  // namespace samelson::commcalc::detail
