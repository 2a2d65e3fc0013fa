#pragma once

// Internal evaluation engine for NilContext. Words are evaluated in a
// truncated tensor algebra (generator g maps to the unit 1 + x_g) and
// normal forms are extracted degree by degree with exact integer
// elimination over left-normed bracket candidates.

#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include "samelson/collect.hpp"

namespace samelson::commcalc::detail {

using Mono = std::vector<int>;  // letter indices, canonical representative

class Algebra {
  public:
    Algebra(int nil_class, const std::vector<Generator>& gens,
            const std::vector<int>& weights, const std::vector<char>& flat);

    int nil_class() const { return cls_; }
    size_t num_letters() const { return letter_gen_.size(); }
    size_t num_monos() const { return monos_.size(); }

    // Dense coefficient vector over the canonical monomial list.
    struct Poly {
        std::vector<long long> c;
        bool operator==(const Poly& o) const { return c == o.c; }
    };

    Poly zero() const;
    Poly one() const;
    Poly add(const Poly& a, const Poly& b) const;
    Poly sub(const Poly& a, const Poly& b) const;
    Poly mul(const Poly& a, const Poly& b) const;
    // P^e for a unit P (constant term 1) and arbitrary integer e.
    Poly unit_pow(const Poly& p, const BigInt& e) const;

    Poly eval_term(const TermPtr& t) const;
    Poly eval_word(const GroupWord& w) const;

    // Normal form as (term, exponent) factors in canonical order.
    std::vector<Factor> extract_normal_form(const Poly& image) const;

  private:
    struct LayerRow {
        int pivot;                    // index of leftmost nonzero entry
        std::vector<BigInt> poly;     // dense over monos
        std::vector<BigInt> combo;    // coordinates over layer candidates
    };
    struct Layer {
        std::vector<TermPtr> candidates;
        std::vector<LayerRow> rows;   // leftmost-nonzero pivots, all distinct
        bool built = false;
    };

    void build_monomials();
    Mono canonical(const Mono& m) const;
    int mono_index(const Mono& m) const;       // -1 when degree > class
    int concat(int a, int b) const;
    int mono_degree(int idx) const { return mono_deg_[idx]; }
    int letter_of_gen(int gen_id) const;

    void build_layer(int k) const;
    std::vector<TermPtr> layer_candidates(int k) const;
    Poly lie_image(const TermPtr& t) const;    // left-normed Lie bracket image

    int cls_;
    std::vector<int> letter_gen_;      // letter index -> generator id
    std::vector<int> letter_weight_;
    std::vector<char> letter_flat_;
    std::vector<int> gen_letter_;      // generator id -> letter index
    bool any_flat_ = false;

    std::vector<Mono> monos_;                    // sorted by (degree, length, lex)
    std::vector<int> mono_deg_;
    std::map<Mono, int> mono_index_;
    std::vector<std::vector<int>> concat_rows_;  // lazily filled
    mutable std::map<Mono, Mono> canon_cache_;

    mutable std::vector<Layer> layers_;          // index by degree 1..class
};

long long checked_narrow(const BigInt& v);

}  // namespace samelson::commcalc::detail
