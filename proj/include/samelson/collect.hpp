#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "samelson/words.hpp"

namespace samelson::commcalc {

namespace detail {
class Algebra;
}

// Free nilpotent context: class cutoff, registered generators, flat flags.
// Flat generators model elements whose pairwise products commute and whose
// brackets distribute linearly; they may carry a declared weight > 1.
class NilContext {
  public:
    explicit NilContext(int nil_class);
    ~NilContext();
    NilContext(const NilContext&) = delete;
    NilContext& operator=(const NilContext&) = delete;

    Generator add_generator(const std::string& label);
    Generator add_flat_generator(const std::string& label, int weight = 1);

    int nil_class() const { return class_; }
    bool has_generator(int id) const;
    bool is_flat(int id) const;
    int generator_weight(int id) const;
    const std::vector<Generator>& generators() const { return gens_; }
    std::vector<std::string> labels_by_id() const;

    detail::Algebra& algebra() const;

  private:
    int class_;
    std::vector<Generator> gens_;
    std::vector<int> weights_;
    std::vector<char> flat_;
    mutable std::unique_ptr<detail::Algebra> algebra_;
};

// Weight of a bracket term under the context's generator weights.
int term_weight(const TermPtr& t, const NilContext& ctx);

// Normal form: product of left-normed basic commutators sorted by
// (weight, leaf sequence), weight > class deleted, flat relations applied.
// Two words are equal in the modeled group iff their normal forms match.
GroupWord collect(const GroupWord& w, const NilContext& ctx);

bool equal_in(const GroupWord& a, const GroupWord& b, const NilContext& ctx);

struct IdentityReport {
    struct Entry {
        std::string name;
        int pass = 0;
        int fail = 0;
    };
    int nil_class = 0;
    int trials = 0;
    unsigned long long seed = 0;
    std::vector<Entry> entries;
    bool all_passed() const;
};

// Checks the four commutator identities on random words via collect.
IdentityReport verify_group_identities(int nil_class, int trials, unsigned long long seed);

// alpha^n beta^n prod_{i=1}^{n-1} [beta, alpha^i]; equals (alpha beta)^n
// under collect when beta is flat.
GroupWord expand_power(const Generator& alpha, const Generator& beta, long n,
                       const NilContext& ctx);

// prod_{i=1}^{n-1} c_i(beta, alpha, ..., alpha)^{C(n, i+1)} with c_i
// left-normed; terms of weight > class are deleted.
GroupWord expand_bracket_product(const Generator& alpha, const Generator& beta, long n,
                                 const NilContext& ctx);

// (sum_{i=j}^{n-1} C(i,j), C(n,j+1)); the two components agree.
std::pair<BigInt, BigInt> hockey_stick(long n, long j);

// v_p(C(n,k)) by carry counting.
int binom_p_valuation(const BigInt& n, const BigInt& k, long p);

// Registers two fresh flat generators of weights 3 and 2 and returns their
// product, the composite element fed to nilpotency_vanishing.
GroupWord make_composite_beta(NilContext& ctx);

// collect(c_{n-1}(beta, f_1, ..., f_{n-1})) at class n; identity whenever
// beta is a product of flat generators of weights 3 and 2.
GroupWord nilpotency_vanishing(const GroupWord& beta, const std::vector<Generator>& fs,
                               const NilContext& ctx);

}  // namespace samelson::commcalc
