#pragma once

#include <memory>
#include <string>
#include <vector>

#include "samelson/bigint.hpp"

namespace samelson::commcalc {

struct Generator {
    int id = -1;
    std::string label;
};

class CommutatorTerm;
using TermPtr = std::shared_ptr<const CommutatorTerm>;

// A formal bracket expression: either a single generator or [left, right].
class CommutatorTerm {
  public:
    static TermPtr leaf(const Generator& g);
    static TermPtr bracket(const TermPtr& left, const TermPtr& right);

    bool is_leaf() const { return !left_; }
    int gen_id() const { return gen_id_; }
    const TermPtr& left() const { return left_; }
    const TermPtr& right() const { return right_; }
    int leaf_count() const { return leaf_count_; }

    // Generator ids of the leaves, left to right.
    void collect_leaves(std::vector<int>& out) const;

    std::string to_string() const;
    std::string to_string(const std::vector<std::string>& labels_by_id) const;

  private:
    CommutatorTerm() = default;
    int gen_id_ = -1;
    TermPtr left_, right_;
    int leaf_count_ = 1;
};

bool term_equal(const TermPtr& a, const TermPtr& b);
// Total order used for display and normal forms: leaf count first, then
// structure. Returns negative, zero or positive.
int term_compare(const TermPtr& a, const TermPtr& b);

struct Factor {
    TermPtr term;
    BigInt exponent;
};

class GroupWord {
  public:
    GroupWord() = default;
    static GroupWord from_term(const TermPtr& t, BigInt e = 1);
    static GroupWord from_gen(const Generator& g, BigInt e = 1);

    const std::vector<Factor>& factors() const { return factors_; }
    bool is_identity() const { return factors_.empty(); }

    // Appends t^e, merging with the trailing factor when terms match.
    GroupWord& append(const TermPtr& t, const BigInt& e);

    std::string to_string() const;

  private:
    std::vector<Factor> factors_;
};

GroupWord mul(const GroupWord& w1, const GroupWord& w2);
GroupWord inv(const GroupWord& w);
// w^e; for multi-factor words e must fit in a long (repeated concatenation).
GroupWord pow(const GroupWord& w, const BigInt& e);
// [w1, w2] = w1^{-1} w2^{-1} w1 w2, unreduced.
GroupWord comm(const GroupWord& w1, const GroupWord& w2);
// b^{-1} a b.
GroupWord conj(const GroupWord& a, const GroupWord& b);

bool word_equal_syntactic(const GroupWord& a, const GroupWord& b);

}  // namespace samelson::commcalc
