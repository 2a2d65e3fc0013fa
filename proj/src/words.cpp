#include "samelson/words.hpp"

#include <sstream>
#include <stdexcept>

namespace samelson::commcalc {

TermPtr CommutatorTerm::leaf(const Generator& g) {
    if (g.id < 0) throw std::invalid_argument("generator has no id");
    auto t = std::shared_ptr<CommutatorTerm>(new CommutatorTerm());
    t->gen_id_ = g.id;
    t->leaf_count_ = 1;
    return t;
}

TermPtr CommutatorTerm::bracket(const TermPtr& left, const TermPtr& right) {
    if (!left || !right) throw std::invalid_argument("null bracket argument");
    auto t = std::shared_ptr<CommutatorTerm>(new CommutatorTerm());
    t->left_ = left;
    t->right_ = right;
    t->leaf_count_ = left->leaf_count_ + right->leaf_count_;
    return t;
}

void CommutatorTerm::collect_leaves(std::vector<int>& out) const {
    if (is_leaf()) {
        out.push_back(gen_id_);
        return;
    }
    left_->collect_leaves(out);
    right_->collect_leaves(out);
}

std::string CommutatorTerm::to_string() const {
    if (is_leaf()) return "g" + std::to_string(gen_id_);
    return "[" + left_->to_string() + "," + right_->to_string() + "]";
}

std::string CommutatorTerm::to_string(const std::vector<std::string>& labels) const {
    if (is_leaf()) {
        if (gen_id_ >= 0 && gen_id_ < (int)labels.size() && !labels[gen_id_].empty())
            return labels[gen_id_];
        return "g" + std::to_string(gen_id_);
    }
    return "[" + left_->to_string(labels) + "," + right_->to_string(labels) + "]";
}

bool term_equal(const TermPtr& a, const TermPtr& b) {
    if (a.get() == b.get()) return true;
    if (a->is_leaf() != b->is_leaf()) return false;
    if (a->is_leaf()) return a->gen_id() == b->gen_id();
    return term_equal(a->left(), b->left()) && term_equal(a->right(), b->right());
}

int term_compare(const TermPtr& a, const TermPtr& b) {
    if (a->leaf_count() != b->leaf_count())
        return a->leaf_count() < b->leaf_count() ? -1 : 1;
    if (a->is_leaf() != b->is_leaf()) return a->is_leaf() ? -1 : 1;
    if (a->is_leaf()) {
        if (a->gen_id() != b->gen_id()) return a->gen_id() < b->gen_id() ? -1 : 1;
        return 0;
    }
    if (int c = term_compare(a->left(), b->left())) return c;
    return term_compare(a->right(), b->right());
}

GroupWord GroupWord::from_term(const TermPtr& t, BigInt e) {
    GroupWord w;
    w.append(t, e);
    return w;
}

GroupWord GroupWord::from_gen(const Generator& g, BigInt e) {
    return from_term(CommutatorTerm::leaf(g), std::move(e));
}

GroupWord& GroupWord::append(const TermPtr& t, const BigInt& e) {
    if (e == 0) return *this;
    if (!factors_.empty() && term_equal(factors_.back().term, t)) {
        factors_.back().exponent += e;
        if (factors_.back().exponent == 0) factors_.pop_back();
        return *this;
    }
    factors_.push_back({t, e});
    return *this;
}

std::string GroupWord::to_string() const {
    if (factors_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& f : factors_) {
        if (!first) os << "*";
        first = false;
        os << f.term->to_string();
        if (f.exponent != 1) os << "^" << f.exponent.str();
    }
    return os.str();
}

GroupWord mul(const GroupWord& w1, const GroupWord& w2) {
    GroupWord r = w1;
    for (const auto& f : w2.factors()) r.append(f.term, f.exponent);
    return r;
}

GroupWord inv(const GroupWord& w) {
    GroupWord r;
    const auto& fs = w.factors();
    for (auto it = fs.rbegin(); it != fs.rend(); ++it) r.append(it->term, -it->exponent);
    return r;
}

GroupWord pow(const GroupWord& w, const BigInt& e) {
    if (e == 0 || w.is_identity()) return GroupWord();
    if (w.factors().size() == 1)
        return GroupWord::from_term(w.factors()[0].term, w.factors()[0].exponent * e);
    BigInt a = e < 0 ? BigInt(-e) : e;
    if (a > 4096) throw std::invalid_argument("power of a multi-factor word is too large");
    const GroupWord base = e < 0 ? inv(w) : w;
    GroupWord r;
    for (BigInt i = 0; i < a; ++i) r = mul(r, base);
    return r;
}

GroupWord comm(const GroupWord& w1, const GroupWord& w2) {
    return mul(mul(inv(w1), inv(w2)), mul(w1, w2));
}

GroupWord conj(const GroupWord& a, const GroupWord& b) {
    return mul(mul(inv(b), a), b);
}

bool word_equal_syntactic(const GroupWord& a, const GroupWord& b) {
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    if (fa.size() != fb.size()) return false;
    for (size_t i = 0; i < fa.size(); ++i) {
        if (fa[i].exponent != fb[i].exponent) return false;
        if (!term_equal(fa[i].term, fb[i].term)) return false;
    }
    return true;
}

}  // namespace samelson::commcalc
