#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "samelson/collect.hpp"
#include "samelson/words.hpp"

namespace samelson::oracle {

// Upper unitriangular d x d matrix over Z/mZ.
class UnitriangularElement {
  public:
    UnitriangularElement(int size, long long modulus);
    static UnitriangularElement identity(int size, long long modulus);
    // I + v * E_ij with i < j.
    static UnitriangularElement elementary(int size, long long modulus, int i, int j,
                                           long long v);

    int size() const { return d_; }
    long long modulus() const { return m_; }
    long long at(int i, int j) const;
    void set(int i, int j, long long v);

    bool operator==(const UnitriangularElement& o) const;
    bool is_identity() const;
    std::string to_string() const;

  private:
    int d_;
    long long m_;
    std::vector<long long> a_;  // row-major
};

UnitriangularElement ut_mul(const UnitriangularElement& x, const UnitriangularElement& y);
UnitriangularElement ut_inv(const UnitriangularElement& x);
UnitriangularElement ut_comm(const UnitriangularElement& x, const UnitriangularElement& y);
UnitriangularElement ut_pow(const UnitriangularElement& x, const BigInt& e);

// True when the first k-1 superdiagonals vanish (x lies in gamma_k).
bool in_gamma(const UnitriangularElement& x, int k);

struct Assignment {
    int size = 0;
    long long modulus = 0;
    std::map<int, UnitriangularElement> images;
};

UnitriangularElement eval_word(const commcalc::GroupWord& w, const Assignment& asg);

struct OracleReport {
    struct Entry {
        std::string name;
        int pass = 0;
        int fail = 0;
    };
    int size = 0;
    long long modulus = 0;
    int trials = 0;
    unsigned long long seed = 0;
    std::vector<Entry> entries;
    bool all_passed() const;
};

// Checks the four commutator identities on random unitriangular matrices.
OracleReport verify_identities(int d, long long m, int trials, unsigned long long seed);

enum class ExpansionLemma { PowerExpansion, BracketProduct, NilVanishing };

// Matrix check of the expansion lemmas. PowerExpansion/BracketProduct need
// d = 4 with beta drawn from gamma_2; NilVanishing needs d = n + 1 with the
// composite beta drawn as a gamma_3 times a gamma_2 element.
OracleReport check_expansion(ExpansionLemma lemma, int d, long long m, long n, int trials,
                             unsigned long long seed);

// Seeded random elements, optionally constrained to gamma_k.
class OracleRng {
  public:
    explicit OracleRng(unsigned long long seed);
    ~OracleRng();
    OracleRng(const OracleRng&) = delete;
    OracleRng& operator=(const OracleRng&) = delete;
    UnitriangularElement random_element(int d, long long m, int gamma_k = 1);

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

// Random assignment compatible with a context: flat generators land in
// gamma_max(2, weight), weight-w generators in gamma_w.
Assignment random_assignment(const commcalc::NilContext& ctx, OracleRng& rng, int d,
                             long long m);

}  // namespace samelson::oracle
