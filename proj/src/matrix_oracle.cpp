#include "samelson/matrix_oracle.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

namespace samelson::oracle {

namespace {

long long mod_norm(long long v, long long m) {
    v %= m;
    if (v < 0) v += m;
    return v;
}

void check_compatible(const UnitriangularElement& x, const UnitriangularElement& y) {
    if (x.size() != y.size() || x.modulus() != y.modulus())
        throw std::invalid_argument("size/modulus mismatch");
}

}  // namespace

UnitriangularElement::UnitriangularElement(int size, long long modulus)
    : d_(size), m_(modulus), a_(size * size, 0) {
    if (size < 2) throw std::invalid_argument("size must be at least 2");
    if (modulus < 2) throw std::invalid_argument("modulus must be at least 2");
    for (int i = 0; i < d_; ++i) a_[i * d_ + i] = 1;
}

UnitriangularElement UnitriangularElement::identity(int size, long long modulus) {
    return UnitriangularElement(size, modulus);
}

UnitriangularElement UnitriangularElement::elementary(int size, long long modulus, int i,
                                                      int j, long long v) {
    UnitriangularElement e(size, modulus);
    e.set(i, j, v);
    return e;
}

long long UnitriangularElement::at(int i, int j) const {
    if (i < 0 || j < 0 || i >= d_ || j >= d_) throw std::out_of_range("index");
    return a_[i * d_ + j];
}

void UnitriangularElement::set(int i, int j, long long v) {
    if (i < 0 || j < 0 || i >= d_ || j >= d_) throw std::out_of_range("index");
    if (i >= j) throw std::invalid_argument("only entries above the diagonal may be set");
    a_[i * d_ + j] = mod_norm(v, m_);
}

bool UnitriangularElement::operator==(const UnitriangularElement& o) const {
    return d_ == o.d_ && m_ == o.m_ && a_ == o.a_;
}

bool UnitriangularElement::is_identity() const {
    return *this == identity(d_, m_);
}

std::string UnitriangularElement::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < d_; ++i) {
        os << (i ? "; " : "[");
        for (int j = 0; j < d_; ++j) os << (j ? " " : "") << a_[i * d_ + j];
    }
    os << "]";
    return os.str();
}

UnitriangularElement ut_mul(const UnitriangularElement& x, const UnitriangularElement& y) {
    check_compatible(x, y);
    const int d = x.size();
    const long long m = x.modulus();
    UnitriangularElement r(d, m);
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            __int128 s = 0;
            for (int k = i; k <= j; ++k) s += (__int128)x.at(i, k) * y.at(k, j);
            r.set(i, j, (long long)(s % m));
        }
    return r;
}

UnitriangularElement ut_inv(const UnitriangularElement& x) {
    const int d = x.size();
    const long long m = x.modulus();
    // Neumann series: (I + N)^-1 = I - N + N^2 - ... with N nilpotent.
    // Work with plain matrices to avoid the unit diagonal.
    std::vector<long long> N(d * d, 0), P(d * d, 0), R(d * d, 0);
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) N[i * d + j] = x.at(i, j);
    for (int i = 0; i < d; ++i) R[i * d + i] = 1;
    P = N;
    int sign = -1;
    for (int k = 1; k < d; ++k) {
        for (int i = 0; i < d * d; ++i)
            R[i] = mod_norm(R[i] + sign * P[i], m);
        // P <- P * N
        std::vector<long long> Q(d * d, 0);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                __int128 s = 0;
                for (int t = 0; t < d; ++t) s += (__int128)P[i * d + t] * N[t * d + j];
                Q[i * d + j] = (long long)(s % m);
            }
        P = std::move(Q);
        sign = -sign;
    }
    UnitriangularElement r(d, m);
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) r.set(i, j, R[i * d + j]);
    return r;
}

UnitriangularElement ut_comm(const UnitriangularElement& x, const UnitriangularElement& y) {
    return ut_mul(ut_mul(ut_inv(x), ut_inv(y)), ut_mul(x, y));
}

UnitriangularElement ut_pow(const UnitriangularElement& x, const BigInt& e) {
    UnitriangularElement base = e < 0 ? ut_inv(x) : x;
    BigInt n = e < 0 ? BigInt(-e) : e;
    UnitriangularElement r = UnitriangularElement::identity(x.size(), x.modulus());
    while (n > 0) {
        if ((n & 1) != 0) r = ut_mul(r, base);
        base = ut_mul(base, base);
        n >>= 1;
    }
    return r;
}

bool in_gamma(const UnitriangularElement& x, int k) {
    for (int i = 0; i < x.size(); ++i)
        for (int j = i + 1; j < x.size() && j - i < k; ++j)
            if (x.at(i, j) != 0) return false;
    return true;
}

namespace {

UnitriangularElement eval_term(const commcalc::TermPtr& t, const Assignment& asg) {
    if (t->is_leaf()) {
        auto it = asg.images.find(t->gen_id());
        if (it == asg.images.end()) throw std::invalid_argument("unknown generator");
        return it->second;
    }
    return ut_comm(eval_term(t->left(), asg), eval_term(t->right(), asg));
}

}  // namespace

UnitriangularElement eval_word(const commcalc::GroupWord& w, const Assignment& asg) {
    UnitriangularElement r = UnitriangularElement::identity(asg.size, asg.modulus);
    for (const auto& f : w.factors())
        r = ut_mul(r, ut_pow(eval_term(f.term, asg), f.exponent));
    return r;
}

bool OracleReport::all_passed() const {
    for (const auto& e : entries)
        if (e.fail > 0 || e.pass == 0) return false;
    return true;
}

struct OracleRng::Impl {
    std::mt19937_64 rng;
};

OracleRng::OracleRng(unsigned long long seed) : impl_(new Impl{std::mt19937_64(seed)}) {}
OracleRng::~OracleRng() = default;

UnitriangularElement OracleRng::random_element(int d, long long m, int gamma_k) {
    UnitriangularElement r(d, m);
    std::uniform_int_distribution<long long> dist(0, m - 1);
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            long long v = dist(impl_->rng);
            if (j - i >= gamma_k) r.set(i, j, v);
        }
    return r;
}

Assignment random_assignment(const commcalc::NilContext& ctx, OracleRng& rng, int d,
                             long long m) {
    Assignment asg;
    asg.size = d;
    asg.modulus = m;
    for (const auto& g : ctx.generators()) {
        int k = ctx.generator_weight(g.id);
        if (ctx.is_flat(g.id) && k < 2) k = 2;
        asg.images.emplace(g.id, rng.random_element(d, m, k));
    }
    return asg;
}

OracleReport verify_identities(int d, long long m, int trials, unsigned long long seed) {
    if (d < 2) throw std::invalid_argument("d must be at least 2");
    if (trials < 1) throw std::invalid_argument("trials must be positive");
    OracleRng rng(seed);
    OracleReport rep;
    rep.size = d;
    rep.modulus = m;
    rep.trials = trials;
    rep.seed = seed;
    rep.entries = {{"conjugation form [a,b] = a^-1 * a^b", 0, 0},
                   {"inverse [a,b]^-1 = [b,a]", 0, 0},
                   {"left product [a*a',b]", 0, 0},
                   {"right product [a,b*b']", 0, 0}};
    for (int t = 0; t < trials; ++t) {
        auto A = rng.random_element(d, m);
        auto A2 = rng.random_element(d, m);
        auto B = rng.random_element(d, m);
        auto B2 = rng.random_element(d, m);
        auto conj = [](const UnitriangularElement& a, const UnitriangularElement& b) {
            return ut_mul(ut_mul(ut_inv(b), a), b);
        };
        auto Cab = ut_comm(A, B);
        {
            bool ok = Cab == ut_mul(ut_inv(A), conj(A, B));
            (ok ? rep.entries[0].pass : rep.entries[0].fail)++;
        }
        {
            bool ok = ut_inv(Cab) == ut_comm(B, A);
            (ok ? rep.entries[1].pass : rep.entries[1].fail)++;
        }
        {
            auto lhs = ut_comm(ut_mul(A, A2), B);
            auto rhs1 = ut_mul(conj(Cab, A2), ut_comm(A2, B));
            auto rhs2 = ut_mul(ut_mul(Cab, ut_inv(ut_comm(A2, Cab))), ut_comm(A2, B));
            bool ok = lhs == rhs1 && lhs == rhs2;
            (ok ? rep.entries[2].pass : rep.entries[2].fail)++;
        }
        {
            auto lhs = ut_comm(A, ut_mul(B, B2));
            auto rhs1 = ut_mul(ut_comm(A, B2), conj(Cab, B2));
            auto rhs2 = ut_mul(ut_mul(ut_comm(A, B2), Cab), ut_comm(Cab, B2));
            bool ok = lhs == rhs1 && lhs == rhs2;
            (ok ? rep.entries[3].pass : rep.entries[3].fail)++;
        }
    }
    return rep;
}

OracleReport check_expansion(ExpansionLemma lemma, int d, long long m, long n, int trials,
                             unsigned long long seed) {
    if (trials < 1) throw std::invalid_argument("trials must be positive");
    if (lemma != ExpansionLemma::NilVanishing && d != 4)
        throw std::invalid_argument("invalid d for the requested lemma");
    if (lemma == ExpansionLemma::NilVanishing && (n < 2 || d != n + 1))
        throw std::invalid_argument("invalid d for the requested lemma");
    if (lemma != ExpansionLemma::NilVanishing && n < 1)
        throw std::invalid_argument("n must be at least 1");
    OracleRng rng(seed);
    OracleReport rep;
    rep.size = d;
    rep.modulus = m;
    rep.trials = trials;
    rep.seed = seed;
    OracleReport::Entry entry;
    switch (lemma) {
        case ExpansionLemma::PowerExpansion:
            entry.name = "(alpha*beta)^n power expansion, n=" + std::to_string(n);
            break;
        case ExpansionLemma::BracketProduct:
            entry.name = "bracket product binomial expansion, n=" + std::to_string(n);
            break;
        case ExpansionLemma::NilVanishing:
            entry.name = "iterated commutator vanishing, n=" + std::to_string(n);
            break;
    }
    for (int t = 0; t < trials; ++t) {
        bool ok = false;
        if (lemma == ExpansionLemma::PowerExpansion) {
            auto alpha = rng.random_element(d, m);
            auto beta = rng.random_element(d, m, 2);
            auto lhs = ut_pow(ut_mul(alpha, beta), n);
            auto rhs = ut_mul(ut_pow(alpha, n), ut_pow(beta, n));
            for (long i = 1; i <= n - 1; ++i)
                rhs = ut_mul(rhs, ut_comm(beta, ut_pow(alpha, i)));
            ok = lhs == rhs;
        } else if (lemma == ExpansionLemma::BracketProduct) {
            auto alpha = rng.random_element(d, m);
            auto beta = rng.random_element(d, m, 2);
            auto lhs = UnitriangularElement::identity(d, m);
            for (long i = 1; i <= n - 1; ++i)
                lhs = ut_mul(lhs, ut_comm(beta, ut_pow(alpha, i)));
            auto rhs = UnitriangularElement::identity(d, m);
            auto c = beta;
            for (long i = 1; i <= n - 1; ++i) {
                c = ut_comm(c, alpha);
                rhs = ut_mul(rhs, ut_pow(c, binomial(n, i + 1)));
            }
            ok = lhs == rhs;
        } else {
            auto gamma = rng.random_element(d, m, 3);
            auto gamma2 = rng.random_element(d, m, 2);
            auto c = ut_mul(gamma, gamma2);
            for (long i = 1; i <= n - 1; ++i) c = ut_comm(c, rng.random_element(d, m));
            ok = c.is_identity();
        }
        (ok ? entry.pass : entry.fail)++;
    }
    rep.entries.push_back(entry);
    return rep;
}

}  // namespace samelson::oracle
