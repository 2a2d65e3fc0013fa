#include "samelson/collect.hpp"

#include <random>
#include <stdexcept>

#include "algebra.hpp"

namespace samelson::commcalc {

NilContext::NilContext(int nil_class) : class_(nil_class) {
    if (nil_class < 1) throw std::invalid_argument("class must be positive");
}

NilContext::~NilContext() = default;

Generator NilContext::add_generator(const std::string& label) {
    Generator g{(int)gens_.size(), label};
    gens_.push_back(g);
    weights_.push_back(1);
    flat_.push_back(0);
    algebra_.reset();
    return g;
}

Generator NilContext::add_flat_generator(const std::string& label, int weight) {
    if (weight < 1) throw std::invalid_argument("weight must be positive");
    Generator g{(int)gens_.size(), label};
    gens_.push_back(g);
    weights_.push_back(weight);
    flat_.push_back(1);
    algebra_.reset();
    return g;
}

bool NilContext::has_generator(int id) const {
    return id >= 0 && id < (int)gens_.size();
}

bool NilContext::is_flat(int id) const {
    if (!has_generator(id)) throw std::invalid_argument("unknown generator");
    return flat_[id] != 0;
}

int NilContext::generator_weight(int id) const {
    if (!has_generator(id)) throw std::invalid_argument("unknown generator");
    return weights_[id];
}

std::vector<std::string> NilContext::labels_by_id() const {
    std::vector<std::string> out(gens_.size());
    for (const auto& g : gens_) out[g.id] = g.label;
    return out;
}

detail::Algebra& NilContext::algebra() const {
    if (!algebra_) algebra_ = std::make_unique<detail::Algebra>(class_, gens_, weights_, flat_);
    return *algebra_;
}

namespace {

void check_registered(const GroupWord& w, const NilContext& ctx) {
    std::vector<int> leaves;
    for (const auto& f : w.factors()) {
        leaves.clear();
        f.term->collect_leaves(leaves);
        for (int id : leaves)
            if (!ctx.has_generator(id)) throw std::invalid_argument("unknown generator");
    }
}

}  // namespace

int term_weight(const TermPtr& t, const NilContext& ctx) {
    std::vector<int> leaves;
    t->collect_leaves(leaves);
    int w = 0;
    for (int id : leaves) w += ctx.generator_weight(id);
    return w;
}

GroupWord collect(const GroupWord& w, const NilContext& ctx) {
    check_registered(w, ctx);
    auto& alg = ctx.algebra();
    auto factors = alg.extract_normal_form(alg.eval_word(w));
    GroupWord out;
    for (const auto& f : factors) out.append(f.term, f.exponent);
    return out;
}

bool equal_in(const GroupWord& a, const GroupWord& b, const NilContext& ctx) {
    check_registered(a, ctx);
    check_registered(b, ctx);
    auto& alg = ctx.algebra();
    return alg.eval_word(a) == alg.eval_word(b);
}

bool IdentityReport::all_passed() const {
    for (const auto& e : entries)
        if (e.fail > 0 || e.pass == 0) return false;
    return true;
}

IdentityReport verify_group_identities(int nil_class, int trials, unsigned long long seed) {
    if (nil_class < 1) throw std::invalid_argument("class must be positive");
    if (trials < 1) throw std::invalid_argument("trials must be positive");
    NilContext ctx(nil_class);
    std::vector<Generator> gens = {ctx.add_generator("x"), ctx.add_generator("y"),
                                   ctx.add_generator("z")};
    auto& alg = ctx.algebra();
    using Poly = detail::Algebra::Poly;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> len_dist(1, 3), gen_dist(0, 2), exp_dist(0, 3);

    auto random_word = [&]() {
        GroupWord w;
        int len = len_dist(rng);
        for (int i = 0; i < len; ++i) {
            int e = exp_dist(rng) - 2;  // {-2,-1,0,1} -> remap 0 to 2
            if (e == 0) e = 2;
            w.append(CommutatorTerm::leaf(gens[gen_dist(rng)]), e);
        }
        return w;
    };

    IdentityReport report;
    report.nil_class = nil_class;
    report.trials = trials;
    report.seed = seed;
    report.entries = {{"conjugation form [a,b] = a^-1 * a^b", 0, 0},
                      {"inverse [a,b]^-1 = [b,a]", 0, 0},
                      {"left product [a*a',b]", 0, 0},
                      {"right product [a,b*b']", 0, 0}};

    auto cm = [&](const Poly& xi, const Poly& yi, const Poly& x, const Poly& y) {
        return alg.mul(alg.mul(xi, yi), alg.mul(x, y));
    };
    for (int t = 0; t < trials; ++t) {
        GroupWord wa = random_word(), wa2 = random_word(), wb = random_word(),
                  wb2 = random_word();
        Poly A = alg.eval_word(wa), A2 = alg.eval_word(wa2), B = alg.eval_word(wb),
             B2 = alg.eval_word(wb2);
        Poly Ai = alg.unit_pow(A, -1), A2i = alg.unit_pow(A2, -1),
             Bi = alg.unit_pow(B, -1), B2i = alg.unit_pow(B2, -1);
        Poly Cab = cm(Ai, Bi, A, B);
        Poly Cabi = alg.unit_pow(Cab, -1);

        // (1) [a,b] = a^-1 * (b^-1 a b)
        {
            Poly rhs = alg.mul(Ai, alg.mul(alg.mul(Bi, A), B));
            (Cab == rhs ? report.entries[0].pass : report.entries[0].fail)++;
        }
        // (2) [a,b]^-1 = [b,a]
        {
            Poly Cba = cm(Bi, Ai, B, A);
            (Cabi == Cba ? report.entries[1].pass : report.entries[1].fail)++;
        }
        // (3) [a*a',b] = ([a,b])^{a'} * [a',b] = [a,b]*[a',[a,b]]^-1*[a',b]
        {
            Poly AA2 = alg.mul(A, A2);
            Poly AA2i = alg.unit_pow(AA2, -1);
            Poly lhs = cm(AA2i, Bi, AA2, B);
            Poly Ca2b = cm(A2i, Bi, A2, B);
            Poly rhs1 = alg.mul(alg.mul(A2i, alg.mul(Cab, A2)), Ca2b);
            Poly Ca2Cab = cm(A2i, Cabi, A2, Cab);
            Poly rhs2 = alg.mul(alg.mul(Cab, alg.unit_pow(Ca2Cab, -1)), Ca2b);
            bool ok = (lhs == rhs1) && (lhs == rhs2);
            (ok ? report.entries[2].pass : report.entries[2].fail)++;
        }
        // (4) [a,b*b'] = [a,b'] * ([a,b])^{b'} = [a,b']*[a,b]*[[a,b],b']
        {
            Poly BB2 = alg.mul(B, B2);
            Poly BB2i = alg.unit_pow(BB2, -1);
            Poly lhs = cm(Ai, BB2i, A, BB2);
            Poly Cab2 = cm(Ai, B2i, A, B2);
            Poly rhs1 = alg.mul(Cab2, alg.mul(B2i, alg.mul(Cab, B2)));
            Poly CCabb2 = cm(Cabi, B2i, Cab, B2);
            Poly rhs2 = alg.mul(alg.mul(Cab2, Cab), CCabb2);
            bool ok = (lhs == rhs1) && (lhs == rhs2);
            (ok ? report.entries[3].pass : report.entries[3].fail)++;
        }
    }
    return report;
}

GroupWord expand_power(const Generator& alpha, const Generator& beta, long n,
                       const NilContext& ctx) {
    if (!ctx.has_generator(alpha.id) || !ctx.has_generator(beta.id))
        throw std::invalid_argument("unknown generator");
    if (!ctx.is_flat(beta.id))
        throw std::invalid_argument("hypothesis violated: beta is not flat");
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    TermPtr a = CommutatorTerm::leaf(alpha);
    TermPtr b = CommutatorTerm::leaf(beta);
    GroupWord w;
    w.append(a, n);
    w.append(b, n);
    for (long i = 1; i <= n - 1; ++i) {
        GroupWord ai = GroupWord::from_term(a, i);
        w = mul(w, comm(GroupWord::from_term(b), ai));
    }
    return w;
}

GroupWord expand_bracket_product(const Generator& alpha, const Generator& beta, long n,
                                 const NilContext& ctx) {
    if (!ctx.has_generator(alpha.id) || !ctx.has_generator(beta.id))
        throw std::invalid_argument("unknown generator");
    if (!ctx.is_flat(beta.id))
        throw std::invalid_argument("hypothesis violated: beta is not flat");
    if (n < 2) throw std::invalid_argument("empty range: n must be at least 2");
    TermPtr a = CommutatorTerm::leaf(alpha);
    TermPtr c = CommutatorTerm::leaf(beta);
    GroupWord w;
    for (long i = 1; i <= n - 1; ++i) {
        c = CommutatorTerm::bracket(c, a);
        if (term_weight(c, ctx) > ctx.nil_class()) break;
        w.append(c, binomial(n, i + 1));
    }
    return w;
}

std::pair<BigInt, BigInt> hockey_stick(long n, long j) {
    if (j < 0 || j > n - 1) throw std::invalid_argument("empty range");
    BigInt sum = 0;
    for (long i = j; i <= n - 1; ++i) sum += binomial(i, j);
    return {sum, binomial(n, j + 1)};
}

int binom_p_valuation(const BigInt& n, const BigInt& k, long p) {
    if (!is_small_prime(p)) throw std::invalid_argument("p must be prime");
    if (k < 0 || k > n) throw std::invalid_argument("k out of range");
    // Kummer: v_p(C(n,k)) is the number of carries adding k and n-k base p.
    BigInt a = k, b = n - k;
    int carries = 0, carry = 0;
    while (a > 0 || b > 0 || carry > 0) {
        long da = (long)(a % p), db = (long)(b % p);
        if (da + db + carry >= p) {
            ++carries;
            carry = 1;
        } else {
            carry = 0;
        }
        a /= p;
        b /= p;
    }
    return carries;
}

GroupWord make_composite_beta(NilContext& ctx) {
    Generator g3 = ctx.add_flat_generator("gamma", 3);
    Generator g2 = ctx.add_flat_generator("gamma_prime", 2);
    GroupWord w;
    w.append(CommutatorTerm::leaf(g3), 1);
    w.append(CommutatorTerm::leaf(g2), 1);
    return w;
}

GroupWord nilpotency_vanishing(const GroupWord& beta, const std::vector<Generator>& fs,
                               const NilContext& ctx) {
    check_registered(beta, ctx);
    std::vector<int> leaves;
    for (const auto& f : beta.factors()) {
        leaves.clear();
        f.term->collect_leaves(leaves);
        for (int id : leaves)
            if (!ctx.is_flat(id))
                throw std::invalid_argument("hypothesis violated: beta is not flat");
    }
    if ((int)fs.size() != ctx.nil_class() - 1)
        throw std::invalid_argument("need exactly class-1 generators");
    GroupWord w = beta;
    for (const auto& f : fs) {
        if (!ctx.has_generator(f.id)) throw std::invalid_argument("unknown generator");
        w = comm(w, GroupWord::from_gen(f));
    }
    return collect(w, ctx);
}

}  // namespace samelson::commcalc
