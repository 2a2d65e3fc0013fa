#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "samelson/collect.hpp"

using namespace samelson::commcalc;

namespace {

GroupWord gw(const Generator& g, long e = 1) { return GroupWord::from_gen(g, e); }

}  // namespace

TEST_CASE("word algebra basics") {
    NilContext ctx(3);
    Generator a = ctx.add_generator("a");
    Generator b = ctx.add_generator("b");

    CHECK(gw(a).to_string() == "g0");
    CHECK(mul(gw(a), inv(gw(a))).factors().size() == 0);  // adjacent merge cancels
    CHECK(pow(gw(a), 5).factors().front().exponent == samelson::BigInt(5));
    CHECK(word_equal_syntactic(conj(gw(a), gw(b)),
                               mul(inv(gw(b)), mul(gw(a), gw(b)))));
    CHECK(comm(gw(a), gw(b)).factors().size() == 4);
}

TEST_CASE("collect produces the frozen normal forms") {
    NilContext ctx(4);
    Generator a = ctx.add_generator("a");
    Generator b = ctx.add_generator("b");

    CHECK(collect(comm(gw(a), gw(b)), ctx).to_string() == "[g1,g0]^-1");
    const GroupWord ab7 = pow(mul(gw(a), gw(b)), 7);
    CHECK(collect(ab7, ctx).to_string() ==
          "g0^7*g1^7*[g1,g0]^21*[[g1,g0],g0]^35*[[g1,g0],g1]^91*"
          "[[[g1,g0],g0],g0]^35*[[[g1,g0],g0],g1]^175*[[[g1,g0],g1],g1]^175");
}

TEST_CASE("collect is idempotent and detects group equality") {
    NilContext ctx(5);
    Generator a = ctx.add_generator("a");
    Generator b = ctx.add_generator("b");
    const GroupWord w = mul(comm(gw(a), gw(b)), pow(mul(gw(b), gw(a)), 3));
    const GroupWord nf = collect(w, ctx);
    CHECK(word_equal_syntactic(nf, collect(nf, ctx)));
    CHECK(equal_in(w, nf, ctx));
    // inverse identity [a,b]^{-1} = [b,a]
    CHECK(equal_in(inv(comm(gw(a), gw(b))), comm(gw(b), gw(a)), ctx));
    // left/right expansion identities on single letters
    Generator c = ctx.add_generator("c");
    const GroupWord lhs = comm(mul(gw(a), gw(c)), gw(b));
    const GroupWord rhs = mul(conj(comm(gw(a), gw(b)), gw(c)), comm(gw(c), gw(b)));
    CHECK(equal_in(lhs, rhs, ctx));
}

TEST_CASE("abelianization at class 1") {
    NilContext ctx(1);
    Generator a = ctx.add_generator("a");
    Generator b = ctx.add_generator("b");
    CHECK(collect(comm(gw(a), gw(b)), ctx).is_identity());
    CHECK(equal_in(mul(gw(a), gw(b)), mul(gw(b), gw(a)), ctx));
}

TEST_CASE("flat generators commute with each other") {
    NilContext ctx(4);
    Generator x = ctx.add_flat_generator("x");
    Generator y = ctx.add_flat_generator("y");
    CHECK(collect(comm(gw(x), gw(y)), ctx).is_identity());
    Generator a = ctx.add_generator("a");
    CHECK_FALSE(collect(comm(gw(x), gw(a)), ctx).is_identity());
}

TEST_CASE("random identity suite passes") {
    auto rep = verify_group_identities(4, 60, 12345u);
    CHECK(rep.entries.size() == 4);
    CHECK(rep.all_passed());
    for (const auto& e : rep.entries) CHECK(e.pass == 60);
}

TEST_CASE("power expansion lemma") {
    NilContext ctx(3);
    Generator a = ctx.add_generator("alpha");
    Generator b = ctx.add_flat_generator("beta");
    CHECK(expand_power(a, b, 3, ctx).to_string() ==
          "g0^3*g1^2*g0^-1*g1*g0*g1^-1*g0^-2*g1*g0^2");
    for (long n : {1L, 2L, 3L, 7L, 12L})
        CHECK(equal_in(pow(mul(gw(a), gw(b)), n), expand_power(a, b, n, ctx), ctx));
    // beta must be flat
    NilContext ctx2(3);
    Generator a2 = ctx2.add_generator("a");
    Generator b2 = ctx2.add_generator("b");
    CHECK_THROWS_WITH_AS(expand_power(a2, b2, 2, ctx2),
                         "hypothesis violated: beta is not flat", std::invalid_argument);
}

TEST_CASE("bracket product lemma") {
    NilContext ctx(3);
    Generator a = ctx.add_generator("alpha");
    Generator b = ctx.add_flat_generator("beta");
    CHECK(expand_bracket_product(a, b, 5, ctx).to_string() ==
          "[g1,g0]^10*[[g1,g0],g0]^10");
    for (long n : {2L, 3L, 6L, 11L}) {
        GroupWord lhs;
        for (long i = 1; i < n; ++i) lhs = mul(lhs, comm(gw(b), pow(gw(a), i)));
        CHECK(equal_in(lhs, expand_bracket_product(a, b, n, ctx), ctx));
    }
    CHECK_THROWS_AS(expand_bracket_product(a, b, 1, ctx), std::invalid_argument);
}

TEST_CASE("unknown generators are rejected") {
    NilContext ctx(3);
    ctx.add_generator("a");
    const Generator foreign{7, "x"};  // id never registered in ctx
    CHECK_THROWS_WITH_AS(collect(gw(foreign), ctx), "unknown generator",
                         std::invalid_argument);
}

TEST_CASE("hockey stick and binomial valuation") {
    for (long n = 1; n <= 40; ++n)
        for (long j = 0; j < n; ++j) {
            auto [lhs, rhs] = hockey_stick(n, j);
            CHECK(lhs == rhs);
        }
    CHECK(binom_p_valuation(9, 3, 3) == 1);   // C(9,3) = 84
    CHECK(binom_p_valuation(9, 1, 3) == 2);   // C(9,1) = 9
    CHECK(binom_p_valuation(25, 5, 5) == 1);  // C(25,5) = 53130
    CHECK(binom_p_valuation(7, 3, 7) == 1);
    CHECK(binom_p_valuation(10, 5, 3) == 2);  // C(10,5) = 252
}

TEST_CASE("iterated bracket vanishing for the composite element") {
    for (int n : {2, 3, 4}) {
        NilContext ctx(n);
        GroupWord beta = make_composite_beta(ctx);
        CHECK(beta.to_string() == "g0*g1");
        std::vector<Generator> fs;
        for (int i = 1; i < n; ++i) fs.push_back(ctx.add_generator("f"));
        CHECK(nilpotency_vanishing(beta, fs, ctx).is_identity());
    }
    // Raising the cutoff exposes a nonvanishing instance.
    NilContext ctx(6);
    GroupWord w = make_composite_beta(ctx);
    for (int i = 1; i < 4; ++i) w = comm(w, gw(ctx.add_generator("f")));
    CHECK_FALSE(collect(w, ctx).is_identity());
}

TEST_CASE("nilpotency_vanishing validates its inputs") {
    NilContext ctx(3);
    Generator a = ctx.add_generator("a");
    std::vector<Generator> fs = {a, a};
    CHECK_THROWS_WITH_AS(nilpotency_vanishing(gw(a), fs, ctx),
                         "hypothesis violated: beta is not flat", std::invalid_argument);
}
