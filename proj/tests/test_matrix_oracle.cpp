#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "samelson/matrix_oracle.hpp"

using namespace samelson::oracle;
using samelson::commcalc::GroupWord;
using samelson::commcalc::NilContext;

TEST_CASE("unitriangular arithmetic") {
    auto e12 = UnitriangularElement::elementary(3, 7, 0, 1, 1);
    auto e23 = UnitriangularElement::elementary(3, 7, 1, 2, 1);
    auto c = ut_comm(e12, e23);
    // [E12, E23] = I + E13 in UT(3)
    CHECK(c.at(0, 2) == 1);
    CHECK(c.at(0, 1) == 0);
    CHECK(in_gamma(c, 2));
    CHECK_FALSE(in_gamma(e12, 2));

    auto x = ut_mul(e12, e23);
    CHECK(ut_mul(x, ut_inv(x)).is_identity());
    CHECK(ut_pow(x, 0).is_identity());
    CHECK(ut_pow(x, 7) == ut_mul(ut_pow(x, 3), ut_pow(x, 4)));
    CHECK(ut_pow(x, samelson::BigInt(1) << 40) ==
          ut_pow(ut_pow(x, 1 << 20), 1 << 20));
}

TEST_CASE("random elements respect requested depth") {
    OracleRng rng(99);
    for (int k = 1; k <= 3; ++k) {
        auto x = rng.random_element(4, 25, k);
        CHECK(in_gamma(x, k));
    }
}

TEST_CASE("word evaluation is homomorphic") {
    NilContext ctx(3);
    auto a = ctx.add_generator("a");
    auto b = ctx.add_generator("b");
    OracleRng rng(7);
    auto asg = random_assignment(ctx, rng, 4, 27);
    GroupWord wa = GroupWord::from_gen(a), wb = GroupWord::from_gen(b);
    auto lhs = eval_word(samelson::commcalc::mul(wa, wb), asg);
    auto rhs = ut_mul(eval_word(wa, asg), eval_word(wb, asg));
    CHECK(lhs == rhs);
    CHECK(ut_mul(eval_word(samelson::commcalc::inv(wa), asg), eval_word(wa, asg))
              .is_identity());
}

TEST_CASE("identity suite passes on matrices") {
    for (long long m : {9LL, 25LL}) {
        auto rep = verify_identities(5, m, 200, 4242u);
        CHECK(rep.all_passed());
        CHECK(rep.entries.size() == 4);
        for (const auto& e : rep.entries) CHECK(e.pass == 200);
    }
}

TEST_CASE("expansion lemmas hold in UT(4)") {
    for (long long m : {25LL, 27LL, 49LL})
        for (long n : {2L, 5L, 30L}) {
            auto r1 = check_expansion(ExpansionLemma::PowerExpansion, 4, m, n, 40, 11u);
            CHECK(r1.all_passed());
            auto r2 = check_expansion(ExpansionLemma::BracketProduct, 4, m, n, 40, 11u);
            CHECK(r2.all_passed());
        }
}

TEST_CASE("expansion checks validate the matrix size") {
    CHECK_THROWS_WITH_AS(check_expansion(ExpansionLemma::PowerExpansion, 5, 25, 3, 5, 1u),
                         "invalid d for the requested lemma", std::invalid_argument);
    CHECK_THROWS_AS(check_expansion(ExpansionLemma::NilVanishing, 3, 25, 3, 5, 1u),
                    std::invalid_argument);
}

TEST_CASE("iterated brackets vanish in UT(n+1)") {
    for (int n : {2, 3, 4}) {
        auto rep = check_expansion(ExpansionLemma::NilVanishing, n + 1, 25, n, 60, 5u);
        CHECK(rep.all_passed());
    }
}
