#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qsphere/chern.hpp"

#include <random>

using namespace qsphere;

namespace {

const Sigma4q& S() { return Sigma4q::instance(); }

NCPoly gR() { return NCPoly(Word{S().R()}); }
NCPoly ga() { return NCPoly(Word{S().a()}); }
NCPoly gas() { return NCPoly(Word{S().as()}); }
NCPoly gb() { return NCPoly(Word{S().b()}); }

Chain tensor2(const Word& x, const Word& y) {
    Chain c(1);
    c.add_term(TensorWord{x, y}, RatQ(1));
    return c;
}

Chain random_chain(int degree, std::mt19937& rng) {
    std::vector<GenId> letters = {S().R(), S().as(), S().a(), S().bs(), S().b()};
    Chain c(degree);
    for (int t = 0; t < 2; ++t) {
        TensorWord tw;
        for (int l = 0; l <= degree; ++l) {
            Word w(rng() % 3);  // possibly the empty word (the unit)
            for (GenId& g : w) g = letters[rng() % letters.size()];
            tw.push_back(w);
        }
        long k = 1 + static_cast<long>(rng() % 3);
        if (rng() % 2) k = -k;
        c.add_term(tw, RatQ(Rational(k)));
    }
    return c;
}

NCPoly trG() {  // 2 - (1-q^2)^2 R
    LaurentQ c = (LaurentQ(1) - LaurentQ::q(2)) * (LaurentQ(1) - LaurentQ::q(2));
    return NCPoly::unit() * LaurentQ(2) - gR() * c;
}

}  // namespace

TEST_CASE("hochschild boundary on small chains") {
    Word wa{S().a()}, wb{S().b()};
    CHECK(hochschild_boundary(tensor2(wa, wb)) == Chain::from_poly(ga() * gb() - gb() * ga()));
    CHECK(hochschild_boundary(tensor2(Word{}, wa)).is_zero());  // beta(1 (x) x) = 0

    std::mt19937 rng(97531u);
    for (int trial = 0; trial < 10; ++trial) {
        Chain c = random_chain(3, rng);
        CHECK(hochschild_boundary(hochschild_boundary(c)).is_zero());
    }
}

TEST_CASE("cyclic operator") {
    Word wa{S().a()}, wb{S().b()};
    Chain expect(1);
    expect.add_term(TensorWord{wb, wa}, RatQ(Rational(-1)));
    CHECK(cyclic_t(tensor2(wa, wb)) == expect);

    Chain d0 = Chain::from_poly(gR());
    CHECK(cyclic_t(d0) == d0);

    std::mt19937 rng(8642u);
    for (int degree = 1; degree <= 3; ++degree) {
        Chain c = random_chain(degree, rng);
        Chain r = c;
        for (int k = 0; k <= degree; ++k) r = cyclic_t(r);
        CHECK(r == c);
    }
}

TEST_CASE("generalized trace") {
    const Presentation& pres = Sigma4q::instance().pres();
    NCMatrix id2(pres, 2, 2);
    id2.at(0, 0) = NCPoly::unit();
    id2.at(1, 1) = NCPoly::unit();
    Chain tr2 = generalized_trace({id2, id2});
    Chain expect(1);
    expect.add_term(TensorWord{Word{}, Word{}}, RatQ(Rational(2)));
    CHECK(tr2 == expect);

    NCMatrix diag(pres, 2, 2);
    diag.at(0, 0) = gR();
    diag.at(1, 1) = ga();
    CHECK(generalized_trace({diag}) == Chain::from_poly(gR() + ga()));

    CHECK(generalized_trace({build_G()}) == Chain::from_poly(trG()));

    NCMatrix rect(pres, 2, 3);
    CHECK_THROWS_AS(generalized_trace({rect}), DimensionMismatch);
}

TEST_CASE("chern classes") {
    CHECK(chern(0) == Chain::from_poly(trG()));
    CHECK(chern(1).degree() == 2);
    // The classes are stable under re-normal-forming the projector.
    NCMatrix G = build_G();
    MatrixChain legs(3, G.nf());
    CHECK(generalized_trace(legs).scale(RatQ(Rational(-1))) == chern(1));
}

TEST_CASE("pairing with the trace functional") {
    CHECK(pairing_with_trace(chern(0)) == RatQ(-1));
    CHECK(pairing_with_trace(Chain(0)).is_zero());
    LaurentQ d = (LaurentQ(1) - LaurentQ::q(2)) * (LaurentQ(1) - LaurentQ::q(2));
    CHECK(pairing_with_trace(Chain::from_poly(gR())) == RatQ(LaurentQ(1), d));

    // tr_sigma vanishes on boundaries, so the -1 pairing certifies that
    // ch_0 is homologically nontrivial.
    std::mt19937 rng(1357u);
    for (int trial = 0; trial < 20; ++trial) {
        Chain c = random_chain(1, rng);
        CHECK(pairing_with_trace(hochschild_boundary(c)).is_zero());
    }
}

TEST_CASE("cyclic cycle checks") {
    CHECK(cyclic_cycle_check(chern(0)));
    CHECK(cyclic_cycle_check(chern(1)));

    // Negative witness: a (x) a* has beta = aa* - a*a nonzero, and the
    // (1-t)-image vanishes in degree 0.
    CHECK_FALSE(cyclic_cycle_check(tensor2(Word{S().a()}, Word{S().as()})));

    // beta descends to the Connes complex: (1-t)c is always a cycle there.
    std::mt19937 rng(2468u);
    for (int trial = 0; trial < 5; ++trial) {
        Chain c = random_chain(2, rng);
        CHECK(cyclic_cycle_check(c - cyclic_t(c)));
    }

    Chain big(0);
    big.add_term(TensorWord{Word(20, S().R())}, RatQ(1));
    CHECK_THROWS_AS(cyclic_cycle_check(big, 16), DegreeBoundExceeded);
}

TEST_CASE("chern(2) is a cyclic cycle") { CHECK(cyclic_cycle_check(chern(2))); }

TEST_CASE("periodicity operator") {
    // Verbatim unfolding on x (x) y (x) z with n = 2:
    // S = -1/2 (-d0d1 + d0d2 - d1d2) = 1/2 (xyz - zxy + yzx).
    NCPoly x = ga(), y = gb(), z = gR();
    Chain c(2);
    c.add_term(TensorWord{Word{S().a()}, Word{S().b()}, Word{S().R()}}, RatQ(1));
    Chain expect = Chain::from_poly(x * y * z - z * x * y + y * z * x).scale(RatQ(Rational(1, 2)));
    CHECK(s_operator(c) == expect);

    // Eq.-level witness: S(ch_1) + 1/2 ch_0 is a Hochschild boundary.
    CHECK(s_chern_witness(4));
}
