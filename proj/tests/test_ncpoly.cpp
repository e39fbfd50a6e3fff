#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qsphere/ncpoly.hpp"

using namespace qsphere;

namespace {

// Quantum plane: alphabet {x, y}, relation y x = q^-1 x y
// (so sorted words x^i y^j are the normal forms).
RewriteSystem quantum_plane() {
    Alphabet a;
    a.add("x");
    a.add("y");
    RewriteSystem rs(a);
    Word yx{a.id("y"), a.id("x")}, xy{a.id("x"), a.id("y")};
    rs.add_rule(yx, NCPoly(xy, LaurentQ::q(-1)));
    return rs;
}

}  // namespace

TEST_CASE("free product and star") {
    Alphabet a;
    a.add("z", "z*");
    NCPoly z{Word{a.id("z")}};
    NCPoly zs{Word{a.id("z*")}};
    NCPoly p = z * zs + NCPoly::scalar(LaurentQ::q(2));
    // star reverses words and swaps letters: (z z*)* = z z*
    CHECK(star(p, a) == p);
    NCPoly w = z * z * zs;
    CHECK(star(w, a) == z * zs * zs);
}

TEST_CASE("quantum plane normal forms") {
    RewriteSystem rs = quantum_plane();
    const Alphabet& a = rs.alphabet();
    GenId x = a.id("x"), y = a.id("y");
    // oracle (hand computed): y^2 x^2 -> q^-4 x^2 y^2
    NCPoly n = rs.nf_word(Word{y, y, x, x});
    CHECK(n.size() == 1);
    CHECK(n.coeff(Word{x, x, y, y}) == LaurentQ::q(-4));
    CHECK(rs.is_confluent());
}

TEST_CASE("termination guard rejects bad orientation") {
    Alphabet a;
    a.add("x");
    a.add("y");
    RewriteSystem rs(a);
    // x y -> y x is not deglex-decreasing (x < y means x y < y x)
    Word xy{a.id("x"), a.id("y")}, yx{a.id("y"), a.id("x")};
    CHECK_THROWS_AS(rs.add_rule(xy, NCPoly(yx)), std::invalid_argument);
}

TEST_CASE("add_relation orients by leading word") {
    RewriteSystem rs = quantum_plane();
    const Alphabet& a = rs.alphabet();
    GenId x = a.id("x"), y = a.id("y");
    // the relation q y x - x y = 0 re-derives the existing rule
    NCPoly rel = NCPoly(Word{y, x}, LaurentQ::q()) - NCPoly(Word{x, y});
    rs.add_relation(rel);  // nf kills it; no new rule
    CHECK(rs.rules().size() == 1);
}

TEST_CASE("completion resolves an overlap") {
    // x z = z x, y z = z y, y x = x y + z : the overlap yxz forces z central
    // compatibility and must complete without new rules beyond nf checks.
    Alphabet a;
    a.add("z");
    a.add("x");
    a.add("y");
    RewriteSystem rs(a);
    GenId x = a.id("x"), y = a.id("y"), z = a.id("z");
    rs.add_rule(Word{x, z}, NCPoly(Word{z, x}));
    rs.add_rule(Word{y, z}, NCPoly(Word{z, y}));
    rs.add_rule(Word{y, x}, NCPoly(Word{x, y}) + NCPoly(Word{z}));
    rs.complete();
    CHECK(rs.is_confluent());
    // Heisenberg-style algebra: PBW basis z^a x^b y^c
    // oracle: dimension of degree-2 component is C(2+2,2) = 6
    CHECK(rs.irreducible_words(2).size() == 6);
    // oracle: y x^2 = x^2 y + 2 x z
    NCPoly n = rs.nf_word(Word{y, x, x});
    CHECK(n.coeff(Word{x, x, y}) == LaurentQ(1));
    CHECK(n.coeff(Word{z, x}) == LaurentQ(2));
    CHECK(n.size() == 2);
}

TEST_CASE("irreducible word counts for the quantum plane") {
    RewriteSystem rs = quantum_plane();
    // degree d component has d+1 sorted words x^i y^(d-i)
    for (size_t d = 0; d <= 5; ++d) CHECK(rs.irreducible_words(d).size() == d + 1);
    CHECK(rs.irreducible_words_upto(3).size() == 1 + 2 + 3 + 4);
}

TEST_CASE("step limit") {
    RewriteSystem rs = quantum_plane();
    rs.set_step_limit(2);
    const Alphabet& a = rs.alphabet();
    GenId x = a.id("x"), y = a.id("y");
    CHECK_THROWS_AS(rs.nf_word(Word{y, y, y, x, x, x}), StepLimitExceeded);
}

TEST_CASE("specialize at q=1 gives commutative coefficients") {
    RewriteSystem rs = quantum_plane();
    const Alphabet& a = rs.alphabet();
    NCPoly p = NCPoly(Word{a.id("x")}, LaurentQ::q(3) - LaurentQ::q());
    CHECK(p.specialize(Rational(1)).is_zero());
    CHECK(p.specialize(Rational(1, 2)).coeff(Word{a.id("x")}) == LaurentQ(Rational(-3, 8)));
}
