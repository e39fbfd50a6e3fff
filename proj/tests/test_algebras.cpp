#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qsphere/algebras.hpp"

using namespace qsphere;

namespace {

LaurentQ Q(long k) { return LaurentQ::q(k); }

}  // namespace

TEST_CASE("uq4 FRT normal forms") {
    const Uq4& u = Uq4::instance();
    const RewriteSystem& rs = u.rs();
    CHECK(rs.is_confluent());

    // t_13 t_24 - t_24 t_13 = (q - q^-1) t_23 t_14
    NCPoly lhs = rs.nf(u.T(1, 3) * u.T(2, 4) - u.T(2, 4) * u.T(1, 3));
    NCPoly rhs = rs.nf(u.T(2, 3) * u.T(1, 4) * (Q(1) - Q(-1)));
    CHECK(lhs == rhs);

    // same-column and same-row q-commutation
    CHECK(rs.nf(u.T(1, 2) * u.T(3, 2)) == rs.nf(u.T(3, 2) * u.T(1, 2) * Q(1)));
    CHECK(rs.nf(u.T(2, 1) * u.T(2, 3)) == rs.nf(u.T(2, 3) * u.T(2, 1) * Q(1)));
    // antidiagonal pair commutes
    CHECK(rs.nf(u.T(1, 4) * u.T(2, 3)) == rs.nf(u.T(2, 3) * u.T(1, 4)));
}

TEST_CASE("uq4 determinant is central") {
    const Uq4& u = Uq4::instance();
    const RewriteSystem& rs = u.rs();
    CHECK(u.det4().size() == 24);
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j) {
            NCPoly comm = rs.nf(u.det4() * u.T(i, j) - u.T(i, j) * u.det4());
            CHECK(comm.is_zero());
        }
}

TEST_CASE("uq4 determinant is group-like and counit-normalized") {
    const Uq4& u = Uq4::instance();
    CHECK(u.coproduct(u.det4()) == Tensor2::of(u.det4(), u.det4()).nf(u.rs(), u.rs()));
    CHECK(u.counit(u.det4()) == LaurentQ(1));
}

TEST_CASE("uq4 antipode axiom on generators") {
    const Uq4& u = Uq4::instance();
    // sum_k t_ik S(t_kj) = delta_ij = sum_k S(t_ik) t_kj
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j) {
            ULoc left{NCPoly(), 0}, right{NCPoly(), 0};
            for (int k = 1; k <= 4; ++k) {
                left.p += u.mul(ULoc{u.T(i, k), 0}, u.S(k, j)).p;
                right.p += u.mul(u.S(i, k), ULoc{u.T(k, j), 0}).p;
            }
            left.d = right.d = 1;
            ULoc expect{i == j ? NCPoly::unit() : NCPoly(), 0};
            CHECK(u.equal(left, expect));
            CHECK(u.equal(right, expect));
        }
}

TEST_CASE("uq4 coproduct and counit are coherent on generators") {
    const Uq4& u = Uq4::instance();
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j) {
            // (eps (x) id) Delta = id
            Tensor2 d = u.coproduct(u.T(i, j));
            NCPoly collapsed;
            for (const auto& [lr, c] : d.terms())
                collapsed.add_term(lr.second, c * u.counit(NCPoly(lr.first)));
            CHECK(u.rs().nf(collapsed) == u.rs().nf(u.T(i, j)));
        }
}

TEST_CASE("uq4 tau is a multiplicative involution") {
    const Uq4& u = Uq4::instance();
    NCPoly x = u.rs().nf(u.T(1, 3) * u.T(2, 4) + u.T(4, 1) * Q(2));
    CHECK(u.tau(u.tau(x)) == x);
    NCPoly y = u.rs().nf(u.T(2, 2) * u.T(3, 1));
    CHECK(u.tau(u.rs().nf(x * y)) == u.rs().nf(u.tau(x) * u.tau(y)));
}

TEST_CASE("s7q sphere relation and unitarity of the z row") {
    const S7q& s = S7q::instance();
    const RewriteSystem& rs = s.rs();
    CHECK(rs.is_confluent());
    NCPoly sum;
    for (int k = 1; k <= 4; ++k) sum += rs.nf(s.Z(k) * s.Zs(k));
    CHECK(rs.nf(sum) == NCPoly::unit());
    // the starred-side sum is not 1: summing the z*z relations gives
    // sum_k z_k* z_k = 1 + (1-q^2)(3 z_1 z_1* + 2 z_2 z_2* + z_3 z_3*)
    NCPoly sum2;
    for (int k = 1; k <= 4; ++k) sum2 += rs.nf(s.Zs(k) * s.Z(k));
    NCPoly expect = NCPoly::unit();
    for (int j = 1; j <= 3; ++j)
        expect += rs.nf(s.Z(j) * s.Zs(j)) * ((LaurentQ(1) - Q(2)) * LaurentQ(4 - j));
    CHECK(rs.nf(sum2) == rs.nf(expect));
}

TEST_CASE("sigma4q relations hold in s7q under the embedding") {
    const Sigma4q& s4 = Sigma4q::instance();
    for (size_t r = 0; r < s4.relations().size(); ++r) {
        CAPTURE(s4.relation_names()[r]);
        CHECK(embed_in_s7(s4.relations()[r]).is_zero());
    }
}

TEST_CASE("sigma4q basis pattern at low degree") {
    const Sigma4q& s4 = Sigma4q::instance();
    CHECK(s4.rs().is_confluent());
    // normal-form words are R^j a*^{i1} a^{i2} b*^{k1} b^{k2} with k1 k2 = 0
    for (size_t d = 0; d <= 4; ++d) {
        for (const Word& w : s4.rs().irreducible_words(d)) {
            int i1, i2, j, k1, k2;
            Sigma4q::word_powers(w, s4, &i1, &i2, &j, &k1, &k2);
            CHECK(k1 * k2 == 0);
            CHECK(std::is_sorted(w.begin(), w.end()));
        }
    }
    // degree-2 count: exponent vectors (j,i1,i2,k1,k2) with sum 2, k1 k2 = 0
    CHECK(s4.rs().irreducible_words(2).size() == 14);
}

TEST_CASE("sigma4q-loc zeta relations") {
    const Sigma4qLoc& l = Sigma4qLoc::instance();
    const RewriteSystem& rs = l.rs();
    CHECK(rs.is_confluent());
    const NCPoly &z1 = l.zeta1(), &z2 = l.zeta2(), &z1s = l.zeta1s(), &z2s = l.zeta2s();
    const LaurentQ one(1), q2 = Q(2);
    CHECK(rs.nf(z1 * z2 - z2 * z1 * Q(-1)).is_zero());
    CHECK(rs.nf(z1 * z1s - z1s * z1 * Q(-2) - NCPoly::scalar(one - q2)).is_zero());
    CHECK(rs.nf(z1 * z2s - z2s * z1 * Q(-1)).is_zero());
    CHECK(rs.nf(z2 * z2s - z2s * z2 * q2 + (NCPoly::scalar(q2) + z1s * z1) * (one - q2))
              .is_zero());
}

TEST_CASE("classical specializations are commutative") {
    const Presentation& c7 = classical_s7();
    const Presentation& c4 = classical_s4();
    const RewriteSystem& r7 = c7.rs;
    const RewriteSystem& r4 = c4.rs;
    CHECK(r7.is_confluent());
    CHECK(r4.is_confluent());
    for (size_t g = 0; g + 1 < r7.alphabet().size(); ++g) {
        Word xy{static_cast<GenId>(g), static_cast<GenId>(g + 1)};
        Word yx{static_cast<GenId>(g + 1), static_cast<GenId>(g)};
        CHECK(r7.nf(NCPoly(xy) - NCPoly(yx)).is_zero());
    }
    // classical sphere identity in the a,b,R generators: aa* + bb* = R(1-R)
    NCPoly rel = NCPoly(Word{c4.rs.alphabet().id("a"), c4.rs.alphabet().id("a*")}) +
                 NCPoly(Word{c4.rs.alphabet().id("b"), c4.rs.alphabet().id("b*")}) -
                 NCPoly(Word{c4.rs.alphabet().id("R")}) +
                 NCPoly(Word{c4.rs.alphabet().id("R"), c4.rs.alphabet().id("R")});
    CHECK(r4.nf(rel).is_zero());
}

TEST_CASE("presentation registry") {
    for (const std::string& n : presentation_names()) CHECK(presentation(n).name == n);
    CHECK_THROWS_AS(presentation("nope"), std::invalid_argument);
}
