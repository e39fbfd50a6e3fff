#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qsphere/quotient.hpp"

#include <random>

using namespace qsphere;

namespace {

LaurentQ Q(long k) { return LaurentQ::q(k); }

Word random_word(std::mt19937& rng, size_t maxlen) {
    std::uniform_int_distribution<size_t> len(0, maxlen);
    std::uniform_int_distribution<int> letter(0, 15);
    Word w(len(rng));
    for (GenId& g : w) g = static_cast<GenId>(letter(rng));
    return w;
}

}  // namespace

TEST_CASE("reduce_mod_R on the paper examples") {
    const Uq4& u = Uq4::instance();
    // r(D_q) = 1
    CHECK(reduce_mod_R(u.det4()) == NCPoly::unit());
    // prefix in the ideal dies
    CHECK(reduce_mod_R(u.rs().nf(u.T(1, 3) * u.T(2, 2))).is_zero());
    // r(t_11 t_43) = -q^-1 t_11 t_12 but r(t_11) r(t_43) = -t_11 t_12:
    // classes do not multiply
    NCPoly lhs = reduce_mod_R(u.rs().nf(u.T(1, 1) * u.T(4, 3)));
    NCPoly expect = u.rs().nf(u.T(1, 1) * u.T(1, 2)) * (-Q(-1));
    CHECK(lhs == expect);
    NCPoly prod_of_classes = u.rs().nf(r_class(1, 1) * r_class(4, 3));
    CHECK(lhs != u.rs().nf(prod_of_classes));
}

TEST_CASE("coideal span is tau-invariant and absorbed") {
    const Uq4& u = Uq4::instance();
    CHECK(coideal_span().size() == 13);
    for (size_t i = 0; i < coideal_span().size(); ++i) {
        CAPTURE(coideal_span_names()[i]);
        CHECK(reduce_mod_R(coideal_span()[i]).is_zero());
        CHECK(reduce_mod_R(u.tau(coideal_span()[i])).is_zero());
    }
    // right-ideal absorption on random words of degree <= 3
    std::mt19937 rng(20260826);
    for (int trial = 0; trial < 40; ++trial) {
        const NCPoly& rho = coideal_span()[trial % coideal_span().size()];
        NCPoly x = u.rs().nf(rho * NCPoly(random_word(rng, 3)));
        CHECK(reduce_mod_R(x).is_zero());
    }
}

TEST_CASE("coideal property and induced coproduct") {
    const Uq4& u = Uq4::instance();
    // Delta(rho) in R(x)U + U(x)R <=> (r (x) r) Delta(rho) = 0, since
    // ker(r (x) r) = ker r (x) U + U (x) ker r
    for (size_t i = 0; i < coideal_span().size(); ++i) {
        CAPTURE(coideal_span_names()[i]);
        Tensor2 d = u.coproduct(coideal_span()[i]);
        Tensor2 reduced;
        for (const auto& [lr, c] : d.terms()) {
            NCPoly l = reduce_mod_R(NCPoly(lr.first));
            NCPoly r = reduce_mod_R(NCPoly(lr.second));
            for (const auto& [lw, lc] : l.terms())
                for (const auto& [rw, rc] : r.terms()) reduced.add_term(lw, rw, c * lc * rc);
        }
        CHECK(reduced.is_zero());
    }
}

TEST_CASE("coact on generators and the counit axiom") {
    const S7q& s = S7q::instance();
    const Uq4& u = Uq4::instance();
    Coaction c1 = coact(s.Z(1));
    CHECK(c1.d == 0);
    Tensor2 expect;
    for (int j = 1; j <= 4; ++j) expect.add_term(Word{s.z(j)}, Word{u.t(j, 1)}, LaurentQ(1));
    CHECK(c1.t == expect);

    Coaction cu = coact(NCPoly::unit());
    Tensor2 unit_t;
    unit_t.add_term(Word{}, Word{}, LaurentQ(1));
    CHECK(cu.t == unit_t);

    // (id (x) eps) coact = id, including on starred letters (eps(D_q) = 1)
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> letter(0, 7);
    for (int trial = 0; trial < 6; ++trial) {
        Word w(3);
        for (GenId& g : w) g = static_cast<GenId>(letter(rng));
        NCPoly x = s.rs().nf_word(w);
        Coaction c = coact(x);
        NCPoly collapsed;
        for (const auto& [lr, k] : c.t.terms())
            collapsed.add_term(lr.first, k * u.counit(NCPoly(lr.second)));
        CHECK(s.rs().nf(collapsed) == x);
    }
}

TEST_CASE("coact_r and coinvariance of a, b, R") {
    const S7q& s = S7q::instance();
    Tensor2 cR = coact_r(s.R());
    Tensor2 expectR;
    for (const auto& [w, c] : s.R().terms()) expectR.add_term(w, Word{}, c);
    CHECK(cR == expectR);
    CHECK(is_coinvariant(s.a()));
    CHECK(is_coinvariant(s.b()));
    CHECK(is_coinvariant(s.a_star()));
    CHECK(is_coinvariant(s.b_star()));
    CHECK(is_coinvariant(NCPoly::unit()));
    CHECK_FALSE(is_coinvariant(s.Z(1)));

    // coact_r(z_1) = z_1 (x) [t_11] + z_2 (x) [t_21]
    Tensor2 c1 = coact_r(s.Z(1));
    Tensor2 expect1;
    const Uq4& u = Uq4::instance();
    expect1.add_term(Word{s.z(1)}, Word{u.t(1, 1)}, LaurentQ(1));
    expect1.add_term(Word{s.z(2)}, Word{u.t(2, 1)}, LaurentQ(1));
    CHECK(c1 == expect1);
}

TEST_CASE("coaction axiom on generators") {
    const S7q& s = S7q::instance();
    const Uq4& u = Uq4::instance();
    // (coact_r (x) id) coact_r = (id (x) Delta_quotient) coact_r
    using Key = std::tuple<Word, Word, Word>;
    for (int i = 1; i <= 4; ++i)
        for (int st = 0; st < 2; ++st) {
            NCPoly x = st ? s.Zs(i) : s.Z(i);
            Tensor2 first = coact_r(x);
            std::map<Key, LaurentQ> lhs, rhs;
            for (const auto& [lr, c] : first.terms()) {
                // left side: coact_r on the left leg
                Tensor2 second = coact_r(NCPoly(lr.first));
                for (const auto& [lr2, c2] : second.terms()) {
                    Key k{lr2.first, lr2.second, lr.second};
                    lhs[k] += c * c2;
                    if (lhs[k].is_zero()) lhs.erase(k);
                }
                // right side: induced coproduct on the class leg
                Tensor2 dq = u.coproduct(NCPoly(lr.second));
                for (const auto& [lr2, c2] : dq.terms()) {
                    NCPoly l = reduce_mod_R(NCPoly(lr2.first));
                    NCPoly r = reduce_mod_R(NCPoly(lr2.second));
                    for (const auto& [lw, lc] : l.terms())
                        for (const auto& [rw, rc] : r.terms()) {
                            Key k{lr.first, lw, rw};
                            rhs[k] += c * c2 * lc * rc;
                            if (rhs[k].is_zero()) rhs.erase(k);
                        }
                }
            }
            CHECK(lhs == rhs);
        }
}

TEST_CASE("coinvariant slice") {
    std::vector<NCPoly> b0 = coinvariant_slice(0);
    REQUIRE(b0.size() == 1);
    CHECK(b0[0] == NCPoly::unit());

    // degree <= 2: span{1, R, a, a*, b, b*}
    std::vector<NCPoly> b2 = coinvariant_slice(2);
    CHECK(b2.size() == 6);

    // degree <= 4 matches the q-independent classical count: Sigma4 basis
    // monomials of degree <= 2, which is 1 + 5 + 14
    std::vector<NCPoly> b4 = coinvariant_slice(4);
    CHECK(b4.size() == 20);

    // same count from the q = 1 classical presentation
    const Presentation& c4 = classical_s4();
    size_t classical = 0;
    for (size_t k = 0; k <= 2; ++k) classical += c4.rs.irreducible_words(k).size();
    CHECK(classical == 20);

    CHECK_THROWS_AS(coinvariant_slice(6), DegreeBoundExceeded);
}

TEST_CASE("products of coinvariants are coinvariant") {
    const S7q& s = S7q::instance();
    std::vector<NCPoly> b2 = coinvariant_slice(2);
    for (const NCPoly& x : b2)
        for (const NCPoly& y : b2) CHECK(is_coinvariant(s.rs().nf(x * y)));
}
