#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qsphere/bundle.hpp"
#include "qsphere/linalg.hpp"

using namespace qsphere;

namespace {
LaurentQ Q(long k) { return LaurentQ::q(k); }
}  // namespace

TEST_CASE("the four sections satisfy the cotensor condition") {
    for (const Section& f : bundle_f()) CHECK(check_cotensor(f));
    // a generic element fails
    CHECK_FALSE(check_cotensor(Section{S7q::instance().Z(1), NCPoly()}));
}

TEST_CASE("pairings match the displayed entries") {
    const S7q& s = S7q::instance();
    const auto& f = bundle_f();
    CHECK(pairing(f[0], f[0]) == s.rs().nf(s.R() * Q(2)));
    CHECK(pairing(f[0], f[2]) == s.rs().nf(s.a() * Q(1)));
    CHECK(pairing(f[2], f[2]) == s.rs().nf(NCPoly::unit() - s.R()));
    CHECK(pairing(f[1], f[0]).is_zero());
    NCMatrix G = build_G();  // throws EntryMismatch if any of the 16 differ
    const Sigma4q& s4 = Sigma4q::instance();
    CHECK(G.at(1, 3) == s4.rs().nf(NCPoly(Word{s4.as()}) * (-Q(3))));
    CHECK(G.at(3, 3) == s4.rs().nf(NCPoly::unit() - NCPoly(Word{s4.R()}) * Q(4)));
    CHECK(G.at(1, 0).is_zero());
}

TEST_CASE("pairings are coinvariant and the pairing is sesquilinear") {
    const S7q& s = S7q::instance();
    const auto& f = bundle_f();
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(is_coinvariant(pairing(f[i], f[j])));
    // x <F,H> = <xF,H> and <F,H> x* = <F,xH> for x in {R, a, b*}
    const Sigma4q& s4 = Sigma4q::instance();
    for (GenId g : {s4.R(), s4.a(), s4.bs()}) {
        NCPoly x = embed_in_s7(NCPoly(Word{g}));
        NCPoly xs = s.rs().nf(star(x, s.rs().alphabet()));
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                Section xf{s.rs().nf(x * f[i].c1), s.rs().nf(x * f[i].c2)};
                CHECK(pairing(xf, f[j]) == s.rs().nf(x * pairing(f[i], f[j])));
                CHECK(pairing(f[j], xf) == s.rs().nf(pairing(f[j], f[i]) * xs));
            }
    }
}

TEST_CASE("G is an idempotent hermitian matrix with the right trace") {
    NCMatrix G = build_G();
    ProjectorReport r = verify_projector(G);
    CHECK(r.idempotent);
    CHECK(r.hermitian);

    const Sigma4q& s4 = Sigma4q::instance();
    NCPoly tr;
    for (size_t i = 0; i < 4; ++i) tr += G.at(i, i);
    // Tr G = 2 - (1-q^2)^2 R
    NCPoly expect = NCPoly::scalar(LaurentQ(2)) -
                    NCPoly(Word{s4.R()}) * ((LaurentQ(1) - Q(2)) * (LaurentQ(1) - Q(2)));
    CHECK(s4.rs().nf(tr - expect).is_zero());

    // identity matrix is trivially a projector
    NCMatrix id(s4.pres(), 3, 3);
    for (size_t i = 0; i < 3; ++i) id.at(i, i) = NCPoly::unit();
    ProjectorReport rid = verify_projector(id);
    CHECK(rid.idempotent);
    CHECK(rid.hermitian);
}

TEST_CASE("section slices") {
    CHECK(section_slice(0).empty());
    std::vector<Section> s1 = section_slice(1);
    CHECK(s1.size() == 4);
    // 24 products x * f_i minus the 4 projective-module relations (1-G)f = 0
    std::vector<Section> s3 = section_slice(3);
    CHECK(s3.size() == 20);
    CHECK_THROWS_AS(section_slice(5), DegreeBoundExceeded);

    // classical comparison: the q=1 images of the same candidates have the
    // same rank, so the dimension does not depend on q
    const Presentation& c7 = classical_s7();
    SpanSolver<std::pair<int, Word>, Rational> indep;
    size_t classical_rank = 0;
    for (const Section& sec : s3) {
        SpanSolver<std::pair<int, Word>, Rational>::Vec vec;
        NCPoly c1 = c7.rs.nf(sec.c1.specialize(1));
        NCPoly c2 = c7.rs.nf(sec.c2.specialize(1));
        for (const auto& [w, c] : c1.terms()) vec[{0, w}] = c.eval(1);
        for (const auto& [w, c] : c2.terms()) vec[{1, w}] = c.eval(1);
        if (indep.add(vec)) ++classical_rank;
    }
    CHECK(classical_rank == s3.size());
}

TEST_CASE("classical quaternionic cross-checks") {
    ClassicalReport r = classical_crosscheck();
    CHECK(r.eq1_idempotent);
    CHECK(r.norm_identity);
    CHECK(r.pauli_matches_eq2);
    CHECK(r.eq2_projector);
    CHECK(r.eq8_q1_matches_eq2);
}
