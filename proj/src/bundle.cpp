#include "qsphere/bundle.hpp"

#include "qsphere/linalg.hpp"

namespace qsphere {

const std::array<Section, 4>& bundle_f() {
    static const std::array<Section, 4> f = [] {
        const S7q& s = S7q::instance();
        const LaurentQ q = LaurentQ::q();
        std::array<Section, 4> out;
        out[0] = {s.Z(1) * q, s.Z(2) * q};
        out[1] = {s.Zs(2) * q, s.Zs(1) * (-LaurentQ::q(2))};
        out[2] = {s.Z(4), -s.Z(3)};
        out[3] = {s.Zs(3) * q, s.Zs(4)};
        return out;
    }();
    return f;
}

bool check_cotensor(const Section& F) {
    const S7q& s = S7q::instance();
    const Uq4& u = Uq4::instance();
    const NCPoly comp[2] = {s.rs().nf(F.c1), s.rs().nf(F.c2)};
    for (int j = 0; j < 2; ++j) {
        Tensor2 expect;
        for (int i = 0; i < 2; ++i)
            for (const auto& [w, c] : comp[i].terms())
                expect.add_term(w, Word{u.t(i + 1, j + 1)}, c);
        if (coact_r(comp[j]) != expect) return false;
    }
    return true;
}

NCPoly pairing(const Section& F, const Section& H) {
    const S7q& s = S7q::instance();
    return s.rs().nf(F.c1 * star(H.c1, s.rs().alphabet()) +
                     F.c2 * star(H.c2, s.rs().alphabet()));
}

// ---------------------------------------------------------------------------
// NCMatrix

NCMatrix NCMatrix::mul(const NCMatrix& o) const {
    NCMatrix out(*pres, rows, o.cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < o.cols; ++j) {
            NCPoly acc;
            for (size_t k = 0; k < cols; ++k) acc += at(i, k) * o.at(k, j);
            out.at(i, j) = pres->rs.nf(acc);
        }
    return out;
}

NCMatrix NCMatrix::operator-(const NCMatrix& o) const {
    NCMatrix out(*pres, rows, cols);
    for (size_t k = 0; k < e.size(); ++k) out.e[k] = pres->rs.nf(e[k] - o.e[k]);
    return out;
}

NCMatrix NCMatrix::dagger() const {
    NCMatrix out(*pres, cols, rows);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j)
            out.at(j, i) = pres->rs.nf(star(at(i, j), pres->rs.alphabet()));
    return out;
}

bool NCMatrix::is_zero() const {
    for (const NCPoly& p : e)
        if (!p.is_zero()) return false;
    return true;
}

NCMatrix NCMatrix::nf() const {
    NCMatrix out(*pres, rows, cols);
    for (size_t k = 0; k < e.size(); ++k) out.e[k] = pres->rs.nf(e[k]);
    return out;
}

// ---------------------------------------------------------------------------
// The projector G

NCMatrix eq8_matrix() {
    const Sigma4q& s4 = Sigma4q::instance();
    const Presentation& p = s4.pres();
    const LaurentQ q = LaurentQ::q(), q2 = LaurentQ::q(2), q3 = LaurentQ::q(3),
                   q4 = LaurentQ::q(4);
    NCPoly R(Word{s4.R()}), a(Word{s4.a()}), as(Word{s4.as()}), b(Word{s4.b()}),
        bs(Word{s4.bs()});
    NCMatrix G(p, 4, 4);
    G.at(0, 0) = R * q2;
    G.at(0, 2) = a * q;
    G.at(0, 3) = b * q2;
    G.at(1, 1) = R * q2;
    G.at(1, 2) = bs * q;
    G.at(1, 3) = as * (-q3);
    G.at(2, 0) = as * q;
    G.at(2, 1) = b * q;
    G.at(2, 2) = NCPoly::unit() - R;
    G.at(3, 0) = bs * q2;
    G.at(3, 1) = a * (-q3);
    G.at(3, 3) = NCPoly::unit() - R * q4;
    return G.nf();
}

NCMatrix build_G() {
    const S7q& s7 = S7q::instance();
    NCMatrix G = eq8_matrix();
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            NCPoly p = pairing(bundle_f()[i], bundle_f()[j]);
            NCPoly expect = s7.rs().nf(embed_in_s7(G.at(i, j)));
            if (p != expect)
                throw EntryMismatch(i + 1, j + 1,
                                    "pairing(f_" + std::to_string(i + 1) + ",f_" +
                                        std::to_string(j + 1) + ") = " +
                                        p.str(s7.rs().alphabet()) + " but the display gives " +
                                        expect.str(s7.rs().alphabet()));
        }
    return G;
}

ProjectorReport verify_projector(const NCMatrix& M) {
    ProjectorReport r;
    r.idem_residual = M.mul(M) - M;
    r.herm_residual = M - M.dagger();
    r.idempotent = r.idem_residual.is_zero();
    r.hermitian = r.herm_residual.is_zero();
    return r;
}

// ---------------------------------------------------------------------------
// Bounded-degree section space

std::vector<Section> section_slice(size_t d, size_t bound) {
    if (d > bound) throw DegreeBoundExceeded("section_slice degree above bound");
    const S7q& s7 = S7q::instance();
    const Sigma4q& s4 = Sigma4q::instance();
    const Uq4& u = Uq4::instance();

    // candidates: x * f_i with x a Sigma4q basis monomial, component degree
    // 2 deg(x) + 1 <= d. The module is projective, not free (each row of
    // 1 - G is a relation among the f_i), so keep a maximal independent set.
    std::vector<Section> basis;
    SpanSolver<std::pair<int, Word>, RatQ> indep;
    for (size_t k = 0; 2 * k + 1 <= d; ++k)
        for (const Word& w : s4.rs().irreducible_words(k)) {
            NCPoly x = embed_in_s7(NCPoly(w));
            for (const Section& f : bundle_f()) {
                Section sec{s7.rs().nf(x * f.c1), s7.rs().nf(x * f.c2)};
                if (!check_cotensor(sec))
                    throw std::logic_error("candidate section fails the cotensor test");
                SpanSolver<std::pair<int, Word>, RatQ>::Vec vec;
                for (const auto& [mw, mc] : sec.c1.terms()) vec[{0, mw}] = RatQ(mc);
                for (const auto& [mw, mc] : sec.c2.terms()) vec[{1, mw}] = RatQ(mc);
                if (indep.add(vec)) basis.push_back(std::move(sec));
            }
        }

    // completeness: exact nullity of the equivariance system at q0 = 1/2
    const Rational q0(1, 2);
    std::vector<Word> mons = s7.rs().irreducible_words_upto(d);
    using Key = std::tuple<int, Word, Word>;
    SpanSolver<Key, Rational> rows;
    size_t rank = 0;
    for (int i = 0; i < 2; ++i)
        for (const Word& m : mons) {
            SpanSolver<Key, Rational>::Vec vec;
            auto add = [&](const Key& k, const Rational& v) {
                auto it = vec.find(k);
                Rational nv = (it == vec.end() ? Rational(0) : it->second) + v;
                if (nv == 0) {
                    if (it != vec.end()) vec.erase(it);
                } else {
                    vec[k] = nv;
                }
            };
            Tensor2 co = coact_r(NCPoly(m));
            for (const auto& [lr, c] : co.terms())
                add(Key{i, lr.first, lr.second}, c.eval(q0));
            for (int j = 0; j < 2; ++j)
                add(Key{j, m, Word{u.t(i + 1, j + 1)}}, Rational(-1));
            if (rows.add(vec)) ++rank;
        }
    if (2 * mons.size() - rank != basis.size())
        throw std::logic_error("section dimension certificate failed");
    return basis;
}

// ---------------------------------------------------------------------------
// Classical q = 1 cross-checks

namespace {

// quaternion alpha + beta j over the commutative *-algebra of the classical
// 7-sphere; (alpha + beta j)(gamma + delta j) = (alpha gamma - beta delta*)
// + (alpha delta + beta gamma*) j
struct Quat {
    NCPoly al, be;
};

struct ClassicalCtx {
    const Presentation& c7 = classical_s7();
    const RewriteSystem& rs = c7.rs;

    NCPoly Z(int i) const { return NCPoly(Word{rs.alphabet().id("z" + std::to_string(i))}); }
    NCPoly Zs(int i) const {
        return NCPoly(Word{rs.alphabet().id("z" + std::to_string(i) + "*")});
    }
    NCPoly st(const NCPoly& p) const { return rs.nf(star(p, rs.alphabet())); }

    Quat qmul(const Quat& x, const Quat& y) const {
        return {rs.nf(x.al * y.al - x.be * st(y.be)), rs.nf(x.al * y.be + x.be * st(y.al))};
    }
    Quat qconj(const Quat& x) const { return {st(x.al), rs.nf(-x.be)}; }
    bool qeq(const Quat& x, const Quat& y) const {
        return rs.nf(x.al - y.al).is_zero() && rs.nf(x.be - y.be).is_zero();
    }
};

}  // namespace

ClassicalReport classical_crosscheck() {
    ClassicalCtx c;
    ClassicalReport rep;

    NCPoly A = c.rs.nf(c.Z(1) * c.Zs(3) + c.Z(2) * c.Zs(4));
    NCPoly B = c.rs.nf(c.Z(1) * c.Z(4) - c.Z(2) * c.Z(3));
    NCPoly R = c.rs.nf(c.Z(1) * c.Zs(1) + c.Z(2) * c.Zs(2));
    NCPoly one = NCPoly::unit();

    // Eq. (1): 2x2 quaternionic projector [[R, Q], [Qbar, 1-R]] with
    // q_1 = z_1 + z_2 j, q_2 = z_3 + z_4 j, Q = q_1 qbar_2 = A - B j
    Quat q1{c.Z(1), c.Z(2)}, q2{c.Z(3), c.Z(4)};
    Quat Q = c.qmul(q1, c.qconj(q2));
    Quat Rq = c.qmul(q1, c.qconj(q1));
    if (!c.qeq(Q, Quat{A, c.rs.nf(-B)}) || !c.qeq(Rq, Quat{R, NCPoly()}))
        return rep;  // dictionary failure: leave everything false
    Quat M[2][2] = {{Rq, Q}, {c.qconj(Q), Quat{c.rs.nf(one - R), NCPoly()}}};
    rep.eq1_idempotent = true;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            Quat acc{NCPoly(), NCPoly()};
            for (int k = 0; k < 2; ++k) {
                Quat t = c.qmul(M[i][k], M[k][j]);
                acc = {c.rs.nf(acc.al + t.al), c.rs.nf(acc.be + t.be)};
            }
            if (!c.qeq(acc, M[i][j])) rep.eq1_idempotent = false;
        }

    // |Q|^2 = |A|^2 + |B|^2 = R(1 - R)
    Quat Qn = c.qmul(Q, c.qconj(Q));
    rep.norm_identity = c.qeq(Qn, Quat{c.rs.nf(R * (one - R)), NCPoly()}) &&
                        c.rs.nf(A * c.st(A) + B * c.st(B) - R * (one - R)).is_zero();

    // Eq. (2): the 4x4 complex form
    NCMatrix G2(c.c7, 4, 4);
    G2.at(0, 0) = R;
    G2.at(0, 2) = A;
    G2.at(0, 3) = B;
    G2.at(1, 1) = R;
    G2.at(1, 2) = c.rs.nf(-c.st(B));
    G2.at(1, 3) = c.st(A);
    G2.at(2, 0) = c.st(A);
    G2.at(2, 1) = c.rs.nf(-B);
    G2.at(2, 2) = c.rs.nf(one - R);
    G2.at(3, 0) = c.st(B);
    G2.at(3, 1) = A;
    G2.at(3, 3) = c.rs.nf(one - R);
    G2 = G2.nf();

    // block map alpha + beta j -> [[alpha, -beta], [beta*, alpha*]]
    NCMatrix img(c.c7, 4, 4);
    for (int bi = 0; bi < 2; ++bi)
        for (int bj = 0; bj < 2; ++bj) {
            const Quat& x = M[bi][bj];
            img.at(2 * bi, 2 * bj) = x.al;
            img.at(2 * bi, 2 * bj + 1) = c.rs.nf(-x.be);
            img.at(2 * bi + 1, 2 * bj) = c.st(x.be);
            img.at(2 * bi + 1, 2 * bj + 1) = c.st(x.al);
        }
    rep.pauli_matches_eq2 = (img - G2).is_zero();

    ProjectorReport pr = verify_projector(G2);
    rep.eq2_projector = pr.idempotent && pr.hermitian;

    // q=1 limit of the quantum display vs Eq. (2): under the bundle morphism
    // i(z) = (z_1, z_2, -z_4, z_3) the Sec. 3 generators pull back to
    // A = -a, B = b, R = R, and the bases differ by e_3 -> -e_3
    const Presentation& c4 = classical_s4();
    NCMatrix G8q1(c4, 4, 4);
    {
        NCMatrix G8 = eq8_matrix();
        for (size_t k = 0; k < G8.e.size(); ++k) G8q1.e[k] = c4.rs.nf(G8.e[k].specialize(1));
    }
    const Alphabet& al4 = c4.rs.alphabet();
    NCPoly a4(Word{al4.id("a")}), as4(Word{al4.id("a*")}), b4(Word{al4.id("b")}),
        bs4(Word{al4.id("b*")}), R4(Word{al4.id("R")});
    NCMatrix dict(c4, 4, 4);
    dict.at(0, 0) = R4;
    dict.at(0, 2) = -a4;
    dict.at(0, 3) = b4;
    dict.at(1, 1) = R4;
    dict.at(1, 2) = -bs4;
    dict.at(1, 3) = -as4;
    dict.at(2, 0) = -as4;
    dict.at(2, 1) = -b4;
    dict.at(2, 2) = one - R4;
    dict.at(3, 0) = bs4;
    dict.at(3, 1) = -a4;
    dict.at(3, 3) = one - R4;
    dict = dict.nf();
    // conjugate the dictionary by diag(1,1,-1,1): flip entries with exactly
    // one index equal to 3 (1-based)
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j)
            if ((i == 2) != (j == 2)) dict.at(i, j) = c4.rs.nf(-dict.at(i, j));
    rep.eq8_q1_matches_eq2 = (G8q1 - dict).is_zero();
    return rep;
}

}  // namespace qsphere
