#include "qsphere/algebras.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

namespace qsphere {

const NCPoly& Presentation::dist(const std::string& key) const {
    auto it = distinguished.find(key);
    if (it == distinguished.end())
        throw std::invalid_argument("presentation " + name + ": unknown element " + key);
    return it->second;
}

// ---------------------------------------------------------------------------
// Tensor2

void Tensor2::add_term(const Word& l, const Word& r, const LaurentQ& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(l, r);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_[key] = c;
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Tensor2 Tensor2::operator+(const Tensor2& o) const {
    Tensor2 out = *this;
    for (const auto& [lr, c] : o.terms_) out.add_term(lr.first, lr.second, c);
    return out;
}

Tensor2 Tensor2::operator-(const Tensor2& o) const {
    Tensor2 out = *this;
    for (const auto& [lr, c] : o.terms_) out.add_term(lr.first, lr.second, -c);
    return out;
}

Tensor2 Tensor2::operator*(const Tensor2& o) const {
    Tensor2 out;
    for (const auto& [lr1, c1] : terms_)
        for (const auto& [lr2, c2] : o.terms_) {
            Word l = lr1.first;
            l.insert(l.end(), lr2.first.begin(), lr2.first.end());
            Word r = lr1.second;
            r.insert(r.end(), lr2.second.begin(), lr2.second.end());
            out.add_term(l, r, c1 * c2);
        }
    return out;
}

Tensor2 Tensor2::operator*(const LaurentQ& c) const {
    Tensor2 out;
    if (c.is_zero()) return out;
    for (const auto& [lr, k] : terms_) out.add_term(lr.first, lr.second, k * c);
    return out;
}

Tensor2 Tensor2::of(const NCPoly& l, const NCPoly& r) {
    Tensor2 out;
    for (const auto& [wl, cl] : l.terms())
        for (const auto& [wr, cr] : r.terms()) out.add_term(wl, wr, cl * cr);
    return out;
}

Tensor2 Tensor2::nf(const RewriteSystem& left, const RewriteSystem& right) const {
    Tensor2 out;
    for (const auto& [lr, c] : terms_) {
        NCPoly ln = left.nf_word(lr.first);
        NCPoly rn = right.nf_word(lr.second);
        for (const auto& [wl, cl] : ln.terms())
            for (const auto& [wr, cr] : rn.terms()) out.add_term(wl, wr, c * cl * cr);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Permutations with length, shared by determinant and minors

namespace {

// all permutations of {0..n-1} with their inversion count
std::vector<std::pair<std::vector<int>, int>> permutations(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::pair<std::vector<int>, int>> out;
    do {
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (p[i] > p[j]) ++inv;
        out.emplace_back(p, inv);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

LaurentQ neg_q_pow(long k) {
    // (-q)^k
    LaurentQ c = LaurentQ::q(k);
    if (k % 2 != 0) return -c;
    return c;
}

}  // namespace

// ---------------------------------------------------------------------------
// U_q(4)

const Uq4& Uq4::instance() {
    static const Uq4 inst;
    return inst;
}

Uq4::Uq4() {
    Alphabet alpha;
    // Ascending precedence; normal-form words sort ascending, so the
    // off-diagonal-block letters come first and the SW/SE block letters
    // precede the NW block, which is what the quotient reduction wants at
    // the word prefix.
    const std::array<std::pair<int, int>, 16> order = {{{1, 3},
                                                       {1, 4},
                                                       {2, 3},
                                                       {2, 4},
                                                       {3, 1},
                                                       {3, 2},
                                                       {4, 1},
                                                       {4, 2},
                                                       {3, 3},
                                                       {4, 3},
                                                       {3, 4},
                                                       {4, 4},
                                                       {2, 1},
                                                       {2, 2},
                                                       {1, 1},
                                                       {1, 2}}};
    for (const auto& [i, j] : order)
        ids_[i - 1][j - 1] = alpha.add("t" + std::to_string(i) + std::to_string(j));

    RewriteSystem rs{std::move(alpha)};
    const LaurentQ q = LaurentQ::q(), qi = LaurentQ::q(-1);
    auto tt = [&](int i1, int j1, int i2, int j2) {
        return NCPoly(Word{ids_[i1 - 1][j1 - 1], ids_[i2 - 1][j2 - 1]});
    };
    // FRT relations of A_q(4)
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j)
            for (int k = 1; k <= 4; ++k) {
                // same column: t_ik t_jk = q t_jk t_ik
                rs.add_relation(tt(i, k, j, k) - tt(j, k, i, k) * q);
                // same row: t_ki t_kj = q t_kj t_ki
                rs.add_relation(tt(k, i, k, j) - tt(k, j, k, i) * q);
            }
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j)
            for (int k = 1; k <= 4; ++k)
                for (int l = k + 1; l <= 4; ++l) {
                    // t_il t_jk = t_jk t_il
                    rs.add_relation(tt(i, l, j, k) - tt(j, k, i, l));
                    // t_ik t_jl - t_jl t_ik = (q - q^-1) t_jk t_il
                    rs.add_relation(tt(i, k, j, l) - tt(j, l, i, k) -
                                    tt(j, k, i, l) * (q - qi));
                }
    rs.complete();

    // quantum determinant
    NCPoly det;
    for (const auto& [p, inv] : permutations(4)) {
        Word w;
        for (int col = 0; col < 4; ++col) w.push_back(ids_[p[col]][col]);
        det.add_term(w, neg_q_pow(inv));
    }
    det4_ = rs.nf(det);

    pres_.name = "uq4";
    pres_.rs = std::move(rs);
    pres_.distinguished["D_q"] = det4_;
}

NCPoly Uq4::qminor(int del_row, int del_col) const {
    std::vector<int> rows, cols;
    for (int i = 1; i <= 4; ++i) {
        if (i != del_row) rows.push_back(i);
        if (i != del_col) cols.push_back(i);
    }
    NCPoly out;
    for (const auto& [p, inv] : permutations(3)) {
        Word w;
        for (int c = 0; c < 3; ++c) w.push_back(ids_[rows[p[c]] - 1][cols[c] - 1]);
        out.add_term(w, neg_q_pow(inv));
    }
    return pres_.rs.nf(out);
}

ULoc Uq4::S(int i, int j) const {
    return ULoc{pres_.rs.nf(qminor(j, i) * neg_q_pow(i - j)), 1};
}

ULoc Uq4::antipode(const NCPoly& x) const {
    // inverse letter lookup
    static thread_local std::vector<std::pair<int, int>> rc;
    if (rc.empty()) {
        rc.resize(16);
        for (int i = 1; i <= 4; ++i)
            for (int j = 1; j <= 4; ++j) rc[ids_[i - 1][j - 1]] = {i, j};
    }
    ULoc acc{NCPoly(), 0};
    for (const auto& [w, c] : x.terms()) {
        ULoc term{NCPoly::scalar(c), 0};
        // antihomomorphism: reverse the word
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
            auto [i, j] = rc[*it];
            term = mul(term, S(i, j));
        }
        // align determinant powers before adding
        if (term.d > acc.d) {
            acc.p = pres_.rs.nf(acc.p * det_pow(term.d - acc.d));
            acc.d = term.d;
        } else if (term.d < acc.d) {
            term.p = pres_.rs.nf(term.p * det_pow(acc.d - term.d));
        }
        acc.p += term.p;
    }
    return acc;
}

NCPoly Uq4::det_pow(long k) const {
    NCPoly out = NCPoly::unit();
    for (long s = 0; s < k; ++s) out = pres_.rs.nf(out * det4_);
    return out;
}

NCPoly Uq4::tau(const NCPoly& x) const {
    static thread_local std::vector<GenId> transpose;
    if (transpose.empty()) {
        transpose.resize(16);
        for (int i = 1; i <= 4; ++i)
            for (int j = 1; j <= 4; ++j) transpose[ids_[i - 1][j - 1]] = ids_[j - 1][i - 1];
    }
    NCPoly out;
    for (const auto& [w, c] : x.terms()) {
        Word tw = w;
        for (GenId& g : tw) g = transpose[g];
        out.add_term(tw, c);
    }
    return pres_.rs.nf(out);
}

Tensor2 Uq4::coproduct(const NCPoly& x) const {
    Tensor2 acc;
    for (const auto& [w, c] : x.terms()) {
        static thread_local std::vector<std::pair<int, int>> rc;
        if (rc.empty()) {
            rc.resize(16);
            for (int i = 1; i <= 4; ++i)
                for (int j = 1; j <= 4; ++j) rc[ids_[i - 1][j - 1]] = {i, j};
        }
        Tensor2 term;
        term.add_term(Word{}, Word{}, c);
        for (GenId g : w) {
            auto [i, j] = rc[g];
            Tensor2 dg;
            for (int k = 1; k <= 4; ++k) dg.add_term(Word{t(i, k)}, Word{t(k, j)}, LaurentQ(1));
            term = (term * dg).nf(pres_.rs, pres_.rs);
        }
        acc = acc + term;
    }
    return acc;
}

LaurentQ Uq4::counit(const NCPoly& x) const {
    static thread_local std::vector<bool> diag;
    if (diag.empty()) {
        diag.resize(16, false);
        for (int i = 1; i <= 4; ++i) diag[ids_[i - 1][i - 1]] = true;
    }
    LaurentQ out;
    for (const auto& [w, c] : x.terms()) {
        bool keep = true;
        for (GenId g : w)
            if (!diag[g]) {
                keep = false;
                break;
            }
        if (keep) out += c;
    }
    return out;
}

ULoc Uq4::mul(const ULoc& x, const ULoc& y) const {
    return ULoc{pres_.rs.nf(x.p * y.p), x.d + y.d};
}

bool Uq4::equal(const ULoc& x, const ULoc& y) const {
    long m = std::min(x.d, y.d);
    NCPoly xp = pres_.rs.nf(x.p * det_pow(y.d - m));
    NCPoly yp = pres_.rs.nf(y.p * det_pow(x.d - m));
    return xp == yp;
}

// ---------------------------------------------------------------------------
// S7_q

const S7q& S7q::instance() {
    static const S7q inst;
    return inst;
}

S7q::S7q() {
    Alphabet alpha;
    for (int i = 1; i <= 4; ++i) z_[i - 1] = alpha.add("z" + std::to_string(i));
    // Starred letters in descending index order: normal words then read
    // z-block ascending followed by z*-block descending, so z_4 and z_4* can
    // only meet adjacently at the junction, where the sphere rule removes
    // them. (Ascending starred order needs infinitely many rules.)
    for (int i = 4; i >= 1; --i) {
        zs_[i - 1] = alpha.add("z" + std::to_string(i) + "*");
        alpha.set_star("z" + std::to_string(i), "z" + std::to_string(i) + "*");
    }
    RewriteSystem rs{std::move(alpha)};
    const LaurentQ q = LaurentQ::q();
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j) {
            // z_i z_j = q z_j z_i  and its star image
            rs.add_relation(NCPoly(Word{z(i), z(j)}) - NCPoly(Word{z(j), z(i)}) * q);
            rs.add_relation(NCPoly(Word{zs(j), zs(i)}) - NCPoly(Word{zs(i), zs(j)}) * q);
        }
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j) {
            if (i == j) continue;
            // z_j* z_i = q z_i z_j*
            rs.add_relation(NCPoly(Word{zs(j), z(i)}) - NCPoly(Word{z(i), zs(j)}) * q);
        }
    for (int k = 1; k <= 4; ++k) {
        // z_k* z_k = z_k z_k* + (1 - q^2) sum_{j<k} z_j z_j*
        NCPoly rel = NCPoly(Word{zs(k), z(k)}) - NCPoly(Word{z(k), zs(k)});
        for (int j = 1; j < k; ++j)
            rel -= NCPoly(Word{z(j), zs(j)}) * (LaurentQ(1) - LaurentQ::q(2));
        rs.add_relation(rel);
    }
    // sphere relation, oriented to eliminate z_4 z_4*
    NCPoly sphere = -NCPoly::unit();
    for (int k = 1; k <= 4; ++k) sphere += NCPoly(Word{z(k), zs(k)});
    rs.add_relation(sphere);
    rs.complete();

    NCPoly a = rs.nf(NCPoly(Word{z_[0], zs_[3]}) - NCPoly(Word{z_[1], zs_[2]}));
    NCPoly b =
        rs.nf(NCPoly(Word{z_[0], z_[2]}) + NCPoly(Word{z_[1], z_[3]}) * LaurentQ::q(-1));
    NCPoly R = rs.nf(NCPoly(Word{z_[0], zs_[0]}) + NCPoly(Word{z_[1], zs_[1]}));
    pres_.name = "s7q";
    pres_.distinguished["a"] = a;
    pres_.distinguished["b"] = b;
    pres_.distinguished["R"] = R;
    pres_.distinguished["a*"] = rs.nf(star(a, rs.alphabet()));
    pres_.distinguished["b*"] = rs.nf(star(b, rs.alphabet()));
    pres_.rs = std::move(rs);
}

// ---------------------------------------------------------------------------
// Sigma4_q

namespace {

// The Prop. 3 relations plus their star images, as polynomials = 0 over the
// alphabet letters passed in. Shared by the plain and localized builds.
struct SigmaRelations {
    std::vector<NCPoly> polys;
    std::vector<std::string> names;
};

SigmaRelations sigma_relations(GenId R, GenId as, GenId a, GenId bs, GenId b) {
    const LaurentQ q1 = LaurentQ::q(1), q2 = LaurentQ::q(2), q3 = LaurentQ::q(3),
                   q4 = LaurentQ::q(4);
    const LaurentQ qm1 = LaurentQ::q(-1), qm2 = LaurentQ::q(-2), qm3 = LaurentQ::q(-3);
    const LaurentQ one(1);
    auto W = [](std::initializer_list<GenId> gs) { return NCPoly(Word(gs)); };
    SigmaRelations out;
    auto add = [&](NCPoly p, std::string n) {
        out.polys.push_back(std::move(p));
        out.names.push_back(std::move(n));
    };
    add(W({a, R}) - W({R, a}) * q2, "R a = q^-2 a R");
    add(W({as, R}) - W({R, as}) * qm2, "R a* = q^2 a* R");
    add(W({b, R}) - W({R, b}) * qm2, "R b = q^2 b R");
    add(W({bs, R}) - W({R, bs}) * q2, "R b* = q^-2 b* R");
    add(W({b, a}) - W({a, b}) * qm3, "a b = q^3 b a");
    add(W({bs, as}) - W({as, bs}) * q3, "a* b* = q^-3 b* a*");
    add(W({bs, a}) - W({a, bs}) * q1, "a b* = q^-1 b* a");
    add(W({b, as}) - W({as, b}) * qm1, "a* b = q b a* (star image)");
    add(W({a, as}) - W({as, a}) * q2 - W({R, R}) * (one - q2), "a a* = q^2 a* a + (1-q^2) R^2");
    add(W({a, as}) + W({b, bs}) * q2 - W({R}) + W({R, R}) * q2,
        "a a* + q^2 b b* = R (1 - q^2 R)");
    add(W({bs, b}) - W({b, bs}) * q4 - W({R}) * (one - q2), "b* b = q^4 b b* + (1-q^2) R");
    return out;
}

}  // namespace

const Sigma4q& Sigma4q::instance() {
    static const Sigma4q inst;
    return inst;
}

Sigma4q::Sigma4q() {
    Alphabet alpha;
    R_ = alpha.add("R");
    as_ = alpha.add("a*");
    a_ = alpha.add("a");
    bs_ = alpha.add("b*");
    b_ = alpha.add("b");
    alpha.set_star("a", "a*");
    alpha.set_star("b", "b*");
    RewriteSystem rs{std::move(alpha)};
    SigmaRelations rels = sigma_relations(R_, as_, a_, bs_, b_);
    for (const NCPoly& p : rels.polys) rs.add_relation(p);
    rs.complete();
    pres_.name = "sigma4q";
    pres_.rs = std::move(rs);
    relations_ = std::move(rels.polys);
    relation_names_ = std::move(rels.names);
}

void Sigma4q::word_powers(const Word& w, const Sigma4q& s, int* na_star, int* na, int* nr,
                          int* nb_star, int* nb) {
    *na_star = *na = *nr = *nb_star = *nb = 0;
    for (GenId g : w) {
        if (g == s.R_) ++*nr;
        else if (g == s.as_) ++*na_star;
        else if (g == s.a_) ++*na;
        else if (g == s.bs_) ++*nb_star;
        else ++*nb;
    }
}

const Sigma4qLoc& Sigma4qLoc::instance() {
    static const Sigma4qLoc inst;
    return inst;
}

Sigma4qLoc::Sigma4qLoc() {
    Alphabet alpha;
    Rinv_ = alpha.add("R^-1");
    R_ = alpha.add("R");
    as_ = alpha.add("a*");
    a_ = alpha.add("a");
    bs_ = alpha.add("b*");
    b_ = alpha.add("b");
    alpha.set_star("a", "a*");
    alpha.set_star("b", "b*");
    RewriteSystem rs{std::move(alpha)};
    SigmaRelations rels = sigma_relations(R_, as_, a_, bs_, b_);
    for (const NCPoly& p : rels.polys) rs.add_relation(p);
    auto W = [](std::initializer_list<GenId> gs) { return NCPoly(Word(gs)); };
    rs.add_relation(W({R_, Rinv_}) - NCPoly::unit());
    rs.add_relation(W({Rinv_, R_}) - NCPoly::unit());
    // commutation with R^-1 follows from the R rules by conjugation
    rs.add_relation(W({a_, Rinv_}) - W({Rinv_, a_}) * LaurentQ::q(-2));
    rs.add_relation(W({as_, Rinv_}) - W({Rinv_, as_}) * LaurentQ::q(2));
    rs.add_relation(W({b_, Rinv_}) - W({Rinv_, b_}) * LaurentQ::q(2));
    rs.add_relation(W({bs_, Rinv_}) - W({Rinv_, bs_}) * LaurentQ::q(-2));
    rs.complete();
    pres_.name = "sigma4q-loc";
    pres_.distinguished["zeta1"] = rs.nf(W({Rinv_, a_}));
    pres_.distinguished["zeta2"] = rs.nf(W({b_, Rinv_}));
    pres_.distinguished["zeta1*"] = rs.nf(star(W({Rinv_, a_}), rs.alphabet()));
    pres_.distinguished["zeta2*"] = rs.nf(star(W({b_, Rinv_}), rs.alphabet()));
    pres_.rs = std::move(rs);
}

// ---------------------------------------------------------------------------
// classical q=1 counterparts

namespace {

Presentation build_classical(const std::string& name, const Presentation& quantum) {
    Alphabet alpha;
    for (size_t g = 0; g < quantum.rs.alphabet().size(); ++g)
        alpha.add(quantum.rs.alphabet().gen(static_cast<GenId>(g)).display);
    for (size_t g = 0; g < quantum.rs.alphabet().size(); ++g) {
        GenId partner = quantum.rs.alphabet().star(static_cast<GenId>(g));
        alpha.set_star(quantum.rs.alphabet().gen(static_cast<GenId>(g)).display,
                       quantum.rs.alphabet().gen(partner).display);
    }
    RewriteSystem rs{std::move(alpha)};
    for (const RewriteRule& r : quantum.rs.rules()) {
        NCPoly rel = NCPoly(r.lhs) - r.rhs;
        rs.add_relation(rs.nf(rel.specialize(Rational(1))));
    }
    rs.complete();
    Presentation out;
    out.name = name;
    for (const auto& [key, val] : quantum.distinguished)
        out.distinguished[key] = rs.nf(val.specialize(Rational(1)));
    out.rs = std::move(rs);
    return out;
}

}  // namespace

const Presentation& classical_s7() {
    static const Presentation p = build_classical("classical-s7", S7q::instance().pres());
    return p;
}

const Presentation& classical_s4() {
    static const Presentation p = build_classical("classical-s4", Sigma4q::instance().pres());
    return p;
}

// ---------------------------------------------------------------------------

const Presentation& presentation(const std::string& name) {
    if (name == "uq4") return Uq4::instance().pres();
    if (name == "s7q") return S7q::instance().pres();
    if (name == "sigma4q") return Sigma4q::instance().pres();
    if (name == "sigma4q-loc") return Sigma4qLoc::instance().pres();
    if (name == "classical-s7") return classical_s7();
    if (name == "classical-s4") return classical_s4();
    throw std::invalid_argument("unknown presentation " + name);
}

std::vector<std::string> presentation_names() {
    return {"uq4", "s7q", "sigma4q", "sigma4q-loc", "classical-s7", "classical-s4"};
}

NCPoly embed_in_s7(const NCPoly& x) {
    const Sigma4q& s4 = Sigma4q::instance();
    const S7q& s7 = S7q::instance();
    NCPoly out;
    for (const auto& [w, c] : x.terms()) {
        NCPoly term = NCPoly::scalar(c);
        for (GenId g : w) {
            const NCPoly* img = nullptr;
            if (g == s4.R()) img = &s7.R();
            else if (g == s4.a()) img = &s7.a();
            else if (g == s4.as()) img = &s7.a_star();
            else if (g == s4.b()) img = &s7.b();
            else img = &s7.b_star();
            term = s7.rs().nf(term * *img);
        }
        out += term;
    }
    return s7.rs().nf(out);
}

}  // namespace qsphere
