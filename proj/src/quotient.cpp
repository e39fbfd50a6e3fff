#include "qsphere/quotient.hpp"

#include "qsphere/linalg.hpp"

#include <array>
#include <utility>

namespace qsphere {

namespace {

enum class LetterKind { OffBlock, SouthEast, NorthWest };

struct ReductionTables {
    std::array<LetterKind, 16> kind;
    std::array<GenId, 16> se_sub;     // replacement letter for SE letters
    std::array<int, 16> se_sign;      // sign of the replacement
    GenId t21, t22, t11, t12;

    ReductionTables() {
        const Uq4& u = Uq4::instance();
        kind.fill(LetterKind::OffBlock);
        auto nw = [&](int i, int j) { kind[u.t(i, j)] = LetterKind::NorthWest; };
        nw(1, 1);
        nw(1, 2);
        nw(2, 1);
        nw(2, 2);
        auto se = [&](int i, int j, int ri, int rj, int sign) {
            kind[u.t(i, j)] = LetterKind::SouthEast;
            se_sub[u.t(i, j)] = u.t(ri, rj);
            se_sign[u.t(i, j)] = sign;
        };
        // from t_11 - t_44, t_12 + t_43, t_21 + t_34, t_22 - t_33 in R
        se(4, 4, 1, 1, +1);
        se(4, 3, 1, 2, -1);
        se(3, 4, 2, 1, -1);
        se(3, 3, 2, 2, +1);
        t21 = u.t(2, 1);
        t22 = u.t(2, 2);
        t11 = u.t(1, 1);
        t12 = u.t(1, 2);
    }
};

const ReductionTables& tables() {
    static const ReductionTables t;
    return t;
}

}  // namespace

const std::vector<NCPoly>& coideal_span() {
    static const std::vector<NCPoly> span = [] {
        const Uq4& u = Uq4::instance();
        std::vector<NCPoly> v;
        for (auto [i, j] : {std::pair{1, 3}, {3, 1}, {1, 4}, {4, 1}, {2, 4}, {4, 2}, {2, 3},
                            {3, 2}})
            v.push_back(u.T(i, j));
        v.push_back(u.T(1, 1) - u.T(4, 4));
        v.push_back(u.T(1, 2) + u.T(4, 3));
        v.push_back(u.T(2, 1) + u.T(3, 4));
        v.push_back(u.T(2, 2) - u.T(3, 3));
        v.push_back(u.rs().nf(u.T(1, 1) * u.T(2, 2) - u.T(1, 2) * u.T(2, 1) * LaurentQ::q() -
                              NCPoly::unit()));
        return v;
    }();
    return span;
}

const std::vector<std::string>& coideal_span_names() {
    static const std::vector<std::string> names = {
        "t13", "t31", "t14", "t41", "t24", "t42", "t23", "t32",
        "t11 - t44", "t12 + t43", "t21 + t34", "t22 - t33",
        "t11 t22 - q t12 t21 - 1"};
    return names;
}

NCPoly reduce_mod_R(const NCPoly& xin) {
    const Uq4& u = Uq4::instance();
    const ReductionTables& tb = tables();
    NCPoly x = u.rs().nf(xin);
    const size_t bound = 10000;
    for (size_t steps = 0;; ++steps) {
        if (steps > bound) throw ReductionDiverged("reduce_mod_R exceeded the step bound");
        bool changed = false;
        NCPoly next;
        for (const auto& [w, c] : x.terms()) {
            if (w.empty()) {
                next.add_term(w, c);
                continue;
            }
            GenId g = w[0];
            if (tb.kind[g] == LetterKind::OffBlock) {
                changed = true;  // front letter lies in R: the term dies
                continue;
            }
            if (tb.kind[g] == LetterKind::SouthEast) {
                Word nw = w;
                nw[0] = tb.se_sub[g];
                next.add_term(nw, c * LaurentQ(tb.se_sign[g]));
                changed = true;
                continue;
            }
            // Pure NW word (letters t_21 < t_22 < t_11 < t_12 are the
            // highest-precedence block, so a sorted word with NW front is
            // all NW). Remove one t_22 t_11 junction via centrality of the
            // 2x2 quantum determinant: t_22 t_11 -> 1 + q^-1 t_21 t_12.
            size_t pos = w.size();
            for (size_t i = 0; i + 1 < w.size(); ++i)
                if (w[i] == tb.t22 && w[i + 1] == tb.t11) {
                    pos = i;
                    break;
                }
            if (pos < w.size()) {
                Word shorter(w.begin(), w.begin() + pos);
                shorter.insert(shorter.end(), w.begin() + pos + 2, w.end());
                Word swapped(w.begin(), w.begin() + pos);
                swapped.push_back(tb.t21);
                swapped.push_back(tb.t12);
                swapped.insert(swapped.end(), w.begin() + pos + 2, w.end());
                next.add_term(shorter, c);
                next.add_term(swapped, c * LaurentQ::q(-1));
                changed = true;
                continue;
            }
            next.add_term(w, c);
        }
        if (!changed) return x;
        x = u.rs().nf(next);
    }
}

NCPoly reduce_mod_R(const ULoc& x) {
    // D_q reduces to 1, so the D_q^{-d} factor does not move the class.
    return reduce_mod_R(x.p);
}

NCPoly r_class(int i, int j) { return reduce_mod_R(Uq4::instance().T(i, j)); }

// ---------------------------------------------------------------------------
// Coaction

namespace {

// z-letter classification: returns (index 1..4, is_star)
std::pair<int, bool> z_letter(GenId g) {
    const S7q& s = S7q::instance();
    for (int i = 1; i <= 4; ++i) {
        if (g == s.z(i)) return {i, false};
        if (g == s.zs(i)) return {i, true};
    }
    throw std::logic_error("not an S7q letter");
}

}  // namespace

Coaction coact(const NCPoly& x) {
    const S7q& s = S7q::instance();
    const Uq4& u = Uq4::instance();
    // per-word coactions, each with its own antipode-denominator power
    std::vector<std::pair<Tensor2, long>> parts;
    long dmax = 0;
    for (const auto& [w, c] : x.terms()) {
        Tensor2 acc;
        acc.add_term(Word{}, Word{}, c);
        long d = 0;
        for (GenId g : w) {
            auto [i, st] = z_letter(g);
            Tensor2 step;
            if (!st) {
                for (int j = 1; j <= 4; ++j)
                    step.add_term(Word{s.z(j)}, Word{u.t(j, i)}, LaurentQ(1));
            } else {
                // Delta(z_i*) = sum_j z_j* (x) S(t_ij); S carries one D_q^-1
                for (int j = 1; j <= 4; ++j) {
                    ULoc sij = u.S(i, j);
                    for (const auto& [mw, mc] : sij.p.terms())
                        step.add_term(Word{s.zs(j)}, mw, mc);
                }
                ++d;
            }
            acc = (acc * step).nf(s.rs(), u.rs());
        }
        dmax = std::max(dmax, d);
        parts.emplace_back(std::move(acc), d);
    }
    Coaction out;
    out.d = dmax;
    for (auto& [t, d] : parts) {
        for (; d < dmax; ++d) {
            Tensor2 det_right;
            for (const auto& [mw, mc] : u.det4().terms()) det_right.add_term(Word{}, mw, mc);
            t = (t * det_right).nf(s.rs(), u.rs());
        }
        out.t = out.t + t;
    }
    return out;
}

Tensor2 coact_r(const NCPoly& x) {
    const S7q& s = S7q::instance();
    const Uq4& u = Uq4::instance();
    Tensor2 out;
    for (const auto& [w, c] : x.terms()) {
        Tensor2 acc;
        acc.add_term(Word{}, Word{}, c);
        for (GenId g : w) {
            auto [i, st] = z_letter(g);
            Tensor2 next;
            for (const auto& [lr, k] : acc.terms()) {
                for (int j = 1; j <= 4; ++j) {
                    Word l = lr.first;
                    NCPoly right;
                    if (!st) {
                        l.push_back(s.z(j));
                        right = reduce_mod_R(NCPoly(lr.second) * u.T(j, i));
                    } else {
                        l.push_back(s.zs(j));
                        right = reduce_mod_R(NCPoly(lr.second) * u.S(i, j).p);
                    }
                    for (const auto& [rw, rc] : right.terms()) next.add_term(l, rw, k * rc);
                }
            }
            // normal-form left legs, keep right legs (already class reps)
            Tensor2 sorted;
            for (const auto& [lr, k] : next.terms()) {
                NCPoly ln = s.rs().nf_word(lr.first);
                for (const auto& [lw, lc] : ln.terms()) sorted.add_term(lw, lr.second, k * lc);
            }
            acc = std::move(sorted);
        }
        out = out + acc;
    }
    return out;
}

bool is_coinvariant(const NCPoly& x) {
    Tensor2 expect;
    NCPoly xn = S7q::instance().rs().nf(x);
    for (const auto& [w, c] : xn.terms()) expect.add_term(w, Word{}, c);
    return coact_r(x) == expect;
}

std::vector<NCPoly> coinvariant_slice(size_t d, size_t bound) {
    if (d > bound) throw DegreeBoundExceeded("coinvariant_slice degree above bound");
    const S7q& s7 = S7q::instance();
    const Sigma4q& s4 = Sigma4q::instance();

    // candidate basis: images of the Sigma4q basis monomials of degree <= d/2
    std::vector<NCPoly> basis;
    SpanSolver<Word, RatQ> indep;
    for (size_t k = 0; 2 * k <= d; ++k)
        for (const Word& w : s4.rs().irreducible_words(k)) {
            NCPoly img = embed_in_s7(NCPoly(w));
            if (!is_coinvariant(img))
                throw std::logic_error("candidate coinvariant fails the coaction test");
            SpanSolver<Word, RatQ>::Vec vec;
            for (const auto& [mw, mc] : img.terms()) vec[mw] = RatQ(mc);
            if (!indep.add(vec))
                throw std::logic_error("candidate coinvariants are linearly dependent");
            basis.push_back(std::move(img));
        }

    // completeness certificate: the coaction system at q0 = 1/2 has nullity
    // equal to the candidate count (specializing can only grow the
    // solution space, so this pins the generic dimension from above)
    // the sphere rule drops z-degree, so the system does not split by
    // degree: solve over all monomials of degree <= d at once
    const Rational q0(1, 2);
    std::vector<Word> mons = s7.rs().irreducible_words_upto(d);
    SpanSolver<std::pair<Word, Word>, Rational> rows;
    size_t rank = 0;
    for (const Word& m : mons) {
        Tensor2 sys = coact_r(NCPoly(m));
        sys.add_term(m, Word{}, LaurentQ(-1));
        SpanSolver<std::pair<Word, Word>, Rational>::Vec vec;
        for (const auto& [lr, c] : sys.terms()) {
            Rational v = c.eval(q0);
            if (v != 0) vec[lr] = v;
        }
        if (rows.add(vec)) ++rank;
    }
    size_t nullity = mons.size() - rank;
    if (nullity != basis.size())
        throw std::logic_error("coinvariant dimension certificate failed");
    return basis;
}

}  // namespace qsphere
