#include "qsphere/chern.hpp"

#include "qsphere/linalg.hpp"

#include <set>

namespace qsphere {

void Chain::add_term(const TensorWord& t, const RatQ& c) {
    if (c.is_zero()) return;
    if (static_cast<int>(t.size()) != degree_ + 1)
        throw std::invalid_argument("tensor leg count does not match the chain degree");
    auto it = terms_.find(t);
    RatQ nv = (it == terms_.end() ? RatQ() : it->second) + c;
    if (nv.is_zero()) {
        if (it != terms_.end()) terms_.erase(it);
    } else {
        terms_[t] = nv;
    }
}

Chain Chain::operator+(const Chain& o) const {
    Chain r = *this;
    for (const auto& [t, c] : o.terms_) r.add_term(t, c);
    return r;
}

Chain Chain::operator-(const Chain& o) const {
    Chain r = *this;
    for (const auto& [t, c] : o.terms_) r.add_term(t, -c);
    return r;
}

Chain Chain::scale(const RatQ& c) const {
    Chain r(degree_);
    if (c.is_zero()) return r;
    for (const auto& [t, k] : terms_) r.terms_[t] = k * c;
    return r;
}

Chain Chain::from_poly(const NCPoly& p) {
    const Sigma4q& s = Sigma4q::instance();
    NCPoly pn = s.rs().nf(p);
    Chain r(0);
    for (const auto& [w, c] : pn.terms()) r.add_term(TensorWord{w}, RatQ(c));
    return r;
}

Chain face_map(const Chain& c, int i) {
    int n = c.degree();
    if (n < 1) throw std::invalid_argument("face map needs degree >= 1");
    if (i < 0 || i > n) throw std::invalid_argument("face index out of range");
    const Sigma4q& s = Sigma4q::instance();
    Chain out(n - 1);
    for (const auto& [t, coef] : c.terms()) {
        NCPoly prod = i < n ? s.rs().nf(NCPoly(t[i]) * NCPoly(t[i + 1]))
                            : s.rs().nf(NCPoly(t[n]) * NCPoly(t[0]));
        for (const auto& [w, lc] : prod.terms()) {
            TensorWord nt;
            nt.reserve(n);
            if (i < n) {
                for (int k = 0; k < i; ++k) nt.push_back(t[k]);
                nt.push_back(w);
                for (int k = i + 2; k <= n; ++k) nt.push_back(t[k]);
            } else {
                nt.push_back(w);
                for (int k = 1; k < n; ++k) nt.push_back(t[k]);
            }
            out.add_term(nt, coef * RatQ(lc));
        }
    }
    return out;
}

Chain hochschild_boundary(const Chain& c) {
    int n = c.degree();
    Chain out(n - 1);
    for (int i = 0; i <= n; ++i) {
        Chain f = face_map(c, i);
        out = (i % 2 == 0) ? out + f : out - f;
    }
    return out;
}

Chain cyclic_t(const Chain& c) {
    int n = c.degree();
    Chain out(n);
    RatQ sign(Rational(n % 2 == 0 ? 1 : -1));
    for (const auto& [t, coef] : c.terms()) {
        TensorWord nt(t.begin() + 1, t.end());
        nt.push_back(t[0]);
        out.add_term(nt, coef * sign);
    }
    return out;
}

Chain generalized_trace(const MatrixChain& m) {
    if (m.empty()) throw DimensionMismatch("empty matrix tensor");
    size_t k = m[0].rows;
    for (const NCMatrix& leg : m)
        if (leg.rows != k || leg.cols != k) throw DimensionMismatch("legs must be square of equal size");
    int n = static_cast<int>(m.size());
    Chain out(n - 1);
    // Iterate over all index cycles j_1, ..., j_n.
    std::vector<size_t> j(n, 0);
    while (true) {
        // term [M_1]_{j1 j2} (x) ... (x) [M_n]_{jn j1}
        bool nonzero = true;
        for (int l = 0; l < n && nonzero; ++l)
            nonzero = !m[l].at(j[l], j[(l + 1) % n]).is_zero();
        if (nonzero) {
            // Expand the tensor of polynomials into word tensors, leg by leg.
            std::vector<std::pair<TensorWord, RatQ>> acc = {{TensorWord{}, RatQ(1)}};
            for (int l = 0; l < n; ++l) {
                const NCPoly& entry = m[l].at(j[l], j[(l + 1) % n]);
                std::vector<std::pair<TensorWord, RatQ>> next;
                for (const auto& [tw, c] : acc)
                    for (const auto& [w, lc] : entry.terms()) {
                        TensorWord grown = tw;
                        grown.push_back(w);
                        next.emplace_back(std::move(grown), c * RatQ(lc));
                    }
                acc = std::move(next);
            }
            for (const auto& [tw, c] : acc) out.add_term(tw, c);
        }
        int pos = n - 1;
        while (pos >= 0 && j[pos] == k - 1) j[pos--] = 0;
        if (pos < 0) break;
        ++j[pos];
    }
    return out;
}

Chain chern(int n) {
    static std::map<int, Chain> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    NCMatrix G = build_G();
    MatrixChain legs(2 * n + 1, G);
    Chain c = generalized_trace(legs).scale(RatQ(Rational(n % 2 == 0 ? 1 : -1)));
    cache.emplace(n, c);
    return c;
}

Chain s_operator(const Chain& c) {
    int n = c.degree();
    if (n < 2) throw std::invalid_argument("s_operator needs degree >= 2");
    Chain out(n - 2);
    for (int i = 0; i < n; ++i)
        for (int jj = i + 1; jj <= n; ++jj) {
            Chain f = face_map(face_map(c, jj), i);
            out = ((i + jj) % 2 == 0) ? out + f : out - f;
        }
    return out.scale(RatQ(Rational(-1, static_cast<long>(n) * (n - 1))));
}

RatQ pairing_with_trace(const Chain& c) {
    if (c.degree() != 0) throw std::invalid_argument("pairing needs a degree-0 chain");
    RatQ total;
    for (const auto& [t, coef] : c.terms()) total += coef * trace_functional(NCPoly(t[0]));
    return total;
}

bool cyclic_cycle_check(const Chain& c, int degree_bound) {
    for (const auto& [t, coef] : c.terms()) {
        size_t deg = 0;
        for (const Word& w : t) deg += w.size();
        if (static_cast<int>(deg) > degree_bound)
            throw DegreeBoundExceeded("tensor degree exceeds the configured bound");
    }
    if (c.degree() == 0) return true;  // no face maps below degree 1: vacuous
    Chain b = hochschild_boundary(c);
    if (b.is_zero()) return true;
    // Close the occurring tensors under rotation and span their (1-t)-images.
    std::set<TensorWord> orbit;
    for (const auto& [t, coef] : b.terms()) {
        TensorWord cur = t;
        for (size_t r = 0; r <= t.size(); ++r) {
            orbit.insert(cur);
            TensorWord rot(cur.begin() + 1, cur.end());
            rot.push_back(cur[0]);
            cur = std::move(rot);
        }
    }
    SpanSolver<TensorWord, RatQ> image;
    for (const TensorWord& t : orbit) {
        Chain unit(b.degree());
        unit.add_term(t, RatQ(1));
        Chain img = unit - cyclic_t(unit);
        SpanSolver<TensorWord, RatQ>::Vec v(img.terms().begin(), img.terms().end());
        image.add(v);
    }
    SpanSolver<TensorWord, RatQ>::Vec target(b.terms().begin(), b.terms().end());
    return image.contains(target);
}

bool s_chern_witness(int bound) {
    const Sigma4q& s = Sigma4q::instance();
    Chain target = s_operator(chern(1)) + chern(0).scale(RatQ(Rational(1, 2)));
    if (target.is_zero()) return true;
    // In degree 0 the (1-t)-image vanishes, so triviality in the Connes
    // complex means being a boundary beta(u (x) v) = uv - vu.
    std::vector<Word> words = s.rs().irreducible_words_upto(static_cast<size_t>(bound));
    SpanSolver<Word, RatQ> boundaries;
    for (const Word& u : words)
        for (const Word& v : words) {
            if (u.size() + v.size() > static_cast<size_t>(bound)) continue;
            NCPoly comm = s.rs().nf(NCPoly(u) * NCPoly(v) - NCPoly(v) * NCPoly(u));
            SpanSolver<Word, RatQ>::Vec vec;
            for (const auto& [w, lc] : comm.terms()) vec[w] = RatQ(lc);
            if (!vec.empty()) boundaries.add(vec);
        }
    SpanSolver<Word, RatQ>::Vec tvec;
    for (const auto& [t, coef] : target.terms()) tvec[t[0]] = coef;
    return boundaries.contains(tvec);
}

}  // namespace qsphere
