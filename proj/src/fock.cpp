#include "qsphere/fock.hpp"

#include <cmath>
#include <mutex>
#include <sstream>

namespace qsphere {

// ---------------------------------------------------------------------------
// RadicalScalar

namespace {

Rational qpow(const Rational& q0, long e) {
    Rational r = 1;
    Rational base = e >= 0 ? q0 : Rational(1) / q0;
    for (long i = 0; i < std::labs(e); ++i) r *= base;
    return r;
}

// Largest square divisor of a positive integer found by trial division up to
// 1e5 plus a final perfect-square test. Returns (squarefree part, sqrt of the
// extracted square). The residue above the trial bound is squarefree for
// every value arising here: a prime p with p^2 | 2^m - 1 and m <= a few
// hundred must either satisfy p * ord_p(2) <= m (hence p small) or be a
// Wieferich prime, and 1093/3511 are checked explicitly below.
void extract_square(mpz_class v, mpz_class* sqfree, mpz_class* root) {
    *sqfree = 1;
    *root = 1;
    auto pull = [&](const mpz_class& p) {
        int count = 0;
        while (mpz_divisible_p(v.get_mpz_t(), p.get_mpz_t())) {
            v /= p;
            ++count;
        }
        for (int i = 0; i + 1 < count; i += 2) *root *= p;
        if (count % 2) *sqfree *= p;
    };
    pull(2);
    for (mpz_class p = 3; p <= 100000 && p * p <= v; p += 2)
        if (mpz_divisible_p(v.get_mpz_t(), p.get_mpz_t())) pull(p);
    pull(1093);
    pull(3511);
    if (mpz_perfect_square_p(v.get_mpz_t())) {
        mpz_class s;
        mpz_sqrt(s.get_mpz_t(), v.get_mpz_t());
        *root *= s;
    } else {
        *sqfree *= v;
    }
}

}  // namespace

RadicalScalar RadicalScalar::rational(const Rational& c) {
    RadicalScalar r;
    r.coeff_ = c;
    return r;
}

RadicalScalar RadicalScalar::root(const Rational& coeff, const Rational& radicand) {
    if (radicand < 0) throw std::invalid_argument("negative radicand");
    RadicalScalar r;
    if (coeff == 0 || radicand == 0) return r;
    static std::map<Rational, std::pair<Rational, Rational>> cache;  // raw -> (canon, factor)
    static std::mutex mtx;
    std::pair<Rational, Rational> canon;  // (squarefree radicand, rational multiplier)
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(radicand);
        if (it != cache.end()) {
            canon = it->second;
        } else {
            mpz_class nf, nr, df, dr;
            extract_square(mpz_class(radicand.get_num()), &nf, &nr);
            extract_square(mpz_class(radicand.get_den()), &df, &dr);
            // sqrt(n/d) = (nr/dr) * sqrt(nf/df)
            canon = {Rational(nf) / Rational(df), Rational(nr) / Rational(dr)};
            cache.emplace(radicand, canon);
        }
    }
    r.coeff_ = coeff * canon.second;
    r.radicand_ = canon.first;
    return r;
}

RadicalScalar RadicalScalar::operator*(const RadicalScalar& o) const {
    RadicalScalar r;
    if (is_zero() || o.is_zero()) return r;
    // With both radicands squarefree in numerator and denominator, pulling
    // out the pairwise gcds leaves coprime squarefree parts, so the product
    // stays canonical without any factoring.
    mpz_class n1 = radicand_.get_num(), n2 = o.radicand_.get_num();
    mpz_class d1 = radicand_.get_den(), d2 = o.radicand_.get_den();
    mpz_class gn, gd;
    mpz_gcd(gn.get_mpz_t(), n1.get_mpz_t(), n2.get_mpz_t());
    mpz_gcd(gd.get_mpz_t(), d1.get_mpz_t(), d2.get_mpz_t());
    r.coeff_ = coeff_ * o.coeff_ * Rational(gn) / Rational(gd);
    r.radicand_ = Rational((n1 / gn) * (n2 / gn)) / Rational((d1 / gd) * (d2 / gd));
    r.radicand_.canonicalize();
    return r;
}

RadicalScalar RadicalScalar::operator*(const Rational& c) const {
    RadicalScalar r = *this;
    r.coeff_ *= c;
    if (r.coeff_ == 0) r.radicand_ = 1;
    return r;
}

RadicalScalar RadicalScalar::operator+(const RadicalScalar& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (radicand_ != o.radicand_)
        throw RadicalMixing("sum of incompatible radicands " + rational_str(radicand_) + " and " +
                            rational_str(o.radicand_));
    RadicalScalar r = *this;
    r.coeff_ += o.coeff_;
    if (r.coeff_ == 0) r.radicand_ = 1;
    return r;
}

RadicalScalar RadicalScalar::operator-(const RadicalScalar& o) const { return *this + (-o); }

RadicalScalar RadicalScalar::operator-() const {
    RadicalScalar r = *this;
    r.coeff_ = -r.coeff_;
    return r;
}

double RadicalScalar::to_double() const {
    return coeff_.get_d() * std::sqrt(radicand_.get_d());
}

// ---------------------------------------------------------------------------
// TruncatedOperator

void TruncatedOperator::set(int n1, int n2, int m1, int m2, const RadicalScalar& v) {
    Key k{n1, n2, m1, m2};
    if (v.is_zero())
        entries_.erase(k);
    else
        entries_[k] = v;
}

RadicalScalar TruncatedOperator::at(int n1, int n2, int m1, int m2) const {
    auto it = entries_.find(Key{n1, n2, m1, m2});
    return it == entries_.end() ? RadicalScalar() : it->second;
}

TruncatedOperator TruncatedOperator::operator+(const TruncatedOperator& o) const {
    TruncatedOperator r = *this;
    for (const auto& [k, v] : o.entries_) {
        RadicalScalar s = r.at(k[0], k[1], k[2], k[3]) + v;
        r.set(k[0], k[1], k[2], k[3], s);
    }
    return r;
}

TruncatedOperator TruncatedOperator::operator-(const TruncatedOperator& o) const {
    TruncatedOperator r = *this;
    for (const auto& [k, v] : o.entries_) {
        RadicalScalar s = r.at(k[0], k[1], k[2], k[3]) - v;
        r.set(k[0], k[1], k[2], k[3], s);
    }
    return r;
}

TruncatedOperator TruncatedOperator::operator*(const TruncatedOperator& o) const {
    // Group the right factor's entries by row state.
    std::map<std::pair<int, int>, std::vector<std::pair<std::pair<int, int>, RadicalScalar>>> rows;
    for (const auto& [k, v] : o.entries_) rows[{k[0], k[1]}].push_back({{k[2], k[3]}, v});
    TruncatedOperator r(N_, q0_);
    for (const auto& [k, v] : entries_) {
        auto it = rows.find({k[2], k[3]});
        if (it == rows.end()) continue;
        for (const auto& [col, w] : it->second) {
            RadicalScalar s = r.at(k[0], k[1], col.first, col.second) + v * w;
            r.set(k[0], k[1], col.first, col.second, s);
        }
    }
    return r;
}

TruncatedOperator TruncatedOperator::scale(const Rational& c) const {
    TruncatedOperator r(N_, q0_);
    if (c == 0) return r;
    for (const auto& [k, v] : entries_) r.entries_[k] = v * c;
    return r;
}

TruncatedOperator TruncatedOperator::dagger() const {
    TruncatedOperator r(N_, q0_);
    for (const auto& [k, v] : entries_) r.entries_[Key{k[2], k[3], k[0], k[1]}] = v;
    return r;
}

TruncatedOperator TruncatedOperator::identity(int N, const Rational& q0) {
    TruncatedOperator r(N, q0);
    for (int n1 = 0; n1 <= N; ++n1)
        for (int n2 = 0; n2 <= N; ++n2) r.set(n1, n2, n1, n2, RadicalScalar::rational(1));
    return r;
}

bool TruncatedOperator::interior_zero(int margin) const {
    int lim = N_ - margin;
    for (const auto& [k, v] : entries_)
        if (k[0] <= lim && k[1] <= lim && k[2] <= lim && k[3] <= lim && !v.is_zero()) return false;
    return true;
}

double TruncatedOperator::interior_max_abs(int margin) const {
    int lim = N_ - margin;
    double m = 0;
    for (const auto& [k, v] : entries_)
        if (k[0] <= lim && k[1] <= lim && k[2] <= lim && k[3] <= lim)
            m = std::max(m, std::fabs(v.to_double()));
    return m;
}

// ---------------------------------------------------------------------------
// The representation sigma

namespace {

struct GenMatrices {
    TruncatedOperator R, a, as, b, bs;
};

GenMatrices build_gens(int N, const Rational& q0) {
    TruncatedOperator R(N, q0), a(N, q0), b(N, q0);
    for (int n1 = 0; n1 <= N; ++n1)
        for (int n2 = 0; n2 <= N; ++n2) {
            R.set(n1, n2, n1, n2, RadicalScalar::rational(qpow(q0, 2L * (n1 + n2))));
            if (n1 >= 1)
                a.set(n1 - 1, n2, n1, n2,
                      RadicalScalar::root(qpow(q0, n1 + 2L * n2 - 1), 1 - qpow(q0, 2L * n1)));
            if (n2 + 1 <= N)
                b.set(n1, n2 + 1, n1, n2,
                      RadicalScalar::root(qpow(q0, n1 + n2), 1 - qpow(q0, 2L * (n2 + 1))));
        }
    return {R, a, a.dagger(), b, b.dagger()};
}

}  // namespace

TruncatedOperator rep_sigma(const NCPoly& x, int N, const Rational& q0) {
    if (N < 1 || q0 <= 0 || q0 >= 1) throw std::invalid_argument("rep_sigma needs N >= 1, 0 < q0 < 1");
    const Sigma4q& s = Sigma4q::instance();
    GenMatrices g = build_gens(N, q0);
    NCPoly xn = s.rs().nf(x);
    TruncatedOperator out(N, q0);
    for (const auto& [w, c] : xn.terms()) {
        TruncatedOperator acc = TruncatedOperator::identity(N, q0);
        for (GenId l : w) {
            const TruncatedOperator* m = nullptr;
            if (l == s.R())
                m = &g.R;
            else if (l == s.a())
                m = &g.a;
            else if (l == s.as())
                m = &g.as;
            else if (l == s.b())
                m = &g.b;
            else
                m = &g.bs;
            acc = acc * *m;
        }
        out = out + acc.scale(c.eval(q0));
    }
    return out;
}

LaurentQ rep_epsilon(const NCPoly& x) {
    return Sigma4q::instance().rs().nf(x).constant_term();
}

FockReport check_relations_on_truncation(int N, const Rational& q0) {
    const Sigma4q& s = Sigma4q::instance();
    FockReport rep;
    for (size_t i = 0; i < s.relations().size(); ++i) {
        TruncatedOperator t = rep_sigma(s.relations()[i], N, q0);
        bool ok = t.interior_zero(2);
        rep.lines.push_back({s.relation_names()[i], ok, ""});
        rep.ok = rep.ok && ok;
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Exact traces

RatQ exact_trace(const Word& w) {
    if (w.empty()) return RatQ(0);  // tr_sigma(1) = tr(sigma - eps)(1) = 0
    const Sigma4q& s = Sigma4q::instance();

    // Apply the letters right-to-left to a generic state |n1+s1, n2+s2>,
    // accumulating a monomial q^c x^ex y^ey (x = q^{n1}, y = q^{n2}) and
    // radical atoms sqrt(1 - q^{2(n_axis + shift)}).
    long s1 = 0, s2 = 0, ex = 0, ey = 0;
    LaurentQ qc = LaurentQ(1);
    std::map<std::pair<int, long>, long> rad;  // (axis, shift) -> count
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        GenId l = *it;
        if (l == s.R()) {
            qc *= LaurentQ::q(2 * (s1 + s2));
            ex += 2;
            ey += 2;
        } else if (l == s.a()) {
            qc *= LaurentQ::q(s1 + 2 * s2 - 1);
            ex += 1;
            ey += 2;
            ++rad[{0, s1}];
            --s1;
        } else if (l == s.as()) {
            qc *= LaurentQ::q(s1 + 2 * s2);
            ex += 1;
            ey += 2;
            ++rad[{0, s1 + 1}];
            ++s1;
        } else if (l == s.b()) {
            qc *= LaurentQ::q(s1 + s2);
            ex += 1;
            ey += 1;
            ++rad[{1, s2 + 1}];
            ++s2;
        } else {
            qc *= LaurentQ::q(s1 + s2 - 1);
            ex += 1;
            ey += 1;
            ++rad[{1, s2}];
            --s2;
        }
    }
    if (s1 != 0 || s2 != 0)
        throw std::invalid_argument("exact_trace: word is not diagonal: " +
                                    word_str(w, s.rs().alphabet()));

    // A diagonal word crosses each excursion level once down and once up, so
    // every radical atom occurs an even number of times and telescopes.
    std::map<std::pair<long, long>, LaurentQ> poly;  // (alpha, beta) -> coeff
    poly[{ex, ey}] = qc;
    for (const auto& [atom, count] : rad) {
        if (count % 2) throw RadicalMixing("unpaired radical atom in a diagonal word");
        for (long t = 0; t < count / 2; ++t) {
            std::map<std::pair<long, long>, LaurentQ> next;
            for (const auto& [e, c] : poly) {
                next[e] += c;  // 1 * term
                std::pair<long, long> up = e;
                (atom.first == 0 ? up.first : up.second) += 2;
                next[up] -= c * LaurentQ::q(2 * atom.second);  // -q^{2 shift} X^2 * term
            }
            poly = std::move(next);
        }
    }

    RatQ total;
    for (const auto& [e, c] : poly) {
        if (c.is_zero()) continue;
        if (e.first <= 0 || e.second <= 0)
            throw DivergentSum("geometric sum with non-positive exponent");
        LaurentQ den = (LaurentQ(1) - LaurentQ::q(e.first)) * (LaurentQ(1) - LaurentQ::q(e.second));
        total += RatQ(c, den);
    }
    return total;
}

RatQ trace_functional(const NCPoly& x) {
    const Sigma4q& s = Sigma4q::instance();
    NCPoly xn = s.rs().nf(x);
    RatQ total;
    for (const auto& [w, c] : xn.terms()) {
        if (w.empty()) continue;  // epsilon cancels the constant exactly
        int nas = 0, na = 0, nr = 0, nbs = 0, nb = 0;
        Sigma4q::word_powers(w, s, &nas, &na, &nr, &nbs, &nb);
        if (na != nas || nb != nbs) continue;  // off-diagonal: zero diagonal at every cutoff
        total += RatQ(c) * exact_trace(w);
    }
    return total;
}

TraceClassReport trace_class_diagnostics(int N, const Rational& q0) {
    TraceClassReport rep;
    double q = q0.get_d();
    auto add_line = [&rep](const std::string& name, double sum, double bound, double printed) {
        TraceClassLine l{name, sum, bound, printed, sum <= bound * (1 + 1e-12),
                         sum <= printed * (1 + 1e-12)};
        rep.ok = rep.ok && l.ok;
        rep.lines.push_back(l);
    };
    // sigma(R) is diagonal positive: singular values are the entries and the
    // printed value (1-q^2)^{-2} is the exact limit.
    double sr = 0;
    for (int n1 = 0; n1 <= N; ++n1)
        for (int n2 = 0; n2 <= N; ++n2) sr += std::pow(q, 2.0 * (n1 + n2));
    double br = 1.0 / ((1 - q * q) * (1 - q * q));
    add_line("sum |s.v.| sigma(R)", sr, br, br);
    // sigma(a), sigma(b) are shifts of diagonals: singular values are the
    // entry magnitudes. Valid bounds come from sqrt(1-q^{2n}) <= 1.
    double sa = 0;
    for (int n1 = 1; n1 <= N; ++n1)
        for (int n2 = 0; n2 <= N; ++n2)
            sa += std::pow(q, n1 + 2.0 * n2 - 1) * std::sqrt(1 - std::pow(q, 2.0 * n1));
    add_line("sum |s.v.| sigma(a)", sa, 1.0 / ((1 - q) * (1 - q * q)),
             1.0 / ((1 - q) * (1 - q * q * q)));
    double sb = 0;
    for (int n1 = 0; n1 <= N; ++n1)
        for (int n2 = 0; n2 + 1 <= N; ++n2)
            sb += std::pow(q, n1 + 1.0 * n2) * std::sqrt(1 - std::pow(q, 2.0 * (n2 + 1)));
    add_line("sum |s.v.| sigma(b)", sb, 1.0 / ((1 - q) * (1 - q)),
             (1 + q * q) / ((1 - q) * (1 - q * q * q)));
    return rep;
}

FockReport rep_zeta_check(int N, const Rational& q0) {
    const Sigma4q& s = Sigma4q::instance();
    GenMatrices g = build_gens(N, q0);
    // sigma(R) is diagonal and positive, so its inverse is entrywise.
    TruncatedOperator rinv(N, q0);
    for (int n1 = 0; n1 <= N; ++n1)
        for (int n2 = 0; n2 <= N; ++n2)
            rinv.set(n1, n2, n1, n2, RadicalScalar::rational(qpow(q0, -2L * (n1 + n2))));
    TruncatedOperator z1 = rinv * g.a;
    TruncatedOperator z2 = g.b * rinv;
    TruncatedOperator z1s = z1.dagger(), z2s = z2.dagger();
    TruncatedOperator id = TruncatedOperator::identity(N, q0);
    Rational q2 = q0 * q0;
    Rational one_m_q2 = 1 - q2;

    FockReport rep;
    auto add = [&](const std::string& name, const TruncatedOperator& t) {
        bool ok = t.interior_zero(2);
        rep.lines.push_back({name, ok, ""});
        rep.ok = rep.ok && ok;
    };
    add("zeta1 zeta2 - q^-1 zeta2 zeta1", z1 * z2 - (z2 * z1).scale(Rational(1) / q0));
    add("zeta1 zeta1* - q^-2 zeta1* zeta1 - (1-q^2)",
        z1 * z1s - (z1s * z1).scale(Rational(1) / q2) - id.scale(one_m_q2));
    add("zeta1 zeta2* - q^-1 zeta2* zeta1", z1 * z2s - (z2s * z1).scale(Rational(1) / q0));
    add("zeta2 zeta2* - q^2 zeta2* zeta2 + (1-q^2)(q^2 + zeta1* zeta1)",
        z2 * z2s - (z2s * z2).scale(q2) + (id.scale(q2) + z1s * z1).scale(one_m_q2));
    (void)s;
    return rep;
}

}  // namespace qsphere
