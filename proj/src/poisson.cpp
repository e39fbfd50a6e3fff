#include "qsphere/poisson.hpp"

#include "qsphere/linalg.hpp"

#include <optional>
#include <random>
#include <sstream>

namespace qsphere {

// ---------------------------------------------------------------------------
// Matrix helpers

Mat4 mat_mul(const Mat4& a, const Mat4& b) {
    Mat4 r{};
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) {
            if (a[4 * i + k].is_zero()) continue;
            for (int j = 0; j < 4; ++j) r[4 * i + j] = r[4 * i + j] + a[4 * i + k] * b[4 * k + j];
        }
    return r;
}

Mat4 mat_add(const Mat4& a, const Mat4& b) {
    Mat4 r{};
    for (int i = 0; i < 16; ++i) r[i] = a[i] + b[i];
    return r;
}

Mat4 mat_sub(const Mat4& a, const Mat4& b) {
    Mat4 r{};
    for (int i = 0; i < 16; ++i) r[i] = a[i] - b[i];
    return r;
}

Mat4 mat_scale(const Mat4& a, const GaussQ& c) {
    Mat4 r{};
    for (int i = 0; i < 16; ++i) r[i] = a[i] * c;
    return r;
}

Mat4 mat_dagger(const Mat4& a) {
    Mat4 r{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r[4 * i + j] = a[4 * j + i].conj();
    return r;
}

Mat4 lie_bracket(const Mat4& a, const Mat4& b) { return mat_sub(mat_mul(a, b), mat_mul(b, a)); }

bool is_antihermitian(const Mat4& a) {
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (a[4 * i + j] != -a[4 * j + i].conj()) return false;
    return true;
}

namespace u4 {

static Mat4 e(int i, int j) {  // elementary matrix, 1-based
    Mat4 r{};
    r[4 * (i - 1) + (j - 1)] = GaussQ(1);
    return r;
}

Mat4 H(int i) {
    return mat_scale(mat_sub(e(i, i), e(i + 1, i + 1)), GaussQ(0, 1));
}

Mat4 E(int i) {
    // (1/2i) x = -(i/2) x
    return mat_scale(mat_add(e(i, i + 1), e(i + 1, i)), GaussQ(0, Rational(-1, 2)));
}

Mat4 F(int i) {
    return mat_scale(mat_sub(e(i, i + 1), e(i + 1, i)), GaussQ(Rational(1, 2)));
}

Mat4 Hc() {
    Mat4 r{};
    for (int i = 0; i < 4; ++i) r[4 * i + i] = GaussQ(0, 1);
    return r;
}

Mat4 h() {
    Mat4 r = mat_scale(H(1), GaussQ(Rational(1, 4)));
    r = mat_add(r, mat_scale(H(2), GaussQ(Rational(1, 2))));
    r = mat_add(r, mat_scale(H(3), GaussQ(Rational(3, 4))));
    r = mat_add(r, mat_scale(Hc(), GaussQ(Rational(3, 4))));
    return r;
}

Mat4 g() {
    Mat4 r{};
    r[0] = GaussQ(1);
    r[5] = GaussQ(1);
    r[11] = GaussQ(1);      // row 3 (0-based 2): e_{3,4}
    r[14] = GaussQ(-1);     // row 4: -e_{4,3}
    return r;
}

Mat4 adg(const Mat4& x) {
    // g is real orthogonal, so g^-1 = g^T.
    Mat4 gm = g();
    Mat4 gt{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) gt[4 * i + j] = gm[4 * j + i];
    return mat_mul(mat_mul(gm, x), gt);
}

}  // namespace u4

// ---------------------------------------------------------------------------
// Rational decomposition in a list of matrices (32 real coordinates)

using Flat = std::array<Rational, 32>;

static Flat flatten(const Mat4& m) {
    Flat f{};
    for (int i = 0; i < 16; ++i) {
        f[i] = m[i].re;
        f[16 + i] = m[i].im;
    }
    return f;
}

static std::optional<std::vector<Rational>> decompose_in(const std::vector<Mat4>& basis,
                                                         const Mat4& target) {
    const int n = static_cast<int>(basis.size());
    // Augmented system: 32 equations, n unknowns.
    std::vector<std::vector<Rational>> aug(32, std::vector<Rational>(n + 1, 0));
    for (int k = 0; k < n; ++k) {
        Flat f = flatten(basis[k]);
        for (int r = 0; r < 32; ++r) aug[r][k] = f[r];
    }
    Flat t = flatten(target);
    for (int r = 0; r < 32; ++r) aug[r][n] = t[r];

    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < n && row < 32; ++col) {
        int pr = -1;
        for (int r = row; r < 32; ++r)
            if (aug[r][col] != 0) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        std::swap(aug[row], aug[pr]);
        Rational p = aug[row][col];
        for (int c = col; c <= n; ++c) aug[row][c] /= p;
        for (int r = 0; r < 32; ++r) {
            if (r == row || aug[r][col] == 0) continue;
            Rational f = aug[r][col];
            for (int c = col; c <= n; ++c) aug[r][c] -= f * aug[row][c];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (int r = row; r < 32; ++r)
        if (aug[r][n] != 0) return std::nullopt;

    std::vector<Rational> coeffs(n, 0);
    for (int k = 0; k < row; ++k) coeffs[pivot_col[k]] = aug[k][n];
    // Free columns would make the solution non-unique; our bases are
    // independent so every column is a pivot.
    return coeffs;
}

std::vector<Mat4> bracket_closure(std::vector<Mat4> gens) {
    std::vector<Mat4> basis;
    for (const Mat4& g : gens)
        if (!decompose_in(basis, g)) basis.push_back(g);
    bool grew = true;
    while (grew) {
        grew = false;
        size_t n = basis.size();
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j) {
                Mat4 c = lie_bracket(basis[i], basis[j]);
                if (!decompose_in(basis, c)) {
                    basis.push_back(c);
                    grew = true;
                }
            }
    }
    return basis;
}

// ---------------------------------------------------------------------------
// The cobracket on u(4)

static void wedge_add(Wedge& w, int i, int j, const Rational& c) {
    if (i == j || c == 0) return;
    Rational v = c;
    if (i > j) {
        std::swap(i, j);
        v = -v;
    }
    auto key = std::make_pair(i, j);
    Rational nv = (w.count(key) ? w[key] : Rational(0)) + v;
    if (nv == 0)
        w.erase(key);
    else
        w[key] = nv;
}

static Wedge wedge_sub(const Wedge& a, const Wedge& b) {
    Wedge r = a;
    for (const auto& [k, c] : b) wedge_add(r, k.first, k.second, -c);
    return r;
}

namespace {

struct U4Ctx {
    std::vector<Mat4> basis;   // 16 vectors spanning u(4)
    std::vector<Wedge> deltas;  // cobracket values on the basis

    static const U4Ctx& instance() {
        static U4Ctx ctx;
        return ctx;
    }

    std::vector<Rational> coords(const Mat4& x) const {
        auto c = decompose_in(basis, x);
        if (!c) throw NotInSpan("matrix is not in the rational span of u(4)");
        return *c;
    }

    // (ad_X (x) 1 + 1 (x) ad_X) applied to a wedge.
    Wedge ad_ext(const Mat4& X, const Wedge& w) const {
        Wedge out;
        for (const auto& [kl, c] : w) {
            std::vector<Rational> l = coords(lie_bracket(X, basis[kl.first]));
            for (int m = 0; m < 16; ++m) wedge_add(out, m, kl.second, c * l[m]);
            std::vector<Rational> r = coords(lie_bracket(X, basis[kl.second]));
            for (int m = 0; m < 16; ++m) wedge_add(out, kl.first, m, c * r[m]);
        }
        return out;
    }

  private:
    U4Ctx() {
        // Generators first, in a fixed order: H_1..H_3, E_1..E_3, F_1..F_3, H.
        std::vector<Mat4> gens;
        for (int i = 1; i <= 3; ++i) gens.push_back(u4::H(i));
        for (int i = 1; i <= 3; ++i) gens.push_back(u4::E(i));
        for (int i = 1; i <= 3; ++i) gens.push_back(u4::F(i));
        gens.push_back(u4::Hc());
        std::vector<std::array<int, 2>> parents;
        for (const Mat4& g : gens) {
            if (decompose_in(basis, g)) throw std::logic_error("dependent u(4) generators");
            basis.push_back(g);
            parents.push_back({-1, -1});
        }
        // Close under brackets, remembering the producing pair.
        bool grew = true;
        while (grew) {
            grew = false;
            size_t n = basis.size();
            for (size_t i = 0; i < n; ++i)
                for (size_t j = i + 1; j < n; ++j) {
                    Mat4 c = lie_bracket(basis[i], basis[j]);
                    if (!decompose_in(basis, c)) {
                        basis.push_back(c);
                        parents.push_back({static_cast<int>(i), static_cast<int>(j)});
                        grew = true;
                    }
                }
        }
        if (basis.size() != 16) throw std::logic_error("u(4) closure is not 16-dimensional");

        // Cobracket on generators: delta(E_i) = E_i ^ H_i, delta(F_i) = F_i ^ H_i,
        // delta(H_i) = delta(H) = 0; cocycle rule on the derived vectors.
        deltas.resize(16);
        for (int i = 0; i < 3; ++i) {
            wedge_add(deltas[3 + i], 3 + i, i, Rational(1));  // E_i ^ H_i
            wedge_add(deltas[6 + i], 6 + i, i, Rational(1));  // F_i ^ H_i
        }
        for (size_t k = 10; k < 16; ++k) {
            int i = parents[k][0], j = parents[k][1];
            deltas[k] = wedge_sub(ad_ext(basis[i], deltas[j]), ad_ext(basis[j], deltas[i]));
        }
    }
};

}  // namespace

Wedge delta(const Mat4& X) {
    const U4Ctx& ctx = U4Ctx::instance();
    std::vector<Rational> c = ctx.coords(X);
    Wedge out;
    for (int k = 0; k < 16; ++k) {
        if (c[k] == 0) continue;
        for (const auto& [kl, v] : ctx.deltas[k]) wedge_add(out, kl.first, kl.second, c[k] * v);
    }
    return out;
}

bool check_cocycle() {
    const U4Ctx& ctx = U4Ctx::instance();
    for (int i = 0; i < 16; ++i)
        for (int j = i + 1; j < 16; ++j) {
            Wedge lhs = delta(lie_bracket(ctx.basis[i], ctx.basis[j]));
            Wedge rhs = wedge_sub(ctx.ad_ext(ctx.basis[i], ctx.deltas[j]),
                                  ctx.ad_ext(ctx.basis[j], ctx.deltas[i]));
            if (lhs != rhs) return false;
        }
    return true;
}

static Wedge wedge_of_coords(const std::vector<Rational>& u, const std::vector<Rational>& v) {
    Wedge w;
    for (int k = 0; k < 16; ++k)
        for (int l = k + 1; l < 16; ++l) wedge_add(w, k, l, u[k] * v[l] - u[l] * v[k]);
    return w;
}

static void subalgebra_guard(const std::vector<Mat4>& span) {
    SpanSolver<int, Rational> hs;
    std::vector<SpanSolver<int, Rational>::Vec> flats;
    for (const Mat4& x : span) {
        if (!is_antihermitian(x)) throw NotInSpan("span element is not antihermitian");
        Flat f = flatten(x);
        SpanSolver<int, Rational>::Vec v;
        for (int i = 0; i < 32; ++i)
            if (f[i] != 0) v[i] = f[i];
        hs.add(v);
    }
    for (size_t i = 0; i < span.size(); ++i)
        for (size_t j = i + 1; j < span.size(); ++j) {
            Flat f = flatten(lie_bracket(span[i], span[j]));
            SpanSolver<int, Rational>::Vec v;
            for (int k = 0; k < 32; ++k)
                if (f[k] != 0) v[k] = f[k];
            if (!hs.contains(v)) throw NotASubalgebra("span is not closed under the bracket");
        }
}

bool is_coisotropic(const std::vector<Mat4>& span) {
    subalgebra_guard(span);
    const U4Ctx& ctx = U4Ctx::instance();
    SpanSolver<std::pair<int, int>, Rational> gh;
    for (const Mat4& x : span) {
        std::vector<Rational> hc = ctx.coords(x);
        for (int k = 0; k < 16; ++k) {
            std::vector<Rational> ek(16, 0);
            ek[k] = 1;
            gh.add(wedge_of_coords(ek, hc));
        }
    }
    for (const Mat4& x : span)
        if (!gh.contains(delta(x))) return false;
    return true;
}

bool is_poisson_lie(const std::vector<Mat4>& span) {
    subalgebra_guard(span);
    const U4Ctx& ctx = U4Ctx::instance();
    SpanSolver<std::pair<int, int>, Rational> hh;
    std::vector<std::vector<Rational>> coords;
    for (const Mat4& x : span) coords.push_back(ctx.coords(x));
    for (size_t i = 0; i < coords.size(); ++i)
        for (size_t j = i + 1; j < coords.size(); ++j) hh.add(wedge_of_coords(coords[i], coords[j]));
    for (const Mat4& x : span)
        if (!hh.contains(delta(x))) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Commutative Poisson polynomials

PoissonPoly PoissonPoly::scalar(const Rational& c) {
    PoissonPoly p;
    p.add_term(Exp{}, c);
    return p;
}

PoissonPoly PoissonPoly::var(int slot) {
    PoissonPoly p;
    Exp e{};
    e[slot] = 1;
    p.add_term(e, 1);
    return p;
}

void PoissonPoly::add_term(const Exp& e, const Rational& c) {
    if (c == 0) return;
    Rational nv = (terms_.count(e) ? terms_[e] : Rational(0)) + c;
    if (nv == 0)
        terms_.erase(e);
    else
        terms_[e] = nv;
}

PoissonPoly PoissonPoly::operator+(const PoissonPoly& o) const {
    PoissonPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

PoissonPoly PoissonPoly::operator-(const PoissonPoly& o) const {
    PoissonPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

PoissonPoly PoissonPoly::operator-() const {
    PoissonPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

PoissonPoly PoissonPoly::operator*(const PoissonPoly& o) const {
    PoissonPoly r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Exp e{};
            for (int i = 0; i < 8; ++i) e[i] = e1[i] + e2[i];
            r.add_term(e, c1 * c2);
        }
    return r;
}

PoissonPoly PoissonPoly::operator*(const Rational& c) const {
    PoissonPoly r;
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_[e] = k * c;
    return r;
}

std::string PoissonPoly::str() const {
    static const char* names[8] = {"z1", "z2", "z3", "z4", "z1*", "z2*", "z3*", "z4*"};
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << rational_str(c) << ")";
        for (int i = 0; i < 8; ++i)
            for (int k = 0; k < e[i]; ++k) os << " " << names[i];
    }
    return os.str();
}

PoissonPoly pp_z(int i) { return PoissonPoly::var(i - 1); }
PoissonPoly pp_zs(int i) { return PoissonPoly::var(i + 3); }
PoissonPoly pp_a() { return pp_z(1) * pp_zs(4) - pp_z(2) * pp_zs(3); }
PoissonPoly pp_b() { return pp_z(1) * pp_z(3) + pp_z(2) * pp_z(4); }
PoissonPoly pp_R() { return pp_z(1) * pp_zs(1) + pp_z(2) * pp_zs(2); }

// {x_i, x_j} for slot indices i < j.
static PoissonPoly gen_bracket(int i, int j) {
    if (j <= 3) return -(PoissonPoly::var(i) * PoissonPoly::var(j));  // {z_p, z_r}, p < r
    if (i >= 4) return PoissonPoly::var(i) * PoissonPoly::var(j);     // {z_p*, z_r*}, p < r
    int p = i, r = j - 4;
    if (p != r) return PoissonPoly::var(i) * PoissonPoly::var(j);     // {z_p, z_r*}, p != r
    PoissonPoly s;                                                    // {z_p, z_p*}
    for (int m = 0; m < p; ++m)
        s = s + PoissonPoly::var(m) * PoissonPoly::var(m + 4) * Rational(-2);
    return s;
}

PoissonPoly pbracket(const PoissonPoly& f, const PoissonPoly& g) {
    PoissonPoly out;
    for (const auto& [ef, cf] : f.terms())
        for (const auto& [eg, cg] : g.terms())
            for (int i = 0; i < 8; ++i) {
                if (ef[i] == 0) continue;
                for (int j = 0; j < 8; ++j) {
                    if (eg[j] == 0 || i == j) continue;
                    PoissonPoly br = (i < j) ? gen_bracket(i, j) : -gen_bracket(j, i);
                    if (br.is_zero()) continue;
                    PoissonPoly::Exp eu = ef, ev = eg;
                    --eu[i];
                    --ev[j];
                    PoissonPoly rest;
                    PoissonPoly::Exp es{};
                    for (int k = 0; k < 8; ++k) es[k] = eu[k] + ev[k];
                    rest.add_term(es, cf * cg * ef[i] * eg[j]);
                    out = out + rest * br;
                }
            }
    return out;
}

PoissonPoly reduce_sphere(const PoissonPoly& p) {
    PoissonPoly out;
    std::vector<std::pair<PoissonPoly::Exp, Rational>> work(p.terms().begin(), p.terms().end());
    while (!work.empty()) {
        auto [e, c] = work.back();
        work.pop_back();
        if (e[3] > 0 && e[7] > 0) {
            // z4 z4* -> 1 - z1 z1* - z2 z2* - z3 z3*
            PoissonPoly::Exp base = e;
            --base[3];
            --base[7];
            work.emplace_back(base, c);
            for (int m = 0; m < 3; ++m) {
                PoissonPoly::Exp em = base;
                ++em[m];
                ++em[m + 4];
                work.emplace_back(em, -c);
            }
        } else {
            out.add_term(e, c);
        }
    }
    return out;
}

static PoissonPoly Rpow(long k) {
    PoissonPoly r = PoissonPoly::scalar(1);
    for (long i = 0; i < k; ++i) r = r * pp_R();
    return r;
}

PFrac pbracket(const PFrac& f, const PFrac& g) {
    // {u/R^k, v/R^l} = ({u,v} R - l v {u,R} + k u {v,R}) / R^{k+l+1}
    PoissonPoly num = pbracket(f.num, g.num) * pp_R();
    num = num - pbracket(f.num, pp_R()) * g.num * Rational(g.k);
    num = num + pbracket(g.num, pp_R()) * f.num * Rational(f.k);
    return {num, f.k + g.k + 1};
}

bool pfrac_equal_mod_sphere(const PFrac& x, const PFrac& y) {
    return reduce_sphere(x.num * Rpow(y.k) - y.num * Rpow(x.k)).is_zero();
}

static PFrac pfrac_add(const PFrac& x, const PFrac& y) {
    long k = std::max(x.k, y.k);
    return {x.num * Rpow(k - x.k) + y.num * Rpow(k - y.k), k};
}

static PFrac pfrac_scale(const PFrac& x, const Rational& c) { return {x.num * c, x.k}; }

// ---------------------------------------------------------------------------
// Jacobi identity

static PoissonPoly jacobiator(const PoissonPoly& f, const PoissonPoly& g, const PoissonPoly& h) {
    return pbracket(f, pbracket(g, h)) + pbracket(g, pbracket(h, f)) + pbracket(h, pbracket(f, g));
}

bool jacobi_check(int sample_degree, unsigned seed) {
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j)
            for (int k = j + 1; k < 8; ++k)
                if (!jacobiator(PoissonPoly::var(i), PoissonPoly::var(j), PoissonPoly::var(k))
                         .is_zero())
                    return false;
    std::mt19937 rng(seed);
    auto random_poly = [&]() {
        PoissonPoly p;
        for (int t = 0; t < 2; ++t) {
            PoissonPoly::Exp e{};
            int deg = 1 + static_cast<int>(rng() % sample_degree);
            for (int d = 0; d < deg; ++d) ++e[rng() % 8];
            long c = 1 + static_cast<long>(rng() % 5);
            if (rng() % 2) c = -c;
            p.add_term(e, Rational(c));
        }
        return p;
    };
    for (int trial = 0; trial < 20; ++trial)
        if (!jacobiator(random_poly(), random_poly(), random_poly()).is_zero()) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Exact q -> 1 limits of quantum commutators

static PoissonPoly star_poly(const PoissonPoly& p) {
    PoissonPoly r;
    for (const auto& [e, c] : p.terms()) {
        PoissonPoly::Exp es{};
        for (int i = 0; i < 4; ++i) {
            es[i] = e[i + 4];
            es[i + 4] = e[i];
        }
        r.add_term(es, c);
    }
    return r;
}

LimitReport semiclassical_limit_check() {
    LimitReport rep;
    int sign = 0;

    auto note = [&rep](const std::string& msg) { rep.failures.push_back(msg); };

    // Commutator limit of a normal-form quantum polynomial, word-by-word:
    // every coefficient must vanish at q = 1; the limit of c(q)/(q-1) is then
    // the coefficientwise derivative at 1.
    auto limit_of = [&](const NCPoly& cnf, const std::map<GenId, PFrac>& cl,
                        const GenId* rinv) -> std::optional<PFrac> {
        PFrac lim{PoissonPoly(), 0};
        for (const auto& [w, c] : cnf.terms()) {
            if (c.eval(1) != 0) return std::nullopt;
            Rational d = c.derivative().eval(1);
            PFrac mono{PoissonPoly::scalar(1), 0};
            for (GenId g : w) {
                if (rinv && g == *rinv) {
                    ++mono.k;
                } else {
                    mono.num = mono.num * cl.at(g).num;
                    mono.k += cl.at(g).k;
                }
            }
            lim = pfrac_add(lim, pfrac_scale(mono, d));
        }
        return lim;
    };

    // Checks lim (xy - yx)/(q-1) = s * {x, y} for one global sign s.
    auto check_pair = [&](const std::string& label, const std::optional<PFrac>& lim,
                          const PFrac& expected) {
        if (!lim) {
            note(label + ": commutator coefficient does not vanish at q = 1");
            return;
        }
        bool lim0 = reduce_sphere(lim->num).is_zero();
        bool exp0 = reduce_sphere(expected.num).is_zero();
        if (lim0 && exp0) return;
        if (lim0 != exp0) {
            note(label + ": one side vanishes and the other does not");
            return;
        }
        if (sign != 0) {
            if (!pfrac_equal_mod_sphere(*lim, pfrac_scale(expected, Rational(sign))))
                note(label + ": limit does not match the established global sign");
            return;
        }
        if (pfrac_equal_mod_sphere(*lim, pfrac_scale(expected, Rational(-1))))
            sign = -1;
        else if (pfrac_equal_mod_sphere(*lim, expected))
            sign = 1;
        else
            note(label + ": limit is not +-{x,y}");
    };

    // 4-sphere generator pairs.
    {
        const Sigma4q& s = Sigma4q::instance();
        std::vector<std::pair<std::string, GenId>> gens = {
            {"R", s.R()}, {"a*", s.as()}, {"a", s.a()}, {"b*", s.bs()}, {"b", s.b()}};
        std::map<GenId, PFrac> cl;
        cl[s.R()] = {pp_R(), 0};
        cl[s.a()] = {pp_a(), 0};
        cl[s.as()] = {star_poly(pp_a()), 0};
        cl[s.b()] = {pp_b(), 0};
        cl[s.bs()] = {star_poly(pp_b()), 0};
        for (size_t i = 0; i < gens.size(); ++i)
            for (size_t j = i + 1; j < gens.size(); ++j) {
                NCPoly x(Word{gens[i].second}), y(Word{gens[j].second});
                NCPoly cnf = s.rs().nf(x * y - y * x);
                check_pair("{" + gens[i].first + "," + gens[j].first + "}",
                           limit_of(cnf, cl, nullptr),
                           pbracket(cl.at(gens[i].second), cl.at(gens[j].second)));
            }
    }

    // Localized stereographic pairs zeta_1 = a/R, zeta_2 = b/R.
    {
        const Sigma4qLoc& l = Sigma4qLoc::instance();
        std::map<GenId, PFrac> cl;
        cl[l.R()] = {pp_R(), 0};
        cl[l.a()] = {pp_a(), 0};
        cl[l.as()] = {star_poly(pp_a()), 0};
        cl[l.b()] = {pp_b(), 0};
        cl[l.bs()] = {star_poly(pp_b()), 0};
        GenId rinv = l.Rinv();
        PFrac z1{pp_a(), 1}, z2{pp_b(), 1};
        PFrac z1s{star_poly(pp_a()), 1}, z2s{star_poly(pp_b()), 1};
        std::vector<std::tuple<std::string, NCPoly, NCPoly, PFrac, PFrac>> pairs = {
            {"{zeta1,zeta2}", l.zeta1(), l.zeta2(), z1, z2},
            {"{zeta1,zeta1*}", l.zeta1(), l.zeta1s(), z1, z1s},
            {"{zeta1,zeta2*}", l.zeta1(), l.zeta2s(), z1, z2s},
            {"{zeta2,zeta2*}", l.zeta2(), l.zeta2s(), z2, z2s},
        };
        for (const auto& [label, x, y, cx, cy] : pairs) {
            NCPoly cnf = l.rs().nf(x * y - y * x);
            check_pair(label, limit_of(cnf, cl, &rinv), pbracket(cx, cy));
        }
    }

    rep.sign = sign;
    rep.ok = rep.failures.empty() && sign != 0;
    return rep;
}

}  // namespace qsphere
