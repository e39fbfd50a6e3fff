// Semiclassical layer: the Lie bialgebra cocycle on u(4), coisotropy of
// subalgebras, Poisson brackets on the classical spheres, and the exact
// q -> 1 limit check against the quantum commutators.
#pragma once

#include "qsphere/algebras.hpp"

#include <array>
#include <map>
#include <stdexcept>
#include <vector>

namespace qsphere {

struct NotInSpan : std::runtime_error {
    explicit NotInSpan(const std::string& what) : std::runtime_error(what) {}
};
struct NotASubalgebra : std::runtime_error {
    explicit NotASubalgebra(const std::string& what) : std::runtime_error(what) {}
};

/// Gaussian rational a + b i.
struct GaussQ {
    Rational re = 0, im = 0;

    GaussQ() = default;
    GaussQ(const Rational& r) : re(r) {}  // NOLINT: implicit
    GaussQ(const Rational& r, const Rational& i) : re(r), im(i) {}

    GaussQ operator+(const GaussQ& o) const { return {re + o.re, im + o.im}; }
    GaussQ operator-(const GaussQ& o) const { return {re - o.re, im - o.im}; }
    GaussQ operator-() const { return {-re, -im}; }
    GaussQ operator*(const GaussQ& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussQ conj() const { return {re, -im}; }
    bool operator==(const GaussQ& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussQ& o) const { return !(*this == o); }
    bool is_zero() const { return re == 0 && im == 0; }
};

/// 4x4 matrix over GaussQ, row-major; elements of u(4) are antihermitian.
using Mat4 = std::array<GaussQ, 16>;

Mat4 mat_mul(const Mat4& a, const Mat4& b);
Mat4 mat_add(const Mat4& a, const Mat4& b);
Mat4 mat_sub(const Mat4& a, const Mat4& b);
Mat4 mat_scale(const Mat4& a, const GaussQ& c);
Mat4 mat_dagger(const Mat4& a);
Mat4 lie_bracket(const Mat4& a, const Mat4& b);
bool is_antihermitian(const Mat4& a);

namespace u4 {
Mat4 H(int i);   // i(e_ii - e_{i+1,i+1}), i = 1..3
Mat4 E(int i);   // (1/2i)(e_{i,i+1} + e_{i+1,i})
Mat4 F(int i);   // (1/2)(e_{i,i+1} - e_{i+1,i})
Mat4 Hc();       // i * identity
Mat4 h();        // 1/4 H_1 + 1/2 H_2 + 3/4 H_3 + 3/4 H
Mat4 g();        // the conjugator diag-block [[1,0],[0,1]] x [[0,1],[-1,0]]
Mat4 adg(const Mat4& x);  // g x g^-1
}  // namespace u4

/// Element of Lambda^2 u(4) in coordinates over the internal 16-dim basis:
/// key (i,j) with i<j stands for b_i wedge b_j.
using Wedge = std::map<std::pair<int, int>, Rational>;

/// The cobracket: Eq.-(3) values on generators, cocycle-extended to all of
/// u(4). Throws NotInSpan if X is not in u(4)'s rational span.
Wedge delta(const Mat4& X);

/// Verifies the 1-cocycle identity delta([X,Y]) = X.delta(Y) - Y.delta(X)
/// on all pairs of internal basis vectors.
bool check_cocycle();

/// True iff the span is a Lie subalgebra h with delta(h) in g wedge h.
bool is_coisotropic(const std::vector<Mat4>& span);
/// True iff the span is a subalgebra h with delta(h) in h wedge h.
bool is_poisson_lie(const std::vector<Mat4>& span);
/// Closure of the given generators under the Lie bracket.
std::vector<Mat4> bracket_closure(std::vector<Mat4> gens);

// ---------------------------------------------------------------------------
// Commutative Poisson algebra of the classical 7-sphere coordinates

/// Commutative polynomial in z_1..z_4 (slots 0..3), z_1*..z_4* (slots 4..7).
class PoissonPoly {
  public:
    using Exp = std::array<int, 8>;
    using Terms = std::map<Exp, Rational>;

    PoissonPoly() = default;
    static PoissonPoly scalar(const Rational& c);
    static PoissonPoly var(int slot);  // 0..7

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    void add_term(const Exp& e, const Rational& c);

    PoissonPoly operator+(const PoissonPoly& o) const;
    PoissonPoly operator-(const PoissonPoly& o) const;
    PoissonPoly operator-() const;
    PoissonPoly operator*(const PoissonPoly& o) const;
    PoissonPoly operator*(const Rational& c) const;
    bool operator==(const PoissonPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const PoissonPoly& o) const { return !(*this == o); }

    std::string str() const;

  private:
    Terms terms_;
};

PoissonPoly pp_z(int i);    // z_i, 1-based
PoissonPoly pp_zs(int i);   // z_i*
PoissonPoly pp_a();         // z_1 z_4* - z_2 z_3*
PoissonPoly pp_b();         // z_1 z_3 + z_2 z_4
PoissonPoly pp_R();         // z_1 z_1* + z_2 z_2*

/// The derived generator bracket table, biderivation-extended.
PoissonPoly pbracket(const PoissonPoly& f, const PoissonPoly& g);

/// Canonical form modulo the sphere ideal (z_4 z_4* eliminated).
PoissonPoly reduce_sphere(const PoissonPoly& p);

/// Fraction num / R^k for the stereographic coordinates zeta_i.
struct PFrac {
    PoissonPoly num;
    long k = 0;
};
PFrac pbracket(const PFrac& f, const PFrac& g);
bool pfrac_equal_mod_sphere(const PFrac& x, const PFrac& y);

/// Jacobi residual on all variable triples and seeded random monomial
/// triples of degree <= sample_degree; true iff all vanish identically.
bool jacobi_check(int sample_degree, unsigned seed);

/// Exact q -> 1 limits of quantum commutators against the classical
/// brackets: a single global sign s must relate all pairs.
struct LimitReport {
    bool ok = false;
    int sign = 0;  // the discovered s
    std::vector<std::string> failures;
};
LimitReport semiclassical_limit_check();

}  // namespace qsphere
