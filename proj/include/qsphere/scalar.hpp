// Exact scalar arithmetic for the deformation parameter q:
// Laurent polynomials in q over the rationals, and quotients of them.
#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace qsphere {

using Rational = mpq_class;

struct PoleAtQ0 : std::runtime_error {
    explicit PoleAtQ0(const std::string& what) : std::runtime_error(what) {}
};
struct DivisionByZero : std::runtime_error {
    explicit DivisionByZero(const std::string& what) : std::runtime_error(what) {}
};

/// Laurent polynomial in q with rational coefficients.
/// Invariant: no zero coefficients are stored, so the map is canonical.
class LaurentQ {
  public:
    using Terms = std::map<long, Rational>;

    LaurentQ() = default;
    LaurentQ(long n) { set(0, Rational(n)); }            // NOLINT: implicit
    LaurentQ(const Rational& c) { set(0, c); }           // NOLINT: implicit
    LaurentQ(const Rational& c, long exp) { set(exp, c); }

    static LaurentQ q(long exp = 1) { return LaurentQ(Rational(1), exp); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    const Terms& terms() const { return terms_; }

    long min_exp() const;   // requires nonzero
    long max_exp() const;   // requires nonzero
    const Rational& leading_coeff() const;  // coefficient of max_exp

    Rational coeff(long exp) const;
    void set(long exp, const Rational& c);
    void add_term(long exp, const Rational& c);

    LaurentQ operator-() const;
    LaurentQ operator+(const LaurentQ& o) const;
    LaurentQ operator-(const LaurentQ& o) const;
    LaurentQ operator*(const LaurentQ& o) const;
    LaurentQ& operator+=(const LaurentQ& o);
    LaurentQ& operator-=(const LaurentQ& o);
    LaurentQ& operator*=(const LaurentQ& o);
    bool operator==(const LaurentQ& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentQ& o) const { return terms_ != o.terms_; }
    bool operator<(const LaurentQ& o) const { return terms_ < o.terms_; }

    /// Exact value at a rational point q0.
    Rational eval(const Rational& q0) const;

    /// Derivative d/dq, exact.
    LaurentQ derivative() const;

    std::string str() const;

  private:
    Terms terms_;
};

LaurentQ pow(const LaurentQ& x, long n);  // n >= 0

/// Quotient of Laurent polynomials, kept reduced.
/// Canonical form: gcd(num,den) = 1, den has min exponent 0 and positive
/// leading rational coefficient.
class RatQ {
  public:
    RatQ() : num_(), den_(1) {}
    RatQ(long n) : num_(n), den_(1) {}                   // NOLINT: implicit
    RatQ(const Rational& c) : num_(c), den_(1) {}        // NOLINT: implicit
    RatQ(const LaurentQ& p) : num_(p), den_(1) {}        // NOLINT: implicit
    RatQ(LaurentQ num, LaurentQ den);

    const LaurentQ& num() const { return num_; }
    const LaurentQ& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    RatQ operator-() const;
    RatQ operator+(const RatQ& o) const;
    RatQ operator-(const RatQ& o) const;
    RatQ operator*(const RatQ& o) const;
    RatQ operator/(const RatQ& o) const;
    RatQ& operator+=(const RatQ& o) { return *this = *this + o; }
    RatQ& operator-=(const RatQ& o) { return *this = *this - o; }
    RatQ& operator*=(const RatQ& o) { return *this = *this * o; }
    bool operator==(const RatQ& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatQ& o) const { return !(*this == o); }

    /// Exact value at rational q0; throws PoleAtQ0 if the denominator vanishes.
    Rational eval(const Rational& q0) const;

    std::string str() const;

  private:
    LaurentQ num_, den_;
};

/// Univariate gcd over the rationals, monic; gcd(0,0) = 0.
LaurentQ laurent_gcd(const LaurentQ& a, const LaurentQ& b);

/// Parse the fixed scalar grammar, e.g. "1 - q^2", "q^-1",
/// "(1-q^2)^2/(1-q^4)", "3/2 q^3". Throws std::invalid_argument on bad input.
RatQ parse_scalar(const std::string& text);

/// Parse "p/r" or "p" as an exact rational.
Rational parse_rational(const std::string& text);

std::string rational_str(const Rational& r);

}  // namespace qsphere
