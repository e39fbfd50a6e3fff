#include "qsphere/scalar.hpp"

#include <cctype>
#include <sstream>

namespace qsphere {

bool LaurentQ::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

long LaurentQ::min_exp() const { return terms_.begin()->first; }
long LaurentQ::max_exp() const { return terms_.rbegin()->first; }
const Rational& LaurentQ::leading_coeff() const { return terms_.rbegin()->second; }

Rational LaurentQ::coeff(long exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentQ::set(long exp, const Rational& c) {
    if (c == 0)
        terms_.erase(exp);
    else
        terms_[exp] = c;
}

void LaurentQ::add_term(long exp, const Rational& c) {
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
        if (c != 0) terms_[exp] = c;
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

LaurentQ LaurentQ::operator-() const {
    LaurentQ r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

LaurentQ& LaurentQ::operator+=(const LaurentQ& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentQ& LaurentQ::operator-=(const LaurentQ& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentQ LaurentQ::operator+(const LaurentQ& o) const {
    LaurentQ r = *this;
    r += o;
    return r;
}

LaurentQ LaurentQ::operator-(const LaurentQ& o) const {
    LaurentQ r = *this;
    r -= o;
    return r;
}

LaurentQ LaurentQ::operator*(const LaurentQ& o) const {
    LaurentQ r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
    return r;
}

LaurentQ& LaurentQ::operator*=(const LaurentQ& o) { return *this = *this * o; }

Rational LaurentQ::eval(const Rational& q0) const {
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational p(1);
        long n = e >= 0 ? e : -e;
        Rational base = q0;
        if (e < 0) {
            if (q0 == 0) throw PoleAtQ0("q^negative at q0 = 0");
            base = 1 / q0;
        }
        for (long i = 0; i < n; ++i) p *= base;
        acc += c * p;
    }
    return acc;
}

LaurentQ LaurentQ::derivative() const {
    LaurentQ r;
    for (const auto& [e, c] : terms_)
        if (e != 0) r.add_term(e - 1, c * Rational(e));
    return r;
}

std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

std::string LaurentQ::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // render high powers last, constants first
    for (const auto& [e, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (e == 0) {
            os << a;
        } else {
            if (a != 1) os << a << " ";
            os << "q";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

LaurentQ pow(const LaurentQ& x, long n) {
    LaurentQ r(1);
    for (long i = 0; i < n; ++i) r *= x;
    return r;
}

namespace {

// Shift so min exponent is 0 (ordinary polynomial), track shift.
LaurentQ shifted_to_poly(const LaurentQ& x, long* shift) {
    *shift = x.is_zero() ? 0 : x.min_exp();
    LaurentQ r;
    for (const auto& [e, c] : x.terms()) r.set(e - *shift, c);
    return r;
}

// Polynomial remainder a mod b over Q; b nonzero, both ordinary polys.
LaurentQ poly_rem(LaurentQ a, const LaurentQ& b) {
    long db = b.max_exp();
    const Rational lb = b.leading_coeff();
    while (!a.is_zero() && a.max_exp() >= db) {
        Rational f = a.leading_coeff() / lb;
        long sh = a.max_exp() - db;
        for (const auto& [e, c] : b.terms()) a.add_term(e + sh, -f * c);
    }
    return a;
}

// Exact polynomial quotient a / b (requires divisibility).
LaurentQ poly_quot(LaurentQ a, const LaurentQ& b) {
    LaurentQ q;
    long db = b.max_exp();
    const Rational lb = b.leading_coeff();
    while (!a.is_zero() && a.max_exp() >= db) {
        Rational f = a.leading_coeff() / lb;
        long sh = a.max_exp() - db;
        q.add_term(sh, f);
        for (const auto& [e, c] : b.terms()) a.add_term(e + sh, -f * c);
    }
    if (!a.is_zero()) throw std::logic_error("poly_quot: not divisible");
    return q;
}

}  // namespace

LaurentQ laurent_gcd(const LaurentQ& a, const LaurentQ& b) {
    long s;
    LaurentQ x = shifted_to_poly(a, &s), y = shifted_to_poly(b, &s);
    while (!y.is_zero()) {
        LaurentQ r = poly_rem(x, y);
        x = y;
        y = r;
    }
    if (x.is_zero()) return x;
    // monic
    LaurentQ m;
    const Rational lead = x.leading_coeff();
    for (const auto& [e, c] : x.terms()) m.set(e, c / lead);
    return m;
}

RatQ::RatQ(LaurentQ num, LaurentQ den) {
    if (den.is_zero()) throw DivisionByZero("RatQ with zero denominator");
    if (num.is_zero()) {
        num_ = LaurentQ();
        den_ = LaurentQ(1);
        return;
    }
    LaurentQ g = laurent_gcd(num, den);
    if (!g.is_one()) {
        long sn, sd;
        LaurentQ pn = shifted_to_poly(num, &sn), pd = shifted_to_poly(den, &sd);
        LaurentQ qn = poly_quot(pn, g), qd = poly_quot(pd, g);
        num = LaurentQ();
        for (const auto& [e, c] : qn.terms()) num.set(e + sn, c);
        den = LaurentQ();
        for (const auto& [e, c] : qd.terms()) den.set(e + sd, c);
    }
    // normalize denominator: min exponent 0, leading coefficient +1 absorbed
    // into the numerator (both sides divided by lead, den shifted to exponent 0
    // with the q-power moved into the numerator).
    long shift = den.min_exp();
    const Rational lead = den.leading_coeff();
    num_ = LaurentQ();
    den_ = LaurentQ();
    for (const auto& [e, c] : den.terms()) den_.set(e - shift, c / lead);
    for (const auto& [e, c] : num.terms()) num_.set(e - shift, c / lead);
}

RatQ RatQ::operator-() const {
    RatQ r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatQ RatQ::operator+(const RatQ& o) const {
    return RatQ(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatQ RatQ::operator-(const RatQ& o) const {
    return RatQ(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatQ RatQ::operator*(const RatQ& o) const { return RatQ(num_ * o.num_, den_ * o.den_); }

RatQ RatQ::operator/(const RatQ& o) const {
    if (o.is_zero()) throw DivisionByZero("RatQ division by zero");
    return RatQ(num_ * o.den_, den_ * o.num_);
}

Rational RatQ::eval(const Rational& q0) const {
    Rational d = den_.eval(q0);
    if (d == 0) throw PoleAtQ0("denominator vanishes at q0 = " + rational_str(q0));
    return num_.eval(q0) / d;
}

std::string RatQ::str() const {
    if (den_.is_one()) return num_.str();
    std::ostringstream os;
    os << "(" << num_.str() << ")/(" << den_.str() << ")";
    return os.str();
}

// ---------------------------------------------------------------------------
// Scalar grammar parser

namespace {

struct Parser {
    const std::string& s;
    size_t i = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool peek(char c) {
        skip_ws();
        return i < s.size() && s[i] == c;
    }
    bool eat(char c) {
        if (peek(c)) {
            ++i;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw std::invalid_argument("scalar parse error at position " + std::to_string(i) +
                                    ": " + msg + " in \"" + s + "\"");
    }

    long parse_int() {
        skip_ws();
        bool neg = eat('-');
        skip_ws();
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) fail("expected integer");
        long v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) v = v * 10 + (s[i++] - '0');
        return neg ? -v : v;
    }

    RatQ parse_number() {
        skip_ws();
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        Rational num(s.substr(start, i - start));
        skip_ws();
        // "3/2" only when the next token is not a parenthesized expression or q
        size_t save = i;
        if (eat('/')) {
            skip_ws();
            if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                size_t d0 = i;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
                Rational den(s.substr(d0, i - d0));
                if (den == 0) fail("zero rational denominator");
                Rational v = num / den;
                v.canonicalize();
                return RatQ(v);
            }
            i = save;
        }
        num.canonicalize();
        return RatQ(num);
    }

    RatQ parse_atom() {
        skip_ws();
        if (i >= s.size()) fail("unexpected end");
        RatQ base;
        if (eat('(')) {
            base = parse_expr();
            if (!eat(')')) fail("expected ')'");
        } else if (s[i] == 'q') {
            ++i;
            base = RatQ(LaurentQ::q());
        } else if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            base = parse_number();
        } else {
            fail("expected atom");
        }
        skip_ws();
        if (i < s.size() && s[i] == '^') {
            ++i;
            long e = parse_int();
            RatQ p(1);
            RatQ b = e >= 0 ? base : RatQ(1) / base;
            long n = e >= 0 ? e : -e;
            for (long k = 0; k < n; ++k) p *= b;
            return p;
        }
        return base;
    }

    // product with implicit multiplication and '/'
    RatQ parse_term() {
        RatQ acc = parse_atom();
        for (;;) {
            skip_ws();
            if (i >= s.size()) break;
            char c = s[i];
            if (c == '*') {
                ++i;
                acc *= parse_atom();
            } else if (c == '/') {
                ++i;
                acc = acc / parse_atom();
            } else if (c == '(' || c == 'q' || std::isdigit(static_cast<unsigned char>(c))) {
                acc *= parse_atom();
            } else {
                break;
            }
        }
        return acc;
    }

    RatQ parse_expr() {
        skip_ws();
        bool neg = false;
        if (eat('-')) neg = true;
        RatQ acc = parse_term();
        if (neg) acc = -acc;
        for (;;) {
            skip_ws();
            if (eat('+'))
                acc += parse_term();
            else if (eat('-'))
                acc -= parse_term();
            else
                break;
        }
        return acc;
    }
};

}  // namespace

RatQ parse_scalar(const std::string& text) {
    Parser p(text);
    RatQ r = p.parse_expr();
    p.skip_ws();
    if (p.i != text.size()) p.fail("trailing input");
    return r;
}

Rational parse_rational(const std::string& text) {
    Rational r(text);
    r.canonicalize();
    return r;
}

}  // namespace qsphere
