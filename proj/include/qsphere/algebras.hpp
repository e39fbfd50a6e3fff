// Concrete presentations: U_q(4) with quantum determinant and antipode,
// the 7-sphere S7_q, the 4-sphere Sigma4_q and its R-localization, and the
// q=1 classical counterparts. All rewrite systems are completed at build
// time; instances are cached per process.
#pragma once

#include "qsphere/ncpoly.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace qsphere {

struct Presentation {
    std::string name;
    RewriteSystem rs;
    std::map<std::string, NCPoly> distinguished;  // stored in normal form

    const NCPoly& dist(const std::string& key) const;
};

/// Degree-2 tensor over two (possibly different) word alphabets, with
/// LaurentQ coefficients. Used for coproducts and coactions.
class Tensor2 {
  public:
    using Terms = std::map<std::pair<Word, Word>, LaurentQ>;

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    void add_term(const Word& l, const Word& r, const LaurentQ& c);

    Tensor2 operator+(const Tensor2& o) const;
    Tensor2 operator-(const Tensor2& o) const;
    Tensor2 operator*(const Tensor2& o) const;  // legwise concatenation
    Tensor2 operator*(const LaurentQ& c) const;
    bool operator==(const Tensor2& o) const { return terms_ == o.terms_; }
    bool operator!=(const Tensor2& o) const { return !(*this == o); }

    static Tensor2 of(const NCPoly& l, const NCPoly& r);
    /// Normal-form both legs in the given systems.
    Tensor2 nf(const RewriteSystem& left, const RewriteSystem& right) const;
    /// Apply a linear map to every right leg word.
    template <typename F>
    Tensor2 map_right(F&& f) const {
        Tensor2 out;
        for (const auto& [lr, c] : terms_) {
            NCPoly img = f(lr.second);
            for (const auto& [w, k] : img.terms()) out.add_term(lr.first, w, c * k);
        }
        return out;
    }

  private:
    Terms terms_;
};

/// Element of the localization U_q(4)[D_q^{-1}]: value = p * D_q^{-d}.
/// D_q is central, so the power is plain bookkeeping.
struct ULoc {
    NCPoly p;
    long d = 0;
};

/// The quantum group U_q(4). Generators t_ij (1-based), FRT relations.
class Uq4 {
  public:
    static const Uq4& instance();

    const Presentation& pres() const { return pres_; }
    const RewriteSystem& rs() const { return pres_.rs; }

    GenId t(int i, int j) const { return ids_[i - 1][j - 1]; }
    NCPoly T(int i, int j) const { return NCPoly(Word{t(i, j)}); }

    /// Quantum determinant D_q (24-term signed permutation sum).
    const NCPoly& det4() const { return det4_; }
    /// 3x3 quantum minor of the t-matrix with one row and column deleted.
    NCPoly qminor(int del_row, int del_col) const;

    /// Antipode of a generator: S(t_ij) = (-q)^{i-j} * qminor(j, i) * D_q^{-1}.
    ULoc S(int i, int j) const;
    /// Antihomomorphic extension of S to polynomials in the t_ij.
    ULoc antipode(const NCPoly& x) const;

    /// tau = * compose S; on the t-algebra this is the multiplicative
    /// transpose t_ij -> t_ji (coefficients fixed, q real).
    NCPoly tau(const NCPoly& x) const;

    /// Coproduct Delta(t_ij) = sum_k t_ik (x) t_kj, multiplicative extension.
    Tensor2 coproduct(const NCPoly& x) const;
    /// Counit eps(t_ij) = delta_ij, multiplicative extension.
    LaurentQ counit(const NCPoly& x) const;

    ULoc mul(const ULoc& x, const ULoc& y) const;
    bool equal(const ULoc& x, const ULoc& y) const;

  private:
    Uq4();
    NCPoly det_pow(long k) const;
    Presentation pres_;
    std::array<std::array<GenId, 4>, 4> ids_;
    NCPoly det4_;
};

/// The quantum 7-sphere S7_q on generators z_1..z_4, z_1*..z_4*.
class S7q {
  public:
    static const S7q& instance();

    const Presentation& pres() const { return pres_; }
    const RewriteSystem& rs() const { return pres_.rs; }

    GenId z(int i) const { return z_[i - 1]; }
    GenId zs(int i) const { return zs_[i - 1]; }
    NCPoly Z(int i) const { return NCPoly(Word{z(i)}); }
    NCPoly Zs(int i) const { return NCPoly(Word{zs(i)}); }

    /// The Prop. 3 generators as normal-formed z-polynomials.
    const NCPoly& a() const { return pres_.dist("a"); }
    const NCPoly& b() const { return pres_.dist("b"); }
    const NCPoly& R() const { return pres_.dist("R"); }
    const NCPoly& a_star() const { return pres_.dist("a*"); }
    const NCPoly& b_star() const { return pres_.dist("b*"); }

  private:
    S7q();
    Presentation pres_;
    std::array<GenId, 4> z_, zs_;
};

/// The quantum 4-sphere Sigma4_q on generators R < a* < a < b* < b.
class Sigma4q {
  public:
    static const Sigma4q& instance();

    const Presentation& pres() const { return pres_; }
    const RewriteSystem& rs() const { return pres_.rs; }

    GenId R() const { return R_; }
    GenId a() const { return a_; }
    GenId as() const { return as_; }
    GenId b() const { return b_; }
    GenId bs() const { return bs_; }

    /// The defining relation polynomials (Prop. 3 plus star images), each = 0.
    const std::vector<NCPoly>& relations() const { return relations_; }
    /// Human-readable labels parallel to relations().
    const std::vector<std::string>& relation_names() const { return relation_names_; }

    /// Letter counts of a normal-form word, in alphabet order.
    static void word_powers(const Word& w, const Sigma4q& s, int* na_star, int* na, int* nr,
                            int* nb_star, int* nb);

  private:
    Sigma4q();
    Presentation pres_;
    GenId R_, as_, a_, bs_, b_;
    std::vector<NCPoly> relations_;
    std::vector<std::string> relation_names_;
};

/// Sigma4_q with central R^{-1} adjoined; zeta_1 = R^{-1} a, zeta_2 = b R^{-1}.
class Sigma4qLoc {
  public:
    static const Sigma4qLoc& instance();

    const Presentation& pres() const { return pres_; }
    const RewriteSystem& rs() const { return pres_.rs; }

    GenId Rinv() const { return Rinv_; }
    GenId R() const { return R_; }
    GenId a() const { return a_; }
    GenId as() const { return as_; }
    GenId b() const { return b_; }
    GenId bs() const { return bs_; }

    const NCPoly& zeta1() const { return pres_.dist("zeta1"); }
    const NCPoly& zeta2() const { return pres_.dist("zeta2"); }
    const NCPoly& zeta1s() const { return pres_.dist("zeta1*"); }
    const NCPoly& zeta2s() const { return pres_.dist("zeta2*"); }

  private:
    Sigma4qLoc();
    Presentation pres_;
    GenId Rinv_, R_, as_, a_, bs_, b_;
};

/// Registry addressable by name: uq4, s7q, sigma4q, sigma4q-loc,
/// classical-s7, classical-s4. Throws std::invalid_argument on unknown names.
const Presentation& presentation(const std::string& name);
std::vector<std::string> presentation_names();

/// q=1 commutative counterparts built from the same relation data.
const Presentation& classical_s7();
const Presentation& classical_s4();

/// Substitutes the S7_q images of {R,a*,a,b*,b} into a Sigma4q polynomial.
NCPoly embed_in_s7(const NCPoly& x);

}  // namespace qsphere
