// The coisotropic quotient U_q(4)/RU_q(4) and the induced SU_q(2)-type
// coaction on S7_q: right-ideal prefix reduction, the projection r, the
// coaction on the sphere, and coinvariance tests.
#pragma once

#include "qsphere/algebras.hpp"

#include <stdexcept>
#include <vector>

namespace qsphere {

struct ReductionDiverged : std::runtime_error {
    explicit ReductionDiverged(const std::string& what) : std::runtime_error(what) {}
};
struct DegreeBoundExceeded : std::invalid_argument {
    explicit DegreeBoundExceeded(const std::string& what) : std::invalid_argument(what) {}
};

/// The 13 spanning elements of the coideal R, as U_q(4) normal forms:
/// the 8 off-block generators, t_11-t_44, t_12+t_43, t_21+t_34, t_22-t_33,
/// and t_11 t_22 - q t_12 t_21 - 1.
const std::vector<NCPoly>& coideal_span();
const std::vector<std::string>& coideal_span_names();

/// Projection r onto the quotient class representative: a polynomial
/// supported on sorted words in {t_21, t_22, t_11, t_12} that never contain
/// both t_22 and t_11. Kills the right ideal R * U_q(4).
NCPoly reduce_mod_R(const NCPoly& x);
/// Same for localized elements; D_q is congruent to 1, so the denominator
/// power is immaterial for the class.
NCPoly reduce_mod_R(const ULoc& x);

/// r(t_ij) as a quotient class.
NCPoly r_class(int i, int j);

/// Coaction of U_q(4) on S7_q: left leg in S7_q, right leg in U_q(4) with a
/// shared D_q^{-d} factor (starred z-letters pull in antipode minors).
struct Coaction {
    Tensor2 t;
    long d = 0;
};
Coaction coact(const NCPoly& x);

/// (id (x) r) after coact: right legs are quotient classes.
Tensor2 coact_r(const NCPoly& x);

/// True iff coact_r(x) = x (x) [1] exactly.
bool is_coinvariant(const NCPoly& x);

/// Basis of the coinvariants of z-degree <= d (d <= bound, default 4):
/// verified images of the degree-<= d/2 Sigma4q basis monomials. Dimension
/// completeness is certified by an exact rank computation of the coaction
/// system specialized at q0 = 1/2.
std::vector<NCPoly> coinvariant_slice(size_t d, size_t bound = 4);

}  // namespace qsphere
