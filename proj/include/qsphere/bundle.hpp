// Vector-bundle layer: cotensor sections of the rank-2 bundle over the
// 4-sphere, the hermitian pairing, the 4x4 projector G, and the q=1
// quaternionic cross-checks.
#pragma once

#include "qsphere/quotient.hpp"

#include <array>

namespace qsphere {

struct EntryMismatch : std::runtime_error {
    EntryMismatch(int i, int j, const std::string& what)
        : std::runtime_error(what), row(i), col(j) {}
    int row, col;
};

/// Rank-2 section: a pair of S7_q elements (normal-formed).
struct Section {
    NCPoly c1, c2;
};

/// The four generating sections f_1 = q(z_1,z_2), f_2 = q(z_2*,-q z_1*),
/// f_3 = (z_4,-z_3), f_4 = q(z_3*, q^-1 z_4*).
const std::array<Section, 4>& bundle_f();

/// True iff coact_r(F_j) = sum_i F_i (x) r(t_ij) for j = 1,2 — the
/// equivariance (cotensor) condition for the fundamental corepresentation.
bool check_cotensor(const Section& F);

/// <F,H> = F_1 H_1* + F_2 H_2*, S7_q normal form.
NCPoly pairing(const Section& F, const Section& H);

/// Matrix with entries in a fixed presentation, kept normal-formed.
struct NCMatrix {
    const Presentation* pres = nullptr;
    size_t rows = 0, cols = 0;
    std::vector<NCPoly> e;

    NCMatrix() = default;
    NCMatrix(const Presentation& p, size_t r, size_t c)
        : pres(&p), rows(r), cols(c), e(r * c) {}

    NCPoly& at(size_t i, size_t j) { return e[i * cols + j]; }
    const NCPoly& at(size_t i, size_t j) const { return e[i * cols + j]; }

    NCMatrix mul(const NCMatrix& o) const;
    NCMatrix operator-(const NCMatrix& o) const;
    NCMatrix dagger() const;  // (M^+)_ij = (M_ji)*
    bool is_zero() const;
    NCMatrix nf() const;
};

/// G_ij = pairing(f_i, f_j) expressed over Sigma4q; throws EntryMismatch if
/// a pairing disagrees with the displayed closed form.
NCMatrix build_G();
/// The displayed closed form of G over Sigma4q.
NCMatrix eq8_matrix();

struct ProjectorReport {
    bool idempotent = false;
    bool hermitian = false;
    NCMatrix idem_residual, herm_residual;
};
ProjectorReport verify_projector(const NCMatrix& M);

/// Basis of cotensor sections with components of z-degree <= d, as verified
/// left Sigma4q-multiples of f_1..f_4; completeness certified by the exact
/// linear system at q0 = 1/2.
std::vector<Section> section_slice(size_t d, size_t bound = 3);

struct ClassicalReport {
    bool eq1_idempotent = false;      // quaternionic 2x2 projector
    bool norm_identity = false;       // |A|^2 + |B|^2 = R(1-R)
    bool pauli_matches_eq2 = false;   // block map of Eq.(1) equals Eq.(2)
    bool eq2_projector = false;       // Eq.(2) idempotent and hermitian
    bool eq8_q1_matches_eq2 = false;  // q=1 limit of G vs Eq.(2) dictionary
};
ClassicalReport classical_crosscheck();

}  // namespace qsphere
