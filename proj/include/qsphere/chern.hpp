// Cyclic-homology layer over Sigma4_q: tensor chains, the Hochschild
// boundary, the cyclic operator, the generalized trace, Chern classes of the
// projector G, the chain-level periodicity operator, and the Chern-Connes
// pairing with tr_sigma.
#pragma once

#include "qsphere/bundle.hpp"
#include "qsphere/fock.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace qsphere {

struct DimensionMismatch : std::runtime_error {
    explicit DimensionMismatch(const std::string& what) : std::runtime_error(what) {}
};

/// An (n+1)-fold elementary tensor of Sigma4_q normal-form words.
using TensorWord = std::vector<Word>;

/// Linear combination of degree-n tensors with RatQ coefficients.
class Chain {
  public:
    using Terms = std::map<TensorWord, RatQ>;

    explicit Chain(int degree) : degree_(degree) {}

    int degree() const { return degree_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const TensorWord& t, const RatQ& c);

    Chain operator+(const Chain& o) const;
    Chain operator-(const Chain& o) const;
    Chain scale(const RatQ& c) const;
    bool operator==(const Chain& o) const { return degree_ == o.degree_ && terms_ == o.terms_; }
    bool operator!=(const Chain& o) const { return !(*this == o); }

    /// Degree-0 chain from a Sigma4_q polynomial (normal-formed first).
    static Chain from_poly(const NCPoly& p);

  private:
    int degree_;
    Terms terms_;
};

/// Face map d_i: merges legs i, i+1 for i < n; d_n wraps a_n a_0. Products
/// are reduced in Sigma4_q. No sign.
Chain face_map(const Chain& c, int i);

/// beta = sum_{i=0}^n (-1)^i d_i.
Chain hochschild_boundary(const Chain& c);

/// t(a_0 (x) ... (x) a_n) = (-1)^n a_1 (x) ... (x) a_n (x) a_0.
Chain cyclic_t(const Chain& c);

/// Tensor of square matrices over Sigma4_q, contracted along an index cycle.
using MatrixChain = std::vector<NCMatrix>;
Chain generalized_trace(const MatrixChain& m);

/// ch_n^lambda(G) = Tr[(-1)^n G^{(x) 2n+1}].
Chain chern(int n);

/// Chain-level periodicity operator on a degree-n chain (n >= 2):
/// S(x) = -1/(n(n-1)) sum_{0<=i<j<=n} (-1)^{i+j} d_i d_j (x).
Chain s_operator(const Chain& c);

/// tr_sigma applied linearly to a degree-0 chain.
RatQ pairing_with_trace(const Chain& c);

/// True iff beta(c) lies in image(1 - t), decided exactly on the finite
/// subspace spanned by the occurring tensors and their t-orbits. The n = 0
/// condition is vacuous. Throws DegreeBoundExceeded if a tensor's total
/// word degree exceeds the bound.
bool cyclic_cycle_check(const Chain& c, int degree_bound = 16);

/// Witness for S(ch_1) = -1/2 ch_0: s_operator(chern(1)) + 1/2 chern(0)
/// must be a Hochschild boundary of a degree-1 chain with legs of total
/// degree <= bound (image(1-t) vanishes in degree 0).
bool s_chern_witness(int bound = 4);

}  // namespace qsphere
