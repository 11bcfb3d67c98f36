#pragma once

#include <vector>

#include "asymq/linalg.hpp"

namespace asymq {

/// Orthogonal Hermitian basis of the operator algebra u(d), normalized to
/// Tr(T_a T_b) = 2 delta_ab. With this scale the d = 2 basis is the Pauli set
/// plus the identity, and the completeness relation reads
/// sum_a T_a M T_a = 2 Tr(M) I.
class GeneratorBasis {
 public:
  /// Validates element count (d^2), Hermiticity, and the Gram condition
  /// |Tr(T_a T_b) - 2 delta_ab| <= gram_tol.
  GeneratorBasis(Index dim, std::vector<Observable> elements,
                 double gram_tol = tol::gram);

  Index dim() const { return dim_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<Observable>& elements() const { return elements_; }

  /// Hilbert-Schmidt norm constant c in Tr(T_a T_b) = c delta_ab.
  static constexpr double normalization = 2.0;

 private:
  Index dim_;
  std::vector<Observable> elements_;
};

/// Generalized Gell-Mann basis of u(d): the symmetric family
/// |i><j| + |j><i| and antisymmetric family -i|i><j| + i|j><i| for i < j,
/// the d-1 diagonal matrices sqrt(2/(l(l+1))) (sum_{k<l} |k><k| - l|l><l|),
/// and sqrt(2/d) * identity.
GeneratorBasis gell_mann_basis(Index d);

/// I x ... x K x ... x I with K at the given tensor slot.
Observable lift_observable(const Observable& k, std::size_t slot,
                           const std::vector<Index>& dims);

/// Every basis element embedded at `slot` of a composite space.
std::vector<Observable> lift(const GeneratorBasis& basis, std::size_t slot,
                             const std::vector<Index>& dims);

/// Recombined basis T'_b = sum_a O_ab T_a for an orthogonal O. The output
/// spans the same algebra with the same Gram matrix.
GeneratorBasis rotate_basis(const GeneratorBasis& basis,
                            const RealMatrix& rotation);

}  // namespace asymq
