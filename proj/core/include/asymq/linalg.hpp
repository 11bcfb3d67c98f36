#pragma once

#include <array>
#include <complex>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace asymq {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;
using Rng = std::mt19937_64;

// Tolerance ledger. Construction checks, decomposition round trips and
// closed-form-vs-pipeline comparisons sit one decade apart so a failure
// identifies its layer.
namespace tol {
inline constexpr double validation = 1e-10;
inline constexpr double reconstruction = 1e-9;
inline constexpr double oracle = 1e-8;
// Eigenvalue pairs with p_i + p_j below this carry no information; they are
// skipped instead of dividing 0 by 0.
inline constexpr double degeneracy_floor = 1e-12;
inline constexpr double gram = 1e-12;
}  // namespace tol

/// Thrown when a domain invariant or operation precondition is violated.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Subsystem selector for bipartite operations.
enum class Side { a, b };

/// max |M - M†| over all entries.
double hermiticity_deviation(const ComplexMatrix& m);

void require_finite(const ComplexMatrix& m, const std::string& what);

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

/// Hermitian operator. Construction rejects non-square, non-finite, or
/// non-Hermitian (beyond tol::validation) input.
class Observable {
 public:
  explicit Observable(ComplexMatrix matrix);

  const ComplexMatrix& matrix() const { return matrix_; }
  Index dim() const { return matrix_.rows(); }

 private:
  ComplexMatrix matrix_;
};

/// Density operator with an attached tensor-factor structure. Construction
/// enforces Hermiticity, unit trace, and positive semidefiniteness up to the
/// numerical floor (smallest eigenvalue >= -tol::validation).
class DensityMatrix {
 public:
  DensityMatrix(ComplexMatrix matrix, std::vector<Index> dims);

  /// |psi><psi| / <psi|psi>. The vector must be unit norm within 1e-8.
  static DensityMatrix from_pure(const ComplexVector& psi,
                                 std::vector<Index> dims);

  const ComplexMatrix& matrix() const { return matrix_; }
  const std::vector<Index>& dims() const { return dims_; }
  Index dim() const { return matrix_.rows(); }

  /// Same operator reinterpreted with a different factorization of the
  /// Hilbert space; the product of `dims` must match the matrix size.
  DensityMatrix with_dims(std::vector<Index> dims) const;

 private:
  ComplexMatrix matrix_;
  std::vector<Index> dims_;
};

struct EigenSystem {
  RealVector values;      // ascending
  ComplexMatrix vectors;  // orthonormal columns, one per eigenvalue
};

/// Eigendecomposition of a Hermitian matrix. Eigenvalues ascend; each
/// eigenvector is rescaled so its first nonzero component is real positive,
/// which makes repeated runs reproducible bit for bit.
EigenSystem hermitian_eig(const ComplexMatrix& m);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Trace out every factor not listed in `keep`. The result keeps the listed
/// factors in their original order.
DensityMatrix partial_trace(const DensityMatrix& rho,
                            const std::vector<std::size_t>& keep);

/// Singular values (descending) of the d_a x d_b coefficient matrix of a
/// bipartite pure state. Their squares are the Schmidt coefficients.
RealVector svd_coefficients(const ComplexVector& psi,
                            const std::array<Index, 2>& dims);

/// exp(i * angle * H) for Hermitian H, via eigendecomposition.
ComplexMatrix unitary_from_generator(const ComplexMatrix& hermitian,
                                     double angle);

double trace_distance(const DensityMatrix& x, const DensityMatrix& y);

/// Haar-distributed unitary: QR of a complex Gaussian matrix with the
/// R-diagonal phases folded back into Q.
ComplexMatrix random_haar_unitary(Index d, Rng& rng);

RealMatrix random_orthogonal(Index d, Rng& rng);

/// GG†/Tr(GG†) with G complex Gaussian of the requested rank (full rank when
/// omitted). Deterministic per seed.
DensityMatrix random_density_matrix(std::vector<Index> dims,
                                    std::optional<Index> rank, Rng& rng);

ComplexVector random_pure_state(const std::vector<Index>& dims, Rng& rng);

}  // namespace asymq
