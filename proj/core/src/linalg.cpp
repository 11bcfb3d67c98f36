#include "asymq/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace asymq {

namespace {

// Largest axis length a Kronecker product may produce; the library targets
// total dimensions of at most a few hundred.
constexpr Index kMaxKronDim = Index{1} << 20;

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << std::scientific << x;
  return os.str();
}

Index checked_product(const std::vector<Index>& dims, const std::string& what) {
  if (dims.empty()) {
    throw ValidationError(what + ": dims list is empty");
  }
  Index product = 1;
  for (Index d : dims) {
    if (d < 1) {
      throw ValidationError(what + ": every factor dimension must be >= 1");
    }
    product *= d;
  }
  return product;
}

void fill_gaussian(ComplexMatrix& m, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      m(i, j) = Complex(re, im);
    }
  }
}

// Flat-index offsets contributed by the listed axes, enumerated row-major.
std::vector<Index> axis_offsets(const std::vector<Index>& dims,
                                const std::vector<std::size_t>& axes,
                                const std::vector<Index>& strides) {
  Index total = 1;
  for (std::size_t axis : axes) total *= dims[axis];
  std::vector<Index> offsets(static_cast<std::size_t>(total), 0);
  for (Index flat = 0; flat < total; ++flat) {
    Index rem = flat;
    for (auto it = axes.rbegin(); it != axes.rend(); ++it) {
      const Index digit = rem % dims[*it];
      rem /= dims[*it];
      offsets[static_cast<std::size_t>(flat)] += digit * strides[*it];
    }
  }
  return offsets;
}

}  // namespace

double hermiticity_deviation(const ComplexMatrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

void require_finite(const ComplexMatrix& m, const std::string& what) {
  if (!m.allFinite()) {
    throw ValidationError(what + ": matrix contains NaN or Inf entries");
  }
  if (m.rows() < 1 || m.cols() < 1) {
    throw ValidationError(what + ": matrix must have at least one row and column");
  }
}

ComplexMatrix pauli_x() {
  ComplexMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

ComplexMatrix pauli_y() {
  ComplexMatrix m(2, 2);
  m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  return m;
}

ComplexMatrix pauli_z() {
  ComplexMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

Observable::Observable(ComplexMatrix matrix) : matrix_(std::move(matrix)) {
  require_finite(matrix_, "observable");
  if (matrix_.rows() != matrix_.cols()) {
    throw ValidationError("observable: matrix must be square");
  }
  const double dev = hermiticity_deviation(matrix_);
  if (!(dev <= tol::validation)) {
    throw ValidationError("observable: not Hermitian, max |M - M(dagger)| = " + fmt(dev));
  }
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix, std::vector<Index> dims)
    : matrix_(std::move(matrix)), dims_(std::move(dims)) {
  require_finite(matrix_, "density matrix");
  if (matrix_.rows() != matrix_.cols()) {
    throw ValidationError("density matrix: matrix must be square");
  }
  const Index product = checked_product(dims_, "density matrix");
  if (product != matrix_.rows()) {
    std::ostringstream os;
    os << "density matrix: factor dimensions multiply to " << product
       << " but the matrix has size " << matrix_.rows();
    throw ValidationError(os.str());
  }
  const double herm = hermiticity_deviation(matrix_);
  if (!(herm <= tol::validation)) {
    throw ValidationError("density matrix: not Hermitian, max |M - M(dagger)| = " + fmt(herm));
  }
  const double trace_dev = std::abs(matrix_.trace() - Complex(1.0, 0.0));
  if (!(trace_dev <= tol::validation)) {
    throw ValidationError("density matrix: trace deviates from 1 by " + fmt(trace_dev));
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(matrix_, Eigen::EigenvaluesOnly);
  const double min_eig = solver.eigenvalues().minCoeff();
  if (!(min_eig >= -tol::validation)) {
    throw ValidationError("density matrix: smallest eigenvalue " + fmt(min_eig) +
                          " is below the PSD floor -" + fmt(tol::validation));
  }
}

DensityMatrix DensityMatrix::from_pure(const ComplexVector& psi,
                                       std::vector<Index> dims) {
  const double norm = psi.norm();
  if (!(std::abs(norm - 1.0) <= 1e-8)) {
    throw ValidationError("pure state: norm deviates from 1 by " + fmt(std::abs(norm - 1.0)));
  }
  ComplexMatrix rho = psi * psi.adjoint() / (norm * norm);
  return DensityMatrix(std::move(rho), std::move(dims));
}

DensityMatrix DensityMatrix::with_dims(std::vector<Index> dims) const {
  return DensityMatrix(matrix_, std::move(dims));
}

EigenSystem hermitian_eig(const ComplexMatrix& m) {
  require_finite(m, "hermitian_eig");
  if (m.rows() != m.cols()) {
    throw ValidationError("hermitian_eig: matrix must be square");
  }
  const double dev = hermiticity_deviation(m);
  if (!(dev <= tol::validation)) {
    throw ValidationError("hermitian_eig: not Hermitian, max |M - M(dagger)| = " + fmt(dev));
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m);
  if (solver.info() != Eigen::Success) {
    throw ValidationError("hermitian_eig: eigendecomposition did not converge");
  }
  EigenSystem out{solver.eigenvalues(), solver.eigenvectors()};
  // Phase convention: first nonzero component real positive.
  for (Index j = 0; j < out.vectors.cols(); ++j) {
    for (Index i = 0; i < out.vectors.rows(); ++i) {
      const double mag = std::abs(out.vectors(i, j));
      if (mag > 1e-12) {
        out.vectors.col(j) *= std::conj(out.vectors(i, j)) / mag;
        break;
      }
    }
  }
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_finite(a, "kron");
  require_finite(b, "kron");
  if (a.rows() > kMaxKronDim / b.rows() || a.cols() > kMaxKronDim / b.cols()) {
    std::ostringstream os;
    os << "kron: result size " << a.rows() << "x" << b.rows() << " by "
       << a.cols() << "x" << b.cols() << " exceeds the supported limit";
    throw ValidationError(os.str());
  }
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho,
                            const std::vector<std::size_t>& keep) {
  const std::vector<Index>& dims = rho.dims();
  if (dims.size() < 2) {
    throw ValidationError("partial_trace: state has fewer than two tensor factors");
  }
  if (keep.empty()) {
    throw ValidationError("partial_trace: keep set is empty");
  }
  std::vector<std::size_t> kept(keep);
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  if (kept.back() >= dims.size()) {
    std::ostringstream os;
    os << "partial_trace: subsystem index " << kept.back() << " out of range for "
       << dims.size() << " factors";
    throw ValidationError(os.str());
  }

  std::vector<std::size_t> traced;
  for (std::size_t axis = 0; axis < dims.size(); ++axis) {
    if (!std::binary_search(kept.begin(), kept.end(), axis)) traced.push_back(axis);
  }

  std::vector<Index> strides(dims.size());
  Index stride = 1;
  for (std::size_t axis = dims.size(); axis-- > 0;) {
    strides[axis] = stride;
    stride *= dims[axis];
  }

  const std::vector<Index> kept_offsets = axis_offsets(dims, kept, strides);
  const std::vector<Index> traced_offsets = axis_offsets(dims, traced, strides);

  const auto d_kept = static_cast<Index>(kept_offsets.size());
  ComplexMatrix out = ComplexMatrix::Zero(d_kept, d_kept);
  const ComplexMatrix& m = rho.matrix();
  for (Index i = 0; i < d_kept; ++i) {
    for (Index j = 0; j < d_kept; ++j) {
      Complex sum = 0;
      for (Index off : traced_offsets) {
        sum += m(kept_offsets[static_cast<std::size_t>(i)] + off,
                 kept_offsets[static_cast<std::size_t>(j)] + off);
      }
      out(i, j) = sum;
    }
  }

  std::vector<Index> out_dims;
  out_dims.reserve(kept.size());
  for (std::size_t axis : kept) out_dims.push_back(dims[axis]);
  return DensityMatrix(std::move(out), std::move(out_dims));
}

RealVector svd_coefficients(const ComplexVector& psi,
                            const std::array<Index, 2>& dims) {
  const Index da = dims[0];
  const Index db = dims[1];
  if (da < 1 || db < 1) {
    throw ValidationError("svd_coefficients: both factor dimensions must be >= 1");
  }
  if (psi.size() != da * db) {
    std::ostringstream os;
    os << "svd_coefficients: vector length " << psi.size() << " does not match "
       << da << "x" << db;
    throw ValidationError(os.str());
  }
  const double norm_dev = std::abs(psi.norm() - 1.0);
  if (!(norm_dev <= 1e-8)) {
    throw ValidationError("svd_coefficients: norm deviates from 1 by " + fmt(norm_dev));
  }
  using RowMajorMatrix =
      Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  Eigen::Map<const RowMajorMatrix> coeff(psi.data(), da, db);
  Eigen::JacobiSVD<ComplexMatrix> svd(coeff);
  return svd.singularValues();
}

ComplexMatrix unitary_from_generator(const ComplexMatrix& hermitian,
                                     double angle) {
  const EigenSystem es = hermitian_eig(hermitian);
  ComplexVector phases(es.values.size());
  for (Index i = 0; i < es.values.size(); ++i) {
    phases(i) = std::polar(1.0, angle * es.values(i));
  }
  return es.vectors * phases.asDiagonal() * es.vectors.adjoint();
}

double trace_distance(const DensityMatrix& x, const DensityMatrix& y) {
  if (x.dim() != y.dim()) {
    throw ValidationError("trace_distance: dimension mismatch");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(x.matrix() - y.matrix(),
                                                      Eigen::EigenvaluesOnly);
  return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

ComplexMatrix random_haar_unitary(Index d, Rng& rng) {
  if (d < 1) {
    throw ValidationError("random_haar_unitary: dimension must be >= 1");
  }
  ComplexMatrix g(d, d);
  fill_gaussian(g, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(d, d);
  const ComplexVector diag = qr.matrixQR().diagonal();
  for (Index j = 0; j < d; ++j) {
    const double mag = std::abs(diag(j));
    q.col(j) *= mag > 0 ? diag(j) / mag : Complex(1.0, 0.0);
  }
  return q;
}

RealMatrix random_orthogonal(Index d, Rng& rng) {
  if (d < 1) {
    throw ValidationError("random_orthogonal: dimension must be >= 1");
  }
  RealMatrix g(d, d);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (Index i = 0; i < d; ++i) {
    for (Index j = 0; j < d; ++j) g(i, j) = gauss(rng);
  }
  Eigen::HouseholderQR<RealMatrix> qr(g);
  RealMatrix q = qr.householderQ() * RealMatrix::Identity(d, d);
  const RealVector diag = qr.matrixQR().diagonal();
  for (Index j = 0; j < d; ++j) {
    if (diag(j) < 0) q.col(j) = -q.col(j);
  }
  return q;
}

DensityMatrix random_density_matrix(std::vector<Index> dims,
                                    std::optional<Index> rank, Rng& rng) {
  const Index d = checked_product(dims, "random_density_matrix");
  const Index r = rank.value_or(d);
  if (r < 1 || r > d) {
    std::ostringstream os;
    os << "random_density_matrix: rank " << r << " outside [1, " << d << "]";
    throw ValidationError(os.str());
  }
  ComplexMatrix g(d, r);
  fill_gaussian(g, rng);
  ComplexMatrix m = g * g.adjoint();
  m /= m.trace().real();
  return DensityMatrix(std::move(m), std::move(dims));
}

ComplexVector random_pure_state(const std::vector<Index>& dims, Rng& rng) {
  const Index d = checked_product(dims, "random_pure_state");
  ComplexMatrix g(d, 1);
  fill_gaussian(g, rng);
  ComplexVector psi = g.col(0);
  psi /= psi.norm();
  return psi;
}

}  // namespace asymq
