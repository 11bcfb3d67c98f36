#include "asymq/generators.hpp"

#include <cmath>
#include <sstream>

namespace asymq {

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << std::scientific << x;
  return os.str();
}

}  // namespace

GeneratorBasis::GeneratorBasis(Index dim, std::vector<Observable> elements,
                               double gram_tol)
    : dim_(dim), elements_(std::move(elements)) {
  if (dim_ < 1) {
    throw ValidationError("generator basis: dimension must be >= 1");
  }
  if (static_cast<Index>(elements_.size()) != dim_ * dim_) {
    std::ostringstream os;
    os << "generator basis: expected " << dim_ * dim_ << " elements, got "
       << elements_.size();
    throw ValidationError(os.str());
  }
  for (const Observable& t : elements_) {
    if (t.dim() != dim_) {
      throw ValidationError("generator basis: element dimension mismatch");
    }
    const double dev = hermiticity_deviation(t.matrix());
    if (!(dev <= 1e-12)) {
      throw ValidationError("generator basis: element deviates from Hermitian by " + fmt(dev));
    }
  }
  for (std::size_t a = 0; a < elements_.size(); ++a) {
    for (std::size_t b = a; b < elements_.size(); ++b) {
      const Complex overlap =
          (elements_[a].matrix() * elements_[b].matrix()).trace();
      const double expected = a == b ? normalization : 0.0;
      const double dev = std::abs(overlap - Complex(expected, 0.0));
      if (!(dev <= gram_tol)) {
        std::ostringstream os;
        os << "generator basis: Tr(T_" << a << " T_" << b << ") deviates from "
           << expected << " by " << fmt(dev);
        throw ValidationError(os.str());
      }
    }
  }
}

GeneratorBasis gell_mann_basis(Index d) {
  if (d < 1) {
    throw ValidationError("gell_mann_basis: dimension must be >= 1");
  }
  std::vector<Observable> elements;
  elements.reserve(static_cast<std::size_t>(d * d));

  for (Index i = 0; i < d; ++i) {
    for (Index j = i + 1; j < d; ++j) {
      ComplexMatrix m = ComplexMatrix::Zero(d, d);
      m(i, j) = 1.0;
      m(j, i) = 1.0;
      elements.emplace_back(std::move(m));
    }
  }
  for (Index i = 0; i < d; ++i) {
    for (Index j = i + 1; j < d; ++j) {
      ComplexMatrix m = ComplexMatrix::Zero(d, d);
      m(i, j) = Complex(0.0, -1.0);
      m(j, i) = Complex(0.0, 1.0);
      elements.emplace_back(std::move(m));
    }
  }
  for (Index l = 1; l < d; ++l) {
    const double scale =
        std::sqrt(2.0 / (static_cast<double>(l) * static_cast<double>(l + 1)));
    ComplexMatrix m = ComplexMatrix::Zero(d, d);
    for (Index k = 0; k < l; ++k) m(k, k) = scale;
    m(l, l) = -scale * static_cast<double>(l);
    elements.emplace_back(std::move(m));
  }
  elements.emplace_back(std::sqrt(2.0 / static_cast<double>(d)) *
                        ComplexMatrix::Identity(d, d));

  return GeneratorBasis(d, std::move(elements));
}

Observable lift_observable(const Observable& k, std::size_t slot,
                           const std::vector<Index>& dims) {
  if (slot >= dims.size()) {
    std::ostringstream os;
    os << "lift: slot " << slot << " out of range for " << dims.size() << " factors";
    throw ValidationError(os.str());
  }
  if (dims[slot] != k.dim()) {
    std::ostringstream os;
    os << "lift: operator dimension " << k.dim() << " does not match factor "
       << slot << " of dimension " << dims[slot];
    throw ValidationError(os.str());
  }
  Index pre = 1;
  for (std::size_t axis = 0; axis < slot; ++axis) pre *= dims[axis];
  Index post = 1;
  for (std::size_t axis = slot + 1; axis < dims.size(); ++axis) post *= dims[axis];

  ComplexMatrix lifted =
      kron(ComplexMatrix::Identity(pre, pre),
           kron(k.matrix(), ComplexMatrix::Identity(post, post)));
  return Observable(std::move(lifted));
}

std::vector<Observable> lift(const GeneratorBasis& basis, std::size_t slot,
                             const std::vector<Index>& dims) {
  std::vector<Observable> lifted;
  lifted.reserve(basis.size());
  for (const Observable& t : basis.elements()) {
    lifted.push_back(lift_observable(t, slot, dims));
  }
  return lifted;
}

GeneratorBasis rotate_basis(const GeneratorBasis& basis,
                            const RealMatrix& rotation) {
  const auto n = static_cast<Index>(basis.size());
  if (rotation.rows() != n || rotation.cols() != n) {
    std::ostringstream os;
    os << "rotate_basis: rotation must be " << n << "x" << n << ", got "
       << rotation.rows() << "x" << rotation.cols();
    throw ValidationError(os.str());
  }
  const double orth_dev =
      (rotation.transpose() * rotation - RealMatrix::Identity(n, n))
          .cwiseAbs()
          .maxCoeff();
  if (!(orth_dev <= tol::reconstruction)) {
    throw ValidationError("rotate_basis: matrix deviates from orthogonal by " + fmt(orth_dev));
  }

  const Index d = basis.dim();
  std::vector<Observable> rotated;
  rotated.reserve(basis.size());
  for (Index b = 0; b < n; ++b) {
    ComplexMatrix m = ComplexMatrix::Zero(d, d);
    for (Index a = 0; a < n; ++a) {
      m += rotation(a, b) * basis.elements()[static_cast<std::size_t>(a)].matrix();
    }
    rotated.emplace_back(std::move(m));
  }
  // An input orthogonal only to 1e-9 perturbs the Gram matrix by the same
  // order, so the rotated basis is validated one decade looser.
  return GeneratorBasis(d, std::move(rotated), 1e-8);
}

}  // namespace asymq
