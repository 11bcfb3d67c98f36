#include "asymq/qfi.hpp"

#include <cassert>
#include <cmath>
#include <sstream>

namespace asymq {

namespace {

void require_matching_dims(const DensityMatrix& rho, const Observable& k,
                           const char* op) {
  if (rho.dim() != k.dim()) {
    std::ostringstream os;
    os << op << ": state dimension " << rho.dim()
       << " does not match observable dimension " << k.dim();
    throw ValidationError(os.str());
  }
}

}  // namespace

namespace detail {

StateSpectrum state_spectrum(const DensityMatrix& rho) {
  EigenSystem es = hermitian_eig(rho.matrix());
  RealVector p = es.values.cwiseMax(0.0).cwiseMin(1.0);
  const double sum = p.sum();
  if (std::abs(sum - 1.0) > 1e-12) {
    p /= sum;
  }
  return StateSpectrum{std::move(p), std::move(es.vectors)};
}

QfiResult qfi_from_spectrum(const StateSpectrum& spectrum, const Observable& k) {
  const ComplexMatrix k_eig =
      spectrum.basis.adjoint() * k.matrix() * spectrum.basis;
  const RealVector& p = spectrum.probabilities;

  QfiResult result;
  for (Index i = 0; i < p.size(); ++i) {
    for (Index j = i + 1; j < p.size(); ++j) {
      const double sum = p(i) + p(j);
      if (sum < tol::degeneracy_floor) {
        ++result.skipped_pairs;
        continue;
      }
      const double diff = p(i) - p(j);
      result.value += diff * diff / sum * std::norm(k_eig(i, j));
    }
  }
  assert(result.value >= 0.0);
  return result;
}

}  // namespace detail

QfiResult qfi(const DensityMatrix& rho, const Observable& k) {
  require_matching_dims(rho, k, "qfi");
  return detail::qfi_from_spectrum(detail::state_spectrum(rho), k);
}

std::vector<double> qfi_batch(const DensityMatrix& rho,
                              std::span<const Observable> basis) {
  std::vector<double> values;
  values.reserve(basis.size());
  if (basis.empty()) return values;
  for (const Observable& k : basis) {
    require_matching_dims(rho, k, "qfi_batch");
  }
  const detail::StateSpectrum spectrum = detail::state_spectrum(rho);
  for (const Observable& k : basis) {
    values.push_back(detail::qfi_from_spectrum(spectrum, k).value);
  }
  return values;
}

Observable sld(const DensityMatrix& rho, const Observable& k) {
  require_matching_dims(rho, k, "sld");
  const detail::StateSpectrum spectrum = detail::state_spectrum(rho);
  const ComplexMatrix k_eig =
      spectrum.basis.adjoint() * k.matrix() * spectrum.basis;
  const RealVector& p = spectrum.probabilities;

  // d(rho)/d(theta) = i[K, rho] in the eigenbasis has entries
  // i K_ij (p_j - p_i); dividing by (p_i + p_j)/2 gives L.
  ComplexMatrix l_eig = ComplexMatrix::Zero(p.size(), p.size());
  for (Index i = 0; i < p.size(); ++i) {
    for (Index j = 0; j < p.size(); ++j) {
      const double sum = p(i) + p(j);
      if (sum < tol::degeneracy_floor) continue;
      l_eig(i, j) = Complex(0.0, 2.0) * k_eig(i, j) * (p(j) - p(i)) / sum;
    }
  }
  return Observable(spectrum.basis * l_eig * spectrum.basis.adjoint());
}

double variance(const DensityMatrix& rho, const Observable& k) {
  require_matching_dims(rho, k, "variance");
  const ComplexMatrix rk = rho.matrix() * k.matrix();
  const double mean = rk.trace().real();
  const double second_moment = (rk * k.matrix()).trace().real();
  const double var = second_moment - mean * mean;
  return var < 0.0 ? 0.0 : var;
}

}  // namespace asymq
