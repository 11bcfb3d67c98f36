#pragma once

#include <span>
#include <vector>

#include "asymq/linalg.hpp"

namespace asymq {

struct QfiResult {
  double value = 0.0;
  /// Eigenvalue pairs dropped by the degeneracy floor (both probabilities
  /// vanishing). Lets callers tell "zero by physics" from "zero by floor".
  int skipped_pairs = 0;
};

/// Quantum Fisher information of rho with respect to the observable K:
/// (1/2) sum_{i!=j} (p_i - p_j)^2 / (p_i + p_j) |<psi_i|K|psi_j>|^2.
/// Note the 1/2 normalization; several references define QFI as four times
/// this quantity.
QfiResult qfi(const DensityMatrix& rho, const Observable& k);

/// QFI of one state against many observables, computing the eigendecomposition
/// of rho once and reusing it across the whole list.
std::vector<double> qfi_batch(const DensityMatrix& rho,
                              std::span<const Observable> basis);

/// Symmetric logarithmic derivative: the Hermitian solution of
/// d(rho)/d(theta) = (rho L + L rho)/2 along rho -> e^{iK theta} rho e^{-iK theta},
/// with kernel-block entries set to zero.
Observable sld(const DensityMatrix& rho, const Observable& k);

/// Tr(rho K^2) - Tr(rho K)^2.
double variance(const DensityMatrix& rho, const Observable& k);

namespace detail {

/// Eigenvalues of rho clamped to [0, 1] (renormalized only when the clamped
/// sum drifts from 1 by more than 1e-12) plus the eigenbasis.
struct StateSpectrum {
  RealVector probabilities;
  ComplexMatrix basis;
};

StateSpectrum state_spectrum(const DensityMatrix& rho);
QfiResult qfi_from_spectrum(const StateSpectrum& spectrum, const Observable& k);

}  // namespace detail

}  // namespace asymq
