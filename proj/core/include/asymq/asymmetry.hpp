#pragma once

#include <span>
#include <vector>

#include "asymq/channels.hpp"
#include "asymq/generators.hpp"
#include "asymq/linalg.hpp"
#include "asymq/qfi.hpp"

namespace asymq {

struct AsymmetryReport {
  double total = 0.0;                 // (1/4) * sum(per_generator)
  std::vector<double> per_generator;  // one QFI value per basis element
};

/// Asymmetry of a state with respect to a generator set:
/// A(rho, {T_j}) = (1/4) sum_j F(rho, T_j). Any Hermitian list is accepted;
/// a GeneratorBasis gives the basis-independent u(d) measure.
AsymmetryReport asymmetry(const DensityMatrix& rho,
                          std::span<const Observable> generators);
AsymmetryReport asymmetry(const DensityMatrix& rho, const GeneratorBasis& basis);

/// Asymmetry of the global state under the local unitary group: the sum of
/// the lifted u(d_i) contributions of every tensor factor. The state's
/// eigendecomposition is computed once and shared across all generators.
AsymmetryReport multipartite_asymmetry(const DensityMatrix& rho);

/// Two-factor case of multipartite_asymmetry.
AsymmetryReport bipartite_asymmetry(const DensityMatrix& rho_ab);

/// Asymmetry of one marginal with respect to its own u(d) basis.
AsymmetryReport local_asymmetry(const DensityMatrix& rho_ab, Side side);

/// Asymmetry of the GLOBAL state with respect to one side's lifted basis.
AsymmetryReport lifted_asymmetry(const DensityMatrix& rho_ab, Side side);

struct SymmetryVerdict {
  bool symmetric = false;
  double max_commutator_norm = 0.0;  // Frobenius
};

/// True iff max_j ||[rho, T_j]||_F <= tolerance.
SymmetryVerdict is_symmetric_state(const DensityMatrix& rho,
                                   std::span<const Observable> generators,
                                   double tolerance);
SymmetryVerdict is_symmetric_state(const DensityMatrix& rho,
                                   const GeneratorBasis& basis,
                                   double tolerance);

struct CovarianceVerdict {
  bool covariant = false;
  double max_deviation = 0.0;
};

/// Monte-Carlo covariance test: samples random angles, generators and states
/// and compares E(U rho U(dagger)) against U E(rho) U(dagger). A passing
/// verdict is evidence, not proof.
CovarianceVerdict is_covariant_channel(const KrausChannel& channel,
                                       std::span<const Observable> generators,
                                       int samples, double tolerance, Rng& rng);
CovarianceVerdict is_covariant_channel(const KrausChannel& channel,
                                       const GeneratorBasis& basis, int samples,
                                       double tolerance, Rng& rng);

}  // namespace asymq
