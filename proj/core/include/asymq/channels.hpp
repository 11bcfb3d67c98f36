#pragma once

#include <string>
#include <vector>

#include "asymq/linalg.hpp"

namespace asymq {

/// CPTP map in Kraus form. Construction checks the completeness relation
/// sum_k K_k(dagger) K_k = I within tol::validation.
class KrausChannel {
 public:
  KrausChannel(std::vector<ComplexMatrix> operators, std::string label);

  const std::vector<ComplexMatrix>& operators() const { return operators_; }
  Index dim() const { return operators_.front().rows(); }
  const std::string& label() const { return label_; }

  /// max |sum_k K_k(dagger) K_k - I|, for reporting.
  double completeness_residual() const;

 private:
  std::vector<ComplexMatrix> operators_;
  std::string label_;
};

/// sum_k K_k rho K_k(dagger).
DensityMatrix apply(const KrausChannel& channel, const DensityMatrix& rho);

/// Channel acting on one factor of a bipartite state, identity on the other.
DensityMatrix apply_local(const KrausChannel& channel, Side side,
                          const DensityMatrix& rho_ab);

KrausChannel depolarizing(double p);
KrausChannel amplitude_damping(double gamma);
KrausChannel phase_damping(double gamma);
KrausChannel unitary_channel(const ComplexMatrix& u);

/// Random CPTP map from a Haar unitary on system + dimension-2 ancilla
/// (Stinespring dilation truncated to Kraus form).
KrausChannel random_channel(Index d, Rng& rng);

enum class TrialMeasure {
  lifted_generator_qfi,  // QFI of a generator lifted on the untouched side
  q_side,                // one-sided correlation component Q^a or Q^b
};

struct MonotonicityTrial {
  double before = 0.0;
  double after = 0.0;
  double violation = 0.0;  // after - before; positive means the measure grew
};

/// Applies the channel to one side and evaluates the chosen measure on the
/// OPPOSITE side before and after. For lifted_generator_qfi the caller
/// supplies the local observable to lift on the measured side.
MonotonicityTrial monotonicity_trial(const DensityMatrix& rho_ab,
                                     const KrausChannel& channel,
                                     Side channel_side, TrialMeasure measure,
                                     const Observable* local_generator = nullptr);

/// QFI with respect to the collective observable K_a x I + I x K_b.
/// Diagnostic only: this quantity is not subadditive (see README caveats).
double collective_qfi(const DensityMatrix& rho_ab, const Observable& ka,
                      const Observable& kb);

}  // namespace asymq
