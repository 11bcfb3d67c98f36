#include "asymq/channels.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "asymq/correlation.hpp"
#include "asymq/generators.hpp"
#include "asymq/qfi.hpp"

namespace asymq {

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << std::scientific << x;
  return os.str();
}

void require_unit_interval(double value, const char* name) {
  if (!(value >= 0.0 && value <= 1.0)) {
    std::ostringstream os;
    os << name << ": parameter " << value << " outside [0, 1]";
    throw ValidationError(os.str());
  }
}

}  // namespace

KrausChannel::KrausChannel(std::vector<ComplexMatrix> operators,
                           std::string label)
    : operators_(std::move(operators)), label_(std::move(label)) {
  if (operators_.empty()) {
    throw ValidationError("kraus channel '" + label_ + "': needs at least one operator");
  }
  const Index d = operators_.front().rows();
  for (const ComplexMatrix& k : operators_) {
    require_finite(k, "kraus channel '" + label_ + "'");
    if (k.rows() != d || k.cols() != d) {
      throw ValidationError("kraus channel '" + label_ +
                            "': operators must all be square of equal size");
    }
  }
  const double residual = completeness_residual();
  if (!(residual <= tol::validation)) {
    throw ValidationError("kraus channel '" + label_ +
                          "': completeness residual " + fmt(residual));
  }
}

double KrausChannel::completeness_residual() const {
  const Index d = dim();
  ComplexMatrix sum = ComplexMatrix::Zero(d, d);
  for (const ComplexMatrix& k : operators_) {
    sum += k.adjoint() * k;
  }
  return (sum - ComplexMatrix::Identity(d, d)).cwiseAbs().maxCoeff();
}

DensityMatrix apply(const KrausChannel& channel, const DensityMatrix& rho) {
  if (channel.dim() != rho.dim()) {
    std::ostringstream os;
    os << "apply: channel dimension " << channel.dim()
       << " does not match state dimension " << rho.dim();
    throw ValidationError(os.str());
  }
  ComplexMatrix out = ComplexMatrix::Zero(rho.dim(), rho.dim());
  for (const ComplexMatrix& k : channel.operators()) {
    out += k * rho.matrix() * k.adjoint();
  }
  return DensityMatrix(std::move(out), rho.dims());
}

DensityMatrix apply_local(const KrausChannel& channel, Side side,
                          const DensityMatrix& rho_ab) {
  if (rho_ab.dims().size() != 2) {
    throw ValidationError("apply_local: expected a two-factor state");
  }
  const std::size_t slot = side == Side::a ? 0 : 1;
  const Index d_slot = rho_ab.dims()[slot];
  if (channel.dim() != d_slot) {
    std::ostringstream os;
    os << "apply_local: channel dimension " << channel.dim()
       << " does not match factor dimension " << d_slot;
    throw ValidationError(os.str());
  }
  const Index d_other = rho_ab.dims()[1 - slot];
  const ComplexMatrix identity = ComplexMatrix::Identity(d_other, d_other);

  std::vector<ComplexMatrix> lifted;
  lifted.reserve(channel.operators().size());
  for (const ComplexMatrix& k : channel.operators()) {
    lifted.push_back(side == Side::a ? kron(k, identity) : kron(identity, k));
  }
  const KrausChannel lifted_channel(
      std::move(lifted),
      channel.label() + (side == Side::a ? "_on_a" : "_on_b"));
  return apply(lifted_channel, rho_ab);
}

KrausChannel depolarizing(double p) {
  require_unit_interval(p, "depolarizing");
  std::vector<ComplexMatrix> ops;
  ops.push_back(std::sqrt(1.0 - 0.75 * p) * ComplexMatrix::Identity(2, 2));
  ops.push_back(std::sqrt(0.25 * p) * pauli_x());
  ops.push_back(std::sqrt(0.25 * p) * pauli_y());
  ops.push_back(std::sqrt(0.25 * p) * pauli_z());
  return KrausChannel(std::move(ops), "depolarizing");
}

KrausChannel amplitude_damping(double gamma) {
  require_unit_interval(gamma, "amplitude_damping");
  ComplexMatrix k0(2, 2);
  k0 << 1, 0, 0, std::sqrt(1.0 - gamma);
  ComplexMatrix k1(2, 2);
  k1 << 0, std::sqrt(gamma), 0, 0;
  return KrausChannel({std::move(k0), std::move(k1)}, "amplitude_damping");
}

KrausChannel phase_damping(double gamma) {
  require_unit_interval(gamma, "phase_damping");
  ComplexMatrix k0(2, 2);
  k0 << 1, 0, 0, std::sqrt(1.0 - gamma);
  ComplexMatrix k1(2, 2);
  k1 << 0, 0, 0, std::sqrt(gamma);
  return KrausChannel({std::move(k0), std::move(k1)}, "phase_damping");
}

KrausChannel unitary_channel(const ComplexMatrix& u) {
  require_finite(u, "unitary_channel");
  if (u.rows() != u.cols()) {
    throw ValidationError("unitary_channel: matrix must be square");
  }
  const double dev =
      (u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.rows()))
          .cwiseAbs()
          .maxCoeff();
  if (!(dev <= tol::reconstruction)) {
    throw ValidationError("unitary_channel: matrix deviates from unitary by " + fmt(dev));
  }
  return KrausChannel({u}, "unitary");
}

KrausChannel random_channel(Index d, Rng& rng) {
  if (d < 1) {
    throw ValidationError("random_channel: dimension must be >= 1");
  }
  constexpr Index ancilla = 2;
  const ComplexMatrix u = random_haar_unitary(d * ancilla, rng);
  // K_k = <k|_anc U |0>_anc with the ancilla as the fast tensor index.
  std::vector<ComplexMatrix> ops;
  for (Index k = 0; k < ancilla; ++k) {
    ComplexMatrix block(d, d);
    for (Index i = 0; i < d; ++i) {
      for (Index j = 0; j < d; ++j) {
        block(i, j) = u(i * ancilla + k, j * ancilla);
      }
    }
    ops.push_back(std::move(block));
  }
  return KrausChannel(std::move(ops), "random_stinespring");
}

MonotonicityTrial monotonicity_trial(const DensityMatrix& rho_ab,
                                     const KrausChannel& channel,
                                     Side channel_side, TrialMeasure measure,
                                     const Observable* local_generator) {
  if (rho_ab.dims().size() != 2) {
    throw ValidationError("monotonicity_trial: expected a two-factor state");
  }
  const Side measured_side = channel_side == Side::a ? Side::b : Side::a;
  const std::size_t measured_slot = measured_side == Side::a ? 0 : 1;
  const DensityMatrix after_state = apply_local(channel, channel_side, rho_ab);

  MonotonicityTrial trial;
  switch (measure) {
    case TrialMeasure::lifted_generator_qfi: {
      if (local_generator == nullptr) {
        throw ValidationError(
            "monotonicity_trial: lifted_generator_qfi needs a local observable");
      }
      const Observable lifted =
          lift_observable(*local_generator, measured_slot, rho_ab.dims());
      trial.before = qfi(rho_ab, lifted).value;
      trial.after = qfi(after_state, lifted).value;
      break;
    }
    case TrialMeasure::q_side: {
      const CorrelationReport before = q_measure(rho_ab);
      const CorrelationReport after = q_measure(after_state);
      trial.before = measured_side == Side::a ? before.side_a() : before.side_b();
      trial.after = measured_side == Side::a ? after.side_a() : after.side_b();
      break;
    }
  }
  trial.violation = trial.after - trial.before;
  return trial;
}

double collective_qfi(const DensityMatrix& rho_ab, const Observable& ka,
                      const Observable& kb) {
  if (rho_ab.dims().size() != 2) {
    throw ValidationError("collective_qfi: expected a two-factor state");
  }
  if (ka.dim() != rho_ab.dims()[0] || kb.dim() != rho_ab.dims()[1]) {
    throw ValidationError("collective_qfi: observable dimensions do not match the factors");
  }
  const ComplexMatrix collective =
      kron(ka.matrix(), ComplexMatrix::Identity(kb.dim(), kb.dim())) +
      kron(ComplexMatrix::Identity(ka.dim(), ka.dim()), kb.matrix());
  return qfi(rho_ab, Observable(collective)).value;
}

}  // namespace asymq
