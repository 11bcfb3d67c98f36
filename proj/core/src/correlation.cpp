#include "asymq/correlation.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "asymq/generators.hpp"
#include "asymq/qfi.hpp"

namespace asymq {

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

}  // namespace

SchmidtData::SchmidtData(std::vector<double> coefficients)
    : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty()) {
    throw ValidationError("schmidt data: coefficient vector is empty");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    double& c = coefficients_[i];
    if (c < 0.0) {
      if (c < -tol::validation) {
        throw ValidationError("schmidt data: coefficient " + fmt(c) + " is negative");
      }
      c = 0.0;
    }
    if (c > 1.0 + tol::validation) {
      throw ValidationError("schmidt data: coefficient " + fmt(c) + " exceeds 1");
    }
    if (i > 0 && c > coefficients_[i - 1] + 1e-12) {
      throw ValidationError("schmidt data: coefficients must descend");
    }
    sum += c;
  }
  if (std::abs(sum - 1.0) > tol::validation) {
    throw ValidationError("schmidt data: coefficients sum to " + fmt(sum) + ", expected 1");
  }
}

CorrelationReport multipartite_q(const DensityMatrix& rho) {
  const std::vector<Index>& dims = rho.dims();
  if (dims.size() < 2) {
    throw ValidationError("multipartite_q: state needs at least two tensor factors");
  }
  const detail::StateSpectrum spectrum = detail::state_spectrum(rho);

  CorrelationReport report;
  report.per_slot.reserve(dims.size());
  for (std::size_t slot = 0; slot < dims.size(); ++slot) {
    const GeneratorBasis basis = gell_mann_basis(dims[slot]);

    std::vector<double> lifted_qfi;
    lifted_qfi.reserve(basis.size());
    for (const Observable& t : lift(basis, slot, dims)) {
      lifted_qfi.push_back(detail::qfi_from_spectrum(spectrum, t).value);
    }
    const double lifted_total =
        0.25 * std::accumulate(lifted_qfi.begin(), lifted_qfi.end(), 0.0);

    const DensityMatrix marginal = partial_trace(rho, {slot});
    const double local_total = asymmetry(marginal, basis).total;

    report.per_slot.push_back(lifted_total - local_total);
  }
  report.q_total =
      std::accumulate(report.per_slot.begin(), report.per_slot.end(), 0.0);
  if (report.q_total < -tol::validation) {
    throw ValidationError("correlation: computed Q = " + fmt(report.q_total) +
                          " is negative beyond tolerance");
  }
  return report;
}

CorrelationReport q_measure(const DensityMatrix& rho_ab) {
  if (rho_ab.dims().size() != 2) {
    throw ValidationError("q_measure: expected a two-factor state");
  }
  return multipartite_q(rho_ab);
}

PureStateQ pure_state_q(const SchmidtData& schmidt) {
  const std::vector<double>& lambda = schmidt.coefficients();
  double total = 0.0;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    for (std::size_t j = i + 1; j < lambda.size(); ++j) {
      const double sum = lambda[i] + lambda[j];
      if (sum < tol::degeneracy_floor) continue;
      const double product = lambda[i] * lambda[j];
      total += 2.0 * (2.0 * product / sum + product);
    }
  }
  return PureStateQ{total, 0.5 * total};
}

double q_pure_from_vector(const ComplexVector& psi,
                          const std::array<Index, 2>& dims) {
  const RealVector singular = svd_coefficients(psi, dims);
  std::vector<double> lambda(static_cast<std::size_t>(singular.size()));
  double sum = 0.0;
  for (Index i = 0; i < singular.size(); ++i) {
    lambda[static_cast<std::size_t>(i)] = singular(i) * singular(i);
    sum += lambda[static_cast<std::size_t>(i)];
  }
  for (double& c : lambda) c /= sum;
  return pure_state_q(SchmidtData(std::move(lambda))).total;
}

double concurrence_pure(const SchmidtData& schmidt) {
  if (schmidt.size() != 2) {
    std::ostringstream os;
    os << "concurrence_pure: expected exactly 2 Schmidt coefficients, got "
       << schmidt.size();
    throw ValidationError(os.str());
  }
  return 2.0 * std::sqrt(schmidt.coefficients()[0] * schmidt.coefficients()[1]);
}

BellDiagonalParams::BellDiagonalParams(const std::array<double, 3>& c) : c_(c) {
  betas_ = {0.25 - c[0] + c[1] + c[2], 0.25 + c[0] - c[1] + c[2],
            0.25 + c[0] + c[1] - c[2], 0.25 - c[0] - c[1] - c[2]};
  for (std::size_t i = 0; i < betas_.size(); ++i) {
    if (betas_[i] < -1e-12) {
      std::ostringstream os;
      os << "bell diagonal params: beta_" << i + 1 << " = " << fmt(betas_[i])
         << " is negative (betas: " << fmt(betas_[0]) << ", " << fmt(betas_[1])
         << ", " << fmt(betas_[2]) << ", " << fmt(betas_[3]) << ")";
      throw ValidationError(os.str());
    }
  }
}

BellDiagonalParams BellDiagonalParams::from_bloch(
    const std::array<double, 3>& t) {
  return BellDiagonalParams({t[0] / 4.0, t[1] / 4.0, t[2] / 4.0});
}

BellDiagonalParams werner_params(double w) {
  if (w < 0.0 || w > 1.0) {
    throw ValidationError("werner_params: mixing weight " + fmt(w) + " outside [0, 1]");
  }
  return BellDiagonalParams({-w / 4.0, -w / 4.0, -w / 4.0});
}

DensityMatrix bell_diagonal_state(const BellDiagonalParams& params) {
  const std::array<double, 3>& c = params.c();
  ComplexMatrix m = 0.25 * ComplexMatrix::Identity(4, 4);
  m += c[0] * kron(pauli_x(), pauli_x());
  m += c[1] * kron(pauli_y(), pauli_y());
  m += c[2] * kron(pauli_z(), pauli_z());
  return DensityMatrix(std::move(m), {2, 2});
}

double bell_diagonal_q(const BellDiagonalParams& params) {
  const std::array<double, 4>& beta = params.betas();
  double pair_sum = 0.0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const double sum = beta[i] + beta[j];
      if (sum < tol::degeneracy_floor) continue;
      pair_sum += beta[i] * beta[j] / sum;
    }
  }
  return 0.5 * (3.0 - 4.0 * pair_sum);
}

double pure_q_bound(Index d) {
  if (d < 1) {
    throw ValidationError("pure_q_bound: dimension must be >= 1");
  }
  const auto dd = static_cast<double>(d);
  return (dd * dd - 1.0) / dd;
}

}  // namespace asymq
