#pragma once

#include <array>
#include <vector>

#include "asymq/asymmetry.hpp"
#include "asymq/linalg.hpp"

namespace asymq {

/// Schmidt coefficient vector: descending, entries in [0, 1], sum 1.
class SchmidtData {
 public:
  explicit SchmidtData(std::vector<double> coefficients);

  const std::vector<double>& coefficients() const { return coefficients_; }
  std::size_t size() const { return coefficients_.size(); }

 private:
  std::vector<double> coefficients_;
};

struct CorrelationReport {
  double q_total = 0.0;
  std::vector<double> per_slot;  // lifted minus local asymmetry per factor

  double side_a() const { return per_slot.at(0); }
  double side_b() const { return per_slot.at(1); }
};

/// Correlation measure for an n-partite state: per slot i, the asymmetry of
/// the global state with respect to the lifted u(d_i) basis minus the
/// asymmetry of the i-th marginal; q_total is the sum over slots.
CorrelationReport multipartite_q(const DensityMatrix& rho);

/// Two-factor case of multipartite_q. q_total equals the global bipartite
/// asymmetry minus both local asymmetries.
CorrelationReport q_measure(const DensityMatrix& rho_ab);

struct PureStateQ {
  double total = 0.0;
  double per_side = 0.0;  // each side contributes half
};

/// Closed form for pure bipartite states:
/// Q = sum_{i != j} (2 L_i L_j / (L_i + L_j) + L_i L_j) over the Schmidt
/// coefficients; pairs under the degeneracy floor are skipped.
PureStateQ pure_state_q(const SchmidtData& schmidt);

/// Schmidt coefficients from the vector, then the pure-state closed form.
double q_pure_from_vector(const ComplexVector& psi,
                          const std::array<Index, 2>& dims);

/// 2 sqrt(L_1 L_2) for a two-coefficient Schmidt vector.
double concurrence_pure(const SchmidtData& schmidt);

/// Correlation triple of the two-qubit state I/4 + sum_i c_i s_i x s_i.
/// Construction rejects triples whose Bell-basis eigenvalues go negative.
/// Note the quarter-scale convention: the Bloch correlation vector t of the
/// common (1/4)(I + sum t_i s_i x s_i) parametrization is t = 4c.
class BellDiagonalParams {
 public:
  explicit BellDiagonalParams(const std::array<double, 3>& c);

  /// Converting constructor from the Bloch convention, c = t / 4.
  static BellDiagonalParams from_bloch(const std::array<double, 3>& t);

  const std::array<double, 3>& c() const { return c_; }
  /// Bell-basis eigenvalues:
  /// b1 = 1/4 - c1 + c2 + c3, b2 = 1/4 + c1 - c2 + c3,
  /// b3 = 1/4 + c1 + c2 - c3, b4 = 1/4 - c1 - c2 - c3.
  const std::array<double, 4>& betas() const { return betas_; }

 private:
  std::array<double, 3> c_;
  std::array<double, 4> betas_;
};

/// Werner mixture w |psi-><psi-| + (1 - w) I/4, i.e. c = (-w/4, -w/4, -w/4).
BellDiagonalParams werner_params(double w);

DensityMatrix bell_diagonal_state(const BellDiagonalParams& params);

/// Closed form Q = (1/2)(3 - 4 sum_{i>j} b_i b_j / (b_i + b_j)).
double bell_diagonal_q(const BellDiagonalParams& params);

/// Maximum of pure_state_q over d coefficients: (d^2 - 1)/d, attained at the
/// uniform vector L_i = 1/d. (The value (d - 1)/d quoted in places for this
/// bound is inconsistent with the closed form; see the README caveats.)
double pure_q_bound(Index d);

}  // namespace asymq
