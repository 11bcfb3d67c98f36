#include "asymq/property_suite.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "asymq/asymmetry.hpp"
#include "asymq/channels.hpp"
#include "asymq/correlation.hpp"
#include "asymq/generators.hpp"
#include "asymq/linalg.hpp"
#include "asymq/qfi.hpp"

namespace asymq {

namespace {

constexpr Index kDimChoices[] = {2, 3, 4};

Index pick_dim(Rng& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, 2);
  return kDimChoices[pick(rng)];
}

Observable random_observable(Index d, Rng& rng) {
  ComplexMatrix g(d, d);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (Index i = 0; i < d; ++i) {
    for (Index j = 0; j < d; ++j) {
      g(i, j) = Complex(gauss(rng), gauss(rng));
    }
  }
  return Observable(0.5 * (g + g.adjoint()));
}

DensityMatrix random_product_state(Index da, Index db, Rng& rng) {
  const DensityMatrix a = random_density_matrix({da}, std::nullopt, rng);
  const DensityMatrix b = random_density_matrix({db}, std::nullopt, rng);
  return DensityMatrix(kron(a.matrix(), b.matrix()), {da, db});
}

DensityMatrix maximally_mixed(const std::vector<Index>& dims) {
  Index d = 1;
  for (Index f : dims) d *= f;
  return DensityMatrix(ComplexMatrix::Identity(d, d) / static_cast<double>(d),
                       dims);
}

DensityMatrix bell_state() {
  ComplexVector psi = ComplexVector::Zero(4);
  psi(0) = psi(3) = 1.0 / std::sqrt(2.0);
  return DensityMatrix::from_pure(psi, {2, 2});
}

DensityMatrix classically_correlated_state() {
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(0, 0) = 0.5;
  m(3, 3) = 0.5;
  return DensityMatrix(m, {2, 2});
}

// Descending probability vector of the given length.
std::vector<double> random_simplex(std::size_t n, Rng& rng) {
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  std::vector<double> v(n);
  double sum = 0.0;
  for (double& x : v) {
    x = -std::log(1.0 - uniform(rng));
    sum += x;
  }
  for (double& x : v) x /= sum;
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

struct Check {
  const char* suite;
  const char* name;
  double tolerance;
  std::function<double(int, Rng&)> run;  // returns the worst observed deviation
};

// ---------------------------------------------------------------------------
// linalg
// ---------------------------------------------------------------------------

double check_eig_reconstruction(int trials, Rng& rng) {
  double worst = 0.0;
  std::uniform_int_distribution<Index> dim(2, 16);
  for (int t = 0; t < 5 * trials; ++t) {
    const Observable m = random_observable(dim(rng), rng);
    const EigenSystem es = hermitian_eig(m.matrix());
    const ComplexMatrix rebuilt =
        es.vectors * es.values.asDiagonal() * es.vectors.adjoint();
    const double scale = m.matrix().cwiseAbs().maxCoeff();
    worst = std::max(worst,
                     (rebuilt - m.matrix()).cwiseAbs().maxCoeff() / scale);
  }
  return worst;
}

double check_partial_trace_chain(int trials, Rng& rng) {
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const DensityMatrix rho = random_density_matrix({2, 3, 2}, std::nullopt, rng);
    for (std::size_t slot = 0; slot < 3; ++slot) {
      const DensityMatrix marginal = partial_trace(rho, {slot});
      worst = std::max(
          worst, std::abs(marginal.matrix().trace() - Complex(1.0, 0.0)));
    }
    // tracing in two stages agrees with tracing at once
    const DensityMatrix two_step =
        partial_trace(partial_trace(rho, {0, 2}), {1});
    const DensityMatrix one_step = partial_trace(rho, {2});
    worst = std::max(worst, (two_step.matrix() - one_step.matrix())
                                .cwiseAbs()
                                .maxCoeff());
  }
  return worst;
}

double check_svd_invariance(int trials, Rng& rng) {
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const Index da = pick_dim(rng);
    const Index db = pick_dim(rng);
    const ComplexVector psi = random_pure_state({da, db}, rng);
    const ComplexMatrix u = random_haar_unitary(da, rng);
    const ComplexMatrix v = random_haar_unitary(db, rng);
    const ComplexVector rotated = kron(u, v) * psi;
    const RealVector s0 = svd_coefficients(psi, {da, db});
    const RealVector s1 = svd_coefficients(rotated, {da, db});
    worst = std::max(worst, (s0 - s1).cwiseAbs().maxCoeff());
  }
  return worst;
}

// ---------------------------------------------------------------------------
// generators
// ---------------------------------------------------------------------------

double check_gram(int, Rng&) {
  double worst = 0.0;
  for (Index d : kDimChoices) {
    const GeneratorBasis basis = gell_mann_basis(d);
    for (std::size_t a = 0; a < basis.size(); ++a) {
      for (std::size_t b = 0; b < basis.size(); ++b) {
        const Complex overlap =
            (basis.elements()[a].matrix() * basis.elements()[b].matrix())
                .trace();
        const double expected = a == b ? 2.0 : 0.0;
        worst = std::max(worst, std::abs(overlap - Complex(expected, 0.0)));
      }
    }
  }
  return worst;
}

double check_completeness(int trials, Rng& rng) {
  double worst = 0.0;
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int t = 0; t < trials; ++t) {
    const Index d = pick_dim(rng);
    const GeneratorBasis basis = gell_mann_basis(d);
    ComplexMatrix m(d, d);
    for (Index i = 0; i < d; ++i) {
      for (Index j = 0; j < d; ++j) m(i, j) = Complex(gauss(rng), gauss(rng));
    }
    ComplexMatrix sum = ComplexMatrix::Zero(d, d);
    for (const Observable& g : basis.elements()) {
      sum += g.matrix() * m * g.matrix();
    }
    const ComplexMatrix expected = 2.0 * m.trace() * ComplexMatrix::Identity(d, d);
    worst = std::max(worst, (sum - expected).cwiseAbs().maxCoeff());
  }
  return worst;
}

double check_squares_sum(int, Rng&) {
  double worst = 0.0;
  for (Index d = 2; d <= 6; ++d) {
    const GeneratorBasis basis = gell_mann_basis(d);
    ComplexMatrix sum = ComplexMatrix::Zero(d, d);
    for (const Observable& g : basis.elements()) {
      sum += g.matrix() * g.matrix();
    }
    const ComplexMatrix expected =
        2.0 * static_cast<double>(d) * ComplexMatrix::Identity(d, d);
    worst = std::max(worst, (sum - expected).cwiseAbs().maxCoeff());
  }
  return worst;
}

// ---------------------------------------------------------------------------
// qfi
// ---------------------------------------------------------------------------

double check_qfi_nonnegative(int trials, Rng& rng) {
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const Index d = pick_dim(rng);
    const DensityMatrix rho = random_density_matrix({d}, std::nullopt, rng);
    worst = std::max(worst, -qfi(rho, random_observable(d, rng)).value);
  }
  return worst;
}

double check_pure_equals_variance(int trials, Rng& rng) {
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const Index d = pick_dim(rng);
    const DensityMatrix rho =
        DensityMatrix::from_pure(random_pure_state({d}, rng), {d});
    const Observable k = random_observable(d, rng);
    worst = std::max(worst, std::abs(qfi(rho, k).value - variance(rho, k)));
  }
  return worst;
}

double check_mixed_bounded_by_variance(int trials, Rng& rng) {
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const Index d = pick_dim(rng);
    const DensityMatrix rho = random_density_matrix({d}, std::nullopt, rng);
    const Observable k = random_observable(d, rng);
    worst = std::max(worst, qfi(rho, k).value - variance(rho, k));
  }
  return worst;
}

double check_commuting_unitary_invariance(int trials, Rng& rng) {
  double worst = 0.0;
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  for (int t = 0; t < trials; ++t) {
    const Index d = pick_dim(rng);
    const DensityMatrix rho = random_density_matrix({d}, std::nullopt, rng);
    const Observable k = random_observable(d, rng);
    const ComplexMatrix u = unitary_from_generator(k.matrix(), angle(rng));
    const DensityMatrix rotated(u * rho.matrix() * u.adjoint(), {d});
    worst = std::max(worst, std::abs(qfi(rotated, k).value - qfi(rho, k).value));
  }
  return worst;
}

double check_qfi_convexity(int trials, Rng& rng) {
  double worst = 0.0;
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  for (int t = 0; t < trials; ++t) {
    const Index d = pick_dim(rng);
    const Observable k = random_observable(d, rng);
    const DensityMatrix r1 = random_density_matrix({d}, std::nullopt, rng);
    const DensityMatrix r2 = random_density_matrix({d}, std::nullopt, rng);
    const double w = uniform(rng);
    const DensityMatrix mix(w * r1.matrix() + (1.0 - w) * r2.matrix(), {d});
    const double rhs = w * qfi(r1, k).value + (1.0 - w) * qfi(r2, k).value;
    worst = std::max(worst, qfi(mix, k).value - rhs);
  }
  return worst;
}

double check_zero_characterization(int trials, Rng& rng) {
  double worst = 0.0;
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int t = 0; t < trials; ++t) {
    const Index d = pick_dim(rng);
    const DensityMatrix rho = random_density_matrix({d}, std::nullopt, rng);
    // commuting observable: polynomial in rho
    const ComplexMatrix r = rho.matrix();
    const Observable commuting(gauss(rng) * r + gauss(rng) * r * r +
                               gauss(rng) * ComplexMatrix::Identity(d, d));
    worst = std::max(worst, qfi(rho, commuting).value);

    // generic observable: nonzero commutator must give nonzero QFI
    const Observable generic = random_observable(d, rng);
    const double comm_norm =
        (r * generic.matrix() - generic.matrix() * r).norm();
    const double f = qfi(rho, generic).value;
    if (comm_norm > 1e-8 && f <= 1e-10) worst = std::max(worst, 1.0);
  }
  return worst;
}

double check_sld_consistency(int trials, Rng& rng) {
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const Index d = pick_dim(rng);
    const DensityMatrix rho = random_density_matrix({d}, std::nullopt, rng);
    const Observable k = random_observable(d, rng);
    const Observable l = sld(rho, k);
    const double via_sld =
        0.25 * (rho.matrix() * l.matrix() * l.matrix()).trace().real();
    worst = std::max(worst, std::abs(via_sld - qfi(rho, k).value));
  }
  return worst;
}

double check_sld_lyapunov(int trials, Rng& rng) {
  double worst = 0.0;
  std::uniform_int_distribution<Index> rank_pick(1, 3);
  for (int t = 0; t < trials; ++t) {
    const Index d = pick_dim(rng);
    const DensityMatrix rho =
        random_density_matrix({d}, std::min(rank_pick(rng), d), rng);
    const Observable k = random_observable(d, rng);
    const Observable l = sld(rho, k);

    const detail::StateSpectrum spectrum = detail::state_spectrum(rho);
    ComplexMatrix support = ComplexMatrix::Zero(d, d);
    for (Index i = 0; i < d; ++i) {
      if (spectrum.probabilities(i) >= tol::degeneracy_floor) {
        support += spectrum.basis.col(i) * spectrum.basis.col(i).adjoint();
      }
    }
    const ComplexMatrix lhs =
        0.5 * (rho.matrix() * l.matrix() + l.matrix() * rho.matrix());
    const ComplexMatrix rhs =
        Complex(0.0, 1.0) * (k.matrix() * rho.matrix() - rho.matrix() * k.matrix());
    const ComplexMatrix residual = support * (lhs - rhs) * support;
    worst = std::max(worst, residual.cwiseAbs().maxCoeff());
  }
  return worst;
}

double check_partial_trace_monotonicity(int trials, Rng& rng) {
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const Index da = pick_dim(rng);
    const Index db = pick_dim(rng);
    const DensityMatrix rho = random_density_matrix({da, db}, std::nullopt, rng);
    const Observable x = random_observable(da, rng);
    const Observable lifted = lift_observable(x, 0, rho.dims());
    const double global = qfi(rho, lifted).value;
    const double local = qfi(partial_trace(rho, {0}), x).value;
    worst = std::max(worst, local - global);
  }
  return worst;
}

// ---------------------------------------------------------------------------
// asymmetry
// ---------------------------------------------------------------------------

double check_zero_iff_symmetric(int trials, Rng& rng) {
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const Index d = pick_dim(rng);
    const GeneratorBasis basis = gell_mann_basis(d);

    const DensityMatrix mixed = maximally_mixed({d});
    worst = std::max(worst, asymmetry(mixed, basis).total);
    if (!is_symmetric_state(mixed, basis, 1e-8).symmetric) {
      worst = std::max(worst, 1.0);
    }

    const DensityMatrix rho = random_density_matrix({d}, std::nullopt, rng);
    const bool asym_zero = asymmetry(rho, basis).total <= 1e-8;
    const bool symmetric = is_symmetric_state(rho, basis, 1e-8).symmetric;
    if (asym_zero != symmetric) worst = std::max(worst, 1.0);
  }
  return worst;
}

double check_asymmetry_unitary_invariance(int trials, Rng& rng) {
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const Index d = pick_dim(rng);
    const GeneratorBasis basis = gell_mann_basis(d);
    const DensityMatrix rho = random_density_matrix({d}, std::nullopt, rng);
    const ComplexMatrix u = random_haar_unitary(d, rng);
    const DensityMatrix rotated(u * rho.matrix() * u.adjoint(), {d});
    worst = std::max(worst, std::abs(asymmetry(rotated, basis).total -
                                     asymmetry(rho, basis).total));
  }
  return worst;
}

double check_asymmetry_convexity(int trials, Rng& rng) {
  double worst = 0.0;
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  for (int t = 0; t < trials; ++t) {
    const Index d = pick_dim(rng);
    const GeneratorBasis basis = gell_mann_basis(d);
    const DensityMatrix r1 = random_density_matrix({d}, std::nullopt, rng);
    const DensityMatrix r2 = random_density_matrix({d}, std::nullopt, rng);
    const double w = uniform(rng);
    const DensityMatrix mix(w * r1.matrix() + (1.0 - w) * r2.matrix(), {d});
    const double rhs =
        w * asymmetry(r1, basis).total + (1.0 - w) * asymmetry(r2, basis).total;
    worst = std::max(worst, asymmetry(mix, basis).total - rhs);
  }
  return worst;
}

double check_maximally_mixed_zero(int, Rng&) {
  double worst = 0.0;
  for (Index da = 1; da <= 4; ++da) {
    for (Index db = 1; db <= 4; ++db) {
      if (da * db < 2) continue;
      worst = std::max(worst,
                       bipartite_asymmetry(maximally_mixed({da, db})).total);
    }
  }
  return worst;
}

double check_zero_implies_maximally_mixed(int trials, Rng& rng) {
  // Every sampled state with asymmetry at the numerical floor must sit next
  // to the maximally mixed state in trace distance.
  double worst = 0.0;
  std::vector<DensityMatrix> corpus;
  corpus.push_back(maximally_mixed({2, 2}));
  {
    ComplexMatrix perturbation = kron(pauli_z(), ComplexMatrix::Identity(2, 2));
    corpus.emplace_back(
        maximally_mixed({2, 2}).matrix() + 1e-8 * perturbation, std::vector<Index>{2, 2});
  }
  for (int t = 0; t < trials; ++t) {
    corpus.push_back(random_density_matrix({2, 2}, std::nullopt, rng));
  }
  for (const DensityMatrix& rho : corpus) {
    if (bipartite_asymmetry(rho).total <= 1e-10) {
      worst = std::max(worst, trace_distance(rho, maximally_mixed(rho.dims())));
    }
  }
  return worst;
}

double check_local_unitary_invariance(int trials, Rng& rng) {
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const Index da = pick_dim(rng);
    const Index db = pick_dim(rng);
    const DensityMatrix rho = random_density_matrix({da, db}, std::nullopt, rng);
    const ComplexMatrix uv =
        kron(random_haar_unitary(da, rng), random_haar_unitary(db, rng));
    const DensityMatrix rotated(uv * rho.matrix() * uv.adjoint(), {da, db});
    worst = std::max(worst, std::abs(bipartite_asymmetry(rotated).total -
                                     bipartite_asymmetry(rho).total));
  }
  return worst;
}

double check_bipartite_convexity(int trials, Rng& rng) {
  double worst = 0.0;
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  for (int t = 0; t < trials; ++t) {
    const DensityMatrix r1 = random_density_matrix({2, 2}, std::nullopt, rng);
    const DensityMatrix r2 = random_density_matrix({2, 2}, std::nullopt, rng);
    const double w = uniform(rng);
    const DensityMatrix mix(w * r1.matrix() + (1.0 - w) * r2.matrix(), {2, 2});
    const double rhs = w * bipartite_asymmetry(r1).total +
                       (1.0 - w) * bipartite_asymmetry(r2).total;
    worst = std::max(worst, bipartite_asymmetry(mix).total - rhs);
  }
  return worst;
}

double check_superadditivity(int trials, Rng& rng) {
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const Index da = pick_dim(rng);
    const Index db = pick_dim(rng);
    const DensityMatrix rho = random_density_matrix({da, db}, std::nullopt, rng);
    const double global = bipartite_asymmetry(rho).total;
    const double locals = local_asymmetry(rho, Side::a).total +
                          local_asymmetry(rho, Side::b).total;
    worst = std::max(worst, locals - global);
  }
  return worst;
}

double check_product_additivity(int trials, Rng& rng) {
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const DensityMatrix rho = random_product_state(pick_dim(rng), pick_dim(rng), rng);
    const double global = bipartite_asymmetry(rho).total;
    const double locals = local_asymmetry(rho, Side::a).total +
                          local_asymmetry(rho, Side::b).total;
    worst = std::max(worst, std::abs(global - locals));
  }
  return worst;
}

double check_basis_independence(int trials, Rng& rng) {
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const Index d = (t % 2 == 0) ? 2 : 3;
    const GeneratorBasis basis = gell_mann_basis(d);
    const GeneratorBasis rotated =
        rotate_basis(basis, random_orthogonal(d * d, rng));
    const DensityMatrix rho = random_density_matrix({d}, std::nullopt, rng);
    worst = std::max(worst, std::abs(asymmetry(rho, rotated).total -
                                     asymmetry(rho, basis).total));
  }
  return worst;
}

// ---------------------------------------------------------------------------
// correlation
// ---------------------------------------------------------------------------

double check_q_nonnegative(int trials, Rng& rng) {
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const DensityMatrix rho =
        random_density_matrix({pick_dim(rng), pick_dim(rng)}, std::nullopt, rng);
    worst = std::max(worst, -q_measure(rho).q_total);
  }
  return worst;
}

double check_q_zero_on_products(int trials, Rng& rng) {
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const DensityMatrix rho = random_product_state(pick_dim(rng), pick_dim(rng), rng);
    worst = std::max(worst, std::abs(q_measure(rho).q_total));
  }
  return worst;
}

double check_q_local_unitary_invariance(int trials, Rng& rng) {
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const Index da = pick_dim(rng);
    const Index db = pick_dim(rng);
    const DensityMatrix rho = random_density_matrix({da, db}, std::nullopt, rng);
    const ComplexMatrix uv =
        kron(random_haar_unitary(da, rng), random_haar_unitary(db, rng));
    const DensityMatrix rotated(uv * rho.matrix() * uv.adjoint(), {da, db});
    worst = std::max(worst, std::abs(q_measure(rotated).q_total -
                                     q_measure(rho).q_total));
  }
  return worst;
}

double check_pure_closed_form(int trials, Rng& rng) {
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const Index da = pick_dim(rng);
    const Index db = pick_dim(rng);
    const ComplexVector psi = random_pure_state({da, db}, rng);
    const double closed = q_pure_from_vector(psi, {da, db});
    const double definitional =
        q_measure(DensityMatrix::from_pure(psi, {da, db})).q_total;
    worst = std::max(worst, std::abs(closed - definitional));
  }
  return worst;
}

double check_bell_diagonal_closed_form(int trials, Rng& rng) {
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const std::vector<double> beta = random_simplex(4, rng);
    const BellDiagonalParams params({0.5 * (beta[1] + beta[2]) - 0.25,
                                     0.5 * (beta[0] + beta[2]) - 0.25,
                                     0.5 * (beta[0] + beta[1]) - 0.25});
    const double closed = bell_diagonal_q(params);
    const double definitional = q_measure(bell_diagonal_state(params)).q_total;
    worst = std::max(worst, std::abs(closed - definitional));
  }
  return worst;
}

double check_concurrence_relation(int trials, Rng& rng) {
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const ComplexVector psi = random_pure_state({2, 2}, rng);
    const RealVector s = svd_coefficients(psi, {2, 2});
    const SchmidtData schmidt({s(0) * s(0), s(1) * s(1)});
    const double c = concurrence_pure(schmidt);
    const double q = q_measure(DensityMatrix::from_pure(psi, {2, 2})).q_total;
    worst = std::max(worst, std::abs(q - 1.5 * c * c));
  }
  return worst;
}

double check_pure_bound_and_schur(int trials, Rng& rng) {
  double worst = 0.0;
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  for (int t = 0; t < trials; ++t) {
    const std::size_t d = (t % 3) + 2;
    const std::vector<double> lambda = random_simplex(d, rng);
    const double q = pure_state_q(SchmidtData(lambda)).total;
    worst = std::max(worst, q - pure_q_bound(static_cast<Index>(d)));

    // mixing toward uniform is majorized by the original
    const double w = uniform(rng);
    std::vector<double> mixed(lambda);
    for (double& x : mixed) {
      x = w * x + (1.0 - w) / static_cast<double>(d);
    }
    std::sort(mixed.begin(), mixed.end(), std::greater<>());
    const double q_mixed = pure_state_q(SchmidtData(mixed)).total;
    worst = std::max(worst, q - q_mixed);
  }
  // equality at the uniform vector
  const double at_uniform =
      pure_state_q(SchmidtData({0.25, 0.25, 0.25, 0.25})).total;
  worst = std::max(worst, std::abs(at_uniform - pure_q_bound(4)));
  return worst;
}

// ---------------------------------------------------------------------------
// channels
// ---------------------------------------------------------------------------

double check_kraus_completeness(int trials, Rng& rng) {
  double worst = 0.0;
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  for (int t = 0; t < trials; ++t) {
    worst = std::max(worst, depolarizing(uniform(rng)).completeness_residual());
    worst = std::max(worst,
                     amplitude_damping(uniform(rng)).completeness_residual());
    worst = std::max(worst, phase_damping(uniform(rng)).completeness_residual());
    worst = std::max(
        worst,
        unitary_channel(random_haar_unitary(2, rng)).completeness_residual());
    worst = std::max(worst,
                     random_channel(pick_dim(rng), rng).completeness_residual());
  }
  return worst;
}

double check_qfi_monotone(int trials, Rng& rng) {
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const Index da = pick_dim(rng);
    const DensityMatrix rho = random_density_matrix({da, 2}, std::nullopt, rng);
    const KrausChannel channel = random_channel(2, rng);
    const Observable generator = random_observable(da, rng);
    const MonotonicityTrial trial =
        monotonicity_trial(rho, channel, Side::b,
                           TrialMeasure::lifted_generator_qfi, &generator);
    worst = std::max(worst, trial.violation);
  }
  return worst;
}

double check_q_side_monotone(int trials, Rng& rng) {
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const Index da = pick_dim(rng);
    const DensityMatrix rho = random_density_matrix({da, 2}, std::nullopt, rng);
    const KrausChannel channel = random_channel(2, rng);
    const MonotonicityTrial trial =
        monotonicity_trial(rho, channel, Side::b, TrialMeasure::q_side);
    worst = std::max(worst, trial.violation);
  }
  return worst;
}

double check_covariance_detector(int trials, Rng& rng) {
  double worst = 0.0;
  const GeneratorBasis basis = gell_mann_basis(2);
  const int samples = std::max(8, trials);
  const CovarianceVerdict depolarizing_verdict =
      is_covariant_channel(depolarizing(0.35), basis, samples, 1e-9, rng);
  worst = std::max(worst, depolarizing_verdict.max_deviation);
  const CovarianceVerdict damping_verdict =
      is_covariant_channel(amplitude_damping(0.5), basis, samples, 1e-9, rng);
  if (damping_verdict.covariant) worst = std::max(worst, 1.0);
  return worst;
}

// ---------------------------------------------------------------------------

std::string format_value(double x, int precision = 6) {
  std::ostringstream os;
  os.precision(precision);
  os << std::fixed << x;
  return os.str();
}

std::vector<DiscrepancyItem> build_discrepancies() {
  std::vector<DiscrepancyItem> items;

  const double q_mix = q_measure(classically_correlated_state()).q_total;
  items.push_back(
      {"q-not-convex",
       "Q(0.5|00><00| + 0.5|11><11|) = " + format_value(q_mix) +
           "; an equal mixture of two Q = 0 product states has Q = 1, so Q is "
           "not convex."});

  const double q_max = pure_state_q(SchmidtData({0.5, 0.5})).total;
  items.push_back(
      {"pure-state-maximum",
       "max pure-state Q at d = 2 is " + format_value(q_max) +
           " = (d^2-1)/d, attained by the Bell state; the bound (d-1)/d = 0.5 "
           "quoted for this quantity elsewhere is exceeded."});

  const DensityMatrix bell = bell_state();
  const Observable z(pauli_z());
  const double collective = collective_qfi(bell, z, z);
  const double marginal_sum = qfi(partial_trace(bell, {0}), z).value +
                              qfi(partial_trace(bell, {1}), z).value;
  items.push_back(
      {"collective-qfi-not-subadditive",
       "Bell state: F(rho, Z x I + I x Z) = " + format_value(collective) +
           " exceeds the marginal sum " + format_value(marginal_sum) +
           "; the collective-observable QFI is not subadditive."});

  return items;
}

const std::vector<Check>& check_table() {
  static const std::vector<Check> table = {
      {"linalg", "eig-reconstruction", 1e-9, check_eig_reconstruction},
      {"linalg", "partial-trace-chain", 1e-12, check_partial_trace_chain},
      {"linalg", "svd-local-unitary-invariance", 1e-9, check_svd_invariance},
      {"generators", "gram-orthogonality", 1e-12, check_gram},
      {"generators", "completeness-relation", 1e-9, check_completeness},
      {"generators", "squares-sum-to-2d", 1e-10, check_squares_sum},
      {"qfi", "nonnegative", 0.0, check_qfi_nonnegative},
      {"qfi", "pure-state-equals-variance", 1e-9, check_pure_equals_variance},
      {"qfi", "bounded-by-variance", 1e-9, check_mixed_bounded_by_variance},
      {"qfi", "commuting-unitary-invariance", 1e-9,
       check_commuting_unitary_invariance},
      {"qfi", "convexity", 1e-9, check_qfi_convexity},
      {"qfi", "zero-iff-commuting", 1e-10, check_zero_characterization},
      {"qfi", "sld-consistency", 1e-9, check_sld_consistency},
      {"qfi", "sld-lyapunov-residual", 1e-9, check_sld_lyapunov},
      {"qfi", "partial-trace-monotonicity", 1e-10,
       check_partial_trace_monotonicity},
      {"asymmetry", "zero-iff-symmetric", 1e-8, check_zero_iff_symmetric},
      {"asymmetry", "unitary-invariance", 1e-9,
       check_asymmetry_unitary_invariance},
      {"asymmetry", "convexity", 1e-9, check_asymmetry_convexity},
      {"asymmetry", "maximally-mixed-has-zero-asymmetry", 1e-12,
       check_maximally_mixed_zero},
      {"asymmetry", "zero-asymmetry-implies-maximally-mixed", 1e-6,
       check_zero_implies_maximally_mixed},
      {"asymmetry", "local-unitary-invariance", 1e-9,
       check_local_unitary_invariance},
      {"asymmetry", "bipartite-convexity", 1e-9, check_bipartite_convexity},
      {"asymmetry", "superadditivity", 1e-10, check_superadditivity},
      {"asymmetry", "product-additivity", 1e-9, check_product_additivity},
      {"asymmetry", "basis-independence", 1e-9, check_basis_independence},
      {"correlation", "nonnegative", 1e-10, check_q_nonnegative},
      {"correlation", "zero-on-products", 1e-10, check_q_zero_on_products},
      {"correlation", "local-unitary-invariance", 1e-9,
       check_q_local_unitary_invariance},
      {"correlation", "pure-closed-form-agreement", 1e-8,
       check_pure_closed_form},
      {"correlation", "bell-diagonal-closed-form-agreement", 1e-8,
       check_bell_diagonal_closed_form},
      {"correlation", "concurrence-relation", 1e-9, check_concurrence_relation},
      {"correlation", "pure-bound-and-schur-concavity", 1e-9,
       check_pure_bound_and_schur},
      {"channels", "kraus-completeness", 1e-10, check_kraus_completeness},
      {"channels", "qfi-monotone-under-opposite-side-channel", 1e-9,
       check_qfi_monotone},
      {"channels", "q-side-monotone-under-opposite-side-channel", 1e-9,
       check_q_side_monotone},
      {"channels", "covariant-channel-detector", 1e-9,
       check_covariance_detector},
  };
  return table;
}

}  // namespace

bool SuiteReport::all_passed() const {
  return std::all_of(results.begin(), results.end(),
                     [](const PropertyResult& r) { return r.passed; });
}

std::vector<std::string> property_suite_names() {
  return {"linalg", "generators", "qfi", "asymmetry", "correlation", "channels"};
}

SuiteReport run_property_suite(const std::string& selector, int trials,
                               std::uint64_t seed) {
  if (trials < 1) {
    throw ValidationError("property suite: trials must be >= 1");
  }
  const std::vector<std::string> names = property_suite_names();
  if (selector != "all" &&
      std::find(names.begin(), names.end(), selector) == names.end()) {
    throw ValidationError("property suite: unknown suite '" + selector + "'");
  }

  SuiteReport report;
  Rng rng(seed);
  for (const Check& check : check_table()) {
    if (selector != "all" && selector != check.suite) continue;
    PropertyResult result;
    result.suite = check.suite;
    result.name = check.name;
    result.trials = trials;
    result.tolerance = check.tolerance;
    result.max_deviation = check.run(trials, rng);
    result.passed = result.max_deviation <= check.tolerance;
    report.results.push_back(std::move(result));
  }
  report.discrepancies = build_discrepancies();
  return report;
}

}  // namespace asymq
