// Acceptance suite: end-to-end checks of the measure pipeline at pinned
// tolerances, one printed line per criterion. Exits nonzero if any fail.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

#include "json.hpp"

#include "asymq/asymmetry.hpp"
#include "asymq/channels.hpp"
#include "asymq/correlation.hpp"
#include "asymq/generators.hpp"
#include "asymq/qfi.hpp"
#include "test_support.hpp"

using namespace asymq;
using namespace asymq::testing;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

std::string fmt(double x) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.3e", x);
  return buffer;
}

Observable random_observable(Index d, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix g(d, d);
  for (Index i = 0; i < d; ++i) {
    for (Index j = 0; j < d; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
  }
  return Observable(0.5 * (g + g.adjoint()));
}

const std::vector<std::pair<Index, Index>> kDimPairs = {
    {2, 2}, {2, 3}, {3, 2}, {3, 3}, {2, 4}, {4, 2}, {3, 4}, {4, 4}};

// 1. Bell state: Q = 3/2 within 1e-9.
Outcome criterion_bell_state() {
  const double dev = std::abs(q_measure(bell_phi_plus()).q_total - 1.5);
  return {dev <= 1e-9, "dev=" + fmt(dev) + " tol=1e-9"};
}

// 2. Two-qubit pure states: |Q - 1.5 C^2| <= 1e-9 over 200 seeded samples.
Outcome criterion_concurrence_relation() {
  Rng rng(2);
  double worst = 0.0;
  for (int t = 0; t < 200; ++t) {
    const ComplexVector psi = random_pure_state({2, 2}, rng);
    const RealVector s = svd_coefficients(psi, {2, 2});
    const double c = concurrence_pure(SchmidtData({s(0) * s(0), s(1) * s(1)}));
    const double q = q_measure(DensityMatrix::from_pure(psi, {2, 2})).q_total;
    worst = std::max(worst, std::abs(q - 1.5 * c * c));
  }
  return {worst <= 1e-9, "max_dev=" + fmt(worst) + " tol=1e-9 trials=200"};
}

// 3. Pure-state closed form vs the definitional pipeline, d_a, d_b in {2,3,4}.
Outcome criterion_pure_closed_form() {
  Rng rng(3);
  double worst = 0.0;
  for (int t = 0; t < 200; ++t) {
    const auto [da, db] = kDimPairs[t % kDimPairs.size()];
    const ComplexVector psi = random_pure_state({da, db}, rng);
    const double closed = q_pure_from_vector(psi, {da, db});
    const double definitional =
        q_measure(DensityMatrix::from_pure(psi, {da, db})).q_total;
    worst = std::max(worst, std::abs(closed - definitional));
  }
  return {worst <= 1e-8, "max_dev=" + fmt(worst) + " tol=1e-8 trials=200"};
}

// 4. Bell-diagonal closed form plus endpoint values.
Outcome criterion_bell_diagonal() {
  Rng rng(4);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  double worst_random = 0.0;
  for (int t = 0; t < 200; ++t) {
    std::array<double, 4> beta{};
    double sum = 0.0;
    for (double& b : beta) {
      b = -std::log(1.0 - uniform(rng));
      sum += b;
    }
    for (double& b : beta) b /= sum;
    const BellDiagonalParams params({0.5 * (beta[1] + beta[2]) - 0.25,
                                     0.5 * (beta[0] + beta[2]) - 0.25,
                                     0.5 * (beta[0] + beta[1]) - 0.25});
    worst_random = std::max(
        worst_random, std::abs(bell_diagonal_q(params) -
                               q_measure(bell_diagonal_state(params)).q_total));
  }
  double worst_endpoint = std::abs(bell_diagonal_q(BellDiagonalParams({0, 0, 0})));
  worst_endpoint = std::max(
      worst_endpoint,
      std::abs(bell_diagonal_q(BellDiagonalParams({-0.25, 0.25, 0.25})) - 1.5));
  worst_endpoint = std::max(
      worst_endpoint, std::abs(bell_diagonal_q(werner_params(0.5)) - 0.5));
  const bool passed = worst_random <= 1e-8 && worst_endpoint <= 1e-9;
  return {passed, "max_dev=" + fmt(worst_random) + " tol=1e-8 trials=200, endpoints dev=" +
                      fmt(worst_endpoint) + " tol=1e-9"};
}

// 5. Product states carry Q <= 1e-10.
Outcome criterion_products() {
  Rng rng(5);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const auto [da, db] = kDimPairs[t % kDimPairs.size()];
    const DensityMatrix a = random_density_matrix({da}, std::nullopt, rng);
    const DensityMatrix b = random_density_matrix({db}, std::nullopt, rng);
    const DensityMatrix ab(kron(a.matrix(), b.matrix()), {da, db});
    worst = std::max(worst, std::abs(q_measure(ab).q_total));
  }
  return {worst <= 1e-10, "max_dev=" + fmt(worst) + " tol=1e-10 trials=100"};
}

// 6. Local unitary invariance of Q over 100 Haar conjugations.
Outcome criterion_local_unitary_invariance() {
  Rng rng(6);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const auto [da, db] = kDimPairs[t % kDimPairs.size()];
    const DensityMatrix rho = random_density_matrix({da, db}, std::nullopt, rng);
    const ComplexMatrix uv =
        kron(random_haar_unitary(da, rng), random_haar_unitary(db, rng));
    const DensityMatrix rotated(uv * rho.matrix() * uv.adjoint(),
                                std::vector<Index>{da, db});
    worst = std::max(worst, std::abs(q_measure(rotated).q_total -
                                     q_measure(rho).q_total));
  }
  return {worst <= 1e-9, "max_dev=" + fmt(worst) + " tol=1e-9 trials=100"};
}

// 7. Bipartite asymmetry vanishes exactly on maximally mixed states, and only
//    next to them on the sampled corpus.
Outcome criterion_maximally_mixed() {
  double worst_forward = 0.0;
  for (Index da = 1; da <= 4; ++da) {
    for (Index db = 1; db <= 4; ++db) {
      if (da * db < 2) continue;
      worst_forward = std::max(
          worst_forward, bipartite_asymmetry(maximally_mixed({da, db})).total);
    }
  }

  Rng rng(7);
  double worst_distance = 0.0;
  int flagged = 0;
  std::vector<DensityMatrix> corpus;
  corpus.push_back(maximally_mixed({2, 2}));
  corpus.emplace_back(maximally_mixed({2, 2}).matrix() +
                          1e-8 * kron(pauli_z(), ComplexMatrix::Identity(2, 2)),
                      std::vector<Index>{2, 2});
  for (int t = 0; t < 50; ++t) {
    corpus.push_back(random_density_matrix({2, 2}, std::nullopt, rng));
  }
  for (const DensityMatrix& rho : corpus) {
    if (bipartite_asymmetry(rho).total <= 1e-10) {
      ++flagged;
      worst_distance =
          std::max(worst_distance, trace_distance(rho, maximally_mixed({2, 2})));
    }
  }
  const bool passed =
      worst_forward <= 1e-12 && worst_distance <= 1e-6 && flagged >= 2;
  return {passed, "forward dev=" + fmt(worst_forward) +
                      " tol=1e-12, converse distance=" + fmt(worst_distance) +
                      " tol=1e-6 over " + std::to_string(flagged) +
                      " near-zero states"};
}

// 8. Superadditivity with equality on products.
Outcome criterion_superadditivity() {
  Rng rng(8);
  double worst_violation = 0.0;
  for (int t = 0; t < 200; ++t) {
    const auto [da, db] = kDimPairs[t % kDimPairs.size()];
    const DensityMatrix rho = random_density_matrix({da, db}, std::nullopt, rng);
    const double gap = bipartite_asymmetry(rho).total -
                       local_asymmetry(rho, Side::a).total -
                       local_asymmetry(rho, Side::b).total;
    worst_violation = std::max(worst_violation, -gap);
  }
  double worst_equality = 0.0;
  for (int t = 0; t < 100; ++t) {
    const auto [da, db] = kDimPairs[t % kDimPairs.size()];
    const DensityMatrix a = random_density_matrix({da}, std::nullopt, rng);
    const DensityMatrix b = random_density_matrix({db}, std::nullopt, rng);
    const DensityMatrix ab(kron(a.matrix(), b.matrix()), {da, db});
    const double gap = bipartite_asymmetry(ab).total -
                       local_asymmetry(ab, Side::a).total -
                       local_asymmetry(ab, Side::b).total;
    worst_equality = std::max(worst_equality, std::abs(gap));
  }
  const bool passed = worst_violation <= 1e-10 && worst_equality <= 1e-9;
  return {passed, "violation=" + fmt(worst_violation) +
                      " tol=1e-10 trials=200, product gap=" +
                      fmt(worst_equality) + " tol=1e-9 trials=100"};
}

// 9. QFI contracts: pure equality, mixed bound, SLD identity, F3 invariance.
Outcome criterion_qfi_contracts() {
  Rng rng(9);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const Index d = 2 + (t % 3);
    const Observable k = random_observable(d, rng);

    const DensityMatrix pure =
        DensityMatrix::from_pure(random_pure_state({d}, rng), {d});
    worst = std::max(worst, std::abs(qfi(pure, k).value - variance(pure, k)));

    const DensityMatrix mixed = random_density_matrix({d}, std::nullopt, rng);
    worst = std::max(worst, qfi(mixed, k).value - variance(mixed, k));

    const Observable l = sld(mixed, k);
    const double via_sld =
        0.25 * (mixed.matrix() * l.matrix() * l.matrix()).trace().real();
    worst = std::max(worst, std::abs(via_sld - qfi(mixed, k).value));

    const ComplexMatrix u = unitary_from_generator(k.matrix(), angle(rng));
    const DensityMatrix rotated(u * mixed.matrix() * u.adjoint(),
                                std::vector<Index>{d});
    worst = std::max(worst,
                     std::abs(qfi(rotated, k).value - qfi(mixed, k).value));
  }
  return {worst <= 1e-9, "max_dev=" + fmt(worst) + " tol=1e-9 trials=100x4"};
}

// 10. Neither lifted-generator QFI nor Q^a grows under a channel on b.
Outcome criterion_monotonicity() {
  Rng rng(10);
  double worst = 0.0;
  for (int t = 0; t < 500; ++t) {
    const Index da = 2 + (t % 3);
    const DensityMatrix rho = random_density_matrix({da, 2}, std::nullopt, rng);
    const KrausChannel channel = random_channel(2, rng);
    const Observable generator = random_observable(da, rng);
    worst = std::max(worst, monotonicity_trial(rho, channel, Side::b,
                                               TrialMeasure::lifted_generator_qfi,
                                               &generator)
                                .violation);
    worst = std::max(
        worst,
        monotonicity_trial(rho, channel, Side::b, TrialMeasure::q_side)
            .violation);
  }
  return {worst <= 1e-9, "max_violation=" + fmt(worst) + " tol=1e-9 trials=500"};
}

// 11. Asymmetry is invariant under orthogonal recombination of the basis.
Outcome criterion_basis_independence() {
  Rng rng(11);
  double worst = 0.0;
  for (int t = 0; t < 50; ++t) {
    const Index d = (t % 2 == 0) ? 2 : 3;
    const GeneratorBasis basis = gell_mann_basis(d);
    const GeneratorBasis rotated =
        rotate_basis(basis, random_orthogonal(d * d, rng));
    const DensityMatrix rho = random_density_matrix({d}, std::nullopt, rng);
    worst = std::max(worst, std::abs(asymmetry(rho, rotated).total -
                                     asymmetry(rho, basis).total));
  }
  return {worst <= 1e-9, "max_dev=" + fmt(worst) + " tol=1e-9 trials=50"};
}

// 12. Documented-discrepancy ledger, computed by the definitional pipeline.
Outcome criterion_discrepancy_ledger() {
  const double q_mix = q_measure(classically_correlated()).q_total;
  const double dev_a = std::abs(q_mix - 1.0);

  const double q_max = pure_state_q(SchmidtData({0.5, 0.5})).total;
  const double dev_b = std::abs(q_max - pure_q_bound(2));
  const bool exceeds_printed_bound = q_max > 0.5 + 0.9;

  const Observable z(pauli_z());
  const double collective = collective_qfi(bell_phi_plus(), z, z);
  const double marginal_sum =
      qfi(partial_trace(bell_phi_plus(), {0}), z).value +
      qfi(partial_trace(bell_phi_plus(), {1}), z).value;
  const double dev_c = std::abs(collective - 4.0);

  const bool passed = dev_a <= 1e-9 && dev_b <= 1e-9 && exceeds_printed_bound &&
                      dev_c <= 1e-9 && marginal_sum <= 1e-12;
  std::ostringstream detail;
  detail << "Q(classical mix)=" << q_mix << " (refutes convexity), pure max="
         << q_max << " = (d^2-1)/d not (d-1)/d, collective QFI=" << collective
         << " > marginal sum " << marginal_sum;
  return {passed, detail.str()};
}

// 13. CLI round trip: make | compute reproduces the closed form, check passes.
Outcome criterion_cli_round_trip() {
  const std::string cli = ASYMQ_CLI_PATH;
  fs::path dir =
      fs::temp_directory_path() / ("asymq_accept_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const fs::path state = dir / "werner.json";
  const fs::path out = dir / "report.json";

  auto run = [](const std::string& command) {
    const int status = std::system(command.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  };

  if (run(cli + " make werner --w 0.5 --out " + state.string()) != 0) {
    return {false, "make werner failed"};
  }
  if (run(cli + " compute --input " + state.string() + " --out " +
          out.string()) != 0) {
    return {false, "compute failed"};
  }
  std::ifstream report_file(out);
  const nlohmann::json report = nlohmann::json::parse(report_file);
  const double dev = std::abs(report["q_total"].get<double>() - 0.5);
  if (dev > 1e-9) {
    return {false, "round-trip Q deviates by " + fmt(dev)};
  }
  for (int seed = 0; seed <= 4; ++seed) {
    const fs::path log = dir / ("check_" + std::to_string(seed) + ".log");
    const int rc = run(cli + " check --seed " + std::to_string(seed) + " > " +
                       log.string());
    if (rc != 0) {
      return {false, "check --seed " + std::to_string(seed) +
                         " exited with code " + std::to_string(rc)};
    }
  }
  return {true, "round-trip dev=" + fmt(dev) + " tol=1e-9; check seeds 0-4 exit 0"};
}

struct Criterion {
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"bell-state-q-is-1.5", criterion_bell_state},
      {"two-qubit-concurrence-relation", criterion_concurrence_relation},
      {"pure-state-closed-form", criterion_pure_closed_form},
      {"bell-diagonal-closed-form", criterion_bell_diagonal},
      {"product-states-uncorrelated", criterion_products},
      {"local-unitary-invariance", criterion_local_unitary_invariance},
      {"maximally-mixed-characterization", criterion_maximally_mixed},
      {"superadditivity-and-product-equality", criterion_superadditivity},
      {"qfi-contracts", criterion_qfi_contracts},
      {"cptp-monotonicity", criterion_monotonicity},
      {"basis-independence", criterion_basis_independence},
      {"documented-discrepancy-ledger", criterion_discrepancy_ledger},
      {"cli-round-trip", criterion_cli_round_trip},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome outcome;
    try {
      outcome = criteria[i].run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    if (!outcome.passed) ++failures;
    std::printf("[%s] %02zu %-38s %s\n", outcome.passed ? "PASS" : "FAIL",
                i + 1, criteria[i].name, outcome.detail.c_str());
  }
  std::printf("acceptance: %zu/%zu criteria passed\n",
              criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
