#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "asymq/correlation.hpp"
#include "test_support.hpp"

using namespace asymq;
using namespace asymq::testing;

TEST_CASE("q_measure on reference states") {
  SUBCASE("product states carry no correlation") {
    Rng rng(3);
    for (int t = 0; t < 10; ++t) {
      const DensityMatrix a = random_density_matrix({2}, std::nullopt, rng);
      const DensityMatrix b = random_density_matrix({3}, std::nullopt, rng);
      const DensityMatrix ab(kron(a.matrix(), b.matrix()), {2, 3});
      CHECK(std::abs(q_measure(ab).q_total) < 1e-10);
    }
  }
  SUBCASE("bell state gives 3/2") {
    const CorrelationReport report = q_measure(bell_phi_plus());
    CHECK(report.q_total == doctest::Approx(1.5).epsilon(1e-9));
    CHECK(report.side_a() == doctest::Approx(0.75).epsilon(1e-9));
    CHECK(report.side_b() == doctest::Approx(0.75).epsilon(1e-9));
  }
  SUBCASE("classically correlated mixture gives exactly 1") {
    // lifted asymmetry 1/2 per side, maximally mixed marginals 0; this state
    // is an equal mixture of two Q = 0 products, which rules out convexity.
    const CorrelationReport report = q_measure(classically_correlated());
    CHECK(report.q_total == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(report.side_a() == doctest::Approx(0.5).epsilon(1e-9));
  }
  SUBCASE("q_total is the sum of the sides") {
    Rng rng(5);
    const DensityMatrix rho = random_density_matrix({2, 2}, std::nullopt, rng);
    const CorrelationReport report = q_measure(rho);
    CHECK(report.q_total ==
          doctest::Approx(report.side_a() + report.side_b()).epsilon(1e-12));
  }
  SUBCASE("equals the global-minus-product-asymmetry form") {
    Rng rng(7);
    for (int t = 0; t < 10; ++t) {
      const DensityMatrix rho = random_density_matrix({2, 3}, std::nullopt, rng);
      const DensityMatrix a = partial_trace(rho, {0});
      const DensityMatrix b = partial_trace(rho, {1});
      const DensityMatrix product(kron(a.matrix(), b.matrix()), {2, 3});
      const double second_form = bipartite_asymmetry(rho).total -
                                 bipartite_asymmetry(product).total;
      CHECK(q_measure(rho).q_total ==
            doctest::Approx(second_form).epsilon(1e-10));
    }
  }
  SUBCASE("requires two factors") {
    CHECK_THROWS_AS(q_measure(maximally_mixed({2, 2, 2})), ValidationError);
  }
}

TEST_CASE("SchmidtData validation") {
  CHECK_NOTHROW(SchmidtData({0.75, 0.25}));
  CHECK_THROWS_AS(SchmidtData({0.25, 0.75}), ValidationError);   // ascending
  CHECK_THROWS_AS(SchmidtData({0.9, 0.3}), ValidationError);     // sum != 1
  CHECK_THROWS_AS(SchmidtData({1.2, -0.2}), ValidationError);    // range
  CHECK_THROWS_AS(SchmidtData({}), ValidationError);
}

TEST_CASE("pure_state_q closed form") {
  SUBCASE("product state") {
    CHECK(pure_state_q(SchmidtData({1.0, 0.0})).total == doctest::Approx(0.0));
  }
  SUBCASE("uniform pair gives 3/2") {
    const PureStateQ q = pure_state_q(SchmidtData({0.5, 0.5}));
    CHECK(q.total == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(q.per_side == doctest::Approx(0.75).epsilon(1e-12));
  }
  SUBCASE("(3/4, 1/4) gives 9/8, cross-checked three ways") {
    const double closed = pure_state_q(SchmidtData({0.75, 0.25})).total;
    CHECK(closed == doctest::Approx(1.125).epsilon(1e-12));

    // embedded pure state through the definitional pipeline
    ComplexVector psi = ComplexVector::Zero(4);
    psi(0) = std::sqrt(0.75);
    psi(3) = std::sqrt(0.25);
    CHECK(q_measure(DensityMatrix::from_pure(psi, {2, 2})).q_total ==
          doctest::Approx(closed).epsilon(1e-9));

    // concurrence route: (3/2) C^2 with C = 2 sqrt(l1 l2)
    const double c = concurrence_pure(SchmidtData({0.75, 0.25}));
    CHECK(1.5 * c * c == doctest::Approx(closed).epsilon(1e-12));
  }
}

TEST_CASE("q_pure_from_vector") {
  SUBCASE("bell vector gives 3/2") {
    ComplexVector psi = ComplexVector::Zero(4);
    psi(0) = psi(3) = 1.0 / std::sqrt(2.0);
    CHECK(q_pure_from_vector(psi, {2, 2}) == doctest::Approx(1.5).epsilon(1e-9));
  }
  SUBCASE("|01> is a product") {
    ComplexVector psi = ComplexVector::Zero(4);
    psi(1) = 1.0;
    CHECK(q_pure_from_vector(psi, {2, 2}) ==
          doctest::Approx(0.0).epsilon(1e-12));
  }
  SUBCASE("random vectors match the definitional pipeline") {
    Rng rng(11);
    for (int t = 0; t < 20; ++t) {
      const Index da = 2 + (t % 2);
      const Index db = 2 + (t % 3);
      const ComplexVector psi = random_pure_state({da, db}, rng);
      const double closed = q_pure_from_vector(psi, {da, db});
      const double definitional =
          q_measure(DensityMatrix::from_pure(psi, {da, db})).q_total;
      CHECK(closed == doctest::Approx(definitional).epsilon(1e-9));
    }
  }
  SUBCASE("rejects non-unit vectors") {
    ComplexVector psi = ComplexVector::Zero(4);
    psi(0) = 2.0;
    CHECK_THROWS_AS(q_pure_from_vector(psi, {2, 2}), ValidationError);
  }
}

TEST_CASE("concurrence_pure") {
  CHECK(concurrence_pure(SchmidtData({1.0, 0.0})) == doctest::Approx(0.0));
  CHECK(concurrence_pure(SchmidtData({0.5, 0.5})) == doctest::Approx(1.0));
  CHECK(concurrence_pure(SchmidtData({0.75, 0.25})) ==
        doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-12));
  CHECK_THROWS_AS(concurrence_pure(SchmidtData({0.5, 0.3, 0.2})),
                  ValidationError);
}

TEST_CASE("bell_diagonal_state") {
  SUBCASE("zero triple is maximally mixed") {
    const DensityMatrix rho = bell_diagonal_state(BellDiagonalParams({0, 0, 0}));
    CHECK((rho.matrix() - 0.25 * ComplexMatrix::Identity(4, 4))
              .cwiseAbs()
              .maxCoeff() < 1e-15);
  }
  SUBCASE("(-1/4, 1/4, 1/4) is a pure bell projector") {
    const BellDiagonalParams params({-0.25, 0.25, 0.25});
    CHECK(params.betas()[0] == doctest::Approx(1.0));
    CHECK(params.betas()[1] == doctest::Approx(0.0));
    CHECK(params.betas()[2] == doctest::Approx(0.0));
    CHECK(params.betas()[3] == doctest::Approx(0.0));
    const DensityMatrix rho = bell_diagonal_state(params);
    const double purity = (rho.matrix() * rho.matrix()).trace().real();
    CHECK(purity == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("(1/4, 1/4, 1/4) is invalid, naming beta_4") {
    CHECK_THROWS_WITH_AS(BellDiagonalParams({0.25, 0.25, 0.25}),
                         doctest::Contains("beta_4"), ValidationError);
  }
  SUBCASE("spectrum matches the beta listing; marginals maximally mixed") {
    Rng rng(13);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    for (int t = 0; t < 20; ++t) {
      // sample a valid triple via a random spectrum on the simplex
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
      for (std::size_t i = 0; i < 4; ++i) {
        CHECK(params.betas()[i] == doctest::Approx(beta[i]).epsilon(1e-12));
      }
      const DensityMatrix rho = bell_diagonal_state(params);
      const EigenSystem es = hermitian_eig(rho.matrix());
      std::array<double, 4> sorted_beta = beta;
      std::sort(sorted_beta.begin(), sorted_beta.end());
      for (Index i = 0; i < 4; ++i) {
        CHECK(es.values(i) ==
              doctest::Approx(sorted_beta[static_cast<std::size_t>(i)])
                  .epsilon(1e-12));
      }
      for (std::size_t slot : {std::size_t{0}, std::size_t{1}}) {
        CHECK((partial_trace(rho, {slot}).matrix() -
               0.5 * ComplexMatrix::Identity(2, 2))
                  .cwiseAbs()
                  .maxCoeff() < 1e-12);
      }
    }
  }
  SUBCASE("from_bloch converts t = 4c") {
    const BellDiagonalParams direct({0.1, -0.2, 0.05});
    const BellDiagonalParams converted =
        BellDiagonalParams::from_bloch({0.4, -0.8, 0.2});
    CHECK(direct.c() == converted.c());
  }
}

TEST_CASE("bell_diagonal_q") {
  SUBCASE("maximally mixed gives zero") {
    CHECK(bell_diagonal_q(BellDiagonalParams({0, 0, 0})) ==
          doctest::Approx(0.0).epsilon(1e-12));
  }
  SUBCASE("bell projector gives 3/2") {
    CHECK(bell_diagonal_q(BellDiagonalParams({-0.25, 0.25, 0.25})) ==
          doctest::Approx(1.5).epsilon(1e-12));
  }
  SUBCASE("werner 1/2 gives 1/2, confirmed by the definitional pipeline") {
    const BellDiagonalParams params = werner_params(0.5);
    // betas (1/8, 1/8, 1/8, 5/8): pair sum 3/16 + 5/16 = 1/2, so Q = 1/2
    CHECK(params.betas()[3] == doctest::Approx(0.625));
    const double closed = bell_diagonal_q(params);
    CHECK(closed == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(q_measure(bell_diagonal_state(params)).q_total ==
          doctest::Approx(closed).epsilon(1e-9));
  }
  SUBCASE("closed form tracks q_measure across random valid triples") {
    Rng rng(17);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    for (int t = 0; t < 30; ++t) {
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
      CHECK(bell_diagonal_q(params) ==
            doctest::Approx(q_measure(bell_diagonal_state(params)).q_total)
                .epsilon(1e-8));
    }
  }
  SUBCASE("werner parameter range") {
    CHECK_THROWS_AS(werner_params(-0.1), ValidationError);
    CHECK_THROWS_AS(werner_params(1.1), ValidationError);
    CHECK(werner_params(1.0).betas()[3] == doctest::Approx(1.0));
  }
}

TEST_CASE("multipartite_q") {
  SUBCASE("three-fold product is uncorrelated") {
    Rng rng(19);
    const DensityMatrix a = random_density_matrix({2}, std::nullopt, rng);
    const DensityMatrix b = random_density_matrix({2}, std::nullopt, rng);
    const DensityMatrix c = random_density_matrix({2}, std::nullopt, rng);
    const DensityMatrix abc(kron(kron(a.matrix(), b.matrix()), c.matrix()),
                            {2, 2, 2});
    CHECK(std::abs(multipartite_q(abc).q_total) < 1e-10);
  }
  SUBCASE("three-qubit ghz gives 9/4") {
    const DensityMatrix ghz = DensityMatrix::from_pure(ghz_vector(3), {2, 2, 2});
    const CorrelationReport report = multipartite_q(ghz);
    CHECK(report.q_total == doctest::Approx(2.25).epsilon(1e-9));
    for (double slot : report.per_slot) {
      CHECK(slot == doctest::Approx(0.75).epsilon(1e-9));
    }
  }
  SUBCASE("bipartite input reduces to q_measure bit for bit") {
    Rng rng(23);
    const DensityMatrix rho = random_density_matrix({2, 3}, std::nullopt, rng);
    const CorrelationReport multi = multipartite_q(rho);
    const CorrelationReport direct = q_measure(rho);
    CHECK(multi.q_total == direct.q_total);
    CHECK(multi.per_slot == direct.per_slot);
  }
}

TEST_CASE("pure_q_bound") {
  CHECK(pure_q_bound(1) == doctest::Approx(0.0));
  CHECK(pure_q_bound(2) == doctest::Approx(1.5));
  CHECK(pure_q_bound(3) == doctest::Approx(8.0 / 3.0));
  // the bound is the closed form at the uniform vector
  CHECK(pure_state_q(SchmidtData({1.0 / 3, 1.0 / 3, 1.0 / 3})).total ==
        doctest::Approx(pure_q_bound(3)).epsilon(1e-12));
  CHECK_THROWS_AS(pure_q_bound(0), ValidationError);
}

TEST_CASE("correlation properties") {
  Rng rng(29);

  SUBCASE("local unitary invariance") {
    for (int t = 0; t < 15; ++t) {
      const DensityMatrix rho = random_density_matrix({2, 3}, std::nullopt, rng);
      const ComplexMatrix uv =
          kron(random_haar_unitary(2, rng), random_haar_unitary(3, rng));
      const DensityMatrix rotated(uv * rho.matrix() * uv.adjoint(),
                                  std::vector<Index>{2, 3});
      CHECK(q_measure(rotated).q_total ==
            doctest::Approx(q_measure(rho).q_total).epsilon(1e-9));
    }
  }
  SUBCASE("pure-state bound and schur concavity") {
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    for (int t = 0; t < 25; ++t) {
      const std::size_t d = 2 + (t % 3);
      std::vector<double> lambda(d);
      double sum = 0.0;
      for (double& x : lambda) {
        x = -std::log(1.0 - uniform(rng));
        sum += x;
      }
      for (double& x : lambda) x /= sum;
      std::sort(lambda.begin(), lambda.end(), std::greater<>());
      const double q = pure_state_q(SchmidtData(lambda)).total;
      CHECK(q <= pure_q_bound(static_cast<Index>(d)) + 1e-9);

      // mixing toward uniform is majorized by the original vector
      std::vector<double> mixed(lambda);
      const double w = uniform(rng);
      for (double& x : mixed) x = w * x + (1.0 - w) / static_cast<double>(d);
      std::sort(mixed.begin(), mixed.end(), std::greater<>());
      CHECK(q <= pure_state_q(SchmidtData(mixed)).total + 1e-9);
    }
  }
}
