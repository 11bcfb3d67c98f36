#include "asymq/asymmetry.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace asymq {

namespace {

AsymmetryReport make_report(std::vector<double> per_generator) {
  const double sum =
      std::accumulate(per_generator.begin(), per_generator.end(), 0.0);
  return AsymmetryReport{0.25 * sum, std::move(per_generator)};
}

std::size_t side_slot(Side side) { return side == Side::a ? 0 : 1; }

void require_bipartite(const DensityMatrix& rho, const char* op) {
  if (rho.dims().size() != 2) {
    std::ostringstream os;
    os << op << ": expected a two-factor state, got " << rho.dims().size()
       << " factors";
    throw ValidationError(os.str());
  }
}

}  // namespace

AsymmetryReport asymmetry(const DensityMatrix& rho,
                          std::span<const Observable> generators) {
  return make_report(qfi_batch(rho, generators));
}

AsymmetryReport asymmetry(const DensityMatrix& rho,
                          const GeneratorBasis& basis) {
  return asymmetry(rho, std::span<const Observable>(basis.elements()));
}

AsymmetryReport multipartite_asymmetry(const DensityMatrix& rho) {
  const std::vector<Index>& dims = rho.dims();
  const detail::StateSpectrum spectrum = detail::state_spectrum(rho);

  std::vector<double> per_generator;
  for (std::size_t slot = 0; slot < dims.size(); ++slot) {
    const GeneratorBasis basis = gell_mann_basis(dims[slot]);
    for (const Observable& t : lift(basis, slot, dims)) {
      per_generator.push_back(detail::qfi_from_spectrum(spectrum, t).value);
    }
  }
  return make_report(std::move(per_generator));
}

AsymmetryReport bipartite_asymmetry(const DensityMatrix& rho_ab) {
  require_bipartite(rho_ab, "bipartite_asymmetry");
  return multipartite_asymmetry(rho_ab);
}

AsymmetryReport local_asymmetry(const DensityMatrix& rho_ab, Side side) {
  require_bipartite(rho_ab, "local_asymmetry");
  const std::size_t slot = side_slot(side);
  const DensityMatrix marginal = partial_trace(rho_ab, {slot});
  return asymmetry(marginal, gell_mann_basis(rho_ab.dims()[slot]));
}

AsymmetryReport lifted_asymmetry(const DensityMatrix& rho_ab, Side side) {
  require_bipartite(rho_ab, "lifted_asymmetry");
  const std::size_t slot = side_slot(side);
  const GeneratorBasis basis = gell_mann_basis(rho_ab.dims()[slot]);
  const std::vector<Observable> lifted = lift(basis, slot, rho_ab.dims());
  return asymmetry(rho_ab, std::span<const Observable>(lifted));
}

SymmetryVerdict is_symmetric_state(const DensityMatrix& rho,
                                   std::span<const Observable> generators,
                                   double tolerance) {
  double max_norm = 0.0;
  for (const Observable& t : generators) {
    if (t.dim() != rho.dim()) {
      throw ValidationError("is_symmetric_state: generator dimension mismatch");
    }
    const ComplexMatrix commutator =
        rho.matrix() * t.matrix() - t.matrix() * rho.matrix();
    max_norm = std::max(max_norm, commutator.norm());
  }
  return SymmetryVerdict{max_norm <= tolerance, max_norm};
}

SymmetryVerdict is_symmetric_state(const DensityMatrix& rho,
                                   const GeneratorBasis& basis,
                                   double tolerance) {
  return is_symmetric_state(
      rho, std::span<const Observable>(basis.elements()), tolerance);
}

CovarianceVerdict is_covariant_channel(const KrausChannel& channel,
                                       std::span<const Observable> generators,
                                       int samples, double tolerance, Rng& rng) {
  if (generators.empty()) {
    throw ValidationError("is_covariant_channel: generator list is empty");
  }
  for (const Observable& t : generators) {
    if (t.dim() != channel.dim()) {
      throw ValidationError(
          "is_covariant_channel: channel dimension does not match generators");
    }
  }
  if (samples < 1) {
    throw ValidationError("is_covariant_channel: need at least one sample");
  }
  std::uniform_int_distribution<std::size_t> pick(0, generators.size() - 1);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  const Index d = channel.dim();

  double max_deviation = 0.0;
  for (int s = 0; s < samples; ++s) {
    const Observable& t = generators[pick(rng)];
    const ComplexMatrix u = unitary_from_generator(t.matrix(), angle(rng));
    const DensityMatrix rho = random_density_matrix({d}, std::nullopt, rng);

    const DensityMatrix rotated(u * rho.matrix() * u.adjoint(), {d});
    const ComplexMatrix lhs = apply(channel, rotated).matrix();
    const ComplexMatrix rhs = u * apply(channel, rho).matrix() * u.adjoint();
    max_deviation = std::max(max_deviation, (lhs - rhs).norm());
  }
  return CovarianceVerdict{max_deviation <= tolerance, max_deviation};
}

CovarianceVerdict is_covariant_channel(const KrausChannel& channel,
                                       const GeneratorBasis& basis, int samples,
                                       double tolerance, Rng& rng) {
  return is_covariant_channel(channel,
                              std::span<const Observable>(basis.elements()),
                              samples, tolerance, rng);
}

}  // namespace asymq
