#pragma once

#include <string>
#include <vector>

#include "asymq/linalg.hpp"

namespace asymq::cli {

/// On-disk state: JSON with fields kind ("density" | "pure"), dims (list of
/// factor dimensions), and data (nested [re, im] pairs; row-major matrix for
/// density operators, flat vector for pure states).
struct StateFile {
  std::string kind;
  std::vector<Index> dims;
  ComplexMatrix density;  // kind == "density"
  ComplexVector pure;     // kind == "pure"

  /// The state as a validated density operator (pure states are densified).
  DensityMatrix to_density() const;
};

StateFile load_state_file(const std::string& path);
void save_density_file(const std::string& path, const DensityMatrix& rho);
void save_pure_file(const std::string& path, const ComplexVector& psi,
                    const std::vector<Index>& dims);

/// Hermitian matrix from a JSON file {"kind": "observable", "data": rows}.
Observable load_observable_file(const std::string& path);

/// Tensor product of single-qubit Paulis, e.g. "XI" or "ZZ".
Observable parse_pauli_string(const std::string& spec);

/// "2x3x2" -> {2, 3, 2}.
std::vector<Index> parse_dims(const std::string& spec);

/// Comma-separated doubles, e.g. "-0.25,0.25,0.25".
std::vector<double> parse_double_list(const std::string& spec);

/// 17 significant digits, enough to round-trip any double.
std::string format_double(double x);

}  // namespace asymq::cli
