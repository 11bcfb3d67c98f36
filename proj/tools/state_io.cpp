#include "state_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace asymq::cli {

namespace {

using nlohmann::ordered_json;

ordered_json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ValidationError("cannot open '" + path + "'");
  }
  try {
    return ordered_json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError("'" + path + "' is not valid JSON: " + e.what());
  }
}

Complex read_pair(const ordered_json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ValidationError("'" + path + "': every entry must be an [re, im] pair");
  }
  return Complex(j[0].get<double>(), j[1].get<double>());
}

ordered_json write_pair(const Complex& z) {
  return ordered_json::array({z.real(), z.imag()});
}

std::vector<Index> read_dims(const ordered_json& j, const std::string& path) {
  if (!j.contains("dims") || !j["dims"].is_array() || j["dims"].empty()) {
    throw ValidationError("'" + path + "': missing or empty dims list");
  }
  std::vector<Index> dims;
  for (const ordered_json& d : j["dims"]) {
    if (!d.is_number_integer() || d.get<Index>() < 1) {
      throw ValidationError("'" + path + "': dims must be positive integers");
    }
    dims.push_back(d.get<Index>());
  }
  return dims;
}

ComplexMatrix read_matrix(const ordered_json& rows, Index d,
                          const std::string& path) {
  if (!rows.is_array() || static_cast<Index>(rows.size()) != d) {
    std::ostringstream os;
    os << "'" << path << "': expected " << d << " matrix rows";
    throw ValidationError(os.str());
  }
  ComplexMatrix m(d, d);
  for (Index i = 0; i < d; ++i) {
    const ordered_json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != d) {
      std::ostringstream os;
      os << "'" << path << "': row " << i << " must have " << d << " entries";
      throw ValidationError(os.str());
    }
    for (Index j = 0; j < d; ++j) {
      m(i, j) = read_pair(row[static_cast<std::size_t>(j)], path);
    }
  }
  return m;
}

void write_file(const std::string& path, const ordered_json& j) {
  std::ofstream out(path);
  if (!out) {
    throw ValidationError("cannot write '" + path + "'");
  }
  out << j.dump(2) << "\n";
}

}  // namespace

DensityMatrix StateFile::to_density() const {
  if (kind == "pure") {
    return DensityMatrix::from_pure(pure, dims);
  }
  return DensityMatrix(density, dims);
}

StateFile load_state_file(const std::string& path) {
  const ordered_json j = parse_file(path);
  if (!j.contains("kind") || !j["kind"].is_string()) {
    throw ValidationError("'" + path + "': missing kind field");
  }
  StateFile file;
  file.kind = j["kind"].get<std::string>();
  file.dims = read_dims(j, path);
  Index total = 1;
  for (Index d : file.dims) total *= d;

  if (!j.contains("data")) {
    throw ValidationError("'" + path + "': missing data field");
  }
  if (file.kind == "density") {
    file.density = read_matrix(j["data"], total, path);
  } else if (file.kind == "pure") {
    const ordered_json& data = j["data"];
    if (!data.is_array() || static_cast<Index>(data.size()) != total) {
      std::ostringstream os;
      os << "'" << path << "': pure state needs " << total << " amplitudes";
      throw ValidationError(os.str());
    }
    file.pure.resize(total);
    for (Index i = 0; i < total; ++i) {
      file.pure(i) = read_pair(data[static_cast<std::size_t>(i)], path);
    }
    const double norm_dev = std::abs(file.pure.norm() - 1.0);
    if (norm_dev > 1e-8) {
      throw ValidationError("'" + path + "': pure state norm deviates from 1 by " +
                            format_double(norm_dev));
    }
  } else {
    throw ValidationError("'" + path + "': kind must be \"density\" or \"pure\"");
  }
  // surfaces Hermiticity / trace / positivity violations right at the parse
  file.to_density();
  return file;
}

void save_density_file(const std::string& path, const DensityMatrix& rho) {
  ordered_json j;
  j["kind"] = "density";
  j["dims"] = rho.dims();
  ordered_json rows = ordered_json::array();
  for (Index i = 0; i < rho.dim(); ++i) {
    ordered_json row = ordered_json::array();
    for (Index k = 0; k < rho.dim(); ++k) {
      row.push_back(write_pair(rho.matrix()(i, k)));
    }
    rows.push_back(std::move(row));
  }
  j["data"] = std::move(rows);
  write_file(path, j);
}

void save_pure_file(const std::string& path, const ComplexVector& psi,
                    const std::vector<Index>& dims) {
  ordered_json j;
  j["kind"] = "pure";
  j["dims"] = dims;
  ordered_json data = ordered_json::array();
  for (Index i = 0; i < psi.size(); ++i) {
    data.push_back(write_pair(psi(i)));
  }
  j["data"] = std::move(data);
  write_file(path, j);
}

Observable load_observable_file(const std::string& path) {
  const ordered_json j = parse_file(path);
  if (!j.contains("data") || !j["data"].is_array() || j["data"].empty()) {
    throw ValidationError("'" + path + "': missing data rows");
  }
  const auto d = static_cast<Index>(j["data"].size());
  return Observable(read_matrix(j["data"], d, path));
}

Observable parse_pauli_string(const std::string& spec) {
  if (spec.empty()) {
    throw ValidationError("pauli string is empty");
  }
  ComplexMatrix m = ComplexMatrix::Identity(1, 1);
  for (char c : spec) {
    switch (c) {
      case 'I': m = kron(m, ComplexMatrix::Identity(2, 2)); break;
      case 'X': m = kron(m, pauli_x()); break;
      case 'Y': m = kron(m, pauli_y()); break;
      case 'Z': m = kron(m, pauli_z()); break;
      default:
        throw ValidationError(std::string("pauli string: unknown letter '") + c +
                              "' (use I, X, Y, Z)");
    }
  }
  return Observable(std::move(m));
}

std::vector<Index> parse_dims(const std::string& spec) {
  std::vector<Index> dims;
  std::stringstream ss(spec);
  std::string token;
  while (std::getline(ss, token, 'x')) {
    try {
      std::size_t used = 0;
      const long value = std::stol(token, &used);
      if (used != token.size() || value < 1) throw std::invalid_argument(token);
      dims.push_back(static_cast<Index>(value));
    } catch (const std::exception&) {
      throw ValidationError("cannot parse dimension list '" + spec +
                            "' (expected e.g. 2x2)");
    }
  }
  if (dims.empty()) {
    throw ValidationError("empty dimension list");
  }
  return dims;
}

std::vector<double> parse_double_list(const std::string& spec) {
  std::vector<double> values;
  std::stringstream ss(spec);
  std::string token;
  while (std::getline(ss, token, ',')) {
    try {
      std::size_t used = 0;
      const double value = std::stod(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      values.push_back(value);
    } catch (const std::exception&) {
      throw ValidationError("cannot parse number list '" + spec + "'");
    }
  }
  if (values.empty()) {
    throw ValidationError("empty number list");
  }
  return values;
}

std::string format_double(double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", x);
  return buffer;
}

}  // namespace asymq::cli
