#include <fstream>
#include <sstream>

#include "ptsym/cli.hpp"

namespace ptsym::cli {

namespace {

RealMatrix read_block(const Json& j, const std::string& where, const char* field, int dim) {
  if (!j.contains(field)) throw InputError(where + ": missing field \"" + field + "\"");
  const Json& rows = j.at(field);
  const std::string name = where + ": " + field;
  if (!rows.is_array() || static_cast<int>(rows.size()) != dim)
    throw InputError(name + " must be an array of " + std::to_string(dim) + " rows");
  RealMatrix m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    const Json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != dim)
      throw InputError(name + "[" + std::to_string(i) + "] must have " + std::to_string(dim) + " entries");
    for (int k = 0; k < dim; ++k) {
      const Json& v = row[static_cast<std::size_t>(k)];
      if (!v.is_number())
        throw InputError(name + "[" + std::to_string(i) + "][" + std::to_string(k) + "] is not a number");
      m(i, k) = v.get<double>();
    }
  }
  return m;
}

}  // namespace

Matrix matrix_from_json(const Json& j, const std::string& where) {
  if (!j.is_object()) throw InputError(where + ": expected an object with dim, re, im");
  if (!j.contains("dim") || !j.at("dim").is_number_integer())
    throw InputError(where + ": missing or non-integer field \"dim\"");
  const auto dim = j.at("dim").get<long long>();
  if (dim < 1 || dim > kMaxDim)
    throw InputError(where + ": dim must be between 1 and " + std::to_string(kMaxDim));
  const int d = static_cast<int>(dim);
  const RealMatrix re = read_block(j, where, "re", d);
  const RealMatrix im = read_block(j, where, "im", d);
  Matrix m(d, d);
  m.real() = re;
  m.imag() = im;
  if (!is_finite(m)) throw InputError(where + ": entries must be finite");
  return m;
}

Matrix parse_matrix(const std::string& text, const std::string& source) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(source + ": " + e.what());
  }
  return matrix_from_json(j, source);
}

Json matrix_to_json(const Matrix& m) {
  Json re = Json::array();
  Json im = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json rr = Json::array();
    Json ri = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      rr.push_back(m(i, k).real());
      ri.push_back(m(i, k).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ri));
  }
  Json out;
  out["dim"] = m.rows();
  out["re"] = std::move(re);
  out["im"] = std::move(im);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Matrix read_matrix_file(const std::string& path) { return parse_matrix(read_file(path), path); }

AntilinearOperator read_symmetry(const std::string& spec, std::optional<int> dim, const Tolerance& tol) {
  if (spec == "kappa") {
    if (!dim) throw InputError("symmetry \"kappa\" needs --dim");
    if (*dim < 1 || *dim > kMaxDim) throw InputError("--dim must be between 1 and " + std::to_string(kMaxDim));
    return AntilinearOperator::conjugation(*dim);
  }
  const std::string text = read_file(spec);
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(spec + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("u")) throw InputError(spec + ": symmetry file needs a \"u\" matrix");
  AntilinearOperator k(matrix_from_json(j.at("u"), spec + ": u"));
  if (dim && k.dim() != *dim)
    throw InputError(spec + ": symmetry has dim " + std::to_string(k.dim()) + ", expected " + std::to_string(*dim));
  if (!is_antiunitary_involution(k, tol))
    throw InputError(spec + ": u conj(x) is not an antiunitary involution (need U unitary, U conj(U) = 1)");
  return k;
}

}  // namespace ptsym::cli
