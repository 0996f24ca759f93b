// Command-line front end: matrix files, reports and subcommands.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ptsym/antilinear.hpp"
#include "ptsym/error.hpp"
#include "ptsym/linalg.hpp"

namespace ptsym::cli {

using Json = nlohmann::ordered_json;

/// Bad input: unreadable or malformed files, inconsistent flags, failed
/// validation of a symmetry or metric. Maps to exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

enum ExitCode : int { kOk = 0, kNegative = 1, kInputError = 2, kNumericalFailure = 3 };

/// {"dim": d, "re": [[...]], "im": [[...]]}. Syntax errors carry the line
/// and column; shape errors name the offending field.
Matrix parse_matrix(const std::string& text, const std::string& source);
Matrix matrix_from_json(const Json& j, const std::string& where);
Json matrix_to_json(const Matrix& m);
std::string read_file(const std::string& path);
Matrix read_matrix_file(const std::string& path);

/// Symmetry file {"u": matrix} or the keyword "kappa" (needs dim). The
/// operator is validated as an antiunitary involution.
AntilinearOperator read_symmetry(const std::string& spec, std::optional<int> dim, const Tolerance& tol);

std::string sha256_hex(const std::string& bytes);

struct InputRecord {
  std::string role;
  std::string path;
  std::optional<std::string> sha256;
};

enum class Status { Ok, Warning, Error };
const char* to_string(Status s);

/// Structured report; rendered as JSON (default) or indented text.
class Report {
 public:
  Report(std::string command, const Tolerance& tol, std::uint64_t seed);

  void add_input(const std::string& role, const std::string& path);
  Json& result() { return result_; }
  /// Records a residual; values above the limit downgrade the status to error.
  void residual(const std::string& name, double value);
  void message(const std::string& text) { messages_.push_back(text); }
  void warn(const std::string& text);
  void fail(const std::string& text);

  Status status() const { return status_; }
  double residual_limit() const { return residual_limit_; }
  bool residuals_ok() const { return residuals_ok_; }

  Json to_json() const;
  std::string render(bool pretty) const;

 private:
  std::string command_;
  Tolerance tol_;
  std::uint64_t seed_;
  double residual_limit_;
  std::vector<InputRecord> inputs_;
  Json result_ = Json::object();
  Json residuals_ = Json::object();
  std::vector<std::string> messages_;
  Status status_ = Status::Ok;
  bool residuals_ok_ = true;
};

/// Human-readable rendering of a report document.
std::string render_text(const Json& doc);

/// "1.5", "pi/2", "3pi/4", "-pi" and plain decimals.
double parse_angle(const std::string& text);

/// Entry point shared by the executable and the tests. Writes the report to
/// `out`, usage errors to `err`, and returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ptsym::cli
