#include <openssl/evp.h>

#include <cmath>
#include <cstdio>
#include <sstream>

#include "ptsym/cli.hpp"

namespace ptsym::cli {

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw Error("SHA-256 computation failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 0xf]);
  }
  return out;
}

const char* to_string(Status s) {
  switch (s) {
    case Status::Ok:
      return "ok";
    case Status::Warning:
      return "warning";
    case Status::Error:
      return "error";
  }
  return "unknown";
}

Report::Report(std::string command, const Tolerance& tol, std::uint64_t seed)
    : command_(std::move(command)), tol_(tol), seed_(seed), residual_limit_(10.0 * tol.rel_tol()) {}

void Report::add_input(const std::string& role, const std::string& path) {
  if (path == "kappa") {
    inputs_.push_back({role, path, std::nullopt});
    return;
  }
  inputs_.push_back({role, path, sha256_hex(read_file(path))});
}

void Report::residual(const std::string& name, double value) {
  if (std::isfinite(value)) {
    residuals_[name] = value;
  } else {
    residuals_[name] = nullptr;
  }
  if (!(value <= residual_limit_)) {
    residuals_ok_ = false;
    status_ = Status::Error;
    messages_.push_back("residual " + name + " exceeds the limit");
  }
}

void Report::warn(const std::string& text) {
  if (status_ == Status::Ok) status_ = Status::Warning;
  messages_.push_back(text);
}

void Report::fail(const std::string& text) {
  status_ = Status::Error;
  messages_.push_back(text);
}

Json Report::to_json() const {
  Json doc;
  doc["command"] = command_;
  Json inputs = Json::array();
  for (const auto& in : inputs_) {
    Json rec;
    rec["role"] = in.role;
    rec["path"] = in.path;
    if (in.sha256) {
      rec["sha256"] = *in.sha256;
    } else {
      rec["sha256"] = nullptr;
    }
    inputs.push_back(std::move(rec));
  }
  doc["inputs"] = std::move(inputs);
  doc["tolerance"] = {{"abs", tol_.abs_tol()}, {"rel", tol_.rel_tol()}};
  doc["seed"] = seed_;
  doc["status"] = to_string(status_);
  doc["result"] = result_;
  doc["residuals"] = residuals_;
  doc["residual_limit"] = residual_limit_;
  doc["messages"] = messages_;
  return doc;
}

std::string Report::render(bool pretty) const {
  const Json doc = to_json();
  if (pretty) return render_text(doc);
  return doc.dump(2) + "\n";
}

namespace {

std::string number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string complex_text(double re, double im) {
  char buf[96];
  if (im == 0.0) {
    std::snprintf(buf, sizeof buf, "%.6g", re);
  } else {
    std::snprintf(buf, sizeof buf, "%.6g%+.6gi", re, im);
  }
  return buf;
}

bool is_matrix(const Json& j) {
  return j.is_object() && j.size() == 3 && j.contains("dim") && j.contains("re") && j.contains("im");
}

void render(const Json& j, const std::string& indent, std::ostringstream& out);

void render_value(const std::string& key, const Json& v, const std::string& indent, std::ostringstream& out) {
  if (is_matrix(v)) {
    out << indent << key << ":\n";
    const auto& re = v.at("re");
    const auto& im = v.at("im");
    for (std::size_t i = 0; i < re.size(); ++i) {
      out << indent << "  [";
      for (std::size_t k = 0; k < re[i].size(); ++k)
        out << ' ' << complex_text(re[i][k].get<double>(), im[i][k].get<double>());
      out << " ]\n";
    }
  } else if (v.is_object() || (v.is_array() && !v.empty() && (v.front().is_object() || v.front().is_array()))) {
    out << indent << key << ":\n";
    render(v, indent + "  ", out);
  } else if (v.is_array()) {
    out << indent << key << ": [";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out << ", ";
      out << (v[i].is_number_float() ? number(v[i].get<double>()) : v[i].is_string() ? v[i].get<std::string>() : v[i].dump());
    }
    out << "]\n";
  } else if (v.is_number_float()) {
    out << indent << key << ": " << number(v.get<double>()) << '\n';
  } else if (v.is_string()) {
    out << indent << key << ": " << v.get<std::string>() << '\n';
  } else {
    out << indent << key << ": " << v.dump() << '\n';
  }
}

void render(const Json& j, const std::string& indent, std::ostringstream& out) {
  if (j.is_object()) {
    for (const auto& [key, v] : j.items()) render_value(key, v, indent, out);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) render_value("- [" + std::to_string(i) + "]", j[i], indent, out);
  } else {
    out << indent << j.dump() << '\n';
  }
}

}  // namespace

std::string render_text(const Json& doc) {
  std::ostringstream out;
  render(doc, "", out);
  return out.str();
}

}  // namespace ptsym::cli
