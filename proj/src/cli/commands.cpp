#include <cmath>
#include <functional>
#include <ostream>
#include <regex>

#include <CLI11.hpp>

#include "ptsym/cli.hpp"
#include "ptsym/gpt.hpp"
#include "ptsym/metric.hpp"
#include "ptsym/pt_classify.hpp"

namespace ptsym::cli {

namespace {

constexpr double kPi = 3.14159265358979323846;

Json complex_json(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

double relative(double value, double scale) { return value / std::max(1.0, scale); }

struct Globals {
  double tol = 1e-9;
  std::uint64_t seed = 0;
  int samples = -1;
  bool pretty = false;
  bool json = false;

  Tolerance tolerance() const { return Tolerance(0.1 * tol, tol); }
};

// Runs one command body and maps exceptions to error reports and exit codes.
int execute(const std::string& name, const Globals& g, std::ostream& out,
            const std::function<int(Report&)>& body) {
  Report rep(name, g.tolerance(), g.seed);
  int code = kOk;
  try {
    code = body(rep);
  } catch (const InputError& e) {
    rep.fail(e.what());
    code = kInputError;
  } catch (const InvalidArgument& e) {
    rep.fail(e.what());
    code = kInputError;
  } catch (const NumericalError& e) {
    rep.fail(std::string("numerical failure: ") + e.what());
    code = kNumericalFailure;
  }
  if (!rep.residuals_ok() && (code == kOk || code == kNegative)) code = kNumericalFailure;
  out << rep.render(g.pretty);
  return code;
}

Json clusters_json(const PTPhase& ph) {
  Json arr = Json::array();
  for (const auto& c : ph.clusters) {
    Json j;
    j["value"] = complex_json(c.value);
    j["algebraic"] = c.algebraic;
    j["geometric"] = c.geometric;
    j["real"] = c.real;
    if (!c.note.empty()) j["note"] = c.note;
    arr.push_back(std::move(j));
  }
  return arr;
}

// Records eigen-residual diagnostics shared by classify and projectors.
void record_phase(Report& rep, const Matrix& h, const PTPhase& ph, const Tolerance& tol) {
  Json& res = rep.result();
  res["phase"] = to_string(ph.tag);
  res["summary"] = ph.summary;
  res["commutator_residual"] = ph.commutator_residual;
  res["clusters"] = clusters_json(ph);
  if (ph.tag != Phase::NotSymmetric) rep.residual("commutator", relative(ph.commutator_residual, h.norm()));
  const EigenDecomposition ed = eig(h, tol);
  if (ed.diagonalizable) {
    const Matrix lhs = h * ed.right_vectors;
    const Matrix rhs = ed.right_vectors * ed.eigenvalues.asDiagonal();
    rep.residual("eigenpairs", relative((lhs - rhs).norm(), h.norm()));
  }
}

int cmd_classify(Report& rep, const Globals& g, const std::string& h_path, const std::string& k_spec) {
  const Tolerance tol = g.tolerance();
  const Matrix h = read_matrix_file(h_path);
  rep.add_input("hamiltonian", h_path);
  const AntilinearOperator k = read_symmetry(k_spec, static_cast<int>(h.rows()), tol);
  rep.add_input("symmetry", k_spec);
  const PTPhase ph = classify(h, k, tol);
  record_phase(rep, h, ph, tol);
  if (ph.tag == Phase::NotSymmetric) {
    rep.warn("operator does not commute with the symmetry");
    return kNegative;
  }
  return kOk;
}

int cmd_projectors(Report& rep, const Globals& g, const std::string& o_path, const std::string& k_spec) {
  const Tolerance tol = g.tolerance();
  const Matrix o = read_matrix_file(o_path);
  rep.add_input("operator", o_path);
  const AntilinearOperator k = read_symmetry(k_spec, static_cast<int>(o.rows()), tol);
  rep.add_input("symmetry", k_spec);
  const PTPhase ph = classify(o, k, tol);
  rep.result()["phase"] = to_string(ph.tag);
  if (ph.tag != Phase::Unbroken) {
    rep.warn(std::string("spectral projectors need an unbroken operator; phase is ") + to_string(ph.tag));
    return kNegative;
  }
  const SpectralDecomposition sd = spectral_projectors(o, k, tol);
  Json arr = Json::array();
  for (std::size_t j = 0; j < sd.projectors.size(); ++j) {
    Json p;
    p["eigenvalue"] = sd.eigenvalues[j];
    p["rank"] = numerical_rank(sd.projectors[j], tol);
    p["projector"] = matrix_to_json(sd.projectors[j]);
    arr.push_back(std::move(p));
  }
  rep.result()["projectors"] = std::move(arr);
  const SpectralResiduals r = spectral_residuals(sd, o, k);
  rep.residual("reconstruction", r.reconstruction);
  rep.residual("idempotence", r.idempotence);
  rep.residual("annihilation", r.annihilation);
  rep.residual("completeness", r.completeness);
  rep.residual("k_commutation", r.k_commutation);
  return kOk;
}

int cmd_metric(Report& rep, const Globals& g, const std::string& h_path, const std::string& k_spec) {
  const Tolerance tol = g.tolerance();
  const Matrix h = read_matrix_file(h_path);
  rep.add_input("hamiltonian", h_path);
  const AntilinearOperator k = read_symmetry(k_spec, static_cast<int>(h.rows()), tol);
  rep.add_input("symmetry", k_spec);
  const PTPhase ph = classify(h, k, tol);
  rep.result()["phase"] = to_string(ph.tag);
  if (ph.tag != Phase::Unbroken) {
    rep.warn(std::string("a metric exists only for an unbroken Hamiltonian; phase is ") + to_string(ph.tag));
    return kNegative;
  }
  const MetricFromHamiltonian m = metric_from_unbroken(h, k, tol);
  const HermitianEigen he = eigh(m.metric.eta());
  rep.result()["eta"] = matrix_to_json(m.metric.eta());
  rep.result()["eta_min_eigenvalue"] = he.values(0);
  rep.result()["eigenbasis_condition"] = m.eigenbasis_condition;
  rep.residual("eta_similarity", relative(m.residual, h.norm()));
  rep.residual("eta_hermiticity", relative((m.metric.eta() - m.metric.eta().adjoint()).norm(), m.metric.eta().norm()));
  if (m.warning) rep.warn(*m.warning);
  return kOk;
}

int cmd_map_hermitian(Report& rep, const Globals& g, const std::string& eta_path, const std::string& e_path,
                      const std::string& state_path) {
  const Tolerance tol = g.tolerance();
  const Matrix eta_m = read_matrix_file(eta_path);
  rep.add_input("metric", eta_path);
  const Matrix e = read_matrix_file(e_path);
  rep.add_input("effect", e_path);
  const MetricOperator eta(eta_m, tol);
  const Matrix f = map_effect_to_hermitian(e, eta, tol);
  const HermitianEigen he = eigh(Matrix(0.5 * (f + f.adjoint())));
  rep.result()["effect_hermitian"] = matrix_to_json(f);
  rep.result()["spectrum"] = std::vector<double>(he.values.data(), he.values.data() + he.values.size());
  rep.residual("hermiticity", relative((f - f.adjoint()).norm(), f.norm()));
  rep.residual("round_trip", relative((map_effect_from_hermitian(f, eta, tol) - e).norm(), e.norm()));
  const Matrix id = Matrix::Identity(e.rows(), e.cols());
  rep.residual("unit_effect", (map_effect_to_hermitian(id, eta, tol) - id).norm());
  if (!state_path.empty()) {
    const Matrix sigma = read_matrix_file(state_path);
    rep.add_input("state", state_path);
    const Matrix rho = map_state_from_hermitian(sigma, eta, tol);
    rep.result()["state_eta_density"] = matrix_to_json(rho);
    rep.result()["state_is_eta_density"] = is_eta_density_matrix(rho, eta, tol);
    const Complex lhs = (rho * e).trace();
    const Complex rhs = (sigma * f).trace();
    rep.result()["pairing"] = complex_json(lhs);
    rep.residual("pairing", std::abs(lhs - rhs));
    rep.residual("state_trace", std::abs(rho.trace() - Complex(1.0)));
    rep.residual("state_eta_hermiticity",
                 relative((eta.eta() * rho * eta.inverse() - rho.adjoint()).norm(), rho.norm()));
  }
  return kOk;
}

const char* branch_key(std::size_t b) { return to_string(static_cast<ViolationBranch>(b)); }

int expected_dimension(TheoryKind kind, int d) {
  switch (kind) {
    case TheoryKind::KSymmetricProjectors:
      return 0;
    case TheoryKind::EtaHermitian:
      return d * d - 1;
    case TheoryKind::EtaHermitianKSymmetric:
      return d * (d + 1) / 2 - 1;
  }
  return -1;
}

void record_state_space(Report& rep, const StateSpaceReport& r, const std::optional<AntilinearOperator>& k) {
  Json& res = rep.result();
  res["theory"] = to_string(r.theory);
  res["dim"] = r.dim;
  res["parameters"] = r.parameters;
  res["affine_dimension"] = r.affine_dimension;
  res["expected_dimension"] = expected_dimension(r.theory, r.dim);
  res["unique"] = r.unique;
  res["conclusive"] = r.conclusive;
  res["centre_feasible"] = r.centre_feasible;
  res["representative"] = matrix_to_json(r.representative);
  res["sampled_effects"] = r.sampled_effects;
  res["adversarial_effects"] = r.adversarial_effects;
  res["cutting_planes"] = r.cutting_planes;
  res["lp_solves"] = r.lp_solves;
  rep.residual("centre_violation", std::max(0.0, r.centre_violation));
  for (const auto& n : r.notes) rep.message(n);
  if (!r.conclusive) rep.warn("state-space probes were inconclusive");
  if (r.affine_dimension != expected_dimension(r.theory, r.dim))
    rep.warn("affine dimension differs from the expected value");

  if (!k) return;
  res["trials"] = r.trials;
  res["refuted"] = r.refuted;
  Json counts;
  for (std::size_t b = 0; b < r.branch_counts.size(); ++b) counts[branch_key(b)] = r.branch_counts[b];
  res["branch_counts"] = std::move(counts);
  res["certified_by_construction"] = r.certified_by_construction;
  res["confidence"] = r.confidence;
  Json cert = Json::array();
  double idem = 0.0, comm = 0.0;
  for (const auto& pair : r.certificate) {
    const Matrix& p = pair.violation.projector;
    idem = std::max(idem, (p * p - p).norm() / std::max(1.0, p.squaredNorm()));
    comm = std::max(comm, relative((k->u() * p.conjugate() - p * k->u()).norm(), p.norm()));
    Json j;
    j["branch"] = to_string(pair.violation.branch);
    j["value"] = pair.violation.value;
    j["candidate"] = matrix_to_json(pair.candidate);
    j["projector"] = matrix_to_json(p);
    cert.push_back(std::move(j));
  }
  res["certificate"] = std::move(cert);
  rep.residual("certificate_idempotence", idem);
  rep.residual("certificate_k_commutation", comm);
}

struct StateSpaceArgs {
  std::string symmetry;
  std::string metric;
  int dim = 0;
  int trials = 200;
};

int cmd_state_space(Report& rep, const Globals& g, const StateSpaceArgs& a, bool certify_only) {
  const Tolerance tol = g.tolerance();
  if (a.symmetry.empty() && a.metric.empty()) throw InputError("state-space needs --symmetry, --metric or both");
  if (certify_only && !a.metric.empty()) throw InputError("certify-unique takes no --metric");
  if (a.trials < 0) throw InputError("--trials must be nonnegative");
  std::optional<int> dim;
  if (a.dim > 0) dim = a.dim;
  if (a.dim < 0) throw InputError("--dim must be positive");

  std::optional<MetricOperator> eta;
  if (!a.metric.empty()) {
    const Matrix m = read_matrix_file(a.metric);
    rep.add_input("metric", a.metric);
    if (dim && m.rows() != *dim)
      throw InputError(a.metric + ": metric has dim " + std::to_string(m.rows()) + ", --dim is " + std::to_string(*dim));
    dim = static_cast<int>(m.rows());
    eta.emplace(m, tol);
  }
  std::optional<AntilinearOperator> k;
  if (!a.symmetry.empty()) {
    k.emplace(read_symmetry(a.symmetry, dim, tol));
    rep.add_input("symmetry", a.symmetry);
  }

  StateSpaceOptions opts;
  opts.samples = g.samples;
  opts.seed = g.seed;
  StateSpaceReport r;
  if (k && !eta) {
    r = certify_unique_state(*k, a.trials, g.seed, opts, tol);
    record_state_space(rep, r, k);
    if (!r.unique) {
      rep.warn("uniqueness was not certified");
      return kNegative;
    }
    return kOk;
  }
  if (eta && !k) {
    r = state_space(EffectTheory::eta_hermitian(*eta), opts, {}, tol);
  } else {
    // The symmetry file holds a standard antiunitary involution K; the
    // theory uses K_eta = eta^{-1/2} K eta^{1/2}.
    const AntilinearOperator k_eta = eta_transform(*k, *eta);
    r = state_space(EffectTheory::eta_hermitian_k_symmetric(*eta, k_eta, tol), opts, {}, tol);
  }
  record_state_space(rep, r, std::nullopt);
  return kOk;
}

struct DemoArgs {
  double r = 1.0;
  double s = 2.0;
  std::string theta = "pi/2";
  int scan = 0;
};

void demo_scan(Report& rep, const Tolerance& tol, int n) {
  Json points = Json::array();
  int counts[4] = {0, 0, 0, 0};
  int mismatches = 0;
  for (int i = 0; i < n; ++i) {
    const double r = n == 1 ? 0.0 : 2.0 * i / (n - 1);
    for (int j = 1; j <= n; ++j) {
      const double s = 2.0 * j / n;
      for (int l = 0; l < n; ++l) {
        const double theta = l * kPi / n;
        const TwoByTwoFamily fam(r, s, theta);
        const Phase ph = classify(fam.hamiltonian(), TwoByTwoFamily::pt(), tol).tag;
        const double disc = fam.discriminant();
        const Phase expected = disc > 0 ? Phase::Unbroken : disc < 0 ? Phase::Broken : Phase::ExceptionalPoint;
        ++counts[static_cast<int>(ph)];
        if (ph != expected) ++mismatches;
        points.push_back(Json::array({r, s, theta, to_string(ph), disc}));
      }
    }
  }
  Json scan;
  scan["n"] = n;
  scan["columns"] = Json::array({"r", "s", "theta", "phase", "discriminant"});
  scan["counts"] = {{"not_symmetric", counts[0]},
                    {"unbroken", counts[1]},
                    {"broken", counts[2]},
                    {"exceptional_point", counts[3]}};
  scan["mismatches"] = mismatches;
  scan["points"] = std::move(points);
  rep.result()["scan"] = std::move(scan);
  if (mismatches > 0) rep.warn("scan: phase disagrees with the discriminant sign at some grid points");
}

int cmd_demo(Report& rep, const Globals& g, const DemoArgs& a) {
  const Tolerance tol = g.tolerance();
  const double theta = parse_angle(a.theta);
  if (a.scan < 0 || a.scan > 64) throw InputError("--scan must be between 1 and 64");
  const TwoByTwoFamily fam(a.r, a.s, theta);
  const Matrix h = fam.hamiltonian();
  Json& res = rep.result();
  res["parameters"] = {{"r", a.r}, {"s", a.s}, {"theta", theta}};
  res["hamiltonian"] = matrix_to_json(h);
  res["discriminant"] = fam.discriminant();
  const PTPhase ph = classify(h, TwoByTwoFamily::pt(), tol);
  res["phase"] = to_string(ph.tag);
  res["eigenvalues_closed_form"] = Json::array({complex_json(fam.eigenvalue_plus()), complex_json(fam.eigenvalue_minus())});
  const EigenDecomposition ed = eig(h, tol);
  Json numeric = Json::array();
  for (Eigen::Index i = 0; i < ed.eigenvalues.size(); ++i) numeric.push_back(complex_json(ed.eigenvalues(i)));
  res["eigenvalues_numeric"] = std::move(numeric);
  if (a.scan > 0) demo_scan(rep, tol, a.scan);

  if (ph.tag != Phase::Unbroken) {
    rep.warn(std::string("phase is ") + to_string(ph.tag) + "; C and eta exist only in the unbroken phase");
    return kOk;
  }
  if (!(a.s > 0.0) || !fam.alpha()) {
    rep.warn("the closed-form C operator needs s > 0 and s^2 > r^2 sin^2 theta");
    return kOk;
  }
  const double alpha = *fam.alpha();
  const Complex lp = fam.eigenvalue_plus(), lm = fam.eigenvalue_minus();
  const Vector vp = fam.eigenvector_plus(), vm = fam.eigenvector_minus();
  const Matrix c = charge_operator(fam);
  const Matrix eta = cpt_metric(fam);
  const Matrix id = Matrix::Identity(2, 2);
  res["alpha"] = alpha;
  res["eigenvector_plus"] = {complex_json(vp(0)), complex_json(vp(1))};
  res["eigenvector_minus"] = {complex_json(vm(0)), complex_json(vm(1))};
  res["charge_operator"] = matrix_to_json(c);
  res["eta"] = matrix_to_json(eta);
  const HermitianEigen he = eigh(Matrix(0.5 * (eta + eta.adjoint())));
  res["eta_min_eigenvalue"] = he.values(0);
  if (!(he.values(0) > 0.0)) rep.fail("eta = P C is not positive definite");

  double eig_match = 0.0;
  for (Eigen::Index i = 0; i < ed.eigenvalues.size(); ++i) {
    const Complex z = ed.eigenvalues(i);
    eig_match = std::max(eig_match, std::min(std::abs(z - lp), std::abs(z - lm)));
  }
  const double hn = h.norm();
  rep.residual("eigenvalue_match", relative(eig_match, hn));
  rep.residual("eigenvector_plus", relative((h * vp - lp * vp).norm(), hn));
  rep.residual("eigenvector_minus", relative((h * vm - lm * vm).norm(), hn));
  rep.residual("c_squared", (c * c - id).norm());
  rep.residual("c_plus", (c * vp - vp).norm());
  rep.residual("c_minus", (c * vm + vm).norm());
  double ortho = 0.0;
  const Vector vs[2] = {vp, vm};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      ortho = std::max(ortho, std::abs(cpt_inner(fam, vs[i], vs[j]) - Complex(i == j ? 1.0 : 0.0)));
  rep.residual("cpt_orthonormality", ortho);
  rep.residual("eta_similarity", relative((eta * h * inverse(eta) - h.adjoint()).norm(), hn));
  return kOk;
}

int cmd_takagi(Report& rep, const Globals& g, const std::string& u_path) {
  const Tolerance tol = g.tolerance();
  const Matrix u = read_matrix_file(u_path);
  rep.add_input("matrix", u_path);
  if (!is_symmetric(u, tol) || !is_unitary(u, tol)) throw InputError(u_path + ": matrix is not a symmetric unitary");
  const Matrix v = takagi(u, tol);
  rep.result()["v"] = matrix_to_json(v);
  rep.residual("factorization", (v * v.transpose() - u).norm());
  rep.residual("unitarity", (v.adjoint() * v - Matrix::Identity(v.rows(), v.cols())).norm());
  return kOk;
}

}  // namespace

double parse_angle(const std::string& text) {
  static const std::regex pi_form(R"(^\s*([+-]?(?:\d+(?:\.\d*)?|\.\d+)?)\*?pi(?:/((?:\d+(?:\.\d*)?|\.\d+)))?\s*$)");
  std::smatch m;
  if (std::regex_match(text, m, pi_form)) {
    double coef = 1.0;
    const std::string c = m[1].str();
    if (c == "-") {
      coef = -1.0;
    } else if (!c.empty() && c != "+") {
      coef = std::stod(c);
    }
    const double denom = m[2].matched ? std::stod(m[2].str()) : 1.0;
    if (denom == 0.0) throw InputError("angle \"" + text + "\": division by zero");
    return coef * kPi / denom;
  }
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw InputError("cannot parse angle \"" + text + "\"");
  }
  if (used != text.size() || !std::isfinite(v)) throw InputError("cannot parse angle \"" + text + "\"");
  return v;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"PT-symmetric and quasi-Hermitian linear algebra toolkit"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  app.add_option("--tol", g.tol, "relative tolerance (absolute tolerance is tol/10)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--seed", g.seed, "random seed")->capture_default_str();
  app.add_option("--samples", g.samples, "sampled effects for state-space analyses (default 64 d^2)");
  app.add_flag("--json", g.json, "machine-readable JSON report (default)");
  app.add_flag("--pretty", g.pretty, "human-readable report");

  std::string h_path, k_spec, o_path, eta_path, e_path, state_path, u_path;

  auto* classify_cmd = app.add_subcommand("classify", "PT phase of a Hamiltonian");
  classify_cmd->add_option("--hamiltonian", h_path, "matrix file")->required();
  classify_cmd->add_option("--symmetry", k_spec, "symmetry file or 'kappa'")->required();

  auto* projectors_cmd = app.add_subcommand("projectors", "K-symmetric spectral projectors");
  projectors_cmd->add_option("--operator", o_path, "matrix file")->required();
  projectors_cmd->add_option("--symmetry", k_spec, "symmetry file or 'kappa'")->required();

  auto* metric_cmd = app.add_subcommand("metric", "metric operator of an unbroken Hamiltonian");
  metric_cmd->add_option("--hamiltonian", h_path, "matrix file")->required();
  metric_cmd->add_option("--symmetry", k_spec, "symmetry file or 'kappa'")->required();

  auto* map_cmd = app.add_subcommand("map-hermitian", "map an eta-effect (and optionally a state) to the Hermitian frame");
  map_cmd->add_option("--metric", eta_path, "metric file")->required();
  map_cmd->add_option("--effect", e_path, "effect file")->required();
  map_cmd->add_option("--state", state_path, "density matrix file");

  StateSpaceArgs ss;
  auto* ss_cmd = app.add_subcommand("state-space", "affine dimension of the state space of an effect theory");
  ss_cmd->add_option("--symmetry", ss.symmetry, "symmetry file or 'kappa'");
  ss_cmd->add_option("--metric", ss.metric, "metric file");
  ss_cmd->add_option("--dim", ss.dim, "dimension (needed with 'kappa' alone)");
  ss_cmd->add_option("--trials", ss.trials, "perturbed candidates for the uniqueness certificate")->capture_default_str();

  StateSpaceArgs cu;
  auto* cu_cmd = app.add_subcommand("certify-unique", "certify that 1/d is the only state on K-symmetric projectors");
  cu_cmd->add_option("--symmetry", cu.symmetry, "symmetry file or 'kappa'")->required();
  cu_cmd->add_option("--dim", cu.dim, "dimension (needed with 'kappa')");
  cu_cmd->add_option("--trials", cu.trials, "perturbed candidates")->capture_default_str();

  DemoArgs demo;
  auto* demo_cmd = app.add_subcommand("demo-2x2", "the two-level PT-symmetric family");
  demo_cmd->add_option("--r", demo.r, "r")->capture_default_str();
  demo_cmd->add_option("--s", demo.s, "s")->capture_default_str();
  demo_cmd->add_option("--theta", demo.theta, "theta (decimal or forms like pi/2, 3pi/4)")->capture_default_str();
  demo_cmd->add_option("--scan", demo.scan, "also classify an n x n x n parameter grid");

  auto* takagi_cmd = app.add_subcommand("takagi", "Autonne-Takagi factor of a symmetric unitary");
  takagi_cmd->add_option("--matrix", u_path, "matrix file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kInputError;
  }

  if (*classify_cmd)
    return execute("classify", g, out, [&](Report& r) { return cmd_classify(r, g, h_path, k_spec); });
  if (*projectors_cmd)
    return execute("projectors", g, out, [&](Report& r) { return cmd_projectors(r, g, o_path, k_spec); });
  if (*metric_cmd) return execute("metric", g, out, [&](Report& r) { return cmd_metric(r, g, h_path, k_spec); });
  if (*map_cmd)
    return execute("map-hermitian", g, out,
                   [&](Report& r) { return cmd_map_hermitian(r, g, eta_path, e_path, state_path); });
  if (*ss_cmd) return execute("state-space", g, out, [&](Report& r) { return cmd_state_space(r, g, ss, false); });
  if (*cu_cmd)
    return execute("certify-unique", g, out, [&](Report& r) { return cmd_state_space(r, g, cu, true); });
  if (*demo_cmd) return execute("demo-2x2", g, out, [&](Report& r) { return cmd_demo(r, g, demo); });
  if (*takagi_cmd) return execute("takagi", g, out, [&](Report& r) { return cmd_takagi(r, g, u_path); });
  return kInputError;
}

}  // namespace ptsym::cli
