// qtt: verification suites and artifact emission for fused open spin chains.

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "qtt/config.hpp"
#include "qtt/conserved.hpp"
#include "qtt/kmatrix.hpp"
#include "qtt/rmatrix.hpp"
#include "qtt/suites.hpp"

using nlohmann::json;
using namespace qtt;

namespace {

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("'" + path + "' is not valid JSON: " + e.what());
  }
}

// Flat parameter file {eps_plus, ..., k_bar_minus, q}; missing entries are drawn from the seed.
ChainConfig params_config(const std::string& path, int two_j, std::size_t N, Sampler& s) {
  json flat = path.empty() ? json::object() : read_json(path);
  if (!flat.is_object()) throw ConfigError("parameter file must be a JSON object");
  json cfg = {{"spins", json::array()}, {"boundary", json::object()}};
  for (std::size_t i = 0; i < N; ++i) cfg["spins"].push_back(format_spin(two_j));
  for (const auto& [k, v] : flat.items()) {
    if (k == "q")
      cfg["q"] = v;
    else
      cfg["boundary"][k] = v;
  }
  return chain_config_from_json(cfg, s);
}

json mat_json(const Mat& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(cplx_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

void emit(const json& j, const std::string& out) {
  if (out.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(out);
  if (!f) throw ConfigError("cannot write '" + out + "'");
  f << j.dump(2) << "\n";
}

struct VerifyArgs {
  std::string suite, config, out, max_spin = "3/2", sym_case = "all";
  double tol = 0.0;
  std::uint64_t seed = SuiteOptions{}.seed;
};

int cmd_verify(const VerifyArgs& a) {
  SuiteOptions o;
  o.seed = a.seed;
  o.tol = a.tol;
  o.max_two_j = parse_two_j(a.max_spin);
  Sampler s(a.seed);
  if (!a.config.empty()) o.chain = load_chain_config(a.config, s);

  std::vector<std::string> suites;
  if (a.suite == "all") {
    suites = suite_names();
  } else if (a.suite == "symmetry" && (a.sym_case == "xxx" || a.sym_case == "blob")) {
    suites = {a.sym_case};
  } else {
    suites = {a.suite};
    o.symmetry_case = a.sym_case;
  }

  json reports = json::array();
  std::string summary;
  bool pass = true;
  for (const auto& name : suites) {
    const Report r = run_suite(name, o);
    pass = pass && r.passed();
    reports.push_back(r.to_json());
    summary += r.summary();
  }
  const json out = suites.size() == 1 ? reports[0] : json{{"pass", pass}, {"seed", a.seed}, {"suites", reports}};
  // The summary shares standard output only when the report goes to a file.
  if (a.out.empty()) {
    std::cerr << summary;
    std::cout << out.dump(2) << "\n";
  } else {
    emit(out, a.out);
    std::cout << summary;
  }
  return pass ? 0 : 1;
}

int cmd_build_r(const std::string& j1, const std::string& j2) {
  const int a = parse_two_j(j1), b = parse_two_j(j2);
  if (a == 0 || b == 0) throw ConfigError("spins must be positive");
  const cplx q = default_q();
  const RMatrix r = r_fused(a, b, q);
  emit({{"object", "R"}, {"j1", j1}, {"j2", j2}, {"q", cplx_json(q)}, {"matrix", r.poly.to_json()}}, "");
  return 0;
}

int cmd_build_k(const std::string& j, const std::string& params, std::uint64_t seed) {
  const int tj = parse_two_j(j);
  if (tj == 0) throw ConfigError("spin must be positive");
  Sampler s(seed);
  const ChainConfig c = params_config(params, 1, 1, s);
  const KMatrix k = k_fused(tj, c.boundary.left, c.q);
  const DualKMatrix kp = k_dual(tj, c.boundary.right, c.q);
  emit({{"object", "K"},
        {"j", j},
        {"q", cplx_json(c.q)},
        {"boundary", chain_config_to_json(c)["boundary"]},
        {"K", k.poly.to_json()},
        {"K_plus", {{"numerator", kp.value.num.to_json()}, {"denominator", kp.value.den.to_json()}}}},
       "");
  return 0;
}

int cmd_hamiltonian(int order, const std::string& spin, std::size_t N, const std::string& params, bool spectrum,
                    std::uint64_t seed, const std::string& out) {
  const int tj = parse_two_j(spin);
  if (tj == 0) throw ConfigError("spin must be positive");
  if (order < 1) throw ConfigError("--order must be at least 1");
  if (N < 1) throw ConfigError("--N must be at least 1");
  Sampler s(seed);
  const ChainConfig c = params_config(params, tj, N, s);
  const Hamiltonian h = hamiltonian(order, tj, N, c.boundary, c.q);
  json j = {{"order", order},
            {"spin", spin},
            {"N", N},
            {"q", cplx_json(c.q)},
            {"boundary", chain_config_to_json(c)["boundary"]},
            {"dimension", h.matrix.rows()},
            {"matrix", mat_json(h.matrix)}};
  if (spectrum) {
    Eigen::ComplexEigenSolver<Mat> es(h.matrix, false);
    std::vector<cplx> ev(es.eigenvalues().begin(), es.eigenvalues().end());
    std::sort(ev.begin(), ev.end(), [](cplx x, cplx y) { return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag(); });
    json e = json::array();
    for (cplx z : ev) e.push_back(cplx_json(z));
    j["eigenvalues"] = e;
  }
  emit(j, out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fused open spin chain toolkit"};
  app.require_subcommand(1);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run an identity suite and emit a JSON report");
  verify->add_option("name", va.suite, "Suite name, or 'all'");
  verify->add_option("--suite", va.suite, "Suite name, or 'all'");
  verify->add_option("--config", va.config, "Chain configuration JSON");
  verify->add_option("--tol", va.tol, "Override every identity tolerance of the suite");
  verify->add_option("--seed", va.seed, "Seed for sample points and boundary draws");
  verify->add_option("--max-spin", va.max_spin, "Largest auxiliary spin for ybe, re, dual-re, fusion-maps");
  verify->add_option("--case", va.sym_case, "Symmetry case: w0, w1, mixed, xxx, blob or all");
  verify->add_option("--out", va.out, "Write the JSON report here instead of standard output");

  auto* build = app.add_subcommand("build", "Emit an R- or K-matrix as Laurent-polynomial JSON");
  build->require_subcommand(1);
  std::string j1, j2, kj, kparams;
  std::uint64_t seed = SuiteOptions{}.seed;
  auto* br = build->add_subcommand("r", "Fused R-matrix R^{(j1,j2)}(u)");
  br->add_option("--j1", j1, "First spin, e.g. 1/2")->required();
  br->add_option("--j2", j2, "Second spin")->required();
  auto* bk = build->add_subcommand("k", "Fused K-matrix K^{(j)}(u) and its dual");
  bk->add_option("--j", kj, "Spin")->required();
  bk->add_option("--params", kparams, "Flat JSON of boundary parameters and q");
  bk->add_option("--seed", seed, "Seed for missing parameters");

  int order = 1;
  std::string hspin = "1/2", hparams, hout;
  std::size_t hN = 2;
  bool spectrum = false;
  auto* ham = app.add_subcommand("hamiltonian", "Local Hamiltonian of a homogeneous chain");
  ham->add_option("--order", order, "Logarithmic derivative order");
  ham->add_option("--spin", hspin, "Site and auxiliary spin");
  ham->add_option("--N", hN, "Number of sites");
  ham->add_option("--params", hparams, "Flat JSON of boundary parameters and q");
  ham->add_option("--seed", seed, "Seed for missing parameters");
  ham->add_option("--out", hout, "Write the JSON here instead of standard output");
  ham->add_flag("--spectrum", spectrum, "Include the eigenvalues");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*verify) {
      if (va.suite.empty()) throw ConfigError("verify needs a suite name");
      return cmd_verify(va);
    }
    if (*br) return cmd_build_r(j1, j2);
    if (*bk) return cmd_build_k(kj, kparams, seed);
    if (*ham) return cmd_hamiltonian(order, hspin, hN, hparams, spectrum, seed, hout);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const DimensionGuard& e) {
    std::cerr << "dimension guard: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
