#include "qtt/config.hpp"

#include <fstream>

namespace qtt {

int parse_two_j(const std::string& s) {
  try {
    std::size_t pos = 0;
    const auto slash = s.find('/');
    if (slash == std::string::npos) {
      const int j = std::stoi(s, &pos);
      if (pos != s.size() || j < 0) throw ConfigError("");
      return 2 * j;
    }
    const int num = std::stoi(s.substr(0, slash), &pos);
    if (pos != slash || s.substr(slash + 1) != "2" || num < 0) throw ConfigError("");
    return num;
  } catch (const std::exception&) {
    throw ConfigError("invalid spin '" + s + "': expected k or k/2 with k >= 0");
  }
}

std::string format_spin(int two_j) { return two_j % 2 == 0 ? std::to_string(two_j / 2) : std::to_string(two_j) + "/2"; }

cplx parse_cplx(const nlohmann::json& j, const std::string& what) {
  if (j.is_number()) return j.get<double>();
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) return {j[0].get<double>(), j[1].get<double>()};
  throw ConfigError(what + ": expected a number or [re, im]");
}

cplx Sampler::draw() {
  const double x = nd_(rng_), y = nd_(rng_);
  return cplx(x, y) * 0.5 + 1.2;
}

KParams Sampler::kparams() {
  KParams p;
  p.eps_plus = draw();
  p.eps_minus = draw();
  p.k_plus = draw();
  p.k_minus = draw();
  return p;
}

BoundaryParams Sampler::boundary() {
  BoundaryParams b;
  b.left = kparams();
  b.right = kparams();
  return b;
}

std::vector<cplx> Sampler::draws(std::size_t n) {
  std::vector<cplx> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(draw());
  return v;
}

ChainConfig chain_config_from_json(const nlohmann::json& j, Sampler& s) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  ChainConfig c;
  if (j.contains("q")) c.q = parse_cplx(j["q"], "q");
  if (!j.contains("spins") || !j["spins"].is_array()) throw ConfigError("config needs a 'spins' array");
  for (const auto& x : j["spins"]) {
    if (!x.is_string()) throw ConfigError("spins entries must be strings such as \"1/2\"");
    c.two_js.push_back(parse_two_j(x.get<std::string>()));
  }
  for (int tj : c.two_js)
    if (tj == 0) throw ConfigError("spin 0 sites are not allowed");
  if (j.contains("N")) {
    if (!j["N"].is_number_integer() || j["N"].get<long>() != static_cast<long>(c.two_js.size()))
      throw ConfigError("N does not match the number of spins");
  }
  if (j.contains("inhoms")) {
    if (!j["inhoms"].is_array() || j["inhoms"].size() != c.two_js.size())
      throw ConfigError("inhoms must list one value per site");
    for (const auto& x : j["inhoms"]) c.inhoms.push_back(parse_cplx(x, "inhoms"));
  } else {
    c.inhoms.assign(c.two_js.size(), 1.0);
  }
  c.boundary = s.boundary();
  if (j.contains("boundary")) {
    const auto& b = j["boundary"];
    if (!b.is_object()) throw ConfigError("boundary must be an object");
    auto set = [&](const char* key, cplx& dst) {
      if (b.contains(key)) dst = parse_cplx(b[key], key);
    };
    set("eps_plus", c.boundary.left.eps_plus);
    set("eps_minus", c.boundary.left.eps_minus);
    set("k_plus", c.boundary.left.k_plus);
    set("k_minus", c.boundary.left.k_minus);
    set("eps_bar_plus", c.boundary.right.eps_plus);
    set("eps_bar_minus", c.boundary.right.eps_minus);
    set("k_bar_plus", c.boundary.right.k_plus);
    set("k_bar_minus", c.boundary.right.k_minus);
  }
  try {
    c.validate();
  } catch (const DimensionMismatch& e) {
    throw ConfigError(e.what());
  }
  return c;
}

ChainConfig load_chain_config(const std::string& path, Sampler& s) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("cannot parse " + path + ": " + e.what());
  }
  return chain_config_from_json(j, s);
}

nlohmann::json kparams_to_json(const KParams& p) {
  auto cj = [](cplx z) { return nlohmann::json::array({z.real(), z.imag()}); };
  return {{"eps_plus", cj(p.eps_plus)}, {"eps_minus", cj(p.eps_minus)}, {"k_plus", cj(p.k_plus)}, {"k_minus", cj(p.k_minus)}};
}

nlohmann::json chain_config_to_json(const ChainConfig& c) {
  auto cj = [](cplx z) { return nlohmann::json::array({z.real(), z.imag()}); };
  nlohmann::json spins = nlohmann::json::array(), inhoms = nlohmann::json::array();
  for (int tj : c.two_js) spins.push_back(format_spin(tj));
  for (cplx v : c.inhoms) inhoms.push_back(cj(v));
  const KParams &l = c.boundary.left, &r = c.boundary.right;
  return {{"q", cj(c.q)},
          {"N", c.two_js.size()},
          {"spins", spins},
          {"inhoms", inhoms},
          {"boundary",
           {{"eps_plus", cj(l.eps_plus)},
            {"eps_minus", cj(l.eps_minus)},
            {"k_plus", cj(l.k_plus)},
            {"k_minus", cj(l.k_minus)},
            {"eps_bar_plus", cj(r.eps_plus)},
            {"eps_bar_minus", cj(r.eps_minus)},
            {"k_bar_plus", cj(r.k_plus)},
            {"k_bar_minus", cj(r.k_minus)}}}};
}

}  // namespace qtt
