#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "json.hpp"

#include "qtt/spinchain.hpp"

namespace qtt {

// "1/2" -> 1, "1" -> 2, "3/2" -> 3; throws ConfigError otherwise.
int parse_two_j(const std::string& s);
std::string format_spin(int two_j);
// [re, im] or a real number.
cplx parse_cplx(const nlohmann::json& j, const std::string& what);

// Seeded draws for sample points and boundary parameters.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}
  // 1.2 + (x + iy)/2 with x, y standard normal
  cplx draw();
  KParams kparams();
  BoundaryParams boundary();
  std::vector<cplx> draws(std::size_t n);

 private:
  std::mt19937_64 rng_;
  std::normal_distribution<double> nd_;
};

// {q, N, spins, inhoms, boundary{eps_plus, eps_minus, k_plus, k_minus, eps_bar_plus, eps_bar_minus,
// k_bar_plus, k_bar_minus}}. Missing q means the default q, missing inhoms means v_n = 1,
// missing boundary entries are drawn from the sampler. Throws ConfigError.
ChainConfig chain_config_from_json(const nlohmann::json& j, Sampler& s);
ChainConfig load_chain_config(const std::string& path, Sampler& s);
nlohmann::json chain_config_to_json(const ChainConfig& c);
nlohmann::json kparams_to_json(const KParams& p);

}  // namespace qtt
