#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qtt/conserved.hpp"

namespace qtt {

// identities must vanish, controls must not; values are reported only.
struct SymmetryReport {
  std::vector<NamedResidual> identities;
  std::vector<NamedResidual> controls;
  std::vector<std::pair<std::string, cplx>> values;
};

enum class ExchangeCase { W0, W1, Mixed };

ExchangeCase parse_exchange_case(const std::string& s);

// Right-boundary parameters projected onto the constraint of the case. Mixed keeps the
// eps-bar values and sets the k-bar values to zero.
BoundaryParams constrain(const BoundaryParams& b, ExchangeCase c, cplx q);

// psi(I_{2k+1}) for right-boundary parameters r and left parameters from cfg.
Mat i_mode(const AlternatingOps& ops, std::size_t k, const KParams& left, const KParams& r, cplx q);

// Exchange relations between W0, W1 or eps-bar_+ W0 + eps-bar_- W1 and the I-operators,
// plus the spin-1/2 Hamiltonian form for W0 and W1.
// Throws ConstraintViolation when the right-boundary parameters miss the case constraint.
SymmetryReport exchange_check(const ChainConfig& cfg, ExchangeCase c);

// Commutators of the H^-, H^+, H^* Hamiltonians (k-bar = 0) with W0, W1 and
// eps-bar_+ W0 + eps-bar_- W1 for a homogeneous chain of spin two_j in {1, 2}.
SymmetryReport hamiltonian_symmetry_check(int two_j, std::size_t N, const KParams& left, cplx eps_bar_plus,
                                          cplx eps_bar_minus, cplx q);

// [t~^{(j)}(u), eps-bar_+ W0 + eps-bar_- W1] at the given points for 2j <= max_two_j.
// Throws ConstraintViolation when k-bar is non-zero.
SymmetryReport transfer_symmetry_check(const ChainConfig& cfg, const std::vector<cplx>& us, int max_two_j = 3);

// W0 from the site recursion, valid at every q including q = 1.
Mat w0_recursive(const std::vector<int>& two_js, const std::vector<cplx>& inhoms, const KParams& left, cplx q);

// q = 1, spin-1/2, v_n = 1: spectrum and eigenvectors of W0 and [H_XXX, W0].
// hbar_minus fixes the right boundary, hbar_plus follows from the constraint.
SymmetryReport xxx_check(std::size_t N, const KParams& left, cplx hbar_minus);

// Densities e_i of the one-boundary chain. printed = true uses the displayed form,
// otherwise the sign of the sigma^z term is flipped and (q + 1/q)/4 is added.
Mat blob_density(std::size_t N, std::size_t i, cplx q, bool printed);

// Temperley-Lieb and blob relations for the H^- chain.
// Throws NoIdempotentScaling when the site-1 part of H^- + 2 sum e_i is degenerate.
SymmetryReport blob_check(std::size_t N, const KParams& left, cplx q, bool printed);

}  // namespace qtt
