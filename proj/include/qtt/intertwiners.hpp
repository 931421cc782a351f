#pragma once

#include <string>
#include <vector>

#include "qtt/polymatrix.hpp"

namespace qtt {

// Projection/inclusion maps for the fusion 1/2 (x) (j-1/2) -> j.
struct SpinMaps {
  int two_j = 0;
  Mat E;  // 4j x (2j+1)
  Mat F;  // (2j+1) x 4j
  Mat H;  // diagonal (2j+1) x (2j+1)
};

// Barred maps with label J: C^{2J+1} -> C^2 (x) C^{2J+2} and back.
struct BarMaps {
  int two_label = 0;
  Mat Ebar;  // (4J+4) x (2J+1)
  Mat Fbar;  // (2J+1) x (4J+4)
  Mat Hbar;  // diagonal (2J+1) x (2J+1)
};

struct FusionMaps {
  SpinMaps spin;  // label j
  BarMaps bar;    // label j - 1/2
};

SpinMaps spin_maps(int two_j, cplx q);
BarMaps bar_maps(int two_label, cplx q);
FusionMaps build_fusion_maps(int two_j, cplx q);

// All fusion-map relations for spin j (two_j >= 1) at deformation q.
std::vector<NamedResidual> fusion_relations(int two_j, cplx q);

// Printed scalar F12bar H1bar against (q-q^{-1})^2 prod_{k=2}^{2J} c(q^{-k}) for label J.
double bar_scalar_identity(int two_label, cplx q);

}  // namespace qtt
