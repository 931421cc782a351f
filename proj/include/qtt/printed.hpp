#pragma once

#include <vector>

#include "qtt/intertwiners.hpp"
#include "qtt/kmatrix.hpp"
#include "qtt/rmatrix.hpp"

namespace qtt {

// Displayed closed forms kept as regression references for the constructed objects.
Mat r_half_printed(cplx u, cplx q);
Mat r_spin1_printed(cplx u, cplx q);
Mat k_half_printed(const KParams& p, cplx u, cplx q);
// E, H, F for two_j in {2, 3}.
SpinMaps spin_maps_printed(int two_j, cplx q);
// Barred maps for labels 0 and 1/2 (two_label in {0, 1}).
BarMaps bar_maps_printed(int two_label, cplx q);

// Entrywise relative residuals of every displayed matrix against its construction at u.
std::vector<NamedResidual> printed_regressions(const KParams& p, cplx u, cplx q);

}  // namespace qtt
