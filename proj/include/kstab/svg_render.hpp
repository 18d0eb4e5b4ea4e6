#pragma once

#include <string>

#include "kstab/polytope.hpp"
#include "kstab/vgit.hpp"

namespace kstab {

// Deterministic SVG for polytopes in ambient dimension 1 (interval on an
// axis) or 2 (polygon). Coordinates are rendered as exact fixed-point
// decimals; no floating point is involved anywhere.
std::string svg_polytope(const QPolytope& p);

// Deterministic SVG of the k = 2 linearization segment with wall ticks and
// chamber labels.
std::string svg_chambers(const VGITChambers& c);

}  // namespace kstab
