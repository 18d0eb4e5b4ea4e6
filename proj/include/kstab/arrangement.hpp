#pragma once

#include <string>
#include <vector>

#include "kstab/polytope.hpp"

namespace kstab {

// One cell of a hyperplane arrangement restricted to a bounded ambient
// polytope.  signs[i] is '+', '-' or '0' for wall i; representative is an
// exact point in the cell's relative interior (so it satisfies every '+'/'-'
// strictly and every '0' exactly).
struct ArrangementCell {
  std::string signs;
  QPolytope closure;
  QVec representative;
  long dim = -1;
  bool is_chamber = false;  // dim == ambient dim (all signs strict)
};

struct Arrangement {
  QPolytope ambient;
  std::vector<HalfSpace> walls;  // canonical, deduplicated, in output order
  std::vector<ArrangementCell> cells;

  std::vector<const ArrangementCell*> chambers() const;
};

// Splits ambient by the wall hyperplanes.  Walls are deduplicated after
// canonicalization; a wall containing the whole ambient is dropped.  Every
// nonempty open cell appears exactly once, including lower-dimensional wall
// cells; cells are ordered by sign string.
Arrangement arrangement_chambers(const QPolytope& ambient, const std::vector<HalfSpace>& walls);

// Three exact points in the relative interior of a cell (representative plus
// midpoints toward two extreme vertices; duplicates possible for points).
std::vector<QVec> interior_samples(const ArrangementCell& cell);

}  // namespace kstab
