#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kstab/rational.hpp"

namespace kstab {

// One linear condition <normal, x> REL offset with REL either ">=" or "=".
// canonical() scales (normal, offset) to a primitive integer vector; for
// equalities it additionally flips the sign so the leading nonzero normal
// entry is positive (inequalities keep their orientation).
struct HalfSpace {
  QVec normal;
  Rat offset;
  bool equality = false;

  HalfSpace() = default;
  HalfSpace(QVec n, Rat off, bool eq = false)
      : normal(std::move(n)), offset(std::move(off)), equality(eq) {}

  HalfSpace canonical() const;
  bool satisfied_by(const QVec& x) const;
  // Signed slack <normal, x> - offset.
  Rat slack(const QVec& x) const;
  HalfSpace flipped() const;  // <-normal, x> >= -offset (the opposite side)
};

bool operator==(const HalfSpace& a, const HalfSpace& b);
bool halfspace_less(const HalfSpace& a, const HalfSpace& b);

// A convex polyhedron carrying both representations.  All workflows here deal
// with pointed polyhedra (usually bounded); a polyhedron containing a line is
// rejected.  Degenerate (lower-dimensional) polytopes are fine: the H-form
// carries explicit equality constraints.
struct QPolytope {
  std::vector<HalfSpace> hrep;
  std::vector<QVec> vertices;  // lexicographically sorted
  std::vector<QVec> rays;      // primitive, lexicographically sorted
  long dim = -1;               // -1 for the empty polytope
  bool empty() const { return vertices.empty() && rays.empty(); }
};

// Builds the full double representation from constraints.  Vertex enumeration
// runs over all maximal-rank constraint subsets; the returned H-form is the
// canonical facet description recomputed from the V-form (plus affine-hull
// equalities), so the result is independent of redundancies in the input.
QPolytope polytope_from_hrep(const std::vector<HalfSpace>& hrep, std::size_t ambient_dim);

// Same canonical object built from generators (redundant points are dropped).
QPolytope polytope_from_points(const std::vector<QVec>& points, const std::vector<QVec>& rays = {});

// Conversion cap: ambient dimension above this is refused (resource error).
inline constexpr std::size_t kMaxConvertDim = 6;

struct HullMembership {
  bool inside = false;
  // inside: convex coefficients per generator, summing to 1, recombining to q.
  QVec coefficients;
  // outside: a normal with <g, normal> > <q, normal> for every generator.
  QVec separating_normal;
};

// Exact membership of q in conv(generators) with a self-verified certificate
// either way.  Throws ConsistencyError if the certificate fails re-checking.
HullMembership hull_membership(const QVec& q, const std::vector<QVec>& generators);

// True iff the two polytopes describe the same point set, checked by mutual
// satisfaction plus identical canonical generator sets.
bool same_point_set(const QPolytope& a, const QPolytope& b);

}  // namespace kstab
