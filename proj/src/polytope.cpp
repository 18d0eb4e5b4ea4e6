#include "kstab/polytope.hpp"

#include <algorithm>
#include <set>

#include "kstab/errors.hpp"
#include "kstab/linalg.hpp"
#include "kstab/lp.hpp"

namespace kstab {

HalfSpace HalfSpace::canonical() const {
  QVec full = normal;
  full.push_back(offset);
  QVec prim = equality ? primitive_signed(full) : primitive(full);
  HalfSpace h;
  h.normal.assign(prim.begin(), prim.end() - 1);
  h.offset = prim.back();
  h.equality = equality;
  return h;
}

bool HalfSpace::satisfied_by(const QVec& x) const {
  Rat s = slack(x);
  return equality ? s == 0 : s >= 0;
}

Rat HalfSpace::slack(const QVec& x) const { return dot(normal, x) - offset; }

HalfSpace HalfSpace::flipped() const { return HalfSpace(vec_scale(-1, normal), -offset, equality); }

bool operator==(const HalfSpace& a, const HalfSpace& b) {
  return a.equality == b.equality && a.offset == b.offset && a.normal == b.normal;
}

bool halfspace_less(const HalfSpace& a, const HalfSpace& b) {
  if (a.equality != b.equality) return a.equality;  // equalities first
  if (a.normal != b.normal) return lex_less(a.normal, b.normal);
  return a.offset < b.offset;
}

namespace {

void check_dim_cap(std::size_t d) {
  if (d > kMaxConvertDim)
    throw ResourceError("representation conversion capped at dimension " +
                        std::to_string(kMaxConvertDim) + ", got " + std::to_string(d));
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - (k - i)) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// All vertices of {x : hrep}: unique solutions of full-rank k-subsets of the
// constraint rows that satisfy every constraint.
std::vector<QVec> enumerate_vertices(const std::vector<HalfSpace>& hrep, std::size_t d) {
  std::vector<QVec> found;
  std::set<QVec> seen;
  if (d == 0) return found;
  if (hrep.size() < d) return found;
  std::vector<std::size_t> idx(d);
  for (std::size_t i = 0; i < d; ++i) idx[i] = i;
  do {
    QMatrix m;
    QVec rhs;
    for (auto i : idx) {
      m.push_back(hrep[i].normal);
      rhs.push_back(hrep[i].offset);
    }
    auto sol = solve_linear_system(m, rhs);
    if (sol.kind != LinearSolveResult::Kind::Unique) continue;
    if (seen.count(sol.solution)) continue;
    bool ok = true;
    for (const auto& h : hrep)
      if (!h.satisfied_by(sol.solution)) {
        ok = false;
        break;
      }
    if (ok) {
      seen.insert(sol.solution);
      found.push_back(sol.solution);
    }
  } while (next_combination(idx, hrep.size()));
  std::sort(found.begin(), found.end(), lex_less);
  return found;
}

// Extreme rays of the recession cone {A_>= t >= 0, A_= t = 0}; requires the
// cone to be pointed (no lineality), which callers check first.
std::vector<QVec> enumerate_rays(const std::vector<HalfSpace>& hrep, std::size_t d) {
  std::vector<QVec> rays;
  std::set<QVec> seen;
  QMatrix all_rows;
  for (const auto& h : hrep) all_rows.push_back(h.normal);
  auto satisfied = [&](const QVec& t) {
    for (const auto& h : hrep) {
      Rat s = dot(h.normal, t);
      if (h.equality ? s != 0 : s < 0) return false;
    }
    return true;
  };
  if (d == 0) return rays;
  std::size_t need = d - 1;
  std::vector<std::size_t> idx(need);
  for (std::size_t i = 0; i < need; ++i) idx[i] = i;
  bool more = need <= hrep.size() && need > 0;
  if (need == 0) more = true;  // single empty subset: full space must be 1-dim (d == 1)
  while (more) {
    QMatrix m;
    for (std::size_t i = 0; i < need; ++i) m.push_back(hrep[idx[i]].normal);
    auto basis = nullspace(m, d);
    if (basis.size() == 1) {
      for (int sign : {1, -1}) {
        QVec t = primitive(vec_scale(sign, basis[0]));
        if (!vec_is_zero(t) && !seen.count(t) && satisfied(t)) {
          seen.insert(t);
          rays.push_back(t);
        }
      }
    }
    if (need == 0) break;
    more = next_combination(idx, hrep.size());
  }
  std::sort(rays.begin(), rays.end(), lex_less);
  return rays;
}

// Canonical facet description of conv(points) + cone(rays), computed directly
// in the ambient space: affine-hull equalities from the orthogonal complement
// of the span of differences and rays, facets from d-subsets of generators
// with the supporting normal constrained to that span.
std::vector<HalfSpace> facets_from_generators(const std::vector<QVec>& points,
                                              const std::vector<QVec>& rays, std::size_t k) {
  std::vector<HalfSpace> out;
  if (points.empty()) {
    out.push_back(HalfSpace(QVec(k, Rat(0)), Rat(1), false).canonical());  // 0 >= 1
    return out;
  }
  QMatrix span_rows;
  for (std::size_t i = 1; i < points.size(); ++i)
    span_rows.push_back(vec_sub(points[i], points[0]));
  for (const auto& r : rays) span_rows.push_back(r);
  auto complement = nullspace(span_rows, k);  // normals of the affine hull
  for (const auto& c : complement)
    out.push_back(HalfSpace(c, dot(c, points[0]), true).canonical());

  std::size_t d = k - complement.size();  // intrinsic dimension
  if (d == 0) {
    std::sort(out.begin(), out.end(), halfspace_less);
    return out;
  }

  // span basis: the nullspace of the complement rows
  QMatrix comp_rows = complement.empty() ? QMatrix{} : QMatrix(complement);
  auto span_basis = nullspace(comp_rows, k);

  std::vector<QVec> gens = points;
  gens.insert(gens.end(), rays.begin(), rays.end());
  std::size_t np = points.size();
  std::set<QVec> seen;  // canonical (normal, offset) stacked
  std::vector<std::size_t> idx(d);
  for (std::size_t i = 0; i < d; ++i) idx[i] = i;
  if (gens.size() < d) return out;
  do {
    // unknowns (alpha_1..alpha_d, b): normal = span_basis^T alpha
    QMatrix m;
    for (auto gi : idx) {
      QVec row(d + 1, Rat(0));
      for (std::size_t j = 0; j < d; ++j) row[j] = dot(span_basis[j], gens[gi]);
      row[d] = (gi < np) ? Rat(-1) : Rat(0);  // points: <a,p> = b ; rays: <a,r> = 0
      m.push_back(std::move(row));
    }
    auto basis = nullspace(m, d + 1);
    if (basis.size() != 1) continue;
    QVec normal(k, Rat(0));
    for (std::size_t j = 0; j < d; ++j)
      normal = vec_add(normal, vec_scale(basis[0][j], span_basis[j]));
    if (vec_is_zero(normal)) continue;
    Rat b = basis[0][d];
    int pos = 0, neg = 0;
    for (const auto& p : points) {
      int c = cmp(dot(normal, p) - b, Rat(0));
      if (c > 0) ++pos;
      if (c < 0) ++neg;
    }
    for (const auto& r : rays) {
      int c = cmp(dot(normal, r), Rat(0));
      if (c > 0) ++pos;
      if (c < 0) ++neg;
    }
    if (pos && neg) continue;  // not supporting
    HalfSpace h = neg ? HalfSpace(vec_scale(-1, normal), -b, false)
                      : HalfSpace(normal, b, false);
    h = h.canonical();
    QVec key = h.normal;
    key.push_back(h.offset);
    if (seen.insert(key).second) out.push_back(h);
  } while (next_combination(idx, gens.size()));
  std::sort(out.begin(), out.end(), halfspace_less);
  return out;
}

}  // namespace

QPolytope polytope_from_hrep(const std::vector<HalfSpace>& hrep_in, std::size_t ambient_dim) {
  check_dim_cap(ambient_dim);
  std::vector<HalfSpace> hrep;
  hrep.reserve(hrep_in.size());
  for (const auto& h : hrep_in) {
    if (h.normal.size() != ambient_dim)
      throw InputError("halfspace dimension mismatch");
    hrep.push_back(h.canonical());
  }

  QPolytope p;
  // Quick feasibility gate so "empty" is a result, not an error.
  {
    QMatrix ia, ea;
    QVec ib, eb;
    for (const auto& h : hrep)
      if (h.equality) {
        ea.push_back(h.normal);
        eb.push_back(h.offset);
      } else {
        ia.push_back(h.normal);
        ib.push_back(h.offset);
      }
    if (!lp_feasible_system(ia, ib, ea, eb).feasible) {
      p.dim = -1;
      p.hrep = {HalfSpace(QVec(ambient_dim, Rat(0)), Rat(1), false).canonical()};
      return p;
    }
  }

  // Lineality check: a line direction satisfies every row with equality.
  {
    QMatrix rows;
    for (const auto& h : hrep) rows.push_back(h.normal);
    if (nullspace(rows, ambient_dim).size() > 0 && ambient_dim > 0)
      throw InputError("polyhedron contains a line; only pointed polyhedra are supported");
  }

  p.vertices = enumerate_vertices(hrep, ambient_dim);
  if (p.vertices.empty() && ambient_dim > 0)
    throw ConsistencyError("feasible pointed polyhedron produced no vertices");
  if (ambient_dim == 0) p.vertices = {QVec{}};

  // Unbounded directions, if any.
  bool maybe_unbounded = false;
  for (std::size_t i = 0; i < ambient_dim && !maybe_unbounded; ++i) {
    for (int s : {1, -1}) {
      QMatrix ia, ea;
      QVec ib, eb;
      for (const auto& h : hrep)
        if (h.equality) {
          ea.push_back(h.normal);
          eb.push_back(Rat(0));
        } else {
          ia.push_back(h.normal);
          ib.push_back(Rat(0));
        }
      QVec unit(ambient_dim, Rat(0));
      unit[i] = s;
      ea.push_back(unit);
      eb.push_back(Rat(1));
      if (lp_feasible_system(ia, ib, ea, eb).feasible) {
        maybe_unbounded = true;
        break;
      }
    }
  }
  if (maybe_unbounded) p.rays = enumerate_rays(hrep, ambient_dim);

  std::vector<QVec> pts = p.vertices;
  for (const auto& r : p.rays) pts.push_back(vec_add(p.vertices[0], r));
  p.dim = affine_dim(pts);
  p.hrep = facets_from_generators(p.vertices, p.rays, ambient_dim);
  return p;
}

QPolytope polytope_from_points(const std::vector<QVec>& points, const std::vector<QVec>& rays) {
  if (points.empty()) {
    QPolytope p;
    p.dim = -1;
    return p;
  }
  std::size_t k = points[0].size();
  check_dim_cap(k);
  for (const auto& q : points)
    if (q.size() != k) throw InputError("point dimension mismatch");
  std::vector<QVec> prim_rays;
  for (const auto& r : rays) {
    if (r.size() != k) throw InputError("ray dimension mismatch");
    if (vec_is_zero(r)) throw InputError("zero ray generator");
    prim_rays.push_back(primitive(r));
  }
  auto hrep = facets_from_generators(points, prim_rays, k);
  // Re-extract vertices so non-extreme input points disappear, and rays so
  // non-extreme ray generators disappear.
  QPolytope p;
  p.hrep = hrep;
  p.vertices = enumerate_vertices(hrep, k);
  if (k == 0) p.vertices = {QVec{}};
  if (p.vertices.empty())
    throw InputError("generators describe an unpointed polyhedron");
  if (!prim_rays.empty()) p.rays = enumerate_rays(hrep, k);
  std::vector<QVec> pts = p.vertices;
  for (const auto& r : p.rays) pts.push_back(vec_add(p.vertices[0], r));
  p.dim = affine_dim(pts);
  return p;
}

HullMembership hull_membership(const QVec& q, const std::vector<QVec>& generators) {
  if (generators.empty()) throw InputError("hull_membership needs at least one generator");
  std::size_t k = q.size();
  for (const auto& g : generators)
    if (g.size() != k) throw InputError("generator dimension mismatch");

  // {lambda >= 0, G^T lambda = q, sum lambda = 1}
  QMatrix a(k + 1, QVec(generators.size(), Rat(0)));
  QVec b(k + 1, Rat(0));
  for (std::size_t j = 0; j < generators.size(); ++j) {
    for (std::size_t i = 0; i < k; ++i) a[i][j] = generators[j][i];
    a[k][j] = 1;
  }
  for (std::size_t i = 0; i < k; ++i) b[i] = q[i];
  b[k] = 1;

  auto fe = lp_feasible_eq(a, b);
  HullMembership res;
  if (fe.feasible) {
    res.inside = true;
    res.coefficients = fe.point;
    QVec recon(k, Rat(0));
    Rat total = 0;
    for (std::size_t j = 0; j < generators.size(); ++j) {
      if (res.coefficients[j] < 0) throw ConsistencyError("negative convex coefficient");
      recon = vec_add(recon, vec_scale(res.coefficients[j], generators[j]));
      total += res.coefficients[j];
    }
    if (recon != q || total != 1) throw ConsistencyError("convex recombination failed");
    return res;
  }
  // Farkas y = (u, t): <g,u> + t <= 0 for all g and <q,u> + t > 0,
  // so -u separates: <g,-u> > <q,-u> for every generator.
  res.inside = false;
  QVec w(k, Rat(0));
  for (std::size_t i = 0; i < k; ++i) w[i] = -fe.farkas[i];
  res.separating_normal = w;
  Rat qs = dot(q, w);
  for (const auto& g : generators)
    if (!(dot(g, w) > qs)) throw ConsistencyError("separating normal is not strict");
  return res;
}

bool same_point_set(const QPolytope& a, const QPolytope& b) {
  if (a.empty() || b.empty()) return a.empty() == b.empty();
  for (const auto& v : a.vertices)
    for (const auto& h : b.hrep)
      if (!h.satisfied_by(v)) return false;
  for (const auto& v : b.vertices)
    for (const auto& h : a.hrep)
      if (!h.satisfied_by(v)) return false;
  return a.vertices == b.vertices && a.rays == b.rays;
}

}  // namespace kstab
