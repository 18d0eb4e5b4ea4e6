#include "kstab/arrangement.hpp"

#include <algorithm>
#include <set>

#include "kstab/errors.hpp"

namespace kstab {

std::vector<const ArrangementCell*> Arrangement::chambers() const {
  std::vector<const ArrangementCell*> out;
  for (const auto& c : cells)
    if (c.is_chamber) out.push_back(&c);
  return out;
}

namespace {

QVec barycenter(const std::vector<QVec>& pts) {
  QVec s(pts[0].size(), Rat(0));
  for (const auto& p : pts) s = vec_add(s, p);
  return vec_scale(Rat(1, static_cast<unsigned long>(pts.size())), s);
}

// A closed candidate cell realizes its sign vector iff for every strict wall
// some vertex is strictly on the requested side; the vertex barycenter is then
// strict everywhere at once.
bool realizes_signs(const QPolytope& poly, const std::vector<HalfSpace>& walls,
                    const std::string& signs) {
  for (std::size_t i = 0; i < signs.size(); ++i) {
    if (signs[i] == '0') continue;
    bool strict = false;
    for (const auto& v : poly.vertices) {
      Rat s = walls[i].slack(v);
      if ((signs[i] == '+' && s > 0) || (signs[i] == '-' && s < 0)) {
        strict = true;
        break;
      }
    }
    if (!strict) return false;
  }
  return true;
}

}  // namespace

Arrangement arrangement_chambers(const QPolytope& ambient, const std::vector<HalfSpace>& walls_in) {
  if (ambient.empty()) throw InputError("ambient polytope is empty");
  if (!ambient.rays.empty()) throw InputError("ambient polytope must be bounded");
  std::size_t k = ambient.vertices[0].size();

  Arrangement arr;
  arr.ambient = ambient;
  std::set<QVec> seen;
  for (const auto& w : walls_in) {
    HalfSpace h = w;
    h.equality = true;
    h = h.canonical();
    if (vec_is_zero(h.normal)) throw InputError("wall with zero normal");
    QVec key = h.normal;
    key.push_back(h.offset);
    if (!seen.insert(key).second) continue;
    bool contains_ambient = true;
    for (const auto& v : ambient.vertices)
      if (h.slack(v) != 0) {
        contains_ambient = false;
        break;
      }
    if (!contains_ambient) arr.walls.push_back(h);
  }
  std::sort(arr.walls.begin(), arr.walls.end(), halfspace_less);

  struct Work {
    std::string signs;
    QPolytope poly;
  };
  std::vector<Work> cells{{std::string(), ambient}};
  for (const auto& wall : arr.walls) {
    std::vector<Work> next;
    for (auto& cell : cells) {
      // '0' side
      {
        auto hrep = cell.poly.hrep;
        hrep.push_back(wall);
        auto sub = polytope_from_hrep(hrep, k);
        if (!sub.empty()) next.push_back({cell.signs + '0', std::move(sub)});
      }
      // strict sides; keep only if some vertex is strictly there
      for (char sgn : {'+', '-'}) {
        HalfSpace side = wall;
        side.equality = false;
        if (sgn == '-') side = side.flipped();
        auto hrep = cell.poly.hrep;
        hrep.push_back(side);
        auto sub = polytope_from_hrep(hrep, k);
        if (sub.empty()) continue;
        bool strict = false;
        for (const auto& v : sub.vertices)
          if ((sgn == '+' && wall.slack(v) > 0) || (sgn == '-' && wall.slack(v) < 0)) {
            strict = true;
            break;
          }
        if (strict) next.push_back({cell.signs + sgn, std::move(sub)});
      }
    }
    cells = std::move(next);
  }

  for (auto& w : cells) {
    if (!realizes_signs(w.poly, arr.walls, w.signs)) continue;  // degenerated later in the split
    ArrangementCell cell;
    cell.signs = w.signs;
    cell.representative = barycenter(w.poly.vertices);
    cell.dim = w.poly.dim;
    cell.is_chamber = (w.poly.dim == ambient.dim);
    // chamber <=> every sign strict; both characterizations must agree
    bool all_strict = w.signs.find('0') == std::string::npos;
    if (all_strict != cell.is_chamber)
      throw ConsistencyError("cell dimension disagrees with its sign vector");
    for (std::size_t i = 0; i < arr.walls.size(); ++i) {
      Rat s = arr.walls[i].slack(cell.representative);
      bool ok = (w.signs[i] == '0' && s == 0) || (w.signs[i] == '+' && s > 0) ||
                (w.signs[i] == '-' && s < 0);
      if (!ok) throw ConsistencyError("cell representative violates its sign vector");
    }
    cell.closure = std::move(w.poly);
    arr.cells.push_back(std::move(cell));
  }
  std::sort(arr.cells.begin(), arr.cells.end(),
            [](const ArrangementCell& a, const ArrangementCell& b) { return a.signs < b.signs; });
  return arr;
}

std::vector<QVec> interior_samples(const ArrangementCell& cell) {
  std::vector<QVec> out{cell.representative};
  const auto& vs = cell.closure.vertices;
  out.push_back(vec_scale(Rat(1, 2), vec_add(cell.representative, vs.front())));
  out.push_back(vec_scale(Rat(1, 2), vec_add(cell.representative, vs.back())));
  return out;
}

}  // namespace kstab
