#include "kstab/vgit.hpp"

#include <algorithm>
#include <map>

#include "kstab/cm.hpp"
#include "kstab/errors.hpp"

namespace kstab {

namespace {

// -<alpha, w> for every degree-e monomial, with one witness exponent each.
std::map<long, std::vector<int>> weight_values(int n, int degree, const std::vector<long>& w) {
  std::map<long, std::vector<int>> values;
  for (const auto& alpha : enumerate_exponents(n + 1, degree)) {
    long v = 0;
    for (int i = 0; i <= n; ++i) v += static_cast<long>(alpha[i]) * w[i];
    values.emplace(-v, alpha);
  }
  return values;
}

}  // namespace

VGITChambers vgit_chambers(int n, const std::vector<int>& degrees, long cap) {
  std::size_t k = degrees.size();
  if (k < 2) throw InputError("chamber decomposition needs at least two forms");

  VGITChambers out;
  out.n = n;
  out.degrees = degrees;

  std::vector<HalfSpace> simplex;
  for (std::size_t i = 0; i < k; ++i) {
    QVec e(k, Rat(0));
    e[i] = 1;
    simplex.push_back(HalfSpace(e, Rat(0), false).canonical());
  }
  simplex.push_back(HalfSpace(QVec(k, Rat(1)), Rat(1), true).canonical());
  out.ambient = polytope_from_hrep(simplex, k);

  auto candidates = candidate_one_ps(n, degrees, cap);
  std::map<QVec, Wall> walls;  // keyed by canonical wall normal
  for (const auto& cand : candidates) {
    std::vector<std::map<long, std::vector<int>>> values;
    for (std::size_t j = 0; j < k; ++j)
      values.push_back(weight_values(n, degrees[j], cand.weights));

    std::vector<std::map<long, std::vector<int>>::const_iterator> pick;
    for (const auto& v : values) pick.push_back(v.begin());
    while (true) {
      bool pos = false, neg = false;
      for (std::size_t j = 0; j < k; ++j) {
        pos = pos || pick[j]->first > 0;
        neg = neg || pick[j]->first < 0;
      }
      if (pos && neg) {
        QVec normal(k);
        for (std::size_t j = 0; j < k; ++j) normal[j] = pick[j]->first;
        HalfSpace wall = HalfSpace(normal, Rat(0), true).canonical();
        if (!walls.contains(wall.normal)) {
          Wall w;
          w.hyperplane = wall;
          w.witness_w = cand.weights;
          for (std::size_t j = 0; j < k; ++j) {
            w.m_values.push_back(pick[j]->first);
            w.witness_exponents.push_back(pick[j]->second);
          }
          walls.emplace(wall.normal, std::move(w));
        }
      }
      std::size_t j = 0;
      while (j < k && ++pick[j] == values[j].end()) pick[j++] = values[j].begin();
      if (j == k) break;
    }
  }

  std::vector<HalfSpace> wall_planes;
  for (auto& [normal, wall] : walls) {
    wall_planes.push_back(wall.hyperplane);
    out.walls.push_back(std::move(wall));
  }
  out.arrangement = arrangement_chambers(out.ambient, wall_planes);
  return out;
}

}  // namespace kstab
