#include "kstab/stability.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "kstab/binomial.hpp"
#include "kstab/cm.hpp"
#include "kstab/errors.hpp"
#include "kstab/linalg.hpp"
#include "kstab/polytope.hpp"
#include "kstab/rng.hpp"

namespace kstab {

namespace {

constexpr long kMaxMinkowskiGens = 20000;
constexpr std::size_t kMaxInteriorGens = 48;

std::vector<long> to_signed_primitive(std::vector<long> v) {
  long g = 0;
  for (long x : v) g = std::gcd(g, x < 0 ? -x : x);
  if (g > 1)
    for (long& x : v) x /= g;
  return v;
}

// Difference pool: all pairwise support differences per ambient degree plus
// the coordinate-pair vectors, deduplicated up to sign.
std::vector<std::vector<long>> difference_pool(int n, const std::vector<int>& degrees) {
  std::set<std::vector<long>> pool;
  auto insert_dir = [&](std::vector<long> d) {
    d = to_signed_primitive(std::move(d));
    for (long x : d)
      if (x != 0) {
        if (x < 0)
          for (long& y : d) y = -y;
        break;
      }
    if (std::any_of(d.begin(), d.end(), [](long x) { return x != 0; })) pool.insert(d);
  };
  std::set<int> unique_degrees(degrees.begin(), degrees.end());
  for (int e : unique_degrees) {
    auto exps = enumerate_exponents(n + 1, e);
    for (std::size_t a = 0; a < exps.size(); ++a)
      for (std::size_t b = a + 1; b < exps.size(); ++b) {
        std::vector<long> d(n + 1);
        for (int i = 0; i <= n; ++i) d[i] = exps[a][i] - exps[b][i];
        insert_dir(std::move(d));
      }
  }
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      std::vector<long> d(n + 1, 0);
      d[i] = 1;
      d[j] = -1;
      insert_dir(std::move(d));
    }
  return {pool.begin(), pool.end()};
}

struct FrameCase {
  std::string label;
  QMatrix matrix;
};

QMatrix identity_matrix(std::size_t n) {
  QMatrix m(n, QVec(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

std::vector<FrameCase> build_frames(int n, const FrameStrategy& strategy) {
  std::size_t nv = static_cast<std::size_t>(n) + 1;
  std::vector<FrameCase> frames;
  switch (strategy.kind) {
    case FrameStrategyKind::Identity:
      frames.push_back({"identity", identity_matrix(nv)});
      break;
    case FrameStrategyKind::Permutations: {
      if (factorial(static_cast<long>(nv)) > 720)
        throw ResourceError("permutation frame count " +
                            factorial(static_cast<long>(nv)).get_str() + " exceeds 720");
      std::vector<int> perm(nv);
      std::iota(perm.begin(), perm.end(), 0);
      do {
        QMatrix m(nv, QVec(nv, Rat(0)));
        std::string label = "perm(";
        for (std::size_t i = 0; i < nv; ++i) {
          m[i][perm[i]] = 1;
          label += (i ? " " : "") + std::to_string(perm[i]);
        }
        frames.push_back({label + ")", std::move(m)});
      } while (std::next_permutation(perm.begin(), perm.end()));
      break;
    }
    case FrameStrategyKind::UserMatrices: {
      if (strategy.matrices.empty()) throw InputError("no frame matrices supplied");
      for (std::size_t i = 0; i < strategy.matrices.size(); ++i) {
        const auto& m = strategy.matrices[i];
        if (m.size() != nv) throw InputError("frame matrix must be (n+1) x (n+1)");
        for (const auto& row : m)
          if (row.size() != nv) throw InputError("frame matrix must be (n+1) x (n+1)");
        if (rank(m) != nv) throw InputError("frame matrix is singular");
        frames.push_back({"user[" + std::to_string(i) + "]", m});
      }
      break;
    }
    case FrameStrategyKind::SeededRandom: {
      frames.push_back({"identity", identity_matrix(nv)});
      std::mt19937_64 gen(strategy.seed);
      for (int i = 0; i < strategy.random_count; ++i) {
        QMatrix m;
        do {
          m.assign(nv, QVec(nv, Rat(0)));
          for (std::size_t r = 0; r < nv; ++r)
            for (std::size_t c = 0; c < nv; ++c) m[r][c] = rand_range(gen, -2, 2);
        } while (rank(m) != nv);
        frames.push_back(
            {"random[seed=" + std::to_string(strategy.seed) + "," + std::to_string(i) + "]",
             std::move(m)});
      }
      break;
    }
  }
  return frames;
}

int severity(StabilityStatus s) {
  switch (s) {
    case StabilityStatus::Unstable: return 0;
    case StabilityStatus::StrictlySemistableOnWall: return 1;
    case StabilityStatus::SemistableInTestedFrames: return 2;
    case StabilityStatus::StableInTestedFrames: return 3;
  }
  return 2;
}

}  // namespace

long hm_weight(const Form& f, const OnePS& w) { return mu(f, w); }

std::vector<OnePS> candidate_one_ps(int n, const std::vector<int>& degrees, long cap) {
  if (cap < 1) throw InputError("cap must be at least 1");
  if (n < 1) throw InputError("n must be at least 1");
  if (degrees.empty()) throw InputError("at least one degree required");
  for (int d : degrees)
    if (d < 1) throw InputError("degrees must be positive");

  auto pool = difference_pool(n, degrees);
  std::set<std::vector<long>> found;
  auto note = [&](const std::vector<long>& w) {
    found.insert(weyl_canonical(w));
    if (static_cast<long>(found.size()) > cap)
      throw ResourceError("candidate count " + std::to_string(found.size()) +
                          " exceeds cap " + std::to_string(cap));
  };

  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      std::vector<long> w(n + 1, 0);
      w[i] = 1;
      w[j] = -1;
      note(w);
    }

  // (n-1)-subsets of the pool, intersected with the sum-zero hyperplane.
  int subset = n - 1;
  if (subset >= 1 && static_cast<int>(pool.size()) >= subset) {
    std::vector<std::size_t> idx(subset);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      QMatrix rows;
      rows.push_back(QVec(n + 1, Rat(1)));  // sum-zero
      for (int s = 0; s < subset; ++s) rows.push_back(from_long_vec(pool[idx[s]]));
      auto null = nullspace(rows, n + 1);
      if (null.size() == 1) note(to_long_vec(primitive(null[0])));

      int pos = subset - 1;
      while (pos >= 0 && idx[pos] == pool.size() - subset + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (int s = pos + 1; s < subset; ++s) idx[s] = idx[s - 1] + 1;
    }
  } else if (subset == 0) {
    // n = 1: the sum-zero line itself.
    note({1, -1});
  }

  std::vector<OnePS> out;
  for (const auto& w : found) out.emplace_back(w);
  return out;
}

std::vector<std::vector<long>> expand_candidates(const std::vector<OnePS>& canonical) {
  std::set<std::vector<long>> seen;
  for (const auto& c : canonical) {
    std::vector<long> v = c.weights;
    std::sort(v.begin(), v.end());
    do {
      seen.insert(v);
      std::vector<long> neg(v.size());
      for (std::size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
      seen.insert(neg);
    } while (std::next_permutation(v.begin(), v.end()));
  }
  seen.erase(std::vector<long>(canonical.empty() ? 0 : canonical[0].weights.size(), 0));
  return {seen.begin(), seen.end()};
}

TupleConfig::TupleConfig(int n_, std::vector<Form> forms_, QVec linearization_)
    : n(n_), forms(std::move(forms_)), linearization(std::move(linearization_)) {
  if (n < 1) throw InputError("n must be at least 1");
  if (forms.empty()) throw InputError("at least one form required");
  if (linearization.size() != forms.size())
    throw InputError("linearization length must match the form count");
  for (const auto& f : forms)
    if (f.nvars != n + 1) throw InputError("form variable count must be n+1");
  for (const auto& g : linearization)
    if (g <= 0) throw InputError("linearization weights must be positive");
}

std::vector<int> TupleConfig::degrees() const {
  std::vector<int> d;
  for (const auto& f : forms) d.push_back(f.degree);
  return d;
}

std::string status_string(StabilityStatus s) {
  switch (s) {
    case StabilityStatus::Unstable: return "unstable";
    case StabilityStatus::StrictlySemistableOnWall: return "strictly-semistable-on-wall";
    case StabilityStatus::SemistableInTestedFrames: return "semistable-in-tested-frames";
    case StabilityStatus::StableInTestedFrames: return "stable-in-tested-frames";
  }
  throw InputError("unknown status");
}

Rat combined_weight(const TupleConfig& t, const std::vector<long>& w) {
  Rat total = 0;
  for (std::size_t j = 0; j < t.forms.size(); ++j)
    total += t.linearization[j] * mu_core(t.forms[j], w);
  return total;
}

Rat candidate_minimum(const TupleConfig& t, long cap) {
  auto expanded = expand_candidates(candidate_one_ps(t.n, t.degrees(), cap));
  if (expanded.empty()) throw ConsistencyError("candidate set is empty");
  bool first = true;
  Rat best;
  for (const auto& w : expanded) {
    Rat v = combined_weight(t, w);
    if (first || v < best) best = v;
    first = false;
  }
  return best;
}

Rat exhaustive_minimum(const TupleConfig& t, long bound) {
  if (bound < 1) throw InputError("bound must be at least 1");
  int len = t.n + 1;
  if (len > 4) throw ResourceError("exhaustive enumeration is limited to n <= 3");
  std::vector<long> w(len, -bound);
  bool first = true;
  Rat best;
  while (true) {
    long sum = std::accumulate(w.begin(), w.end(), 0L);
    bool zero = std::all_of(w.begin(), w.end(), [](long x) { return x == 0; });
    if (sum == 0 && !zero) {
      auto p = to_signed_primitive(w);
      if (p == w) {
        Rat v = combined_weight(t, w);
        if (first || v < best) best = v;
        first = false;
      }
    }
    int pos = len - 1;
    while (pos >= 0 && w[pos] == bound) --pos;
    if (pos < 0) break;
    ++w[pos];
    for (int i = pos + 1; i < len; ++i) w[i] = -bound;
  }
  if (first) throw ConsistencyError("exhaustive sweep found no sum-zero vectors");
  return best;
}

StabilityVerdict torus_semistable(const TupleConfig& t, long cap) {
  int n = t.n;
  std::size_t k = t.forms.size();

  long gen_count = 1;
  for (const auto& f : t.forms) {
    gen_count *= static_cast<long>(f.terms.size());
    if (gen_count > kMaxMinkowskiGens)
      throw ResourceError("Minkowski generator count exceeds " +
                          std::to_string(kMaxMinkowskiGens));
  }

  // Weighted Minkowski sum generators and the barycenter target point.
  std::vector<QVec> gens;
  std::vector<std::size_t> pick(k, 0);
  while (true) {
    QVec g(n + 1, Rat(0));
    for (std::size_t j = 0; j < k; ++j) {
      const auto& alpha = t.forms[j].terms[pick[j]].exps;
      for (int i = 0; i <= n; ++i) g[i] += t.linearization[j] * alpha[i];
    }
    gens.push_back(std::move(g));
    std::size_t j = 0;
    while (j < k && ++pick[j] == t.forms[j].terms.size()) pick[j++] = 0;
    if (j == k) break;
  }
  Rat level = 0;
  for (std::size_t j = 0; j < k; ++j) level += t.linearization[j] * t.forms[j].degree;
  level /= n + 1;
  QVec q(n + 1, level);

  auto mem = hull_membership(q, gens);

  // Candidate sweep: minimum, and wall detection at combined weight zero.
  auto expanded = expand_candidates(candidate_one_ps(n, t.degrees(), cap));
  bool first = true, on_wall = false;
  Rat cmin;
  std::vector<long> argmin;
  std::vector<long> wall_witness;
  for (const auto& w : expanded) {
    bool pos = false, neg = false;
    Rat total = 0;
    for (std::size_t j = 0; j < k; ++j) {
      long m = mu_core(t.forms[j], w);
      pos = pos || m > 0;
      neg = neg || m < 0;
      total += t.linearization[j] * m;
    }
    if (total == 0 && pos && neg && wall_witness.empty()) {
      on_wall = true;
      wall_witness = w;
    }
    if (first || total < cmin) {
      cmin = total;
      argmin = w;
    }
    first = false;
  }

  StabilityVerdict verdict;
  verdict.frames_tested = {"identity"};
  verdict.certificate_frame = "identity";

  if (!mem.inside) {
    if (cmin >= 0)
      throw ConsistencyError(
          "barycenter criterion says unstable but the candidate minimum is nonnegative");
    // Project the separating normal into the special linear torus: generators
    // and target share the coordinate sum, so the shift preserves separation.
    Rat mean = 0;
    for (const auto& x : mem.separating_normal) mean += x;
    mean /= n + 1;
    QVec shifted = mem.separating_normal;
    for (auto& x : shifted) x -= mean;
    OnePS cert(to_long_vec(primitive(shifted)));
    if (combined_weight(t, cert.weights) >= 0)
      throw ConsistencyError("separating normal fails to certify instability");
    verdict.status = StabilityStatus::Unstable;
    verdict.certificate = cert;
    return verdict;
  }

  if (cmin < 0)
    throw ConsistencyError(
        "barycenter criterion says semistable but a candidate has negative weight");

  // Geometric interior test, cross-checked against the candidate minimum.
  if (gens.size() <= kMaxInteriorGens && n + 1 <= static_cast<int>(kMaxConvertDim)) {
    auto hull = polytope_from_points(gens);
    bool interior = hull.dim == n;
    for (const auto& h : hull.hrep) {
      if (h.equality)
        interior = interior && h.slack(q) == 0;
      else
        interior = interior && h.slack(q) > 0;
    }
    if (interior != (cmin > 0))
      throw ConsistencyError("interior membership disagrees with the candidate minimum");
  }

  if (on_wall) {
    verdict.status = StabilityStatus::StrictlySemistableOnWall;
    verdict.certificate = OnePS(wall_witness);
  } else if (cmin > 0) {
    verdict.status = StabilityStatus::StableInTestedFrames;
  } else {
    verdict.status = StabilityStatus::SemistableInTestedFrames;
  }
  return verdict;
}

StabilityVerdict git_check(const TupleConfig& t, const FrameStrategy& frames, long cap) {
  auto cases = build_frames(t.n, frames);
  StabilityVerdict overall;
  overall.status = StabilityStatus::StableInTestedFrames;
  bool first = true;
  for (const auto& fc : cases) {
    std::vector<Form> moved;
    for (const auto& f : t.forms) moved.push_back(substitute(f, fc.matrix));
    TupleConfig tc(t.n, std::move(moved), t.linearization);
    StabilityVerdict v = torus_semistable(tc, cap);
    overall.frames_tested.push_back(fc.label);
    if (first || severity(v.status) < severity(overall.status)) {
      overall.status = v.status;
      overall.certificate = v.certificate;
      overall.certificate_frame = v.certificate ? fc.label : "";
    }
    first = false;
  }
  return overall;
}

}  // namespace kstab
