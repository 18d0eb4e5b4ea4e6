#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kstab/forms.hpp"
#include "kstab/oneps.hpp"
#include "kstab/rational.hpp"

namespace kstab {

inline constexpr long kDefaultCap = 4096;

// Hilbert-Mumford weight of a hypersurface under a diagonal 1-PS.
long hm_weight(const Form& f, const OnePS& w);

// Finite candidate set: primitive sum-zero nullspace generators of (n-1)-sized
// subsets of the support-difference pool for the given ambient degrees, plus
// the coordinate-pair vectors e_i - e_j; canonicalized up to the Weyl action.
std::vector<OnePS> candidate_one_ps(int n, const std::vector<int>& degrees, long cap);

// Every permutation of every candidate, in both signs. The Weyl normalization
// of the candidates is undone here, where verdicts are actually evaluated.
std::vector<std::vector<long>> expand_candidates(const std::vector<OnePS>& canonical);

struct TupleConfig {
  int n = 0;
  std::vector<Form> forms;
  QVec linearization;  // positive weights, one per form

  TupleConfig(int n, std::vector<Form> forms, QVec linearization);

  std::vector<int> degrees() const;
};

enum class StabilityStatus {
  Unstable,
  StrictlySemistableOnWall,
  SemistableInTestedFrames,
  StableInTestedFrames,
};

std::string status_string(StabilityStatus s);

struct StabilityVerdict {
  StabilityStatus status = StabilityStatus::SemistableInTestedFrames;
  std::optional<OnePS> certificate;
  std::string certificate_frame;
  std::vector<std::string> frames_tested;
};

// Combined weight sum_j gamma_j mu(f_j, w) for a raw weight vector.
Rat combined_weight(const TupleConfig& t, const std::vector<long>& w);

// Minimum of the combined weight over the expanded candidate set.
Rat candidate_minimum(const TupleConfig& t, long cap = kDefaultCap);

// Minimum of the combined weight over every primitive sum-zero integer vector
// with |w_i| <= bound. Exponential in n; intended for n = 1 cross-checks.
Rat exhaustive_minimum(const TupleConfig& t, long bound);

// Diagonal-torus verdict: barycenter membership in the weighted Minkowski sum
// of the Newton polytopes, cross-checked against the candidate minimum.
StabilityVerdict torus_semistable(const TupleConfig& t, long cap = kDefaultCap);

enum class FrameStrategyKind { Identity, Permutations, UserMatrices, SeededRandom };

struct FrameStrategy {
  FrameStrategyKind kind = FrameStrategyKind::Identity;
  std::vector<QMatrix> matrices;  // UserMatrices
  unsigned long seed = 1;         // SeededRandom
  int random_count = 8;           // SeededRandom, identity is prepended
};

// Runs torus_semistable in every frame; the worst verdict wins. Unstable
// verdicts carry the certificate and the frame it was found in. Semistable
// and stable statuses are always relative to the tested frames.
StabilityVerdict git_check(const TupleConfig& t, const FrameStrategy& frames,
                           long cap = kDefaultCap);

}  // namespace kstab
