#ifndef MCDM_SENSITIVITY_HPP
#define MCDM_SENSITIVITY_HPP

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mcdm/decision_model.hpp"
#include "mcdm/topsis.hpp"
#include "mcdm/weighting.hpp"

namespace mcdm {

inline constexpr double kDefaultStep = 0.01;
inline constexpr double kDefaultMaxDelta = 0.25;

/// Moves weight j by `delta` and rescales the others proportionally so the
/// vector still sums to one.
inline WeightVector perturb_weights(const WeightVector& weights, std::size_t j, double delta) {
  if (j >= weights.size()) throw Error(ErrorCode::OutOfRange, "criterion index");
  const double wj = weights[j];
  double target = wj + delta;
  if (!std::isfinite(target) || target < -kWeightSumTolerance || target > 1.0 + kWeightSumTolerance)
    throw Error(ErrorCode::OutOfRange, "weight would leave [0, 1]");
  target = std::clamp(target, 0.0, 1.0);
  if (delta == 0.0) return weights;
  if (wj == 1.0) {
    if (delta < 0.0) throw Error(ErrorCode::DegenerateBase, "other weights are all zero");
    return weights;
  }
  const double scale = (1.0 - target) / (1.0 - wj);
  std::vector<double> out(weights.values().begin(), weights.values().end());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = k == j ? target : out[k] * scale;
  return WeightVector(std::move(out), weights.method());
}

namespace detail {

inline bool perturbation_feasible(const WeightVector& weights, std::size_t j, double delta) {
  const double target = weights[j] + delta;
  if (target < -kWeightSumTolerance || target > 1.0 + kWeightSumTolerance) return false;
  return !(weights[j] == 1.0 && delta < 0.0);
}

}  // namespace detail

struct GridPoint {
  double delta = 0.0;
  bool feasible = false;
  std::vector<int> ranks;  // empty when infeasible

  friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

struct CriterionSensitivity {
  std::string criterion;
  double weight = 0.0;
  std::optional<double> flip_threshold;  // nullopt: no flip within the grid
  std::vector<GridPoint> points;

  friend bool operator==(const CriterionSensitivity&, const CriterionSensitivity&) = default;
};

struct SensitivityReport {
  std::vector<std::string> alternatives;
  std::vector<int> baseline_ranks;
  double step = kDefaultStep;
  double max_delta = kDefaultMaxDelta;
  std::vector<CriterionSensitivity> criteria;
  double stability_score = 1.0;

  friend bool operator==(const SensitivityReport&, const SensitivityReport&) = default;
};

/// Number of grid steps on each side of zero.
inline std::size_t steps_per_side(double step, double max_delta) {
  return static_cast<std::size_t>(std::floor(max_delta / step + 1e-9));
}

/// Sweeps every criterion's weight over -K*step..-step and step..K*step
/// (K = floor(max_delta / step)), reranking at each feasible point.
/// Infeasible points stay in the grid, flagged, so every criterion has 2K points.
inline SensitivityReport rank_stability(const DecisionMatrix& matrix, const WeightVector& weights,
                                        double step = kDefaultStep, double max_delta = kDefaultMaxDelta) {
  if (!(step > 0.0) || !(step <= max_delta) || !(max_delta <= 1.0))
    throw Error(ErrorCode::InvalidArgument, "sensitivity grid requires 0 < step <= max_delta <= 1");
  if (weights.size() != matrix.cols())
    throw Error(ErrorCode::DimensionMismatch, "weight count differs from criterion count");

  SensitivityReport report;
  report.alternatives = matrix.alternatives();
  report.baseline_ranks = topsis_rank(matrix, weights).ranks();
  report.step = step;
  report.max_delta = max_delta;
  const std::size_t baseline_top = top_alternative(report.baseline_ranks);
  const auto k_max = static_cast<long>(steps_per_side(step, max_delta));

  std::size_t feasible = 0;
  std::size_t stable = 0;
  for (std::size_t j = 0; j < matrix.cols(); ++j) {
    CriterionSensitivity cs{matrix.criteria()[j].name, weights[j], std::nullopt, {}};
    for (long k = -k_max; k <= k_max; ++k) {
      if (k == 0) continue;
      GridPoint point{static_cast<double>(k) * step, false, {}};
      if (detail::perturbation_feasible(weights, j, point.delta)) {
        point.feasible = true;
        point.ranks = topsis_rank(matrix, perturb_weights(weights, j, point.delta)).ranks();
        ++feasible;
        if (top_alternative(point.ranks) == baseline_top) {
          ++stable;
        } else if (!cs.flip_threshold || std::abs(point.delta) < *cs.flip_threshold) {
          cs.flip_threshold = std::abs(point.delta);
        }
      }
      cs.points.push_back(std::move(point));
    }
    report.criteria.push_back(std::move(cs));
  }
  report.stability_score = feasible == 0 ? 1.0 : static_cast<double>(stable) / static_cast<double>(feasible);
  return report;
}

// ---------------------------------------------------------------------------
// Leave-one-out rank reversal

enum class RecomputeWeights { None, StdDevRaw, StdDevNormalized, Entropy };

struct RankReversal {
  std::string first;   // ranked ahead in the baseline
  std::string second;  // ranked ahead after removal

  friend bool operator==(const RankReversal&, const RankReversal&) = default;
};

struct LeaveOneOutEntry {
  std::string removed;
  std::vector<std::string> survivors;
  std::vector<int> ranks;  // reduced-run ranks, aligned with survivors
  std::vector<RankReversal> reversals;
  std::optional<std::string> error;  // reduced run failed (e.g. identical survivors)

  friend bool operator==(const LeaveOneOutEntry&, const LeaveOneOutEntry&) = default;
};

struct RankReversalReport {
  std::vector<std::string> alternatives;
  std::vector<int> baseline_ranks;
  std::vector<LeaveOneOutEntry> entries;

  std::size_t reversal_count() const {
    std::size_t n = 0;
    for (const auto& e : entries) n += e.reversals.size();
    return n;
  }

  friend bool operator==(const RankReversalReport&, const RankReversalReport&) = default;
};

inline WeightVector recompute_weights(const DecisionMatrix& matrix, RecomputeWeights how,
                                      const WeightVector& fallback) {
  switch (how) {
    case RecomputeWeights::None: return fallback;
    case RecomputeWeights::StdDevRaw: return std_dev_weights(matrix, StdDevBasis::Raw);
    case RecomputeWeights::StdDevNormalized: return std_dev_weights(matrix, StdDevBasis::VectorNormalized);
    case RecomputeWeights::Entropy: return entropy_weights(matrix);
  }
  return fallback;
}

/// Removes each alternative in turn, reruns TOPSIS on the rest, and lists
/// every surviving pair whose relative order differs from the baseline.
inline RankReversalReport leave_one_out(const DecisionMatrix& matrix, const WeightVector& weights,
                                        RecomputeWeights recompute = RecomputeWeights::None) {
  if (matrix.rows() < 3) throw Error(ErrorCode::TooFewAlternatives, "need at least three alternatives");
  RankReversalReport report;
  report.alternatives = matrix.alternatives();
  report.baseline_ranks = topsis_rank(matrix, weights).ranks();

  for (std::size_t k = 0; k < matrix.rows(); ++k) {
    LeaveOneOutEntry entry;
    entry.removed = matrix.alternatives()[k];
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < matrix.rows(); ++i)
      if (i != k) kept.push_back(i);
    const auto reduced = matrix.select_rows(kept);
    entry.survivors = reduced.alternatives();
    try {
      entry.ranks = topsis_rank(reduced, recompute_weights(reduced, recompute, weights)).ranks();
    } catch (const Error& e) {
      entry.error = e.what();
      report.entries.push_back(std::move(entry));
      continue;
    }
    for (std::size_t a = 0; a < kept.size(); ++a) {
      for (std::size_t b = a + 1; b < kept.size(); ++b) {
        const bool before = report.baseline_ranks[kept[a]] < report.baseline_ranks[kept[b]];
        const bool after = entry.ranks[a] < entry.ranks[b];
        if (before != after) {
          const auto& la = entry.survivors[a];
          const auto& lb = entry.survivors[b];
          entry.reversals.push_back(before ? RankReversal{la, lb} : RankReversal{lb, la});
        }
      }
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

}  // namespace mcdm

#endif  // MCDM_SENSITIVITY_HPP
