#ifndef MCDM_WEIGHTING_HPP
#define MCDM_WEIGHTING_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mcdm/decision_model.hpp"
#include "mcdm/topsis.hpp"

namespace mcdm {

enum class StdDevBasis { Raw, VectorNormalized };

namespace detail {

inline bool is_constant(std::span<const double> xs) {
  return std::all_of(xs.begin(), xs.end(), [&](double x) { return x == xs.front(); });
}

// Sample standard deviation (divisor n - 1). Constant input yields exactly 0.
inline double sample_std_dev(std::span<const double> xs) {
  if (xs.size() < 2 || is_constant(xs)) return 0.0;
  double mean = 0.0;
  for (double x : xs) mean += x;
  mean /= static_cast<double>(xs.size());
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  return std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

inline WeightVector normalize_scores(std::vector<double> scores, std::string method) {
  double total = 0.0;
  for (double s : scores) total += s;
  for (double& s : scores) s /= total;
  return WeightVector(std::move(scores), std::move(method));
}

}  // namespace detail

inline WeightVector equal_weights(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArity, "need at least one criterion");
  return WeightVector(std::vector<double>(n, 1.0 / static_cast<double>(n)), "equal");
}

inline WeightVector manual_weights(std::span<const double> values) {
  if (values.empty()) throw Error(ErrorCode::InvalidArity, "no weights given");
  double total = 0.0;
  for (double v : values) {
    if (!std::isfinite(v)) throw Error(ErrorCode::InvalidValue, "weights must be finite");
    if (v < 0.0) throw Error(ErrorCode::NegativeWeight);
    total += v;
  }
  if (total == 0.0) throw Error(ErrorCode::AllZero);
  return detail::normalize_scores({values.begin(), values.end()}, "manual");
}

/// w_j proportional to the sample standard deviation of column j, taken over
/// the raw ratings or over the vector-normalized ratings.
inline WeightVector std_dev_weights(const DecisionMatrix& matrix,
                                   StdDevBasis basis = StdDevBasis::VectorNormalized) {
  if (matrix.rows() < 2) throw Error(ErrorCode::InsufficientRows, "need at least two alternatives");
  const Grid basis_values =
      basis == StdDevBasis::Raw ? matrix.values() : vector_normalize(matrix).values;
  std::vector<double> sigma(basis_values.cols());
  double total = 0.0;
  for (std::size_t j = 0; j < sigma.size(); ++j) {
    sigma[j] = detail::sample_std_dev(basis_values.column(j));
    total += sigma[j];
  }
  if (total == 0.0) throw Error(ErrorCode::DegenerateMatrix, "every column is constant");
  return detail::normalize_scores(std::move(sigma), "std_dev");
}

/// Shannon-entropy weights: columns whose share distribution is closer to
/// uniform carry less information and receive less weight.
inline WeightVector entropy_weights(const DecisionMatrix& matrix) {
  const std::size_t m = matrix.rows();
  if (m < 2) throw Error(ErrorCode::InsufficientRows, "need at least two alternatives");
  const double inv_log_m = 1.0 / std::log(static_cast<double>(m));
  std::vector<double> divergence(matrix.cols());
  double total = 0.0;
  for (std::size_t j = 0; j < matrix.cols(); ++j) {
    const auto col = matrix.values().column(j);
    double col_sum = 0.0;
    for (double x : col) col_sum += x;
    if (col_sum == 0.0) throw Error(ErrorCode::ZeroColumn, matrix.criteria()[j].name);
    if (detail::is_constant(col)) {
      divergence[j] = 0.0;
      continue;
    }
    double h = 0.0;
    for (double x : col) {
      const double p = x / col_sum;
      if (p > 0.0) h -= p * std::log(p);
    }
    divergence[j] = std::max(0.0, 1.0 - h * inv_log_m);
    total += divergence[j];
  }
  if (total == 0.0) throw Error(ErrorCode::DegenerateMatrix, "no column carries information");
  return detail::normalize_scores(std::move(divergence), "entropy");
}

// ---------------------------------------------------------------------------
// AHP

inline constexpr double kReciprocityTolerance = 1e-9;

/// Saaty's random consistency index for n = 1..10.
inline constexpr std::array<double, 10> kRandomIndex = {0.0,  0.0,  0.58, 0.90, 1.12,
                                                        1.24, 1.32, 1.41, 1.45, 1.49};

inline std::optional<double> random_index(std::size_t n) {
  if (n == 0 || n > kRandomIndex.size()) return std::nullopt;
  return kRandomIndex[n - 1];
}

/// Reciprocal positive comparison matrix: a_ii = 1, a_ij * a_ji = 1.
class PairwiseMatrix {
 public:
  PairwiseMatrix(std::vector<std::string> labels, Grid comparisons)
      : labels_(std::move(labels)), comparisons_(std::move(comparisons)) {
    const std::size_t n = labels_.size();
    if (n == 0) throw Error(ErrorCode::InvalidArity, "empty pairwise matrix");
    if (comparisons_.rows() != n || comparisons_.cols() != n)
      throw Error(ErrorCode::DimensionMismatch, "pairwise matrix must be n x n");
    detail::require_unique_labels(labels_, [](const std::string& s) -> const std::string& { return s; });
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const double a = comparisons_(i, j);
        if (!std::isfinite(a) || a <= 0.0)
          throw Error(ErrorCode::InvalidPairwise, "entries must be finite and positive");
      }
      if (std::abs(comparisons_(i, i) - 1.0) > kReciprocityTolerance)
        throw Error(ErrorCode::InvalidPairwise, "diagonal must be 1");
      for (std::size_t j = i + 1; j < n; ++j)
        if (std::abs(comparisons_(i, j) * comparisons_(j, i) - 1.0) > kReciprocityTolerance)
          throw Error(ErrorCode::InvalidPairwise,
                      "entries (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") not reciprocal");
    }
  }

  /// Builds a_ij = w_i / w_j, which is perfectly consistent.
  static PairwiseMatrix from_priorities(std::vector<std::string> labels, std::span<const double> w) {
    const std::size_t n = w.size();
    Grid g(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) g(i, j) = i == j ? 1.0 : w[i] / w[j];
    return PairwiseMatrix(std::move(labels), std::move(g));
  }

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const Grid& comparisons() const noexcept { return comparisons_; }

 private:
  std::vector<std::string> labels_;
  Grid comparisons_;
};

struct AhpOutcome {
  WeightVector weights;
  double principal_eigenvalue = 0.0;
  double consistency_index = 0.0;
  // Absent when n exceeds the random-index table.
  std::optional<double> consistency_ratio;
  int iterations = 0;
};

inline constexpr int kPowerIterationCap = 10'000;
inline constexpr double kPowerIterationTolerance = 1e-12;
inline constexpr double kPowerIterationAcceptable = 1e-9;

/// Principal right eigenvector by power iteration with column-sum (L1)
/// normalization, plus the consistency index and ratio.
inline AhpOutcome ahp_weights(const PairwiseMatrix& pairwise) {
  const Grid& a = pairwise.comparisons();
  const std::size_t n = pairwise.size();
  std::vector<double> w(n, 1.0 / static_cast<double>(n));
  std::vector<double> next(n);
  double change = 0.0;
  int iter = 0;
  do {
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < n; ++j) s += a(i, j) * w[j];
      next[i] = s;
      total += s;
    }
    change = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      next[i] /= total;
      change = std::max(change, std::abs(next[i] - w[i]));
    }
    w.swap(next);
    ++iter;
  } while (change >= kPowerIterationTolerance && iter < kPowerIterationCap);
  if (change >= kPowerIterationAcceptable)
    throw Error(ErrorCode::NonConvergence, "change " + std::to_string(change) + " after cap");

  double lambda = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double aw = 0.0;
    for (std::size_t j = 0; j < n; ++j) aw += a(i, j) * w[j];
    lambda += aw / w[i];
  }
  lambda /= static_cast<double>(n);

  AhpOutcome out{detail::normalize_scores(std::move(w), "ahp"), lambda, 0.0, 0.0, iter};
  if (n > 2) {
    out.consistency_index = (lambda - static_cast<double>(n)) / static_cast<double>(n - 1);
    const auto ri = random_index(n);
    out.consistency_ratio = ri ? std::optional<double>(out.consistency_index / *ri) : std::nullopt;
  }
  return out;
}

}  // namespace mcdm

#endif  // MCDM_WEIGHTING_HPP
