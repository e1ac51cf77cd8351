#ifndef MCDM_TOPSIS_HPP
#define MCDM_TOPSIS_HPP

#include <algorithm>
#include <cmath>
#include <numeric>
#include <span>
#include <vector>

#include "mcdm/decision_model.hpp"

namespace mcdm {

// Column-normalized ratings, r_ij = x_ij / ||x_.j||.
struct NormalizedMatrix {
  Grid values;
};

// Normalized ratings scaled by criterion weight, v_ij = w_j * r_ij.
struct WeightedMatrix {
  Grid values;
};

struct IdealPoints {
  std::vector<double> ideal;
  std::vector<double> anti_ideal;
};

struct Separation {
  double s_plus = 0.0;
  double s_minus = 0.0;
};

inline NormalizedMatrix vector_normalize(const Grid& values) {
  Grid out(values.rows(), values.cols());
  for (std::size_t j = 0; j < values.cols(); ++j) {
    double sum_sq = 0.0;
    for (std::size_t i = 0; i < values.rows(); ++i) sum_sq += values(i, j) * values(i, j);
    if (sum_sq == 0.0) throw Error(ErrorCode::ZeroColumn, "column " + std::to_string(j + 1));
    const double norm = std::sqrt(sum_sq);
    for (std::size_t i = 0; i < values.rows(); ++i) out(i, j) = values(i, j) / norm;
  }
  return {std::move(out)};
}

inline NormalizedMatrix vector_normalize(const DecisionMatrix& matrix) {
  return vector_normalize(matrix.values());
}

inline WeightedMatrix apply_weights(const NormalizedMatrix& normalized, const WeightVector& weights) {
  const Grid& r = normalized.values;
  if (weights.size() != r.cols())
    throw Error(ErrorCode::DimensionMismatch, "weight count differs from criterion count");
  Grid out(r.rows(), r.cols());
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j) out(i, j) = weights[j] * r(i, j);
  return {std::move(out)};
}

inline IdealPoints ideal_points(const WeightedMatrix& weighted, std::span<const Direction> directions) {
  const Grid& v = weighted.values;
  if (directions.size() != v.cols())
    throw Error(ErrorCode::DimensionMismatch, "direction count differs from criterion count");
  IdealPoints points;
  points.ideal.resize(v.cols());
  points.anti_ideal.resize(v.cols());
  for (std::size_t j = 0; j < v.cols(); ++j) {
    const auto col = v.column(j);
    const auto [lo, hi] = std::minmax_element(col.begin(), col.end());
    if (directions[j] == Direction::Benefit) {
      points.ideal[j] = *hi;
      points.anti_ideal[j] = *lo;
    } else {
      points.ideal[j] = *lo;
      points.anti_ideal[j] = *hi;
    }
  }
  return points;
}

inline std::vector<Separation> separations(const WeightedMatrix& weighted, const IdealPoints& points) {
  const Grid& v = weighted.values;
  if (points.ideal.size() != v.cols() || points.anti_ideal.size() != v.cols())
    throw Error(ErrorCode::DimensionMismatch, "ideal point length differs from criterion count");
  std::vector<Separation> out(v.rows());
  for (std::size_t i = 0; i < v.rows(); ++i) {
    double to_ideal = 0.0;
    double to_anti = 0.0;
    for (std::size_t j = 0; j < v.cols(); ++j) {
      const double dp = v(i, j) - points.ideal[j];
      const double dm = v(i, j) - points.anti_ideal[j];
      to_ideal += dp * dp;
      to_anti += dm * dm;
    }
    out[i] = {std::sqrt(to_ideal), std::sqrt(to_anti)};
  }
  return out;
}

inline double closeness(double s_plus, double s_minus) {
  if (!(s_plus >= 0.0) || !(s_minus >= 0.0))
    throw Error(ErrorCode::InvalidValue, "separations must be nonnegative");
  const double total = s_plus + s_minus;
  if (total == 0.0) throw Error(ErrorCode::DegenerateAlternative, "both separations are zero");
  return s_minus / total;
}

/// Rank 1 goes to the largest value; equal values keep input order.
inline std::vector<int> rank(std::span<const double> closeness_values) {
  std::vector<std::size_t> order(closeness_values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return closeness_values[a] > closeness_values[b];
  });
  std::vector<int> ranks(closeness_values.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) ranks[order[pos]] = static_cast<int>(pos + 1);
  return ranks;
}

/// Full pipeline: normalize, weight, ideal points, separations, closeness, rank.
/// A single alternative is rejected (closeness would be 0/0).
inline TopsisResult topsis_rank(const DecisionMatrix& matrix, const WeightVector& weights) {
  if (matrix.rows() < 2)
    throw Error(ErrorCode::DegenerateAlternative, "need at least two alternatives");
  const auto weighted = apply_weights(vector_normalize(matrix), weights);
  const auto directions = matrix.directions();
  const auto seps = separations(weighted, ideal_points(weighted, directions));

  TopsisResult result;
  result.rows.reserve(matrix.rows());
  std::vector<double> c(matrix.rows());
  for (std::size_t i = 0; i < matrix.rows(); ++i) {
    c[i] = closeness(seps[i].s_plus, seps[i].s_minus);
    result.rows.push_back({matrix.alternatives()[i], seps[i].s_plus, seps[i].s_minus, c[i], 0});
  }
  const auto ranks = rank(c);
  for (std::size_t i = 0; i < ranks.size(); ++i) result.rows[i].rank = ranks[i];
  return result;
}

/// Index of the rank-1 alternative.
inline std::size_t top_alternative(std::span<const int> ranks) {
  return static_cast<std::size_t>(std::find(ranks.begin(), ranks.end(), 1) - ranks.begin());
}

}  // namespace mcdm

#endif  // MCDM_TOPSIS_HPP
