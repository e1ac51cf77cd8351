#ifndef MCDM_DECISION_MODEL_HPP
#define MCDM_DECISION_MODEL_HPP

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "mcdm/error.hpp"

namespace mcdm {

enum class Direction { Benefit, Cost };

constexpr Direction flipped(Direction d) noexcept {
  return d == Direction::Benefit ? Direction::Cost : Direction::Benefit;
}

constexpr std::string_view to_string(Direction d) noexcept {
  return d == Direction::Benefit ? "benefit" : "cost";
}

struct Criterion {
  std::string name;
  Direction direction = Direction::Benefit;

  friend bool operator==(const Criterion&, const Criterion&) = default;
};

/// Dense row-major grid of reals. Shared storage for the matrix types.
class Grid {
 public:
  Grid() = default;
  Grid(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }
  double& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }

  std::span<const double> row(std::size_t i) const noexcept {
    return {data_.data() + i * cols_, cols_};
  }

  std::vector<double> column(std::size_t j) const {
    std::vector<double> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
  }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

namespace detail {

template <typename Range, typename Key>
void require_unique_labels(const Range& items, Key key) {
  std::unordered_set<std::string> seen;
  for (const auto& item : items) {
    const std::string& label = key(item);
    if (label.empty()) throw Error(ErrorCode::EmptyLabel);
    if (!seen.insert(label).second) throw Error(ErrorCode::DuplicateLabel, label);
  }
}

}  // namespace detail

/// Alternatives x criteria grid of finite nonnegative ratings.
///
/// Immutable once built; every transformation returns a new matrix.
class DecisionMatrix {
 public:
  static DecisionMatrix create(std::vector<std::string> alternatives,
                               std::vector<Criterion> criteria,
                               const std::vector<std::vector<double>>& values) {
    if (alternatives.empty() || criteria.empty())
      throw Error(ErrorCode::DimensionMismatch, "need at least one alternative and one criterion");
    if (values.size() != alternatives.size())
      throw Error(ErrorCode::DimensionMismatch, "row count differs from alternative count");
    Grid grid(alternatives.size(), criteria.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (values[i].size() != criteria.size())
        throw Error(ErrorCode::DimensionMismatch, "row width differs from criterion count");
      for (std::size_t j = 0; j < criteria.size(); ++j) grid(i, j) = values[i][j];
    }
    return DecisionMatrix(std::move(alternatives), std::move(criteria), std::move(grid));
  }

  static DecisionMatrix create(std::vector<std::string> alternatives,
                               std::vector<Criterion> criteria, Grid values) {
    if (alternatives.empty() || criteria.empty())
      throw Error(ErrorCode::DimensionMismatch, "need at least one alternative and one criterion");
    if (values.rows() != alternatives.size() || values.cols() != criteria.size())
      throw Error(ErrorCode::DimensionMismatch, "grid shape differs from labels");
    return DecisionMatrix(std::move(alternatives), std::move(criteria), std::move(values));
  }

  std::size_t rows() const noexcept { return values_.rows(); }
  std::size_t cols() const noexcept { return values_.cols(); }

  const std::vector<std::string>& alternatives() const noexcept { return alternatives_; }
  const std::vector<Criterion>& criteria() const noexcept { return criteria_; }
  const Grid& values() const noexcept { return values_; }
  double at(std::size_t i, std::size_t j) const noexcept { return values_(i, j); }

  std::vector<Direction> directions() const {
    std::vector<Direction> out;
    out.reserve(criteria_.size());
    for (const auto& c : criteria_) out.push_back(c.direction);
    return out;
  }

  std::vector<std::string> criterion_names() const {
    std::vector<std::string> out;
    out.reserve(criteria_.size());
    for (const auto& c : criteria_) out.push_back(c.name);
    return out;
  }

  DecisionMatrix with_values(Grid values) const {
    return create(alternatives_, criteria_, std::move(values));
  }

  DecisionMatrix with_directions(std::span<const Direction> directions) const {
    if (directions.size() != cols())
      throw Error(ErrorCode::DimensionMismatch, "direction count differs from criterion count");
    auto criteria = criteria_;
    for (std::size_t j = 0; j < criteria.size(); ++j) criteria[j].direction = directions[j];
    return DecisionMatrix(alternatives_, std::move(criteria), values_);
  }

  DecisionMatrix without_alternative(std::size_t k) const {
    if (k >= rows()) throw Error(ErrorCode::OutOfRange, "alternative index");
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < rows(); ++i)
      if (i != k) keep.push_back(i);
    return select_rows(keep);
  }

  DecisionMatrix select_rows(std::span<const std::size_t> rows_to_keep) const {
    std::vector<std::string> labels;
    Grid grid(rows_to_keep.size(), cols());
    for (std::size_t r = 0; r < rows_to_keep.size(); ++r) {
      const std::size_t i = rows_to_keep[r];
      if (i >= rows()) throw Error(ErrorCode::OutOfRange, "alternative index");
      labels.push_back(alternatives_[i]);
      for (std::size_t j = 0; j < cols(); ++j) grid(r, j) = values_(i, j);
    }
    return create(std::move(labels), criteria_, std::move(grid));
  }

  friend bool operator==(const DecisionMatrix&, const DecisionMatrix&) = default;

 private:
  DecisionMatrix(std::vector<std::string> alternatives, std::vector<Criterion> criteria, Grid values)
      : alternatives_(std::move(alternatives)),
        criteria_(std::move(criteria)),
        values_(std::move(values)) {
    detail::require_unique_labels(alternatives_, [](const std::string& s) -> const std::string& { return s; });
    detail::require_unique_labels(criteria_, [](const Criterion& c) -> const std::string& { return c.name; });
    for (std::size_t i = 0; i < values_.rows(); ++i)
      for (double v : values_.row(i))
        if (!std::isfinite(v) || v < 0.0)
          throw Error(ErrorCode::InvalidValue, "ratings must be finite and nonnegative");
  }

  std::vector<std::string> alternatives_;
  std::vector<Criterion> criteria_;
  Grid values_;
};

inline DecisionMatrix new_matrix(std::vector<std::string> alternatives,
                                 std::vector<Criterion> criteria,
                                 const std::vector<std::vector<double>>& values) {
  return DecisionMatrix::create(std::move(alternatives), std::move(criteria), values);
}

/// Swaps the axes: criteria become alternatives and vice versa. The former
/// alternatives take `new_directions` as their criterion directions.
inline DecisionMatrix transpose(const DecisionMatrix& matrix, std::span<const Direction> new_directions) {
  if (new_directions.size() != matrix.rows())
    throw Error(ErrorCode::DimensionMismatch, "need one direction per row");
  std::vector<Criterion> criteria;
  criteria.reserve(matrix.rows());
  for (std::size_t i = 0; i < matrix.rows(); ++i)
    criteria.push_back({matrix.alternatives()[i], new_directions[i]});
  Grid grid(matrix.cols(), matrix.rows());
  for (std::size_t i = 0; i < matrix.rows(); ++i)
    for (std::size_t j = 0; j < matrix.cols(); ++j) grid(j, i) = matrix.at(i, j);
  return DecisionMatrix::create(matrix.criterion_names(), std::move(criteria), std::move(grid));
}

inline constexpr double kWeightSumTolerance = 1e-12;

/// Nonnegative criterion weights summing to one, tagged with the method
/// that produced them ("std_dev", "entropy", "equal", "manual", "ahp").
class WeightVector {
 public:
  WeightVector(std::vector<double> weights, std::string method)
      : weights_(std::move(weights)), method_(std::move(method)) {
    if (weights_.empty()) throw Error(ErrorCode::InvalidArity, "no weights");
    double sum = 0.0;
    for (double w : weights_) {
      if (!std::isfinite(w)) throw Error(ErrorCode::InvalidValue, "weights must be finite");
      if (w < 0.0) throw Error(ErrorCode::NegativeWeight);
      sum += w;
    }
    if (std::abs(sum - 1.0) > kWeightSumTolerance)
      throw Error(ErrorCode::InvalidValue, "weights must sum to 1");
  }

  std::size_t size() const noexcept { return weights_.size(); }
  double operator[](std::size_t j) const noexcept { return weights_[j]; }
  std::span<const double> values() const noexcept { return weights_; }
  const std::string& method() const noexcept { return method_; }

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<double> weights_;
  std::string method_;
};

struct TopsisRow {
  std::string label;
  double s_plus = 0.0;
  double s_minus = 0.0;
  double closeness = 0.0;
  int rank = 0;

  friend bool operator==(const TopsisRow&, const TopsisRow&) = default;
};

/// Rows in input alternative order.
struct TopsisResult {
  std::vector<TopsisRow> rows;

  std::size_t size() const noexcept { return rows.size(); }

  std::vector<double> closeness() const {
    std::vector<double> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(r.closeness);
    return out;
  }

  std::vector<int> ranks() const {
    std::vector<int> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(r.rank);
    return out;
  }

  friend bool operator==(const TopsisResult&, const TopsisResult&) = default;
};

}  // namespace mcdm

#endif  // MCDM_DECISION_MODEL_HPP
