#ifndef MCDM_REPRO_HPP
#define MCDM_REPRO_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mcdm/decision_model.hpp"
#include "mcdm/topsis.hpp"
#include "mcdm/weighting.hpp"

// Reproduction harness for the job-satisfaction study: the published
// decision matrix (nine surveyed alternatives rating eleven parameters), the
// published TOPSIS table, and a sweep over the pipeline choices the study
// leaves open.

namespace mcdm::repro {

inline const std::vector<std::string>& parameter_names() {
  static const std::vector<std::string> names = {
      "Average working hours",
      "Satisfy with the pay scale with respect to the work load",
      "Do you get ample opportunities at workplace to develop a skill",
      "Satisfied with the working environment in an organization",
      "Satisfied by the appraisals given by management",
      "Satisfied with the nature of work allotted",
      "Get the appreciation of the work/tasks conducted",
      "Satisfied with the behaviour of peer employees in an organization",
      "Satisfied with the policies and rules & regulation by the management",
      "Satisfy with the designation allotted in an organization",
      "Seeking to change the job if got a high pay scale",
  };
  return names;
}

/// The 9 x 11 published matrix. The first three parameters are
/// non-beneficial (cost), the remaining eight beneficial.
inline DecisionMatrix builtin_fixture() {
  static const std::vector<std::vector<double>> values = {
      {3.53, 3.64, 4.09, 3.82, 3.91, 3.48, 3.79, 3.23, 3.8, 3.93, 4.13},
      {4.08, 3.8, 3.52, 3.61, 3.46, 3.28, 3.3, 3.94, 3.66, 3.59, 3.84},
      {3.5, 4.11, 3.92, 3.66, 4.05, 3.87, 3.84, 4.12, 3.92, 4.11, 3.3},
      {3.35, 3.76, 3.15, 3.31, 3.94, 3.62, 3.79, 3.44, 3.46, 4.07, 3.93},
      {4.13, 3.3, 3.94, 3.8, 3.96, 4.13, 3.55, 3.43, 3.2, 0.92, 0.82},
      {1.03, 0.95, 0.92, 0.91, 1.25, 1.04, 0.95, 1.16, 0.95, 1.01, 1.11},
      {1, 0.99, 0.93, 1.05, 0.96, 0.93, 1.02, 0.88, 1.22, 1.15, 0.91},
      {1.23, 1.01, 0.8, 1.32, 1.67, 0.89, 0.98, 0.96, 0.91, 0.93, 0.92},
      {0.96, 0.96, 1.04, 1.2, 1.67, 0.87, 0.96, 0.98, 0.95, 0.97, 0.91},
  };
  std::vector<Criterion> criteria;
  for (std::size_t j = 0; j < parameter_names().size(); ++j)
    criteria.push_back({parameter_names()[j], j < 3 ? Direction::Cost : Direction::Benefit});
  std::vector<std::string> alternatives;
  for (int i = 1; i <= 9; ++i) alternatives.push_back(std::to_string(i));
  return new_matrix(std::move(alternatives), std::move(criteria), values);
}

/// The published ranking table, verbatim (Si+, Si-, ci, rank per parameter).
inline TopsisResult builtin_expected() {
  struct Published {
    double s_minus, s_plus, ci;
    int rank;
  };
  static constexpr std::array<Published, 11> rows = {{
      {0.089602, 0.055112, 0.619168, 3},
      {0.08404, 0.054844, 0.605111, 4},
      {0.091001, 0.055916, 0.619405, 2},
      {0.088131, 0.04766, 0.64902, 1},
      {0.071592, 0.078387, 0.477346, 6},
      {0.058143, 0.091976, 0.387313, 7},
      {0.057905, 0.092936, 0.383884, 9},
      {0.058012, 0.092506, 0.385416, 8},
      {0.057692, 0.092693, 0.383628, 10},
      {0.047449, 0.087666, 0.351176, 11},
      {0.060185, 0.065686, 0.478147, 5},
  }};
  TopsisResult out;
  for (std::size_t i = 0; i < rows.size(); ++i)
    out.rows.push_back({parameter_names()[i], rows[i].s_plus, rows[i].s_minus, rows[i].ci, rows[i].rank});
  return out;
}

/// Kendall tau-a between two rankings of the same items.
inline double kendall_tau(std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "rankings differ in length");
  const std::size_t n = a.size();
  if (n < 2) return 1.0;
  long score = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const int da = (a[i] > a[j]) - (a[i] < a[j]);
      const int db = (b[i] > b[j]) - (b[i] < b[j]);
      score += da * db;
    }
  return static_cast<double>(score) / (static_cast<double>(n) * static_cast<double>(n - 1) / 2.0);
}

struct RankComparison {
  std::size_t compared_rows = 0;
  double max_abs_ci_delta = 0.0;
  double mean_abs_ci_delta = 0.0;
  int exact_rank_matches = 0;
  double kendall_tau = 1.0;

  friend bool operator==(const RankComparison&, const RankComparison&) = default;
};

/// Compares rows by position over the common prefix of both tables. Ranks on
/// both sides are recomputed within that prefix, so a 9-row result is scored
/// against the order of the first nine published rows.
inline RankComparison compare_to_expected(const TopsisResult& computed,
                                          const TopsisResult& expected = builtin_expected()) {
  const std::size_t k = std::min(computed.size(), expected.size());
  if (k == 0) throw Error(ErrorCode::EmptyInput, "nothing to compare");
  RankComparison cmp;
  cmp.compared_rows = k;
  std::vector<double> got(k);
  std::vector<double> want(k);
  double total = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    got[i] = computed.rows[i].closeness;
    want[i] = expected.rows[i].closeness;
    const double d = std::abs(got[i] - want[i]);
    cmp.max_abs_ci_delta = std::max(cmp.max_abs_ci_delta, d);
    total += d;
  }
  cmp.mean_abs_ci_delta = total / static_cast<double>(k);

  std::vector<int> got_rank(k);
  std::vector<int> want_rank(k);
  for (std::size_t i = 0; i < k; ++i) {
    got_rank[i] = computed.rows[i].rank;
    want_rank[i] = expected.rows[i].rank;
  }
  if (k < computed.size()) got_rank = mcdm::rank(got);
  if (k < expected.size()) want_rank = mcdm::rank(want);
  for (std::size_t i = 0; i < k; ++i) cmp.exact_rank_matches += got_rank[i] == want_rank[i];
  cmp.kendall_tau = kendall_tau(got_rank, want_rank);
  return cmp;
}

/// Recomputes ci and rank from the published separations alone.
inline TopsisResult recompute_from_separations(const TopsisResult& published) {
  TopsisResult out = published;
  std::vector<double> c;
  for (auto& row : out.rows) {
    row.closeness = closeness(row.s_plus, row.s_minus);
    c.push_back(row.closeness);
  }
  const auto ranks = mcdm::rank(c);
  for (std::size_t i = 0; i < ranks.size(); ++i) out.rows[i].rank = ranks[i];
  return out;
}

// ---------------------------------------------------------------------------
// Configuration sweep

enum class Orientation { AsPrinted, Transposed };
enum class WeightMethod { StdDevRaw, StdDevNormalized, Equal, Entropy };
enum class RowSubset { AllRows, Rows1to5 };

inline constexpr std::string_view to_string(Orientation o) noexcept {
  return o == Orientation::AsPrinted ? "AsPrinted" : "Transposed";
}

inline constexpr std::string_view to_string(WeightMethod m) noexcept {
  switch (m) {
    case WeightMethod::StdDevRaw: return "StdDevRaw";
    case WeightMethod::StdDevNormalized: return "StdDevNormalized";
    case WeightMethod::Equal: return "Equal";
    case WeightMethod::Entropy: return "Entropy";
  }
  return "?";
}

inline constexpr std::string_view to_string(RowSubset s) noexcept {
  return s == RowSubset::AllRows ? "AllRows" : "Rows1to5";
}

struct ReproConfig {
  Orientation orientation = Orientation::AsPrinted;
  WeightMethod weight_method = WeightMethod::StdDevNormalized;
  RowSubset row_subset = RowSubset::AllRows;

  // Row slicing only makes sense once rows have become criteria.
  bool valid() const noexcept {
    return row_subset == RowSubset::AllRows || orientation == Orientation::Transposed;
  }

  std::string name() const {
    std::string out(to_string(orientation));
    out += '/';
    out += to_string(weight_method);
    out += '/';
    out += to_string(row_subset);
    return out;
  }

  friend bool operator==(const ReproConfig&, const ReproConfig&) = default;
};

/// Every valid configuration, in enumeration order.
inline std::vector<ReproConfig> all_configs() {
  std::vector<ReproConfig> out;
  for (auto o : {Orientation::AsPrinted, Orientation::Transposed})
    for (auto m : {WeightMethod::StdDevRaw, WeightMethod::StdDevNormalized, WeightMethod::Equal,
                   WeightMethod::Entropy})
      for (auto s : {RowSubset::AllRows, RowSubset::Rows1to5}) {
        ReproConfig c{o, m, s};
        if (c.valid()) out.push_back(c);
      }
  return out;
}

struct ReproEntry {
  ReproConfig config;
  std::optional<std::string> error;
  RankComparison comparison;  // meaningful only without error
  std::vector<double> weights;
  TopsisResult computed;

  bool ok() const noexcept { return !error.has_value(); }

  friend bool operator==(const ReproEntry&, const ReproEntry&) = default;
};

struct ReproReport {
  RankComparison table_consistency;
  std::vector<ReproEntry> entries;
  std::optional<std::size_t> best;  // index into entries

  const ReproEntry* best_entry() const { return best ? &entries[*best] : nullptr; }

  friend bool operator==(const ReproReport&, const ReproReport&) = default;
};

inline DecisionMatrix config_matrix(const ReproConfig& config) {
  if (!config.valid()) throw Error(ErrorCode::InvalidArgument, "row subset requires transposed orientation");
  const auto fixture = builtin_fixture();
  if (config.orientation == Orientation::AsPrinted) return fixture;
  auto rows = fixture;
  if (config.row_subset == RowSubset::Rows1to5) {
    const std::array<std::size_t, 5> first_five = {0, 1, 2, 3, 4};
    rows = fixture.select_rows(first_five);
  }
  // Every surveyed row is a satisfaction rating, so all become benefit criteria.
  const std::vector<Direction> benefit(rows.rows(), Direction::Benefit);
  return transpose(rows, benefit);
}

inline WeightVector config_weights(const DecisionMatrix& matrix, WeightMethod method) {
  switch (method) {
    case WeightMethod::StdDevRaw: return std_dev_weights(matrix, StdDevBasis::Raw);
    case WeightMethod::StdDevNormalized: return std_dev_weights(matrix, StdDevBasis::VectorNormalized);
    case WeightMethod::Equal: return equal_weights(matrix.cols());
    case WeightMethod::Entropy: return entropy_weights(matrix);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown weight method");
}

/// Runs one configuration. Pipeline failures are captured in the entry.
inline ReproEntry reproduce(const ReproConfig& config) {
  ReproEntry entry;
  entry.config = config;
  try {
    const auto matrix = config_matrix(config);
    const auto weights = config_weights(matrix, config.weight_method);
    entry.weights.assign(weights.values().begin(), weights.values().end());
    entry.computed = topsis_rank(matrix, weights);
    entry.comparison = compare_to_expected(entry.computed);
  } catch (const Error& e) {
    entry.error = e.what();
  }
  return entry;
}

/// Lowest mean |ci delta| wins; ties go to the higher tau, then to the
/// earlier configuration.
inline std::optional<std::size_t> select_best(const std::vector<ReproEntry>& entries) {
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (!entries[i].ok()) continue;
    if (!best) {
      best = i;
      continue;
    }
    const auto& a = entries[i].comparison;
    const auto& b = entries[*best].comparison;
    if (a.mean_abs_ci_delta < b.mean_abs_ci_delta ||
        (a.mean_abs_ci_delta == b.mean_abs_ci_delta && a.kendall_tau > b.kendall_tau))
      best = i;
  }
  return best;
}

inline ReproReport run_sweep() {
  ReproReport report;
  const auto expected = builtin_expected();
  report.table_consistency = compare_to_expected(recompute_from_separations(expected), expected);
  for (const auto& config : all_configs()) report.entries.push_back(reproduce(config));
  report.best = select_best(report.entries);
  return report;
}

}  // namespace mcdm::repro

#endif  // MCDM_REPRO_HPP
