#ifndef MCDM_INGEST_HPP
#define MCDM_INGEST_HPP

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mcdm/decision_model.hpp"
#include "mcdm/number_format.hpp"
#include "mcdm/weighting.hpp"

namespace mcdm {

namespace csv {

/// Splits text into lines, accepting LF or CRLF. Trailing blank lines are dropped.
inline std::vector<std::string_view> lines(std::string_view text) {
  std::vector<std::string_view> out;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    out.push_back(line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  while (!out.empty() && out.back().empty()) out.pop_back();
  return out;
}

inline std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    cells.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cells;
}

inline std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

inline void require_plain_label(std::string_view label) {
  if (label.find_first_of(",\r\n") != std::string_view::npos)
    throw Error(ErrorCode::MalformedHeader, "label contains a comma or line break: " + std::string(label));
}

}  // namespace csv

inline Direction parse_direction(std::string_view token) {
  const auto t = csv::lower(token);
  if (t == "benefit") return Direction::Benefit;
  if (t == "cost") return Direction::Cost;
  throw Error(ErrorCode::UnknownDirectionToken, std::string(token));
}

/// Parses the decision-matrix CSV grammar:
///
///     ,<crit1>,<crit2>,...
///     direction,<benefit|cost>,...
///     <alternative>,<v1>,<v2>,...
inline DecisionMatrix parse_matrix_csv(std::string_view text) {
  const auto rows = csv::lines(text);
  if (rows.size() < 2) throw Error(ErrorCode::MalformedHeader, "missing header or direction row");

  const auto header = csv::split(rows[0]);
  if (header.size() < 2 || !header[0].empty())
    throw Error(ErrorCode::MalformedHeader, "first line must be ',<criterion>,...'");
  const std::size_t n = header.size() - 1;
  for (std::size_t j = 1; j < header.size(); ++j)
    if (header[j].empty()) throw Error(ErrorCode::MalformedHeader, "empty criterion name");

  const auto dir_cells = csv::split(rows[1]);
  if (csv::lower(dir_cells[0]) != "direction")
    throw Error(ErrorCode::MalformedHeader, "second line must start with 'direction'");
  if (dir_cells.size() != n + 1) throw Error(ErrorCode::RaggedRow, "line 2");

  std::vector<Criterion> criteria;
  criteria.reserve(n);
  for (std::size_t j = 0; j < n; ++j)
    criteria.push_back({std::string(header[j + 1]), parse_direction(dir_cells[j + 1])});

  if (rows.size() < 3) throw Error(ErrorCode::EmptyInput, "no alternatives");
  std::vector<std::string> alternatives;
  std::vector<std::vector<double>> values;
  for (std::size_t r = 2; r < rows.size(); ++r) {
    const auto cells = csv::split(rows[r]);
    const std::string where = "line " + std::to_string(r + 1);
    if (cells.size() != n + 1) throw Error(ErrorCode::RaggedRow, where);
    alternatives.emplace_back(cells[0]);
    auto& row = values.emplace_back();
    row.reserve(n);
    for (std::size_t j = 1; j <= n; ++j) {
      const auto v = fmt::parse_decimal(cells[j]);
      if (!v) throw Error(ErrorCode::InvalidValue, where + ": '" + std::string(cells[j]) + "'");
      row.push_back(*v);
    }
  }
  return new_matrix(std::move(alternatives), std::move(criteria), values);
}

/// Inverse of parse_matrix_csv. Values use the shortest round-trip decimal.
inline std::string serialize_matrix_csv(const DecisionMatrix& matrix) {
  std::string out;
  for (const auto& c : matrix.criteria()) {
    csv::require_plain_label(c.name);
    out += ',';
    out += c.name;
  }
  out += "\ndirection";
  for (const auto& c : matrix.criteria()) {
    out += ',';
    out += to_string(c.direction);
  }
  out += '\n';
  for (std::size_t i = 0; i < matrix.rows(); ++i) {
    csv::require_plain_label(matrix.alternatives()[i]);
    out += matrix.alternatives()[i];
    for (double v : matrix.values().row(i)) {
      out += ',';
      out += fmt::shortest(v);
    }
    out += '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Survey aggregation

struct LikertRange {
  double low = 1.0;
  double high = 5.0;

  bool contains(double x) const noexcept { return x >= low && x <= high; }
};

struct SurveyResponse {
  std::string respondent_group;
  std::string item;
  double rating = 0.0;
};

enum class SurveyStatistic { Mean, StdDev };

/// Survey CSV: a header naming the columns, then one response per line. The
/// grouping column is selected by name; "item" and "rating" are required.
inline std::vector<SurveyResponse> parse_survey_csv(std::string_view text,
                                                    std::string_view group_column = "group",
                                                    LikertRange range = {}) {
  const auto rows = csv::lines(text);
  if (rows.empty()) throw Error(ErrorCode::EmptyInput, "no header");
  const auto header = csv::split(rows[0]);
  auto find = [&](std::string_view name) {
    const auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) throw Error(ErrorCode::MalformedHeader, "missing column '" + std::string(name) + "'");
    return static_cast<std::size_t>(it - header.begin());
  };
  const std::size_t g = find(group_column);
  const std::size_t q = find("item");
  const std::size_t r = find("rating");

  std::vector<SurveyResponse> out;
  for (std::size_t line = 1; line < rows.size(); ++line) {
    const auto cells = csv::split(rows[line]);
    const std::string where = "line " + std::to_string(line + 1);
    if (cells.size() != header.size()) throw Error(ErrorCode::RaggedRow, where);
    if (cells[g].empty() || cells[q].empty()) throw Error(ErrorCode::EmptyLabel, where);
    const auto v = fmt::parse_decimal(cells[r]);
    if (!v) throw Error(ErrorCode::InvalidValue, where + ": '" + std::string(cells[r]) + "'");
    if (!range.contains(*v)) throw Error(ErrorCode::InvalidValue, where + ": rating outside Likert range");
    out.push_back({std::string(cells[g]), std::string(cells[q]), *v});
  }
  return out;
}

/// One alternative per group and one criterion per item, both in
/// lexicographic order. Each cell holds the mean or sample standard
/// deviation of that group's ratings for that item. Directions default to
/// Benefit; `directions` overrides by item name.
inline DecisionMatrix aggregate_survey(const std::vector<SurveyResponse>& responses,
                                       SurveyStatistic statistic,
                                       const std::map<std::string, Direction>& directions = {},
                                       LikertRange range = {}) {
  if (responses.empty()) throw Error(ErrorCode::EmptyInput, "no responses");
  std::map<std::string, std::map<std::string, std::vector<double>>> cells;
  std::map<std::string, bool> items;
  for (const auto& r : responses) {
    if (r.respondent_group.empty() || r.item.empty()) throw Error(ErrorCode::EmptyLabel);
    if (!std::isfinite(r.rating) || !range.contains(r.rating))
      throw Error(ErrorCode::InvalidValue, "rating outside Likert range");
    cells[r.respondent_group][r.item].push_back(r.rating);
    items[r.item] = true;
  }

  std::vector<Criterion> criteria;
  for (const auto& [item, _] : items) {
    const auto d = directions.find(item);
    criteria.push_back({item, d == directions.end() ? Direction::Benefit : d->second});
  }

  std::vector<std::string> alternatives;
  std::vector<std::vector<double>> values;
  for (auto& [group, by_item] : cells) {
    alternatives.push_back(group);
    auto& row = values.emplace_back();
    for (const auto& [item, _] : items) {
      const auto it = by_item.find(item);
      if (it == by_item.end()) throw Error(ErrorCode::MissingCell, group + "/" + item);
      auto& ratings = it->second;
      // Sorting makes the floating-point sums independent of response order.
      std::sort(ratings.begin(), ratings.end());
      if (statistic == SurveyStatistic::Mean) {
        double sum = 0.0;
        for (double x : ratings) sum += x;
        row.push_back(sum / static_cast<double>(ratings.size()));
      } else {
        if (ratings.size() < 2)
          throw Error(ErrorCode::InsufficientData, group + "/" + item + " has fewer than 2 responses");
        row.push_back(detail::sample_std_dev(ratings));
      }
    }
  }
  return new_matrix(std::move(alternatives), std::move(criteria), values);
}

/// Pairwise CSV: a header of n labels, then n rows of n positive decimals.
inline PairwiseMatrix parse_pairwise_csv(std::string_view text) {
  const auto rows = csv::lines(text);
  if (rows.empty()) throw Error(ErrorCode::MalformedHeader, "missing label row");
  const auto header = csv::split(rows[0]);
  std::vector<std::string> labels(header.begin(), header.end());
  const std::size_t n = labels.size();
  if (rows.size() != n + 1)
    throw Error(ErrorCode::DimensionMismatch, "expected " + std::to_string(n) + " comparison rows");
  Grid g(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto cells = csv::split(rows[i + 1]);
    const std::string where = "line " + std::to_string(i + 2);
    if (cells.size() != n) throw Error(ErrorCode::RaggedRow, where);
    for (std::size_t j = 0; j < n; ++j) {
      const auto v = fmt::parse_decimal(cells[j]);
      if (!v) throw Error(ErrorCode::InvalidValue, where + ": '" + std::string(cells[j]) + "'");
      g(i, j) = *v;
    }
  }
  return PairwiseMatrix(std::move(labels), std::move(g));
}

}  // namespace mcdm

#endif  // MCDM_INGEST_HPP
