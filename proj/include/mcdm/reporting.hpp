#ifndef MCDM_REPORTING_HPP
#define MCDM_REPORTING_HPP

#include <algorithm>
#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "mcdm/decision_model.hpp"
#include "mcdm/number_format.hpp"
#include "mcdm/repro.hpp"
#include "mcdm/sensitivity.hpp"
#include "mcdm/weighting.hpp"

namespace mcdm {

using Json = nlohmann::json;

enum class ReportKind { TopsisTable, WeightTable, SensitivityTable, ReproTable };

struct ReportDocument {
  ReportKind kind;
  std::string body;
};

// ---------------------------------------------------------------------------
// Text tables: one tab between columns, LF line endings, reals at 6 decimals.

namespace detail {

inline std::string join_tabs(std::initializer_list<std::string_view> cells) {
  std::string out;
  bool first = true;
  for (auto c : cells) {
    if (!first) out += '\t';
    out += c;
    first = false;
  }
  out += '\n';
  return out;
}

inline std::string fixed6(double v) { return fmt::fixed(v, 6); }

}  // namespace detail

inline std::string render_topsis_table(const TopsisResult& result) {
  if (result.size() < 2) throw Error(ErrorCode::InvalidArgument, "table needs at least two alternatives");
  std::string out = detail::join_tabs({"Alternative", "Si-", "Si+", "ci", "rank"});
  for (const auto& r : result.rows)
    out += detail::join_tabs({r.label, detail::fixed6(r.s_minus), detail::fixed6(r.s_plus),
                              detail::fixed6(r.closeness), std::to_string(r.rank)});
  return out;
}

inline std::string render_weight_table(const WeightVector& weights, const std::vector<std::string>& criteria) {
  if (criteria.size() != weights.size())
    throw Error(ErrorCode::DimensionMismatch, "weight count differs from criterion count");
  std::string out = detail::join_tabs({"Criterion", "weight"});
  for (std::size_t j = 0; j < weights.size(); ++j)
    out += detail::join_tabs({criteria[j], detail::fixed6(weights[j])});
  out += detail::join_tabs({"method", weights.method()});
  return out;
}

inline std::string render_sensitivity_table(const SensitivityReport& report) {
  const std::size_t baseline_top = top_alternative(report.baseline_ranks);
  std::string out = detail::join_tabs({"Criterion", "weight", "flip_threshold", "feasible_points", "stable_points"});
  for (const auto& c : report.criteria) {
    std::size_t feasible = 0;
    std::size_t stable = 0;
    for (const auto& p : c.points) {
      if (!p.feasible) continue;
      ++feasible;
      stable += top_alternative(p.ranks) == baseline_top;
    }
    out += detail::join_tabs({c.criterion, detail::fixed6(c.weight),
                              c.flip_threshold ? detail::fixed6(*c.flip_threshold) : "none",
                              std::to_string(feasible), std::to_string(stable)});
  }
  out += detail::join_tabs({"baseline_top", baseline_top < report.alternatives.size()
                                                ? report.alternatives[baseline_top]
                                                : std::string("-")});
  out += detail::join_tabs({"stability_score", detail::fixed6(report.stability_score)});
  return out;
}

inline std::string render_rank_reversal_table(const RankReversalReport& report) {
  std::string out = detail::join_tabs({"Removed", "status", "reversals"});
  for (const auto& e : report.entries) {
    std::string pairs;
    for (const auto& r : e.reversals) {
      if (!pairs.empty()) pairs += "; ";
      pairs += r.first + " > " + r.second;
    }
    out += detail::join_tabs({e.removed, e.error ? *e.error : std::string("ok"), pairs.empty() ? "-" : pairs});
  }
  return out;
}

inline std::string render_repro_table(const repro::ReproReport& report) {
  std::string out = detail::join_tabs(
      {"config", "rows", "max_abs_ci_delta", "mean_abs_ci_delta", "exact_rank_matches", "kendall_tau", "status"});
  const auto& tc = report.table_consistency;
  out += detail::join_tabs({"TableConsistency", std::to_string(tc.compared_rows), detail::fixed6(tc.max_abs_ci_delta),
                            detail::fixed6(tc.mean_abs_ci_delta), std::to_string(tc.exact_rank_matches),
                            detail::fixed6(tc.kendall_tau), tc.max_abs_ci_delta < 1e-5 ? "ok" : "mismatch"});
  for (const auto& e : report.entries) {
    if (!e.ok()) {
      out += detail::join_tabs({e.config.name(), "-", "-", "-", "-", "-", *e.error});
      continue;
    }
    const auto& c = e.comparison;
    out += detail::join_tabs({e.config.name(), std::to_string(c.compared_rows), detail::fixed6(c.max_abs_ci_delta),
                              detail::fixed6(c.mean_abs_ci_delta), std::to_string(c.exact_rank_matches),
                              detail::fixed6(c.kendall_tau), "ok"});
  }
  const auto* best = report.best_entry();
  if (!best) {
    out += detail::join_tabs({"best_config", "none"});
    return out;
  }
  out += detail::join_tabs({"best_config", best->config.name()});

  const auto expected = repro::builtin_expected();
  out += '\n';
  out += detail::join_tabs({"Alternative", "ci", "published_ci", "rank", "published_label"});
  for (std::size_t i = 0; i < best->computed.size(); ++i) {
    const auto& r = best->computed.rows[i];
    const bool has_pub = i < expected.size();
    out += detail::join_tabs({r.label, detail::fixed6(r.closeness),
                              has_pub ? detail::fixed6(expected.rows[i].closeness) : "-", std::to_string(r.rank),
                              has_pub ? expected.rows[i].label : "-"});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Canonical JSON: sorted keys, no whitespace, reals in shortest round-trip form.

namespace detail {

inline void write_number(std::string& out, double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  std::string_view s(buf, static_cast<std::size_t>(end - buf));
  out += s;
  if (s.find_first_of(".e") == std::string_view::npos) out += ".0";
}

inline void write_canonical(std::string& out, const Json& j) {
  switch (j.type()) {
    case Json::value_t::object: {
      out += '{';
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ',';
        first = false;
        out += Json(key).dump();
        out += ':';
        write_canonical(out, value);
      }
      out += '}';
      break;
    }
    case Json::value_t::array: {
      out += '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ',';
        write_canonical(out, j[i]);
      }
      out += ']';
      break;
    }
    case Json::value_t::number_float: write_number(out, j.get<double>()); break;
    default: out += j.dump(); break;
  }
}

}  // namespace detail

/// Serializes with lexicographically sorted keys (nlohmann objects are ordered maps).
inline std::string canonical_dump(const Json& j) {
  std::string out;
  detail::write_canonical(out, j);
  return out;
}

inline Json optional_json(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }
inline Json optional_json(const std::optional<std::string>& v) { return v ? Json(*v) : Json(nullptr); }

inline Json to_json(const TopsisResult& result) {
  Json rows = Json::array();
  for (const auto& r : result.rows)
    rows.push_back({{"alternative", r.label},
                    {"s_plus", r.s_plus},
                    {"s_minus", r.s_minus},
                    {"closeness", r.closeness},
                    {"rank", r.rank}});
  return rows;
}

inline Json to_json(const WeightVector& weights, const std::vector<std::string>& criteria) {
  Json rows = Json::array();
  for (std::size_t j = 0; j < weights.size(); ++j)
    rows.push_back({{"criterion", j < criteria.size() ? criteria[j] : std::to_string(j + 1)}, {"weight", weights[j]}});
  return {{"method", weights.method()}, {"weights", rows}};
}

inline Json to_json(const DecisionMatrix& matrix) {
  Json criteria = Json::array();
  for (const auto& c : matrix.criteria()) criteria.push_back({{"name", c.name}, {"direction", to_string(c.direction)}});
  Json values = Json::array();
  for (std::size_t i = 0; i < matrix.rows(); ++i)
    values.push_back(Json(std::vector<double>(matrix.values().row(i).begin(), matrix.values().row(i).end())));
  return {{"alternatives", matrix.alternatives()}, {"criteria", criteria}, {"values", values}};
}

inline Json to_json(const SensitivityReport& report) {
  Json criteria = Json::array();
  for (const auto& c : report.criteria) {
    Json points = Json::array();
    for (const auto& p : c.points) points.push_back({{"delta", p.delta}, {"feasible", p.feasible}, {"ranks", p.ranks}});
    criteria.push_back({{"criterion", c.criterion},
                        {"weight", c.weight},
                        {"flip_threshold", optional_json(c.flip_threshold)},
                        {"points", points}});
  }
  return {{"alternatives", report.alternatives},
          {"baseline_ranks", report.baseline_ranks},
          {"step", report.step},
          {"max_delta", report.max_delta},
          {"criteria", criteria},
          {"stability_score", report.stability_score}};
}

inline Json to_json(const RankReversalReport& report) {
  Json entries = Json::array();
  for (const auto& e : report.entries) {
    Json reversals = Json::array();
    for (const auto& r : e.reversals) reversals.push_back({{"first", r.first}, {"second", r.second}});
    entries.push_back({{"removed", e.removed},
                       {"survivors", e.survivors},
                       {"ranks", e.ranks},
                       {"reversals", reversals},
                       {"error", optional_json(e.error)}});
  }
  return {{"alternatives", report.alternatives}, {"baseline_ranks", report.baseline_ranks}, {"entries", entries}};
}

inline Json to_json(const repro::RankComparison& c) {
  return {{"compared_rows", c.compared_rows},
          {"max_abs_ci_delta", c.max_abs_ci_delta},
          {"mean_abs_ci_delta", c.mean_abs_ci_delta},
          {"exact_rank_matches", c.exact_rank_matches},
          {"kendall_tau", c.kendall_tau}};
}

inline Json to_json(const repro::ReproReport& report) {
  Json configs = Json::array();
  for (const auto& e : report.entries) {
    configs.push_back({{"name", e.config.name()},
                       {"orientation", std::string(repro::to_string(e.config.orientation))},
                       {"weight_method", std::string(repro::to_string(e.config.weight_method))},
                       {"row_subset", std::string(repro::to_string(e.config.row_subset))},
                       {"error", optional_json(e.error)},
                       {"comparison", e.ok() ? to_json(e.comparison) : Json(nullptr)},
                       {"weights", e.weights},
                       {"result", to_json(e.computed)}});
  }
  return {{"table_consistency", to_json(report.table_consistency)},
          {"configs", configs},
          {"best_config", report.best ? Json(report.entries[*report.best].config.name()) : Json(nullptr)}};
}

inline std::string export_json(const TopsisResult& result) { return canonical_dump(to_json(result)); }
inline std::string export_json(const SensitivityReport& report) { return canonical_dump(to_json(report)); }
inline std::string export_json(const RankReversalReport& report) { return canonical_dump(to_json(report)); }
inline std::string export_json(const repro::ReproReport& report) { return canonical_dump(to_json(report)); }

// ---------------------------------------------------------------------------
// Parsing back. Schema violations surface as InvalidValue.

namespace detail {

template <typename F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::InvalidValue, std::string("json: ") + e.what());
  }
}

inline std::optional<double> optional_double(const Json& j) {
  return j.is_null() ? std::nullopt : std::optional<double>(j.get<double>());
}

inline std::optional<std::string> optional_string(const Json& j) {
  return j.is_null() ? std::nullopt : std::optional<std::string>(j.get<std::string>());
}

template <typename Enum, std::size_t N>
Enum enum_from(const std::string& name, const std::array<Enum, N>& values) {
  for (auto v : values)
    if (repro::to_string(v) == name) return v;
  throw Error(ErrorCode::InvalidValue, "unknown enumeration value '" + name + "'");
}

}  // namespace detail

inline TopsisResult topsis_result_from_json(const Json& j) {
  return detail::guarded([&] {
    if (!j.is_array()) throw Error(ErrorCode::InvalidValue, "json: expected an array of result rows");
    TopsisResult out;
    for (const auto& r : j) {
      out.rows.push_back({r.at("alternative").get<std::string>(), r.at("s_plus").get<double>(),
                          r.at("s_minus").get<double>(), r.at("closeness").get<double>(), r.at("rank").get<int>()});
    }
    return out;
  });
}

inline SensitivityReport sensitivity_report_from_json(const Json& j) {
  return detail::guarded([&] {
    SensitivityReport out;
    out.alternatives = j.at("alternatives").get<std::vector<std::string>>();
    out.baseline_ranks = j.at("baseline_ranks").get<std::vector<int>>();
    out.step = j.at("step").get<double>();
    out.max_delta = j.at("max_delta").get<double>();
    out.stability_score = j.at("stability_score").get<double>();
    for (const auto& c : j.at("criteria")) {
      CriterionSensitivity cs{c.at("criterion").get<std::string>(), c.at("weight").get<double>(),
                              detail::optional_double(c.at("flip_threshold")), {}};
      for (const auto& p : c.at("points"))
        cs.points.push_back({p.at("delta").get<double>(), p.at("feasible").get<bool>(), p.at("ranks").get<std::vector<int>>()});
      out.criteria.push_back(std::move(cs));
    }
    return out;
  });
}

inline repro::RankComparison rank_comparison_from_json(const Json& j) {
  return detail::guarded([&] {
    return repro::RankComparison{j.at("compared_rows").get<std::size_t>(), j.at("max_abs_ci_delta").get<double>(),
                                 j.at("mean_abs_ci_delta").get<double>(), j.at("exact_rank_matches").get<int>(),
                                 j.at("kendall_tau").get<double>()};
  });
}

inline repro::ReproReport repro_report_from_json(const Json& j) {
  using namespace repro;
  return detail::guarded([&] {
    ReproReport out;
    out.table_consistency = rank_comparison_from_json(j.at("table_consistency"));
    for (const auto& c : j.at("configs")) {
      ReproEntry e;
      e.config.orientation = detail::enum_from(c.at("orientation").get<std::string>(),
                                               std::array{Orientation::AsPrinted, Orientation::Transposed});
      e.config.weight_method = detail::enum_from(
          c.at("weight_method").get<std::string>(),
          std::array{WeightMethod::StdDevRaw, WeightMethod::StdDevNormalized, WeightMethod::Equal, WeightMethod::Entropy});
      e.config.row_subset = detail::enum_from(c.at("row_subset").get<std::string>(),
                                              std::array{RowSubset::AllRows, RowSubset::Rows1to5});
      e.error = detail::optional_string(c.at("error"));
      if (!c.at("comparison").is_null()) e.comparison = rank_comparison_from_json(c.at("comparison"));
      e.weights = c.at("weights").get<std::vector<double>>();
      e.computed = topsis_result_from_json(c.at("result"));
      out.entries.push_back(std::move(e));
    }
    const auto& best = j.at("best_config");
    if (!best.is_null()) {
      const auto name = best.get<std::string>();
      for (std::size_t i = 0; i < out.entries.size(); ++i)
        if (out.entries[i].config.name() == name) out.best = i;
      if (!out.best) throw Error(ErrorCode::InvalidValue, "best_config names no listed configuration");
    }
    return out;
  });
}

inline Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::InvalidValue, std::string("json: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// SVG bar chart

namespace detail {

inline std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

inline std::string px(double v) { return fmt::fixed(v, 2); }

}  // namespace detail

/// One bar per alternative, height proportional to closeness, rank printed
/// above each bar and the alternative label rotated underneath.
inline std::string emit_bar_chart(const TopsisResult& result) {
  if (result.size() < 2) throw Error(ErrorCode::InvalidArgument, "chart needs at least two alternatives");
  constexpr double bar_width = 36.0;
  constexpr double gap = 18.0;
  constexpr double left = 70.0;
  constexpr double top = 50.0;
  constexpr double plot_height = 300.0;
  constexpr double label_band = 330.0;
  const double m = static_cast<double>(result.size());
  const double width = left + m * (bar_width + gap) + gap + 20.0;
  const double height = top + plot_height + label_band;
  const double baseline = top + plot_height;

  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + detail::px(width) + "\" height=\"" +
       detail::px(height) + "\" viewBox=\"0 0 " + detail::px(width) + " " + detail::px(height) + "\">\n";
  s += "<rect x=\"0\" y=\"0\" width=\"" + detail::px(width) + "\" height=\"" + detail::px(height) +
       "\" fill=\"#ffffff\"/>\n";
  s += "<text x=\"" + detail::px(width / 2) +
       "\" y=\"28\" font-family=\"sans-serif\" font-size=\"16\" text-anchor=\"middle\">Closeness coefficient and rank "
       "by alternative</text>\n";

  // Axis with ticks at 0, 0.25, ..., 1.
  s += "<line x1=\"" + detail::px(left) + "\" y1=\"" + detail::px(top) + "\" x2=\"" + detail::px(left) + "\" y2=\"" +
       detail::px(baseline) + "\" stroke=\"#000000\"/>\n";
  s += "<line x1=\"" + detail::px(left) + "\" y1=\"" + detail::px(baseline) + "\" x2=\"" + detail::px(width - 10.0) +
       "\" y2=\"" + detail::px(baseline) + "\" stroke=\"#000000\"/>\n";
  for (int t = 0; t <= 4; ++t) {
    const double value = t * 0.25;
    const double y = baseline - value * plot_height;
    s += "<line x1=\"" + detail::px(left - 5.0) + "\" y1=\"" + detail::px(y) + "\" x2=\"" + detail::px(left) +
         "\" y2=\"" + detail::px(y) + "\" stroke=\"#000000\"/>\n";
    s += "<text x=\"" + detail::px(left - 8.0) + "\" y=\"" + detail::px(y + 4.0) +
         "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">" + fmt::fixed(value, 2) + "</text>\n";
  }

  for (std::size_t i = 0; i < result.size(); ++i) {
    const auto& r = result.rows[i];
    const double x = left + gap + static_cast<double>(i) * (bar_width + gap);
    const double h = std::clamp(r.closeness, 0.0, 1.0) * plot_height;
    const double cx = x + bar_width / 2.0;
    s += "<g class=\"bar\">\n";
    s += "<title>" + detail::xml_escape(r.label) + ": ci=" + fmt::fixed(r.closeness, 6) + ", rank " +
         std::to_string(r.rank) + "</title>\n";
    s += "<rect x=\"" + detail::px(x) + "\" y=\"" + detail::px(baseline - h) + "\" width=\"" + detail::px(bar_width) +
         "\" height=\"" + detail::px(h) + "\" fill=\"" + (r.rank == 1 ? "#c0392b" : "#2e86c1") + "\"/>\n";
    s += "<text x=\"" + detail::px(cx) + "\" y=\"" + detail::px(baseline - h - 6.0) +
         "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">" + std::to_string(r.rank) +
         "</text>\n";
    s += "<text x=\"" + detail::px(cx) + "\" y=\"" + detail::px(baseline + 12.0) + "\" transform=\"rotate(45 " +
         detail::px(cx) + " " + detail::px(baseline + 12.0) +
         ")\" font-family=\"sans-serif\" font-size=\"10\" text-anchor=\"start\">" + detail::xml_escape(r.label) +
         "</text>\n";
    s += "</g>\n";
  }
  s += "</svg>\n";
  return s;
}

}  // namespace mcdm

#endif  // MCDM_REPORTING_HPP
