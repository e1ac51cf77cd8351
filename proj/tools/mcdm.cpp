// mcdm: command-line front end for ranking, weighting, sensitivity sweeps,
// survey aggregation and the published-table reproduction.
//
//   mcdm <subcommand> [--input PATH] [--weights METHOD] [--basis raw|normalized]
//        [--format table|json|svg] [--step R] [--max-delta R]
//        [--statistic mean|stddev] [--group-by COL]
//
// Exit codes: 0 success, 1 domain error, 2 usage error.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mcdm/mcdm.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  std::string weights = "std_dev";
  std::string basis = "normalized";
  std::string format = "table";
  double step = mcdm::kDefaultStep;
  double max_delta = mcdm::kDefaultMaxDelta;
  std::string statistic = "mean";
  std::string group_by = "group";
  std::vector<std::string> cost_items;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw mcdm::Error(mcdm::ErrorCode::Io, path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void require_format(const Options& o, std::initializer_list<std::string_view> allowed) {
  for (auto f : allowed)
    if (o.format == f) return;
  throw UsageError("--format " + o.format + " is not available for this subcommand");
}

mcdm::StdDevBasis basis_of(const Options& o) {
  return o.basis == "raw" ? mcdm::StdDevBasis::Raw : mcdm::StdDevBasis::VectorNormalized;
}

// A weight spec resolved as far as possible before the matrix is known, so
// manual weights are validated even when no input is given.
struct WeightSpec {
  std::string method;
  std::optional<mcdm::WeightVector> manual;
  std::string ahp_path;
};

WeightSpec parse_weight_spec(const std::string& spec) {
  WeightSpec out;
  const auto colon = spec.find(':');
  out.method = spec.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (out.method == "manual") {
    std::vector<double> values;
    for (auto cell : mcdm::csv::split(arg)) {
      const auto v = mcdm::fmt::parse_decimal(cell);
      if (!v) throw mcdm::Error(mcdm::ErrorCode::InvalidValue, "manual weight '" + std::string(cell) + "'");
      values.push_back(*v);
    }
    out.manual = mcdm::manual_weights(values);
  } else if (out.method == "ahp") {
    if (arg.empty()) throw UsageError("ahp weights need a pairwise file: --weights ahp:PATH");
    out.ahp_path = arg;
  } else if (out.method != "std_dev" && out.method != "entropy" && out.method != "equal") {
    throw UsageError("unknown weight method '" + spec + "'");
  } else if (!arg.empty()) {
    throw UsageError("weight method '" + out.method + "' takes no argument");
  }
  return out;
}

mcdm::WeightVector resolve_weights(const WeightSpec& spec, const mcdm::DecisionMatrix& matrix,
                                   mcdm::StdDevBasis basis) {
  mcdm::WeightVector w = [&] {
    if (spec.manual) return *spec.manual;
    if (spec.method == "std_dev") return mcdm::std_dev_weights(matrix, basis);
    if (spec.method == "entropy") return mcdm::entropy_weights(matrix);
    if (spec.method == "equal") return mcdm::equal_weights(matrix.cols());
    const auto pairwise = mcdm::parse_pairwise_csv(read_file(spec.ahp_path));
    if (pairwise.labels() != matrix.criterion_names())
      throw mcdm::Error(mcdm::ErrorCode::DimensionMismatch, "pairwise labels differ from matrix criteria");
    return mcdm::ahp_weights(pairwise).weights;
  }();
  if (w.size() != matrix.cols())
    throw mcdm::Error(mcdm::ErrorCode::DimensionMismatch, "weight count differs from criterion count");
  return w;
}

struct Loaded {
  mcdm::DecisionMatrix matrix;
  mcdm::WeightVector weights;
};

Loaded load(const Options& o) {
  const auto spec = parse_weight_spec(o.weights);
  if (o.input.empty()) throw UsageError("--input is required");
  auto matrix = mcdm::parse_matrix_csv(read_file(o.input));
  auto weights = resolve_weights(spec, matrix, basis_of(o));
  return {std::move(matrix), std::move(weights)};
}

void run_rank(const Options& o) {
  require_format(o, {"table", "json", "svg"});
  const auto [matrix, weights] = load(o);
  const auto result = mcdm::topsis_rank(matrix, weights);
  if (o.format == "table") std::cout << mcdm::render_topsis_table(result);
  else if (o.format == "json") std::cout << mcdm::export_json(result) << '\n';
  else std::cout << mcdm::emit_bar_chart(result);
}

void run_weights(const Options& o) {
  require_format(o, {"table", "json"});
  const auto [matrix, weights] = load(o);
  if (o.format == "table") std::cout << mcdm::render_weight_table(weights, matrix.criterion_names());
  else std::cout << mcdm::canonical_dump(mcdm::to_json(weights, matrix.criterion_names())) << '\n';
}

void run_sensitivity(const Options& o) {
  require_format(o, {"table", "json"});
  const auto [matrix, weights] = load(o);
  const auto stability = mcdm::rank_stability(matrix, weights, o.step, o.max_delta);
  std::optional<mcdm::RankReversalReport> loo;
  if (matrix.rows() >= 3) loo = mcdm::leave_one_out(matrix, weights);
  if (o.format == "table") {
    std::cout << mcdm::render_sensitivity_table(stability);
    if (loo) std::cout << '\n' << mcdm::render_rank_reversal_table(*loo);
  } else {
    mcdm::Json doc = {{"rank_stability", mcdm::to_json(stability)},
                      {"leave_one_out", loo ? mcdm::to_json(*loo) : mcdm::Json(nullptr)}};
    std::cout << mcdm::canonical_dump(doc) << '\n';
  }
}

void run_aggregate(const Options& o) {
  require_format(o, {"table", "json"});
  if (o.input.empty()) throw UsageError("--input is required");
  const auto responses = mcdm::parse_survey_csv(read_file(o.input), o.group_by);
  std::map<std::string, mcdm::Direction> directions;
  for (const auto& item : o.cost_items) directions[item] = mcdm::Direction::Cost;
  const auto stat = o.statistic == "stddev" ? mcdm::SurveyStatistic::StdDev : mcdm::SurveyStatistic::Mean;
  const auto matrix = mcdm::aggregate_survey(responses, stat, directions);
  if (o.format == "table") std::cout << mcdm::serialize_matrix_csv(matrix);
  else std::cout << mcdm::canonical_dump(mcdm::to_json(matrix)) << '\n';
}

void run_repro(const Options& o) {
  require_format(o, {"table", "json", "svg"});
  const auto report = mcdm::repro::run_sweep();
  if (o.format == "table") {
    std::cout << mcdm::render_repro_table(report);
  } else if (o.format == "json") {
    std::cout << mcdm::export_json(report) << '\n';
  } else {
    const auto* best = report.best_entry();
    if (!best) throw mcdm::Error(mcdm::ErrorCode::DegenerateMatrix, "no configuration succeeded");
    std::cout << mcdm::emit_bar_chart(best->computed);
  }
}

}  // namespace

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  Options o;
  CLI::App app{"Multi-criteria decision analysis: TOPSIS ranking, criteria weighting, sensitivity"};
  app.require_subcommand(1);

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--input", o.input, "Input CSV file")->check(CLI::ExistingFile);
  };
  auto add_weights = [&](CLI::App* sub) {
    sub->add_option("--weights", o.weights, "std_dev | entropy | equal | manual:w1,w2,... | ahp:PAIRWISE.csv")
        ->capture_default_str();
    sub->add_option("--basis", o.basis, "Basis for std_dev weights")
        ->check(CLI::IsMember({"raw", "normalized"}))
        ->capture_default_str();
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"table", "json", "svg"}))
        ->capture_default_str();
  };

  auto* rank = app.add_subcommand("rank", "Rank alternatives with TOPSIS");
  add_input(rank);
  add_weights(rank);
  add_format(rank);

  auto* weights = app.add_subcommand("weights", "Compute criterion weights");
  add_input(weights);
  add_weights(weights);
  add_format(weights);

  auto* sensitivity = app.add_subcommand("sensitivity", "Weight-perturbation sweep and leave-one-out rank reversal");
  add_input(sensitivity);
  add_weights(sensitivity);
  add_format(sensitivity);
  sensitivity->add_option("--step", o.step, "Grid step for weight deltas")->capture_default_str();
  sensitivity->add_option("--max-delta", o.max_delta, "Largest weight delta")->capture_default_str();

  auto* aggregate = app.add_subcommand("aggregate", "Aggregate Likert survey responses into a decision matrix");
  add_input(aggregate);
  add_format(aggregate);
  aggregate->add_option("--statistic", o.statistic, "Cell statistic")
      ->check(CLI::IsMember({"mean", "stddev"}))
      ->capture_default_str();
  aggregate->add_option("--group-by", o.group_by, "Column whose values become alternatives")->capture_default_str();
  aggregate->add_option("--cost", o.cost_items, "Item to mark as a cost criterion (repeatable)");

  auto* repro = app.add_subcommand("repro", "Reproduce the published ranking table across pipeline configurations");
  add_format(repro);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (rank->parsed()) run_rank(o);
    else if (weights->parsed()) run_weights(o);
    else if (sensitivity->parsed()) run_sensitivity(o);
    else if (aggregate->parsed()) run_aggregate(o);
    else if (repro->parsed()) run_repro(o);
    std::cout.flush();
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const mcdm::Error& e) {
    std::cerr << e.what() << '\n';
    return kExitDomain;
  }
  return kExitOk;
}
