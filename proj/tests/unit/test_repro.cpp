#include <algorithm>

#include <gtest/gtest.h>

#include "expect_error.hpp"
#include "mcdm/repro.hpp"

using namespace mcdm;
using namespace mcdm::repro;

TEST(BuiltinFixture, PublishedCells) {
  const auto m = builtin_fixture();
  EXPECT_EQ(m.at(0, 0), 3.53);
  EXPECT_EQ(m.alternatives()[0], "1");
  EXPECT_EQ(m.criteria()[0].name, "Average working hours");
  EXPECT_EQ(m.at(8, 10), 0.91);
  const std::vector<double> first = {3.53, 3.64, 4.09, 3.82, 3.91, 3.48, 3.79, 3.23, 3.8, 3.93, 4.13};
  for (std::size_t j = 0; j < first.size(); ++j) EXPECT_EQ(m.at(0, j), first[j]);
  for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(m.criteria()[j].direction, Direction::Cost);
  // Row 5's trailing cells are stored as printed.
  EXPECT_EQ(m.at(4, 9), 0.92);
  EXPECT_EQ(m.at(4, 10), 0.82);
}

TEST(BuiltinExpected, PublishedRows) {
  const auto e = builtin_expected();
  ASSERT_EQ(e.size(), 11u);
  EXPECT_EQ(e.rows[3], (TopsisRow{"Satisfied with the working environment in an organization", 0.04766, 0.088131,
                                  0.64902, 1}));
  EXPECT_EQ(e.rows[9], (TopsisRow{"Satisfy with the designation allotted in an organization", 0.087666, 0.047449,
                                  0.351176, 11}));
  auto ranks = e.ranks();
  std::sort(ranks.begin(), ranks.end());
  for (int i = 0; i < 11; ++i) EXPECT_EQ(ranks[static_cast<std::size_t>(i)], i + 1);
}

TEST(BuiltinExpected, InternallyConsistent) {
  for (const auto& row : builtin_expected().rows)
    EXPECT_LT(std::abs(row.s_minus / (row.s_plus + row.s_minus) - row.closeness), 1e-5) << row.label;
  EXPECT_EQ(rank(builtin_expected().closeness()), builtin_expected().ranks());
}

TEST(KendallTau, Basics) {
  const std::vector<int> a = {1, 2, 3, 4};
  const std::vector<int> rev = {4, 3, 2, 1};
  const std::vector<int> swap = {2, 1, 3, 4};
  EXPECT_EQ(kendall_tau(a, a), 1.0);
  EXPECT_EQ(kendall_tau(a, rev), -1.0);
  EXPECT_DOUBLE_EQ(kendall_tau(a, swap), 4.0 / 6.0);
  EXPECT_EQ(code_of([&] { kendall_tau(a, std::vector<int>{1}); }), ErrorCode::DimensionMismatch);
}

TEST(CompareToExpected, SelfComparison) {
  const auto c = compare_to_expected(builtin_expected());
  EXPECT_EQ(c.max_abs_ci_delta, 0.0);
  EXPECT_EQ(c.mean_abs_ci_delta, 0.0);
  EXPECT_EQ(c.kendall_tau, 1.0);
  EXPECT_EQ(c.exact_rank_matches, 11);
  EXPECT_EQ(c.compared_rows, 11u);
}

TEST(CompareToExpected, RecomputedFromSeparations) {
  const auto recomputed = recompute_from_separations(builtin_expected());
  const auto c = compare_to_expected(recomputed);
  EXPECT_LT(c.max_abs_ci_delta, 1e-5);
  EXPECT_EQ(c.exact_rank_matches, 11);
  EXPECT_EQ(c.kendall_tau, 1.0);
}

TEST(CompareToExpected, ShorterResultUsesPrefixRanks) {
  auto prefix = builtin_expected();
  prefix.rows.resize(9);
  const auto ranks = rank(prefix.closeness());
  for (std::size_t i = 0; i < 9; ++i) prefix.rows[i].rank = ranks[i];
  const auto c = compare_to_expected(prefix);
  EXPECT_EQ(c.compared_rows, 9u);
  EXPECT_EQ(c.max_abs_ci_delta, 0.0);
  EXPECT_EQ(c.exact_rank_matches, 9);
  EXPECT_EQ(c.kendall_tau, 1.0);
}

TEST(Configs, EnumerationIsComplete) {
  const auto configs = all_configs();
  EXPECT_EQ(configs.size(), 12u);
  EXPECT_EQ(std::count_if(configs.begin(), configs.end(),
                          [](const auto& c) { return c.orientation == Orientation::AsPrinted; }),
            4);
  for (const auto& c : configs) EXPECT_TRUE(c.valid());
  EXPECT_FALSE((ReproConfig{Orientation::AsPrinted, WeightMethod::Equal, RowSubset::Rows1to5}.valid()));
  EXPECT_EQ(configs.front().name(), "AsPrinted/StdDevRaw/AllRows");
  EXPECT_EQ(configs.back().name(), "Transposed/Entropy/Rows1to5");
}

TEST(Configs, MatrixShapes) {
  EXPECT_EQ(config_matrix({Orientation::AsPrinted, WeightMethod::Equal, RowSubset::AllRows}).rows(), 9u);
  const auto t = config_matrix({Orientation::Transposed, WeightMethod::Equal, RowSubset::AllRows});
  EXPECT_EQ(t.rows(), 11u);
  EXPECT_EQ(t.cols(), 9u);
  for (auto d : t.directions()) EXPECT_EQ(d, Direction::Benefit);
  const auto five = config_matrix({Orientation::Transposed, WeightMethod::Equal, RowSubset::Rows1to5});
  EXPECT_EQ(five.cols(), 5u);
  EXPECT_EQ(five.criteria().back().name, "5");
}

TEST(Reproduce, InvalidConfigIsRecordedNotThrown) {
  const auto e = reproduce({Orientation::AsPrinted, WeightMethod::Equal, RowSubset::Rows1to5});
  EXPECT_FALSE(e.ok());
  EXPECT_NE(e.error->find("invalid argument"), std::string::npos);
}

TEST(Reproduce, IsPure) {
  for (const auto& c : all_configs()) EXPECT_EQ(reproduce(c), reproduce(c)) << c.name();
}

struct FrozenRow {
  const char* name;
  std::size_t rows;
  double max_delta;
  double mean_delta;
  int exact;
  double tau;
};

// Frozen from tests/oracle/oracle.py (numpy recomputation of the full sweep).
const FrozenRow kFrozen[] = {
    {"AsPrinted/StdDevRaw/AllRows", 9, 0.0073904074278280385, 0.0046069834415958365, 6, 0.8888888888888888},
    {"AsPrinted/StdDevNormalized/AllRows", 9, 0.009358208503994436, 0.002880350645287824, 4, 0.8333333333333334},
    {"AsPrinted/Equal/AllRows", 9, 0.014797661985083588, 0.003953293368073423, 6, 0.8888888888888888},
    {"AsPrinted/Entropy/AllRows", 9, 0.038660903686770054, 0.010079151064969248, 5, 0.8888888888888888},
    {"Transposed/StdDevRaw/AllRows", 11, 0.4564531903664872, 0.29567792588516684, 0, 0.38181818181818183},
    {"Transposed/StdDevRaw/Rows1to5", 11, 0.5459696198644785, 0.34561759305305095, 1, 0.2727272727272727},
    {"Transposed/StdDevNormalized/AllRows", 11, 0.44534372667534033, 0.1785214580657071, 1, 0.41818181818181815},
    {"Transposed/StdDevNormalized/Rows1to5", 11, 0.5509847265763184, 0.3486691168404272, 0, 0.2727272727272727},
    {"Transposed/Equal/AllRows", 11, 0.3481223007763837, 0.12634516550168498, 1, 0.41818181818181815},
    {"Transposed/Equal/Rows1to5", 11, 0.3743374062541155, 0.2253394595492516, 1, 0.34545454545454546},
    {"Transposed/Entropy/AllRows", 11, 0.47131132736557907, 0.2890301902832021, 1, 0.41818181818181815},
    {"Transposed/Entropy/Rows1to5", 11, 0.6033294464836718, 0.3751226406085318, 0, 0.2727272727272727},
};

TEST(RunSweep, MatchesOracle) {
  const auto report = run_sweep();
  ASSERT_EQ(report.entries.size(), std::size(kFrozen));
  for (std::size_t i = 0; i < report.entries.size(); ++i) {
    const auto& e = report.entries[i];
    const auto& f = kFrozen[i];
    ASSERT_TRUE(e.ok()) << *e.error;
    EXPECT_EQ(e.config.name(), f.name);
    EXPECT_EQ(e.comparison.compared_rows, f.rows) << f.name;
    EXPECT_NEAR(e.comparison.max_abs_ci_delta, f.max_delta, 1e-12) << f.name;
    EXPECT_NEAR(e.comparison.mean_abs_ci_delta, f.mean_delta, 1e-12) << f.name;
    EXPECT_EQ(e.comparison.exact_rank_matches, f.exact) << f.name;
    EXPECT_NEAR(e.comparison.kendall_tau, f.tau, 1e-12) << f.name;
  }
}

TEST(RunSweep, BestConfigFollowsSelectionRule) {
  const auto report = run_sweep();
  ASSERT_TRUE(report.best);
  const auto& best = report.entries[*report.best];
  EXPECT_EQ(best.config.name(), "AsPrinted/StdDevNormalized/AllRows");
  for (const auto& e : report.entries) {
    if (!e.ok()) continue;
    EXPECT_LE(best.comparison.mean_abs_ci_delta, e.comparison.mean_abs_ci_delta);
    if (e.comparison.mean_abs_ci_delta == best.comparison.mean_abs_ci_delta) {
      EXPECT_GE(best.comparison.kendall_tau, e.comparison.kendall_tau);
    }
  }
}

TEST(RunSweep, TableConsistencyRow) {
  const auto report = run_sweep();
  EXPECT_LT(report.table_consistency.max_abs_ci_delta, 1e-5);
  EXPECT_EQ(report.table_consistency.exact_rank_matches, 11);
}

TEST(RunSweep, Deterministic) { EXPECT_EQ(run_sweep(), run_sweep()); }

TEST(SelectBest, TieBreaks) {
  auto make = [](double mean, double tau, bool ok = true) {
    ReproEntry e;
    e.comparison.mean_abs_ci_delta = mean;
    e.comparison.kendall_tau = tau;
    if (!ok) e.error = "error: failed";
    return e;
  };
  EXPECT_EQ(select_best({make(0.1, 0.5), make(0.05, 0.1), make(0.05, 0.1)}), 1u);
  EXPECT_EQ(select_best({make(0.05, 0.1), make(0.05, 0.4)}), 1u);
  EXPECT_EQ(select_best({make(0.01, 1.0, false), make(0.2, 0.0)}), 1u);
  EXPECT_FALSE(select_best({make(0.01, 1.0, false)}));
  EXPECT_FALSE(select_best({}));
}
