#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "expect_error.hpp"
#include "generators.hpp"
#include "mcdm/decision_model.hpp"
#include "mcdm/repro.hpp"

using namespace mcdm;

TEST(DecisionMatrix, MinimalOneByOne) {
  const auto m = new_matrix({"a"}, {{"c", Direction::Benefit}}, {{1.0}});
  EXPECT_EQ(m.rows(), 1u);
  EXPECT_EQ(m.cols(), 1u);
  EXPECT_EQ(m.at(0, 0), 1.0);
}

TEST(DecisionMatrix, PublishedFixtureShape) {
  const auto m = repro::builtin_fixture();
  EXPECT_EQ(m.rows(), 9u);
  EXPECT_EQ(m.cols(), 11u);
  EXPECT_EQ(m.at(0, 0), 3.53);
  EXPECT_EQ(m.at(8, 10), 0.91);
  for (std::size_t j = 0; j < 11; ++j)
    EXPECT_EQ(m.criteria()[j].direction, j < 3 ? Direction::Cost : Direction::Benefit);
}

TEST(DecisionMatrix, RejectsDuplicateAlternative) {
  EXPECT_EQ(code_of([] { new_matrix({"x", "x"}, {{"c", Direction::Benefit}}, {{1.0}, {2.0}}); }),
            ErrorCode::DuplicateLabel);
}

TEST(DecisionMatrix, RejectsDuplicateCriterion) {
  EXPECT_EQ(code_of([] {
              new_matrix({"a"}, {{"c", Direction::Benefit}, {"c", Direction::Cost}}, {{1.0, 2.0}});
            }),
            ErrorCode::DuplicateLabel);
}

TEST(DecisionMatrix, RejectsEmptyLabels) {
  EXPECT_EQ(code_of([] { new_matrix({""}, {{"c", Direction::Benefit}}, {{1.0}}); }), ErrorCode::EmptyLabel);
  EXPECT_EQ(code_of([] { new_matrix({"a"}, {{"", Direction::Benefit}}, {{1.0}}); }), ErrorCode::EmptyLabel);
}

TEST(DecisionMatrix, RejectsShapeMismatch) {
  EXPECT_EQ(code_of([] { new_matrix({"a", "b"}, {{"c", Direction::Benefit}}, {{1.0}}); }),
            ErrorCode::DimensionMismatch);
  EXPECT_EQ(code_of([] { new_matrix({"a"}, {{"c", Direction::Benefit}}, {{1.0, 2.0}}); }),
            ErrorCode::DimensionMismatch);
  EXPECT_EQ(code_of([] { new_matrix({}, {{"c", Direction::Benefit}}, {}); }), ErrorCode::DimensionMismatch);
}

TEST(DecisionMatrix, RejectsInvalidValues) {
  for (double bad : {-0.5, std::numeric_limits<double>::quiet_NaN(), std::numeric_limits<double>::infinity()})
    EXPECT_EQ(code_of([&] { new_matrix({"a"}, {{"c", Direction::Benefit}}, {{bad}}); }), ErrorCode::InvalidValue)
        << bad;
}

TEST(Transpose, OneByOneSwapsAxisLabels) {
  const auto m = new_matrix({"a"}, {{"c", Direction::Benefit}}, {{7.0}});
  const std::vector<Direction> d = {Direction::Cost};
  const auto t = transpose(m, d);
  EXPECT_EQ(t.alternatives(), std::vector<std::string>{"c"});
  EXPECT_EQ(t.criteria(), (std::vector<Criterion>{{"a", Direction::Cost}}));
  EXPECT_EQ(t.at(0, 0), 7.0);
}

TEST(Transpose, PublishedFixtureBecomesElevenParameters) {
  const auto m = repro::builtin_fixture();
  const std::vector<Direction> benefit(9, Direction::Benefit);
  const auto t = transpose(m, benefit);
  EXPECT_EQ(t.rows(), 11u);
  EXPECT_EQ(t.cols(), 9u);
  EXPECT_EQ(t.alternatives().front(), "Average working hours");
  EXPECT_EQ(t.alternatives(), repro::parameter_names());
  EXPECT_EQ(t.at(10, 8), 0.91);
}

TEST(Transpose, RejectsWrongDirectionCount) {
  const auto m = repro::builtin_fixture();
  const std::vector<Direction> d(11, Direction::Benefit);
  EXPECT_EQ(code_of([&] { transpose(m, d); }), ErrorCode::DimensionMismatch);
}

TEST(Transpose, TwiceRestoresMatrixProperty) {
  gen::Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = gen::matrix(rng, gen::between(rng, 1, 6), gen::between(rng, 1, 5));
    std::vector<Direction> d(m.rows());
    for (auto& x : d) x = gen::between(rng, 0, 1) ? Direction::Benefit : Direction::Cost;
    const auto original = m.directions();
    const auto back = transpose(transpose(m, d), original);
    EXPECT_EQ(back, m);
  }
}

TEST(DecisionMatrix, SelectAndRemoveRows) {
  const auto m = repro::builtin_fixture();
  const auto r = m.without_alternative(0);
  EXPECT_EQ(r.rows(), 8u);
  EXPECT_EQ(r.alternatives().front(), "2");
  EXPECT_EQ(r.at(0, 0), 4.08);
  EXPECT_EQ(code_of([&] { m.without_alternative(9); }), ErrorCode::OutOfRange);
}

TEST(WeightVector, ValidatesSimplex) {
  EXPECT_NO_THROW(WeightVector({0.25, 0.75}, "manual"));
  EXPECT_EQ(code_of([] { WeightVector({0.5, 0.6}, "manual"); }), ErrorCode::InvalidValue);
  EXPECT_EQ(code_of([] { WeightVector({-0.5, 1.5}, "manual"); }), ErrorCode::NegativeWeight);
  EXPECT_EQ(code_of([] { WeightVector({}, "manual"); }), ErrorCode::InvalidArity);
}
