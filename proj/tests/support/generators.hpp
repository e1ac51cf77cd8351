#ifndef MCDM_TESTS_GENERATORS_HPP
#define MCDM_TESTS_GENERATORS_HPP

#include <random>
#include <string>
#include <vector>

#include "mcdm/decision_model.hpp"

namespace gen {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

inline std::size_t between(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// Values in (0, 10].
inline double rating(Rng& rng) { return 10.0 - uniform(rng, 0.0, 10.0); }

inline std::vector<std::vector<double>> grid(Rng& rng, std::size_t m, std::size_t n) {
  std::vector<std::vector<double>> out(m, std::vector<double>(n));
  for (auto& row : out)
    for (auto& v : row) v = rating(rng);
  return out;
}

inline std::vector<mcdm::Criterion> criteria(Rng& rng, std::size_t n) {
  std::vector<mcdm::Criterion> out;
  for (std::size_t j = 0; j < n; ++j)
    out.push_back({"c" + std::to_string(j + 1), between(rng, 0, 1) ? mcdm::Direction::Benefit : mcdm::Direction::Cost});
  return out;
}

inline std::vector<std::string> labels(std::size_t m, const std::string& prefix = "a") {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < m; ++i) out.push_back(prefix + std::to_string(i + 1));
  return out;
}

inline mcdm::DecisionMatrix matrix(Rng& rng, std::size_t m, std::size_t n) {
  return mcdm::new_matrix(labels(m), criteria(rng, n), grid(rng, m, n));
}

inline std::vector<double> simplex(Rng& rng, std::size_t n) {
  std::vector<double> w(n);
  double total = 0.0;
  for (auto& x : w) total += (x = uniform(rng, 0.05, 1.0));
  for (auto& x : w) x /= total;
  return w;
}

}  // namespace gen

#endif
