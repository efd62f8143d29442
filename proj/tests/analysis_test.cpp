#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qdio/analysis.hpp"

using qdio::brute_force_solutions;
using qdio::optimal_iterations;
using qdio::predicted_success;
using qdio::solution_count_closed_form;
using qdio::SolutionSet;

TEST_CASE("brute force enumerates the m=3 solution sets") {
  const SolutionSet five = brute_force_solutions(3, 5);
  const std::vector<std::pair<std::uint64_t, std::uint64_t>> expected = {
      {0, 5}, {1, 4}, {2, 3}, {3, 2}, {4, 1}, {5, 0}};
  CHECK(five.pairs == expected);
  CHECK(five.count() == 6);

  CHECK(brute_force_solutions(3, 0).pairs ==
        std::vector<std::pair<std::uint64_t, std::uint64_t>>{{0, 0}});
  CHECK(brute_force_solutions(3, 14).pairs ==
        std::vector<std::pair<std::uint64_t, std::uint64_t>>{{7, 7}});
  CHECK(brute_force_solutions(3, 15).pairs.empty());
}

TEST_CASE("every enumerated pair solves the equation within bounds") {
  for (std::uint32_t m = 1; m <= 4; ++m) {
    for (std::uint64_t n = 0; n <= (std::uint64_t{2} << m); ++n) {
      const SolutionSet set = brute_force_solutions(m, n);
      std::uint64_t previous_x = 0;
      bool first = true;
      for (const auto& [x, y] : set.pairs) {
        CHECK(x + y == n);
        CHECK(x < (std::uint64_t{1} << m));
        CHECK(y < (std::uint64_t{1} << m));
        if (!first) CHECK(x > previous_x);  // sorted, no duplicates
        previous_x = x;
        first = false;
      }
    }
  }
}

TEST_CASE("closed-form count matches enumeration for m <= 6") {
  for (std::uint32_t m = 1; m <= 6; ++m) {
    for (std::uint64_t n = 0; n <= (std::uint64_t{2} << m) + 1; ++n) {
      CHECK(solution_count_closed_form(m, n) == brute_force_solutions(m, n).count());
    }
  }
}

TEST_CASE("predicted success evaluates the amplification formula") {
  CHECK(predicted_success(64, 6, 0) == 6.0 / 64.0);  // exact at k = 0
  CHECK(predicted_success(64, 6, 2) == doctest::Approx(0.999778747558594).epsilon(1e-12));
  CHECK(predicted_success(64, 6, 1) == doctest::Approx(0.645996093750000).epsilon(1e-12));
  CHECK(predicted_success(64, 6, 6) == doctest::Approx(0.617300803570742).epsilon(1e-12));
  CHECK(predicted_success(4, 1, 1) == 1.0);  // theta = pi/6, 3*theta = pi/2

  CHECK_THROWS_AS(predicted_success(64, 0, 1), std::domain_error);
  CHECK_THROWS_AS(predicted_success(64, 65, 1), std::domain_error);
}

TEST_CASE("the k=1 and k=6 predictions nearly coincide for N=64, M=6") {
  CHECK(std::abs(predicted_success(64, 6, 1) - predicted_success(64, 6, 6)) < 0.03);
}

TEST_CASE("iteration schedule floors pi/4 sqrt(N/M) with a minimum of 1") {
  CHECK(optimal_iterations(64, 6) == 2);
  CHECK(optimal_iterations(64, 1) == 6);
  CHECK(optimal_iterations(4, 1) == 1);
  CHECK_THROWS_AS(optimal_iterations(64, 0), std::domain_error);
  CHECK_THROWS_AS(optimal_iterations(64, 32), std::domain_error);  // M = N/2
  CHECK_THROWS_AS(optimal_iterations(64, 40), std::domain_error);
}
