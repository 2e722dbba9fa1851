#include <doctest.h>

#include <cmath>
#include <set>

#include "mds/error.hpp"
#include "mds/levy.hpp"
#include "mds/solution_ops.hpp"
#include "test_support.hpp"

using namespace mds;

TEST_CASE("mantegna sigma for beta = 1.5") {
  // Evaluated independently in double precision from the gamma-function formula.
  CHECK(mantegna_sigma(1.5) == doctest::Approx(0.6965745025576967).epsilon(1e-12));
}

TEST_CASE("levy magnitude is reproducible and scales with alpha") {
  LevyParams p;
  Rng a(42);
  CHECK(sample_levy_magnitude(a, p) == doctest::Approx(0.55454059241084241).epsilon(1e-14));

  LevyParams doubled = p;
  doubled.alpha = 2.0;
  Rng r1(5), r2(5);
  for (int i = 0; i < 100; ++i) {
    const double m1 = sample_levy_magnitude(r1, p);
    const double m2 = sample_levy_magnitude(r2, doubled);
    CHECK(m1 >= 0.0);
    CHECK(m2 == doctest::Approx(2.0 * m1));
  }
}

TEST_CASE("parameter validation") {
  LevyParams p;
  CHECK_NOTHROW(p.validate());
  p.lambda = 1.0;
  CHECK_THROWS_AS(p.validate(), ValidationError);
  p.lambda = 3.0;
  CHECK_NOTHROW(p.validate());
  p.lambda = 3.5;
  CHECK_THROWS_AS(p.validate(), ValidationError);
  p = {};
  p.alpha = 0.0;
  CHECK_THROWS_AS(p.validate(), ValidationError);
  p = {};
  p.m_intervals = 0;
  CHECK_THROWS_AS(p.validate(), ValidationError);
  p = {};
  p.h_divisor = 0;
  CHECK_THROWS_AS(p.validate(), ValidationError);

  // Past beta = 2 the scale factor is still finite.
  Rng rng(1);
  LevyParams heavy;
  heavy.lambda = 3.0;
  CHECK(std::isfinite(sample_levy_magnitude(rng, heavy)));
}

TEST_CASE("theta map") {
  CHECK(theta_from_magnitude(0.0) == 0.0);
  CHECK(theta_from_magnitude(1e6) == doctest::Approx(1.0));
  CHECK(theta_from_magnitude(std::log(2.0)) == doctest::Approx(0.5));
  CHECK(theta_from_magnitude(0.3) < theta_from_magnitude(0.31));
}

TEST_CASE("step length cells") {
  LevyParams p;  // m = 10, h = 2
  Rng rng(3);
  std::set<std::size_t> low, high;
  for (int i = 0; i < 2000; ++i) {
    low.insert(step_length(0.0, 100, p, rng));
    high.insert(step_length(1.0, 100, p, rng));
  }
  CHECK(low == std::set<std::size_t>{1, 2, 3, 4, 5});
  CHECK(high == std::set<std::size_t>{45, 46, 47, 48, 49, 50});

  for (double theta : {0.0, 0.4, 1.0}) CHECK(step_length(theta, 2, p, rng) == 1);
}

TEST_CASE("step length stays within [1, n / h]") {
  Rng rng(17);
  for (int i = 0; i < 5000; ++i) {
    LevyParams p;
    const std::size_t n = 1 + uniform_index(rng, 0, 400);
    p.m_intervals = 1 + uniform_index(rng, 0, 20);
    p.h_divisor = 1 + uniform_index(rng, 0, n - 1);
    const auto len = step_length(uniform_unit(rng), n, p, rng);
    CHECK(len >= 1);
    CHECK(len <= std::max<std::size_t>(1, n / p.h_divisor));
  }
}

TEST_CASE("i-inversion") {
  CHECK(i_inversion(Solution::from_bits("000"), 0, 3).to_bits() == "111");
  CHECK(i_inversion(Solution::from_bits("101010110"), 4, 3).to_bits() == "101001010");
  const auto s = Solution::from_bits("1100101");
  CHECK(i_inversion(i_inversion(s, 2, 4), 2, 4) == s);
  CHECK_THROWS_AS(i_inversion(s, 5, 3), RangeError);
  CHECK_THROWS_AS(i_inversion(s, 0, 0), RangeError);
  CHECK_THROWS_AS(i_inversion(s, 0, 8), RangeError);
}

TEST_CASE("levy perturbation keeps solutions feasible") {
  LevyParams p;
  const auto p3 = path_graph(3);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(seed);
    const auto s = levy_perturb(p3, Solution::from_bits("010"), p, rng);
    CHECK(is_dominating(p3, s));
    CHECK(s.count() >= 1);
  }

  Rng golden(42);
  CHECK(levy_perturb(cycle_graph(5), Solution::from_bits("11111"), p, golden).to_bits() == "00101");

  const auto k1 = path_graph(1);
  Rng rng(1);
  for (int i = 0; i < 20; ++i) CHECK(levy_perturb(k1, Solution(1), p, rng).to_bits() == "1");
}

TEST_CASE("levy perturbation is deterministic and feasible on random graphs") {
  LevyParams p;
  Rng meta(8);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + uniform_index(meta, 0, 40);
    const auto g = testing::random_graph(n, 0.15, meta);
    const auto s = repair_and_filter(g, testing::random_solution(n, 0.3, meta));
    Rng a(trial), b(trial);
    const auto x = levy_perturb(g, s, p, a);
    CHECK(x == levy_perturb(g, s, p, b));
    CHECK(is_dominating(g, x));
  }
}
