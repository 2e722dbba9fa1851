#include "mds/levy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mds/error.hpp"
#include "mds/solution_ops.hpp"

namespace mds {

void LevyParams::validate() const {
  if (!(lambda > 1.0 && lambda <= 3.0)) throw ValidationError("lambda must lie in (1, 3]");
  if (!(alpha > 0.0)) throw ValidationError("alpha must be positive");
  if (m_intervals < 1) throw ValidationError("m_intervals must be at least 1");
  if (h_divisor < 1) throw ValidationError("h_divisor must be at least 1");
}

double mantegna_sigma(double beta) {
  const double num = std::tgamma(1.0 + beta) * std::sin(std::numbers::pi * beta / 2.0);
  const double den = std::tgamma((1.0 + beta) / 2.0) * beta * std::pow(2.0, (beta - 1.0) / 2.0);
  // sin(pi beta / 2) turns negative past beta = 2; the scale uses its magnitude.
  return std::pow(std::abs(num / den), 1.0 / beta);
}

double sample_levy_magnitude(Rng& rng, const LevyParams& p) {
  const double sigma = mantegna_sigma(p.lambda);
  const double u = standard_normal(rng) * sigma;
  const double v = standard_normal(rng);
  return p.alpha * std::abs(u / std::pow(std::abs(v), 1.0 / p.lambda));
}

double theta_from_magnitude(double magnitude) { return -std::expm1(-magnitude); }

std::size_t max_inversion_length(std::size_t n, const LevyParams& p) {
  const std::size_t h = std::clamp<std::size_t>(p.h_divisor, 1, std::max<std::size_t>(n, 1));
  return std::max<std::size_t>(1, n / h);
}

std::size_t step_length(double theta, std::size_t n, const LevyParams& p, Rng& rng) {
  const std::size_t m = p.m_intervals;
  const std::size_t max_len = max_inversion_length(n, p);
  theta = std::clamp(theta, 0.0, 1.0);
  const auto k = std::min(static_cast<std::size_t>(std::floor(theta * static_cast<double>(m))),
                          m - 1);
  auto ceil_div = [m](std::size_t a) { return (a + m - 1) / m; };
  const std::size_t hi = std::clamp<std::size_t>(ceil_div((k + 1) * max_len), 1, max_len);
  const std::size_t lo = std::clamp<std::size_t>(ceil_div(k * max_len), 1, hi);
  return uniform_index(rng, lo, hi);
}

Solution i_inversion(const Solution& s, std::size_t start, std::size_t length) {
  if (length < 1 || length > s.dimension() || start > s.dimension() - length) {
    throw RangeError("inversion [" + std::to_string(start) + ", +" + std::to_string(length) +
                     ") does not fit a solution of dimension " + std::to_string(s.dimension()));
  }
  Solution out = s;
  for (std::size_t v = start; v < start + length; ++v) out.flip(static_cast<Vertex>(v));
  return out;
}

Solution levy_perturb(const Graph& g, const Solution& s, const LevyParams& p, Rng& rng) {
  check_dimension(g, s);
  const std::size_t n = g.order();
  const double theta = theta_from_magnitude(sample_levy_magnitude(rng, p));
  const std::size_t length = step_length(theta, n, p, rng);
  const std::size_t start = uniform_index(rng, 0, n - length);
  return repair_and_filter(g, i_inversion(s, start, length));
}

}  // namespace mds
