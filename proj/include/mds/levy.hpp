#pragma once

#include <cstddef>

#include "mds/graph.hpp"
#include "mds/rng.hpp"
#include "mds/solution.hpp"

namespace mds {

struct LevyParams {
  double lambda = 1.5;  // stability exponent, 1 < lambda <= 3
  double alpha = 1.0;   // step scale
  std::size_t m_intervals = 10;
  std::size_t h_divisor = 2;  // longest inversion is n / h_divisor

  void validate() const;
};

/// Mantegna's sigma_u(beta) for the numerator normal.
double mantegna_sigma(double beta);

/// alpha * |u / |v|^(1/beta)| with u ~ N(0, sigma_u^2), v ~ N(0, 1); draws u then v.
double sample_levy_magnitude(Rng& rng, const LevyParams& p);

/// 1 - exp(-mag): squashes a flight magnitude onto [0, 1].
double theta_from_magnitude(double magnitude);

/// floor(n / h), with h capped at n so the result is at least 1.
std::size_t max_inversion_length(std::size_t n, const LevyParams& p);

/// Inversion length for a flight value. [0, 1] is cut into m equal cells;
/// cell k maps to lengths [max(1, ceil(k L / m)), ceil((k+1) L / m)] where
/// L = max_inversion_length, and the length is drawn uniformly from it.
std::size_t step_length(double theta, std::size_t n, const LevyParams& p, Rng& rng);

/// Copy of s with bits start .. start+length-1 flipped.
Solution i_inversion(const Solution& s, std::size_t start, std::size_t length);

/// One Levy move: magnitude -> theta -> length -> uniform start in [0, n - i]
/// -> i-inversion, then repair and filter. Always returns a dominating set.
Solution levy_perturb(const Graph& g, const Solution& s, const LevyParams& p, Rng& rng);

}  // namespace mds
