#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include <boost/random/bernoulli_distribution.hpp>
#include <boost/random/normal_distribution.hpp>
#include <boost/random/uniform_01.hpp>
#include <boost/random/uniform_int_distribution.hpp>

namespace mds {

// Engine from the standard library; distributions from Boost.Random, whose
// algorithms are fixed, so seeded runs reproduce across standard libraries.
using Rng = std::mt19937_64;

inline std::size_t uniform_index(Rng& rng, std::size_t lo, std::size_t hi) {
  return boost::random::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline double standard_normal(Rng& rng) {
  return boost::random::normal_distribution<double>(0.0, 1.0)(rng);
}

inline double uniform_unit(Rng& rng) { return boost::random::uniform_01<double>()(rng); }

inline bool coin(Rng& rng, double p = 0.5) {
  return boost::random::bernoulli_distribution<double>(p)(rng);
}

}  // namespace mds
