#include "mds/solution.hpp"

#include <algorithm>

#include "mds/error.hpp"

namespace mds {

Solution Solution::from_bits(std::string_view bits) {
  Solution s(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      s.set(static_cast<Vertex>(i));
    } else if (bits[i] != '0') {
      throw ValidationError("solution string may only contain '0' and '1'");
    }
  }
  return s;
}

Solution Solution::from_members(std::size_t n, std::span<const Vertex> members) {
  Solution s(n);
  for (Vertex v : members) {
    if (v >= n) throw RangeError("member " + std::to_string(v) + " out of range");
    s.set(v);
  }
  return s;
}

void Solution::set(Vertex v) {
  auto& b = bits_.at(v);
  if (!b) {
    b = 1;
    ++count_;
  }
  fitness_.reset();
}

void Solution::reset(Vertex v) {
  auto& b = bits_.at(v);
  if (b) {
    b = 0;
    --count_;
  }
  fitness_.reset();
}

void Solution::flip(Vertex v) {
  if (test(v)) {
    reset(v);
  } else {
    set(v);
  }
}

std::vector<Vertex> Solution::members() const {
  std::vector<Vertex> out;
  out.reserve(count_);
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) out.push_back(static_cast<Vertex>(i));
  }
  return out;
}

std::string Solution::to_bits() const {
  std::string out(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) out[i] = '1';
  }
  return out;
}

void check_dimension(const Graph& g, const Solution& s) {
  if (s.dimension() != g.order()) {
    throw ValidationError("solution has dimension " + std::to_string(s.dimension()) +
                          " but graph has " + std::to_string(g.order()) + " vertices");
  }
}

std::vector<Vertex> closed_neighborhood(const Graph& g, Vertex v) {
  const auto nb = g.neighbors(v);
  std::vector<Vertex> out(nb.begin(), nb.end());
  out.insert(std::upper_bound(out.begin(), out.end(), v), v);
  return out;
}

std::vector<std::uint32_t> cover_counts(const Graph& g, const Solution& s) {
  check_dimension(g, s);
  std::vector<std::uint32_t> cover(g.order(), 0);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!s.test(v)) continue;
    ++cover[v];
    for (Vertex u : g.neighbors(v)) ++cover[u];
  }
  return cover;
}

std::size_t dominated_count(const Graph& g, const Solution& s) {
  const auto cover = cover_counts(g, s);
  return static_cast<std::size_t>(
      std::count_if(cover.begin(), cover.end(), [](std::uint32_t c) { return c > 0; }));
}

bool is_dominating(const Graph& g, const Solution& s) {
  return dominated_count(g, s) == g.order();
}

}  // namespace mds
