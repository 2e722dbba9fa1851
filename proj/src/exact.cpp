#include "mds/exact.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <vector>

#include "mds/error.hpp"
#include "mds/greedy.hpp"
#include "mds/solution_ops.hpp"

namespace mds {
namespace {

class BranchAndBound {
 public:
  BranchAndBound(const Graph& g, std::uint64_t budget)
      : g_(g),
        n_(g.order()),
        budget_(budget),
        cover_(n_, 0),
        excluded_(n_, 0),
        admissible_(n_),
        gain_(n_),
        mark_(n_, 0),
        uncovered_(n_) {
    for (Vertex v = 0; v < n_; ++v) admissible_[v] = static_cast<std::uint32_t>(g.degree(v) + 1);
    best_ = filter(g, greedy_mds(g));
  }

  ExactResult solve() {
    search();
    return {best_.count(), best_, nodes_};
  }

 private:
  void add(Vertex v) {
    chosen_.push_back(v);
    if (cover_[v]++ == 0) --uncovered_;
    for (Vertex u : g_.neighbors(v))
      if (cover_[u]++ == 0) --uncovered_;
  }

  void remove(Vertex v) {
    chosen_.pop_back();
    if (--cover_[v] == 0) ++uncovered_;
    for (Vertex u : g_.neighbors(v))
      if (--cover_[u] == 0) ++uncovered_;
  }

  void exclude(Vertex v) {
    excluded_[v] = 1;
    --admissible_[v];
    for (Vertex u : g_.neighbors(v)) --admissible_[u];
  }

  void include_back(Vertex v) {
    excluded_[v] = 0;
    ++admissible_[v];
    for (Vertex u : g_.neighbors(v)) ++admissible_[u];
  }

  // Uncovered vertices whose admissible dominator sets are pairwise disjoint
  // each need their own dominator.
  std::size_t packing_bound(std::vector<Vertex>& open) {
    std::sort(open.begin(), open.end(), [this](Vertex a, Vertex b) {
      return admissible_[a] != admissible_[b] ? admissible_[a] < admissible_[b] : a < b;
    });
    std::vector<Vertex> touched;
    std::size_t packed = 0;
    for (Vertex u : open) {
      bool clash = !excluded_[u] && mark_[u];
      for (Vertex w : g_.neighbors(u)) {
        if (clash) break;
        clash = !excluded_[w] && mark_[w];
      }
      if (clash) continue;
      ++packed;
      auto take = [&](Vertex w) {
        if (!excluded_[w]) {
          mark_[w] = 1;
          touched.push_back(w);
        }
      };
      take(u);
      for (Vertex w : g_.neighbors(u)) take(w);
    }
    for (Vertex w : touched) mark_[w] = 0;
    return packed;
  }

  void search() {
    if (++nodes_ > budget_) throw BudgetExceeded(budget_);
    if (uncovered_ == 0) {
      if (chosen_.size() < best_.count()) best_ = Solution::from_members(n_, chosen_);
      return;
    }
    if (chosen_.size() + 1 >= best_.count()) return;

    std::vector<Vertex> open;
    open.reserve(uncovered_);
    std::fill(gain_.begin(), gain_.end(), 0);
    Vertex pivot = 0;
    std::uint32_t pivot_choices = UINT32_MAX;
    for (Vertex u = 0; u < n_; ++u) {
      if (cover_[u] != 0) continue;
      open.push_back(u);
      if (admissible_[u] < pivot_choices) {
        pivot = u;
        pivot_choices = admissible_[u];
      }
      if (!excluded_[u]) ++gain_[u];
      for (Vertex w : g_.neighbors(u))
        if (!excluded_[w]) ++gain_[w];
    }
    if (pivot_choices == 0) return;

    const std::size_t max_gain = *std::max_element(gain_.begin(), gain_.end());
    const std::size_t by_volume = (uncovered_ + max_gain - 1) / max_gain;
    if (chosen_.size() + by_volume >= best_.count()) return;
    if (chosen_.size() + packing_bound(open) >= best_.count()) return;

    std::vector<Vertex> candidates;
    if (!excluded_[pivot]) candidates.push_back(pivot);
    for (Vertex w : g_.neighbors(pivot))
      if (!excluded_[w]) candidates.push_back(w);
    std::sort(candidates.begin(), candidates.end(), [this](Vertex a, Vertex b) {
      if (gain_[a] != gain_[b]) return gain_[a] > gain_[b];
      if (g_.degree(a) != g_.degree(b)) return g_.degree(a) > g_.degree(b);
      return a < b;
    });

    std::vector<Vertex> excluded_here;
    for (Vertex c : candidates) {
      add(c);
      search();
      remove(c);
      exclude(c);
      excluded_here.push_back(c);
    }
    for (Vertex c : excluded_here) include_back(c);
  }

  const Graph& g_;
  const std::size_t n_;
  const std::uint64_t budget_;
  std::uint64_t nodes_ = 0;

  std::vector<std::uint32_t> cover_;
  std::vector<char> excluded_;
  std::vector<std::uint32_t> admissible_;  // non-excluded vertices in N[u]
  std::vector<std::size_t> gain_;
  std::vector<char> mark_;
  std::size_t uncovered_;
  std::vector<Vertex> chosen_;
  Solution best_;
};

}  // namespace

ExactResult exact_mds(const Graph& g, std::uint64_t budget) {
  return BranchAndBound(g, budget).solve();
}

ExactResult brute_force_mds(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kBruteForceMaxOrder) {
    throw ValidationError("brute force is limited to n <= " + std::to_string(kBruteForceMaxOrder));
  }
  std::vector<std::uint32_t> closed(n);
  for (Vertex v = 0; v < n; ++v) {
    closed[v] = 1u << v;
    for (Vertex u : g.neighbors(v)) closed[v] |= 1u << u;
  }
  const std::uint32_t all = n == 32 ? ~0u : (1u << n) - 1;
  const std::uint64_t limit = std::uint64_t{1} << n;
  std::uint64_t tried = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    // Gosper's hack walks every k-subset of n bits.
    std::uint64_t set = (std::uint64_t{1} << k) - 1;
    while (set < limit) {
      ++tried;
      std::uint32_t covered = 0;
      for (std::uint64_t rest = set; rest; rest &= rest - 1) {
        covered |= closed[static_cast<std::size_t>(std::countr_zero(rest))];
      }
      if (covered == all) {
        Solution w(n);
        for (std::uint64_t rest = set; rest; rest &= rest - 1) {
          w.set(static_cast<Vertex>(std::countr_zero(rest)));
        }
        return {k, w, tried};
      }
      const std::uint64_t low = set & (~set + 1);
      const std::uint64_t ripple = set + low;
      set = (((ripple ^ set) >> 2) / low) | ripple;
    }
  }
  throw Error("unreachable: the full vertex set always dominates");
}

}  // namespace mds
