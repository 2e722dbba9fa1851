#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace mds::stats {

/// Matched pairs (a_i, b_i). Counts of "greater" refer to a > b.
struct PairedSamples {
  std::vector<std::pair<double, double>> pairs;

  static PairedSamples from_columns(std::span<const double> a, std::span<const double> b);
  PairedSamples swapped() const;
};

struct SignCounts {
  std::size_t greater = 0;
  std::size_t less = 0;
  std::size_t equal = 0;

  friend bool operator==(const SignCounts&, const SignCounts&) = default;
};

struct RankSummary {
  std::size_t n_greater = 0;
  std::size_t n_less = 0;
  std::size_t n_equal = 0;
  std::size_t n_used = 0;   // pairs left after dropping zero differences
  double w_greater = 0.0;   // rank sum where a > b
  double w_less = 0.0;      // rank sum where a < b
  double z = 0.0;
  double p_value = 1.0;     // two-tailed, normal approximation
};

SignCounts sign_summary(const PairedSamples& s);

/// Wilcoxon signed-rank test. Zero differences are dropped, |a - b| is
/// ranked with average ranks for ties, and
///   z = (W_less - N(N+1)/4) / sqrt(N(N+1)(2N+1)/24 - sum(t^3 - t)/48)
/// over tie groups t. So z < 0 when a tends to exceed b, and |z| is the usual
/// statistic built from min(W+, W-). No continuity correction.
/// Throws DegenerateInput when every difference is zero.
RankSummary wilcoxon_signed_rank(const PairedSamples& s);

/// Ascending ranks with ties sharing their average rank (1-based).
std::vector<double> average_ranks(std::span<const double> values);

struct FriedmanResult {
  std::vector<double> mean_ranks;  // rank 1 = smallest value
  double chi_square = 0.0;
  double p_value = 1.0;            // chi-square with k - 1 degrees of freedom
};

/// rows = instances, columns = algorithms. Needs k >= 2 columns, N >= 2 rows.
FriedmanResult friedman_mean_ranks(const std::vector<std::vector<double>>& rows);

/// Holm step-down adjustment; returned in input order.
std::vector<double> holm_adjust(std::span<const double> p_values);

double normal_cdf(double x);

struct PairwiseComparison {
  std::string first;
  std::string second;
  RankSummary summary;
  double p_holm = 1.0;
  bool degenerate = false;  // all pairs tied; reported with p = 1
};

/// Wilcoxon for every column pair (i < j), Holm-adjusted across the family.
std::vector<PairwiseComparison> pairwise_wilcoxon(const std::vector<std::string>& names,
                                                  const std::vector<std::vector<double>>& rows);

}  // namespace mds::stats
