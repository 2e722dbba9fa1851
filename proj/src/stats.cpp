#include "mds/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <boost/math/distributions/chi_squared.hpp>

#include "mds/error.hpp"

namespace mds::stats {

PairedSamples PairedSamples::from_columns(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw ValidationError("paired columns differ in length");
  PairedSamples s;
  s.pairs.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) s.pairs.emplace_back(a[i], b[i]);
  return s;
}

PairedSamples PairedSamples::swapped() const {
  PairedSamples s;
  s.pairs.reserve(pairs.size());
  for (const auto& [a, b] : pairs) s.pairs.emplace_back(b, a);
  return s;
}

SignCounts sign_summary(const PairedSamples& s) {
  if (s.pairs.empty()) throw ValidationError("no pairs");
  SignCounts c;
  for (const auto& [a, b] : s.pairs) {
    if (a > b) {
      ++c.greater;
    } else if (a < b) {
      ++c.less;
    } else {
      ++c.equal;
    }
  }
  return c;
}

std::vector<double> average_ranks(std::span<const double> values) {
  std::vector<std::size_t> idx(values.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(values.size());
  for (std::size_t i = 0; i < idx.size();) {
    std::size_t j = i;
    while (j + 1 < idx.size() && values[idx[j + 1]] == values[idx[i]]) ++j;
    const double avg = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
    for (std::size_t k = i; k <= j; ++k) ranks[idx[k]] = avg;
    i = j + 1;
  }
  return ranks;
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

RankSummary wilcoxon_signed_rank(const PairedSamples& s) {
  const auto signs = sign_summary(s);
  RankSummary r;
  r.n_greater = signs.greater;
  r.n_less = signs.less;
  r.n_equal = signs.equal;

  std::vector<double> diff;
  for (const auto& [a, b] : s.pairs) {
    if (a != b) diff.push_back(a - b);
  }
  if (diff.empty()) throw DegenerateInput("all paired differences are zero");

  std::vector<double> magnitude(diff.size());
  std::transform(diff.begin(), diff.end(), magnitude.begin(), [](double d) { return std::abs(d); });
  const auto ranks = average_ranks(magnitude);
  for (std::size_t i = 0; i < diff.size(); ++i) {
    (diff[i] > 0 ? r.w_greater : r.w_less) += ranks[i];
  }

  std::vector<double> sorted = magnitude;
  std::sort(sorted.begin(), sorted.end());
  double tie_term = 0.0;
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    const auto t = static_cast<double>(j - i);
    tie_term += t * t * t - t;
    i = j;
  }

  const auto n = static_cast<double>(diff.size());
  r.n_used = diff.size();
  const double mean = n * (n + 1.0) / 4.0;
  const double var = n * (n + 1.0) * (2.0 * n + 1.0) / 24.0 - tie_term / 48.0;
  if (var > 0.0) {
    r.z = (r.w_less - mean) / std::sqrt(var);
    r.p_value = std::min(1.0, 2.0 * normal_cdf(-std::abs(r.z)));
  }
  return r;
}

FriedmanResult friedman_mean_ranks(const std::vector<std::vector<double>>& rows) {
  if (rows.size() < 2) throw ValidationError("Friedman ranks need at least two instances");
  const std::size_t k = rows.front().size();
  if (k < 2) throw ValidationError("Friedman ranks need at least two algorithms");

  FriedmanResult f;
  f.mean_ranks.assign(k, 0.0);
  for (const auto& row : rows) {
    if (row.size() != k) throw ValidationError("ragged result table");
    const auto r = average_ranks(row);
    for (std::size_t j = 0; j < k; ++j) f.mean_ranks[j] += r[j];
  }
  const auto n = static_cast<double>(rows.size());
  const auto kd = static_cast<double>(k);
  double sum_sq = 0.0;
  for (auto& m : f.mean_ranks) {
    m /= n;
    sum_sq += m * m;
  }
  f.chi_square = 12.0 * n / (kd * (kd + 1.0)) * (sum_sq - kd * (kd + 1.0) * (kd + 1.0) / 4.0);
  const boost::math::chi_squared dist(kd - 1.0);
  f.p_value = boost::math::cdf(boost::math::complement(dist, std::max(0.0, f.chi_square)));
  return f;
}

std::vector<double> holm_adjust(std::span<const double> p_values) {
  const std::size_t m = p_values.size();
  std::vector<std::size_t> idx(m);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return p_values[a] < p_values[b]; });
  std::vector<double> adjusted(m);
  double running = 0.0;
  for (std::size_t rank = 0; rank < m; ++rank) {
    const double scaled = static_cast<double>(m - rank) * p_values[idx[rank]];
    running = std::max(running, std::min(1.0, scaled));
    adjusted[idx[rank]] = running;
  }
  return adjusted;
}

std::vector<PairwiseComparison> pairwise_wilcoxon(const std::vector<std::string>& names,
                                                  const std::vector<std::vector<double>>& rows) {
  const std::size_t k = names.size();
  std::vector<PairwiseComparison> out;
  std::vector<double> raw;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      PairedSamples s;
      for (const auto& row : rows) {
        if (row.size() != k) throw ValidationError("ragged result table");
        s.pairs.emplace_back(row[i], row[j]);
      }
      PairwiseComparison c{names[i], names[j], {}, 1.0, false};
      try {
        c.summary = wilcoxon_signed_rank(s);
      } catch (const DegenerateInput&) {
        const auto signs = sign_summary(s);
        c.summary.n_equal = signs.equal;
        c.degenerate = true;
      }
      raw.push_back(c.summary.p_value);
      out.push_back(std::move(c));
    }
  }
  const auto adjusted = holm_adjust(raw);
  for (std::size_t i = 0; i < out.size(); ++i) out[i].p_holm = adjusted[i];
  return out;
}

}  // namespace mds::stats
