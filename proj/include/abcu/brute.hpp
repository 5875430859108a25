#ifndef ABCU_BRUTE_HPP
#define ABCU_BRUTE_HPP

#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <vector>

#include "abcu/candidate_set.hpp"
#include "abcu/model.hpp"
#include "abcu/rules.hpp"

namespace abcu::detail {

// Depth-first walk over every joint completion, in enumerate_completions
// order, maintaining the score of every size-k committee incrementally.
// Scores are scaled by the common denominator of all reachable ballot
// scores so that the walk runs on integers; when that would overflow it
// falls back to exact rationals.
class CompletionScan {
public:
  CompletionScan(const ScoringFunction& f, const PartialProfile& p, int k, std::uint64_t cap)
      : profile_(p), committees_(subsets_of_size(p.registry.all(), k)) {
    require_committee_size(k, p.candidates());
    require_within_cap(p, cap);
    const int m = p.candidates();
    options_.reserve(p.ballots.size());
    std::vector<bool> sizes(static_cast<std::size_t>(m) + 1, false);
    for (const auto& b : p.ballots) {
      options_.push_back(completions_of_ballot(b));
      for (CandidateSet a : options_.back()) sizes[static_cast<std::size_t>(a.size())] = true;
    }
    exact_.assign(static_cast<std::size_t>(k) + 1, std::vector<Score>(static_cast<std::size_t>(m) + 1, Score(0)));
    for (int y = 0; y <= m; ++y) {
      if (!sizes[static_cast<std::size_t>(y)]) continue;
      for (int x = 0; x <= std::min(k, y); ++x) exact_[x][y] = f(x, y);
    }
    build_scaled(sizes);
  }

  const std::vector<CandidateSet>& committees() const noexcept { return committees_; }
  const std::vector<std::vector<CandidateSet>>& options() const noexcept { return options_; }

  /// Calls leaf(sums) at every completion; sums[j] is the score of
  /// committees()[j] (scaled). Stops as soon as leaf returns true and
  /// reports whether it did.
  template <typename Leaf> bool run(Leaf&& leaf) {
    choice_.assign(options_.size(), 0);
    if (scaled_) return walk<std::int64_t>(*scaled_, leaf);
    return walk<Score>(exact_, leaf);
  }

  /// The completion at which the last run() stopped.
  ApprovalProfile current() const {
    ApprovalProfile a{profile_.registry, {}};
    for (std::size_t v = 0; v < options_.size(); ++v) a.ballots.push_back(options_[v][choice_[v]]);
    return a;
  }

private:
  void build_scaled(const std::vector<bool>& sizes) {
    __extension__ typedef __int128 i128;
    constexpr i128 kLimit = std::numeric_limits<std::int64_t>::max() / 4;
    i128 lcm = 1;
    for (std::size_t x = 0; x < exact_.size(); ++x) {
      for (std::size_t y = 0; y < sizes.size(); ++y) {
        if (!sizes[y]) continue;
        const std::int64_t den = exact_[x][y].denominator();
        lcm = lcm / std::gcd(static_cast<std::int64_t>(lcm), den) * den;
        if (lcm > kLimit) return;
      }
    }
    std::vector<std::vector<std::int64_t>> table(exact_.size(), std::vector<std::int64_t>(sizes.size(), 0));
    const i128 voters = std::max<i128>(1, static_cast<i128>(options_.size()));
    for (std::size_t x = 0; x < exact_.size(); ++x) {
      for (std::size_t y = 0; y < sizes.size(); ++y) {
        const Score& s = exact_[x][y];
        const i128 v = static_cast<i128>(s.numerator()) * (lcm / s.denominator());
        if (v > kLimit / voters || v < -kLimit / voters) return;
        table[x][y] = static_cast<std::int64_t>(v);
      }
    }
    scaled_ = std::move(table);
  }

  template <typename V, typename Table, typename Leaf> bool walk(const Table& table, Leaf& leaf) {
    const std::size_t n = options_.size();
    const std::size_t count = committees_.size();
    std::vector<std::vector<V>> level(n + 1, std::vector<V>(count, V(0)));
    auto rec = [&](auto&& self, std::size_t v) -> bool {
      if (v == n) return static_cast<bool>(leaf(level[n]));
      const auto& opts = options_[v];
      for (std::size_t o = 0; o < opts.size(); ++o) {
        choice_[v] = o;
        const CandidateSet a = opts[o];
        const auto column = static_cast<std::size_t>(a.size());
        for (std::size_t j = 0; j < count; ++j)
          level[v + 1][j] = level[v][j] + table[static_cast<std::size_t>((a & committees_[j]).size())][column];
        if (self(self, v + 1)) return true;
      }
      return false;
    };
    return rec(rec, 0);
  }

  const PartialProfile& profile_;
  std::vector<CandidateSet> committees_;
  std::vector<std::vector<CandidateSet>> options_;
  std::vector<std::vector<Score>> exact_;
  std::optional<std::vector<std::vector<std::int64_t>>> scaled_;
  std::vector<std::size_t> choice_;
};

} // namespace abcu::detail

#endif // ABCU_BRUTE_HPP
