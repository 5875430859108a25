#ifndef ABCU_TESTS_SUPPORT_HPP
#define ABCU_TESTS_SUPPORT_HPP

// Shared fixtures, random instance generators and a naive completion oracle.
// The oracle deliberately avoids the library's completion enumeration and
// scoring helpers: it filters every subset of each middle set against the
// explicit precedence pairs and scores committees with its own arithmetic.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "abcu/abcu.hpp"

namespace abcu::testing {

inline RawBallot raw(std::vector<std::string> top, std::vector<std::string> middle, std::vector<std::string> bottom,
                     std::vector<std::pair<std::string, std::string>> order = {}) {
  return RawBallot{std::move(top), std::move(middle), std::move(bottom), std::move(order)};
}

inline PartialProfile profile(std::vector<std::string> names, const std::vector<RawBallot>& voters) {
  return validate_partial_profile(voters, CandidateRegistry(std::move(names)));
}

inline ApprovalProfile approvals(std::vector<std::string> names, const std::vector<std::vector<std::string>>& ballots) {
  ApprovalProfile a{CandidateRegistry(std::move(names)), {}};
  for (const auto& b : ballots) a.ballots.push_back(a.registry.set_of(b));
  return a;
}

inline PartialProfile e1() {
  return profile({"a", "b"}, {raw({"a"}, {}, {"b"}), raw({}, {"b"}, {"a"})});
}

inline PartialProfile e2() {
  return profile({"a", "b", "c"}, {raw({"a"}, {"b", "c"}, {}, {{"b", "c"}}), raw({"c"}, {}, {"a", "b"})});
}

inline ApprovalProfile e3() { return approvals({"a", "b", "c", "d"}, {{"c"}, {"c"}, {"a"}, {"b"}}); }

// ---- oracle ---------------------------------------------------------------

// Every subset of the middle, kept when no precedence pair (x, y) has y
// approved and x not.
inline std::vector<CandidateSet> oracle_ballot_completions(const PartialBallot& b) {
  const auto pairs = b.pairs();
  const std::vector<CandidateId> mid = b.middle().ids();
  std::vector<CandidateSet> out;
  for (std::uint32_t mask = 0; mask < (1U << mid.size()); ++mask) {
    CandidateSet chosen;
    for (std::size_t i = 0; i < mid.size(); ++i)
      if ((mask >> i) & 1U) chosen.insert(mid[i]);
    const bool closed = std::all_of(pairs.begin(), pairs.end(),
                                    [&](auto e) { return !chosen.contains(e.second) || chosen.contains(e.first); });
    if (closed) out.push_back(b.top() | chosen);
  }
  return out;
}

inline std::vector<ApprovalProfile> oracle_completions(const PartialProfile& p) {
  std::vector<ApprovalProfile> out{ApprovalProfile{p.registry, {}}};
  for (const auto& b : p.ballots) {
    std::vector<ApprovalProfile> next;
    for (const auto& partial : out) {
      for (CandidateSet a : oracle_ballot_completions(b)) {
        ApprovalProfile extended = partial;
        extended.ballots.push_back(a);
        next.push_back(std::move(extended));
      }
    }
    out = std::move(next);
  }
  return out;
}

// Independent rule evaluation by name.
enum class OracleRule { av, cc, pav, sav, binary2 };

inline const char* rule_spec(OracleRule r) {
  switch (r) {
  case OracleRule::av: return "av";
  case OracleRule::cc: return "cc";
  case OracleRule::pav: return "pav";
  case OracleRule::sav: return "sav";
  case OracleRule::binary2: return "binary:2";
  }
  return "av";
}

inline Score oracle_ballot_score(OracleRule r, CandidateSet a, CandidateSet s) {
  int hits = 0;
  for (CandidateId c : s.ids())
    if (a.contains(c)) ++hits;
  switch (r) {
  case OracleRule::av: return Score(hits);
  case OracleRule::cc: return Score(hits > 0 ? 1 : 0);
  case OracleRule::pav: {
    Score sum(0);
    for (int i = 1; i <= hits; ++i) sum += Score(1, i);
    return sum;
  }
  case OracleRule::sav: return a.empty() ? Score(0) : Score(hits, a.size());
  case OracleRule::binary2: return Score(hits >= 2 ? 1 : 0);
  }
  return Score(0);
}

inline Score oracle_profile_score(OracleRule r, const ApprovalProfile& a, CandidateSet s) {
  Score sum(0);
  for (CandidateSet b : a.ballots) sum += oracle_ballot_score(r, b, s);
  return sum;
}

inline std::vector<CandidateSet> all_committees(int m, int k) {
  std::vector<CandidateSet> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
    if (std::popcount(bits) == k) out.push_back(CandidateSet(bits));
  }
  return out;
}

// Joint completions as plain ballot vectors, voter-major.
inline std::vector<std::vector<CandidateSet>> oracle_joint_ballots(const PartialProfile& p) {
  std::vector<std::vector<CandidateSet>> out{{}};
  for (const auto& b : p.ballots) {
    std::vector<std::vector<CandidateSet>> next;
    const auto options = oracle_ballot_completions(b);
    for (const auto& partial : out) {
      for (CandidateSet a : options) {
        next.push_back(partial);
        next.back().push_back(a);
      }
    }
    out = std::move(next);
  }
  return out;
}

// Every oracle score is a multiple of 1/420 while m <= 7 and k <= 3 (PAV
// harmonic sums and SAV fractions), so sums run on scaled integers.
inline constexpr std::int64_t kOracleScale = 420;

inline std::int64_t oracle_scaled(OracleRule r, CandidateSet a, CandidateSet s) {
  const Score v = oracle_ballot_score(r, a, s) * kOracleScale;
  return v.numerator() / v.denominator();
}

// Scores of every committee in every completion, plus derived answers.
struct OracleTable {
  std::vector<CandidateSet> committees;
  std::vector<std::vector<CandidateSet>> completions;
  std::vector<std::vector<std::int64_t>> scores;  // [completion][committee], scaled
  std::vector<std::int64_t> best;                 // per completion

  OracleTable(OracleRule r, const PartialProfile& p, int k)
      : committees(all_committees(p.candidates(), k)), completions(oracle_joint_ballots(p)) {
    // memoize per-ballot scores: the same approval set recurs across completions
    std::vector<std::vector<std::int64_t>> by_set(std::size_t{1} << p.candidates());
    auto ballot_row = [&](CandidateSet a) -> const std::vector<std::int64_t>& {
      auto& row = by_set[a.bits()];
      if (row.empty())
        for (CandidateSet s : committees) row.push_back(oracle_scaled(r, a, s));
      return row;
    };
    for (const auto& ballots : completions) {
      std::vector<std::int64_t> row(committees.size(), 0);
      for (CandidateSet a : ballots) {
        const auto& add = ballot_row(a);
        for (std::size_t j = 0; j < row.size(); ++j) row[j] += add[j];
      }
      best.push_back(*std::max_element(row.begin(), row.end()));
      scores.push_back(std::move(row));
    }
  }

  std::size_t index(CandidateSet w) const {
    return static_cast<std::size_t>(std::find(committees.begin(), committees.end(), w) - committees.begin());
  }
  bool wins(std::size_t a, std::size_t j) const { return scores[a][j] == best[a]; }
  bool member_wins(std::size_t a, CandidateId c) const {
    for (std::size_t j = 0; j < committees.size(); ++j)
      if (committees[j].contains(c) && wins(a, j)) return true;
    return false;
  }
  bool possible(CandidateSet w) const {
    const std::size_t j = index(w);
    for (std::size_t a = 0; a < completions.size(); ++a)
      if (wins(a, j)) return true;
    return false;
  }
  bool necessary(CandidateSet w) const {
    const std::size_t j = index(w);
    for (std::size_t a = 0; a < completions.size(); ++a)
      if (!wins(a, j)) return false;
    return true;
  }
  bool possible_member(CandidateId c) const {
    for (std::size_t a = 0; a < completions.size(); ++a)
      if (member_wins(a, c)) return true;
    return false;
  }
  bool necessary_member(CandidateId c) const {
    for (std::size_t a = 0; a < completions.size(); ++a)
      if (!member_wins(a, c)) return false;
    return true;
  }
  Score max_delta(CandidateSet w, CandidateSet rival) const {
    const std::size_t i = index(w);
    const std::size_t j = index(rival);
    std::int64_t out = scores[0][j] - scores[0][i];
    for (std::size_t a = 1; a < completions.size(); ++a) out = std::max(out, scores[a][j] - scores[a][i]);
    return Score(out, kOracleScale);
  }
};

// Literal JR/PJR/EJR evaluation over all voter groups, kept separate from
// the library's own group oracle.
inline bool oracle_axiom(const ApprovalProfile& a, CandidateSet w, int k, Axiom axiom) {
  const int n = a.voters();
  for (std::uint32_t g = 1; g < (1U << n); ++g) {
    CandidateSet common = a.registry.all();
    CandidateSet joint;
    int best = 0;
    int size = 0;
    for (int v = 0; v < n; ++v) {
      if (!((g >> v) & 1U)) continue;
      const CandidateSet b = a.ballots[static_cast<std::size_t>(v)];
      common &= b;
      joint |= b;
      best = std::max(best, (b & w).size());
      ++size;
    }
    const int levels = axiom == Axiom::jr ? 1 : k;
    for (int l = 1; l <= levels; ++l) {
      if (common.size() < l || k * size < l * n) continue;
      if (axiom == Axiom::jr && (joint & w).empty()) return false;
      if (axiom == Axiom::pjr && (joint & w).size() < l) return false;
      if (axiom == Axiom::ejr && best < l) return false;
    }
  }
  return true;
}

// ---- random instances ---------------------------------------------------

enum class Shape { three_va, linear, poset };

inline std::vector<std::string> candidate_names(int m) {
  std::vector<std::string> out;
  for (int i = 0; i < m; ++i) out.push_back(std::string(1, static_cast<char>('a' + i)));
  return out;
}

inline PartialBallot random_ballot(std::mt19937_64& rng, int m, Shape shape, int max_middle) {
  std::vector<CandidateId> ids(static_cast<std::size_t>(m));
  std::iota(ids.begin(), ids.end(), 0);
  std::shuffle(ids.begin(), ids.end(), rng);
  const int middle_size = std::uniform_int_distribution<int>(0, std::min(max_middle, m))(rng);
  CandidateSet top;
  CandidateSet middle;
  CandidateSet bottom;
  std::vector<CandidateId> mids(ids.begin(), ids.begin() + middle_size);
  for (CandidateId c : mids) middle.insert(c);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t i = static_cast<std::size_t>(middle_size); i < ids.size(); ++i) {
    if (coin(rng)) top.insert(ids[i]);
    else bottom.insert(ids[i]);
  }
  std::vector<std::pair<CandidateId, CandidateId>> edges;
  if (shape == Shape::linear) {
    for (std::size_t i = 1; i < mids.size(); ++i) edges.emplace_back(mids[i - 1], mids[i]);
  } else if (shape == Shape::poset) {
    std::bernoulli_distribution edge(0.4);
    for (std::size_t i = 0; i < mids.size(); ++i)
      for (std::size_t j = i + 1; j < mids.size(); ++j)
        if (edge(rng)) edges.emplace_back(mids[i], mids[j]);
  }
  return PartialBallot::make(m, top, middle, bottom, edges);
}

inline PartialProfile random_profile(std::mt19937_64& rng, int n, int m, Shape shape, int max_middle) {
  PartialProfile p{CandidateRegistry(candidate_names(m)), {}};
  for (int v = 0; v < n; ++v) p.ballots.push_back(random_ballot(rng, m, shape, max_middle));
  return p;
}

inline ApprovalProfile random_approvals(std::mt19937_64& rng, int n, int m, double density) {
  ApprovalProfile a{CandidateRegistry(candidate_names(m)), {}};
  std::bernoulli_distribution coin(density);
  for (int v = 0; v < n; ++v) {
    CandidateSet b;
    for (CandidateId c = 0; c < m; ++c)
      if (coin(rng)) b.insert(c);
    a.ballots.push_back(b);
  }
  return a;
}

inline CandidateSet random_committee(std::mt19937_64& rng, int m, int k) {
  std::vector<CandidateId> ids(static_cast<std::size_t>(m));
  std::iota(ids.begin(), ids.end(), 0);
  std::shuffle(ids.begin(), ids.end(), rng);
  CandidateSet w;
  for (int i = 0; i < k; ++i) w.insert(ids[static_cast<std::size_t>(i)]);
  return w;
}

} // namespace abcu::testing

#endif // ABCU_TESTS_SUPPORT_HPP
