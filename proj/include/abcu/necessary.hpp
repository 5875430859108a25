#ifndef ABCU_NECESSARY_HPP
#define ABCU_NECESSARY_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "abcu/brute.hpp"
#include "abcu/decision.hpp"
#include "abcu/dispatch.hpp"
#include "abcu/model.hpp"
#include "abcu/possible.hpp"
#include "abcu/rules.hpp"

namespace abcu {

/// Largest achievable s(W') - s(W) over completions, per voter and in total.
struct ScoreDiffReport {
  CandidateSet base;   // W
  CandidateSet rival;  // W'
  std::vector<Score> per_voter;
  Score total{0};
  ApprovalProfile witness;  // a completion attaining `total`
};

struct BallotDiff {
  Score value{0};
  CandidateSet approved;
};

// Maximum of s(A, rival) - s(A, base) over the completions A of one ballot.
//
// Only the approved part of S = middle ∩ (base ∪ rival) and the number of
// approvals matter to a scoring rule. For each admissible R ⊆ S we force its
// up-closure, collect the candidates that can still be approved without
// touching S \ R, and scan prefixes of a topological order of those, from the
// empty prefix up.
inline BallotDiff max_diff_ballot(const ScoringFunction& f, const PartialBallot& b, CandidateSet base,
                                  CandidateSet rival) {
  if (base.size() != rival.size()) throw Error(ErrorKind::bad_k, "committees differ in size");
  const CandidateSet middle = b.middle();
  const CandidateSet s = middle & (base | rival);
  std::optional<BallotDiff> best;

  // submasks of s in ascending order
  std::uint64_t r_bits = 0;
  do {
    const CandidateSet r(r_bits);
    const CandidateSet excluded = s - r;
    CandidateSet forced = r;
    r.for_each([&](CandidateId c) { forced |= b.above(c); });
    if (!forced.intersects(excluded)) {
      std::vector<CandidateId> free;
      (middle - s - forced).for_each([&](CandidateId c) {
        if (!b.above(c).intersects(excluded)) free.push_back(c);
      });
      std::stable_sort(free.begin(), free.end(),
                       [&](CandidateId x, CandidateId y) { return b.above(x).size() < b.above(y).size(); });
      CandidateSet approved = b.top() | forced;
      for (std::size_t j = 0;; ++j) {
        const Score diff = ballot_score(f, approved, rival) - ballot_score(f, approved, base);
        if (!best || diff > best->value) best = BallotDiff{diff, approved};
        if (j == free.size()) break;
        approved.insert(free[j]);
      }
    }
    r_bits = (r_bits - s.bits()) & s.bits();
  } while (r_bits != 0);
  return *best;
}

inline ScoreDiffReport max_diff_profile(const ScoringFunction& f, const PartialProfile& p, CandidateSet base,
                                        CandidateSet rival) {
  const int m = p.candidates();
  require_committee(base, base.size(), m);
  require_committee(rival, base.size(), m);
  ScoreDiffReport report{base, rival, {}, Score(0), ApprovalProfile{p.registry, {}}};
  report.per_voter.reserve(p.ballots.size());
  for (const auto& b : p.ballots) {
    BallotDiff d = max_diff_ballot(f, b, base, rival);
    report.per_voter.push_back(d.value);
    report.total += d.value;
    report.witness.ballots.push_back(d.approved);
  }
  if (profile_score(f, report.witness, rival) - profile_score(f, report.witness, base) != report.total)
    throw std::logic_error("max_diff_profile: witness does not attain the reported difference");
  return report;
}

/// W is necessary iff no rival committee has a positive maximal score difference.
inline Decision neccom(const ScoringFunction& f, const PartialProfile& p, CandidateSet w, int k) {
  const int m = p.candidates();
  require_committee(w, k, m);
  const std::string method(to_string(Algorithm::neccom_max_diff));
  if (k == m) return Decision{true, std::nullopt, std::nullopt, method, std::nullopt};
  std::optional<Decision> counter;
  for_each_subset_of_size(p.registry.all(), k, [&](CandidateSet rival) {
    if (rival == w) return true;
    ScoreDiffReport r = max_diff_profile(f, p, w, rival);
    if (r.total > 0) counter = Decision{false, std::move(r.witness), rival, method, std::nullopt};
    return !counter;
  });
  if (counter) return *counter;
  return Decision{true, std::nullopt, std::nullopt, method, std::nullopt};
}

/// Brute force: W wins in every completion.
inline Decision neccom_brute(const ScoringFunction& f, const PartialProfile& p, CandidateSet w, int k,
                             std::uint64_t cap = kDefaultCap) {
  require_committee(w, k, p.candidates());
  detail::CompletionScan scan(f, p, k, cap);
  const auto& committees = scan.committees();
  const auto target = static_cast<std::size_t>(std::lower_bound(committees.begin(), committees.end(), w) - committees.begin());
  std::size_t beaten_by = 0;
  const bool failed = scan.run([&](const auto& sums) {
    for (std::size_t j = 0; j < sums.size(); ++j) {
      if (sums[j] > sums[target]) {
        beaten_by = j;
        return true;
      }
    }
    return false;
  });
  if (failed) return Decision{false, scan.current(), committees[beaten_by], "brute", std::nullopt};
  return Decision{true, std::nullopt, std::nullopt, "brute", std::nullopt};
}

namespace detail {

// c is necessary iff no committee avoiding c defeats it in the completion
// built for that committee.
template <typename Build>
Decision necmem_by_defeat(const PartialProfile& p, CandidateId c, int k, const ScoringFunction& f, Build&& build,
                          Algorithm algo) {
  CandidateSet others = p.registry.all();
  others.erase(c);
  std::optional<Decision> counter;
  for_each_subset_of_size(others, k, [&](CandidateSet w) {
    ApprovalProfile a = build(w);
    if (defeats(f, a, w, c)) counter = Decision{false, std::move(a), w, std::string(to_string(algo)), std::nullopt};
    return !counter;
  });
  if (counter) return *counter;
  return Decision{true, std::nullopt, std::nullopt, std::string(to_string(algo)), std::nullopt};
}

} // namespace detail

inline Decision necmem_av_3va(const PartialProfile& p, CandidateId c, int k) {
  detail::require_candidate(c, p.candidates());
  require_committee_size(k, p.candidates());
  detail::require_three_valued(p);
  return detail::necmem_by_defeat(
      p, c, k, ScoringFunction::av(), [&](CandidateSet w) { return detail::intersect_completion(p, w); },
      Algorithm::necmem_av_3va);
}

/// AV under the linear model: approve everything where c is decided, and the
/// prefix strictly before c elsewhere; c is necessary iff it still wins there.
inline Decision necmem_av_linear(const PartialProfile& p, CandidateId c, int k) {
  detail::require_candidate(c, p.candidates());
  require_committee_size(k, p.candidates());
  detail::require_linear(p);
  ApprovalProfile a{p.registry, {}};
  for (const auto& b : p.ballots) {
    CandidateSet approved = b.top();
    if (b.middle().contains(c)) {
      for (CandidateId d : b.middle_order()) {
        if (d == c) break;
        approved.insert(d);
      }
    } else {
      approved |= b.middle();
    }
    a.ballots.push_back(approved);
  }
  const std::string method(to_string(Algorithm::necmem_av_linear));
  const auto winners = winning_committees(ScoringFunction::av(), a, k);
  if (std::any_of(winners.begin(), winners.end(), [c](CandidateSet w) { return w.contains(c); }))
    return Decision{true, std::nullopt, std::nullopt, method, std::nullopt};
  return Decision{false, std::move(a), winners.front(), method, std::nullopt};
}

inline Decision necmem_binary_linear(const PartialProfile& p, CandidateId c, int k, int t) {
  detail::require_candidate(c, p.candidates());
  require_committee_size(k, p.candidates());
  detail::require_linear(p);
  detail::require_threshold(t, k);
  return detail::necmem_by_defeat(
      p, c, k, ScoringFunction::binary(t), [&](CandidateSet w) { return detail::threshold_completion(p, w, t); },
      Algorithm::necmem_binary_linear);
}

inline Decision necmem_brute(const PartialProfile& p, CandidateId c, const ScoringFunction& f, int k,
                             std::uint64_t cap = kDefaultCap) {
  detail::require_candidate(c, p.candidates());
  detail::CompletionScan scan(f, p, k, cap);
  const auto& committees = scan.committees();
  std::size_t winner = 0;
  const bool failed = scan.run([&](const auto& sums) {
    const auto best = *std::max_element(sums.begin(), sums.end());
    for (std::size_t j = 0; j < sums.size(); ++j) {
      if (committees[j].contains(c) && sums[j] == best) return false;
    }
    winner = static_cast<std::size_t>(std::find(sums.begin(), sums.end(), best) - sums.begin());
    return true;
  });
  if (failed) return Decision{false, scan.current(), committees[winner], "brute", std::nullopt};
  return Decision{true, std::nullopt, std::nullopt, "brute", std::nullopt};
}

inline Decision necmem(const PartialProfile& p, CandidateId c, const ScoringFunction& f, int k,
                       Method method = Method::automatic, std::uint64_t cap = kDefaultCap) {
  const int m = p.candidates();
  detail::require_candidate(c, m);
  require_committee_size(k, m);
  if (method != Method::brute) {
    const auto algo = select_algorithm(Query::necmem, &f, p, k);
    if (!algo) {
      if (method == Method::poly)
        throw Error(ErrorKind::no_poly_algorithm, "no polynomial NecMem algorithm for rule '" + f.spec() + "' on a " +
                                                      std::string(to_string(classify(p))) + " profile");
    } else {
      switch (*algo) {
      case Algorithm::zero_weight:
        return Decision{true, std::nullopt, std::nullopt, std::string(to_string(*algo)), std::nullopt};
      case Algorithm::necmem_av_3va: return necmem_av_3va(p, c, k);
      case Algorithm::necmem_av_linear: return necmem_av_linear(p, c, k);
      case Algorithm::necmem_binary_linear: return necmem_binary_linear(p, c, k, f.binary_threshold());
      default: break;
      }
    }
  }
  return necmem_brute(p, c, f, k, cap);
}

/// Dispatching front end for NecCom; the max-difference algorithm covers
/// every scoring rule and model, so method=poly never refuses.
inline Decision neccom(const PartialProfile& p, CandidateSet w, const ScoringFunction& f, int k,
                       Method method = Method::automatic, std::uint64_t cap = kDefaultCap) {
  if (method == Method::brute) return neccom_brute(f, p, w, k, cap);
  return neccom(f, p, w, k);
}

} // namespace abcu

#endif // ABCU_NECESSARY_HPP
