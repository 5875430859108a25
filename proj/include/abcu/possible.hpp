#ifndef ABCU_POSSIBLE_HPP
#define ABCU_POSSIBLE_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "abcu/brute.hpp"
#include "abcu/decision.hpp"
#include "abcu/dispatch.hpp"
#include "abcu/model.hpp"
#include "abcu/rules.hpp"

namespace abcu {

namespace detail {

inline void require_candidate(CandidateId c, int m) {
  if (c < 0 || c >= m) throw Error(ErrorKind::unknown_candidate, "candidate id out of range");
}

inline void require_three_valued(const PartialProfile& p) {
  if (!is_three_valued(p)) throw Error(ErrorKind::model_mismatch, "profile is not a 3VA profile");
}

inline void require_linear(const PartialProfile& p) {
  if (!is_linear(p)) throw Error(ErrorKind::model_mismatch, "profile is not a linear profile");
}

inline ApprovalProfile top_only_completion(const PartialProfile& p) {
  ApprovalProfile a{p.registry, {}};
  for (const auto& b : p.ballots) a.ballots.push_back(b.top());
  return a;
}

/// Each voter approves its top plus the undecided members of W.
inline ApprovalProfile intersect_completion(const PartialProfile& p, CandidateSet w) {
  ApprovalProfile a{p.registry, {}};
  for (const auto& b : p.ballots) a.ballots.push_back(b.top() | (b.middle() & w));
  return a;
}

// Per voter: nothing from the middle when W's score is already settled,
// otherwise the shortest prefix that lifts |A ∩ W| to the threshold.
inline ApprovalProfile threshold_completion(const PartialProfile& p, CandidateSet w, int t) {
  ApprovalProfile a{p.registry, {}};
  for (const auto& b : p.ballots) {
    CandidateSet approved = b.top();
    if ((b.top() & w).size() < t && ((b.top() | b.middle()) & w).size() >= t) {
      for (CandidateId c : b.middle_order()) {
        approved.insert(c);
        if ((approved & w).size() >= t) break;
      }
    }
    a.ballots.push_back(approved);
  }
  return a;
}

inline void require_threshold(int t, int k) {
  if (t < 1 || t > k)
    throw Error(ErrorKind::bad_threshold,
                "threshold " + std::to_string(t) + " must lie in 1..k (k = " + std::to_string(k) + ")");
}

inline Decision yes(ApprovalProfile witness, CandidateSet committee, std::string method) {
  return Decision{true, std::move(witness), committee, std::move(method), std::nullopt};
}

inline Decision no(std::string method) { return Decision{false, std::nullopt, std::nullopt, std::move(method), std::nullopt}; }

// Committee {c} plus the k-1 lowest-id other candidates.
inline CandidateSet some_committee_with(CandidateId c, int k, int m) {
  CandidateSet w{c};
  for (CandidateId d = 0; d < m && w.size() < k; ++d) w.insert(d);
  return w;
}

} // namespace detail

/// AV under 3VA: W is possible iff it wins when every voter approves only the
/// undecided members of W beyond its top.
inline Decision poscom_av_3va(const PartialProfile& p, CandidateSet w) {
  require_committee(w, w.size(), p.candidates());
  detail::require_three_valued(p);
  ApprovalProfile a = detail::intersect_completion(p, w);
  if (is_winning_committee(ScoringFunction::av(), a, w))
    return detail::yes(std::move(a), w, std::string(to_string(Algorithm::poscom_av_3va)));
  return detail::no(std::string(to_string(Algorithm::poscom_av_3va)));
}

/// Binary Thiele rule with threshold t under the linear model.
inline Decision poscom_binary_linear(const PartialProfile& p, CandidateSet w, int t) {
  const int k = w.size();
  require_committee(w, k, p.candidates());
  detail::require_linear(p);
  detail::require_threshold(t, k);
  ApprovalProfile a = detail::threshold_completion(p, w, t);
  if (is_winning_committee(ScoringFunction::binary(t), a, w))
    return detail::yes(std::move(a), w, std::string(to_string(Algorithm::poscom_binary_linear)));
  return detail::no(std::string(to_string(Algorithm::poscom_binary_linear)));
}

/// Scan every completion; the witness is the first one in enumeration order.
inline Decision poscom_brute(const PartialProfile& p, CandidateSet w, const ScoringFunction& f, int k,
                             std::uint64_t cap = kDefaultCap) {
  require_committee(w, k, p.candidates());
  detail::CompletionScan scan(f, p, k, cap);
  const auto& committees = scan.committees();
  const auto target = static_cast<std::size_t>(std::lower_bound(committees.begin(), committees.end(), w) - committees.begin());
  const bool found = scan.run([&](const auto& sums) {
    return std::all_of(sums.begin(), sums.end(), [&](const auto& s) { return s <= sums[target]; });
  });
  if (found) return detail::yes(scan.current(), w, "brute");
  return detail::no("brute");
}

inline Decision poscom(const PartialProfile& p, CandidateSet w, const ScoringFunction& f, int k,
                       Method method = Method::automatic, std::uint64_t cap = kDefaultCap) {
  require_committee(w, k, p.candidates());
  if (method != Method::brute) {
    const auto algo = select_algorithm(Query::poscom, &f, p, k);
    if (!algo) {
      if (method == Method::poly)
        throw Error(ErrorKind::no_poly_algorithm, "no polynomial PosCom algorithm for rule '" + f.spec() + "' on a " +
                                                      std::string(to_string(classify(p))) + " profile");
    } else {
      switch (*algo) {
      case Algorithm::zero_weight:
        return detail::yes(detail::top_only_completion(p), w, std::string(to_string(*algo)));
      case Algorithm::poscom_av_3va: return poscom_av_3va(p, w);
      case Algorithm::poscom_binary_linear: return poscom_binary_linear(p, w, f.binary_threshold());
      default: break;
      }
    }
  }
  return poscom_brute(p, w, f, k, cap);
}

/// AV under the linear model: approve the shortest prefix through c.
inline Decision posmem_av_linear(const PartialProfile& p, CandidateId c, int k) {
  const int m = p.candidates();
  detail::require_candidate(c, m);
  require_committee_size(k, m);
  detail::require_linear(p);
  ApprovalProfile a{p.registry, {}};
  for (const auto& b : p.ballots) {
    CandidateSet approved = b.top();
    if (b.middle().contains(c)) {
      for (CandidateId d : b.middle_order()) {
        approved.insert(d);
        if (d == c) break;
      }
    }
    a.ballots.push_back(approved);
  }
  std::vector<int> score(static_cast<std::size_t>(m), 0);
  for (CandidateSet s : a.ballots) s.for_each([&](CandidateId d) { ++score[d]; });
  const auto ahead = std::count_if(score.begin(), score.end(), [&](int s) { return s > score[c]; });
  const std::string method(to_string(Algorithm::posmem_av_linear));
  if (ahead > k - 1) return detail::no(method);

  // c together with the k-1 best other candidates
  std::vector<CandidateId> others;
  for (CandidateId d = 0; d < m; ++d) if (d != c) others.push_back(d);
  std::stable_sort(others.begin(), others.end(), [&](CandidateId x, CandidateId y) { return score[x] > score[y]; });
  CandidateSet w{c};
  for (int i = 0; i < k - 1; ++i) w.insert(others[static_cast<std::size_t>(i)]);
  return detail::yes(std::move(a), w, method);
}

inline Decision posmem_brute(const PartialProfile& p, CandidateId c, const ScoringFunction& f, int k,
                             std::uint64_t cap = kDefaultCap) {
  detail::require_candidate(c, p.candidates());
  detail::CompletionScan scan(f, p, k, cap);
  const auto& committees = scan.committees();
  std::size_t hit = 0;
  const bool found = scan.run([&](const auto& sums) {
    const auto best = *std::max_element(sums.begin(), sums.end());
    for (std::size_t j = 0; j < sums.size(); ++j) {
      if (committees[j].contains(c) && sums[j] == best) {
        hit = j;
        return true;
      }
    }
    return false;
  });
  if (found) return detail::yes(scan.current(), committees[hit], "brute");
  return detail::no("brute");
}

inline Decision posmem(const PartialProfile& p, CandidateId c, const ScoringFunction& f, int k,
                       Method method = Method::automatic, std::uint64_t cap = kDefaultCap) {
  const int m = p.candidates();
  detail::require_candidate(c, m);
  require_committee_size(k, m);
  if (method != Method::brute) {
    const auto algo = select_algorithm(Query::posmem, &f, p, k);
    if (!algo) {
      if (method == Method::poly)
        throw Error(ErrorKind::no_poly_algorithm, "no polynomial PosMem algorithm for rule '" + f.spec() + "' on a " +
                                                      std::string(to_string(classify(p))) + " profile");
    } else if (*algo == Algorithm::zero_weight) {
      return detail::yes(detail::top_only_completion(p), detail::some_committee_with(c, k, m),
                         std::string(to_string(*algo)));
    } else if (*algo == Algorithm::posmem_av_linear) {
      return posmem_av_linear(p, c, k);
    } else {
      // PosCom is polynomial here: try every committee containing c
      CandidateSet others = p.registry.all();
      others.erase(c);
      std::optional<Decision> found;
      for_each_subset_of_size(others, k - 1, [&](CandidateSet rest) {
        rest.insert(c);
        Decision d = *algo == Algorithm::posmem_via_poscom_av_3va ? poscom_av_3va(p, rest)
                                                                   : poscom_binary_linear(p, rest, f.binary_threshold());
        if (d.answer) found = std::move(d);
        return !found;
      });
      if (found) {
        found->method = std::string(to_string(*algo));
        return *found;
      }
      return detail::no(std::string(to_string(*algo)));
    }
  }
  return posmem_brute(p, c, f, k, cap);
}

} // namespace abcu

#endif // ABCU_POSSIBLE_HPP
