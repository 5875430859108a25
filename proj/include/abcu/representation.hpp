#ifndef ABCU_REPRESENTATION_HPP
#define ABCU_REPRESENTATION_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "abcu/decision.hpp"
#include "abcu/dispatch.hpp"
#include "abcu/model.hpp"
#include "abcu/rules.hpp"

namespace abcu {

enum class Axiom { jr, pjr, ejr };

inline Axiom parse_axiom(std::string_view s) {
  if (s == "jr") return Axiom::jr;
  if (s == "pjr") return Axiom::pjr;
  if (s == "ejr") return Axiom::ejr;
  throw Error(ErrorKind::invalid_argument, "unknown axiom '" + std::string(s) + "'");
}

constexpr std::string_view to_string(Axiom a) noexcept {
  switch (a) {
  case Axiom::jr: return "jr";
  case Axiom::pjr: return "pjr";
  case Axiom::ejr: return "ejr";
  }
  return "jr";
}

struct AxiomResult {
  bool satisfied = true;
  std::optional<GroupWitness> witness;
};

namespace detail {

// k·|G| >= ℓ·n, the cohesiveness size bound, in integers.
inline bool large_enough(std::int64_t group, int level, int n, int k) {
  return static_cast<std::int64_t>(k) * group >= static_cast<std::int64_t>(level) * n;
}

inline CandidateSet lowest(CandidateSet s, int count) {
  CandidateSet out;
  s.for_each([&](CandidateId c) {
    if (out.size() < count) out.insert(c);
  });
  return out;
}

} // namespace detail

/// JR: for every candidate, the voters approving it but no committee member
/// must number fewer than n/k.
inline AxiomResult check_jr(const ApprovalProfile& profile, CandidateSet w, int k) {
  require_committee(w, k, profile.candidates());
  const int n = profile.voters();
  for (CandidateId c = 0; c < profile.candidates(); ++c) {
    std::vector<int> group;
    for (int v = 0; v < n; ++v) {
      const CandidateSet a = profile.ballots[static_cast<std::size_t>(v)];
      if (a.contains(c) && !a.intersects(w)) group.push_back(v);
    }
    if (!group.empty() && detail::large_enough(static_cast<std::int64_t>(group.size()), 1, n, k))
      return {false, GroupWitness{std::move(group), CandidateSet{c}, 1, std::nullopt}};
  }
  return {};
}

/// PJR for fixed k: for each level ℓ, ℓ-set S of commonly approved
/// candidates, and X ⊆ W with |X| < ℓ, the voters approving S whose
/// committee members all lie in X must number fewer than ℓ·n/k. Levels above
/// `max_level` (default k) are skipped.
inline AxiomResult check_pjr(const ApprovalProfile& profile, CandidateSet w, int k, int max_level = -1) {
  require_committee(w, k, profile.candidates());
  const int n = profile.voters();
  std::optional<GroupWitness> found;
  const int top = max_level < 0 ? k : std::min(k, max_level);
  for (int level = 1; level <= top && !found; ++level) {
    for_each_subset_of_size(profile.registry.all(), level, [&](CandidateSet common) {
      for (int size = 0; size < level && !found; ++size) {
        for_each_subset_of_size(w, size, [&](CandidateSet allowed) {
          std::vector<int> group;
          for (int v = 0; v < n; ++v) {
            const CandidateSet a = profile.ballots[static_cast<std::size_t>(v)];
            if (common.subset_of(a) && (a & w).subset_of(allowed)) group.push_back(v);
          }
          if (!group.empty() && detail::large_enough(static_cast<std::int64_t>(group.size()), level, n, k))
            found = GroupWitness{std::move(group), common, level, allowed};
          return !found;
        });
      }
      return !found;
    });
  }
  if (found) return {false, std::move(found)};
  return {};
}

/// EJR for fixed k: for each ℓ and ℓ-set S, the voters approving S with fewer
/// than ℓ committee members must number fewer than ℓ·n/k.
inline AxiomResult check_ejr(const ApprovalProfile& profile, CandidateSet w, int k, int max_level = -1) {
  require_committee(w, k, profile.candidates());
  const int n = profile.voters();
  std::optional<GroupWitness> found;
  const int top = max_level < 0 ? k : std::min(k, max_level);
  for (int level = 1; level <= top && !found; ++level) {
    for_each_subset_of_size(profile.registry.all(), level, [&](CandidateSet common) {
      std::vector<int> group;
      for (int v = 0; v < n; ++v) {
        const CandidateSet a = profile.ballots[static_cast<std::size_t>(v)];
        if (common.subset_of(a) && (a & w).size() < level) group.push_back(v);
      }
      if (!group.empty() && detail::large_enough(static_cast<std::int64_t>(group.size()), level, n, k))
        found = GroupWitness{std::move(group), common, level, std::nullopt};
      return !found;
    });
  }
  if (found) return {false, std::move(found)};
  return {};
}

inline AxiomResult check_axiom(const ApprovalProfile& profile, CandidateSet w, int k, Axiom axiom) {
  switch (axiom) {
  case Axiom::jr: return check_jr(profile, w, k);
  case Axiom::pjr: return check_pjr(profile, w, k);
  case Axiom::ejr: return check_ejr(profile, w, k);
  }
  return {};
}

inline constexpr int kMaxBruteVoters = 15;

/// Literal evaluation of the axiom over every nonempty voter group.
inline AxiomResult check_axiom_brute(const ApprovalProfile& profile, CandidateSet w, int k, Axiom axiom) {
  require_committee(w, k, profile.candidates());
  const int n = profile.voters();
  if (n > kMaxBruteVoters)
    throw Error(ErrorKind::too_many_voters, std::to_string(n) + " voters (group enumeration limited to 15)");
  const int max_level = axiom == Axiom::jr ? 1 : k;
  for (std::uint32_t g = 1; g < (std::uint32_t{1} << n); ++g) {
    CandidateSet common = profile.registry.all();
    CandidateSet joint;
    int best_hits = 0;
    std::vector<int> group;
    for (int v = 0; v < n; ++v) {
      if (!((g >> v) & 1U)) continue;
      const CandidateSet a = profile.ballots[static_cast<std::size_t>(v)];
      common &= a;
      joint |= a;
      best_hits = std::max(best_hits, (a & w).size());
      group.push_back(v);
    }
    for (int level = 1; level <= max_level; ++level) {
      if (common.size() < level || !detail::large_enough(static_cast<std::int64_t>(group.size()), level, n, k)) continue;
      bool violated = false;
      std::optional<CandidateSet> allowed;
      switch (axiom) {
      case Axiom::jr: violated = !joint.intersects(w); break;
      case Axiom::pjr:
        violated = (joint & w).size() < level;
        allowed = joint & w;
        break;
      case Axiom::ejr: violated = best_hits < level; break;
      }
      if (violated) return {false, GroupWitness{group, detail::lowest(common, level), level, allowed}};
    }
  }
  return {};
}

/// Approval sets from which JR can only survive: voters that can reach W
/// approve their whole middle, the rest approve only their top.
inline Decision posjr(const PartialProfile& p, CandidateSet w, int k) {
  require_committee(w, k, p.candidates());
  ApprovalProfile a{p.registry, {}};
  for (const auto& b : p.ballots) a.ballots.push_back(b.middle().intersects(w) ? b.top() | b.middle() : b.top());
  AxiomResult r = check_jr(a, w, k);
  const std::string method(to_string(Algorithm::posjr_canonical));
  if (r.satisfied) return Decision{true, std::move(a), std::nullopt, method, std::nullopt};
  return Decision{false, std::nullopt, std::nullopt, method, std::move(r.witness)};
}

/// Each voter approves its top plus the largest up-set of its middle that
/// avoids W: every candidate with no W member at or above it.
inline Decision necjr(const PartialProfile& p, CandidateSet w, int k) {
  require_committee(w, k, p.candidates());
  ApprovalProfile a{p.registry, {}};
  for (const auto& b : p.ballots) {
    CandidateSet avoid;
    (b.middle() - w).for_each([&](CandidateId c) {
      if (!b.above(c).intersects(w)) avoid.insert(c);
    });
    a.ballots.push_back(b.top() | avoid);
  }
  AxiomResult r = check_jr(a, w, k);
  const std::string method(to_string(Algorithm::necjr_canonical));
  if (r.satisfied) return Decision{true, std::nullopt, std::nullopt, method, std::nullopt};
  return Decision{false, std::move(a), std::nullopt, method, std::move(r.witness)};
}

/// Exists/forall over all completions. Works for every axiom; the only route
/// for PJR and EJR under incompleteness.
inline Decision axiom_over_completions(const PartialProfile& p, CandidateSet w, int k, Axiom axiom, bool necessary,
                                       std::uint64_t cap = kDefaultCap) {
  require_committee(w, k, p.candidates());
  auto stream = enumerate_completions(p, cap);
  while (auto a = stream.next()) {
    AxiomResult r = check_axiom(*a, w, k, axiom);
    if (!necessary && r.satisfied) return Decision{true, std::move(*a), std::nullopt, "brute", std::nullopt};
    if (necessary && !r.satisfied) return Decision{false, std::move(*a), std::nullopt, "brute", std::move(r.witness)};
  }
  return Decision{necessary, std::nullopt, std::nullopt, "brute", std::nullopt};
}

/// Lemma edits that preserve JR.
struct RemoveApproval {
  int voter;
  CandidateId candidate;  // must lie outside W
};
struct ReplaceBallot {
  int voter;
  CandidateSet approved;  // must meet W
};
using JrEdit = std::variant<RemoveApproval, ReplaceBallot>;

inline ApprovalProfile apply_edit(const ApprovalProfile& profile, CandidateSet w, const JrEdit& edit) {
  ApprovalProfile out = profile;
  auto voter_ok = [&](int v) { return v >= 0 && v < profile.voters(); };
  if (const auto* rm = std::get_if<RemoveApproval>(&edit)) {
    if (!voter_ok(rm->voter)) throw Error(ErrorKind::bad_edit, "voter index out of range");
    if (rm->candidate < 0 || rm->candidate >= profile.candidates() || w.contains(rm->candidate))
      throw Error(ErrorKind::bad_edit, "only candidates outside the committee may be removed");
    out.ballots[static_cast<std::size_t>(rm->voter)].erase(rm->candidate);
  } else {
    const auto& rep = std::get<ReplaceBallot>(edit);
    if (!voter_ok(rep.voter)) throw Error(ErrorKind::bad_edit, "voter index out of range");
    if (!rep.approved.intersects(w) || !rep.approved.subset_of(profile.registry.all()))
      throw Error(ErrorKind::bad_edit, "replacement ballot must approve a committee member");
    out.ballots[static_cast<std::size_t>(rep.voter)] = rep.approved;
  }
  return out;
}

/// Applies a JR-preserving edit and re-checks JR on the result.
inline bool jr_modification_check(const ApprovalProfile& profile, CandidateSet w, int k, const JrEdit& edit) {
  if (!check_jr(profile, w, k).satisfied)
    throw Error(ErrorKind::invalid_argument, "committee does not satisfy JR before the edit");
  return check_jr(apply_edit(profile, w, edit), w, k).satisfied;
}

} // namespace abcu

#endif // ABCU_REPRESENTATION_HPP
