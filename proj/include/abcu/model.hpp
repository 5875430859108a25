#ifndef ABCU_MODEL_HPP
#define ABCU_MODEL_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "abcu/candidate_set.hpp"
#include "abcu/error.hpp"

namespace abcu {

using BigInt = boost::multiprecision::cpp_int;

class CandidateRegistry {
public:
  CandidateRegistry() = default;

  explicit CandidateRegistry(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.size() > static_cast<std::size_t>(kMaxCandidates))
      throw Error(ErrorKind::too_many_candidates,
                  std::to_string(names_.size()) + " candidates (at most 64 supported)");
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (!index_.emplace(names_[i], static_cast<CandidateId>(i)).second)
        throw Error(ErrorKind::duplicate_candidate, "candidate '" + names_[i] + "' listed twice");
    }
  }

  int size() const noexcept { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(CandidateId c) const { return names_.at(static_cast<std::size_t>(c)); }
  CandidateSet all() const noexcept { return CandidateSet::all(size()); }

  std::optional<CandidateId> find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  CandidateId id(const std::string& name) const {
    if (auto c = find(name)) return *c;
    throw Error(ErrorKind::unknown_candidate, "unknown candidate '" + name + "'");
  }

  CandidateSet set_of(const std::vector<std::string>& names) const {
    CandidateSet s;
    for (const auto& n : names) s.insert(id(n));
    return s;
  }

  std::vector<std::string> names_of(CandidateSet s) const {
    std::vector<std::string> out;
    s.for_each([&](CandidateId c) { out.push_back(name(c)); });
    return out;
  }

  friend bool operator==(const CandidateRegistry& a, const CandidateRegistry& b) { return a.names_ == b.names_; }

private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, CandidateId> index_;
};

/// Complete approval profile: one approval set per voter.
struct ApprovalProfile {
  CandidateRegistry registry;
  std::vector<CandidateSet> ballots;

  int voters() const noexcept { return static_cast<int>(ballots.size()); }
  int candidates() const noexcept { return registry.size(); }
};

// One voter's partial vote. `above[c]` holds every x with x > c in the
// voter's (transitively closed) precedence; it is empty outside the middle.
class PartialBallot {
public:
  PartialBallot() = default;

  /// Validates the partition and closes the precedence edges.
  /// `edges` are (x, y) pairs meaning x is preferred to y.
  static PartialBallot make(int m, CandidateSet top, CandidateSet middle, CandidateSet bottom,
                            const std::vector<std::pair<CandidateId, CandidateId>>& edges = {}) {
    const CandidateSet all = CandidateSet::all(m);
    if (!(top | middle | bottom).subset_of(all))
      throw Error(ErrorKind::unknown_candidate, "candidate id out of range");
    if (top.intersects(middle) || top.intersects(bottom) || middle.intersects(bottom))
      throw Error(ErrorKind::partition_overlap, "top, middle and bottom must be disjoint");
    if ((top | middle | bottom) != all)
      throw Error(ErrorKind::partition_incomplete, "top, middle and bottom must cover every candidate");

    PartialBallot b;
    b.top_ = top;
    b.middle_ = middle;
    b.bottom_ = bottom;
    b.above_.assign(static_cast<std::size_t>(m), CandidateSet{});
    for (auto [x, y] : edges) {
      if (!middle.contains(x) || !middle.contains(y))
        throw Error(ErrorKind::edge_outside_middle, "precedence pair outside the middle set");
      if (x == y) throw Error(ErrorKind::cycle_detected, "precedence pair relates a candidate to itself");
      b.above_[static_cast<std::size_t>(y)].insert(x);
    }
    // transitive closure, iterated to a fixpoint
    for (bool changed = true; changed;) {
      changed = false;
      middle.for_each([&](CandidateId c) {
        CandidateSet grown = b.above_[c];
        b.above_[c].for_each([&](CandidateId a) { grown |= b.above_[a]; });
        if (grown != b.above_[c]) {
          b.above_[c] = grown;
          changed = true;
        }
      });
    }
    middle.for_each([&](CandidateId c) {
      if (b.above_[c].contains(c)) throw Error(ErrorKind::cycle_detected, "precedence contains a cycle");
    });
    return b;
  }

  /// A ballot without uncertainty.
  static PartialBallot complete(int m, CandidateSet approved) {
    return make(m, approved, CandidateSet{}, CandidateSet::all(m) - approved);
  }

  int candidates() const noexcept { return static_cast<int>(above_.size()); }
  CandidateSet top() const noexcept { return top_; }
  CandidateSet middle() const noexcept { return middle_; }
  CandidateSet bottom() const noexcept { return bottom_; }

  /// Candidates strictly preferred to c.
  CandidateSet above(CandidateId c) const { return above_.at(static_cast<std::size_t>(c)); }
  /// Candidates c is strictly preferred to.
  CandidateSet below(CandidateId c) const {
    CandidateSet out;
    middle_.for_each([&](CandidateId d) {
      if (above_[d].contains(c)) out.insert(d);
    });
    return out;
  }
  bool prefers(CandidateId x, CandidateId y) const { return middle_.contains(y) && above_[y].contains(x); }

  bool has_precedence() const noexcept {
    return std::any_of(above_.begin(), above_.end(), [](CandidateSet s) { return !s.empty(); });
  }

  bool is_totally_ordered() const noexcept {
    const int q = middle_.size();
    bool total = true;
    middle_.for_each([&](CandidateId c) {
      if (above_[c].size() + below(c).size() != q - 1) total = false;
    });
    return total;
  }

  /// All closed precedence pairs (x, y), sorted.
  std::vector<std::pair<CandidateId, CandidateId>> pairs() const {
    std::vector<std::pair<CandidateId, CandidateId>> out;
    middle_.for_each([&](CandidateId y) { above_[y].for_each([&](CandidateId x) { out.emplace_back(x, y); }); });
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Cover pairs of the precedence (its transitive reduction), sorted.
  std::vector<std::pair<CandidateId, CandidateId>> cover_pairs() const {
    std::vector<std::pair<CandidateId, CandidateId>> out;
    for (auto [x, y] : pairs()) {
      const CandidateSet between = above_[y] - above_[x];
      bool covered = true;
      between.for_each([&](CandidateId z) {
        if (z != x && above_[z].contains(x)) covered = false;
      });
      if (covered) out.emplace_back(x, y);
    }
    return out;
  }

  /// Middle candidates sorted so that preferred candidates come first.
  std::vector<CandidateId> middle_order() const {
    std::vector<CandidateId> order = middle_.ids();
    std::stable_sort(order.begin(), order.end(),
                     [&](CandidateId a, CandidateId b) { return above_[a].size() < above_[b].size(); });
    return order;
  }

  /// True iff m is an admissible approved part of the middle set.
  bool is_upward_closed(CandidateSet m) const {
    if (!m.subset_of(middle_)) return false;
    bool ok = true;
    m.for_each([&](CandidateId c) {
      if (!above_[c].subset_of(m)) ok = false;
    });
    return ok;
  }

  bool admits(CandidateSet approved) const {
    return top_.subset_of(approved) && !approved.intersects(bottom_) && is_upward_closed(approved & middle_);
  }

  friend bool operator==(const PartialBallot&, const PartialBallot&) = default;

private:
  CandidateSet top_, middle_, bottom_;
  std::vector<CandidateSet> above_;
};

struct PartialProfile {
  CandidateRegistry registry;
  std::vector<PartialBallot> ballots;

  int voters() const noexcept { return static_cast<int>(ballots.size()); }
  int candidates() const noexcept { return registry.size(); }

  bool is_complete() const noexcept {
    return std::all_of(ballots.begin(), ballots.end(), [](const PartialBallot& b) { return b.middle().empty(); });
  }

  /// The unique completion of a profile without uncertainty.
  ApprovalProfile as_complete() const {
    if (!is_complete()) throw Error(ErrorKind::invalid_argument, "profile has undecided candidates");
    ApprovalProfile a{registry, {}};
    for (const auto& b : ballots) a.ballots.push_back(b.top());
    return a;
  }

  static PartialProfile from_complete(const ApprovalProfile& a) {
    PartialProfile p{a.registry, {}};
    for (CandidateSet s : a.ballots) p.ballots.push_back(PartialBallot::complete(a.candidates(), s));
    return p;
  }
};

/// Ballot as read from a document, before name resolution.
struct RawBallot {
  std::vector<std::string> top;
  std::vector<std::string> middle;
  std::optional<std::vector<std::string>> bottom;  // omitted: complement of top and middle
  std::vector<std::pair<std::string, std::string>> order;
};

namespace detail {

inline CandidateSet resolve_list(const CandidateRegistry& reg, const std::vector<std::string>& names,
                                 const std::string& where, CandidateSet& seen) {
  CandidateSet s;
  for (const auto& n : names) {
    auto c = reg.find(n);
    if (!c) throw Error(ErrorKind::unknown_candidate, where + ": unknown candidate '" + n + "'");
    if (seen.contains(*c))
      throw Error(ErrorKind::partition_overlap, where + ": candidate '" + n + "' appears more than once");
    seen.insert(*c);
    s.insert(*c);
  }
  return s;
}

} // namespace detail

inline PartialProfile validate_partial_profile(const std::vector<RawBallot>& raw, const CandidateRegistry& registry) {
  const int m = registry.size();
  PartialProfile profile{registry, {}};
  profile.ballots.reserve(raw.size());
  for (std::size_t v = 0; v < raw.size(); ++v) {
    const std::string where = "voter " + std::to_string(v);
    const RawBallot& r = raw[v];
    CandidateSet seen;
    const CandidateSet top = detail::resolve_list(registry, r.top, where, seen);
    const CandidateSet middle = detail::resolve_list(registry, r.middle, where, seen);
    CandidateSet bottom;
    if (r.bottom) {
      bottom = detail::resolve_list(registry, *r.bottom, where, seen);
      const CandidateSet missing = registry.all() - seen;
      if (!missing.empty())
        throw Error(ErrorKind::partition_incomplete,
                    where + ": candidate '" + registry.name(missing.front()) + "' is in none of top/middle/bottom");
    } else {
      bottom = registry.all() - seen;
    }
    std::vector<std::pair<CandidateId, CandidateId>> edges;
    for (const auto& [x, y] : r.order) {
      const CandidateId cx = registry.id(x);
      const CandidateId cy = registry.id(y);
      for (auto [c, name] : {std::pair{cx, x}, std::pair{cy, y}}) {
        if (!middle.contains(c))
          throw Error(ErrorKind::edge_outside_middle,
                      where + ": order pair mentions '" + name + "', which is not in the middle set");
      }
      edges.emplace_back(cx, cy);
    }
    try {
      profile.ballots.push_back(PartialBallot::make(m, top, middle, bottom, edges));
    } catch (const Error& e) {
      throw Error(e.kind(), where + ": " + e.what());
    }
  }
  return profile;
}

enum class ModelClass { three_va, linear, poset };

constexpr std::string_view to_string(ModelClass c) noexcept {
  switch (c) {
  case ModelClass::three_va: return "3va";
  case ModelClass::linear: return "linear";
  case ModelClass::poset: return "poset";
  }
  return "poset";
}

/// Every precedence is empty.
inline bool is_three_valued(const PartialProfile& p) {
  return std::none_of(p.ballots.begin(), p.ballots.end(), [](const PartialBallot& b) { return b.has_precedence(); });
}

/// Every precedence totally orders its middle set.
inline bool is_linear(const PartialProfile& p) {
  return std::all_of(p.ballots.begin(), p.ballots.end(), [](const PartialBallot& b) { return b.is_totally_ordered(); });
}

inline ModelClass classify(const PartialProfile& p) {
  if (is_three_valued(p)) return ModelClass::three_va;
  if (is_linear(p)) return ModelClass::linear;
  return ModelClass::poset;
}

/// Approval sets consistent with the ballot, ascending by the bitmask of the
/// approved middle part.
inline std::vector<CandidateSet> completions_of_ballot(const PartialBallot& b) {
  const std::vector<CandidateId> order = b.middle_order();
  std::vector<CandidateSet> out;
  // Decide candidates greater-first; including c is allowed iff everything
  // above it is already included, so every leaf is an up-set.
  auto rec = [&](auto&& self, std::size_t i, CandidateSet chosen) -> void {
    if (i == order.size()) {
      out.push_back(chosen);
      return;
    }
    const CandidateId c = order[i];
    self(self, i + 1, chosen);
    if (b.above(c).subset_of(chosen)) {
      CandidateSet with = chosen;
      with.insert(c);
      self(self, i + 1, with);
    }
  };
  rec(rec, 0, CandidateSet{});
  std::sort(out.begin(), out.end());
  for (auto& s : out) s |= b.top();
  return out;
}

namespace detail {

// Number of up-sets of the precedence restricted to `rest`.
inline BigInt count_up_sets(const PartialBallot& b, CandidateSet rest,
                            std::unordered_map<std::uint64_t, BigInt>& memo) {
  if (rest.empty()) return 1;
  bool related = false;
  rest.for_each([&](CandidateId c) {
    if (b.above(c).intersects(rest)) related = true;
  });
  if (!related) return BigInt(1) << rest.size();
  if (auto it = memo.find(rest.bits()); it != memo.end()) return it->second;
  const CandidateId x = rest.front();
  CandidateSet up = b.above(x);
  up.insert(x);
  CandidateSet down = b.below(x);
  down.insert(x);
  // x excluded: everything below x is excluded too; x included: everything above is forced in
  BigInt total = count_up_sets(b, rest - down, memo) + count_up_sets(b, rest - up, memo);
  memo.emplace(rest.bits(), total);
  return total;
}

} // namespace detail

inline BigInt count_ballot_completions(const PartialBallot& b) {
  std::unordered_map<std::uint64_t, BigInt> memo;
  return detail::count_up_sets(b, b.middle(), memo);
}

inline BigInt count_completions(const PartialProfile& p) {
  BigInt total = 1;
  for (const auto& b : p.ballots) total *= count_ballot_completions(b);
  return total;
}

inline void require_within_cap(const PartialProfile& p, std::uint64_t cap) {
  if (cap < 1) throw Error(ErrorKind::invalid_argument, "cap must be at least 1");
  const BigInt count = count_completions(p);
  if (count > cap)
    throw Error(ErrorKind::cap_exceeded,
                "profile has " + count.str() + " completions, cap is " + std::to_string(cap));
}

/// Single-consumer stream over all joint completions, voter-major, each
/// voter cycling through completions_of_ballot order.
class CompletionStream {
public:
  CompletionStream(const PartialProfile& p, std::uint64_t cap) : registry_(p.registry) {
    require_within_cap(p, cap);
    options_.reserve(p.ballots.size());
    for (const auto& b : p.ballots) options_.push_back(completions_of_ballot(b));
    index_.assign(options_.size(), 0);
  }

  std::optional<ApprovalProfile> next() {
    if (done_) return std::nullopt;
    ApprovalProfile a{registry_, {}};
    a.ballots.reserve(options_.size());
    for (std::size_t v = 0; v < options_.size(); ++v) a.ballots.push_back(options_[v][index_[v]]);
    advance();
    return a;
  }

private:
  void advance() {
    for (std::size_t v = options_.size(); v-- > 0;) {
      if (++index_[v] < options_[v].size()) return;
      index_[v] = 0;
    }
    done_ = true;
  }

  CandidateRegistry registry_;
  std::vector<std::vector<CandidateSet>> options_;
  std::vector<std::size_t> index_;
  bool done_ = false;
};

inline CompletionStream enumerate_completions(const PartialProfile& p, std::uint64_t cap) { return {p, cap}; }

inline bool is_completion(const ApprovalProfile& a, const PartialProfile& p) {
  if (a.voters() != p.voters() || a.candidates() != p.candidates())
    throw Error(ErrorKind::shape_mismatch, "profiles differ in voter or candidate count");
  for (std::size_t v = 0; v < a.ballots.size(); ++v) {
    if (!p.ballots[v].admits(a.ballots[v])) return false;
  }
  return true;
}

} // namespace abcu

#endif // ABCU_MODEL_HPP
