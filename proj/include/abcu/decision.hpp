#ifndef ABCU_DECISION_HPP
#define ABCU_DECISION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "abcu/candidate_set.hpp"
#include "abcu/error.hpp"
#include "abcu/model.hpp"

namespace abcu {

inline constexpr std::uint64_t kDefaultCap = std::uint64_t{1} << 20;

enum class Method { automatic, poly, brute };

inline Method parse_method(std::string_view s) {
  if (s == "auto") return Method::automatic;
  if (s == "poly") return Method::poly;
  if (s == "brute") return Method::brute;
  throw Error(ErrorKind::invalid_argument, "unknown method '" + std::string(s) + "'");
}

/// A voter group witnessing a representation violation.
struct GroupWitness {
  std::vector<int> voters;                // ascending voter indices
  CandidateSet common;                    // |common| == level, approved by every voter in the group
  int level = 1;
  std::optional<CandidateSet> allowed;    // PJR only: the committee members the group may reach

  friend bool operator==(const GroupWitness&, const GroupWitness&) = default;
};

// Answer to a possible/necessary query. For a "yes" on an existential query
// the witness is a completion proving it; for a "no" on a universal query it
// is a counterexample completion.
struct Decision {
  bool answer = false;
  std::optional<ApprovalProfile> witness;
  std::optional<CandidateSet> witness_committee;
  std::string method;
  std::optional<GroupWitness> group_witness;
};

} // namespace abcu

#endif // ABCU_DECISION_HPP
