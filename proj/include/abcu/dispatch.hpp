#ifndef ABCU_DISPATCH_HPP
#define ABCU_DISPATCH_HPP

#include <array>
#include <optional>
#include <string_view>

#include "abcu/model.hpp"
#include "abcu/rules.hpp"

namespace abcu {

enum class Query { poscom, posmem, neccom, necmem, posjr, necjr };

enum class RuleClass {
  av,                // approval voting
  binary,            // binary Thiele rule, CC included (t = 1)
  binary_vanishing,  // binary Thiele rule with threshold t > k: every committee scores 0
  any_scoring,       // every ABC scoring rule
  none,              // representation queries do not take a rule
};

enum class ModelCapability { three_va, linear, poset };

enum class Algorithm {
  zero_weight,
  poscom_av_3va,
  poscom_binary_linear,
  posmem_av_linear,
  posmem_via_poscom_av_3va,
  posmem_via_poscom_binary_linear,
  neccom_max_diff,
  necmem_av_3va,
  necmem_av_linear,
  necmem_binary_linear,
  posjr_canonical,
  necjr_canonical,
};

constexpr std::string_view to_string(Algorithm a) noexcept {
  switch (a) {
  case Algorithm::zero_weight: return "zero-weight";
  case Algorithm::poscom_av_3va: return "poscom-av-3va";
  case Algorithm::poscom_binary_linear: return "poscom-binary-linear";
  case Algorithm::posmem_av_linear: return "posmem-av-linear";
  case Algorithm::posmem_via_poscom_av_3va: return "posmem-via-poscom-av-3va";
  case Algorithm::posmem_via_poscom_binary_linear: return "posmem-via-poscom-binary-linear";
  case Algorithm::neccom_max_diff: return "neccom-max-diff";
  case Algorithm::necmem_av_3va: return "necmem-av-3va";
  case Algorithm::necmem_av_linear: return "necmem-av-linear";
  case Algorithm::necmem_binary_linear: return "necmem-binary-linear";
  case Algorithm::posjr_canonical: return "posjr-canonical";
  case Algorithm::necjr_canonical: return "necjr-canonical";
  }
  return "unknown";
}

struct DispatchEntry {
  Query query;
  RuleClass rule;
  ModelCapability model;
  Algorithm algorithm;
};

// Polynomial cells, first match wins. A (query, rule, profile) triple with no
// matching entry has no polynomial algorithm here and is answered by brute
// force over completions (method=auto) or refused (method=poly). The model
// column is a capability: a 3VA profile whose middles have at most one
// candidate is also linear.
inline constexpr std::array kDispatchTable{
    DispatchEntry{Query::poscom, RuleClass::binary_vanishing, ModelCapability::poset, Algorithm::zero_weight},
    DispatchEntry{Query::poscom, RuleClass::av, ModelCapability::three_va, Algorithm::poscom_av_3va},
    DispatchEntry{Query::poscom, RuleClass::binary, ModelCapability::linear, Algorithm::poscom_binary_linear},

    DispatchEntry{Query::posmem, RuleClass::binary_vanishing, ModelCapability::poset, Algorithm::zero_weight},
    DispatchEntry{Query::posmem, RuleClass::av, ModelCapability::linear, Algorithm::posmem_av_linear},
    DispatchEntry{Query::posmem, RuleClass::av, ModelCapability::three_va, Algorithm::posmem_via_poscom_av_3va},
    DispatchEntry{Query::posmem, RuleClass::binary, ModelCapability::linear, Algorithm::posmem_via_poscom_binary_linear},

    DispatchEntry{Query::neccom, RuleClass::any_scoring, ModelCapability::poset, Algorithm::neccom_max_diff},

    DispatchEntry{Query::necmem, RuleClass::binary_vanishing, ModelCapability::poset, Algorithm::zero_weight},
    DispatchEntry{Query::necmem, RuleClass::av, ModelCapability::three_va, Algorithm::necmem_av_3va},
    DispatchEntry{Query::necmem, RuleClass::av, ModelCapability::linear, Algorithm::necmem_av_linear},
    DispatchEntry{Query::necmem, RuleClass::binary, ModelCapability::linear, Algorithm::necmem_binary_linear},

    DispatchEntry{Query::posjr, RuleClass::none, ModelCapability::poset, Algorithm::posjr_canonical},
    DispatchEntry{Query::necjr, RuleClass::none, ModelCapability::poset, Algorithm::necjr_canonical},
};

namespace detail {

inline bool rule_matches(RuleClass rule, const ScoringFunction* f, int k) {
  switch (rule) {
  case RuleClass::none: return true;
  case RuleClass::any_scoring: return f != nullptr;
  case RuleClass::av: return f != nullptr && f->is_av();
  case RuleClass::binary: return f != nullptr && f->binary_threshold() > 0 && f->binary_threshold() <= k;
  case RuleClass::binary_vanishing: return f != nullptr && f->binary_threshold() > k;
  }
  return false;
}

inline bool model_matches(ModelCapability model, const PartialProfile& p) {
  switch (model) {
  case ModelCapability::poset: return true;
  case ModelCapability::three_va: return is_three_valued(p);
  case ModelCapability::linear: return is_linear(p);
  }
  return false;
}

} // namespace detail

/// First polynomial cell applicable to the query, if any.
inline std::optional<Algorithm> select_algorithm(Query q, const ScoringFunction* f, const PartialProfile& p, int k) {
  for (const auto& e : kDispatchTable) {
    if (e.query == q && detail::rule_matches(e.rule, f, k) && detail::model_matches(e.model, p)) return e.algorithm;
  }
  return std::nullopt;
}

} // namespace abcu

#endif // ABCU_DISPATCH_HPP
