#ifndef ABCU_ERROR_HPP
#define ABCU_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace abcu {

enum class ErrorKind {
  syntax,
  bad_rule,
  duplicate_candidate,
  too_many_candidates,
  unknown_candidate,
  partition_overlap,
  partition_incomplete,
  edge_outside_middle,
  cycle_detected,
  shape_mismatch,
  table_out_of_range,
  bad_k,
  c_in_w,
  model_mismatch,
  bad_threshold,
  bad_edit,
  divisibility_violated,
  invalid_argument,
  // refusals: the question is well-formed but we will not answer it
  cap_exceeded,
  no_poly_algorithm,
  too_many_voters,
  too_large,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
  case ErrorKind::syntax: return "Syntax";
  case ErrorKind::bad_rule: return "BadRule";
  case ErrorKind::duplicate_candidate: return "DuplicateCandidate";
  case ErrorKind::too_many_candidates: return "TooManyCandidates";
  case ErrorKind::unknown_candidate: return "UnknownCandidate";
  case ErrorKind::partition_overlap: return "PartitionOverlap";
  case ErrorKind::partition_incomplete: return "PartitionIncomplete";
  case ErrorKind::edge_outside_middle: return "EdgeOutsideMiddle";
  case ErrorKind::cycle_detected: return "CycleDetected";
  case ErrorKind::shape_mismatch: return "ShapeMismatch";
  case ErrorKind::table_out_of_range: return "TableOutOfRange";
  case ErrorKind::bad_k: return "BadK";
  case ErrorKind::c_in_w: return "CInW";
  case ErrorKind::model_mismatch: return "ModelMismatch";
  case ErrorKind::bad_threshold: return "BadThreshold";
  case ErrorKind::bad_edit: return "BadEdit";
  case ErrorKind::divisibility_violated: return "DivisibilityViolated";
  case ErrorKind::invalid_argument: return "InvalidArgument";
  case ErrorKind::cap_exceeded: return "CapExceeded";
  case ErrorKind::no_poly_algorithm: return "NoPolyAlgorithm";
  case ErrorKind::too_many_voters: return "TooManyVoters";
  case ErrorKind::too_large: return "TooLarge";
  }
  return "Unknown";
}

/// True for errors that mean "could not answer" rather than "bad input".
constexpr bool is_refusal(ErrorKind kind) noexcept {
  return kind == ErrorKind::cap_exceeded || kind == ErrorKind::no_poly_algorithm ||
         kind == ErrorKind::too_many_voters || kind == ErrorKind::too_large;
}

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

} // namespace abcu

#endif // ABCU_ERROR_HPP
