#include "permatch/error.hpp"

namespace permatch {

  const char* error_name(ErrorCode code) noexcept {
    switch (code) {
      case ErrorCode::parse: return "ParseError";
      case ErrorCode::entry_out_of_range: return "EntryOutOfRange";
      case ErrorCode::not_associative: return "NotAssociative";
      case ErrorCode::not_regular: return "NotRegular";
      case ErrorCode::not_zero_simple: return "NotZeroSimple";
      case ErrorCode::no_inverse_in_target_cell: return "NoInverseInTargetCell";
      case ErrorCode::domain_mismatch: return "DomainMismatch";
      case ErrorCode::not_a_permutation: return "NotAPermutation";
      case ErrorCode::not_a_matching: return "NotAMatching";
      case ErrorCode::not_divisible: return "NotDivisible";
      case ErrorCode::not_regular_pattern: return "NotRegularPattern";
      case ErrorCode::not_orthodox: return "NotOrthodox";
      case ErrorCode::parameter_out_of_range: return "ParameterOutOfRange";
      case ErrorCode::malformed_instance: return "MalformedInstance";
      case ErrorCode::index_out_of_range: return "IndexOutOfRange";
      case ErrorCode::plan_instance_mismatch: return "PlanInstanceMismatch";
      case ErrorCode::well_definedness_violation:
        return "WellDefinednessViolation";
      case ErrorCode::equivalence_violation: return "EquivalenceViolation";
      case ErrorCode::too_large: return "TooLarge";
      case ErrorCode::not_tn: return "NotTn";
      case ErrorCode::not_perfect: return "NotPerfect";
    }
    return "Unknown";
  }

  int exit_code(ErrorCode code) noexcept {
    switch (code) {
      case ErrorCode::parse:
      case ErrorCode::malformed_instance: return 2;
      case ErrorCode::entry_out_of_range:
      case ErrorCode::not_associative: return 3;
      default: return 4;
    }
  }

}  // namespace permatch
