#pragma once

#include <stdexcept>
#include <string>

namespace permatch {

  enum class ErrorCode {
    parse,
    entry_out_of_range,
    not_associative,
    not_regular,
    not_zero_simple,
    no_inverse_in_target_cell,
    domain_mismatch,
    not_a_permutation,
    not_a_matching,
    not_divisible,
    not_regular_pattern,
    not_orthodox,
    parameter_out_of_range,
    malformed_instance,
    index_out_of_range,
    plan_instance_mismatch,
    well_definedness_violation,
    equivalence_violation,
    too_large,
    not_tn,
    not_perfect,
  };

  //! Short stable name, e.g. "NotRegular".
  const char* error_name(ErrorCode code) noexcept;

  //! Process exit code used by the command line tool: 2 for malformed input,
  //! 3 for tables that are not semigroups, 4 for unmet preconditions.
  int exit_code(ErrorCode code) noexcept;

  class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_name(code)) + ": " + what),
          _code(code) {}

    ErrorCode code() const noexcept {
      return _code;
    }

   private:
    ErrorCode _code;
  };

}  // namespace permatch
