#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wordcount {

enum class Errc {
  not_a_group,
  not_a_permutation,
  order_limit_exceeded,
  unknown_family,
  unsupported_parameter,
  not_normal,
  bad_subgroup,
  internal_inconsistency,
  non_integral,
  not_rational,
  mismatched_group,
  syntax_error,
  empty_word,
  arity_too_small,
  arity_mismatch,
  budget_exceeded,
  not_measure_preserving,
  predicate_failed,
  assertion_failed,
  search_bound_exceeded,
  witness_invalid,
  parse_error,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace wordcount
