#include "wordcount/error.hpp"

namespace wordcount {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::not_a_group: return "NotAGroup";
    case Errc::not_a_permutation: return "NotAPermutation";
    case Errc::order_limit_exceeded: return "OrderLimitExceeded";
    case Errc::unknown_family: return "UnknownFamily";
    case Errc::unsupported_parameter: return "UnsupportedParameter";
    case Errc::not_normal: return "NotNormal";
    case Errc::bad_subgroup: return "BadSubgroup";
    case Errc::internal_inconsistency: return "InternalInconsistency";
    case Errc::non_integral: return "NonIntegral";
    case Errc::not_rational: return "NotRational";
    case Errc::mismatched_group: return "MismatchedGroup";
    case Errc::syntax_error: return "SyntaxError";
    case Errc::empty_word: return "EmptyWord";
    case Errc::arity_too_small: return "ArityTooSmall";
    case Errc::arity_mismatch: return "ArityMismatch";
    case Errc::budget_exceeded: return "BudgetExceeded";
    case Errc::not_measure_preserving: return "NotMeasurePreserving";
    case Errc::predicate_failed: return "PredicateFailed";
    case Errc::assertion_failed: return "AssertionFailed";
    case Errc::search_bound_exceeded: return "SearchBoundExceeded";
    case Errc::witness_invalid: return "WitnessInvalid";
    case Errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

}  // namespace wordcount
