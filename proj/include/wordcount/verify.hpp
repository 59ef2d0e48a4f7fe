#pragma once

// Verification sweeps behind `wordcount verify`. Each check yields one line
//   PASS|FAIL|FLAGGED <check-id> <group> <details>
// FLAGGED marks a displayed closed form that disagrees with the oracle; it
// does not count as a failure.

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "wordcount/counting.hpp"
#include "wordcount/group.hpp"

namespace wordcount {

enum class Status { pass, fail, flagged };

struct CheckLine {
  Status status;
  std::string id;
  std::string group;
  std::string details;
};

std::string format_line(const CheckLine& c);

struct VerifyOptions {
  CountOptions count;
  /// Extra group sources (builtin specs or files) run through every closed
  /// form whose predicate they satisfy.
  std::vector<std::string> extra_groups;
};

/// Builtin specs of the small-group sweep (orders up to 24).
std::vector<std::string> sweep_catalog();

/// Suites: frobenius, recursion, closed-forms, isoclinism, all. Lines are
/// passed to `sink` as they are produced. Throws unsupported_parameter for an
/// unknown suite.
void run_suite(std::string_view suite, const VerifyOptions& opts,
               const std::function<void(const CheckLine&)>& sink);

}  // namespace wordcount
