#pragma once

// Brute-force fiber counts of word maps: the oracle every formula is checked
// against.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wordcount/chartab.hpp"
#include "wordcount/group.hpp"
#include "wordcount/word.hpp"

namespace wordcount {

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 30;

/// Per-variable domains; nullopt is the whole group.
struct DomainSpec {
  std::vector<std::optional<Subgroup>> domains;

  static DomainSpec whole(std::size_t arity) { return {std::vector<std::optional<Subgroup>>(arity)}; }
  bool all_whole() const;
  std::size_t domain_size(std::size_t var, std::size_t group_order) const;
};

struct CountOptions {
  std::size_t workers = 1;
  std::uint64_t budget = kDefaultBudget;
};

/// Number of evaluations an enumeration needs, saturated at UINT64_MAX.
std::uint64_t enumeration_size(const GroupTable& g, const Word& w, const DomainSpec& d);

/// counts[g] = #{assignments in the domains : w(assignment) = g}.
std::vector<std::uint64_t> count_fibers(const GroupTable& g, const Word& w, const DomainSpec& d,
                                        const CountOptions& opts = {});

/// Full-domain fiber counts as a class function (class constancy is checked
/// element by element first).
ClassFunction zeta_brute(const GroupTable& g, const Word& w, const CountOptions& opts = {});
ClassFunction zeta_brute(const GroupTable& g, const Word& w,
                         std::shared_ptr<const ConjugacyData> classes, const CountOptions& opts);

bool is_measure_preserving(const GroupTable& g, const Word& w, const CountOptions& opts = {});

/// zeta / |G|^n.
ClassFunction probability(const ClassFunction& zeta, std::size_t arity);

/// P(w_n = 1) for a uniformly random n-tuple.
mpq_class nilpotency_degree(const GroupTable& g, std::size_t n, const CountOptions& opts = {});

/// CSV with header rep_label,class_size,count,probability_numerator,probability_denominator.
std::string zeta_csv(const GroupTable& g, const ClassFunction& zeta, std::size_t arity);
/// Same columns, one row per element (class_size 1), for restricted domains.
std::string fiber_csv(const GroupTable& g, const std::vector<std::uint64_t>& counts,
                      std::uint64_t total);

/// Quotes a CSV field when it contains a comma, quote or newline.
std::string csv_field(const std::string& s);

}  // namespace wordcount
