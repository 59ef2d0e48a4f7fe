#pragma once

// Ordinary character tables with exact cyclotomic values, and the class
// function algebra built on them.

#include <gmpxx.h>

#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "wordcount/cyclotomic.hpp"
#include "wordcount/group.hpp"

namespace wordcount {

/// Rational values indexed by conjugacy class.
class ClassFunction {
 public:
  ClassFunction(std::shared_ptr<const ConjugacyData> classes, std::vector<mpq_class> values);

  /// From per-element values; throws internal_inconsistency if not constant on classes.
  static ClassFunction from_elements(std::shared_ptr<const ConjugacyData> classes,
                                     const std::vector<mpq_class>& per_element);

  const ConjugacyData& classes() const noexcept { return *classes_; }
  const std::shared_ptr<const ConjugacyData>& classes_ptr() const noexcept { return classes_; }
  const std::vector<mpq_class>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  const mpq_class& operator[](std::size_t j) const { return values_[j]; }
  const mpq_class& at_element(Element g) const { return values_[classes_->class_of[g]]; }

  /// Sum of the values over all group elements.
  mpq_class total() const;

  friend bool operator==(const ClassFunction& a, const ClassFunction& b) {
    return a.values_ == b.values_;
  }

 private:
  std::shared_ptr<const ConjugacyData> classes_;
  std::vector<mpq_class> values_;
};

/// Class function with cyclotomic values values[j] / denominator.
struct CyclotomicClassFunction {
  std::shared_ptr<const ConjugacyData> classes;
  std::vector<Cyclotomic> values;
  mpz_class denominator = 1;

  static CyclotomicClassFunction from(const ClassFunction& f, std::size_t e);
  CyclotomicClassFunction conj() const;
  friend CyclotomicClassFunction operator*(const CyclotomicClassFunction& a,
                                           const CyclotomicClassFunction& b);
  /// The values when all are rational; throws not_rational otherwise.
  ClassFunction to_rational() const;
};

class CharacterTable {
 public:
  /// Checks shape, integrality of degrees and both orthogonality relations.
  CharacterTable(std::size_t group_order, std::size_t exponent,
                 std::shared_ptr<const ConjugacyData> classes,
                 std::vector<std::vector<Cyclotomic>> values);

  std::size_t group_order() const noexcept { return group_order_; }
  std::size_t exponent() const noexcept { return exponent_; }
  std::size_t count() const noexcept { return values_.size(); }
  const ConjugacyData& classes() const noexcept { return *classes_; }
  const std::shared_ptr<const ConjugacyData>& classes_ptr() const noexcept { return classes_; }
  const Cyclotomic& value(std::size_t chi, std::size_t cls) const { return values_[chi][cls]; }
  const std::vector<Cyclotomic>& row(std::size_t chi) const { return values_[chi]; }
  const std::vector<std::size_t>& degrees() const noexcept { return degrees_; }
  std::size_t degree(std::size_t chi) const { return degrees_[chi]; }
  const std::vector<bool>& linear_mask() const noexcept { return linear_; }

  std::vector<std::size_t> linear() const;
  std::vector<std::size_t> nonlinear() const;
  /// Sorted distinct degrees.
  std::vector<std::size_t> cd() const;

  CyclotomicClassFunction character(std::size_t chi) const;

  friend bool operator==(const CharacterTable& a, const CharacterTable& b);

 private:
  std::size_t group_order_;
  std::size_t exponent_;
  std::shared_ptr<const ConjugacyData> classes_;
  std::vector<std::vector<Cyclotomic>> values_;
  std::vector<std::size_t> degrees_;
  std::vector<bool> linear_;
};

/// Dixon's method. Characters are sorted by degree, then by their coefficient
/// vectors (class by class) in decreasing lexicographic order, so the trivial
/// character comes first.
CharacterTable character_table(const GroupTable& g);

/// Exact check of both orthogonality relations; throws internal_inconsistency.
void verify_orthogonality(const CharacterTable& t);

/// Smallest prime p = 1 mod e with p > 2 sqrt(order).
std::uint64_t dixon_prime(std::size_t order, std::size_t exponent);

// Disk cache, keyed by GroupTable::table_hash.
std::filesystem::path default_cache_dir();
std::string serialize_table(const CharacterTable& t);
/// Parses a serialized table against the classes of g; throws parse_error.
CharacterTable parse_table(const std::string& text, const GroupTable& g);
/// Loads from `dir` when present and valid; otherwise computes and stores.
CharacterTable cached_character_table(const GroupTable& g, const std::filesystem::path& dir);

mpq_class inner_product(const CyclotomicClassFunction& a, const CyclotomicClassFunction& b);
mpq_class inner_product(const ClassFunction& a, const ClassFunction& b);
mpq_class inner_product(const CharacterTable& t, const ClassFunction& f, std::size_t chi);
mpq_class inner_product(const CharacterTable& t, std::size_t chi, std::size_t psi);

/// <a, b>_H = (1/|H|) sum over h in H of a(h) conj(b(h)).
mpq_class inner_product_on(const Subgroup& h, const CyclotomicClassFunction& a,
                           const CyclotomicClassFunction& b);
mpq_class inner_product_on(const Subgroup& h, const ClassFunction& a, const ClassFunction& b);

/// Restriction to a materialized subgroup whose classes are `sub_classes`.
CyclotomicClassFunction restrict_to(const CyclotomicClassFunction& f,
                                    const MaterializedSubgroup& h,
                                    std::shared_ptr<const ConjugacyData> sub_classes);

/// Inflation of a class function of G/N to G.
CyclotomicClassFunction inflate(const CyclotomicClassFunction& f, const Quotient& q,
                                std::shared_ptr<const ConjugacyData> g_classes,
                                std::size_t exponent);

struct IrrPartition {
  std::vector<std::size_t> inflated;  // kernel contains N
  std::vector<std::size_t> given;     // Irr(G|N)
};
IrrPartition irr_given(const GroupTable& g, const Subgroup& n, const CharacterTable& t);

/// chi(x_j) |Cl(x_j)| / chi(1), an algebraic integer.
Cyclotomic central_character(const CharacterTable& t, std::size_t chi, std::size_t cls);

/// (1/|G|) sum chi(g^2).
mpz_class frobenius_schur_indicator(const GroupTable& g, const CharacterTable& t,
                                    std::size_t chi);

/// Nonlinear characters vanish outside N.
bool is_generalized_camina_pair(const GroupTable& g, const Subgroup& n, const CharacterTable& t);

/// Smallest subgroup outside of which every nonlinear character vanishes,
/// i.e. generated by the elements where some nonlinear character is nonzero.
Subgroup vanishing_off_subgroup(const GroupTable& g, const CharacterTable& t);

/// Adds cd, GCP targets, VZ and unique-nonlinear flags to a structural report.
void complete_report(GroupClassReport& r, const GroupTable& g, const CharacterTable& t);

}  // namespace wordcount
