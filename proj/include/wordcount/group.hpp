#pragma once

// Finite groups as multiplication tables, plus the structure that the word
// counting and character machinery needs: conjugacy classes, central series,
// quotients and Camina-type predicates.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace wordcount {

using Element = std::uint32_t;

inline constexpr std::size_t kDefaultOrderCap = 20480;

/// A finite group given by its full multiplication table. Element 0 is the
/// identity. Immutable after construction.
class GroupTable {
 public:
  /// Validates a Cayley table (Latin square, two-sided identity,
  /// associativity) and relabels so the identity sits at index 0.
  static GroupTable from_cayley_table(const std::vector<std::vector<Element>>& table,
                                      std::vector<std::string> labels = {},
                                      std::size_t order_cap = kDefaultOrderCap);

  /// Closure of a set of permutations of {0..degree-1}. Products compose left
  /// to right: (a*b)(x) = b(a(x)).
  static GroupTable from_permutation_generators(std::size_t degree,
                                                const std::vector<std::vector<std::size_t>>& gens,
                                                std::size_t order_cap = kDefaultOrderCap);

  /// Builds from a row-major table whose identity is already index 0. The
  /// Latin/identity checks always run; associativity only when `check_assoc`.
  static GroupTable from_flat_table(std::size_t n, std::vector<Element> mul,
                                    std::vector<std::string> labels, bool check_assoc);

  std::size_t order() const noexcept { return n_; }
  Element identity() const noexcept { return 0; }
  Element mul(Element a, Element b) const noexcept { return mul_[std::size_t{a} * n_ + b]; }
  Element inv(Element a) const noexcept { return inv_[a]; }
  std::span<const Element> row(Element a) const noexcept {
    return {mul_.data() + std::size_t{a} * n_, n_};
  }

  Element power(Element a, long long k) const noexcept;
  Element conjugate(Element x, Element g) const noexcept { return mul(mul(inv(g), x), g); }
  Element commutator(Element a, Element b) const noexcept {
    return mul(mul(inv(a), inv(b)), mul(a, b));
  }
  std::size_t element_order(Element a) const noexcept;
  std::size_t exponent() const;
  bool is_abelian() const noexcept;

  /// Small generating set chosen greedily by element index.
  const std::vector<Element>& generators() const noexcept { return gens_; }

  std::string label(Element a) const;
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  std::vector<std::vector<Element>> cayley_table() const;

  /// Stable 64-bit FNV-1a hash of the order and multiplication table.
  std::uint64_t table_hash() const noexcept;

  friend bool operator==(const GroupTable& a, const GroupTable& b) {
    return a.n_ == b.n_ && a.mul_ == b.mul_;
  }

 private:
  GroupTable(std::size_t n, std::vector<Element> mul, std::vector<std::string> labels);

  std::size_t n_ = 0;
  std::vector<Element> mul_;
  std::vector<Element> inv_;
  std::vector<Element> gens_;
  std::vector<std::string> labels_;
};

/// A subgroup stored as a sorted index set over the parent's numbering.
class Subgroup {
 public:
  /// Checks closure under products and inverses.
  Subgroup(const GroupTable& parent, std::vector<Element> members);

  static Subgroup trivial(const GroupTable& parent);
  static Subgroup whole(const GroupTable& parent);
  static Subgroup generated_by(const GroupTable& parent, std::span<const Element> gens);
  /// Trusts that `members` is a subgroup; sorts and deduplicates.
  static Subgroup unchecked(std::size_t parent_order, std::vector<Element> members);

  std::size_t size() const noexcept { return members_.size(); }
  std::size_t parent_order() const noexcept { return mask_.size(); }
  const std::vector<Element>& members() const noexcept { return members_; }
  bool contains(Element a) const noexcept { return a < mask_.size() && mask_[a]; }
  bool is_trivial() const noexcept { return members_.size() == 1; }
  bool is_whole() const noexcept { return members_.size() == mask_.size(); }
  bool is_subset_of(const Subgroup& other) const noexcept;

  /// A generating set of this subgroup, greedy by index.
  std::vector<Element> generators(const GroupTable& parent) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.members_ == b.members_ && a.mask_.size() == b.mask_.size();
  }

 private:
  Subgroup() = default;

  std::vector<Element> members_;
  std::vector<bool> mask_;
};

struct ConjugacyData {
  std::vector<std::size_t> class_of;       // element -> class
  std::vector<Element> reps;               // class -> smallest member
  std::vector<std::size_t> sizes;          // class -> size
  std::vector<std::size_t> inverse_class;  // class -> class of inverses
  std::vector<std::vector<Element>> members;

  std::size_t count() const noexcept { return reps.size(); }
};

/// Orbits under conjugation; identity class first, then by (size, smallest
/// element).
std::shared_ptr<const ConjugacyData> conjugacy_classes(const GroupTable& g);

/// Materialized copy of a subgroup, with embedding[i] the parent element for
/// the subgroup element i. Element 0 maps to the parent identity.
struct MaterializedSubgroup {
  GroupTable group;
  std::vector<Element> embedding;
};
MaterializedSubgroup materialize(const GroupTable& g, const Subgroup& h);

bool is_normal(const GroupTable& g, const Subgroup& h);
Subgroup normal_closure(const GroupTable& g, std::span<const Element> elems);

Subgroup center(const GroupTable& g);
Subgroup commutator_subgroup(const GroupTable& g);
/// [A, B] for normal subgroups A and B.
Subgroup commutator_of(const GroupTable& g, const Subgroup& a, const Subgroup& b);

/// Z_0 = 1, Z_1, ... until stabilization (the last entry is the hypercenter).
std::vector<Subgroup> upper_central_series(const GroupTable& g);
/// gamma_1 = G, gamma_2, ... until stabilization.
std::vector<Subgroup> lower_central_series(const GroupTable& g);
/// Z_i for arbitrary i (stays at the hypercenter past stabilization).
Subgroup upper_central_term(const GroupTable& g, std::size_t i);
/// gamma_i for arbitrary i >= 1.
Subgroup lower_central_term(const GroupTable& g, std::size_t i);

/// Least c with Z_c = G (equivalently gamma_{c+1} = 1); nullopt when G is not
/// nilpotent. Throws internal_inconsistency if the two series disagree.
std::optional<std::size_t> nilpotency_class(const GroupTable& g);

struct Quotient {
  GroupTable group;
  std::vector<Element> projection;  // element of G -> coset index
  std::vector<Element> lift;        // coset index -> smallest representative
};
Quotient quotient(const GroupTable& g, const Subgroup& n);

/// (G, H) is a Camina pair: 1 < H < G normal and gH lies in Cl(g) for g outside H.
bool is_camina_pair(const GroupTable& g, const Subgroup& h);
bool is_camina_pair(const GroupTable& g, const Subgroup& h, const ConjugacyData& classes);

bool is_p_group(std::size_t order, std::size_t* prime = nullptr);

/// Normal subgroups N with lower <= N, obtained as joins of `lower` with normal
/// closures of classes contained in `upper`. Sorted by (size, members).
std::vector<Subgroup> normal_subgroups_between(const GroupTable& g, const Subgroup& lower,
                                               const Subgroup& upper, std::size_t cap = 4096);

struct GroupClassReport {
  bool is_abelian = false;
  std::optional<std::size_t> nilpotency_class;
  std::vector<Subgroup> camina_pair_targets;
  bool is_camina_group = false;
  // Filled once a character table is available.
  std::optional<std::vector<std::size_t>> cd;
  std::optional<std::vector<Subgroup>> gcp_targets;
  bool is_vz = false;
  bool unique_nonlinear = false;
};

/// The character-free part of the report.
GroupClassReport structural_report(const GroupTable& g);

}  // namespace wordcount
