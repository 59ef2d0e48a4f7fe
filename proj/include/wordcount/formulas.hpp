#pragma once

// Character-theoretic and closed-form evaluators for commutator word maps,
// with the structural predicates that gate the closed forms.

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "wordcount/chartab.hpp"
#include "wordcount/counting.hpp"
#include "wordcount/group.hpp"
#include "wordcount/word.hpp"

namespace wordcount {

inline constexpr std::size_t kMaxRecursionN = 8;

/// zeta^{w2} = sum over chi of (|G|/chi(1)) chi.
ClassFunction zeta_w2_frobenius(const CharacterTable& t);

/// C^{w_n}(chi) = <zeta_prev chi, chi> where zeta_prev is zeta^{w_{n-1}}.
mpq_class c_wn(const CharacterTable& t, std::size_t chi, const ClassFunction& zeta_prev);

/// C^{w_n}(chi) for every chi, iterated up from C^{w_2} = 1. 2 <= n <= 8.
std::vector<mpq_class> c_wn_all(const CharacterTable& t, std::size_t n);

/// zeta^{w_n} = |G| sum C^{w_n}(chi) chi / chi(1). 2 <= n <= 8.
ClassFunction zeta_wn_char(const CharacterTable& t, std::size_t n);

/// The class function sum coeff[chi] * chi; throws not_rational when the
/// result has irrational values.
ClassFunction combine(const CharacterTable& t, const std::vector<mpq_class>& coeff);

/// [w1(x1..xk), w2(x_{k+1}..x_m)] with w2's variables shifted past w1's.
Word commutator_word(const Word& w1, const Word& w2);

struct MixedResult {
  Word word;
  DomainSpec domains;               // H for w1's variables, G for w2's
  std::vector<mpz_class> counts;    // per element of G
  ClassFunction zeta;
};

/// zeta^w for w = [w1, w2] with w1's variables in the normal subgroup H:
///   sum over chi of (|G|^{m-k-1} |H| / chi(1)) <zeta^{w1}_H chi, chi>_H chi.
/// zeta^{w1}_H is counted by brute force on H. Throws not_normal and
/// not_measure_preserving (w2 over G).
MixedResult zeta_mixed_domain(const GroupTable& g, const CharacterTable& t, const Subgroup& h,
                                 const Word& w1, const Word& w2, const CountOptions& opts = {});

/// structural_report completed with the character table.
GroupClassReport classify(const GroupTable& g, const CharacterTable& t);

struct CaminaInvariants {
  mpz_class order;
  mpz_class derived;   // |G'|
  mpz_class center;    // |Z(G)|
  mpz_class center2;   // |Z_2(G)|, 0 when not needed
  mpz_class pm;        // p^m, 0 when not needed

  static CaminaInvariants of(const GroupTable& g);
};

enum class Region {
  identity,
  derived_nontrivial,   // G' minus 1
  center_nontrivial,    // Z minus 1 (= gamma_3 minus 1 for Camina class 3)
  derived_off_center,   // G' minus Z
};

const char* region_name(Region r);

// Closed forms. Each checks its invariants (predicate_failed) and the total
// mass sum over G of zeta = |G|^n (assertion_failed) before returning.

/// (G, Z) a generalized Camina pair; regions identity and derived_nontrivial.
mpz_class closed_gcp_center(const CaminaInvariants& inv, std::size_t n, Region r);

/// Camina p-group of class 3 with gamma_3 = Z; n in {2, 3}; regions identity,
/// center_nontrivial, derived_off_center. pm = |G':Z| is filled in when 0.
/// The n = 3 identity value comes from the class-function form.
mpz_class closed_camina3(const CaminaInvariants& inv, std::size_t n, Region r);
/// The scalar display for zeta^{w3}(1) on the same invariants; it disagrees
/// with the class-function form.
mpq_class camina3_identity_display(const CaminaInvariants& inv);

/// (G, Z) a Camina pair and (G/Z, Z(G/Z)) a generalized Camina pair; needs
/// center2. n in {2, 3}; same regions as closed_camina3.
mpz_class closed_camina_gcp_tower(const CaminaInvariants& inv, std::size_t n, Region r);
/// The displayed zeta^{w2}(1), which carries |G|^2 where |G| belongs.
mpq_class tower_w2_identity_display(const CaminaInvariants& inv);
/// zeta^{w3}(1) from the displayed class-function form, whose Irr(G|Z)
/// coefficient has |G'|-|Z_2| where the derivation gives |G'|-|Z|.
mpq_class tower_w3_identity_from_class_form_display(const CaminaInvariants& inv);

// Predicates for concrete groups; each throws predicate_failed with a reason.
void require_gcp_center(const GroupTable& g, const CharacterTable& t);
void require_camina3(const GroupTable& g);
void require_camina_gcp_tower(const GroupTable& g);

/// The closed form spread over the classes of a concrete group after checking
/// its predicate: identity, Z minus 1, G' minus Z and 0 elsewhere.
enum class ClosedFamily { gcp_center, camina3, camina_gcp_tower };
const char* family_name(ClosedFamily f);
ClassFunction closed_zeta(ClosedFamily f, const GroupTable& g, const CharacterTable& t,
                          std::size_t n);

struct UniqueNonlinear {
  std::size_t phi = 0;             // index of the nonlinear character
  mpz_class pm;                    // phi(1) + 1
  std::vector<mpz_class> c;        // c[k] = C^{w_k}(phi) for 2 <= k <= n
  ClassFunction zeta;              // zeta^{w_n}
};

/// Requires a unique nonlinear character, trivial center and
/// |G| = p^m (p^m - 1) with p^m = phi(1) + 1 a prime power.
void require_unique_nonlinear(const GroupTable& g, const CharacterTable& t);
UniqueNonlinear unique_nonlinear_recursion(const GroupTable& g, const CharacterTable& t,
                                           std::size_t n);
/// zeta^{w_n}(g) for 1 != g in G': |G|^n/|G'| - |G| C^{w_n}(phi) / (p^m - 1).
mpz_class unique_nonlinear_nontrivial(const CaminaInvariants& inv, const mpz_class& c_n,
                                      std::size_t n);
/// zeta^{w3}(1) = 2|G|^3/|G'| + |G|^2 (p^m-2)/(p^m-1); needs inv.pm.
mpz_class appl_identity_value(const CaminaInvariants& inv);
/// The displayed n = 3 value off the identity:
///   |G|^3/|G'| - |G|^2/(p^m-2) (|G|/|G'| + (p^m-2)/(p^m-1)).
mpq_class appl_nontrivial_display(const CaminaInvariants& inv);
/// phi(g) = -1 for every 1 != g in G'.
bool unique_nonlinear_minus_one_on_derived(const GroupTable& g, const CharacterTable& t);

struct Cd2Entry {
  std::size_t chi;
  mpq_class c;
  mpq_class bound;   // m |G|^{n-1} / |N|
};
/// cd(G) = {1, m}, N abelian normal of index m, every nonlinear chi vanishing
/// off N with <chi|N, chi|N> = m; n >= 3. Throws predicate_failed.
std::vector<Cd2Entry> cd2_bound_check(const GroupTable& g, const CharacterTable& t,
                                      const Subgroup& n_sub, std::size_t n);

struct CaminaPairStructure {
  std::size_t given = 0;    // |Irr(G|Z)|
  std::size_t degree = 0;   // their common degree
};
/// For a Camina pair (G, Z): every chi in Irr(G|Z) vanishes off Z, has degree
/// |G:Z|^{1/2}, and there are |Z|-1 of them. predicate_failed when (G, Z) is
/// not a Camina pair, assertion_failed when a part fails.
CaminaPairStructure verify_camina_pair_structure(const GroupTable& g, const CharacterTable& t);

}  // namespace wordcount
