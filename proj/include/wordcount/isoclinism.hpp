#pragma once

// Bounded search for n-isoclinisms and the scaling check for zeta^{w_{n+1}}.

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "wordcount/counting.hpp"
#include "wordcount/group.hpp"

namespace wordcount {

inline constexpr std::size_t kIsoclinismSearchBound = 64;

/// phi: G/Z_n(G) -> H/Z_n(H) on coset indices of `quotient`, and
/// psi: gamma_{n+1}(G) -> gamma_{n+1}(H) on elements.
struct IsoclinismWitness {
  std::size_t n = 1;
  std::vector<Element> g_coset;   // projection G -> G/Z_n(G)
  std::vector<Element> h_coset;   // projection H -> H/Z_n(H)
  std::vector<Element> phi;       // coset of G -> coset of H
  std::vector<Element> gamma_g;   // gamma_{n+1}(G), sorted
  std::vector<Element> psi;       // psi[i] is the image of gamma_g[i]

  Element apply_psi(Element x) const;
};

/// G = H gives the identity witness without searching.
IsoclinismWitness identity_witness(const GroupTable& g, std::size_t n);

/// Backtracks over images of a generating set of G/Z_n(G), tried by
/// increasing element order, then derives psi from the commutator values and
/// checks it. nullopt when no n-isoclinism exists. Throws
/// search_bound_exceeded when |G/Z_n(G)| or |gamma_{n+1}(G)| exceeds 64.
std::optional<IsoclinismWitness> find_isoclinism(const GroupTable& g, const GroupTable& h,
                                                 std::size_t n);

/// Re-checks that phi and psi are isomorphisms and that psi is compatible
/// with phi on every (n+1)-tuple of cosets; throws witness_invalid.
void check_witness(const GroupTable& g, const GroupTable& h, const IsoclinismWitness& w);

enum class ZetaMethod { character, brute };

struct ScalingEntry {
  Element g;
  Element image;        // psi(g)
  mpz_class lhs;        // zeta^{w_{n+1}}_G(g)
  mpq_class rhs;      // (|G|/|H|)^{n+1} zeta^{w_{n+1}}_H(psi(g))
};

struct ScalingReport {
  mpq_class factor;     // (|G|/|H|)^{n+1}
  std::vector<ScalingEntry> entries;
  bool holds = true;
};

/// Compares zeta^{w_{n+1}} of G on gamma_{n+1}(G) with the scaled values of
/// H at the psi-images. Throws witness_invalid for a bad witness.
ScalingReport verify_scaling(const GroupTable& g, const GroupTable& h, const IsoclinismWitness& w,
                             ZetaMethod method = ZetaMethod::character,
                             const CountOptions& opts = {});

}  // namespace wordcount
