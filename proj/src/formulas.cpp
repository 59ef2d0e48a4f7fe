#include "wordcount/formulas.hpp"

#include <algorithm>

#include "wordcount/builtin.hpp"
#include "wordcount/error.hpp"

namespace wordcount {

namespace {

mpq_class frac(const mpz_class& n, const mpz_class& d = 1) {
  mpq_class q(n, d);
  q.canonicalize();
  return q;
}

mpz_class uz(std::size_t v) { return mpz_class(static_cast<unsigned long>(v)); }

mpz_class pow_z(const mpz_class& a, std::size_t k) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

mpz_class lcm_z(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

bool divides(const mpz_class& a, const mpz_class& b) {
  return a != 0 && mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) != 0;
}

[[noreturn]] void predicate(const std::string& msg) { throw Error(Errc::predicate_failed, msg); }

mpz_class integral(const mpq_class& q, const char* what) {
  if (q.get_den() != 1) predicate(std::string(what) + " is not an integer: " + q.get_str());
  return q.get_num();
}

void check_n_range(std::size_t n) {
  if (n < 2) throw Error(Errc::arity_too_small, "w_n needs n >= 2");
  if (n > kMaxRecursionN) {
    throw Error(Errc::unsupported_parameter,
                "n is capped at " + std::to_string(kMaxRecursionN));
  }
}

// C^{w_n} for all characters together with zeta^{w_n}.
std::pair<std::vector<mpq_class>, ClassFunction> recurse(const CharacterTable& t, std::size_t n) {
  check_n_range(n);
  std::vector<mpq_class> c(t.count(), frac(1));
  ClassFunction zeta = zeta_w2_frobenius(t);
  const mpz_class order = uz(t.group_order());
  for (std::size_t k = 3; k <= n; ++k) {
    for (std::size_t chi = 0; chi < t.count(); ++chi) c[chi] = c_wn(t, chi, zeta);
    std::vector<mpq_class> coeff(t.count());
    for (std::size_t chi = 0; chi < t.count(); ++chi) {
      coeff[chi] = order * c[chi] / uz(t.degree(chi));
    }
    zeta = combine(t, coeff);
  }
  return {std::move(c), std::move(zeta)};
}

void check_mass(const CaminaInvariants& inv, std::size_t n, const mpz_class& identity,
                const mpz_class& inner, const mpz_class& inner_count, const mpz_class& outer,
                const mpz_class& outer_count, const char* what) {
  const mpz_class total = identity + inner * inner_count + outer * outer_count;
  if (total != pow_z(inv.order, n)) {
    throw Error(Errc::assertion_failed, std::string(what) + ": total mass " + total.get_str() +
                                            " differs from |G|^" + std::to_string(n) + " = " +
                                            pow_z(inv.order, n).get_str());
  }
  if (identity < 0 || inner < 0 || outer < 0) {
    throw Error(Errc::assertion_failed, std::string(what) + ": negative count");
  }
}

void check_closed_n(std::size_t n) {
  if (n != 2 && n != 3) throw Error(Errc::unsupported_parameter, "closed form needs n in {2, 3}");
}

[[noreturn]] void bad_region(Region r, const char* what) {
  throw Error(Errc::unsupported_parameter,
              std::string(what) + " has no value for region " + region_name(r));
}

void check_camina3_invariants(CaminaInvariants& inv) {
  const mpz_class &a = inv.order, &d = inv.derived, &z = inv.center;
  if (!divides(z, d) || !divides(d, a) || z == d) {
    predicate("Camina class-3 invariants need 1 <= |Z| < |G'| dividing |G|");
  }
  const mpz_class pm = d / z;
  if (inv.pm == 0) inv.pm = pm;
  if (inv.pm != pm) predicate("p^m must equal |G':Z|");
  if (a / d != pm * pm) predicate("|G:G'| must equal p^{2m}");
  if (!pm.fits_slong_p()) predicate("p^m out of range");
  long long p = 0;
  int m = 0;
  if (!is_prime_power(pm.get_si(), &p, &m) || m % 2 != 0) {
    predicate("|G':Z| must be p^m with m even");
  }
  if (!divides(uz(static_cast<std::size_t>(p)), z)) predicate("|Z| must be a power of p");
}

void check_tower_invariants(const CaminaInvariants& inv) {
  const mpz_class &a = inv.order, &d = inv.derived, &z = inv.center, &y = inv.center2;
  if (!divides(z, d) || !divides(d, y) || !divides(y, a)) {
    predicate("tower invariants need |Z| | |G'| | |Z_2| | |G|");
  }
  if (!divides(d * z, y * (d - z))) predicate("|nl(G/Z)| = |Z_2|(|G'|-|Z|)/(|G'||Z|) not integral");
}

Subgroup derived_of(const GroupTable& g) { return commutator_subgroup(g); }

}  // namespace

ClassFunction combine(const CharacterTable& t, const std::vector<mpq_class>& coeff) {
  mpz_class den = 1;
  for (const auto& c : coeff) den = lcm_z(den, c.get_den());
  std::vector<mpz_class> scaled(coeff.size());
  for (std::size_t chi = 0; chi < coeff.size(); ++chi) {
    scaled[chi] = coeff[chi].get_num() * (den / coeff[chi].get_den());
  }
  const ConjugacyData& cl = t.classes();
  std::vector<mpq_class> out(cl.count());
  for (std::size_t j = 0; j < cl.count(); ++j) {
    Cyclotomic acc(t.exponent());
    for (std::size_t chi = 0; chi < coeff.size(); ++chi) {
      if (scaled[chi] == 0) continue;
      Cyclotomic term = t.value(chi, j);
      term *= scaled[chi];
      acc += term;
    }
    const auto v = acc.as_integer();
    if (!v) throw Error(Errc::not_rational, "combination is irrational on class " + std::to_string(j));
    out[j] = frac(*v, den);
  }
  return ClassFunction(t.classes_ptr(), std::move(out));
}

ClassFunction zeta_w2_frobenius(const CharacterTable& t) {
  std::vector<mpq_class> coeff(t.count());
  for (std::size_t chi = 0; chi < t.count(); ++chi) {
    coeff[chi] = frac(uz(t.group_order()), uz(t.degree(chi)));
  }
  return combine(t, coeff);
}

mpq_class c_wn(const CharacterTable& t, std::size_t chi, const ClassFunction& zeta_prev) {
  mpz_class den = 1;
  for (const auto& v : zeta_prev.values()) den = lcm_z(den, v.get_den());
  const ConjugacyData& cl = t.classes();
  Cyclotomic acc(t.exponent());
  for (std::size_t j = 0; j < cl.count(); ++j) {
    const mpz_class w = uz(cl.sizes[j]) * zeta_prev[j].get_num() * (den / zeta_prev[j].get_den());
    if (w == 0) continue;
    Cyclotomic term = t.value(chi, j) * t.value(chi, cl.inverse_class[j]);
    term *= w;
    acc += term;
  }
  const auto v = acc.as_integer();
  if (!v) throw Error(Errc::not_rational, "C^{w_n} is irrational");
  mpq_class out(*v, uz(t.group_order()) * den);
  out.canonicalize();
  return out;
}

std::vector<mpq_class> c_wn_all(const CharacterTable& t, std::size_t n) {
  return recurse(t, n).first;
}

ClassFunction zeta_wn_char(const CharacterTable& t, std::size_t n) { return recurse(t, n).second; }

Word commutator_word(const Word& w1, const Word& w2) {
  const auto shift = static_cast<std::uint32_t>(w1.arity());
  std::vector<Letter> u = w1.letters();
  std::vector<Letter> v = w2.letters();
  for (Letter& l : v) l.var += shift;
  std::vector<Letter> out = inverse_letters(u);
  const std::vector<Letter> vi = inverse_letters(v);
  out.insert(out.end(), vi.begin(), vi.end());
  out.insert(out.end(), u.begin(), u.end());
  out.insert(out.end(), v.begin(), v.end());
  return Word::from_letters(std::move(out));
}

MixedResult zeta_mixed_domain(const GroupTable& g, const CharacterTable& t, const Subgroup& h,
                                 const Word& w1, const Word& w2, const CountOptions& opts) {
  if (h.parent_order() != g.order()) {
    throw Error(Errc::mismatched_group, "subgroup belongs to a different group");
  }
  if (!is_normal(g, h)) throw Error(Errc::not_normal, "H must be normal in G");
  if (!is_measure_preserving(g, w2, opts)) {
    throw Error(Errc::not_measure_preserving, "w2 = " + w2.to_string() +
                                                  " is not measure preserving on G");
  }
  const Word w = commutator_word(w1, w2);
  DomainSpec dom = DomainSpec::whole(w.arity());
  for (std::size_t v = 0; v < w1.arity(); ++v) dom.domains[v] = h;

  const MaterializedSubgroup mh = materialize(g, h);
  const ClassFunction zh = zeta_brute(mh.group, w1, opts);
  const ConjugacyData& cl = t.classes();
  std::vector<mpz_class> s(cl.count(), 0);
  for (Element i = 0; i < mh.group.order(); ++i) {
    s[cl.class_of[mh.embedding[i]]] += zh.at_element(i).get_num();
  }

  const mpz_class order = uz(g.order());
  const mpz_class gpow = pow_z(order, w2.arity());
  std::vector<Cyclotomic> coeff;
  for (std::size_t chi = 0; chi < t.count(); ++chi) {
    Cyclotomic k(t.exponent());
    for (std::size_t j = 0; j < cl.count(); ++j) {
      if (s[j] == 0) continue;
      Cyclotomic term = t.value(chi, j) * t.value(chi, cl.inverse_class[j]);
      term *= s[j];
      k += term;
    }
    k *= mpz_class(gpow / uz(t.degree(chi)));
    coeff.push_back(std::move(k));
  }
  std::vector<mpq_class> values(cl.count());
  for (std::size_t j = 0; j < cl.count(); ++j) {
    Cyclotomic acc(t.exponent());
    for (std::size_t chi = 0; chi < t.count(); ++chi) acc.add_product(coeff[chi], t.value(chi, j));
    const auto v = acc.as_integer();
    if (!v || !divides(order, *v)) {
      throw Error(Errc::internal_inconsistency, "mixed-domain formula is not integral");
    }
    values[j] = mpz_class(*v / order);
  }
  ClassFunction zeta(t.classes_ptr(), std::move(values));
  std::vector<mpz_class> counts(g.order());
  for (Element x = 0; x < g.order(); ++x) counts[x] = zeta.at_element(x).get_num();
  return {w, std::move(dom), std::move(counts), std::move(zeta)};
}

GroupClassReport classify(const GroupTable& g, const CharacterTable& t) {
  GroupClassReport r = structural_report(g);
  complete_report(r, g, t);
  return r;
}

CaminaInvariants CaminaInvariants::of(const GroupTable& g) {
  CaminaInvariants inv;
  inv.order = uz(g.order());
  inv.derived = uz(derived_of(g).size());
  inv.center = uz(wordcount::center(g).size());
  inv.center2 = uz(upper_central_term(g, 2).size());
  inv.pm = 0;
  return inv;
}

const char* region_name(Region r) {
  switch (r) {
    case Region::identity: return "identity";
    case Region::derived_nontrivial: return "derived-nontrivial";
    case Region::center_nontrivial: return "center-nontrivial";
    case Region::derived_off_center: return "derived-off-center";
  }
  return "?";
}

mpz_class closed_gcp_center(const CaminaInvariants& inv, std::size_t n, Region r) {
  if (n < 2) throw Error(Errc::arity_too_small, "w_n needs n >= 2");
  const mpz_class &a = inv.order, &d = inv.derived, &z = inv.center;
  if (!divides(d, a) || !divides(z, a) || !divides(d, z)) {
    predicate("GCP with N = Z needs |G'| dividing |Z| dividing |G|");
  }
  mpz_class id, other;
  if (n == 2) {
    const mpq_class base = frac(a * a, d);
    const mpq_class index = frac(a, z);
    id = integral(base * (1 + frac(d - 1) / index), "zeta^{w2}(1)");
    other = integral(base * (1 - 1 / index), "zeta^{w2}(g)");
  } else {
    id = pow_z(a, n);
    other = 0;
  }
  check_mass(inv, n, id, other, d - 1, 0, 0, "closed_gcp_center");
  switch (r) {
    case Region::identity: return id;
    case Region::derived_nontrivial: return other;
    default: bad_region(r, "closed_gcp_center");
  }
}

mpz_class closed_camina3(const CaminaInvariants& inv_in, std::size_t n, Region r) {
  check_closed_n(n);
  CaminaInvariants inv = inv_in;
  check_camina3_invariants(inv);
  const mpz_class &a = inv.order, &d = inv.derived, &z = inv.center;
  mpq_class id, inner, outer;
  if (n == 2) {
    id = frac(a * a, d) + frac(a * d, z) + a * (z - 2);
    inner = frac(a * (a - d), d) + frac(a * (d - z), z);
    outer = frac(a * (a - d), d);
  } else {
    const mpq_class a3d = frac(a * a * a, d);
    id = a3d + (a3d + frac(a * a * (d - z), z)) * (z - 1) + a3d * (frac(d, z) - 1);
    inner = frac(a * a * (d - z) * (a - d), d * z);
    outer = 0;
  }
  const mpz_class vi = integral(id, "identity value");
  const mpz_class vn = integral(inner, "value on Z");
  const mpz_class vo = integral(outer, "value on G' minus Z");
  check_mass(inv, n, vi, vn, z - 1, vo, d - z, "closed_camina3");
  switch (r) {
    case Region::identity: return vi;
    case Region::center_nontrivial: return vn;
    case Region::derived_off_center: return vo;
    default: bad_region(r, "closed_camina3");
  }
}

mpq_class camina3_identity_display(const CaminaInvariants& inv_in) {
  CaminaInvariants inv = inv_in;
  check_camina3_invariants(inv);
  const mpz_class &a = inv.order, &d = inv.derived, &z = inv.center;
  return frac(a * a * a * (z * z + d - 1), z * d) + frac(a * a * (d - z) * (z - 1), z);
}

mpz_class closed_camina_gcp_tower(const CaminaInvariants& inv, std::size_t n, Region r) {
  check_closed_n(n);
  check_tower_invariants(inv);
  const mpz_class &a = inv.order, &d = inv.derived, &z = inv.center, &y = inv.center2;
  mpq_class id, inner, outer;
  if (n == 2) {
    id = frac(a * (z * (a + d * (z - 1)) + y * (d - z)), d * z);
    inner = frac(a * (z * (a - d) + y * (d - z)), d * z);
    outer = frac(a * (a - y), d);
  } else {
    id = frac(a * a * (a * z * z + (d - z) * (a + y * (z - 1))), d * z);
    inner = frac(a * a * (d - z) * (a - y), d * z);
    outer = 0;
  }
  const mpz_class vi = integral(id, "identity value");
  const mpz_class vn = integral(inner, "value on Z");
  const mpz_class vo = integral(outer, "value on G' minus Z");
  check_mass(inv, n, vi, vn, z - 1, vo, d - z, "closed_camina_gcp_tower");
  switch (r) {
    case Region::identity: return vi;
    case Region::center_nontrivial: return vn;
    case Region::derived_off_center: return vo;
    default: bad_region(r, "closed_camina_gcp_tower");
  }
}

mpq_class tower_w2_identity_display(const CaminaInvariants& inv) {
  check_tower_invariants(inv);
  const mpz_class &a = inv.order, &d = inv.derived, &z = inv.center, &y = inv.center2;
  return frac(a * a * (z * (a + d * (z - 1)) + y * (d - z)), d * z);
}

mpq_class tower_w3_identity_from_class_form_display(const CaminaInvariants& inv) {
  check_tower_invariants(inv);
  const mpz_class &a = inv.order, &d = inv.derived, &z = inv.center, &y = inv.center2;
  const mpq_class a3d = frac(a * a * a, d);
  const mpq_class given = a3d + frac(a * a * y * (d - y), d * z);
  const mpq_class nl_count = frac(y * (d - z), d * z);
  return a3d + given * (z - 1) + frac(a * a * a, y) * nl_count;
}

void require_gcp_center(const GroupTable& g, const CharacterTable& t) {
  if (!is_generalized_camina_pair(g, center(g), t)) {
    predicate("(G, Z(G)) is not a generalized Camina pair");
  }
}

void require_camina3(const GroupTable& g) {
  if (!is_p_group(g.order())) predicate("G is not a p-group");
  if (nilpotency_class(g) != std::optional<std::size_t>(3)) predicate("G does not have class 3");
  if (!(lower_central_term(g, 3) == center(g))) predicate("gamma_3(G) differs from Z(G)");
  if (!is_camina_pair(g, derived_of(g))) predicate("G is not a Camina group");
}

void require_camina_gcp_tower(const GroupTable& g) {
  const Subgroup z = center(g);
  if (z.is_trivial() || z.is_whole()) predicate("Z(G) must be proper and nontrivial");
  if (!is_camina_pair(g, z)) predicate("(G, Z(G)) is not a Camina pair");
  if (!z.is_subset_of(derived_of(g))) predicate("Z(G) is not contained in G'");
  const Quotient q = quotient(g, z);
  const CharacterTable tq = character_table(q.group);
  if (!is_generalized_camina_pair(q.group, center(q.group), tq)) {
    predicate("(G/Z, Z(G/Z)) is not a generalized Camina pair");
  }
}

const char* family_name(ClosedFamily f) {
  switch (f) {
    case ClosedFamily::gcp_center: return "gcp-center";
    case ClosedFamily::camina3: return "camina-class3";
    case ClosedFamily::camina_gcp_tower: return "camina-gcp-tower";
  }
  return "?";
}

ClassFunction closed_zeta(ClosedFamily f, const GroupTable& g, const CharacterTable& t,
                          std::size_t n) {
  CaminaInvariants inv = CaminaInvariants::of(g);
  const Subgroup z = center(g);
  const Subgroup d = derived_of(g);
  const ConjugacyData& cl = t.classes();
  std::vector<mpq_class> values(cl.count(), 0);
  auto eval = [&](Region r) -> mpz_class {
    switch (f) {
      case ClosedFamily::gcp_center: return closed_gcp_center(inv, n, r);
      case ClosedFamily::camina3: return closed_camina3(inv, n, r);
      case ClosedFamily::camina_gcp_tower: return closed_camina_gcp_tower(inv, n, r);
    }
    return 0;
  };
  switch (f) {
    case ClosedFamily::gcp_center: require_gcp_center(g, t); break;
    case ClosedFamily::camina3: require_camina3(g); break;
    case ClosedFamily::camina_gcp_tower: require_camina_gcp_tower(g); break;
  }
  for (std::size_t j = 0; j < cl.count(); ++j) {
    const Element x = cl.reps[j];
    if (x == g.identity()) {
      values[j] = eval(Region::identity);
    } else if (!d.contains(x)) {
      values[j] = 0;
    } else if (f == ClosedFamily::gcp_center) {
      values[j] = eval(Region::derived_nontrivial);
    } else if (z.contains(x)) {
      values[j] = eval(Region::center_nontrivial);
    } else {
      values[j] = eval(Region::derived_off_center);
    }
  }
  return ClassFunction(t.classes_ptr(), std::move(values));
}

void require_unique_nonlinear(const GroupTable& g, const CharacterTable& t) {
  const auto nl = t.nonlinear();
  if (nl.size() != 1) predicate("G has " + std::to_string(nl.size()) + " nonlinear characters");
  if (!center(g).is_trivial()) predicate("Z(G) is not trivial");
  const long long pm = static_cast<long long>(t.degree(nl[0])) + 1;
  if (!is_prime_power(pm)) predicate("phi(1) + 1 = " + std::to_string(pm) + " is not a prime power");
  if (static_cast<long long>(g.order()) != pm * (pm - 1)) {
    predicate("|G| differs from p^m (p^m - 1) with p^m = " + std::to_string(pm));
  }
}

UniqueNonlinear unique_nonlinear_recursion(const GroupTable& g, const CharacterTable& t,
                                           std::size_t n) {
  check_n_range(n);
  require_unique_nonlinear(g, t);
  const std::size_t phi = t.nonlinear()[0];
  const mpz_class pm = uz(t.degree(phi) + 1);
  const mpz_class a = uz(g.order());
  const mpz_class d = uz(derived_of(g).size());
  std::vector<mpz_class> c(n + 1, 0);
  c[2] = 1;
  for (std::size_t k = 3; k <= n; ++k) {
    const mpq_class next = frac(pow_z(a, k - 1), d) + frac(a * c[k - 1] * (pm - 2), pm - 1);
    c[k] = integral(next, "C^{w_n}(phi)");
  }
  std::vector<mpq_class> coeff(t.count(), 0);
  for (std::size_t chi : t.linear()) coeff[chi] = pow_z(a, n - 1);
  coeff[phi] = frac(a * c[n], pm - 1);
  UniqueNonlinear out{phi, pm, std::move(c), combine(t, coeff)};
  return out;
}

mpz_class unique_nonlinear_nontrivial(const CaminaInvariants& inv, const mpz_class& c_n,
                                      std::size_t n) {
  if (inv.pm < 2) predicate("p^m must be at least 2");
  return integral(frac(pow_z(inv.order, n), inv.derived) -
                      frac(inv.order * c_n, inv.pm - 1),
                  "zeta^{w_n}(g)");
}

mpz_class appl_identity_value(const CaminaInvariants& inv) {
  if (inv.pm < 2) predicate("p^m must be at least 2");
  const mpz_class& a = inv.order;
  return integral(frac(2 * a * a * a, inv.derived) +
                      frac(a * a * (inv.pm - 2), inv.pm - 1),
                  "zeta^{w3}(1)");
}

mpq_class appl_nontrivial_display(const CaminaInvariants& inv) {
  if (inv.pm <= 2) predicate("the display divides by p^m - 2");
  const mpz_class& a = inv.order;
  const mpq_class inner = frac(a, inv.derived) + frac(inv.pm - 2, inv.pm - 1);
  return frac(a * a * a, inv.derived) - frac(a * a, inv.pm - 2) * inner;
}

bool unique_nonlinear_minus_one_on_derived(const GroupTable& g, const CharacterTable& t) {
  require_unique_nonlinear(g, t);
  const std::size_t phi = t.nonlinear()[0];
  const Subgroup d = derived_of(g);
  const ConjugacyData& cl = t.classes();
  const Cyclotomic minus_one = Cyclotomic::integer(t.exponent(), -1);
  for (std::size_t j = 1; j < cl.count(); ++j) {
    if (d.contains(cl.reps[j]) && !(t.value(phi, j) == minus_one)) return false;
  }
  return true;
}

std::vector<Cd2Entry> cd2_bound_check(const GroupTable& g, const CharacterTable& t,
                                      const Subgroup& n_sub, std::size_t n) {
  if (n < 3) predicate("the bound needs n >= 3");
  check_n_range(n);
  const auto cd = t.cd();
  if (cd.size() != 2) predicate("cd(G) must be {1, m}");
  const std::size_t m = cd[1];
  if (!is_normal(g, n_sub)) predicate("N is not normal");
  for (Element x : n_sub.members()) {
    for (Element y : n_sub.members()) {
      if (g.mul(x, y) != g.mul(y, x)) predicate("N is not abelian");
    }
  }
  if (g.order() != m * n_sub.size()) predicate("|G:N| differs from m = " + std::to_string(m));
  const ConjugacyData& cl = t.classes();
  const auto c = c_wn_all(t, n);
  const mpq_class bound = frac(uz(m) * pow_z(uz(g.order()), n - 1), uz(n_sub.size()));
  std::vector<Cd2Entry> out;
  for (std::size_t chi : t.nonlinear()) {
    for (std::size_t j = 0; j < cl.count(); ++j) {
      if (!n_sub.contains(cl.reps[j]) && !t.value(chi, j).is_zero()) {
        predicate("a nonlinear character does not vanish off N");
      }
    }
    const auto f = t.character(chi);
    if (inner_product_on(n_sub, f, f) != uz(m)) predicate("<chi|N, chi|N> differs from m");
    if (c[chi] > bound) {
      throw Error(Errc::assertion_failed, "C^{w_n}(chi) = " + c[chi].get_str() +
                                              " exceeds the bound " + bound.get_str());
    }
    out.push_back({chi, c[chi], bound});
  }
  return out;
}

CaminaPairStructure verify_camina_pair_structure(const GroupTable& g, const CharacterTable& t) {
  const Subgroup z = center(g);
  if (z.is_trivial() || z.is_whole()) predicate("Z(G) must be proper and nontrivial");
  if (!is_camina_pair(g, z)) predicate("(G, Z(G)) is not a Camina pair");
  const ConjugacyData& cl = t.classes();
  const auto given = irr_given(g, z, t).given;
  const std::size_t index = g.order() / z.size();
  CaminaPairStructure out;
  out.given = given.size();
  for (std::size_t chi : given) {
    const std::size_t deg = t.degree(chi);
    if (deg * deg != index) {
      throw Error(Errc::assertion_failed,
                  "a character of Irr(G|Z) has degree " + std::to_string(deg));
    }
    out.degree = deg;
    for (std::size_t j = 0; j < cl.count(); ++j) {
      if (!z.contains(cl.reps[j]) && !t.value(chi, j).is_zero()) {
        throw Error(Errc::assertion_failed, "a character of Irr(G|Z) does not vanish off Z");
      }
    }
  }
  if (given.size() + 1 != z.size()) {
    throw Error(Errc::assertion_failed,
                "|Irr(G|Z)| = " + std::to_string(given.size()) + " but |Z| - 1 = " +
                    std::to_string(z.size() - 1));
  }
  return out;
}

}  // namespace wordcount
