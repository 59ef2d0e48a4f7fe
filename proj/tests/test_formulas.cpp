#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>

#include "wordcount/builtin.hpp"
#include "wordcount/counting.hpp"
#include "wordcount/error.hpp"
#include "wordcount/formulas.hpp"

using namespace wordcount;

namespace {

std::optional<Errc> errc_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

mpz_class z(long v) { return mpz_class(v); }

CaminaInvariants invariants(long a, long d, long c, long y = 0, long pm = 0) {
  return {z(a), z(d), z(c), z(y), z(pm)};
}

// Value of zeta at the first element of the given order.
mpq_class at_order(const GroupTable& g, const ClassFunction& f, std::size_t order) {
  for (Element x = 0; x < g.order(); ++x) {
    if (g.element_order(x) == order) return f.at_element(x);
  }
  return -1;
}

}  // namespace

TEST_CASE("Frobenius count against brute force") {
  for (const char* spec : {"cyclic(6)", "symmetric(3)", "quaternion(8)", "dihedral(8)",
                           "alternating(4)", "symmetric(4)", "agl1(5)", "heisenberg(3)"}) {
    const GroupTable g = build_builtin(spec);
    const CharacterTable t = character_table(g);
    CHECK_MESSAGE(zeta_w2_frobenius(t) == zeta_brute(g, wn(2)), spec);
  }
  const GroupTable a4 = build_builtin("alternating(4)");
  const ClassFunction f = zeta_w2_frobenius(character_table(a4));
  CHECK(f[0] == 48);
  CHECK(at_order(a4, f, 2) == 32);
  CHECK(at_order(a4, f, 3) == 0);
}

TEST_CASE("C^{w_n} values") {
  const GroupTable s3 = build_builtin("symmetric(3)");
  const CharacterTable t = character_table(s3);
  const ClassFunction z2 = zeta_w2_frobenius(t);
  const std::size_t phi = t.nonlinear()[0];
  CHECK(c_wn(t, phi, z2) == 15);
  for (std::size_t chi : t.linear()) CHECK(c_wn(t, chi, z2) == 6);
  for (const auto& c : c_wn_all(t, 2)) CHECK(c == 1);
  CHECK(errc_of([&] { c_wn_all(t, 9); }) == Errc::unsupported_parameter);
  CHECK(errc_of([&] { zeta_wn_char(t, 1); }) == Errc::arity_too_small);
}

TEST_CASE("recursion against brute force") {
  const GroupTable s3 = build_builtin("symmetric(3)");
  const ClassFunction z3 = zeta_wn_char(character_table(s3), 3);
  CHECK(z3[0] == 162);
  CHECK(at_order(s3, z3, 3) == 27);
  CHECK(at_order(s3, z3, 2) == 0);

  const GroupTable a4 = build_builtin("alternating(4)");
  const ClassFunction y3 = zeta_wn_char(character_table(a4), 3);
  CHECK(y3[0] == 960);
  CHECK(at_order(a4, y3, 2) == 256);

  for (const char* spec : {"dihedral(8)", "quaternion(8)", "alternating(4)", "dihedral(12)",
                           "direct_product(quaternion(8),cyclic(2))"}) {
    const GroupTable g = build_builtin(spec);
    CHECK_MESSAGE(zeta_wn_char(character_table(g), 3) == zeta_brute(g, wn(3)), spec);
  }
  const GroupTable d8 = build_builtin("dihedral(8)");
  CHECK(zeta_wn_char(character_table(d8), 4) == zeta_brute(d8, wn(4)));
  // Class below n: the word is identically 1.
  const ClassFunction q = zeta_wn_char(character_table(build_builtin("quaternion(8)")), 3);
  CHECK(q[0] == 512);
  for (std::size_t j = 1; j < q.size(); ++j) CHECK(q[j] == 0);
}

TEST_CASE("first moment and stabilization") {
  const GroupTable g = build_builtin("quaternion(16)");
  const CharacterTable t = character_table(g);
  const auto cls = *nilpotency_class(g);
  const mpz_class a = g.order();
  for (std::size_t n = 3; n <= 5; ++n) {
    const auto c = c_wn_all(t, n);
    mpz_class p;
    mpz_pow_ui(p.get_mpz_t(), a.get_mpz_t(), n - 2);
    CHECK(c[0] == p);
  }
  for (std::size_t m = cls + 1; m <= cls + 2; ++m) {
    const auto c = c_wn_all(t, m + 1);
    for (std::size_t chi = 0; chi < t.count(); ++chi) {
      mpz_class p;
      mpz_pow_ui(p.get_mpz_t(), a.get_mpz_t(), m - 1);
      CHECK(c[chi] == p * t.degree(chi) * t.degree(chi));
    }
  }
}

TEST_CASE("mixed domains") {
  const GroupTable s3 = build_builtin("symmetric(3)");
  const CharacterTable t = character_table(s3);
  const Subgroup a3 = commutator_subgroup(s3);
  const MixedResult r = zeta_mixed_domain(s3, t, a3, parse_word("x1"), parse_word("x1"));
  CHECK(r.word == parse_word("[x1,x2]"));
  const auto brute = count_fibers(s3, r.word, r.domains);
  for (Element x = 0; x < s3.order(); ++x) {
    CHECK(r.counts[x] == static_cast<unsigned long>(brute[x]));
    const std::size_t o = s3.element_order(x);
    CHECK(r.counts[x] == (o == 1 ? 12 : o == 3 ? 3 : 0));
  }
  CHECK(errc_of([&] {
          zeta_mixed_domain(s3, t, a3, parse_word("x1"), parse_word("[x1,x2]"));
        }) == Errc::not_measure_preserving);
  const Subgroup c2 = Subgroup::generated_by(s3, std::vector<Element>{s3.generators()[0]});
  if (!is_normal(s3, c2)) {
    CHECK(errc_of([&] { zeta_mixed_domain(s3, t, c2, parse_word("x1"), parse_word("x1")); }) ==
          Errc::not_normal);
  }
  // H = G recovers the recursion.
  const MixedResult whole =
      zeta_mixed_domain(s3, t, Subgroup::whole(s3), wn(2), parse_word("x1"));
  CHECK(whole.zeta == zeta_wn_char(t, 3));
  // A larger case with a nontrivial inner word.
  const GroupTable s4 = build_builtin("symmetric(4)");
  const CharacterTable t4 = character_table(s4);
  const Subgroup a4 = commutator_subgroup(s4);
  const MixedResult m = zeta_mixed_domain(s4, t4, a4, parse_word("x1^2 x2"), parse_word("x1^5"));
  const auto b = count_fibers(s4, m.word, m.domains);
  for (Element x = 0; x < s4.order(); ++x) CHECK(m.counts[x] == static_cast<unsigned long>(b[x]));
}

TEST_CASE("classify") {
  const GroupTable q8 = build_builtin("quaternion(8)");
  const GroupClassReport rq = classify(q8, character_table(q8));
  CHECK(rq.is_vz);
  REQUIRE(rq.gcp_targets);
  CHECK(std::find(rq.gcp_targets->begin(), rq.gcp_targets->end(), center(q8)) !=
        rq.gcp_targets->end());
  const GroupTable s3 = build_builtin("symmetric(3)");
  const GroupClassReport rs = classify(s3, character_table(s3));
  CHECK(rs.unique_nonlinear);
  CHECK(*rs.cd == std::vector<std::size_t>{1, 2});
  const GroupTable c6 = build_builtin("cyclic(6)");
  const GroupClassReport rc = classify(c6, character_table(c6));
  CHECK(rc.is_abelian);
  CHECK(!rc.unique_nonlinear);
  CHECK(*rc.cd == std::vector<std::size_t>{1});
}

TEST_CASE("GCP with N = Z closed form") {
  const CaminaInvariants inv = invariants(8, 2, 2);
  CHECK(closed_gcp_center(inv, 2, Region::identity) == 40);
  CHECK(closed_gcp_center(inv, 2, Region::derived_nontrivial) == 24);
  CHECK(closed_gcp_center(inv, 3, Region::identity) == 512);
  CHECK(closed_gcp_center(inv, 3, Region::derived_nontrivial) == 0);
  CHECK(errc_of([&] { closed_gcp_center(inv, 2, Region::center_nontrivial); }) ==
        Errc::unsupported_parameter);
  for (const char* spec : {"quaternion(8)", "dihedral(8)", "heisenberg(3)",
                           "extraspecial_minus(3)", "direct_product(dihedral(8),cyclic(3))"}) {
    const GroupTable g = build_builtin(spec);
    const CharacterTable t = character_table(g);
    for (std::size_t n : {2, 3}) {
      CHECK_MESSAGE(closed_zeta(ClosedFamily::gcp_center, g, t, n) == zeta_brute(g, wn(n)), spec);
    }
  }
  const GroupTable s3 = build_builtin("symmetric(3)");
  CHECK(errc_of([&] { closed_zeta(ClosedFamily::gcp_center, s3, character_table(s3), 2); }) ==
        Errc::predicate_failed);
}

TEST_CASE("Camina class 3 invariants") {
  const CaminaInvariants inv = invariants(128, 8, 2);
  CHECK(closed_camina3(inv, 2, Region::identity) == 2560);
  CHECK(closed_camina3(inv, 2, Region::center_nontrivial) == 2304);
  CHECK(closed_camina3(inv, 2, Region::derived_off_center) == 1920);
  CHECK(closed_camina3(inv, 3, Region::identity) == 1359872);
  CHECK(closed_camina3(inv, 3, Region::center_nontrivial) == 737280);
  CHECK(closed_camina3(inv, 3, Region::derived_off_center) == 0);
  CHECK(camina3_identity_display(inv) == 1490944);
  // |G:G'| must be the square of |G':Z| with an even exponent.
  CHECK(errc_of([] { closed_camina3(invariants(64, 8, 2), 2, Region::identity); }) ==
        Errc::predicate_failed);
  CHECK(errc_of([] { closed_camina3(invariants(32, 8, 4), 2, Region::identity); }) ==
        Errc::predicate_failed);
  CHECK(errc_of([] { closed_camina3(invariants(128, 8, 2), 4, Region::identity); }) ==
        Errc::unsupported_parameter);
  const GroupTable s4 = build_builtin("symmetric(4)");
  CHECK(errc_of([&] { require_camina3(s4); }) == Errc::predicate_failed);
}

TEST_CASE("Camina pair tower") {
  // Extraspecial groups: (G, Z) is a Camina pair and G/Z is abelian.
  for (const char* spec : {"quaternion(8)", "dihedral(8)", "heisenberg(3)",
                           "extraspecial_minus(3)"}) {
    const GroupTable g = build_builtin(spec);
    const CharacterTable t = character_table(g);
    for (std::size_t n : {2, 3}) {
      CHECK_MESSAGE(closed_zeta(ClosedFamily::camina_gcp_tower, g, t, n) == zeta_brute(g, wn(n)),
                    spec);
    }
  }
  const CaminaInvariants q8 = invariants(8, 2, 2, 8);
  CHECK(closed_camina_gcp_tower(q8, 2, Region::identity) == 40);
  CHECK(tower_w2_identity_display(q8) == 320);
  // Degenerate Z_2 = G': the G' minus Z value is |G|(|G|-|Z_2|)/|G'|.
  const CaminaInvariants deg = invariants(64, 8, 2, 8);
  CHECK(closed_camina_gcp_tower(deg, 2, Region::derived_off_center) == 64 * (64 - 8) / 8);
  CHECK(closed_camina_gcp_tower(deg, 3, Region::derived_off_center) == 0);
  // The class-function display only agrees when |Z_2| = |Z|.
  CHECK(tower_w3_identity_from_class_form_display(deg) !=
        closed_camina_gcp_tower(deg, 3, Region::identity));
  const GroupTable s3 = build_builtin("symmetric(3)");
  CHECK(errc_of([&] { require_camina_gcp_tower(s3); }) == Errc::predicate_failed);
  const GroupTable q8c2 = build_builtin("direct_product(quaternion(8),cyclic(2))");
  CHECK(errc_of([&] { require_camina_gcp_tower(q8c2); }) == Errc::predicate_failed);
}

TEST_CASE("unique nonlinear character") {
  const GroupTable s3 = build_builtin("symmetric(3)");
  const CharacterTable ts = character_table(s3);
  const UniqueNonlinear us = unique_nonlinear_recursion(s3, ts, 3);
  CHECK(us.pm == 3);
  CHECK(us.c[3] == 15);
  CHECK(us.zeta == zeta_brute(s3, wn(3)));
  CaminaInvariants is = CaminaInvariants::of(s3);
  is.pm = us.pm;
  CHECK(appl_identity_value(is) == 162);
  CHECK(unique_nonlinear_nontrivial(is, us.c[3], 3) == 27);
  CHECK(appl_nontrivial_display(is) == -18);
  CHECK(unique_nonlinear_recursion(s3, ts, 2).zeta == zeta_w2_frobenius(ts));
  CHECK(unique_nonlinear_minus_one_on_derived(s3, ts));

  const GroupTable a4 = build_builtin("alternating(4)");
  const CharacterTable ta = character_table(a4);
  const UniqueNonlinear ua = unique_nonlinear_recursion(a4, ta, 3);
  CHECK(ua.c[3] == 44);
  CHECK(ua.zeta[0] == 960);
  CaminaInvariants ia = CaminaInvariants::of(a4);
  ia.pm = ua.pm;
  CHECK(appl_identity_value(ia) == 960);
  CHECK(unique_nonlinear_nontrivial(ia, ua.c[3], 3) == 256);

  for (const char* spec : {"agl1(5)", "agl1(7)", "agl1(8)", "agl1(9)"}) {
    const GroupTable g = build_builtin(spec);
    const CharacterTable t = character_table(g);
    CHECK(unique_nonlinear_minus_one_on_derived(g, t));
    for (std::size_t n = 2; n <= 5; ++n) {
      CHECK_MESSAGE(unique_nonlinear_recursion(g, t, n).zeta == zeta_wn_char(t, n), spec);
    }
  }
  CaminaInvariants hyp = invariants(2, 1, 1, 0, 2);
  CHECK(appl_identity_value(hyp) == 16);
  CHECK(errc_of([&] { appl_nontrivial_display(hyp); }) == Errc::predicate_failed);
  const GroupTable q8 = build_builtin("quaternion(8)");
  CHECK(errc_of([&] { unique_nonlinear_recursion(q8, character_table(q8), 3); }) ==
        Errc::predicate_failed);
}

TEST_CASE("cd2 bound") {
  const GroupTable s3 = build_builtin("symmetric(3)");
  const CharacterTable ts = character_table(s3);
  const auto rs = cd2_bound_check(s3, ts, commutator_subgroup(s3), 3);
  REQUIRE(rs.size() == 1);
  CHECK(rs[0].c == 15);
  CHECK(rs[0].bound == 24);
  const GroupTable a4 = build_builtin("alternating(4)");
  const auto ra = cd2_bound_check(a4, character_table(a4), commutator_subgroup(a4), 3);
  REQUIRE(ra.size() == 1);
  CHECK(ra[0].c == 44);
  CHECK(ra[0].bound == 108);
  CHECK(errc_of([&] { cd2_bound_check(s3, ts, commutator_subgroup(s3), 2); }) ==
        Errc::predicate_failed);
  CHECK(errc_of([&] { cd2_bound_check(s3, ts, Subgroup::whole(s3), 3); }) ==
        Errc::predicate_failed);
}

TEST_CASE("Camina pair structure") {
  for (const char* spec : {"quaternion(8)", "dihedral(8)", "heisenberg(3)"}) {
    const GroupTable g = build_builtin(spec);
    const CaminaPairStructure r = verify_camina_pair_structure(g, character_table(g));
    CHECK(r.given + 1 == center(g).size());
    CHECK(r.degree * r.degree * center(g).size() == g.order());
  }
  const GroupTable s3 = build_builtin("symmetric(3)");
  CHECK(errc_of([&] { verify_camina_pair_structure(s3, character_table(s3)); }) ==
        Errc::predicate_failed);
}
