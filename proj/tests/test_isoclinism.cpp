#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "wordcount/builtin.hpp"
#include "wordcount/error.hpp"
#include "wordcount/isoclinism.hpp"

using namespace wordcount;

namespace {

GroupTable b(const char* spec) { return build_builtin(spec); }

Element first_of_order(const GroupTable& g, const Subgroup& s, std::size_t order) {
  for (Element x : s.members()) {
    if (g.element_order(x) == order) return x;
  }
  return 0;
}

}  // namespace

TEST_CASE("identity witness") {
  for (const char* spec : {"symmetric(3)", "quaternion(8)", "heisenberg(3)"}) {
    const GroupTable g = b(spec);
    for (std::size_t n : {1, 2}) {
      const auto w = find_isoclinism(g, g, n);
      REQUIRE(w);
      check_witness(g, g, *w);
      for (std::size_t i = 0; i < w->gamma_g.size(); ++i) CHECK(w->psi[i] == w->gamma_g[i]);
      const ScalingReport r = verify_scaling(g, g, *w);
      CHECK(r.holds);
      CHECK(r.factor == 1);
    }
  }
}

TEST_CASE("D8 and Q8") {
  const GroupTable d8 = b("dihedral(8)");
  const GroupTable q8 = b("quaternion(8)");
  const auto w = find_isoclinism(d8, q8, 1);
  REQUIRE(w);
  check_witness(d8, q8, *w);
  const ScalingReport r = verify_scaling(d8, q8, *w);
  CHECK(r.holds);
  CHECK(r.factor == 1);
  const Element r2 = first_of_order(d8, commutator_subgroup(d8), 2);
  CHECK(w->apply_psi(r2) != q8.identity());
  for (const auto& e : r.entries) {
    if (e.g == r2) CHECK(e.lhs == 24);
  }
  const ScalingReport rb = verify_scaling(d8, q8, *w, ZetaMethod::brute);
  CHECK(rb.holds);
}

TEST_CASE("scaling by a direct factor") {
  const GroupTable g = b("direct_product(quaternion(8),cyclic(2))");
  const GroupTable q8 = b("quaternion(8)");
  const auto w = find_isoclinism(g, q8, 1);
  REQUIRE(w);
  const ScalingReport r = verify_scaling(g, q8, *w);
  CHECK(r.holds);
  CHECK(r.factor == 4);
  bool saw = false;
  for (const auto& e : r.entries) {
    if (e.g != g.identity()) {
      CHECK(e.lhs == 96);
      CHECK(e.rhs == 96);
      saw = true;
    }
  }
  CHECK(saw);
  // G and G x A for abelian A.
  for (const char* a : {"cyclic(3)", "cyclic(4)", "elementary_abelian(2,2)"}) {
    const GroupTable s3 = b("symmetric(3)");
    const GroupTable p = direct_product(s3, b(a));
    const auto v = find_isoclinism(p, s3, 1);
    REQUIRE_MESSAGE(v, a);
    CHECK(verify_scaling(p, s3, *v).holds);
  }
}

TEST_CASE("non-isoclinic pairs") {
  CHECK(!find_isoclinism(b("quaternion(8)"), b("cyclic(8)"), 1));
  CHECK(!find_isoclinism(b("symmetric(3)"), b("dihedral(8)"), 1));
  CHECK(!find_isoclinism(b("dihedral(16)"), b("quaternion(8)"), 1));
  // Class 2 groups are 2-isoclinic to abelian groups.
  const auto w = find_isoclinism(b("dihedral(8)"), b("cyclic(2)"), 2);
  REQUIRE(w);
  CHECK(verify_scaling(b("dihedral(8)"), b("cyclic(2)"), *w).holds);
}

TEST_CASE("level 2") {
  const GroupTable d16 = b("dihedral(16)");
  const GroupTable q16 = b("quaternion(16)");
  const auto w = find_isoclinism(d16, q16, 2);
  REQUIRE(w);
  const ScalingReport r = verify_scaling(d16, q16, *w, ZetaMethod::brute);
  CHECK(r.holds);
  CHECK(find_isoclinism(d16, q16, 1));
}

TEST_CASE("bad witnesses and bounds") {
  const GroupTable d8 = b("dihedral(8)");
  const GroupTable q8 = b("quaternion(8)");
  auto w = *find_isoclinism(d8, q8, 1);
  auto broken = w;
  std::swap(broken.phi[1], broken.phi[2]);
  broken.phi[0] = broken.phi[1];
  CHECK_THROWS_AS(check_witness(d8, q8, broken), Error);
  auto bad_psi = w;
  bad_psi.psi[1] = q8.identity();
  try {
    verify_scaling(d8, q8, bad_psi);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::witness_invalid);
  }
  const GroupTable s5 = b("symmetric(5)");
  try {
    find_isoclinism(s5, s5, 1);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::search_bound_exceeded);
  }
  CHECK_THROWS_AS(find_isoclinism(d8, q8, 0), Error);
}
