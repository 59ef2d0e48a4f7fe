#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>

#include "wordcount/builtin.hpp"
#include "wordcount/chartab.hpp"
#include "wordcount/error.hpp"

using namespace wordcount;

namespace {

std::vector<std::size_t> sorted_degrees(const CharacterTable& t) {
  std::vector<std::size_t> d = t.degrees();
  std::sort(d.begin(), d.end());
  return d;
}

std::size_t class_of_order(const GroupTable& g, const ConjugacyData& cl, std::size_t o) {
  for (std::size_t j = 0; j < cl.count(); ++j) {
    if (g.element_order(cl.reps[j]) == o) return j;
  }
  FAIL("no class of that order");
  return 0;
}

}  // namespace

TEST_CASE("C2") {
  const GroupTable c2 = build_builtin("cyclic(2)");
  const CharacterTable t = character_table(c2);
  CHECK(t.count() == 2);
  CHECK(t.value(0, 0).as_integer() == mpz_class(1));
  CHECK(t.value(0, 1).as_integer() == mpz_class(1));
  CHECK(t.value(1, 0).as_integer() == mpz_class(1));
  CHECK(t.value(1, 1).as_integer() == mpz_class(-1));
}

TEST_CASE("S3 and Q8") {
  const GroupTable s3 = build_builtin("symmetric(3)");
  const CharacterTable ts = character_table(s3);
  CHECK(sorted_degrees(ts) == std::vector<std::size_t>{1, 1, 2});
  CHECK(ts.cd() == std::vector<std::size_t>{1, 2});

  const GroupTable q8 = build_builtin("quaternion(8)");
  const CharacterTable tq = character_table(q8);
  CHECK(sorted_degrees(tq) == std::vector<std::size_t>{1, 1, 1, 1, 2});
  const std::size_t chi = tq.nonlinear().at(0);
  const Subgroup z = center(q8);
  for (std::size_t j = 0; j < tq.count(); ++j) {
    if (!z.contains(tq.classes().reps[j])) CHECK(tq.value(chi, j).is_zero());
  }
}

TEST_CASE("trivial character comes first") {
  for (const char* spec : {"symmetric(4)", "agl1(5)", "heisenberg(3)", "cyclic(7)"}) {
    const CharacterTable t = character_table(build_builtin(spec));
    for (std::size_t j = 0; j < t.count(); ++j) CHECK(t.value(0, j).as_integer() == mpz_class(1));
  }
}

TEST_CASE("inner products") {
  const GroupTable s3 = build_builtin("symmetric(3)");
  const CharacterTable t = character_table(s3);
  for (std::size_t r = 0; r < t.count(); ++r) {
    for (std::size_t s = 0; s < t.count(); ++s) CHECK(inner_product(t, r, s) == (r == s ? 1 : 0));
  }
  const std::size_t chi2 = t.nonlinear().at(0);
  const Subgroup a3 = commutator_subgroup(s3);
  CHECK(inner_product_on(a3, t.character(chi2), t.character(chi2)) == 2);

  std::vector<mpq_class> reg(t.count(), 0);
  reg[0] = 6;
  const ClassFunction regular(t.classes_ptr(), reg);
  const ClassFunction trivial(t.classes_ptr(), std::vector<mpq_class>(t.count(), 1));
  CHECK(inner_product(regular, trivial) == 1);
  CHECK(inner_product(t, regular, chi2) == 2);

  const CharacterTable other = character_table(build_builtin("cyclic(3)"));
  CHECK_THROWS_AS(inner_product(other, regular, 0), Error);
}

TEST_CASE("restriction agrees with inner_product_on") {
  for (const char* spec : {"symmetric(4)", "quaternion(8)", "agl1(4)", "dihedral(12)"}) {
    const GroupTable g = build_builtin(spec);
    const CharacterTable t = character_table(g);
    std::vector<Subgroup> subs{commutator_subgroup(g), center(g)};
    const std::vector<Element> one{g.generators().front()};
    subs.push_back(Subgroup::generated_by(g, one));
    for (const Subgroup& h : subs) {
      const MaterializedSubgroup m = materialize(g, h);
      const auto hc = conjugacy_classes(m.group);
      for (std::size_t r = 0; r < t.count(); ++r) {
        for (std::size_t s = 0; s < t.count(); ++s) {
          const auto a = restrict_to(t.character(r), m, hc);
          const auto b = restrict_to(t.character(s), m, hc);
          CHECK(inner_product(a, b) == inner_product_on(h, t.character(r), t.character(s)));
        }
      }
    }
  }
}

TEST_CASE("irr_given") {
  const GroupTable q8 = build_builtin("quaternion(8)");
  const CharacterTable tq = character_table(q8);
  CHECK(irr_given(q8, center(q8), tq).given.size() == 1);
  CHECK(irr_given(q8, Subgroup::trivial(q8), tq).given.empty());

  const GroupTable s3 = build_builtin("symmetric(3)");
  const CharacterTable ts = character_table(s3);
  const IrrPartition p = irr_given(s3, commutator_subgroup(s3), ts);
  REQUIRE(p.given.size() == 1);
  CHECK(ts.degree(p.given[0]) == 2);

  const std::vector<Element> gen{1};
  const Subgroup h = Subgroup::generated_by(s3, gen);
  if (!is_normal(s3, h)) CHECK_THROWS_AS(irr_given(s3, h, ts), Error);
}

TEST_CASE("inflation from a quotient") {
  const GroupTable g = build_builtin("dihedral(12)");
  const CharacterTable t = character_table(g);
  const Subgroup z = center(g);
  const Quotient q = quotient(g, z);
  const CharacterTable tq = character_table(q.group);
  const IrrPartition p = irr_given(g, z, t);
  CHECK(p.inflated.size() == tq.count());
  for (std::size_t r = 0; r < tq.count(); ++r) {
    const auto inf = inflate(tq.character(r), q, t.classes_ptr(), t.exponent());
    std::size_t hits = 0;
    for (std::size_t s : p.inflated) hits += inner_product(inf, t.character(s)) == 1;
    CHECK(hits == 1);
  }
}

TEST_CASE("central characters") {
  const GroupTable s3 = build_builtin("symmetric(3)");
  const CharacterTable ts = character_table(s3);
  for (std::size_t j = 0; j < ts.count(); ++j) {
    CHECK(central_character(ts, 0, j).as_integer() ==
          mpz_class(static_cast<unsigned long>(ts.classes().sizes[j])));
  }
  const std::size_t chi2 = ts.nonlinear().at(0);
  CHECK(central_character(ts, chi2, class_of_order(s3, ts.classes(), 3)).as_integer() ==
        mpz_class(-1));

  const GroupTable q8 = build_builtin("quaternion(8)");
  const CharacterTable tq = character_table(q8);
  CHECK(central_character(tq, tq.nonlinear().at(0), class_of_order(q8, tq.classes(), 2))
            .as_integer() == mpz_class(-1));
}

TEST_CASE("Frobenius-Schur count of square roots of 1") {
  for (const char* spec :
       {"cyclic(8)", "quaternion(8)", "dihedral(8)", "symmetric(4)", "alternating(4)", "agl1(5)",
        "agl1(7)", "heisenberg(3)", "extraspecial_minus(3)", "quaternion(16)", "dihedral(32)",
        "direct_product(quaternion(8),cyclic(4))", "elementary_abelian(2,5)", "agl1(8)",
        "direct_product(symmetric(3),cyclic(6))", "quaternion(64)"}) {
    const GroupTable g = build_builtin(spec);
    const CharacterTable t = character_table(g);
    mpz_class sum = 0;
    for (std::size_t r = 0; r < t.count(); ++r) {
      sum += frobenius_schur_indicator(g, t, r) * static_cast<unsigned long>(t.degree(r));
    }
    std::size_t roots = 0;
    for (Element x = 0; x < g.order(); ++x) roots += g.mul(x, x) == 0;
    CHECK_MESSAGE(sum == static_cast<unsigned long>(roots), spec);
  }
}

TEST_CASE("larger tables pass both orthogonality relations") {
  for (const char* spec : {"alternating(5)", "symmetric(5)", "agl1(16)", "agl1(27)",
                           "alternating(6)", "symmetric(6)", "extraspecial_minus(5)"}) {
    const GroupTable g = build_builtin(spec);
    const CharacterTable t = character_table(g);
    std::size_t sum = 0;
    for (std::size_t d : t.degrees()) sum += d * d;
    CHECK_MESSAGE(sum == g.order(), spec);
  }
  const CharacterTable a5 = character_table(build_builtin("alternating(5)"));
  CHECK(a5.degrees() == std::vector<std::size_t>{1, 3, 3, 4, 5});
}

TEST_CASE("structural report completion") {
  const GroupTable q8 = build_builtin("quaternion(8)");
  GroupClassReport r = structural_report(q8);
  complete_report(r, q8, character_table(q8));
  CHECK(r.is_vz);
  CHECK(r.unique_nonlinear);
  REQUIRE(r.gcp_targets.has_value());
  CHECK(r.gcp_targets->size() == 4);  // Z and the three subgroups of order 4

  const GroupTable s4 = build_builtin("symmetric(4)");
  GroupClassReport rs = structural_report(s4);
  complete_report(rs, s4, character_table(s4));
  CHECK_FALSE(rs.is_vz);
  CHECK(rs.cd == std::vector<std::size_t>{1, 2, 3});
}

TEST_CASE("disk cache round trip") {
  const auto dir = std::filesystem::temp_directory_path() / "wordcount-test-cache";
  std::filesystem::remove_all(dir);
  const GroupTable g = build_builtin("agl1(5)");
  const CharacterTable a = cached_character_table(g, dir);
  const CharacterTable b = cached_character_table(g, dir);
  CHECK(a == b);
  const std::string text = serialize_table(a);
  CHECK(text.rfind("chartab e=20 k=5\n", 0) == 0);
  CHECK(parse_table(text, g) == a);
  CHECK_THROWS_AS(parse_table("chartab e=3 k=2\n", g), Error);
  std::filesystem::remove_all(dir);
}
