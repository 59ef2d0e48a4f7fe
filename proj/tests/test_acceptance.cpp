// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any FAIL.
// FLAGGED lines report displayed formulas that disagree with the oracle; they
// are informational.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "wordcount/builtin.hpp"
#include "wordcount/chartab.hpp"
#include "wordcount/counting.hpp"
#include "wordcount/error.hpp"
#include "wordcount/formulas.hpp"
#include "wordcount/isoclinism.hpp"
#include "wordcount/word.hpp"

using namespace wordcount;

namespace {

using clock_type = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

double seconds_since(clock_type::time_point t0) {
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

struct Entry {
  std::string spec;
  GroupTable g;
  CharacterTable t;
};

std::vector<std::string> sweep_specs() {
  std::vector<std::string> s;
  for (int n = 1; n <= 24; ++n) s.push_back("cyclic(" + std::to_string(n) + ")");
  for (int n = 4; n <= 24; n += 2) s.push_back("dihedral(" + std::to_string(n) + ")");
  for (const char* x : {"quaternion(8)", "symmetric(3)", "symmetric(4)", "alternating(4)",
                        "agl1(3)", "agl1(4)", "agl1(5)", "extraspecial_plus(2)",
                        "extraspecial_minus(2)", "extraspecial_plus(3)",
                        "extraspecial_minus(3)", "heisenberg(3)"}) {
    s.push_back(x);
  }
  return s;
}

// Groups and tables are built once; table time is charged to criterion 1.
std::vector<Entry>& sweep() {
  static std::vector<Entry> groups;
  return groups;
}

void build_sweep() {
  for (const auto& spec : sweep_specs()) {
    GroupTable g = build_builtin(spec);
    CharacterTable t = character_table(g);
    sweep().push_back({spec, std::move(g), std::move(t)});
  }
}

mpz_class ipow(std::size_t base, std::size_t e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

Entry& find(const std::string& spec) {
  for (auto& e : sweep()) {
    if (e.spec == spec) return e;
  }
  throw Error(Errc::unknown_family, spec + " is not in the sweep");
}

// Concatenated CSV of the brute-force counts behind criteria 1 and 2.
std::string sweep_csv(std::size_t workers) {
  const CountOptions opts{workers, kDefaultBudget};
  std::string out;
  for (const auto& e : sweep()) {
    const auto cls = e.t.classes_ptr();
    out += "# " + e.spec + " n=2\n" + zeta_csv(e.g, zeta_brute(e.g, wn(2), cls, opts), 2);
    if (e.g.order() <= 16) {
      out += "# " + e.spec + " n=3\n" + zeta_csv(e.g, zeta_brute(e.g, wn(3), cls, opts), 3);
    }
    if (e.g.order() <= 8) {
      out += "# " + e.spec + " n=4\n" + zeta_csv(e.g, zeta_brute(e.g, wn(4), cls, opts), 4);
    }
  }
  return out;
}

Outcome frobenius_sweep() {
  Outcome o;
  const auto t0 = clock_type::now();
  build_sweep();
  for (const auto& e : sweep()) {
    const ClassFunction brute = zeta_brute(e.g, wn(2), e.t.classes_ptr(), {});
    o.require(zeta_w2_frobenius(e.t) == brute, e.spec + ": frobenius != brute");
  }
  const double s = seconds_since(t0);
  o.require(s < 10.0, "took " + std::to_string(s) + " s");
  if (o.ok) {
    std::ostringstream d;
    d << sweep().size() << " groups, " << s << " s";
    o.detail = d.str();
  }
  return o;
}

Outcome recursion_sweep() {
  Outcome o;
  const auto t0 = clock_type::now();
  std::size_t checks = 0;
  for (const auto& e : sweep()) {
    for (std::size_t n : {3, 4}) {
      if (e.g.order() > (n == 3 ? 16u : 8u)) continue;
      const ClassFunction brute = zeta_brute(e.g, wn(n), e.t.classes_ptr(), {});
      o.require(zeta_wn_char(e.t, n) == brute, e.spec + " n=" + std::to_string(n));
      ++checks;
    }
  }
  const double s = seconds_since(t0);
  o.require(s < 30.0, "took " + std::to_string(s) + " s");
  if (o.ok) o.detail = std::to_string(checks) + " comparisons, " + std::to_string(s) + " s";
  return o;
}

Outcome gcp_closed_form() {
  Outcome o;
  for (const char* spec : {"quaternion(8)", "dihedral(8)"}) {
    const Entry& e = find(spec);
    const auto& cl = e.t.classes();
    const Subgroup d = commutator_subgroup(e.g);
    std::size_t nontrivial_class = 0;
    for (Element x : d.members()) {
      if (x != 0) nontrivial_class = cl.class_of[x];
    }
    for (std::size_t n : {2, 3}) {
      const ClassFunction closed = closed_zeta(ClosedFamily::gcp_center, e.g, e.t, n);
      const ClassFunction chr = zeta_wn_char(e.t, n);
      const ClassFunction brute = zeta_brute(e.g, wn(n), e.t.classes_ptr(), {});
      const std::string tag = std::string(spec) + " n=" + std::to_string(n);
      o.require(closed == chr && chr == brute, tag + ": paths disagree");
      const mpz_class at1 = n == 2 ? 40 : 512;
      const mpz_class atd = n == 2 ? 24 : 0;
      o.require(closed[0] == at1, tag + ": identity value " + closed[0].get_str());
      o.require(closed[nontrivial_class] == atd,
                tag + ": G' value " + closed[nontrivial_class].get_str());
    }
  }
  if (o.ok) o.detail = "Q8, D8: n=2 (40, 24), n=3 (512, 0)";
  return o;
}

Outcome unique_nonlinear(std::vector<std::string>& flagged) {
  Outcome o;
  struct Case {
    const char* spec;
    long c3;
    long z1;
    long zd;
  };
  for (const Case& k : {Case{"symmetric(3)", 15, 162, 27}, Case{"alternating(4)", 44, 960, 256}}) {
    const Entry& e = find(k.spec);
    const UniqueNonlinear r = unique_nonlinear_recursion(e.g, e.t, 3);
    const ClassFunction brute = zeta_brute(e.g, wn(3), e.t.classes_ptr(), {});
    o.require(r.c[3] == k.c3, std::string(k.spec) + ": C = " + r.c[3].get_str());
    o.require(r.zeta == brute, std::string(k.spec) + ": recursion != brute");
    const Subgroup d = commutator_subgroup(e.g);
    for (Element x = 0; x < e.g.order(); ++x) {
      const mpq_class want = x == 0 ? mpq_class(k.z1) : d.contains(x) ? mpq_class(k.zd) : 0;
      o.require(brute.at_element(x) == want, std::string(k.spec) + ": pattern at " + e.g.label(x));
    }
    CaminaInvariants inv = CaminaInvariants::of(e.g);
    inv.pm = r.pm;
    o.require(appl_identity_value(inv) == k.z1, std::string(k.spec) + ": identity value");
    mpz_class nontrivial = 0;
    for (Element x : d.members()) {
      if (x != 0) nontrivial = mpz_class(brute.at_element(x));
    }
    o.require(unique_nonlinear_nontrivial(inv, r.c[3], 3) == nontrivial,
              std::string(k.spec) + ": nontrivial value");
    if (std::string(k.spec) == "symmetric(3)") {
      const mpq_class display = appl_nontrivial_display(inv);
      o.require(display == -18, "S3 display value " + display.get_str());
      flagged.push_back("FLAGGED 4 symmetric(3) g!=1 display=" + display.get_str() +
                        " recomputed=" + nontrivial.get_str());
    }
  }
  if (o.ok) o.detail = "S3 C=15 (162,27,0); A4 C=44 (960,256,0)";
  return o;
}

Outcome first_moment() {
  Outcome o;
  for (const auto& e : sweep()) {
    const ClassFunction one(e.t.classes_ptr(),
                            std::vector<mpq_class>(e.t.classes().count(), mpq_class(1)));
    for (std::size_t n : {3, 4, 5}) {
      const ClassFunction z = zeta_brute(e.g, wn(n - 1), e.t.classes_ptr(), {});
      o.require(inner_product(z, one) == ipow(e.g.order(), n - 2),
                e.spec + " n=" + std::to_string(n));
    }
  }
  if (o.ok) o.detail = std::to_string(sweep().size()) + " groups, n = 3, 4, 5";
  return o;
}

Outcome character_property() {
  Outcome o;
  for (const auto& e : sweep()) {
    for (std::size_t n : {2, 3}) {
      const ClassFunction z = zeta_brute(e.g, wn(n), e.t.classes_ptr(), {});
      for (std::size_t chi = 0; chi < e.t.count(); ++chi) {
        const mpq_class m = inner_product(e.t, z, chi);
        o.require(m.get_den() == 1 && m >= 0,
                  e.spec + " n=" + std::to_string(n) + " chi" + std::to_string(chi) + " = " +
                      m.get_str());
      }
    }
  }
  if (o.ok) o.detail = std::to_string(sweep().size()) + " groups, n = 2, 3";
  return o;
}

Outcome stabilization() {
  Outcome o;
  std::size_t groups = 0;
  for (const auto& e : sweep()) {
    const auto c = nilpotency_class(e.g);
    if (!c) continue;
    ++groups;
    for (std::size_t m : {*c + 1, *c + 2}) {
      const auto coeff = c_wn_all(e.t, m + 1);
      for (std::size_t chi = 0; chi < e.t.count(); ++chi) {
        const mpz_class d = e.t.degree(chi);
        const mpz_class want = d * d * ipow(e.g.order(), m - 1);
        o.require(coeff[chi] == want, e.spec + " m=" + std::to_string(m) + " chi" +
                                          std::to_string(chi) + " = " + coeff[chi].get_str());
      }
    }
  }
  if (o.ok) o.detail = std::to_string(groups) + " nilpotent groups, m = class+1, class+2";
  return o;
}

Outcome mixed_domain() {
  Outcome o;
  const Entry& e = find("symmetric(3)");
  const Subgroup h = commutator_subgroup(e.g);
  const Word x1 = parse_word("x1");
  const MixedResult r = zeta_mixed_domain(e.g, e.t, h, x1, x1);
  DomainSpec d = DomainSpec::whole(2);
  d.domains[0] = h;
  const auto brute = count_fibers(e.g, parse_word("[x1,x2]"), d);
  std::vector<long> pattern;
  for (Element x = 0; x < e.g.order(); ++x) {
    o.require(r.counts[x] == brute[x], "element " + e.g.label(x));
    o.require(r.zeta.at_element(x) == r.counts[x], "not a class function at " + e.g.label(x));
    pattern.push_back(static_cast<long>(brute[x]));
  }
  std::sort(pattern.rbegin(), pattern.rend());
  o.require(pattern == std::vector<long>{12, 3, 3, 0, 0, 0}, "pattern");
  for (const auto& cls : e.t.classes().members) {
    if (!h.contains(cls[0])) continue;
    for (Element x : cls) o.require(brute[x] == brute[cls[0]], "not constant on a class in H");
  }
  if (o.ok) o.detail = "S3/A3: (12,3,3,0,0,0)";
  return o;
}

Outcome isoclinism_scaling() {
  Outcome o;
  struct Pair {
    const char* g;
    const char* h;
    long factor;
  };
  for (const Pair& p : {Pair{"dihedral(8)", "quaternion(8)", 1},
                        Pair{"direct_product(quaternion(8),cyclic(2))", "quaternion(8)", 4}}) {
    const GroupTable g = build_builtin(p.g);
    const GroupTable h = build_builtin(p.h);
    const auto w = find_isoclinism(g, h, 1);
    o.require(w.has_value(), std::string("no witness for ") + p.g);
    if (!w) continue;
    check_witness(g, h, *w);
    for (ZetaMethod m : {ZetaMethod::character, ZetaMethod::brute}) {
      const ScalingReport r = verify_scaling(g, h, *w, m);
      o.require(r.holds, std::string(p.g) + ": scaling fails");
      o.require(r.factor == p.factor, std::string(p.g) + ": factor " + r.factor.get_str());
      for (const auto& x : r.entries) o.require(x.lhs == x.rhs, std::string(p.g) + ": entry");
    }
  }
  if (o.ok) o.detail = "D8~Q8 factor 1, Q8xC2~Q8 factor 4";
  return o;
}

Outcome camina_class3(std::vector<std::string>& flagged) {
  Outcome o;
  CaminaInvariants inv{128, 8, 2, 0, 0};
  const mpz_class n2_1 = closed_camina3(inv, 2, Region::identity);
  const mpz_class n2_z = closed_camina3(inv, 2, Region::center_nontrivial);
  const mpz_class n2_d = closed_camina3(inv, 2, Region::derived_off_center);
  o.require(n2_1 == 2560 && n2_z == 2304 && n2_d == 1920, "n=2 values");
  o.require(n2_1 + n2_z + 6 * n2_d == 16384, "n=2 mass");
  const mpz_class n3_1 = closed_camina3(inv, 3, Region::identity);
  const mpz_class n3_z = closed_camina3(inv, 3, Region::center_nontrivial);
  const mpz_class n3_d = closed_camina3(inv, 3, Region::derived_off_center);
  o.require(n3_1 == 1359872 && n3_z == 737280 && n3_d == 0, "n=3 values");
  o.require(n3_1 + n3_z + 6 * n3_d == 2097152, "n=3 mass");
  const mpq_class display = camina3_identity_display(inv);
  flagged.push_back("FLAGGED 10 invariants(128,8,2) identity display=" + display.get_str() +
                    " class-function=" + n3_1.get_str());
  o.require(display != n3_1, "display unexpectedly agrees");

  std::size_t concrete = 0;
  for (const auto& e : sweep()) {
    try {
      require_camina3(e.g);
    } catch (const Error& err) {
      if (err.code() == Errc::predicate_failed) continue;
      throw;
    }
    ++concrete;
    for (std::size_t n : {2, 3}) {
      const ClassFunction closed = closed_zeta(ClosedFamily::camina3, e.g, e.t, n);
      o.require(closed == zeta_wn_char(e.t, n), e.spec + ": closed != char");
      o.require(closed == zeta_brute(e.g, wn(n), e.t.classes_ptr(), {}),
                e.spec + ": closed != brute");
    }
  }
  if (o.ok) {
    o.detail = "(128,8,2) masses 16384, 2097152; " + std::to_string(concrete) +
               " sweep groups pass the class-3 predicate";
  }
  return o;
}

Outcome table_exactness() {
  Outcome o;
  for (const auto& e : sweep()) {
    verify_orthogonality(e.t);
    const std::size_t k = e.t.count();
    const auto& cl = e.t.classes();
    mpz_class squares = 0;
    for (std::size_t chi = 0; chi < k; ++chi) {
      squares += e.t.degree(chi) * e.t.degree(chi);
      for (std::size_t psi = 0; psi < k; ++psi) {
        o.require(inner_product(e.t, chi, psi) == (chi == psi ? 1 : 0), e.spec + ": rows");
      }
    }
    o.require(squares == e.g.order(), e.spec + ": sum of squared degrees");
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        Cyclotomic s(e.t.exponent());
        for (std::size_t chi = 0; chi < k; ++chi) {
          s.add_product(e.t.value(chi, a), e.t.value(chi, b).conj());
        }
        const mpz_class want = a == b ? mpz_class(e.g.order() / cl.sizes[a]) : mpz_class(0);
        o.require(s == Cyclotomic::integer(e.t.exponent(), want), e.spec + ": columns");
      }
    }
  }
  if (o.ok) o.detail = std::to_string(sweep().size()) + " tables";
  return o;
}

Outcome determinism() {
  Outcome o;
  const std::string one = sweep_csv(1);
  const std::string eight = sweep_csv(8);
  o.require(one == eight, "CSV differs between 1 and 8 workers");
  if (o.ok) o.detail = std::to_string(one.size()) + " bytes identical";
  return o;
}

}  // namespace

int main() {
  std::vector<std::string> flagged;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"frobenius-sweep", frobenius_sweep},
      {"recursion-sweep", recursion_sweep},
      {"gcp-closed-form", gcp_closed_form},
      {"unique-nonlinear", [&] { return unique_nonlinear(flagged); }},
      {"first-moment", first_moment},
      {"character-property", character_property},
      {"stabilization", stabilization},
      {"mixed-domain", mixed_domain},
      {"isoclinism-scaling", isoclinism_scaling},
      {"camina-class3", [&] { return camina_class3(flagged); }},
      {"table-exactness", table_exactness},
      {"determinism", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.ok) ++failures;
    std::cout << (o.ok ? "PASS " : "FAIL ") << (i + 1) << ' ' << criteria[i].first << ": "
              << o.detail << std::endl;
  }
  for (const auto& f : flagged) std::cout << f << '\n';
  std::cout << (criteria.size() - failures) << '/' << criteria.size() << " criteria pass\n";
  return failures == 0 ? 0 : 1;
}
