#include "wordcount/verify.hpp"

#include <map>
#include <memory>

#include "wordcount/builtin.hpp"
#include "wordcount/chartab.hpp"
#include "wordcount/error.hpp"
#include "wordcount/formulas.hpp"
#include "wordcount/io.hpp"
#include "wordcount/isoclinism.hpp"

namespace wordcount {

namespace {

using Sink = std::function<void(const CheckLine&)>;

struct Entry {
  std::string name;
  GroupTable group;
  std::shared_ptr<const CharacterTable> table;
};

class Catalog {
 public:
  const Entry& get(const std::string& spec) {
    auto it = cache_.find(spec);
    if (it == cache_.end()) {
      GroupTable g = load_group(spec.rfind("builtin:", 0) == 0 || spec.find('(') == std::string::npos
                                    ? spec
                                    : "builtin:" + spec);
      auto t = std::make_shared<const CharacterTable>(character_table(g));
      it = cache_.emplace(spec, Entry{spec, std::move(g), std::move(t)}).first;
    }
    return it->second;
  }

 private:
  std::map<std::string, Entry> cache_;
};

std::string values(const ClassFunction& f) {
  std::string out = "(";
  for (std::size_t j = 0; j < f.size(); ++j) out += (j ? "," : "") + f[j].get_str();
  return out + ")";
}

mpz_class pow_u(std::size_t a, std::size_t k) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(k));
  return r;
}

bool within_budget(const GroupTable& g, std::size_t n, const CountOptions& opts) {
  return pow_u(g.order(), n) <= mpz_class(static_cast<unsigned long>(opts.budget));
}

class Runner {
 public:
  Runner(const VerifyOptions& opts, const Sink& sink) : opts_(opts), sink_(sink) {}

  void emit(Status s, const std::string& id, const std::string& group, const std::string& details) {
    sink_({s, id, group, details});
  }
  void check(bool ok, const std::string& id, const std::string& group, const std::string& details) {
    emit(ok ? Status::pass : Status::fail, id, group, details);
  }
  // Runs f; an exception becomes a FAIL line.
  void guarded(const std::string& id, const std::string& group, const std::function<void()>& f) {
    try {
      f();
    } catch (const std::exception& e) {
      emit(Status::fail, id, group, std::string("error: ") + e.what());
    }
  }

  void frobenius();
  void recursion();
  void closed_forms();
  void isoclinism();

 private:
  void closed_family(ClosedFamily f, const Entry& e, std::size_t n);
  void extra_closed(const Entry& e);

  const VerifyOptions& opts_;
  const Sink& sink_;
  Catalog catalog_;
};

void Runner::frobenius() {
  for (const std::string& spec : sweep_catalog()) {
    const Entry& e = catalog_.get(spec);
    const GroupTable& g = e.group;
    const CharacterTable& t = *e.table;
    guarded("chartab.exact", spec, [&] {
      verify_orthogonality(t);
      std::size_t sum = 0;
      for (std::size_t d : t.degrees()) sum += d * d;
      check(sum == g.order(), "chartab.exact", spec,
            "k=" + std::to_string(t.count()) + " sum_deg2=" + std::to_string(sum));
    });
    guarded("frobenius.brute", spec, [&] {
      const ClassFunction f = zeta_w2_frobenius(t);
      const ClassFunction b = zeta_brute(g, wn(2), opts_.count);
      check(f == b, "frobenius.brute", spec, "char=" + values(f) + " brute=" + values(b));
    });
    guarded("moment.first", spec, [&] {
      bool ok = true;
      std::string d;
      for (std::size_t n = 3; n <= 5; ++n) {
        const ClassFunction z = zeta_brute(g, wn(n - 1), opts_.count);
        const mpq_class m = z.total() / mpz_class(static_cast<unsigned long>(g.order()));
        ok = ok && m == pow_u(g.order(), n - 2);
        d += (d.empty() ? "" : " ") + std::string("n=") + std::to_string(n) + ":" + m.get_str();
      }
      check(ok, "moment.first", spec, d);
    });
    guarded("character.property", spec, [&] {
      bool ok = true;
      for (std::size_t n : {2, 3}) {
        const ClassFunction z = zeta_brute(g, wn(n), opts_.count);
        for (std::size_t chi = 0; chi < t.count(); ++chi) {
          const mpq_class c = inner_product(t, z, chi);
          ok = ok && c.get_den() == 1 && c >= 0;
        }
      }
      check(ok, "character.property", spec, "n=2,3 all coefficients nonnegative integers");
    });
    guarded("determinism.workers", spec, [&] {
      CountOptions one = opts_.count, many = opts_.count;
      one.workers = 1;
      many.workers = 8;
      const std::string a = zeta_csv(g, zeta_brute(g, wn(2), one), 2);
      const std::string b = zeta_csv(g, zeta_brute(g, wn(2), many), 2);
      check(a == b, "determinism.workers", spec, "1 vs 8 workers, " + std::to_string(a.size()) +
                                                     " CSV bytes");
    });
  }
}

void Runner::recursion() {
  for (const std::string& spec : sweep_catalog()) {
    const Entry& e = catalog_.get(spec);
    const GroupTable& g = e.group;
    const CharacterTable& t = *e.table;
    for (std::size_t n : {3, 4}) {
      if (g.order() > (n == 3 ? 16u : 8u)) continue;
      const std::string id = "recursion.brute.n" + std::to_string(n);
      guarded(id, spec, [&] {
        const ClassFunction c = zeta_wn_char(t, n);
        const ClassFunction b = zeta_brute(g, wn(n), opts_.count);
        check(c == b, id, spec, "char=" + values(c) + " brute=" + values(b));
      });
    }
    const auto cls = nilpotency_class(g);
    if (!cls || *cls + 3 > kMaxRecursionN) continue;
    guarded("recursion.stabilization", spec, [&] {
      bool ok = true;
      for (std::size_t m = *cls + 1; m <= *cls + 2; ++m) {
        const auto c = c_wn_all(t, m + 1);
        for (std::size_t chi = 0; chi < t.count(); ++chi) {
          const mpz_class d = static_cast<unsigned long>(t.degree(chi));
          ok = ok && c[chi] == d * d * pow_u(g.order(), m - 1);
        }
      }
      check(ok, "recursion.stabilization", spec,
            "class=" + std::to_string(*cls) + " m=" + std::to_string(*cls + 1) + "," +
                std::to_string(*cls + 2));
    });
  }
}

void Runner::closed_family(ClosedFamily f, const Entry& e, std::size_t n) {
  const std::string id = std::string(family_name(f)) + ".n" + std::to_string(n);
  guarded(id, e.name, [&] {
    const ClassFunction closed = closed_zeta(f, e.group, *e.table, n);
    const ClassFunction chr = zeta_wn_char(*e.table, n);
    std::string d = "closed=" + values(closed) + " char=" + values(chr);
    bool ok = closed == chr;
    if (within_budget(e.group, n, opts_.count)) {
      const ClassFunction b = zeta_brute(e.group, wn(n), opts_.count);
      ok = ok && b == chr;
      d += " brute=" + values(b);
    } else {
      d += " brute=skipped";
    }
    check(ok, id, e.name, d);
  });
}

void Runner::extra_closed(const Entry& e) {
  auto applies = [&](ClosedFamily f) {
    try {
      switch (f) {
        case ClosedFamily::gcp_center: require_gcp_center(e.group, *e.table); break;
        case ClosedFamily::camina3: require_camina3(e.group); break;
        case ClosedFamily::camina_gcp_tower: require_camina_gcp_tower(e.group); break;
      }
      return true;
    } catch (const Error& err) {
      if (err.code() != Errc::predicate_failed) throw;
      return false;
    }
  };
  bool any = false;
  for (ClosedFamily f :
       {ClosedFamily::gcp_center, ClosedFamily::camina3, ClosedFamily::camina_gcp_tower}) {
    if (!applies(f)) continue;
    any = true;
    for (std::size_t n : {2, 3}) closed_family(f, e, n);
  }
  if (!any) emit(Status::pass, "closed.predicates", e.name, "no closed-form predicate holds");
}

void Runner::closed_forms() {
  // Generalized Camina pairs with N = Z.
  for (const char* spec : {"quaternion(8)", "dihedral(8)"}) {
    const Entry& e = catalog_.get(spec);
    for (std::size_t n : {2, 3}) closed_family(ClosedFamily::gcp_center, e, n);
  }

  // Unique nonlinear character.
  for (const char* spec : {"symmetric(3)", "alternating(4)", "agl1(5)", "agl1(7)", "agl1(8)"}) {
    const Entry& e = catalog_.get(spec);
    guarded("unique.recursion", spec, [&] {
      const UniqueNonlinear u = unique_nonlinear_recursion(e.group, *e.table, 3);
      const ClassFunction chr = zeta_wn_char(*e.table, 3);
      const ClassFunction b = zeta_brute(e.group, wn(3), opts_.count);
      CaminaInvariants inv = CaminaInvariants::of(e.group);
      inv.pm = u.pm;
      const mpz_class ident = appl_identity_value(inv);
      const bool minus_one = unique_nonlinear_minus_one_on_derived(e.group, *e.table);
      check(u.zeta == chr && chr == b && ident == chr[0] && minus_one, "unique.recursion", spec,
            "p^m=" + u.pm.get_str() + " C3=" + u.c[3].get_str() + " zeta=" + values(u.zeta) +
                " identity_formula=" + ident.get_str() +
                (minus_one ? " phi=-1 on G'" : " phi!=-1 on G'"));
      if (u.pm > 2) {
        const mpq_class shown = appl_nontrivial_display(inv);
        const mpz_class actual = unique_nonlinear_nontrivial(inv, u.c[3], 3);
        emit(shown == actual ? Status::pass : Status::flagged, "unique.display-nontrivial", spec,
             "display=" + shown.get_str() + " recomputed=" + actual.get_str());
      }
    });
  }

  // cd(G) = {1, m} bound.
  for (const auto& [spec, sub] : {std::pair<const char*, const char*>{"symmetric(3)", "derived"},
                                  {"alternating(4)", "derived"},
                                  {"agl1(5)", "derived"}}) {
    const Entry& e = catalog_.get(spec);
    for (std::size_t n : {3, 4}) {
      const std::string id = "cd2.bound.n" + std::to_string(n);
      guarded(id, spec, [&] {
        const auto r = cd2_bound_check(e.group, *e.table, parse_subgroup(e.group, sub), n);
        std::string d;
        for (const auto& x : r) d += (d.empty() ? "" : " ") + x.c.get_str() + "<=" + x.bound.get_str();
        check(!r.empty(), id, spec, d);
      });
    }
  }

  // Camina pairs (G, Z).
  for (const char* spec : {"quaternion(8)", "dihedral(8)", "heisenberg(3)", "extraspecial_minus(3)"}) {
    const Entry& e = catalog_.get(spec);
    guarded("camina-pair.structure", spec, [&] {
      const CaminaPairStructure s = verify_camina_pair_structure(e.group, *e.table);
      check(true, "camina-pair.structure", spec,
            "|Irr(G|Z)|=" + std::to_string(s.given) + " degree=" + std::to_string(s.degree));
    });
  }
  {
    const Entry& e = catalog_.get("symmetric(3)");
    try {
      verify_camina_pair_structure(e.group, *e.table);
      emit(Status::fail, "camina-pair.structure", e.name, "accepted a trivial center");
    } catch (const Error& err) {
      check(err.code() == Errc::predicate_failed, "camina-pair.structure", e.name,
            "rejected: " + std::string(err.what()));
    }
  }

  // Camina class 3, from invariants.
  guarded("camina3.mass", "invariants(128,8,2)", [&] {
    const CaminaInvariants inv{128, 8, 2, 0, 0};
    for (std::size_t n : {2, 3}) {
      const mpz_class a = closed_camina3(inv, n, Region::identity);
      const mpz_class b = closed_camina3(inv, n, Region::center_nontrivial);
      const mpz_class c = closed_camina3(inv, n, Region::derived_off_center);
      const mpz_class total = a + b + 6 * c;
      check(total == pow_u(128, n), "camina3.mass.n" + std::to_string(n), "invariants(128,8,2)",
            "identity=" + a.get_str() + " Z=" + b.get_str() + " G'-Z=" + c.get_str() +
                " total=" + total.get_str());
    }
    const mpq_class shown = camina3_identity_display(inv);
    const mpz_class actual = closed_camina3(inv, 3, Region::identity);
    emit(shown == actual ? Status::pass : Status::flagged, "camina3.identity-display",
         "invariants(128,8,2)",
         "display=" + shown.get_str() + " class-function=" + actual.get_str());
  });

  // Camina pair (G, Z) over a generalized Camina pair quotient.
  for (const char* spec : {"quaternion(8)", "dihedral(8)", "heisenberg(3)", "extraspecial_minus(3)"}) {
    const Entry& e = catalog_.get(spec);
    for (std::size_t n : {2, 3}) closed_family(ClosedFamily::camina_gcp_tower, e, n);
  }
  {
    const Entry& e = catalog_.get("quaternion(8)");
    guarded("camina-gcp-tower.displays", e.name, [&] {
      const CaminaInvariants inv = CaminaInvariants::of(e.group);
      const mpq_class w2 = tower_w2_identity_display(inv);
      const mpz_class w2_ok = closed_camina_gcp_tower(inv, 2, Region::identity);
      emit(w2 == w2_ok ? Status::pass : Status::flagged, "camina-gcp-tower.w2-identity-display",
           e.name, "display=" + w2.get_str() + " recomputed=" + w2_ok.get_str());
      const mpq_class w3 = tower_w3_identity_from_class_form_display(inv);
      const mpz_class w3_ok = closed_camina_gcp_tower(inv, 3, Region::identity);
      emit(w3 == w3_ok ? Status::pass : Status::flagged, "camina-gcp-tower.class-form-display",
           e.name, "display=" + w3.get_str() + " recomputed=" + w3_ok.get_str());
    });
  }

  // Mixed domains.
  for (const auto& [spec, w1, w2] :
       {std::tuple<const char*, const char*, const char*>{"symmetric(3)", "x1", "x1"},
        {"symmetric(4)", "x1", "x1"},
        {"symmetric(4)", "[x1,x2]", "x1^5"},
        {"alternating(4)", "x1^2", "x1"}}) {
    const Entry& e = catalog_.get(spec);
    const std::string name = spec;
    const std::string which = std::string("H=derived w1=") + w1 + " w2=" + w2 + " ";
    guarded("mixed.domain", name, [&] {
      const Subgroup h = commutator_subgroup(e.group);
      const MixedResult r =
          zeta_mixed_domain(e.group, *e.table, h, parse_word(w1), parse_word(w2), opts_.count);
      const auto b = count_fibers(e.group, r.word, r.domains, opts_.count);
      bool ok = true;
      std::string counts;
      for (Element x = 0; x < e.group.order(); ++x) {
        ok = ok && r.counts[x] == static_cast<unsigned long>(b[x]);
        if (x < 12) counts += (x ? "," : "") + r.counts[x].get_str();
      }
      check(ok, "mixed.domain", name, which + "per-element=(" + counts + (e.group.order() > 12 ? ",...)" : ")"));
    });
  }

  for (const std::string& src : opts_.extra_groups) {
    guarded("closed.import", src, [&] { extra_closed(catalog_.get(src)); });
  }
}

void Runner::isoclinism() {
  struct Pair {
    const char* g;
    const char* h;
    std::size_t n;
  };
  for (const Pair& p : {Pair{"dihedral(8)", "quaternion(8)", 1},
                        Pair{"direct_product(quaternion(8),cyclic(2))", "quaternion(8)", 1},
                        Pair{"symmetric(3)", "symmetric(3)", 1},
                        Pair{"direct_product(symmetric(3),cyclic(2))", "symmetric(3)", 1},
                        Pair{"direct_product(dihedral(8),cyclic(3))", "quaternion(8)", 1},
                        Pair{"dihedral(16)", "quaternion(16)", 1},
                        Pair{"dihedral(16)", "quaternion(16)", 2},
                        Pair{"heisenberg(3)", "extraspecial_minus(3)", 1}}) {
    const std::string name = std::string(p.g) + "~" + p.h;
    const std::string id = "isoclinism.scaling.n" + std::to_string(p.n);
    guarded(id, name, [&] {
      const Entry& a = catalog_.get(p.g);
      const Entry& b = catalog_.get(p.h);
      const auto w = find_isoclinism(a.group, b.group, p.n);
      if (!w) {
        emit(Status::fail, id, name, "no witness found");
        return;
      }
      const ScalingReport rc = verify_scaling(a.group, b.group, *w, ZetaMethod::character);
      const ScalingReport rb = verify_scaling(a.group, b.group, *w, ZetaMethod::brute, opts_.count);
      std::string d = "factor=" + rc.factor.get_str();
      for (const auto& x : rc.entries) {
        if (x.g != a.group.identity()) {
          d += " " + a.group.label(x.g) + ":" + x.lhs.get_str() + "=" + x.rhs.get_str();
        }
      }
      check(rc.holds && rb.holds, id, name, d);
    });
  }
  guarded("isoclinism.none", "quaternion(8)~cyclic(8)", [&] {
    const auto w = find_isoclinism(catalog_.get("quaternion(8)").group,
                                   catalog_.get("cyclic(8)").group, 1);
    check(!w, "isoclinism.none", "quaternion(8)~cyclic(8)", w ? "unexpected witness" : "no witness");
  });
}

}  // namespace

std::string format_line(const CheckLine& c) {
  const char* s = c.status == Status::pass ? "PASS" : c.status == Status::fail ? "FAIL" : "FLAGGED";
  return std::string(s) + ' ' + c.id + ' ' + c.group + ' ' + c.details;
}

std::vector<std::string> sweep_catalog() {
  std::vector<std::string> out;
  for (int n = 1; n <= 24; ++n) out.push_back("cyclic(" + std::to_string(n) + ")");
  for (int n = 4; n <= 24; n += 2) out.push_back("dihedral(" + std::to_string(n) + ")");
  for (const char* s : {"quaternion(8)", "symmetric(3)", "symmetric(4)", "alternating(4)",
                        "agl1(3)", "agl1(4)", "agl1(5)", "extraspecial_plus(2)",
                        "extraspecial_minus(2)", "extraspecial_plus(3)", "extraspecial_minus(3)",
                        "heisenberg(3)"}) {
    out.push_back(s);
  }
  return out;
}

void run_suite(std::string_view suite, const VerifyOptions& opts, const Sink& sink) {
  Runner r(opts, sink);
  if (suite == "frobenius") {
    r.frobenius();
  } else if (suite == "recursion") {
    r.recursion();
  } else if (suite == "closed-forms") {
    r.closed_forms();
  } else if (suite == "isoclinism") {
    r.isoclinism();
  } else if (suite == "all") {
    r.frobenius();
    r.recursion();
    r.closed_forms();
    r.isoclinism();
  } else {
    throw Error(Errc::unsupported_parameter, "unknown suite '" + std::string(suite) + "'");
  }
}

}  // namespace wordcount
