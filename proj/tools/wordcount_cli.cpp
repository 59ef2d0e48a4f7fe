// wordcount: count solutions of commutator word equations in finite groups.

#include <chrono>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "wordcount/builtin.hpp"
#include "wordcount/chartab.hpp"
#include "wordcount/counting.hpp"
#include "wordcount/error.hpp"
#include "wordcount/formulas.hpp"
#include "wordcount/io.hpp"
#include "wordcount/isoclinism.hpp"
#include "wordcount/verify.hpp"

using namespace wordcount;

namespace {

struct Config {
  std::string group;
  std::string other;
  std::string word;
  std::vector<std::string> domains;
  std::size_t n = 2;
  std::string method = "all";
  std::size_t workers = 1;
  std::uint64_t budget = kDefaultBudget;
  std::string format = "table";
  std::string out;
  std::string suite = "all";
  std::vector<std::string> extra;
  std::string cache;
  bool no_cache = false;
  std::string export_path;
  std::size_t repeat = 1;
  std::string family;
  std::vector<std::string> invariants;
};

CountOptions count_options(const Config& c) { return {c.workers, c.budget}; }

// Prints rows as aligned columns (table) or comma-separated (csv).
std::string render(const std::vector<std::vector<std::string>>& rows, const std::string& format) {
  std::ostringstream out;
  if (format == "csv") {
    for (const auto& r : rows) {
      for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << csv_field(r[i]);
      out << '\n';
    }
    return out.str();
  }
  std::vector<std::size_t> width;
  for (const auto& r : rows) {
    if (width.size() < r.size()) width.resize(r.size(), 0);
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
  }
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      std::string cell = r[i];
      if (i + 1 < r.size()) cell += std::string(width[i] - r[i].size() + 2, ' ');
      line += cell;
    }
    out << line << '\n';
  }
  return out.str();
}

void emit(const Config& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
  } else {
    write_file(c.out, text);
  }
}

std::string join_sizes(const std::vector<Subgroup>& s) {
  std::string out;
  for (const auto& x : s) out += (out.empty() ? "" : " ") + std::to_string(x.size());
  return out.empty() ? "-" : out;
}

CharacterTable table_for(const Config& c, const GroupTable& g) {
  if (c.no_cache) return character_table(g);
  return cached_character_table(g, c.cache.empty() ? default_cache_dir() : std::filesystem::path(c.cache));
}

int cmd_info(const Config& c) {
  const GroupTable g = load_group(c.group);
  if (!c.export_path.empty()) export_group(g, c.export_path);
  const auto classes = conjugacy_classes(g);
  const CharacterTable t = table_for(c, g);
  const GroupClassReport r = classify(g, t);
  std::ostringstream out;
  out << "order " << g.order() << '\n';
  out << "exponent " << g.exponent() << '\n';
  out << "abelian " << (r.is_abelian ? "yes" : "no") << '\n';
  out << "class " << (r.nilpotency_class ? std::to_string(*r.nilpotency_class) : "none") << '\n';
  out << "upper central series " << join_sizes(upper_central_series(g)) << '\n';
  out << "lower central series " << join_sizes(lower_central_series(g)) << '\n';
  out << "center " << center(g).size() << '\n';
  out << "derived " << commutator_subgroup(g).size() << '\n';
  out << "classes " << classes->count() << '\n';
  out << "class sizes";
  for (auto s : classes->sizes) out << ' ' << s;
  out << '\n';
  out << "cd";
  for (auto d : *r.cd) out << ' ' << d;
  out << '\n';
  out << "camina pair targets " << join_sizes(r.camina_pair_targets) << '\n';
  out << "camina group " << (r.is_camina_group ? "yes" : "no") << '\n';
  out << "gcp targets " << join_sizes(*r.gcp_targets) << '\n';
  out << "vz " << (r.is_vz ? "yes" : "no") << '\n';
  out << "unique nonlinear " << (r.unique_nonlinear ? "yes" : "no") << '\n';
  std::cout << out.str();
  return 0;
}

int cmd_chartab(const Config& c) {
  const GroupTable g = load_group(c.group);
  const CharacterTable t = table_for(c, g);
  const ConjugacyData& cl = t.classes();
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> head{"chi", "degree"};
  if (c.format == "csv") head[0] = "chi[e=" + std::to_string(t.exponent()) + "]";
  for (std::size_t j = 0; j < cl.count(); ++j) head.push_back(g.label(cl.reps[j]));
  rows.push_back(head);
  std::vector<std::string> sizes{"", "size"};
  for (auto s : cl.sizes) sizes.push_back(std::to_string(s));
  rows.push_back(sizes);
  for (std::size_t chi = 0; chi < t.count(); ++chi) {
    std::vector<std::string> r{"X" + std::to_string(chi + 1), std::to_string(t.degree(chi))};
    for (std::size_t j = 0; j < cl.count(); ++j) r.push_back(t.value(chi, j).to_string());
    rows.push_back(std::move(r));
  }
  std::string text = render(rows, c.format);
  if (c.format != "csv") text = "e=" + std::to_string(t.exponent()) + " (z = exp(2 pi i / e))\n" + text;
  emit(c, text);
  return 0;
}

DomainSpec parse_domains(const GroupTable& g, const Word& w, const std::vector<std::string>& specs) {
  DomainSpec d = DomainSpec::whole(w.arity());
  for (const std::string& s : specs) {
    const auto eq = s.find('=');
    if (eq == std::string::npos || eq < 2 || s[0] != 'x') {
      throw CLI::ValidationError("--domain", "expected VAR=SUBGROUP, got '" + s + "'");
    }
    std::size_t v = 0;
    try {
      v = std::stoul(s.substr(1, eq - 1));
    } catch (const std::exception&) {
      throw CLI::ValidationError("--domain", "bad variable in '" + s + "'");
    }
    if (v < 1 || v > w.arity()) {
      throw CLI::ValidationError("--domain", "variable x" + std::to_string(v) + " not in the word");
    }
    d.domains[v - 1] = parse_subgroup(g, s.substr(eq + 1));
  }
  return d;
}

std::vector<std::vector<std::string>> csv_rows(const std::string& csv) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(csv);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> r;
    std::string cell;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
      const char ch = line[i];
      if (quoted) {
        if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
          cell += '"';
          ++i;
        } else if (ch == '"') {
          quoted = false;
        } else {
          cell += ch;
        }
      } else if (ch == '"') {
        quoted = true;
      } else if (ch == ',') {
        r.push_back(cell);
        cell.clear();
      } else {
        cell += ch;
      }
    }
    r.push_back(cell);
    rows.push_back(std::move(r));
  }
  return rows;
}

int cmd_count(const Config& c) {
  const GroupTable g = load_group(c.group);
  const Word w = parse_word(c.word);
  const DomainSpec d = parse_domains(g, w, c.domains);
  std::string csv;
  if (d.all_whole()) {
    csv = zeta_csv(g, zeta_brute(g, w, conjugacy_classes(g), count_options(c)), w.arity());
  } else {
    const auto counts = count_fibers(g, w, d, count_options(c));
    csv = fiber_csv(g, counts, enumeration_size(g, w, d));
  }
  emit(c, c.format == "csv" ? csv : render(csv_rows(csv), "table"));
  return 0;
}

struct ClosedChoice {
  std::string name;
  ClassFunction zeta;
};

std::optional<ClosedChoice> closed_for(const GroupTable& g, const CharacterTable& t,
                                       std::size_t n) {
  auto attempt = [&](const std::function<ClosedChoice()>& f) -> std::optional<ClosedChoice> {
    try {
      return f();
    } catch (const Error& e) {
      if (e.code() == Errc::predicate_failed || e.code() == Errc::unsupported_parameter) {
        return std::nullopt;
      }
      throw;
    }
  };
  if (auto r = attempt([&] {
        return ClosedChoice{"unique-nonlinear", unique_nonlinear_recursion(g, t, n).zeta};
      })) {
    return r;
  }
  for (ClosedFamily f :
       {ClosedFamily::gcp_center, ClosedFamily::camina3, ClosedFamily::camina_gcp_tower}) {
    if (auto r = attempt([&] { return ClosedChoice{family_name(f), closed_zeta(f, g, t, n)}; })) {
      return r;
    }
  }
  return std::nullopt;
}

// Closed form from invariants alone: |G|,|G'|,|Z|[,|Z_2|].
int cmd_zeta_invariants(const Config& c) {
  if (c.method != "closed" && c.method != "all") {
    throw Error(Errc::unsupported_parameter, "--invariants only works with --method closed");
  }
  if (c.invariants.size() < 3 || c.invariants.size() > 4) {
    throw CLI::ValidationError("--invariants", "expected ORDER,DERIVED,CENTER[,CENTER2]");
  }
  CaminaInvariants inv;
  mpz_class* slot[] = {&inv.order, &inv.derived, &inv.center, &inv.center2};
  for (std::size_t i = 0; i < c.invariants.size(); ++i) {
    if (slot[i]->set_str(c.invariants[i], 10) != 0 || *slot[i] <= 0) {
      throw CLI::ValidationError("--invariants", "bad value '" + c.invariants[i] + "'");
    }
  }
  std::vector<std::pair<Region, mpz_class>> regions;
  std::function<mpz_class(Region)> eval;
  if (c.family == "gcp-center") {
    regions = {{Region::identity, 1}, {Region::derived_nontrivial, inv.derived - 1}};
    eval = [&](Region r) { return closed_gcp_center(inv, c.n, r); };
  } else if (c.family == "camina-class3" || c.family == "camina-gcp-tower") {
    regions = {{Region::identity, 1},
               {Region::center_nontrivial, inv.center - 1},
               {Region::derived_off_center, inv.derived - inv.center}};
    if (c.family == "camina-class3") {
      eval = [&](Region r) { return closed_camina3(inv, c.n, r); };
    } else {
      eval = [&](Region r) { return closed_camina_gcp_tower(inv, c.n, r); };
    }
  } else {
    throw CLI::ValidationError("--family", "expected gcp-center, camina-class3 or camina-gcp-tower");
  }
  std::vector<std::vector<std::string>> rows{{"region", "elements", "zeta"}};
  mpz_class mass = 0;
  for (const auto& [r, size] : regions) {
    const mpz_class v = eval(r);
    mass += v * size;
    rows.push_back({region_name(r), size.get_str(), v.get_str()});
  }
  rows.push_back({"outside G'", mpz_class(inv.order - inv.derived).get_str(), "0"});
  std::string text = render(rows, c.format);
  if (c.format != "csv") {
    mpz_class full;
    mpz_pow_ui(full.get_mpz_t(), inv.order.get_mpz_t(), c.n);
    text += "total mass " + mass.get_str() + " = |G|^" + std::to_string(c.n) + " = " +
            full.get_str() + "\n";
    if (c.family == "camina-class3" && c.n == 3) {
      text += "FLAGGED identity display " + camina3_identity_display(inv).get_str() +
              " vs class-function form " + eval(Region::identity).get_str() + "\n";
    }
    if (c.family == "camina-gcp-tower" && c.n == 2) {
      text += "FLAGGED identity display " + tower_w2_identity_display(inv).get_str() +
              " vs recomputed " + eval(Region::identity).get_str() + "\n";
    }
    if (c.family == "camina-gcp-tower" && c.n == 3) {
      text += "FLAGGED class-form display " +
              tower_w3_identity_from_class_form_display(inv).get_str() + " vs recomputed " +
              eval(Region::identity).get_str() + "\n";
    }
  }
  emit(c, text);
  return 0;
}

int cmd_zeta(const Config& c) {
  if (!c.invariants.empty()) return cmd_zeta_invariants(c);
  const GroupTable g = load_group(c.group);
  const auto classes = conjugacy_classes(g);
  const bool all = c.method == "all";
  std::vector<std::pair<std::string, std::optional<ClassFunction>>> cols;
  std::vector<std::string> notes;
  std::optional<CharacterTable> t;
  auto table = [&]() -> const CharacterTable& {
    if (!t) t = table_for(c, g);
    return *t;
  };
  if (all || c.method == "brute") {
    try {
      cols.push_back({"brute", zeta_brute(g, wn(c.n), table().classes_ptr(), count_options(c))});
    } catch (const Error& e) {
      if (!all || e.code() != Errc::budget_exceeded) throw;
      cols.push_back({"brute", std::nullopt});
      notes.push_back("brute skipped: " + std::string(e.what()));
    }
  }
  if (all || c.method == "char") cols.push_back({"char", zeta_wn_char(table(), c.n)});
  if (all || c.method == "closed") {
    auto r = closed_for(g, table(), c.n);
    if (!r) {
      if (!all) throw Error(Errc::predicate_failed, "no closed form applies to this group");
      cols.push_back({"closed", std::nullopt});
      notes.push_back("closed: no closed form applies");
    } else {
      notes.push_back("closed form: " + r->name);
      cols.push_back({"closed", std::move(r->zeta)});
    }
  }
  const ConjugacyData& cl = table().classes();
  std::string text;
  if (cols.size() == 1 && cols[0].second && c.format == "csv") {
    text = zeta_csv(g, *cols[0].second, c.n);
  } else {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> head{"rep_label", "class_size"};
    for (const auto& col : cols) head.push_back(col.first);
    rows.push_back(head);
    for (std::size_t j = 0; j < cl.count(); ++j) {
      std::vector<std::string> r{g.label(cl.reps[j]), std::to_string(cl.sizes[j])};
      for (const auto& col : cols) r.push_back(col.second ? (*col.second)[j].get_str() : "-");
      rows.push_back(std::move(r));
    }
    text = render(rows, c.format);
  }
  bool agree = true;
  const ClassFunction* ref = nullptr;
  for (const auto& col : cols) {
    if (!col.second) continue;
    if (ref && !(*ref == *col.second)) agree = false;
    if (!ref) ref = &*col.second;
  }
  if (c.format != "csv") {
    for (const auto& n : notes) text += n + '\n';
    if (cols.size() > 1) text += agree ? "methods agree\n" : "METHODS DISAGREE\n";
  } else {
    for (const auto& n : notes) std::cerr << n << '\n';
  }
  emit(c, text);
  return agree ? 0 : 1;
}

int cmd_verify(const Config& c) {
  VerifyOptions opts;
  opts.count = count_options(c);
  opts.extra_groups = c.extra;
  std::size_t pass = 0, fail = 0, flagged = 0;
  run_suite(c.suite, opts, [&](const CheckLine& line) {
    std::cout << format_line(line) << '\n' << std::flush;
    (line.status == Status::pass ? pass : line.status == Status::fail ? fail : flagged)++;
  });
  std::cout << "summary pass=" << pass << " fail=" << fail << " flagged=" << flagged << '\n';
  return fail == 0 ? 0 : 1;
}

int cmd_isoclinic(const Config& c) {
  const GroupTable g = load_group(c.group);
  const GroupTable h = load_group(c.other);
  const auto w = find_isoclinism(g, h, c.n);
  if (!w) {
    std::cout << "not " << c.n << "-isoclinic\n";
    return 0;
  }
  std::ostringstream out;
  out << c.n << "-isoclinic\n";
  const Quotient qg = quotient(g, upper_central_term(g, c.n));
  const Quotient qh = quotient(h, upper_central_term(h, c.n));
  out << "phi (coset representatives):\n";
  for (Element k = 0; k < w->phi.size(); ++k) {
    out << "  " << g.label(qg.lift[k]) << " -> " << h.label(qh.lift[w->phi[k]]) << '\n';
  }
  out << "psi:\n";
  for (std::size_t i = 0; i < w->gamma_g.size(); ++i) {
    out << "  " << g.label(w->gamma_g[i]) << " -> " << h.label(w->psi[i]) << '\n';
  }
  const ScalingReport r = verify_scaling(
      g, h, *w, c.method == "brute" ? ZetaMethod::brute : ZetaMethod::character, count_options(c));
  out << "scaling factor " << r.factor.get_str() << '\n';
  for (const auto& e : r.entries) {
    out << "  zeta(" << g.label(e.g) << ") = " << e.lhs.get_str() << ", scaled zeta("
        << h.label(e.image) << ") = " << e.rhs.get_str() << '\n';
  }
  out << (r.holds ? "scaling holds\n" : "SCALING FAILS\n");
  std::cout << out.str();
  return r.holds ? 0 : 1;
}

int cmd_bench(const Config& c) {
  using clock = std::chrono::steady_clock;
  const GroupTable g = load_group(c.group);
  auto ms = [](clock::duration d) {
    return std::chrono::duration<double, std::milli>(d).count();
  };
  double brute = 0, table = 0, rec = 0;
  std::optional<ClassFunction> zb, zc;
  for (std::size_t i = 0; i < std::max<std::size_t>(1, c.repeat); ++i) {
    auto t0 = clock::now();
    zb = zeta_brute(g, wn(c.n), count_options(c));
    auto t1 = clock::now();
    const CharacterTable t = character_table(g);
    auto t2 = clock::now();
    zc = zeta_wn_char(t, c.n);
    auto t3 = clock::now();
    brute += ms(t1 - t0);
    table += ms(t2 - t1);
    rec += ms(t3 - t2);
  }
  const double k = static_cast<double>(std::max<std::size_t>(1, c.repeat));
  std::cout << std::fixed << std::setprecision(3);
  std::cout << "group order " << g.order() << " n " << c.n << " workers " << c.workers << '\n';
  std::cout << "brute_ms " << brute / k << '\n';
  std::cout << "chartab_ms " << table / k << '\n';
  std::cout << "recursion_ms " << rec / k << '\n';
  const bool agree = *zb == *zc;
  std::cout << (agree ? "results agree\n" : "RESULTS DISAGREE\n");
  return agree ? 0 : 1;
}

void add_group(CLI::App* sub, Config& c) {
  sub->add_option("--group", c.group, "builtin:NAME(args) or a group file")->required();
}

void add_count(CLI::App* sub, Config& c) {
  sub->add_option("--workers", c.workers, "worker threads")->check(CLI::Range(1, 256));
  sub->add_option("--budget", c.budget, "maximum word evaluations");
}

void add_format(CLI::App* sub, Config& c) {
  sub->add_option("--format", c.format, "table or csv")->check(CLI::IsMember({"table", "csv"}));
  sub->add_option("--out", c.out, "write the output to this file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Count solutions of commutator word equations in finite groups"};
  app.require_subcommand(1);
  Config c;

  auto* info = app.add_subcommand("info", "order, central series and class report");
  add_group(info, c);
  info->add_option("--export", c.export_path, "write the Cayley table to this file");
  info->add_option("--cache", c.cache, "character table cache directory");
  info->add_flag("--no-cache", c.no_cache, "do not read or write the cache");

  auto* chartab = app.add_subcommand("chartab", "print the character table");
  add_group(chartab, c);
  add_format(chartab, c);
  chartab->add_option("--cache", c.cache, "character table cache directory");
  chartab->add_flag("--no-cache", c.no_cache, "do not read or write the cache");

  auto* count = app.add_subcommand("count", "brute-force fiber counts of a word");
  add_group(count, c);
  count->add_option("--word", c.word, "word, e.g. \"[x1,x2]\"")->required();
  count->add_option("--domain", c.domains, "VAR=SUBGROUP, e.g. x1=derived");
  add_count(count, c);
  add_format(count, c);

  auto* zeta = app.add_subcommand("zeta", "zeta of w_n by several methods");
  zeta->add_option("--group", c.group, "builtin:NAME(args) or a group file");
  zeta->add_option("--family", c.family, "closed-form family for --invariants");
  zeta->add_option("--invariants", c.invariants, "ORDER,DERIVED,CENTER[,CENTER2]")
      ->delimiter(',')
      ->needs("--family")
      ->excludes("--group");
  zeta->add_option("--n", c.n, "commutator length")->check(CLI::Range(2, 8));
  zeta->add_option("--method", c.method, "brute, char, closed or all")
      ->check(CLI::IsMember({"brute", "char", "closed", "all"}));
  add_count(zeta, c);
  add_format(zeta, c);
  zeta->add_option("--cache", c.cache, "character table cache directory");
  zeta->add_flag("--no-cache", c.no_cache, "do not read or write the cache");

  auto* verify = app.add_subcommand("verify", "run verification sweeps");
  verify->add_option("--suite", c.suite, "frobenius, recursion, closed-forms, isoclinism or all")
      ->check(CLI::IsMember({"frobenius", "recursion", "closed-forms", "isoclinism", "all"}));
  verify->add_option("--group", c.extra, "extra group checked against every closed form");
  add_count(verify, c);

  auto* iso = app.add_subcommand("isoclinic", "search for an n-isoclinism and check scaling");
  add_group(iso, c);
  iso->add_option("--other", c.other, "second group")->required();
  iso->add_option("--n", c.n, "isoclinism level")->check(CLI::Range(1, 7));
  iso->add_option("--method", c.method, "char or brute")->check(CLI::IsMember({"char", "brute", "all"}));
  add_count(iso, c);

  auto* bench = app.add_subcommand("bench", "time brute force against the character path");
  add_group(bench, c);
  bench->add_option("--n", c.n, "commutator length")->check(CLI::Range(2, 8));
  bench->add_option("--repeat", c.repeat, "repetitions");
  add_count(bench, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  if (iso->parsed() && c.n == 2 && iso->count("--n") == 0) c.n = 1;
  if (iso->parsed() && iso->count("--method") == 0) c.method = "char";
  if (zeta->parsed() && c.group.empty() && c.invariants.empty()) {
    std::cerr << "zeta: --group or --invariants is required\n";
    return 2;
  }

  try {
    if (info->parsed()) return cmd_info(c);
    if (chartab->parsed()) return cmd_chartab(c);
    if (count->parsed()) return cmd_count(c);
    if (zeta->parsed()) return cmd_zeta(c);
    if (verify->parsed()) return cmd_verify(c);
    if (iso->parsed()) return cmd_isoclinic(c);
    if (bench->parsed()) return cmd_bench(c);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    const bool broken = e.code() == Errc::internal_inconsistency || e.code() == Errc::assertion_failed;
    return broken ? 1 : 2;
  }
  return 2;
}
