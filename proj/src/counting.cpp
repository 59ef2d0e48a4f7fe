#include "wordcount/counting.hpp"

#include <atomic>
#include <limits>
#include <map>
#include <sstream>
#include <thread>

#include "wordcount/error.hpp"

namespace wordcount {

namespace {

// The word split around its last variable:
//   w = c_0 * x_n^{e_1} * c_1 * ... * x_n^{e_r} * c_r
// where the c_s depend only on x_1..x_{n-1}.
struct OuterLetter {
  std::size_t var;  // 0-based
  const std::vector<Element>* pow;
};

struct Plan {
  std::size_t arity = 0;
  std::vector<std::vector<Element>> domains;        // values per variable
  std::vector<std::vector<OuterLetter>> segments;   // r + 1 runs of outer letters
  std::vector<const std::vector<Element>*> inner;   // power tables for x_n^{e_s}
  std::map<std::pair<std::uint32_t, std::int64_t>, std::vector<Element>> powers;
};

const std::vector<Element>& power_table(Plan& plan, const GroupTable& g, const Letter& l) {
  auto [it, fresh] = plan.powers.try_emplace({l.var, l.exp});
  if (fresh) {
    it->second.resize(g.order());
    for (Element x = 0; x < g.order(); ++x) it->second[x] = g.power(x, l.exp);
  }
  return it->second;
}

Plan make_plan(const GroupTable& g, const Word& w, const DomainSpec& d) {
  Plan plan;
  plan.arity = w.arity();
  for (std::size_t v = 0; v < plan.arity; ++v) {
    if (d.domains[v]) {
      plan.domains.push_back(d.domains[v]->members());
    } else {
      std::vector<Element> all(g.order());
      for (Element x = 0; x < g.order(); ++x) all[x] = x;
      plan.domains.push_back(std::move(all));
    }
  }
  const auto last = static_cast<std::uint32_t>(plan.arity);
  plan.segments.emplace_back();
  for (const Letter& l : w.letters()) {
    const std::vector<Element>* table = &power_table(plan, g, l);
    if (l.var == last) {
      plan.inner.push_back(table);
      plan.segments.emplace_back();
    } else {
      plan.segments.back().push_back({l.var - 1, table});
    }
  }
  return plan;
}

// Counts all assignments whose first variable is the given value.
void count_slice(const GroupTable& g, const Plan& plan, Element first,
                 std::vector<std::uint64_t>& counts) {
  const std::size_t n = plan.arity;
  const std::size_t r = plan.inner.size();
  std::vector<Element> assign(n, 0);
  assign[0] = first;
  if (n == 1) {
    Element acc = g.identity();
    for (std::size_t s = 0; s < r; ++s) acc = g.mul(acc, (*plan.inner[s])[first]);
    ++counts[acc];
    return;
  }
  // Odometer over x_2..x_{n-1}.
  std::vector<std::size_t> idx(n, 0);
  for (std::size_t v = 1; v + 1 < n; ++v) assign[v] = plan.domains[v][0];
  std::vector<Element> c(r + 1);
  const std::vector<Element>& last_dom = plan.domains[n - 1];
  for (;;) {
    for (std::size_t s = 0; s <= r; ++s) {
      Element acc = g.identity();
      for (const OuterLetter& l : plan.segments[s]) acc = g.mul(acc, (*l.pow)[assign[l.var]]);
      c[s] = acc;
    }
    if (r == 2) {
      const auto& p1 = *plan.inner[0];
      const auto& p2 = *plan.inner[1];
      for (Element x : last_dom) {
        ++counts[g.mul(g.mul(g.mul(g.mul(c[0], p1[x]), c[1]), p2[x]), c[2])];
      }
    } else {
      for (Element x : last_dom) {
        Element acc = c[0];
        for (std::size_t s = 0; s < r; ++s) acc = g.mul(g.mul(acc, (*plan.inner[s])[x]), c[s + 1]);
        ++counts[acc];
      }
    }
    std::size_t v = 1;
    while (v + 1 < n) {
      if (++idx[v] < plan.domains[v].size()) {
        assign[v] = plan.domains[v][idx[v]];
        break;
      }
      idx[v] = 0;
      assign[v] = plan.domains[v][0];
      ++v;
    }
    if (v + 1 >= n) break;
  }
}

}  // namespace

bool DomainSpec::all_whole() const {
  for (const auto& d : domains) {
    if (d && !d->is_whole()) return false;
  }
  return true;
}

std::size_t DomainSpec::domain_size(std::size_t var, std::size_t group_order) const {
  return domains[var] ? domains[var]->size() : group_order;
}

std::uint64_t enumeration_size(const GroupTable& g, const Word& w, const DomainSpec& d) {
  if (d.domains.size() != w.arity()) {
    throw Error(Errc::arity_mismatch, "domain spec has " + std::to_string(d.domains.size()) +
                                          " entries for a word of arity " +
                                          std::to_string(w.arity()));
  }
  unsigned __int128 total = 1;
  for (std::size_t v = 0; v < w.arity(); ++v) {
    if (d.domains[v] && d.domains[v]->parent_order() != g.order()) {
      throw Error(Errc::mismatched_group, "domain subgroup belongs to a different group");
    }
    total *= d.domain_size(v, g.order());
    if (total > std::numeric_limits<std::uint64_t>::max()) {
      return std::numeric_limits<std::uint64_t>::max();
    }
  }
  return static_cast<std::uint64_t>(total);
}

std::vector<std::uint64_t> count_fibers(const GroupTable& g, const Word& w, const DomainSpec& d,
                                        const CountOptions& opts) {
  const std::uint64_t size = enumeration_size(g, w, d);
  if (size > opts.budget) {
    throw Error(Errc::budget_exceeded, std::to_string(size) + " evaluations exceed the budget of " +
                                           std::to_string(opts.budget));
  }
  const Plan plan = make_plan(g, w, d);
  const std::vector<Element>& firsts = plan.domains[0];
  const std::size_t workers = std::max<std::size_t>(1, std::min(opts.workers, firsts.size()));

  std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(g.order(), 0));
  std::atomic<std::size_t> next{0};
  auto run = [&](std::size_t id) {
    for (std::size_t i = next++; i < firsts.size(); i = next++) {
      count_slice(g, plan, firsts[i], partial[id]);
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t id = 0; id < workers; ++id) pool.emplace_back(run, id);
    for (auto& t : pool) t.join();
  }
  std::vector<std::uint64_t> counts(g.order(), 0);
  for (const auto& p : partial) {
    for (std::size_t x = 0; x < counts.size(); ++x) counts[x] += p[x];
  }
  std::uint64_t sum = 0;
  for (auto c : counts) sum += c;
  if (sum != size) {
    throw Error(Errc::internal_inconsistency, "fiber counts sum to " + std::to_string(sum) +
                                                  ", expected " + std::to_string(size));
  }
  return counts;
}

ClassFunction zeta_brute(const GroupTable& g, const Word& w, const CountOptions& opts) {
  return zeta_brute(g, w, conjugacy_classes(g), opts);
}

ClassFunction zeta_brute(const GroupTable& g, const Word& w,
                         std::shared_ptr<const ConjugacyData> classes, const CountOptions& opts) {
  const auto counts = count_fibers(g, w, DomainSpec::whole(w.arity()), opts);
  std::vector<mpq_class> per_element(counts.size());
  for (std::size_t x = 0; x < counts.size(); ++x) {
    per_element[x] = mpz_class(static_cast<unsigned long>(counts[x]));
  }
  return ClassFunction::from_elements(std::move(classes), per_element);
}

bool is_measure_preserving(const GroupTable& g, const Word& w, const CountOptions& opts) {
  const auto counts = count_fibers(g, w, DomainSpec::whole(w.arity()), opts);
  for (auto c : counts) {
    if (c != counts[0]) return false;
  }
  return true;
}

ClassFunction probability(const ClassFunction& zeta, std::size_t arity) {
  mpz_class denom;
  mpz_ui_pow_ui(denom.get_mpz_t(), zeta.classes().class_of.size(), arity);
  std::vector<mpq_class> out;
  for (const auto& v : zeta.values()) out.push_back(v / denom);
  return ClassFunction(zeta.classes_ptr(), std::move(out));
}

mpq_class nilpotency_degree(const GroupTable& g, std::size_t n, const CountOptions& opts) {
  const ClassFunction zeta = zeta_brute(g, wn(n), opts);
  return probability(zeta, n)[0];
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string zeta_csv(const GroupTable& g, const ClassFunction& zeta, std::size_t arity) {
  const ClassFunction p = probability(zeta, arity);
  std::ostringstream out;
  out << "rep_label,class_size,count,probability_numerator,probability_denominator\n";
  const ConjugacyData& cl = zeta.classes();
  for (std::size_t j = 0; j < cl.count(); ++j) {
    out << csv_field(g.label(cl.reps[j])) << ',' << cl.sizes[j] << ',' << zeta[j].get_str() << ','
        << p[j].get_num().get_str() << ',' << p[j].get_den().get_str() << '\n';
  }
  return out.str();
}

std::string fiber_csv(const GroupTable& g, const std::vector<std::uint64_t>& counts,
                      std::uint64_t total) {
  std::ostringstream out;
  out << "rep_label,class_size,count,probability_numerator,probability_denominator\n";
  for (Element x = 0; x < counts.size(); ++x) {
    mpq_class q(mpz_class(static_cast<unsigned long>(counts[x])),
                mpz_class(static_cast<unsigned long>(total)));
    q.canonicalize();
    out << csv_field(g.label(x)) << ",1," << counts[x] << ',' << q.get_num().get_str() << ','
        << q.get_den().get_str() << '\n';
  }
  return out.str();
}

}  // namespace wordcount
