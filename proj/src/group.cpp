#include "wordcount/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include "wordcount/error.hpp"

namespace wordcount {

namespace {

constexpr std::size_t kFullAssociativityLimit = 512;

std::vector<bool> closure_mask(const GroupTable& g, std::span<const Element> gens) {
  std::vector<bool> mask(g.order(), false);
  std::vector<Element> queue{0};
  mask[0] = true;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Element x = queue[i];
    for (Element s : gens) {
      const Element y = g.mul(x, s);
      if (!mask[y]) {
        mask[y] = true;
        queue.push_back(y);
      }
    }
  }
  return mask;
}

std::vector<Element> mask_to_members(const std::vector<bool>& mask) {
  std::vector<Element> out;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i]) out.push_back(static_cast<Element>(i));
  }
  return out;
}

std::vector<Element> greedy_generators(const GroupTable& g, std::span<const Element> pool) {
  std::vector<Element> gens;
  std::vector<bool> mask(g.order(), false);
  mask[0] = true;
  for (Element a : pool) {
    if (mask[a]) continue;
    gens.push_back(a);
    mask = closure_mask(g, gens);
  }
  return gens;
}

std::string cycle_notation(const std::vector<std::size_t>& perm) {
  std::vector<bool> seen(perm.size(), false);
  std::ostringstream out;
  bool any = false;
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start] || perm[start] == start) continue;
    out << '(';
    std::size_t x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first) out << ',';
      out << x + 1;
      first = false;
      x = perm[x];
    }
    out << ')';
    any = true;
  }
  return any ? out.str() : "()";
}

[[noreturn]] void not_a_group(const std::string& why) { throw Error(Errc::not_a_group, why); }

}  // namespace

GroupTable::GroupTable(std::size_t n, std::vector<Element> mul, std::vector<std::string> labels)
    : n_(n), mul_(std::move(mul)), labels_(std::move(labels)) {
  inv_.assign(n_, 0);
  for (std::size_t a = 0; a < n_; ++a) {
    const auto r = row(static_cast<Element>(a));
    inv_[a] = static_cast<Element>(std::find(r.begin(), r.end(), Element{0}) - r.begin());
  }
  std::vector<Element> all(n_);
  std::iota(all.begin(), all.end(), Element{0});
  gens_ = greedy_generators(*this, all);
}

GroupTable GroupTable::from_flat_table(std::size_t n, std::vector<Element> mul,
                                       std::vector<std::string> labels, bool check_assoc) {
  if (n == 0) not_a_group("empty table");
  if (mul.size() != n * n) not_a_group("table is not square");
  if (!labels.empty() && labels.size() != n) labels.clear();
  for (Element v : mul) {
    if (v >= n) not_a_group("entry " + std::to_string(v) + " out of range");
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (mul[a] != a || mul[a * n] != a) {
      not_a_group("index 0 is not a two-sided identity at " + std::to_string(a));
    }
  }
  std::vector<std::size_t> seen(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const Element v = mul[a * n + b];
      if (seen[v] == a) {
        not_a_group("row " + std::to_string(a) + " repeats " + std::to_string(v));
      }
      seen[v] = a;
    }
  }
  std::fill(seen.begin(), seen.end(), n);
  for (std::size_t b = 0; b < n; ++b) {
    for (std::size_t a = 0; a < n; ++a) {
      const Element v = mul[a * n + b];
      if (seen[v] == b) {
        not_a_group("column " + std::to_string(b) + " repeats " + std::to_string(v));
      }
      seen[v] = b;
    }
  }

  GroupTable g(n, std::move(mul), std::move(labels));
  if (!check_assoc) return g;

  auto fail_at = [](std::size_t a, std::size_t b, std::size_t c) {
    not_a_group("associativity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                std::to_string(c) + ")");
  };
  if (n <= kFullAssociativityLimit) {
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        const Element ab = g.mul(a, b);
        for (Element c = 0; c < n; ++c) {
          if (g.mul(ab, c) != g.mul(a, g.mul(b, c))) fail_at(a, b, c);
        }
      }
    }
  } else {
    // Light's test over a generating set.
    for (Element s : g.gens_) {
      for (Element x = 0; x < n; ++x) {
        const Element xs = g.mul(x, s);
        for (Element y = 0; y < n; ++y) {
          if (g.mul(xs, y) != g.mul(x, g.mul(s, y))) fail_at(x, s, y);
        }
      }
    }
  }
  return g;
}

GroupTable GroupTable::from_cayley_table(const std::vector<std::vector<Element>>& table,
                                         std::vector<std::string> labels,
                                         std::size_t order_cap) {
  const std::size_t n = table.size();
  if (n == 0) not_a_group("empty table");
  if (n > order_cap) {
    throw Error(Errc::order_limit_exceeded,
                "order " + std::to_string(n) + " exceeds cap " + std::to_string(order_cap));
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n) not_a_group("row " + std::to_string(a) + " has wrong length");
    for (Element v : table[a]) {
      if (v >= n) not_a_group("entry " + std::to_string(v) + " out of range");
    }
  }
  std::size_t e = n;
  for (std::size_t c = 0; c < n && e == n; ++c) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) {
      ok = table[c][a] == a && table[a][c] == a;
    }
    if (ok) e = c;
  }
  if (e == n) not_a_group("no two-sided identity");

  // Relabel by the transposition (0 e).
  auto sigma = [e](std::size_t x) -> Element {
    if (x == 0) return static_cast<Element>(e);
    if (x == e) return 0;
    return static_cast<Element>(x);
  };
  std::vector<Element> flat(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      flat[std::size_t{sigma(a)} * n + sigma(b)] = sigma(table[a][b]);
    }
  }
  if (!labels.empty()) {
    if (labels.size() != n) {
      labels.clear();
    } else {
      std::swap(labels[0], labels[e]);
    }
  }
  return from_flat_table(n, std::move(flat), std::move(labels), true);
}

GroupTable GroupTable::from_permutation_generators(
    std::size_t degree, const std::vector<std::vector<std::size_t>>& gens, std::size_t order_cap) {
  for (const auto& gen : gens) {
    if (gen.size() != degree) {
      throw Error(Errc::not_a_permutation, "generator has length " + std::to_string(gen.size()) +
                                               ", expected " + std::to_string(degree));
    }
    std::vector<bool> hit(degree, false);
    for (std::size_t x : gen) {
      if (x >= degree || hit[x]) {
        throw Error(Errc::not_a_permutation, "image list is not a permutation");
      }
      hit[x] = true;
    }
  }
  using Perm = std::vector<std::size_t>;
  auto key_of = [](const Perm& p) {
    return std::string(reinterpret_cast<const char*>(p.data()), p.size() * sizeof(std::size_t));
  };
  Perm id(degree);
  std::iota(id.begin(), id.end(), std::size_t{0});

  std::vector<Perm> elems{id};
  std::unordered_map<std::string, Element> index{{key_of(id), 0}};
  std::vector<Element> right;  // right[x * k + s] = x * gen_s
  std::vector<Element> parent{0};
  std::vector<std::size_t> via{0};
  const std::size_t k = gens.size();
  right.reserve(k);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t s = 0; s < k; ++s) {
      Perm prod(degree);
      for (std::size_t x = 0; x < degree; ++x) prod[x] = gens[s][elems[i][x]];
      auto key = key_of(prod);
      auto it = index.find(key);
      Element target;
      if (it == index.end()) {
        if (elems.size() >= order_cap) {
          throw Error(Errc::order_limit_exceeded,
                      "closure exceeds cap " + std::to_string(order_cap));
        }
        target = static_cast<Element>(elems.size());
        index.emplace(std::move(key), target);
        elems.push_back(std::move(prod));
        parent.push_back(static_cast<Element>(i));
        via.push_back(s);
      } else {
        target = it->second;
      }
      right.push_back(target);
    }
  }
  const std::size_t n = elems.size();
  std::vector<Element> flat(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    flat[a * n] = static_cast<Element>(a);
    for (std::size_t b = 1; b < n; ++b) {
      // b = parent[b] * gen[via[b]], and parents precede children.
      const Element ab_parent = flat[a * n + parent[b]];
      flat[a * n + b] = right[std::size_t{ab_parent} * k + via[b]];
    }
  }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& p : elems) labels.push_back(cycle_notation(p));
  return from_flat_table(n, std::move(flat), std::move(labels), false);
}

Element GroupTable::power(Element a, long long k) const noexcept {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  const auto ord = static_cast<long long>(element_order(a));
  k %= ord;
  Element result = 0;
  Element base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::size_t GroupTable::element_order(Element a) const noexcept {
  std::size_t ord = 1;
  for (Element x = a; x != 0; x = mul(x, a)) ++ord;
  return ord;
}

std::size_t GroupTable::exponent() const {
  std::size_t e = 1;
  for (Element a = 0; a < n_; ++a) e = std::lcm(e, element_order(a));
  return e;
}

bool GroupTable::is_abelian() const noexcept {
  for (Element s : gens_) {
    for (Element t : gens_) {
      if (mul(s, t) != mul(t, s)) return false;
    }
  }
  return true;
}

std::string GroupTable::label(Element a) const {
  if (!labels_.empty()) return labels_[a];
  return std::to_string(a);
}

std::vector<std::vector<Element>> GroupTable::cayley_table() const {
  std::vector<std::vector<Element>> out(n_);
  for (std::size_t a = 0; a < n_; ++a) {
    const auto r = row(static_cast<Element>(a));
    out[a].assign(r.begin(), r.end());
  }
  return out;
}

std::uint64_t GroupTable::table_hash() const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t v, int bytes) {
    for (int i = 0; i < bytes; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  mix(n_, 8);
  for (Element v : mul_) mix(v, 4);
  return h;
}

// ---------------------------------------------------------------------------
// Subgroup

Subgroup::Subgroup(const GroupTable& parent, std::vector<Element> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  const std::size_t n = parent.order();
  if (members.empty() || members.front() != 0) {
    throw Error(Errc::bad_subgroup, "subgroup must contain the identity");
  }
  if (members.back() >= n) throw Error(Errc::bad_subgroup, "element out of range");
  mask_.assign(n, false);
  for (Element a : members) mask_[a] = true;
  for (Element a : members) {
    if (!mask_[parent.inv(a)]) throw Error(Errc::bad_subgroup, "not closed under inverses");
    for (Element b : members) {
      if (!mask_[parent.mul(a, b)]) throw Error(Errc::bad_subgroup, "not closed under products");
    }
  }
  members_ = std::move(members);
}

Subgroup Subgroup::unchecked(std::size_t parent_order, std::vector<Element> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  Subgroup h;
  h.mask_.assign(parent_order, false);
  for (Element a : members) h.mask_[a] = true;
  h.members_ = std::move(members);
  return h;
}

Subgroup Subgroup::trivial(const GroupTable& parent) { return unchecked(parent.order(), {0}); }

Subgroup Subgroup::whole(const GroupTable& parent) {
  std::vector<Element> all(parent.order());
  std::iota(all.begin(), all.end(), Element{0});
  return unchecked(parent.order(), std::move(all));
}

Subgroup Subgroup::generated_by(const GroupTable& parent, std::span<const Element> gens) {
  for (Element s : gens) {
    if (s >= parent.order()) throw Error(Errc::bad_subgroup, "generator out of range");
  }
  return unchecked(parent.order(), mask_to_members(closure_mask(parent, gens)));
}

bool Subgroup::is_subset_of(const Subgroup& other) const noexcept {
  return std::all_of(members_.begin(), members_.end(),
                     [&](Element a) { return other.contains(a); });
}

std::vector<Element> Subgroup::generators(const GroupTable& parent) const {
  return greedy_generators(parent, members_);
}

// ---------------------------------------------------------------------------
// Classes and structure

std::shared_ptr<const ConjugacyData> conjugacy_classes(const GroupTable& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<Element>> orbits;
  std::vector<bool> seen(n, false);
  for (Element x = 0; x < n; ++x) {
    if (seen[x]) continue;
    std::vector<Element> orbit{x};
    seen[x] = true;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (Element s : g.generators()) {
        const Element y = g.conjugate(orbit[i], s);
        if (!seen[y]) {
          seen[y] = true;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  std::stable_sort(orbits.begin() + 1, orbits.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.front() < b.front();
  });

  auto data = std::make_shared<ConjugacyData>();
  data->class_of.assign(n, 0);
  for (std::size_t c = 0; c < orbits.size(); ++c) {
    for (Element x : orbits[c]) data->class_of[x] = c;
    data->reps.push_back(orbits[c].front());
    data->sizes.push_back(orbits[c].size());
  }
  for (std::size_t c = 0; c < orbits.size(); ++c) {
    data->inverse_class.push_back(data->class_of[g.inv(data->reps[c])]);
  }
  data->members = std::move(orbits);
  return data;
}

MaterializedSubgroup materialize(const GroupTable& g, const Subgroup& h) {
  const auto& mem = h.members();
  const std::size_t m = mem.size();
  std::vector<Element> local(g.order(), 0);
  for (std::size_t i = 0; i < m; ++i) local[mem[i]] = static_cast<Element>(i);
  std::vector<Element> flat(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) flat[i * m + j] = local[g.mul(mem[i], mem[j])];
  }
  std::vector<std::string> labels;
  if (!g.labels().empty()) {
    for (Element a : mem) labels.push_back(g.label(a));
  }
  return {GroupTable::from_flat_table(m, std::move(flat), std::move(labels), false), mem};
}

bool is_normal(const GroupTable& g, const Subgroup& h) {
  if (h.parent_order() != g.order()) throw Error(Errc::mismatched_group, "subgroup of another group");
  for (Element x : h.generators(g)) {
    for (Element s : g.generators()) {
      if (!h.contains(g.conjugate(x, s))) return false;
    }
  }
  return true;
}

Subgroup normal_closure(const GroupTable& g, std::span<const Element> elems) {
  std::vector<Element> gens(elems.begin(), elems.end());
  Subgroup h = Subgroup::generated_by(g, gens);
  for (;;) {
    bool grew = false;
    for (Element x : h.generators(g)) {
      for (Element s : g.generators()) {
        const Element y = g.conjugate(x, s);
        if (!h.contains(y)) {
          gens.push_back(y);
          h = Subgroup::generated_by(g, gens);
          grew = true;
        }
      }
    }
    if (!grew) return h;
  }
}

Subgroup center(const GroupTable& g) {
  std::vector<Element> members;
  for (Element x = 0; x < g.order(); ++x) {
    const bool central = std::all_of(g.generators().begin(), g.generators().end(),
                                     [&](Element s) { return g.mul(x, s) == g.mul(s, x); });
    if (central) members.push_back(x);
  }
  return Subgroup::unchecked(g.order(), std::move(members));
}

Subgroup commutator_of(const GroupTable& g, const Subgroup& a, const Subgroup& b) {
  std::vector<Element> comms;
  const auto ga = a.generators(g);
  const auto gb = b.generators(g);
  for (Element x : ga) {
    for (Element y : gb) comms.push_back(g.commutator(x, y));
  }
  return normal_closure(g, comms);
}

Subgroup commutator_subgroup(const GroupTable& g) {
  const Subgroup whole = Subgroup::whole(g);
  return commutator_of(g, whole, whole);
}

namespace {

Subgroup next_upper(const GroupTable& g, const Subgroup& z) {
  std::vector<Element> members;
  for (Element x = 0; x < g.order(); ++x) {
    const bool ok = std::all_of(g.generators().begin(), g.generators().end(),
                                [&](Element s) { return z.contains(g.commutator(x, s)); });
    if (ok) members.push_back(x);
  }
  return Subgroup::unchecked(g.order(), std::move(members));
}

}  // namespace

std::vector<Subgroup> upper_central_series(const GroupTable& g) {
  std::vector<Subgroup> series{Subgroup::trivial(g)};
  for (;;) {
    Subgroup next = next_upper(g, series.back());
    if (next == series.back()) return series;
    series.push_back(std::move(next));
  }
}

std::vector<Subgroup> lower_central_series(const GroupTable& g) {
  const Subgroup whole = Subgroup::whole(g);
  std::vector<Subgroup> series{whole};
  for (;;) {
    Subgroup next = commutator_of(g, series.back(), whole);
    if (next == series.back()) return series;
    series.push_back(std::move(next));
  }
}

Subgroup upper_central_term(const GroupTable& g, std::size_t i) {
  auto series = upper_central_series(g);
  return series[std::min(i, series.size() - 1)];
}

Subgroup lower_central_term(const GroupTable& g, std::size_t i) {
  if (i == 0) throw Error(Errc::unsupported_parameter, "lower central series starts at 1");
  auto series = lower_central_series(g);
  return series[std::min(i - 1, series.size() - 1)];
}

std::optional<std::size_t> nilpotency_class(const GroupTable& g) {
  const auto upper = upper_central_series(g);
  const auto lower = lower_central_series(g);
  const bool upper_reaches = upper.back().is_whole();
  const bool lower_reaches = lower.back().is_trivial();
  if (upper_reaches != lower_reaches) {
    throw Error(Errc::internal_inconsistency, "upper and lower central series disagree");
  }
  if (!upper_reaches) return std::nullopt;
  const std::size_t by_upper = upper.size() - 1;
  const std::size_t by_lower = lower.size() - 1;
  if (by_upper != by_lower) {
    throw Error(Errc::internal_inconsistency, "nilpotency class differs between series");
  }
  return by_upper;
}

Quotient quotient(const GroupTable& g, const Subgroup& n) {
  if (!is_normal(g, n)) throw Error(Errc::not_normal, "quotient by a non-normal subgroup");
  const std::size_t order = g.order();
  constexpr Element kUnset = ~Element{0};
  std::vector<Element> proj(order, kUnset);
  std::vector<Element> lift;
  for (Element x = 0; x < order; ++x) {
    if (proj[x] != kUnset) continue;
    const auto id = static_cast<Element>(lift.size());
    lift.push_back(x);
    for (Element h : n.members()) proj[g.mul(x, h)] = id;
  }
  const std::size_t m = lift.size();
  std::vector<Element> flat(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) flat[a * m + b] = proj[g.mul(lift[a], lift[b])];
  }
  std::vector<std::string> labels;
  if (!g.labels().empty()) {
    for (Element x : lift) labels.push_back("[" + g.label(x) + "]");
  }
  return {GroupTable::from_flat_table(m, std::move(flat), std::move(labels), false),
          std::move(proj), std::move(lift)};
}

bool is_camina_pair(const GroupTable& g, const Subgroup& h, const ConjugacyData& classes) {
  if (h.parent_order() != g.order()) throw Error(Errc::mismatched_group, "subgroup of another group");
  if (h.is_trivial() || h.is_whole()) {
    throw Error(Errc::bad_subgroup, "Camina pair needs 1 < H < G");
  }
  if (!is_normal(g, h)) throw Error(Errc::bad_subgroup, "Camina pair needs H normal");
  for (Element x = 0; x < g.order(); ++x) {
    if (h.contains(x)) continue;
    const std::size_t c = classes.class_of[x];
    for (Element y : h.members()) {
      if (classes.class_of[g.mul(x, y)] != c) return false;
    }
  }
  return true;
}

bool is_camina_pair(const GroupTable& g, const Subgroup& h) {
  return is_camina_pair(g, h, *conjugacy_classes(g));
}

bool is_p_group(std::size_t order, std::size_t* prime) {
  if (order < 2) return false;
  std::size_t p = 2;
  while (order % p != 0) ++p;
  while (order % p == 0) order /= p;
  if (order != 1) return false;
  if (prime != nullptr) *prime = p;
  return true;
}

std::vector<Subgroup> normal_subgroups_between(const GroupTable& g, const Subgroup& lower,
                                               const Subgroup& upper, std::size_t cap) {
  if (!lower.is_subset_of(upper)) return {};
  const auto classes = conjugacy_classes(g);
  std::vector<Subgroup> closures;
  std::set<std::vector<Element>> closure_keys;
  for (std::size_t c = 0; c < classes->count(); ++c) {
    const Element rep = classes->reps[c];
    if (!upper.contains(rep) || lower.contains(rep)) continue;
    const Element one[] = {rep};
    Subgroup nc = normal_closure(g, one);
    if (closure_keys.insert(nc.members()).second) closures.push_back(std::move(nc));
  }

  std::vector<Subgroup> found{lower};
  std::set<std::vector<Element>> keys{lower.members()};
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (const Subgroup& nc : closures) {
      if (nc.is_subset_of(found[i])) continue;
      std::vector<Element> gens = found[i].generators(g);
      const auto extra = nc.generators(g);
      gens.insert(gens.end(), extra.begin(), extra.end());
      Subgroup join = Subgroup::generated_by(g, gens);
      if (!join.is_subset_of(upper)) continue;
      if (keys.insert(join.members()).second) {
        if (found.size() >= cap) {
          throw Error(Errc::order_limit_exceeded,
                      "more than " + std::to_string(cap) + " normal subgroups");
        }
        found.push_back(std::move(join));
      }
    }
  }
  std::sort(found.begin(), found.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.members() < b.members();
  });
  return found;
}

GroupClassReport structural_report(const GroupTable& g) {
  GroupClassReport report;
  report.is_abelian = g.is_abelian();
  report.nilpotency_class = nilpotency_class(g);
  if (report.is_abelian) return report;

  const auto classes = conjugacy_classes(g);
  const Subgroup z = center(g);
  const Subgroup derived = commutator_subgroup(g);
  for (Subgroup& h : normal_subgroups_between(g, z, derived)) {
    if (h.is_trivial() || h.is_whole()) continue;
    if (is_camina_pair(g, h, *classes)) {
      if (h == derived) report.is_camina_group = true;
      report.camina_pair_targets.push_back(std::move(h));
    }
  }
  return report;
}

}  // namespace wordcount
