#include "wordcount/isoclinism.hpp"

#include <algorithm>
#include <functional>

#include "wordcount/chartab.hpp"
#include "wordcount/error.hpp"
#include "wordcount/formulas.hpp"

namespace wordcount {

namespace {

constexpr long kUnset = -1;

Element left_normed(const GroupTable& g, const std::vector<Element>& xs) {
  Element c = xs[0];
  for (std::size_t i = 1; i < xs.size(); ++i) c = g.commutator(c, xs[i]);
  return c;
}

// Calls f on every (n+1)-tuple of coset indices 0..k-1.
void for_each_tuple(std::size_t k, std::size_t len,
                    const std::function<bool(const std::vector<Element>&)>& f) {
  std::vector<Element> t(len, 0);
  for (;;) {
    if (!f(t)) return;
    std::size_t i = 0;
    while (i < len && ++t[i] == k) t[i++] = 0;
    if (i == len) return;
  }
}

// Extends `img` from the elements already mapped along right multiplication
// by the generators, rejecting conflicts and collisions.
bool close_map(const GroupTable& src, const GroupTable& dst, const std::vector<Element>& gens,
               const std::vector<Element>& gen_images, std::vector<long>& img,
               std::vector<bool>& used) {
  std::vector<Element> queue;
  for (Element x = 0; x < src.order(); ++x) {
    if (img[x] != kUnset) queue.push_back(x);
  }
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const Element x = queue[q];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const Element y = src.mul(x, gens[i]);
      const Element target = dst.mul(static_cast<Element>(img[x]), gen_images[i]);
      if (img[y] == kUnset) {
        if (used[target]) return false;
        img[y] = target;
        used[target] = true;
        queue.push_back(y);
      } else if (img[y] != static_cast<long>(target)) {
        return false;
      }
    }
  }
  return true;
}

struct Side {
  Quotient q;
  Subgroup gamma;
};

Side side_of(const GroupTable& g, std::size_t n) {
  return {quotient(g, upper_central_term(g, n)), lower_central_term(g, n + 1)};
}

[[noreturn]] void invalid(const std::string& msg) { throw Error(Errc::witness_invalid, msg); }

// psi from phi: defined on commutator values, then extended multiplicatively
// over gamma_{n+1}(G). Returns false when it is not a well-defined isomorphism.
bool derive_psi(const GroupTable& g, const GroupTable& h, const Side& sg, const Side& sh,
                std::size_t n, const std::vector<Element>& phi, std::vector<long>& psi_full) {
  psi_full.assign(g.order(), kUnset);
  std::vector<Element> values;
  std::vector<Element> images;
  std::vector<Element> lg(n + 1), lh(n + 1);
  bool ok = true;
  for_each_tuple(sg.q.group.order(), n + 1, [&](const std::vector<Element>& t) {
    for (std::size_t i = 0; i <= n; ++i) {
      lg[i] = sg.q.lift[t[i]];
      lh[i] = sh.q.lift[phi[t[i]]];
    }
    const Element a = left_normed(g, lg);
    const Element b = left_normed(h, lh);
    if (psi_full[a] == kUnset) {
      psi_full[a] = b;
      values.push_back(a);
      images.push_back(b);
    } else if (psi_full[a] != static_cast<long>(b)) {
      ok = false;
    }
    return ok;
  });
  if (!ok) return false;
  // Start the closure from the identity only; the commutator values are
  // generators and are re-derived (and re-checked) by the closure.
  std::vector<long> img(g.order(), kUnset);
  std::vector<bool> used(h.order(), false);
  img[g.identity()] = h.identity();
  used[h.identity()] = true;
  if (!close_map(g, h, values, images, img, used)) return false;
  for (Element x = 0; x < g.order(); ++x) {
    if (psi_full[x] != kUnset && img[x] != psi_full[x]) return false;
    if ((img[x] != kUnset) != sg.gamma.contains(x)) return false;
    if (img[x] != kUnset && !sh.gamma.contains(static_cast<Element>(img[x]))) return false;
  }
  psi_full = std::move(img);
  return sg.gamma.size() == sh.gamma.size();
}

IsoclinismWitness make_witness(std::size_t n, const Side& sg, const Side& sh,
                               std::vector<Element> phi, const std::vector<long>& psi_full) {
  IsoclinismWitness w;
  w.n = n;
  w.g_coset = sg.q.projection;
  w.h_coset = sh.q.projection;
  w.phi = std::move(phi);
  w.gamma_g = sg.gamma.members();
  for (Element x : w.gamma_g) w.psi.push_back(static_cast<Element>(psi_full[x]));
  return w;
}

void check_level(std::size_t n) {
  if (n < 1 || n + 1 > kMaxRecursionN) {
    throw Error(Errc::unsupported_parameter,
                "isoclinism level must be between 1 and " + std::to_string(kMaxRecursionN - 1));
  }
}

}  // namespace

Element IsoclinismWitness::apply_psi(Element x) const {
  const auto it = std::lower_bound(gamma_g.begin(), gamma_g.end(), x);
  if (it == gamma_g.end() || *it != x) invalid("element outside gamma_{n+1}(G)");
  return psi[static_cast<std::size_t>(it - gamma_g.begin())];
}

IsoclinismWitness identity_witness(const GroupTable& g, std::size_t n) {
  check_level(n);
  const Side s = side_of(g, n);
  std::vector<Element> phi(s.q.group.order());
  for (Element c = 0; c < phi.size(); ++c) phi[c] = c;
  std::vector<long> psi(g.order(), kUnset);
  for (Element x : s.gamma.members()) psi[x] = x;
  return make_witness(n, s, s, std::move(phi), psi);
}

std::optional<IsoclinismWitness> find_isoclinism(const GroupTable& g, const GroupTable& h,
                                                 std::size_t n) {
  check_level(n);
  const Side sg = side_of(g, n);
  const Side sh = side_of(h, n);
  for (std::size_t s : {sg.q.group.order(), sh.q.group.order(), sg.gamma.size(), sh.gamma.size()}) {
    if (s > kIsoclinismSearchBound) {
      throw Error(Errc::search_bound_exceeded,
                  "order " + std::to_string(s) + " exceeds the search bound " +
                      std::to_string(kIsoclinismSearchBound));
    }
  }
  if (g == h) return identity_witness(g, n);
  const GroupTable& qg = sg.q.group;
  const GroupTable& qh = sh.q.group;
  if (qg.order() != qh.order() || sg.gamma.size() != sh.gamma.size()) return std::nullopt;

  std::vector<Element> gens = Subgroup::whole(qg).generators(qg);
  std::stable_sort(gens.begin(), gens.end(), [&](Element a, Element b) {
    return qg.element_order(a) < qg.element_order(b);
  });
  std::vector<std::vector<Element>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (Element y = 0; y < qh.order(); ++y) {
      if (qh.element_order(y) == qg.element_order(gens[i])) candidates[i].push_back(y);
    }
  }

  std::optional<IsoclinismWitness> found;
  std::vector<Element> chosen;
  std::function<void(std::size_t, const std::vector<long>&, const std::vector<bool>&)> search =
      [&](std::size_t i, const std::vector<long>& img, const std::vector<bool>& used) {
        if (found) return;
        if (i == gens.size()) {
          std::vector<Element> phi(qg.order());
          for (Element c = 0; c < qg.order(); ++c) {
            if (img[c] == kUnset) return;
            phi[c] = static_cast<Element>(img[c]);
          }
          std::vector<long> psi;
          if (derive_psi(g, h, sg, sh, n, phi, psi)) {
            found = make_witness(n, sg, sh, std::move(phi), psi);
          }
          return;
        }
        for (Element y : candidates[i]) {
          std::vector<long> next = img;
          std::vector<bool> next_used = used;
          chosen.push_back(y);
          std::vector<Element> prefix(gens.begin(), gens.begin() + static_cast<long>(i) + 1);
          if (close_map(qg, qh, prefix, chosen, next, next_used)) search(i + 1, next, next_used);
          chosen.pop_back();
          if (found) return;
        }
      };
  std::vector<long> img(qg.order(), kUnset);
  std::vector<bool> used(qh.order(), false);
  img[qg.identity()] = qh.identity();
  used[qh.identity()] = true;
  search(0, img, used);
  return found;
}

void check_witness(const GroupTable& g, const GroupTable& h, const IsoclinismWitness& w) {
  check_level(w.n);
  const Side sg = side_of(g, w.n);
  const Side sh = side_of(h, w.n);
  const GroupTable& qg = sg.q.group;
  const GroupTable& qh = sh.q.group;
  if (w.g_coset != sg.q.projection || w.h_coset != sh.q.projection) {
    invalid("coset numbering does not match the groups");
  }
  if (w.phi.size() != qg.order() || qg.order() != qh.order()) invalid("phi has the wrong size");
  std::vector<bool> hit(qh.order(), false);
  for (Element c : w.phi) {
    if (c >= qh.order() || hit[c]) invalid("phi is not a bijection");
    hit[c] = true;
  }
  for (Element a = 0; a < qg.order(); ++a) {
    for (Element b = 0; b < qg.order(); ++b) {
      if (w.phi[qg.mul(a, b)] != qh.mul(w.phi[a], w.phi[b])) invalid("phi is not a homomorphism");
    }
  }
  if (w.gamma_g != sg.gamma.members() || w.psi.size() != w.gamma_g.size() ||
      sg.gamma.size() != sh.gamma.size()) {
    invalid("psi is not defined on gamma_{n+1}(G)");
  }
  std::vector<bool> seen(h.order(), false);
  for (Element y : w.psi) {
    if (y >= h.order() || !sh.gamma.contains(y) || seen[y]) {
      invalid("psi is not a bijection onto gamma_{n+1}(H)");
    }
    seen[y] = true;
  }
  for (Element a : w.gamma_g) {
    for (Element b : w.gamma_g) {
      if (w.apply_psi(g.mul(a, b)) != h.mul(w.apply_psi(a), w.apply_psi(b))) {
        invalid("psi is not a homomorphism");
      }
    }
  }
  std::vector<Element> lg(w.n + 1), lh(w.n + 1);
  bool compatible = true;
  for_each_tuple(qg.order(), w.n + 1, [&](const std::vector<Element>& t) {
    for (std::size_t i = 0; i <= w.n; ++i) {
      lg[i] = sg.q.lift[t[i]];
      lh[i] = sh.q.lift[w.phi[t[i]]];
    }
    compatible = w.apply_psi(left_normed(g, lg)) == left_normed(h, lh);
    return compatible;
  });
  if (!compatible) invalid("psi is not compatible with phi");
}

ScalingReport verify_scaling(const GroupTable& g, const GroupTable& h, const IsoclinismWitness& w,
                             ZetaMethod method, const CountOptions& opts) {
  check_witness(g, h, w);
  const std::size_t k = w.n + 1;
  auto zeta = [&](const GroupTable& x) {
    return method == ZetaMethod::character ? zeta_wn_char(character_table(x), k)
                                           : zeta_brute(x, wn(k), opts);
  };
  const ClassFunction zg = zeta(g);
  const ClassFunction zh = zeta(h);
  ScalingReport r;
  mpq_class ratio(mpz_class(static_cast<unsigned long>(g.order())),
                  mpz_class(static_cast<unsigned long>(h.order())));
  ratio.canonicalize();
  r.factor = 1;
  for (std::size_t i = 0; i < k; ++i) r.factor *= ratio;
  for (std::size_t i = 0; i < w.gamma_g.size(); ++i) {
    const Element x = w.gamma_g[i];
    ScalingEntry e{x, w.psi[i], zg.at_element(x).get_num(), r.factor * zh.at_element(w.psi[i])};
    if (e.lhs != e.rhs) r.holds = false;
    r.entries.push_back(std::move(e));
  }
  return r;
}

}  // namespace wordcount
