#include "wordcount/builtin.hpp"

#include <cctype>
#include <functional>
#include <string>

#include "wordcount/error.hpp"

namespace wordcount {

namespace {

constexpr std::size_t kVerifyLimit = 512;

using MulFn = std::function<Element(Element, Element)>;

GroupTable from_rule(std::size_t n, const MulFn& mul, std::vector<std::string> labels) {
  if (n > kDefaultOrderCap) {
    throw Error(Errc::order_limit_exceeded, "order " + std::to_string(n) + " exceeds cap");
  }
  std::vector<Element> flat(n * n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) flat[std::size_t{a} * n + b] = mul(a, b);
  }
  return GroupTable::from_flat_table(n, std::move(flat), std::move(labels), n <= kVerifyLimit);
}

[[noreturn]] void unsupported(std::string_view family, const std::string& why) {
  throw Error(Errc::unsupported_parameter, std::string(family) + ": " + why);
}

void expect_arity(std::string_view family, const std::vector<long long>& params, std::size_t k) {
  if (params.size() != k) {
    unsupported(family, "expects " + std::to_string(k) + " parameter(s)");
  }
}

std::string power_label(const std::string& sym, long long k) {
  if (k == 0) return "";
  if (k == 1) return sym;
  return sym + "^" + std::to_string(k);
}

std::string join_labels(std::string a, const std::string& b) {
  if (a.empty() && b.empty()) return "1";
  if (a.empty()) return b;
  if (b.empty()) return a;
  return a + b;
}

GroupTable cyclic(long long n) {
  if (n < 1) unsupported("cyclic", "order must be positive");
  std::vector<std::string> labels;
  for (long long k = 0; k < n; ++k) labels.push_back(k == 0 ? "1" : power_label("a", k));
  return from_rule(
      static_cast<std::size_t>(n),
      [n](Element a, Element b) { return static_cast<Element>((a + b) % n); }, labels);
}

GroupTable dihedral(long long order) {
  if (order < 2 || order % 2 != 0) unsupported("dihedral", "order must be even and >= 2");
  const long long m = order / 2;
  // r^i s^j <-> i + m*j, with s r = r^-1 s.
  std::vector<std::string> labels;
  for (long long j = 0; j < 2; ++j) {
    for (long long i = 0; i < m; ++i) {
      labels.push_back(join_labels(power_label("r", i), j ? "s" : ""));
    }
  }
  return from_rule(
      static_cast<std::size_t>(order),
      [m](Element x, Element y) {
        const long long a = x % m, b = x / m, c = y % m, d = y / m;
        const long long i = ((a + (b ? -c : c)) % m + m) % m;
        return static_cast<Element>(i + m * ((b + d) % 2));
      },
      labels);
}

GroupTable quaternion(long long order) {
  if (order < 8 || (order & (order - 1)) != 0) {
    unsupported("quaternion", "order must be 8*2^k");
  }
  const long long m = order / 2;  // order of x
  // x^i y^j <-> i + m*j, y^2 = x^(m/2), y^-1 x y = x^-1.
  std::vector<std::string> labels;
  for (long long j = 0; j < 2; ++j) {
    for (long long i = 0; i < m; ++i) {
      labels.push_back(join_labels(power_label("x", i), j ? "y" : ""));
    }
  }
  return from_rule(
      static_cast<std::size_t>(order),
      [m](Element p, Element q) {
        const long long a = p % m, b = p / m, c = q % m, d = q / m;
        long long i = a + (b ? -c : c);
        long long j = b + d;
        if (j == 2) {
          i += m / 2;
          j = 0;
        }
        return static_cast<Element>(((i % m) + m) % m + m * j);
      },
      labels);
}

GroupTable symmetric(long long n) {
  if (n < 1 || n > 6) unsupported("symmetric", "degree must be in 1..6");
  const auto deg = static_cast<std::size_t>(n);
  std::vector<std::vector<std::size_t>> gens;
  if (n >= 2) {
    std::vector<std::size_t> swap01(deg), cycle(deg);
    for (std::size_t i = 0; i < deg; ++i) {
      swap01[i] = i;
      cycle[i] = (i + 1) % deg;
    }
    std::swap(swap01[0], swap01[1]);
    gens.push_back(swap01);
    if (n > 2) gens.push_back(cycle);
  }
  return GroupTable::from_permutation_generators(deg, gens);
}

GroupTable alternating(long long n) {
  if (n < 1 || n > 6) unsupported("alternating", "degree must be in 1..6");
  const auto deg = static_cast<std::size_t>(n);
  std::vector<std::vector<std::size_t>> gens;
  // 3-cycles (0 1 k) generate A_n.
  for (std::size_t k = 2; k < deg; ++k) {
    std::vector<std::size_t> g(deg);
    for (std::size_t i = 0; i < deg; ++i) g[i] = i;
    g[0] = 1;
    g[1] = k;
    g[k] = 0;
    gens.push_back(g);
  }
  return GroupTable::from_permutation_generators(deg, gens);
}

GroupTable elementary_abelian(long long p, long long k) {
  if (!is_prime(p)) unsupported("elementary_abelian", "p must be prime");
  if (k < 0) unsupported("elementary_abelian", "rank must be nonnegative");
  long long n = 1;
  for (long long i = 0; i < k; ++i) {
    n *= p;
    if (n > static_cast<long long>(kDefaultOrderCap)) {
      throw Error(Errc::order_limit_exceeded, "elementary_abelian order exceeds cap");
    }
  }
  std::vector<std::string> labels;
  for (long long x = 0; x < n; ++x) {
    std::string s = "(";
    long long v = x;
    for (long long i = 0; i < k; ++i) {
      if (i) s += ",";
      s += std::to_string(v % p);
      v /= p;
    }
    labels.push_back(s + ")");
  }
  return from_rule(
      static_cast<std::size_t>(n),
      [p, k](Element a, Element b) {
        long long out = 0, scale = 1;
        long long x = a, y = b;
        for (long long i = 0; i < k; ++i) {
          out += ((x % p + y % p) % p) * scale;
          x /= p;
          y /= p;
          scale *= p;
        }
        return static_cast<Element>(out);
      },
      labels);
}

GroupTable heisenberg(long long p) {
  if (!is_prime(p)) unsupported("heisenberg", "p must be prime");
  if (p * p * p > static_cast<long long>(kDefaultOrderCap)) {
    throw Error(Errc::order_limit_exceeded, "heisenberg order exceeds cap");
  }
  // (a,b,c) = [[1,a,c],[0,1,b],[0,0,1]] <-> a + p*b + p^2*c
  std::vector<std::string> labels;
  for (long long x = 0; x < p * p * p; ++x) {
    labels.push_back("[" + std::to_string(x % p) + "," + std::to_string((x / p) % p) + "," +
                     std::to_string(x / (p * p)) + "]");
  }
  return from_rule(
      static_cast<std::size_t>(p * p * p),
      [p](Element x, Element y) {
        const long long a = x % p, b = (x / p) % p, c = x / (p * p);
        const long long d = y % p, e = (y / p) % p, f = y / (p * p);
        const long long u = (a + d) % p, v = (b + e) % p, w = (c + f + a * e) % p;
        return static_cast<Element>(u + p * v + p * p * w);
      },
      labels);
}

// C_{p^2} x| C_p with y x y^-1 = x^(1+p); x^a y^b <-> a + p^2*b.
GroupTable extraspecial_minus_odd(long long p) {
  const long long m = p * p;
  std::vector<long long> twist(p, 1);  // (1+p)^b mod p^2
  for (long long b = 1; b < p; ++b) twist[b] = twist[b - 1] * (1 + p) % m;
  std::vector<std::string> labels;
  for (long long b = 0; b < p; ++b) {
    for (long long a = 0; a < m; ++a) {
      labels.push_back(join_labels(power_label("x", a), power_label("y", b)));
    }
  }
  return from_rule(
      static_cast<std::size_t>(m * p),
      [m, p, twist](Element u, Element v) {
        const long long a = u % m, b = u / m, c = v % m, d = v / m;
        const long long i = (a + c * twist[b]) % m;
        return static_cast<Element>(i + m * ((b + d) % p));
      },
      labels);
}

// Arithmetic in F_q with q = p^k, elements as base-p digit vectors.
class FiniteField {
 public:
  FiniteField(long long p, int k) : p_(p), k_(k) {
    q_ = 1;
    for (int i = 0; i < k; ++i) q_ *= p;
    modulus_ = find_irreducible();
    mul_.assign(static_cast<std::size_t>(q_ * q_), 0);
    for (long long a = 0; a < q_; ++a) {
      for (long long b = 0; b < q_; ++b) mul_[a * q_ + b] = slow_mul(a, b);
    }
  }

  long long size() const { return q_; }
  long long add(long long a, long long b) const {
    long long out = 0, scale = 1;
    for (int i = 0; i < k_; ++i) {
      out += ((a % p_ + b % p_) % p_) * scale;
      a /= p_;
      b /= p_;
      scale *= p_;
    }
    return out;
  }
  long long mul(long long a, long long b) const { return mul_[a * q_ + b]; }

 private:
  using Poly = std::vector<long long>;  // low degree first

  Poly digits(long long a, int len) const {
    Poly out(len, 0);
    for (int i = 0; i < len; ++i) {
      out[i] = a % p_;
      a /= p_;
    }
    return out;
  }

  // Remainder of f modulo monic g over F_p.
  Poly poly_mod(Poly f, const Poly& g) const {
    const std::size_t dg = g.size() - 1;
    for (std::size_t i = f.size(); i-- > dg;) {
      const long long c = f[i] % p_;
      if (c == 0) continue;
      for (std::size_t j = 0; j <= dg; ++j) {
        f[i - dg + j] = ((f[i - dg + j] - c * g[j]) % p_ + p_) % p_;
      }
    }
    f.resize(dg);
    return f;
  }

  bool divides(const Poly& g, const Poly& f) const {
    const Poly r = poly_mod(f, g);
    for (long long c : r) {
      if (c % p_ != 0) return false;
    }
    return true;
  }

  Poly find_irreducible() const {
    if (k_ == 1) return {0, 1};
    for (long long tail = 0;; ++tail) {
      Poly f = digits(tail, k_);
      f.push_back(1);
      bool irreducible = true;
      for (int d = 1; d <= k_ / 2 && irreducible; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p_;
        for (long long t = 0; t < count && irreducible; ++t) {
          Poly g = digits(t, d);
          g.push_back(1);
          if (divides(g, f)) irreducible = false;
        }
      }
      if (irreducible) return f;
    }
  }

  long long slow_mul(long long a, long long b) const {
    const Poly x = digits(a, k_), y = digits(b, k_);
    Poly prod(2 * k_, 0);
    for (int i = 0; i < k_; ++i) {
      for (int j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
    }
    const Poly r = k_ == 1 ? Poly{prod[0] % p_} : poly_mod(prod, modulus_);
    long long out = 0, scale = 1;
    for (int i = 0; i < k_; ++i) {
      out += (r[i] % p_) * scale;
      scale *= p_;
    }
    return out;
  }

  long long p_;
  int k_;
  long long q_;
  Poly modulus_;
  std::vector<long long> mul_;
};

GroupTable agl1(long long q) {
  long long p = 0;
  int k = 0;
  if (q > 32 || !is_prime_power(q, &p, &k)) {
    unsupported("agl1", "q must be a prime power <= 32");
  }
  const FiniteField field(p, k);
  // x -> a x + b with a in F_q^*, encoded (a-1)*q + b. Composition applies
  // the left factor first: (a,b)*(c,d) = (ca, cb+d).
  std::vector<std::string> labels;
  for (long long a = 1; a < q; ++a) {
    for (long long b = 0; b < q; ++b) {
      labels.push_back("x->" + std::to_string(a) + "x+" + std::to_string(b));
    }
  }
  return from_rule(
      static_cast<std::size_t>(q * (q - 1)),
      [q, field](Element u, Element v) {
        const long long a = u / q + 1, b = u % q, c = v / q + 1, d = v % q;
        const long long na = field.mul(c, a);
        const long long nb = field.add(field.mul(c, b), d);
        return static_cast<Element>((na - 1) * q + nb);
      },
      labels);
}

// ---------------------------------------------------------------------------
// Spec parsing

struct SpecParser {
  std::string_view text;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(Errc::unknown_family,
                "bad builtin spec '" + std::string(text) + "' at " + std::to_string(pos) + ": " + why);
  }
  void skip() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  std::string name() {
    skip();
    const std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
      ++pos;
    }
    if (start == pos) fail("expected a family name");
    return std::string(text.substr(start, pos - start));
  }
  long long integer() {
    skip();
    const std::size_t start = pos;
    if (pos < text.size() && text[pos] == '-') ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) fail("expected an integer");
    try {
      return std::stoll(std::string(text.substr(start, pos - start)));
    } catch (const std::exception&) {
      fail("integer out of range");
    }
  }

  GroupTable group() {
    const std::string fam = name();
    if (fam == "direct_product") {
      if (!eat('(')) fail("expected '('");
      GroupTable a = group();
      if (!eat(',')) fail("expected ','");
      GroupTable b = group();
      if (!eat(')')) fail("expected ')'");
      return direct_product(a, b);
    }
    std::vector<long long> params;
    if (eat('(')) {
      if (!eat(')')) {
        do {
          params.push_back(integer());
        } while (eat(','));
        if (!eat(')')) fail("expected ')'");
      }
    }
    return builtin(fam, params);
  }
};

}  // namespace

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_prime_power(long long q, long long* prime, int* power) {
  if (q < 2) return false;
  long long p = 2;
  while (q % p != 0) ++p;
  int k = 0;
  while (q % p == 0) {
    q /= p;
    ++k;
  }
  if (q != 1) return false;
  if (prime) *prime = p;
  if (power) *power = k;
  return true;
}

GroupTable direct_product(const GroupTable& a, const GroupTable& b) {
  const std::size_t na = a.order(), nb = b.order();
  std::vector<std::string> labels;
  labels.reserve(na * nb);
  for (Element x = 0; x < na; ++x) {
    for (Element y = 0; y < nb; ++y) labels.push_back("(" + a.label(x) + "," + b.label(y) + ")");
  }
  return from_rule(
      na * nb,
      [&a, &b, nb](Element u, Element v) {
        const Element x = a.mul(u / nb, v / nb);
        const Element y = b.mul(u % nb, v % nb);
        return static_cast<Element>(std::size_t{x} * nb + y);
      },
      labels);
}

GroupTable builtin(std::string_view family, const std::vector<long long>& params) {
  if (family == "cyclic") {
    expect_arity(family, params, 1);
    return cyclic(params[0]);
  }
  if (family == "dihedral") {
    expect_arity(family, params, 1);
    return dihedral(params[0]);
  }
  if (family == "quaternion") {
    expect_arity(family, params, 1);
    return quaternion(params[0]);
  }
  if (family == "symmetric") {
    expect_arity(family, params, 1);
    return symmetric(params[0]);
  }
  if (family == "alternating") {
    expect_arity(family, params, 1);
    return alternating(params[0]);
  }
  if (family == "elementary_abelian") {
    expect_arity(family, params, 2);
    return elementary_abelian(params[0], params[1]);
  }
  if (family == "heisenberg") {
    expect_arity(family, params, 1);
    return heisenberg(params[0]);
  }
  if (family == "extraspecial_plus") {
    expect_arity(family, params, 1);
    if (!is_prime(params[0])) unsupported(family, "p must be prime");
    return params[0] == 2 ? dihedral(8) : heisenberg(params[0]);
  }
  if (family == "extraspecial_minus") {
    expect_arity(family, params, 1);
    if (!is_prime(params[0])) unsupported(family, "p must be prime");
    if (params[0] == 2) return quaternion(8);
    if (params[0] * params[0] * params[0] > static_cast<long long>(kDefaultOrderCap)) {
      throw Error(Errc::order_limit_exceeded, "extraspecial order exceeds cap");
    }
    return extraspecial_minus_odd(params[0]);
  }
  if (family == "agl1") {
    expect_arity(family, params, 1);
    return agl1(params[0]);
  }
  if (family == "direct_product") {
    throw Error(Errc::unsupported_parameter, "direct_product takes nested specs; use build_builtin");
  }
  throw Error(Errc::unknown_family, "unknown family '" + std::string(family) + "'");
}

GroupTable build_builtin(std::string_view spec) {
  constexpr std::string_view prefix = "builtin:";
  if (spec.substr(0, prefix.size()) == prefix) spec.remove_prefix(prefix.size());
  SpecParser parser{spec};
  GroupTable g = parser.group();
  parser.skip();
  if (parser.pos != spec.size()) parser.fail("trailing input");
  return g;
}

}  // namespace wordcount
