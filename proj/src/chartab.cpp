#include "wordcount/chartab.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>

#include "wordcount/error.hpp"

namespace wordcount {

namespace {

using u64 = std::uint64_t;

// ---------------------------------------------------------------------------
// Arithmetic mod a prime below 2^31.

struct ModP {
  u64 p;
  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 mul(u64 a, u64 b) const { return a * b % p; }
  u64 pow(u64 a, u64 k) const {
    u64 r = 1;
    a %= p;
    while (k) {
      if (k & 1) r = mul(r, a);
      a = mul(a, a);
      k >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }
};

using Mat = std::vector<std::vector<u64>>;

bool prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

u64 primitive_root(const ModP& f) {
  std::vector<u64> factors;
  u64 m = f.p - 1;
  for (u64 d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) factors.push_back(m);
  for (u64 g = 2;; ++g) {
    bool ok = true;
    for (u64 q : factors) {
      if (f.pow(g, (f.p - 1) / q) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Mat& rows, const ModP& f) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    const u64 s = f.inv(rows[r][c]);
    for (auto& x : rows[r]) x = f.mul(x, s);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const u64 t = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] = f.sub(rows[i][j], f.mul(t, rows[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

// Basis of {y : M y = 0}.
Mat nullspace(Mat m, const ModP& f) {
  const std::size_t n = m.empty() ? 0 : m[0].size();
  const std::vector<std::size_t> pivots = rref(m, f);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  Mat basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<u64> y(n, 0);
    y[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) y[pivots[r]] = f.sub(0, m[r][free]);
    basis.push_back(std::move(y));
  }
  return basis;
}

// Characteristic polynomial det(xI - H), constant term first, via Hessenberg form.
std::vector<u64> charpoly(Mat h, const ModP& f) {
  const std::size_t n = h.size();
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h[i][m - 1] == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      std::swap(h[i], h[m]);
      for (auto& row : h) std::swap(row[i], row[m]);
    }
    const u64 s = f.inv(h[m][m - 1]);
    for (i = m + 1; i < n; ++i) {
      const u64 u = f.mul(h[i][m - 1], s);
      if (u == 0) continue;
      for (std::size_t j = 0; j < n; ++j) h[i][j] = f.sub(h[i][j], f.mul(u, h[m][j]));
      for (std::size_t j = 0; j < n; ++j) h[j][m] = f.add(h[j][m], f.mul(u, h[j][i]));
    }
  }
  std::vector<std::vector<u64>> p(n + 1);
  p[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    std::vector<u64> next(m + 1, 0);
    for (std::size_t d = 0; d < p[m - 1].size(); ++d) {
      next[d + 1] = f.add(next[d + 1], p[m - 1][d]);
      next[d] = f.sub(next[d], f.mul(h[m - 1][m - 1], p[m - 1][d]));
    }
    u64 t = 1;
    for (std::size_t i = 1; i < m; ++i) {
      t = f.mul(t, h[m - i][m - i - 1]);
      const u64 c = f.mul(t, h[m - i - 1][m - 1]);
      if (c == 0) continue;
      for (std::size_t d = 0; d < p[m - i - 1].size(); ++d) {
        next[d] = f.sub(next[d], f.mul(c, p[m - i - 1][d]));
      }
    }
    p[m] = std::move(next);
  }
  return p[n];
}

std::vector<u64> roots(const std::vector<u64>& poly, const ModP& f) {
  std::vector<u64> out;
  for (u64 x = 0; x < f.p; ++x) {
    u64 v = 0;
    for (std::size_t d = poly.size(); d-- > 0;) v = f.add(f.mul(v, x), poly[d]);
    if (v == 0) out.push_back(x);
  }
  return out;
}

[[noreturn]] void inconsistent(const std::string& what) {
  throw Error(Errc::internal_inconsistency, what);
}

bool same_classes(const ConjugacyData& a, const ConjugacyData& b) {
  return &a == &b || (a.class_of == b.class_of && a.reps == b.reps);
}

void require_same_classes(const ConjugacyData& a, const ConjugacyData& b) {
  if (!same_classes(a, b)) {
    throw Error(Errc::mismatched_group, "class functions live on different groups");
  }
}

std::size_t order_from_classes(const ConjugacyData& c) {
  return std::accumulate(c.sizes.begin(), c.sizes.end(), std::size_t{0});
}

Cyclotomic with_order(const Cyclotomic& c, std::size_t e) {
  if (e % c.order() != 0) inconsistent("cannot embed cyclotomic of order " + std::to_string(c.order()));
  const std::size_t step = e / c.order();
  std::vector<mpz_class> out(e, 0);
  for (std::size_t j = 0; j < c.order(); ++j) out[j * step] = c.coeffs()[j];
  return Cyclotomic(e, std::move(out));
}

// Simultaneous eigenspace decomposition of the class matrices; returns the
// normalized central character vectors mod p.
std::vector<std::vector<u64>> central_characters_mod_p(const GroupTable& g, const ConjugacyData& cl,
                                                       const ModP& f) {
  const std::size_t k = cl.count();
  struct Space {
    Mat basis;  // RREF rows
    std::vector<std::size_t> pivots;
  };
  Mat identity(k, std::vector<u64>(k, 0));
  for (std::size_t i = 0; i < k; ++i) identity[i][i] = 1;
  std::vector<Space> spaces;
  {
    Space whole{identity, {}};
    whole.pivots.resize(k);
    std::iota(whole.pivots.begin(), whole.pivots.end(), 0);
    spaces.push_back(std::move(whole));
  }

  for (std::size_t i = 1; i < k; ++i) {
    if (std::all_of(spaces.begin(), spaces.end(), [](const Space& s) { return s.basis.size() == 1; })) {
      break;
    }
    // A[j][l] = #{x in C_i : x^-1 g_l in C_j}
    Mat a(k, std::vector<u64>(k, 0));
    for (std::size_t l = 0; l < k; ++l) {
      for (Element x : cl.members[i]) ++a[cl.class_of[g.mul(g.inv(x), cl.reps[l])]][l];
    }
    for (auto& row : a) {
      for (auto& v : row) v %= f.p;
    }
    std::vector<Space> next;
    for (Space& s : spaces) {
      const std::size_t d = s.basis.size();
      if (d == 1) {
        next.push_back(std::move(s));
        continue;
      }
      // Restricted action in the coordinates given by the pivots.
      Mat r(d, std::vector<u64>(d, 0));
      for (std::size_t c = 0; c < d; ++c) {
        for (std::size_t row = 0; row < d; ++row) {
          u64 acc = 0;
          const auto& arow = a[s.pivots[row]];
          for (std::size_t l = 0; l < k; ++l) {
            if (s.basis[c][l]) acc = f.add(acc, f.mul(arow[l], s.basis[c][l]));
          }
          r[row][c] = acc;
        }
      }
      std::size_t total = 0;
      for (u64 lambda : roots(charpoly(r, f), f)) {
        Mat shifted = r;
        for (std::size_t j = 0; j < d; ++j) shifted[j][j] = f.sub(shifted[j][j], lambda);
        Mat sub;
        for (const auto& y : nullspace(shifted, f)) {
          std::vector<u64> v(k, 0);
          for (std::size_t c = 0; c < d; ++c) {
            if (y[c] == 0) continue;
            for (std::size_t l = 0; l < k; ++l) v[l] = f.add(v[l], f.mul(y[c], s.basis[c][l]));
          }
          sub.push_back(std::move(v));
        }
        Space part;
        part.pivots = rref(sub, f);
        part.basis = std::move(sub);
        total += part.basis.size();
        next.push_back(std::move(part));
      }
      if (total != d) inconsistent("class matrix not diagonalizable mod p");
    }
    spaces = std::move(next);
  }

  std::vector<std::vector<u64>> out;
  for (Space& s : spaces) {
    if (s.basis.size() != 1) inconsistent("eigenspaces did not split to dimension 1");
    std::vector<u64> v = s.basis[0];
    if (v[0] == 0) inconsistent("central character vanishes at the identity class");
    const u64 s0 = f.inv(v[0]);
    for (auto& x : v) x = f.mul(x, s0);
    out.push_back(std::move(v));
  }
  return out;
}

void require_table_classes(const CharacterTable& t, const ConjugacyData& c) {
  require_same_classes(t.classes(), c);
}

}  // namespace

// ---------------------------------------------------------------------------
// ClassFunction

ClassFunction::ClassFunction(std::shared_ptr<const ConjugacyData> classes,
                             std::vector<mpq_class> values)
    : classes_(std::move(classes)), values_(std::move(values)) {
  if (!classes_ || values_.size() != classes_->count()) {
    throw Error(Errc::mismatched_group, "class function has the wrong number of values");
  }
}

ClassFunction ClassFunction::from_elements(std::shared_ptr<const ConjugacyData> classes,
                                           const std::vector<mpq_class>& per_element) {
  if (per_element.size() != classes->class_of.size()) {
    throw Error(Errc::mismatched_group, "per-element values have the wrong length");
  }
  std::vector<mpq_class> values(classes->count());
  for (std::size_t j = 0; j < classes->count(); ++j) {
    values[j] = per_element[classes->reps[j]];
    for (Element x : classes->members[j]) {
      if (per_element[x] != values[j]) {
        inconsistent("values are not constant on class " + std::to_string(j));
      }
    }
  }
  return ClassFunction(std::move(classes), std::move(values));
}

mpq_class ClassFunction::total() const {
  mpq_class sum = 0;
  for (std::size_t j = 0; j < values_.size(); ++j) sum += values_[j] * classes_->sizes[j];
  return sum;
}

// ---------------------------------------------------------------------------
// CyclotomicClassFunction

CyclotomicClassFunction CyclotomicClassFunction::from(const ClassFunction& f, std::size_t e) {
  mpz_class den = 1;
  for (const auto& v : f.values()) den = lcm(den, v.get_den());
  CyclotomicClassFunction out{f.classes_ptr(), {}, den};
  for (const auto& v : f.values()) {
    const mpq_class scaled = v * den;
    out.values.push_back(Cyclotomic::integer(e, scaled.get_num()));
  }
  return out;
}

CyclotomicClassFunction CyclotomicClassFunction::conj() const {
  CyclotomicClassFunction out{classes, {}, denominator};
  for (const auto& v : values) out.values.push_back(v.conj());
  return out;
}

CyclotomicClassFunction operator*(const CyclotomicClassFunction& a,
                                  const CyclotomicClassFunction& b) {
  require_same_classes(*a.classes, *b.classes);
  CyclotomicClassFunction out{a.classes, {}, a.denominator * b.denominator};
  for (std::size_t j = 0; j < a.values.size(); ++j) out.values.push_back(a.values[j] * b.values[j]);
  return out;
}

ClassFunction CyclotomicClassFunction::to_rational() const {
  std::vector<mpq_class> out;
  for (const auto& v : values) {
    auto n = v.as_integer();
    if (!n) throw Error(Errc::not_rational, "class function value " + v.to_string() + " is irrational");
    mpq_class q(*n, denominator);
    q.canonicalize();
    out.push_back(q);
  }
  return ClassFunction(classes, std::move(out));
}

// ---------------------------------------------------------------------------
// CharacterTable

CharacterTable::CharacterTable(std::size_t group_order, std::size_t exponent,
                               std::shared_ptr<const ConjugacyData> classes,
                               std::vector<std::vector<Cyclotomic>> values)
    : group_order_(group_order),
      exponent_(exponent),
      classes_(std::move(classes)),
      values_(std::move(values)) {
  const std::size_t k = classes_->count();
  if (values_.size() != k) inconsistent("character table is not square");
  std::size_t sum_sq = 0;
  for (const auto& row : values_) {
    if (row.size() != k) inconsistent("character table is not square");
    for (const auto& v : row) {
      if (v.order() != exponent_) inconsistent("character value of the wrong order");
    }
    const auto d = row[0].as_integer();
    if (!d || *d <= 0 || !d->fits_ulong_p()) inconsistent("character degree is not a positive integer");
    const std::size_t deg = d->get_ui();
    if (group_order_ % deg != 0) inconsistent("character degree does not divide the group order");
    degrees_.push_back(deg);
    linear_.push_back(deg == 1);
    sum_sq += deg * deg;
  }
  if (sum_sq != group_order_) inconsistent("sum of squared degrees differs from the group order");
  verify_orthogonality(*this);
}

std::vector<std::size_t> CharacterTable::linear() const {
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < count(); ++r) {
    if (linear_[r]) out.push_back(r);
  }
  return out;
}

std::vector<std::size_t> CharacterTable::nonlinear() const {
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < count(); ++r) {
    if (!linear_[r]) out.push_back(r);
  }
  return out;
}

std::vector<std::size_t> CharacterTable::cd() const {
  std::vector<std::size_t> out = degrees_;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CyclotomicClassFunction CharacterTable::character(std::size_t chi) const {
  return {classes_, values_.at(chi), 1};
}

bool operator==(const CharacterTable& a, const CharacterTable& b) {
  if (a.group_order_ != b.group_order_ || a.exponent_ != b.exponent_ ||
      !same_classes(*a.classes_, *b.classes_) || a.count() != b.count()) {
    return false;
  }
  for (std::size_t r = 0; r < a.count(); ++r) {
    for (std::size_t j = 0; j < a.count(); ++j) {
      if (!(a.values_[r][j] == b.values_[r][j])) return false;
    }
  }
  return true;
}

void verify_orthogonality(const CharacterTable& t) {
  const std::size_t k = t.count();
  const std::size_t e = t.exponent();
  const auto& sizes = t.classes().sizes;
  const auto& inv = t.classes().inverse_class;
  // conj(chi(g)) = chi(g^-1); using the inverse class avoids a conjugation.
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t s = r; s < k; ++s) {
      Cyclotomic acc(e);
      for (std::size_t j = 0; j < k; ++j) {
        Cyclotomic term = t.value(r, j) * t.value(s, inv[j]);
        term *= mpz_class(static_cast<unsigned long>(sizes[j]));
        acc += term;
      }
      const mpz_class want = r == s ? mpz_class(static_cast<unsigned long>(t.group_order())) : 0;
      if (!(acc == Cyclotomic::integer(e, want))) {
        inconsistent("row orthogonality fails for characters " + std::to_string(r) + ", " +
                     std::to_string(s));
      }
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      Cyclotomic acc(e);
      for (std::size_t r = 0; r < k; ++r) acc.add_product(t.value(r, i), t.value(r, inv[j]));
      const mpz_class want =
          i == j ? mpz_class(static_cast<unsigned long>(t.group_order() / sizes[i])) : 0;
      if (!(acc == Cyclotomic::integer(e, want))) {
        inconsistent("column orthogonality fails for classes " + std::to_string(i) + ", " +
                     std::to_string(j));
      }
    }
  }
}

std::uint64_t dixon_prime(std::size_t order, std::size_t exponent) {
  const u64 e = exponent;
  for (u64 p = e + 1;; p += e) {
    if (p * p > 4 * static_cast<u64>(order) && prime_u64(p)) return p;
  }
}

CharacterTable character_table(const GroupTable& g) {
  const auto classes = conjugacy_classes(g);
  const ConjugacyData& cl = *classes;
  const std::size_t n = g.order();
  const std::size_t k = cl.count();
  const std::size_t e = g.exponent();
  const ModP f{dixon_prime(n, e)};

  const auto omegas = central_characters_mod_p(g, cl, f);
  if (omegas.size() != k) inconsistent("wrong number of central characters");

  // Power maps: pow_class[l][s] = class of rep_l^s.
  std::vector<std::vector<std::size_t>> pow_class(k);
  for (std::size_t l = 0; l < k; ++l) {
    Element x = g.identity();
    const std::size_t o = g.element_order(cl.reps[l]);
    for (std::size_t s = 0; s < o; ++s) {
      pow_class[l].push_back(cl.class_of[x]);
      x = g.mul(x, cl.reps[l]);
    }
  }

  const u64 z = f.pow(primitive_root(f), (f.p - 1) / e);
  std::vector<std::vector<Cyclotomic>> rows;
  for (const auto& v : omegas) {
    // chi(1)^2 = |G| / sum_l v_l v_{l*} / |C_l|
    u64 s = 0;
    for (std::size_t l = 0; l < k; ++l) {
      s = f.add(s, f.mul(f.mul(v[l], v[cl.inverse_class[l]]), f.inv(cl.sizes[l] % f.p)));
    }
    if (s == 0) inconsistent("degree equation degenerate mod p");
    const u64 d2 = f.mul(n % f.p, f.inv(s));
    u64 d = 0;
    for (u64 c = 1; c * c <= n; ++c) {
      if (n % c == 0 && c * c % f.p == d2) {
        d = c;
        break;
      }
    }
    if (d == 0) inconsistent("no admissible character degree");
    std::vector<u64> chi(k);
    for (std::size_t l = 0; l < k; ++l) chi[l] = f.mul(f.mul(v[l], d), f.inv(cl.sizes[l] % f.p));

    std::vector<Cyclotomic> row;
    for (std::size_t l = 0; l < k; ++l) {
      const std::size_t o = pow_class[l].size();
      const std::size_t step = e / o;
      const u64 w_inv = f.inv(f.pow(z, step));  // inverse of a primitive o-th root
      const u64 o_inv = f.inv(o % f.p);
      std::vector<mpz_class> coeffs(e, 0);
      for (std::size_t u = 0; u < o; ++u) {
        // multiplicity of eigenvalue zeta_o^u
        u64 acc = 0;
        const u64 wu = f.pow(w_inv, u);
        u64 wus = 1;
        for (std::size_t s = 0; s < o; ++s) {
          acc = f.add(acc, f.mul(chi[pow_class[l][s]], wus));
          wus = f.mul(wus, wu);
        }
        const u64 m = f.mul(acc, o_inv);
        if (m > d) inconsistent("eigenvalue multiplicity out of range");
        coeffs[u * step] = static_cast<unsigned long>(m);
      }
      row.emplace_back(e, std::move(coeffs));
    }
    rows.push_back(std::move(row));
  }

  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    const mpz_class& da = a[0].coeffs()[0];
    const mpz_class& db = b[0].coeffs()[0];
    if (da != db) return da < db;
    for (std::size_t j = 0; j < a.size(); ++j) {
      const auto& ca = a[j].coeffs();
      const auto& cb = b[j].coeffs();
      if (ca != cb) return std::lexicographical_compare(cb.begin(), cb.end(), ca.begin(), ca.end());
    }
    return false;
  });

  CharacterTable table(n, e, classes, std::move(rows));
  const std::size_t derived = commutator_subgroup(g).size();
  if (table.linear().size() != n / derived) inconsistent("linear characters differ from |G:G'|");
  return table;
}

// ---------------------------------------------------------------------------
// Cache

std::filesystem::path default_cache_dir() {
  if (const char* env = std::getenv("WORDCOUNT_CACHE"); env && *env) return env;
  return ".wordcount-cache";
}

std::string serialize_table(const CharacterTable& t) {
  std::ostringstream out;
  const std::size_t k = t.count();
  out << "chartab e=" << t.exponent() << " k=" << k << "\n";
  for (std::size_t j = 0; j < k; ++j) {
    out << "class " << t.classes().reps[j] << " " << t.classes().sizes[j] << "\n";
  }
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t j = 0; j < k; ++j) {
      if (j) out << ",";
      const auto& c = t.value(r, j).coeffs();
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out << ":";
        out << c[i].get_str();
      }
    }
    out << "\n";
  }
  return out.str();
}

CharacterTable parse_table(const std::string& text, const GroupTable& g) {
  const auto classes = conjugacy_classes(g);
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& why) -> void {
    throw Error(Errc::parse_error, "line " + std::to_string(lineno) + ": " + why);
  };
  auto next_line = [&]() {
    if (!std::getline(in, line)) {
      ++lineno;
      fail("unexpected end of input");
    }
    ++lineno;
  };
  next_line();
  std::size_t e = 0, k = 0;
  if (std::sscanf(line.c_str(), "chartab e=%zu k=%zu", &e, &k) != 2) fail("bad header");
  if (e != g.exponent() || k != classes->count()) fail("header does not match the group");
  for (std::size_t j = 0; j < k; ++j) {
    next_line();
    std::size_t rep = 0, size = 0;
    if (std::sscanf(line.c_str(), "class %zu %zu", &rep, &size) != 2) fail("bad class line");
    if (rep != classes->reps[j] || size != classes->sizes[j]) fail("class does not match the group");
  }
  std::vector<std::vector<Cyclotomic>> rows;
  for (std::size_t r = 0; r < k; ++r) {
    next_line();
    std::vector<Cyclotomic> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      std::vector<mpz_class> coeffs;
      std::istringstream parts(cell);
      std::string part;
      while (std::getline(parts, part, ':')) {
        mpz_class v;
        if (v.set_str(part, 10) != 0) fail("bad coefficient '" + part + "'");
        coeffs.push_back(v);
      }
      if (coeffs.size() != e) fail("coefficient vector of the wrong length");
      row.emplace_back(e, std::move(coeffs));
    }
    if (row.size() != k) fail("row of the wrong length");
    rows.push_back(std::move(row));
  }
  return CharacterTable(g.order(), e, classes, std::move(rows));
}

CharacterTable cached_character_table(const GroupTable& g, const std::filesystem::path& dir) {
  char name[32];
  std::snprintf(name, sizeof name, "%016llx.chartab",
                static_cast<unsigned long long>(g.table_hash()));
  const std::filesystem::path file = dir / name;
  if (std::ifstream in{file}) {
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      return parse_table(buf.str(), g);
    } catch (const Error&) {
      // stale or corrupt entry: recompute below
    }
  }
  CharacterTable t = character_table(g);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  std::ofstream out(file);
  if (out) out << serialize_table(t);
  return t;
}

// ---------------------------------------------------------------------------
// Inner products and friends

mpq_class inner_product(const CyclotomicClassFunction& a, const CyclotomicClassFunction& b) {
  require_same_classes(*a.classes, *b.classes);
  const ConjugacyData& cl = *a.classes;
  const std::size_t e = a.values.at(0).order();
  Cyclotomic acc(e);
  for (std::size_t j = 0; j < cl.count(); ++j) {
    Cyclotomic term = a.values[j] * b.values[j].conj();
    term *= mpz_class(static_cast<unsigned long>(cl.sizes[j]));
    acc += term;
  }
  const auto num = acc.as_integer();
  if (!num) throw Error(Errc::not_rational, "inner product " + acc.to_string() + " is irrational");
  mpq_class q(*num, a.denominator * b.denominator *
                        mpz_class(static_cast<unsigned long>(order_from_classes(cl))));
  q.canonicalize();
  return q;
}

mpq_class inner_product(const ClassFunction& a, const ClassFunction& b) {
  require_same_classes(a.classes(), b.classes());
  mpq_class sum = 0;
  for (std::size_t j = 0; j < a.size(); ++j) sum += a[j] * b[j] * a.classes().sizes[j];
  return sum / order_from_classes(a.classes());
}

mpq_class inner_product(const CharacterTable& t, const ClassFunction& f, std::size_t chi) {
  require_table_classes(t, f.classes());
  return inner_product(CyclotomicClassFunction::from(f, t.exponent()), t.character(chi));
}

mpq_class inner_product(const CharacterTable& t, std::size_t chi, std::size_t psi) {
  return inner_product(t.character(chi), t.character(psi));
}

mpq_class inner_product_on(const Subgroup& h, const CyclotomicClassFunction& a,
                           const CyclotomicClassFunction& b) {
  require_same_classes(*a.classes, *b.classes);
  const ConjugacyData& cl = *a.classes;
  if (h.parent_order() != cl.class_of.size()) {
    throw Error(Errc::mismatched_group, "subgroup of a different group");
  }
  std::vector<std::size_t> meet(cl.count(), 0);
  for (Element x : h.members()) ++meet[cl.class_of[x]];
  const std::size_t e = a.values.at(0).order();
  Cyclotomic acc(e);
  for (std::size_t j = 0; j < cl.count(); ++j) {
    if (meet[j] == 0) continue;
    Cyclotomic term = a.values[j] * b.values[j].conj();
    term *= mpz_class(static_cast<unsigned long>(meet[j]));
    acc += term;
  }
  const auto num = acc.as_integer();
  if (!num) throw Error(Errc::not_rational, "inner product " + acc.to_string() + " is irrational");
  mpq_class q(*num, a.denominator * b.denominator * mpz_class(static_cast<unsigned long>(h.size())));
  q.canonicalize();
  return q;
}

mpq_class inner_product_on(const Subgroup& h, const ClassFunction& a, const ClassFunction& b) {
  require_same_classes(a.classes(), b.classes());
  if (h.parent_order() != a.classes().class_of.size()) {
    throw Error(Errc::mismatched_group, "subgroup of a different group");
  }
  mpq_class sum = 0;
  for (Element x : h.members()) sum += a.at_element(x) * b.at_element(x);
  return sum / h.size();
}

CyclotomicClassFunction restrict_to(const CyclotomicClassFunction& f,
                                    const MaterializedSubgroup& h,
                                    std::shared_ptr<const ConjugacyData> sub_classes) {
  CyclotomicClassFunction out{sub_classes, {}, f.denominator};
  for (Element rep : sub_classes->reps) {
    out.values.push_back(f.values[f.classes->class_of[h.embedding[rep]]]);
  }
  return out;
}

CyclotomicClassFunction inflate(const CyclotomicClassFunction& f, const Quotient& q,
                                std::shared_ptr<const ConjugacyData> g_classes,
                                std::size_t exponent) {
  CyclotomicClassFunction out{g_classes, {}, f.denominator};
  for (Element rep : g_classes->reps) {
    out.values.push_back(with_order(f.values[f.classes->class_of[q.projection[rep]]], exponent));
  }
  return out;
}

IrrPartition irr_given(const GroupTable& g, const Subgroup& n, const CharacterTable& t) {
  if (!is_normal(g, n)) throw Error(Errc::not_normal, "irr_given needs a normal subgroup");
  if (n.parent_order() != g.order() || t.group_order() != g.order()) {
    throw Error(Errc::mismatched_group, "subgroup or table of a different group");
  }
  std::vector<bool> in_n(t.count(), false);
  for (Element x : n.members()) in_n[t.classes().class_of[x]] = true;
  IrrPartition out;
  for (std::size_t r = 0; r < t.count(); ++r) {
    const Cyclotomic deg = Cyclotomic::integer(t.exponent(), t.degree(r));
    bool kernel_contains = true;
    for (std::size_t j = 0; j < t.count() && kernel_contains; ++j) {
      if (in_n[j] && !(t.value(r, j) == deg)) kernel_contains = false;
    }
    (kernel_contains ? out.inflated : out.given).push_back(r);
  }
  return out;
}

Cyclotomic central_character(const CharacterTable& t, std::size_t chi, std::size_t cls) {
  const std::size_t e = t.exponent();
  const mpz_class size = static_cast<unsigned long>(t.classes().sizes[cls]);
  const mpz_class deg = static_cast<unsigned long>(t.degree(chi));
  // The power basis is an integral basis of Z[zeta_e], so divisibility can be
  // read off the reduced coefficients.
  IntPoly red = (t.value(chi, cls) * size).reduced();
  std::vector<mpz_class> coeffs(e, 0);
  for (std::size_t j = 0; j < red.size(); ++j) {
    if (!mpz_divisible_p(red[j].get_mpz_t(), deg.get_mpz_t())) {
      throw Error(Errc::non_integral, "central character value is not an algebraic integer");
    }
    coeffs[j] = red[j] / deg;
  }
  return Cyclotomic(e, std::move(coeffs));
}

mpz_class frobenius_schur_indicator(const GroupTable& g, const CharacterTable& t,
                                    std::size_t chi) {
  const ConjugacyData& cl = t.classes();
  Cyclotomic acc(t.exponent());
  for (std::size_t j = 0; j < cl.count(); ++j) {
    const Element sq = g.mul(cl.reps[j], cl.reps[j]);
    Cyclotomic term = t.value(chi, cl.class_of[sq]);
    term *= mpz_class(static_cast<unsigned long>(cl.sizes[j]));
    acc += term;
  }
  const auto sum = acc.as_integer();
  if (!sum || !mpz_divisible_ui_p(sum->get_mpz_t(), g.order())) {
    inconsistent("Frobenius-Schur indicator is not an integer");
  }
  return *sum / static_cast<unsigned long>(g.order());
}

Subgroup vanishing_off_subgroup(const GroupTable& g, const CharacterTable& t) {
  const ConjugacyData& cl = t.classes();
  std::vector<Element> support;
  for (std::size_t j = 0; j < cl.count(); ++j) {
    for (std::size_t r : t.nonlinear()) {
      if (!t.value(r, j).is_zero()) {
        support.insert(support.end(), cl.members[j].begin(), cl.members[j].end());
        break;
      }
    }
  }
  return Subgroup::generated_by(g, support);
}

bool is_generalized_camina_pair(const GroupTable& g, const Subgroup& n, const CharacterTable& t) {
  if (!is_normal(g, n)) throw Error(Errc::not_normal, "GCP test needs a normal subgroup");
  return vanishing_off_subgroup(g, t).is_subset_of(n);
}

void complete_report(GroupClassReport& r, const GroupTable& g, const CharacterTable& t) {
  r.cd = t.cd();
  r.unique_nonlinear = t.nonlinear().size() == 1;
  std::vector<Subgroup> targets;
  if (!r.is_abelian) {
    const Subgroup v = vanishing_off_subgroup(g, t);
    for (Subgroup& n : normal_subgroups_between(g, v, Subgroup::whole(g))) {
      if (!n.is_whole()) targets.push_back(std::move(n));
    }
    r.is_vz = v.is_subset_of(center(g));
  }
  r.gcp_targets = std::move(targets);
}

}  // namespace wordcount
