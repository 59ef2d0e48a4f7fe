#include "wordcount/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "wordcount/error.hpp"

namespace wordcount {

namespace {

std::mutex& phi_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::size_t, std::unique_ptr<IntPoly>>& phi_cache() {
  static std::map<std::size_t, std::unique_ptr<IntPoly>> cache;
  return cache;
}

// Exact quotient of f by the monic polynomial m.
IntPoly poly_divide(IntPoly f, const IntPoly& m) {
  const std::size_t dm = m.size() - 1;
  if (f.size() <= dm) return {0};
  IntPoly q(f.size() - dm);
  for (std::size_t i = f.size(); i-- > dm;) {
    const mpz_class c = f[i];
    q[i - dm] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dm; ++j) f[i - dm + j] -= c * m[j];
  }
  return q;
}

IntPoly compute_phi(std::size_t e) {
  IntPoly f(e + 1, 0);
  f[0] = -1;
  f[e] = 1;
  for (std::size_t d = 1; d < e; ++d) {
    if (e % d == 0) f = poly_divide(f, cyclotomic_polynomial(d));
  }
  return f;
}

void require_same_order(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order() != b.order()) {
    throw Error(Errc::mismatched_group, "cyclotomics of different orders " +
                                            std::to_string(a.order()) + " and " +
                                            std::to_string(b.order()));
  }
}

}  // namespace

const IntPoly& cyclotomic_polynomial(std::size_t e) {
  if (e == 0) throw Error(Errc::unsupported_parameter, "cyclotomic order must be positive");
  {
    std::lock_guard lock(phi_mutex());
    auto it = phi_cache().find(e);
    if (it != phi_cache().end()) return *it->second;
  }
  // Computed outside the lock: the recursion re-enters for divisors.
  IntPoly phi = compute_phi(e);
  std::lock_guard lock(phi_mutex());
  auto& slot = phi_cache()[e];
  if (!slot) slot = std::make_unique<IntPoly>(std::move(phi));
  return *slot;
}

IntPoly poly_remainder(IntPoly f, const IntPoly& m) {
  const std::size_t dm = m.size() - 1;
  for (std::size_t i = f.size(); i-- > dm;) {
    if (f[i] == 0) continue;
    const mpz_class c = f[i];
    for (std::size_t j = 0; j <= dm; ++j) f[i - dm + j] -= c * m[j];
  }
  f.resize(dm);
  return f;
}

Cyclotomic::Cyclotomic(std::size_t e) : coeffs_(e == 0 ? 1 : e, 0) {}

Cyclotomic::Cyclotomic(std::size_t e, std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != e || e == 0) {
    throw Error(Errc::unsupported_parameter, "cyclotomic coefficient vector must have length e");
  }
}

Cyclotomic Cyclotomic::integer(std::size_t e, const mpz_class& v) {
  Cyclotomic c(e);
  c.coeffs_[0] = v;
  return c;
}

Cyclotomic Cyclotomic::root(std::size_t e, long long k) {
  Cyclotomic c(e);
  const long long m = static_cast<long long>(e);
  c.coeffs_[static_cast<std::size_t>(((k % m) + m) % m)] = 1;
  return c;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  require_same_order(*this, o);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += o.coeffs_[j];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  require_same_order(*this, o);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= o.coeffs_[j];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const mpz_class& k) {
  for (auto& c : coeffs_) c *= k;
  return *this;
}

void Cyclotomic::add_product(const Cyclotomic& a, const Cyclotomic& b) {
  require_same_order(a, b);
  require_same_order(*this, a);
  const std::size_t e = coeffs_.size();
  for (std::size_t i = 0; i < e; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < e; ++j) {
      if (b.coeffs_[j] == 0) continue;
      const std::size_t t = i + j < e ? i + j : i + j - e;
      coeffs_[t] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  Cyclotomic out(a.order());
  out.add_product(a, b);
  return out;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Cyclotomic Cyclotomic::conj() const { return galois(-1); }

Cyclotomic Cyclotomic::galois(long long k) const {
  const long long e = static_cast<long long>(coeffs_.size());
  Cyclotomic out(coeffs_.size());
  for (long long j = 0; j < e; ++j) {
    const long long t = (((j * k) % e) + e) % e;
    out.coeffs_[static_cast<std::size_t>(t)] += coeffs_[static_cast<std::size_t>(j)];
  }
  return out;
}

IntPoly Cyclotomic::reduced() const {
  return poly_remainder(coeffs_, cyclotomic_polynomial(coeffs_.size()));
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : reduced()) {
    if (c != 0) return false;
  }
  return true;
}

std::optional<mpz_class> Cyclotomic::as_integer() const {
  const IntPoly r = reduced();
  for (std::size_t j = 1; j < r.size(); ++j) {
    if (r[j] != 0) return std::nullopt;
  }
  return r.empty() ? mpz_class(0) : r[0];
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order() != b.order()) return false;
  return (a - b).is_zero();
}

std::string Cyclotomic::to_string() const {
  if (auto v = as_integer()) return v->get_str();
  std::string out;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    const mpz_class& c = coeffs_[j];
    if (c == 0) continue;
    std::string term;
    if (j == 0) {
      term = mpz_class(abs(c)).get_str();
    } else {
      if (abs(c) != 1) term = mpz_class(abs(c)).get_str() + "*";
      term += "z^" + std::to_string(j);
    }
    if (out.empty()) {
      out = (c < 0 ? "-" : "") + term;
    } else {
      out += (c < 0 ? "-" : "+") + term;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace wordcount
