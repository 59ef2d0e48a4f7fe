#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace wordcount {

/// Integer polynomial coefficients, constant term first.
using IntPoly = std::vector<mpz_class>;

/// The e-th cyclotomic polynomial. Cached; safe to call from several threads.
const IntPoly& cyclotomic_polynomial(std::size_t e);

/// An element of Z[zeta_e], stored as sum coeffs[j] * zeta_e^j with 0 <= j < e.
/// The representation is not unique; comparisons reduce modulo Phi_e.
class Cyclotomic {
 public:
  Cyclotomic() : Cyclotomic(1) {}
  explicit Cyclotomic(std::size_t e);
  Cyclotomic(std::size_t e, std::vector<mpz_class> coeffs);

  static Cyclotomic integer(std::size_t e, const mpz_class& v);
  static Cyclotomic root(std::size_t e, long long k);

  std::size_t order() const noexcept { return coeffs_.size(); }
  const std::vector<mpz_class>& coeffs() const noexcept { return coeffs_; }

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const mpz_class& k);
  /// this += a * b, skipping zero coefficients.
  void add_product(const Cyclotomic& a, const Cyclotomic& b);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(Cyclotomic a, const mpz_class& k) { return a *= k; }
  Cyclotomic operator-() const;

  /// Complex conjugate: zeta^j -> zeta^(-j).
  Cyclotomic conj() const;
  /// Galois action zeta -> zeta^k, gcd(k, e) = 1.
  Cyclotomic galois(long long k) const;

  /// Remainder modulo Phi_e; length phi(e). This is the power-basis form.
  IntPoly reduced() const;
  bool is_zero() const;
  /// The value as an integer when it is one.
  std::optional<mpz_class> as_integer() const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  /// e.g. "2", "-1", "z^1+z^3" (z a primitive e-th root of unity).
  std::string to_string() const;

 private:
  std::vector<mpz_class> coeffs_;
};

/// Remainder of f modulo the monic polynomial m.
IntPoly poly_remainder(IntPoly f, const IntPoly& m);

}  // namespace wordcount
