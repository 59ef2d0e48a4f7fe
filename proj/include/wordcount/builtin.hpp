#pragma once

#include <string_view>
#include <vector>

#include "wordcount/group.hpp"

namespace wordcount {

// Builtin families:
//   cyclic(n)                  Z/n
//   dihedral(n)                dihedral group of order n (n even)
//   quaternion(n)              generalized quaternion of order n = 8*2^k
//   symmetric(n), alternating(n)   n <= 6
//   elementary_abelian(p,k)
//   extraspecial_plus(p), extraspecial_minus(p)   order p^3
//   heisenberg(p)              unitriangular 3x3 matrices over F_p
//   agl1(q)                    x -> ax+b over F_q, q a prime power <= 32
//   direct_product(A,B)        A and B are nested specs
//
// Integer-parameter families only; direct_product goes through build_builtin.
GroupTable builtin(std::string_view family, const std::vector<long long>& params);

/// Parses and builds "NAME(args)", e.g. "direct_product(quaternion(8),cyclic(2))".
/// A leading "builtin:" is accepted and ignored.
GroupTable build_builtin(std::string_view spec);

GroupTable direct_product(const GroupTable& a, const GroupTable& b);

/// Prime power test; returns the prime in *prime and exponent in *power.
bool is_prime_power(long long q, long long* prime = nullptr, int* power = nullptr);
bool is_prime(long long n);

}  // namespace wordcount
