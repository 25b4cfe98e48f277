#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "errors.hpp"

namespace apncodes {

using Scalar = std::uint32_t;

inline bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

/// Distinct prime factors of v, ascending.
inline std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(d);
      while (v % d == 0) v /= d;
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

inline std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp--) r *= base;
  return r;
}

inline Scalar mod_add(Scalar a, Scalar b, Scalar q) {
  Scalar s = a + b;
  return s >= q ? s - q : s;
}

inline Scalar mod_sub(Scalar a, Scalar b, Scalar q) { return a >= b ? a - b : a + q - b; }

inline Scalar mod_neg(Scalar a, Scalar q) { return a == 0 ? 0 : q - a; }

inline Scalar mod_mul(Scalar a, Scalar b, Scalar q) {
  return static_cast<Scalar>((static_cast<std::uint64_t>(a) * b) % q);
}

inline Scalar mod_inv(Scalar a, Scalar q) {
  if (a % q == 0) throw DivisionByZero("inverse of 0 in GF(" + std::to_string(q) + ")");
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = q, new_r = a % q;
  while (new_r != 0) {
    std::int64_t quot = r / new_r;
    t = t - quot * new_t;
    std::swap(t, new_t);
    r = r - quot * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += q;
  return static_cast<Scalar>(t);
}

/// Reduce a possibly negative integer into [0, q).
inline Scalar mod_reduce(std::int64_t v, Scalar q) {
  std::int64_t r = v % static_cast<std::int64_t>(q);
  return static_cast<Scalar>(r < 0 ? r + q : r);
}

/// The gate function N_p(i): 0 when p divides i, 1 otherwise.
inline int n_p(std::uint64_t i, std::uint64_t p) { return i % p == 0 ? 0 : 1; }

}  // namespace apncodes
