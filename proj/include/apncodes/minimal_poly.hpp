#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"
#include "field.hpp"
#include "poly.hpp"

namespace apncodes {

/// Minimal polynomial of alpha^j over GF(q): the product of (x - alpha^i) over
/// the q-cyclotomic coset of j. Negative j is taken mod n.
inline Poly minimal_polynomial(std::int64_t j, const FieldCtx& ctx) {
  const std::uint32_t n = ctx.n();
  std::int64_t r = j % static_cast<std::int64_t>(n);
  if (r < 0) r += n;
  const auto start = static_cast<std::uint32_t>(r);

  std::vector<FieldElement> acc{FieldCtx::one()};
  std::uint32_t e = start;
  do {
    // acc <- acc * (x - alpha^e)
    FieldElement root = ctx.neg(FieldElement{e});
    std::vector<FieldElement> next(acc.size() + 1, FieldCtx::zero());
    for (std::size_t i = 0; i < acc.size(); ++i) {
      next[i + 1] = ctx.add(next[i + 1], acc[i]);
      next[i] = ctx.add(next[i], ctx.mul(acc[i], root));
    }
    acc = std::move(next);
    e = static_cast<std::uint32_t>((std::uint64_t{e} * ctx.q()) % n);
  } while (e != start);

  std::vector<Scalar> coeffs(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) {
    if (!ctx.in_base_field(acc[i]))
      throw Error("minimal polynomial of alpha^" + std::to_string(start) + " has a coefficient outside GF(q)");
    coeffs[i] = ctx.to_scalar(acc[i]);
  }
  return Poly(ctx.q(), std::move(coeffs));
}

/// f(beta) for f over GF(q) and beta in GF(q^m), by Horner's rule.
inline FieldElement evaluate(const Poly& f, FieldElement beta, const FieldCtx& ctx) {
  FieldElement acc = FieldCtx::zero();
  for (int i = f.degree(); i >= 0; --i)
    acc = ctx.add(ctx.mul(acc, beta), ctx.from_scalar(f[static_cast<std::size_t>(i)]));
  return acc;
}

}  // namespace apncodes
