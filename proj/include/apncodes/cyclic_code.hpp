#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cyclotomy.hpp"
#include "errors.hpp"
#include "field.hpp"
#include "minimal_poly.hpp"
#include "poly.hpp"
#include "sequence.hpp"

namespace apncodes {

/// Cyclic code of length n over GF(q) with monic generator g | x^n - 1.
struct CyclicCode {
  std::uint32_t n = 0;
  Scalar q = 2;
  Poly generator;
  std::size_t k = 0;
  /// Coset leaders j with m_{alpha^j} | g, ascending.
  std::vector<std::uint32_t> zero_set;

  std::size_t redundancy() const { return n - k; }
  /// h(x) = (x^n - 1) / g(x).
  Poly parity_check() const { return exact_div(Poly::x_n_minus_one(q, n), generator); }
};

/// Leaders j with g(alpha^j) = 0.
inline std::vector<std::uint32_t> zero_set_of(const Poly& g, const FieldCtx& ctx, const CosetTable& cosets) {
  std::vector<std::uint32_t> out;
  if (g.degree() <= 0) return out;
  for (const auto& c : cosets.cosets())
    if (evaluate(g, FieldElement{c.leader}, ctx).is_zero()) out.push_back(c.leader);
  return out;
}

/// Wraps a generator; throws NonExactDivision unless g divides x^n - 1.
inline CyclicCode make_code(const Poly& generator, const FieldCtx& ctx, const CosetTable* cosets = nullptr) {
  if (generator.q() != ctx.q()) throw InvalidArgs("generator over a different base field");
  CyclicCode c;
  c.n = ctx.n();
  c.q = ctx.q();
  c.generator = generator.monic();
  (void)exact_div(Poly::x_n_minus_one(c.q, c.n), c.generator);
  c.k = c.n - static_cast<std::size_t>(c.generator.degree());
  CosetTable local;
  if (!cosets) {
    local = build_cosets(ctx.q(), ctx.n());
    cosets = &local;
  }
  c.zero_set = zero_set_of(c.generator, ctx, *cosets);
  std::size_t covered = 0;
  for (auto j : c.zero_set) covered += cosets->size_of(j);
  if (covered != static_cast<std::size_t>(c.generator.degree()))
    throw Error("generator roots are not a union of full cosets");
  return c;
}

/// The code whose generator is the minimal polynomial of s.
inline CyclicCode code_from_sequence(const PeriodicSequence& s, const FieldCtx& ctx,
                                     const CosetTable* cosets = nullptr) {
  if (s.period() != ctx.n()) throw PeriodMismatch("sequence period differs from field period");
  return make_code(minimal_poly_gcd(s).minimal, ctx, cosets);
}

}  // namespace apncodes
