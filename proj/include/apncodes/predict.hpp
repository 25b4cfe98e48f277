#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "cyclotomy.hpp"
#include "errors.hpp"
#include "field.hpp"
#include "functions.hpp"
#include "minimal_poly.hpp"
#include "poly.hpp"

namespace apncodes {

namespace detail {

inline void require_covered(const FunctionSpec& f, Scalar q, unsigned m) {
  auto rep = validate_params(f.family, q, m, f.h, f.kappa);
  if (!rep.valid) throw InvalidParams(std::string(family_name(f.family)) + ": " + rep.problems.front());
  if (!rep.theorem_covered)
    throw TheoremPreconditionUnmet(std::string(family_name(f.family)) + ": " + rep.uncovered.front());
}

inline std::uint64_t p2(unsigned e) { return std::uint64_t{1} << e; }

// Odd a in [first, 2^t - 1] with odd epsilon_a^(t).
inline void add_odd_eps(std::vector<std::uint64_t>& out, unsigned t, std::uint64_t first) {
  for (std::uint64_t a = first; a < p2(t); a += 2)
    if (epsilon(a, t) % 2 == 1) out.push_back(a);
}

// Shifted block {i + shift : i in [first, 2^h)} plus odd-epsilon exponents; shared by
// the Niho and Kasami shapes, where dropping i = 0 also drops a = 1.
inline void add_shifted_block(std::vector<std::uint64_t>& out, unsigned h, std::uint64_t shift, bool keep_first) {
  for (std::uint64_t i = keep_first ? 0 : 1; i < p2(h); ++i) out.push_back(i + shift);
  add_odd_eps(out, h, keep_first ? 1 : 3);
}

inline std::uint64_t max_bit(std::uint64_t mask) {
  std::uint64_t b = 0;
  while (mask >>= 1) ++b;
  return b;
}

}  // namespace detail

/// Exponents j such that the predicted generator is the product of m_{alpha^{-j}}
/// (j = 0 contributes x - 1). Throws TheoremPreconditionUnmet outside proved ranges.
inline std::vector<std::uint64_t> predicted_exponents(const FunctionSpec& f, const FieldCtx& ctx) {
  const Scalar q = ctx.q();
  const unsigned m = ctx.m();
  detail::require_covered(f, q, m);
  using detail::p2;
  const std::uint64_t p = q;
  std::vector<std::uint64_t> e;
  auto one_if = [&](bool b) {
    if (b) e.push_back(0);
  };
  switch (f.family) {
    case Family::Inverse: {
      auto stats = coset_stats(build_cosets(2, ctx.n()), m);
      for (std::size_t i = 0; i < stats.leaders.size(); ++i)
        if (stats.nu[i] == 1) e.push_back(stats.leaders[i]);
      break;
    }
    case Family::Gold:
      e = {0, p2(f.h) + 1};
      break;
    case Family::Welch: {
      const unsigned t = (m - 1) / 2;
      e = {0, 1, 3, p2(t) + 1, p2(t) + 2, p2(t) + 3};
      break;
    }
    case Family::TwoToHMinusOne:
      one_if(n_p(m, 2));
      detail::add_odd_eps(e, f.h, 1);
      break;
    case Family::Niho1: {
      const unsigned h = (m - 1) / 4;
      e.push_back(0);
      detail::add_shifted_block(e, h, p2(2 * h), m % 8 == 1);
      break;
    }
    case Family::Kasami:
      // The constant term is Tr(1) = m mod 2.
      one_if(n_p(m, 2));
      detail::add_shifted_block(e, f.h, p2(m - f.h), f.h % 2 == 0);
      break;
    case Family::Square:
      one_if(n_p(m, p));
      e.insert(e.end(), {1, 2});
      break;
    case Family::DembowskiOstrom:
      one_if(n_p(m, p));
      e.insert(e.end(), {1, ipow(p, f.kappa) + 1});
      break;
    case Family::Trinomial: {
      auto fl = trinomial_flags(f.u, ctx);
      one_if(fl.delta == 1);
      e.push_back(1);
      if (!fl.u6u_zero) e.push_back(2);
      e.push_back(10);
      break;
    }
    case Family::QhGeometric: {
      one_if(n_p(m, p));
      if (n_p(f.h, p)) e.push_back(1);
      const unsigned bits = f.h - 1;
      for (std::uint64_t mask = 1; mask < p2(bits); ++mask) {
        const std::uint64_t u = detail::max_bit(mask) + 1;
        if (!n_p(f.h - u, p)) continue;
        std::uint64_t x = 1;
        for (unsigned i = 0; i < bits; ++i)
          if (mask >> i & 1) x += ipow(p, i + 1);
        e.push_back(x);
      }
      break;
    }
    case Family::CoulterMathews: {
      one_if(n_p(m, 3));
      if (n_p(f.h + 1, 3)) e.push_back(1);
      e.push_back(2);
      const unsigned bits = f.h - 1;
      for (std::uint64_t mask = 1; mask < p2(bits); ++mask) {
        std::uint64_t x = 0;
        for (unsigned i = 0; i < bits; ++i)
          if (mask >> i & 1) x += ipow(3, i + 1);
        e.push_back(2 + x);
        const std::uint64_t u = detail::max_bit(mask) + 1;
        if (n_p(f.h - u + 1, 3)) e.push_back(1 + x);
      }
      break;
    }
    case Family::Cube:
      one_if(n_p(m, p));
      e.insert(e.end(), {1, 2, 3});
      break;
    default:
      throw TheoremPreconditionUnmet(std::string(family_name(f.family)) + ": no closed form");
  }
  return e;
}

/// Product of m_{alpha^{-j}} over the given exponents; each must lie in its own coset.
inline Poly product_of_minimal_polys(const std::vector<std::uint64_t>& exps, const FieldCtx& ctx) {
  std::set<std::uint32_t> seen;
  std::vector<Poly> factors;
  auto cos = build_cosets(ctx.q(), ctx.n());
  for (auto j : exps) {
    const auto neg = -static_cast<std::int64_t>(j % ctx.n());
    if (!seen.insert(cos.leader_of(neg)).second)
      throw Error("exponent " + std::to_string(j) + " repeats a coset already in the product");
    factors.push_back(minimal_polynomial(neg, ctx));
  }
  return product(ctx.q(), factors);
}

inline Poly predicted_generator(const FunctionSpec& f, const FieldCtx& ctx) {
  return product_of_minimal_polys(predicted_exponents(f, ctx), ctx);
}

/// Closed-form linear span, evaluated from the span formulas rather than from the generator.
inline std::uint64_t predicted_span(const FunctionSpec& f, const FieldCtx& ctx) {
  const Scalar q = ctx.q();
  const std::uint64_t m = ctx.m();
  detail::require_covered(f, q, ctx.m());
  using detail::p2;
  const std::int64_t sm = static_cast<std::int64_t>(m);
  auto sign = [](std::uint64_t e) -> std::int64_t { return e % 2 == 0 ? 1 : -1; };  // (-1)^e
  switch (f.family) {
    case Family::Inverse: return (std::uint64_t{ctx.n()} + 1) / 2;
    case Family::Gold: return m + 1;
    case Family::Welch: return 5 * m + 1;
    case Family::TwoToHMinusOne: {
      const std::int64_t h = f.h;
      std::int64_t v = sm * (static_cast<std::int64_t>(p2(f.h)) + sign(h - 1)) + (m % 2 == 1 ? 3 : 0);
      return static_cast<std::uint64_t>(v / 3);
    }
    case Family::Niho1: {
      const std::int64_t h = (sm - 1) / 4;
      std::int64_t inner = static_cast<std::int64_t>(p2((ctx.m() + 7) / 4)) + sign(static_cast<std::uint64_t>(h - 1));
      if (m % 8 == 5) inner -= 6;
      return static_cast<std::uint64_t>((sm * inner + 3) / 3);
    }
    case Family::Kasami: {
      const std::int64_t h = f.h;
      std::int64_t inner = static_cast<std::int64_t>(p2(f.h + 2)) + sign(static_cast<std::uint64_t>(h - 1));
      if (h % 2 == 1) inner -= 6;
      return static_cast<std::uint64_t>((sm * inner + 3 * n_p(m, 2)) / 3);
    }
    case Family::Square:
    case Family::DembowskiOstrom: return 2 * m + n_p(m, q);
    case Family::Trinomial: {
      auto fl = trinomial_flags(f.u, ctx);
      return (fl.u6u_zero ? 2 : 3) * m + fl.delta;
    }
    case Family::QhGeometric: {
      const unsigned h = f.h;
      std::uint64_t c = n_p(h, q);
      for (unsigned t = 1; t <= h - 1; ++t)
        for (unsigned u = 1; u <= h - 1; ++u) c += n_p(h - u, q) * n_choose_chain_or_zero(u, t);
      return c * m + n_p(m, q);
    }
    case Family::CoulterMathews: {
      const unsigned h = f.h;
      std::uint64_t c = 0;
      for (unsigned i = 0; i <= h; ++i) c += n_p(h - i + 1, 3);
      for (unsigned t = 2; t <= h; ++t) c += n_choose_chain(h, t);
      for (unsigned t = 2; t <= h - 1; ++t)
        for (unsigned it = t; it <= h - 1; ++it) c += n_p(h - it + 1, 3) * n_choose_chain(it, t);
      return n_p(m, 3) + c * m;
    }
    case Family::Cube: return 3 * m + n_p(m, q);
    default: break;
  }
  throw TheoremPreconditionUnmet(std::string(family_name(f.family)) + ": no closed form");
}

/// Exponents of the predicted generator for the differential sequence. Covered
/// families: Welch (m >= 7), and the quadratic planar functions x^2 and x^(q^kappa+1).
inline std::vector<std::uint64_t> predicted_differential_exponents(const FunctionSpec& f, const FieldCtx& ctx) {
  const Scalar q = ctx.q();
  const unsigned m = ctx.m();
  detail::require_covered(f, q, m);
  switch (f.family) {
    case Family::Welch: {
      const unsigned t = (m - 1) / 2;
      return {0, 1, 3, detail::p2(t) + 1, detail::p2(t) + 2};
    }
    case Family::Square:
    case Family::DembowskiOstrom: {
      std::vector<std::uint64_t> e;
      if (n_p(m, q)) e.push_back(0);
      e.push_back(1);
      return e;
    }
    default: break;
  }
  throw TheoremPreconditionUnmet(std::string(family_name(f.family)) + ": no differential closed form");
}

inline Poly predicted_differential_generator(const FunctionSpec& f, const FieldCtx& ctx) {
  return product_of_minimal_polys(predicted_differential_exponents(f, ctx), ctx);
}

inline std::uint64_t predicted_differential_span(const FunctionSpec& f, const FieldCtx& ctx) {
  const std::uint64_t m = ctx.m();
  detail::require_covered(f, ctx.q(), ctx.m());
  switch (f.family) {
    case Family::Welch: return 4 * m + 1;
    case Family::Square:
    case Family::DembowskiOstrom: return m + n_p(m, ctx.q());
    default: break;
  }
  throw TheoremPreconditionUnmet(std::string(family_name(f.family)) + ": no differential closed form");
}

}  // namespace apncodes
