#pragma once

#include <concepts>
#include <cstdint>
#include <string>
#include <vector>

#include "cyclotomy.hpp"
#include "errors.hpp"
#include "field.hpp"
#include "functions.hpp"
#include "minimal_poly.hpp"
#include "poly.hpp"

namespace apncodes {

/// One period s_0, ..., s_{L-1} of a sequence over GF(q).
struct PeriodicSequence {
  Scalar q = 2;
  std::vector<Scalar> terms;

  std::size_t period() const { return terms.size(); }
  bool is_zero() const {
    for (Scalar v : terms)
      if (v) return false;
    return true;
  }
  /// S(x) = s_0 + s_1 x + ... + s_{L-1} x^{L-1}.
  Poly as_poly() const { return Poly(q, terms); }
};

/// s_i = Tr(fn(alpha^i + 1)) for any callable fn: FieldElement -> FieldElement.
template <typename F>
  requires std::invocable<F&, FieldElement>
PeriodicSequence defining_sequence(F&& fn, const FieldCtx& ctx) {
  PeriodicSequence s{ctx.q(), std::vector<Scalar>(ctx.n())};
  for (std::uint32_t i = 0; i < ctx.n(); ++i) s.terms[i] = ctx.trace(fn(ctx.add(FieldElement{i}, FieldCtx::one())));
  return s;
}

/// s_i = Tr(fn(alpha^i + 1) - fn(alpha^i)).
template <typename F>
  requires std::invocable<F&, FieldElement>
PeriodicSequence differential_sequence(F&& fn, const FieldCtx& ctx) {
  PeriodicSequence s{ctx.q(), std::vector<Scalar>(ctx.n())};
  for (std::uint32_t i = 0; i < ctx.n(); ++i) {
    FieldElement x{i};
    s.terms[i] = ctx.trace(ctx.sub(fn(ctx.add(x, FieldCtx::one())), fn(x)));
  }
  return s;
}

namespace detail {

inline auto table_fn(const std::vector<FieldElement>& table, const FieldCtx& ctx) {
  return [&table, n = ctx.n()](FieldElement x) { return table[x.is_zero() ? n : x.log]; };
}

}  // namespace detail

inline PeriodicSequence defining_sequence(const FunctionSpec& f, const FieldCtx& ctx) {
  auto table = tabulate(f, ctx);
  return defining_sequence(detail::table_fn(table, ctx), ctx);
}

inline PeriodicSequence differential_sequence(const FunctionSpec& f, const FieldCtx& ctx) {
  auto table = tabulate(f, ctx);
  return differential_sequence(detail::table_fn(table, ctx), ctx);
}

/// Minimal polynomial (monic) and linear span of a periodic sequence.
struct SpanResult {
  Poly minimal;
  std::size_t span = 0;
};

/// M_s = (x^L - 1) / gcd(x^L - 1, S(x)).
inline SpanResult minimal_poly_gcd(const PeriodicSequence& s) {
  const Scalar q = s.q;
  const Poly xl = Poly::x_n_minus_one(q, s.period());
  const Poly g = gcd(xl, s.as_poly());
  Poly ms = exact_div(xl, g).monic();
  const auto span = static_cast<std::size_t>(ms.degree());
  return {std::move(ms), span};
}

/// Coefficients c_i with s_t = sum_i c_i alpha^{i t}; support lists the coset
/// leaders i with c_i != 0.
struct SpectralForm {
  std::vector<FieldElement> coeffs;
  std::vector<std::uint32_t> support_leaders;
};

struct SpectralResult {
  SpectralForm form;
  Poly minimal;
  std::size_t span = 0;
};

/// Recovers the expansion s_t = sum c_i alpha^{i t} by c_j = -sum_t s_t alpha^{-j t}
/// (n = -1 in GF(q)), then M_s = product over the support of m_{alpha^{-i}}.
inline SpectralResult minimal_poly_spectral(const PeriodicSequence& s, const FieldCtx& ctx,
                                            const CosetTable* cosets = nullptr) {
  const std::uint32_t n = ctx.n();
  if (s.period() != n) throw PeriodMismatch("sequence period " + std::to_string(s.period()) + " != " + std::to_string(n));
  if (s.q != ctx.q()) throw InvalidArgs("sequence and field have different base fields");
  CosetTable local;
  if (!cosets) {
    local = build_cosets(ctx.q(), n);
    cosets = &local;
  }

  // Nonzero terms grouped by value, so each coefficient is a few sums of powers.
  std::vector<std::uint32_t> idx;
  std::vector<Scalar> val;
  for (std::uint32_t t = 0; t < n; ++t)
    if (s.terms[t]) {
      idx.push_back(t);
      val.push_back(s.terms[t]);
    }

  SpectralResult out;
  out.form.coeffs.assign(n, FieldCtx::zero());
  std::vector<FieldElement> scalars(ctx.q());
  for (Scalar v = 0; v < ctx.q(); ++v) scalars[v] = ctx.from_scalar(v);
  std::vector<FieldElement> by_value(ctx.q());
  std::vector<Poly> factors;
  for (const auto& c : cosets->cosets()) {
    const std::uint64_t j = c.leader;
    std::fill(by_value.begin(), by_value.end(), FieldCtx::zero());
    for (std::size_t k = 0; k < idx.size(); ++k) {
      // alpha^{-j t}
      std::uint64_t e = (j * idx[k]) % n;
      FieldElement term{static_cast<std::uint32_t>(e == 0 ? 0 : n - e)};
      by_value[val[k]] = ctx.add(by_value[val[k]], term);
    }
    FieldElement acc = FieldCtx::zero();
    for (Scalar v = 1; v < ctx.q(); ++v) acc = ctx.add(acc, ctx.mul(scalars[v], by_value[v]));
    FieldElement cj = ctx.neg(acc);
    if (cj.is_zero()) continue;
    for (auto e : c.elements) {
      out.form.coeffs[e] = cj;
      cj = ctx.pow(cj, ctx.q());
    }
    out.form.support_leaders.push_back(c.leader);
    out.span += c.size();
    factors.push_back(minimal_polynomial(-static_cast<std::int64_t>(c.leader), ctx));
  }

  // Spot-check the expansion on a prefix of indices.
  const std::uint32_t checks = n < 64 ? n : 64;
  for (std::uint32_t t = 0; t < checks; ++t) {
    FieldElement acc = FieldCtx::zero();
    for (auto leader : out.form.support_leaders)
      for (auto i : cosets->coset_of(leader).elements)
        acc = ctx.add(acc, ctx.mul(out.form.coeffs[i], FieldElement{static_cast<std::uint32_t>((std::uint64_t{i} * t) % n)}));
    if (!ctx.in_base_field(acc) || ctx.to_scalar(acc) != s.terms[t])
      throw Error("spectral expansion does not reproduce s_" + std::to_string(t));
  }
  out.minimal = product(ctx.q(), factors);
  return out;
}

/// Linear span L and connection polynomial C(x) = 1 + c_1 x + ... + c_L x^L with
/// s_k + c_1 s_{k-1} + ... + c_L s_{k-L} = 0.
struct BMResult {
  std::size_t span = 0;
  Poly connection;
  /// C(x) made monic; for a periodic input this is the minimal polynomial M_s.
  Poly minimal;
};

inline BMResult berlekamp_massey(const std::vector<Scalar>& s, Scalar q) {
  std::vector<Scalar> inv(q, 0);
  for (Scalar v = 1; v < q; ++v) inv[v] = mod_inv(v, q);
  std::vector<Scalar> C{1}, B{1};
  std::size_t L = 0, shift = 1;
  Scalar b = 1;
  for (std::size_t k = 0; k < s.size(); ++k) {
    std::uint64_t d = s[k];
    for (std::size_t i = 1; i <= L && i < C.size(); ++i) d += std::uint64_t{C[i]} * s[k - i];
    const Scalar disc = static_cast<Scalar>(d % q);
    if (disc == 0) {
      ++shift;
      continue;
    }
    const Scalar coef = mod_mul(disc, inv[b], q);
    std::vector<Scalar> T = C;
    if (C.size() < B.size() + shift) C.resize(B.size() + shift, 0);
    for (std::size_t i = 0; i < B.size(); ++i) C[i + shift] = mod_sub(C[i + shift], mod_mul(coef, B[i], q), q);
    if (2 * L <= k) {
      L = k + 1 - L;
      B = std::move(T);
      b = disc;
      shift = 1;
    } else {
      ++shift;
    }
  }
  C.resize(L + 1, 0);
  BMResult r;
  r.span = L;
  r.connection = Poly(q, C);
  r.minimal = r.connection.monic();
  return r;
}

/// Runs over two full periods, which determines the span of a periodic sequence.
inline BMResult berlekamp_massey(const PeriodicSequence& s) {
  std::vector<Scalar> two(s.terms);
  two.insert(two.end(), s.terms.begin(), s.terms.end());
  return berlekamp_massey(two, s.q);
}

}  // namespace apncodes
