#pragma once

#include <algorithm>
#include <array>
#include <concepts>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "field.hpp"
#include "prime_field.hpp"

namespace apncodes {

enum class Family {
  Inverse,
  Gold,
  Kasami,
  Welch,
  Niho1,
  Niho2,
  Dobbertin,
  TwoToHMinusOne,
  Square,
  DembowskiOstrom,
  Trinomial,
  QhGeometric,
  CoulterMathews,
  Cube,
  Generic,
};

struct FamilyInfo {
  Family family;
  std::string_view name;
  std::string_view formula;
  bool uses_h;
  bool uses_kappa;
  bool uses_u;
};

inline constexpr std::array<FamilyInfo, 15> kFamilies{{
    {Family::Inverse, "inverse", "x^(q^m-2)", false, false, false},
    {Family::Gold, "gold", "x^(2^h+1), gcd(h,m)=1", true, false, false},
    {Family::Kasami, "kasami", "x^(2^(2h)-2^h+1), gcd(h,m)=1", true, false, false},
    {Family::Welch, "welch", "x^(2^((m-1)/2)+3), m odd", false, false, false},
    {Family::Niho1, "niho1", "x^(2^((m-1)/2)+2^((m-1)/4)-1), m = 1 mod 4", false, false, false},
    {Family::Niho2, "niho2", "x^(2^((m-1)/2)+2^((3m-1)/4)-1), m = 3 mod 4", false, false, false},
    {Family::Dobbertin, "dobbertin", "x^(2^(4i)+2^(3i)+2^(2i)+2^i-1), m = 5i", false, false, false},
    {Family::TwoToHMinusOne, "two-to-h-minus-one", "x^(2^h-1)", true, false, false},
    {Family::Square, "square", "x^2, q odd", false, false, false},
    {Family::DembowskiOstrom, "dembowski-ostrom", "x^(q^kappa+1), m/gcd(m,kappa) odd", false, true, false},
    {Family::Trinomial, "trinomial", "x^10 - u x^6 - u^2 x^2, q = 3, m odd", false, false, true},
    {Family::QhGeometric, "qh-geometric", "x^((q^h-1)/(q-1))", true, false, false},
    {Family::CoulterMathews, "coulter-mathews", "x^((3^h+1)/2), q = 3, h odd, gcd(m,h)=1", true, false, false},
    {Family::Cube, "cube", "x^3, q > 3", false, false, false},
    {Family::Generic, "generic", "x^e", false, false, false},
}};

inline std::string_view family_name(Family f) {
  for (const auto& i : kFamilies)
    if (i.family == f) return i.name;
  return "unknown";
}

inline Family parse_family(std::string_view s) {
  for (const auto& i : kFamilies)
    if (i.name == s) return i.family;
  if (s == "2h-1") return Family::TwoToHMinusOne;
  if (s == "do") return Family::DembowskiOstrom;
  if (s == "cm") return Family::CoulterMathews;
  if (s == "tri") return Family::Trinomial;
  if (s == "qh") return Family::QhGeometric;
  throw ParseError("unknown family '" + std::string(s) + "'");
}

/// A catalogued function instance. h, kappa, u and exponent are read only by
/// the families that use them.
struct FunctionSpec {
  Family family = Family::Generic;
  unsigned h = 0;
  unsigned kappa = 0;
  FieldElement u{};
  std::uint64_t exponent = 1;  // Generic only

  static FunctionSpec make(Family f, unsigned h = 0, unsigned kappa = 0) {
    FunctionSpec s;
    s.family = f;
    s.h = h;
    s.kappa = kappa;
    return s;
  }
  static FunctionSpec generic(std::uint64_t e) {
    FunctionSpec s;
    s.exponent = e;
    return s;
  }
  static FunctionSpec trinomial(FieldElement u) {
    FunctionSpec s;
    s.family = Family::Trinomial;
    s.u = u;
    return s;
  }

  bool is_monomial() const { return family != Family::Trinomial; }
};

struct ValidityReport {
  /// The family's defining conditions hold; construction is refused otherwise.
  bool valid = true;
  bool claims_apn = false;
  bool claims_planar = false;
  /// Parameters fall in the range where the closed-form generator is proved.
  bool theorem_covered = false;
  std::vector<std::string> problems;     // why invalid
  std::vector<std::string> uncovered;    // why outside the proved range
};

namespace detail {

inline std::uint64_t pow2(unsigned e) {
  if (e >= 64) throw InvalidParams("exponent 2^" + std::to_string(e) + " overflows");
  return std::uint64_t{1} << e;
}

}  // namespace detail

/// Checks family conditions on (q, m, h, kappa) and reports the proved range.
inline ValidityReport validate_params(Family family, Scalar q, unsigned m, unsigned h = 0, unsigned kappa = 0) {
  ValidityReport r;
  auto require = [&](bool ok, const std::string& why) {
    if (!ok) {
      r.valid = false;
      r.problems.push_back(why);
    }
  };
  auto cover = [&](bool ok, const std::string& why) {
    if (!ok) r.uncovered.push_back(why);
  };
  const bool binary = q == 2;
  const unsigned g = std::gcd(h, m);
  switch (family) {
    case Family::Inverse:
      r.claims_apn = binary && m % 2 == 1;
      cover(binary, "closed form is binary only");
      cover(m >= 2, "needs m >= 2");
      break;
    case Family::Gold:
      require(binary, "needs q = 2");
      require(h >= 1 && g == 1, "needs h >= 1 and gcd(h, m) = 1");
      r.claims_apn = r.valid;
      cover(m % 2 == 1 && m >= 3, "needs odd m >= 3");
      break;
    case Family::Kasami: {
      require(binary, "needs q = 2");
      require(h >= 1 && g == 1, "needs h >= 1 and gcd(h, m) = 1");
      r.claims_apn = r.valid;
      const unsigned off[4] = {4, 1, 2, 3};  // m mod 4 -> subtracted offset
      const int top = m >= off[m % 4] ? static_cast<int>((m - off[m % 4]) / 4) : -1;
      cover(h >= 2 && static_cast<int>(h) <= top, "h outside 2 <= h <= (m - c)/4");
      break;
    }
    case Family::Welch:
      require(binary, "needs q = 2");
      require(m % 2 == 1 && m >= 3, "needs odd m >= 3");
      r.claims_apn = r.valid;
      cover(m >= 7, "needs m >= 7");
      break;
    case Family::Niho1:
      require(binary, "needs q = 2");
      require(m % 4 == 1 && m >= 5, "needs m = 1 mod 4, m >= 5");
      r.claims_apn = r.valid;
      cover(m >= 9, "needs m >= 9");
      break;
    case Family::Niho2:
      require(binary, "needs q = 2");
      require(m % 4 == 3, "needs m = 3 mod 4");
      r.claims_apn = r.valid;
      cover(false, "no closed form");
      break;
    case Family::Dobbertin:
      require(binary, "needs q = 2");
      require(m % 5 == 0 && m >= 5, "needs m = 5i");
      r.claims_apn = r.valid;
      cover(false, "no closed form");
      break;
    case Family::TwoToHMinusOne:
      require(binary, "needs q = 2");
      require(h >= 1, "needs h >= 1");
      r.claims_apn = r.valid && h == 2;
      cover(h >= 2 && 2 * h + (m % 2 == 1 ? 1 : 2) <= m, "h outside 2 <= h <= (m-1)/2 or (m-2)/2");
      break;
    case Family::Square:
      require(!binary, "needs odd q");
      r.claims_planar = r.valid;
      cover(m >= 2, "needs m >= 2");
      break;
    case Family::DembowskiOstrom: {
      require(!binary, "needs odd q");
      const unsigned gk = std::gcd(m, kappa);
      require(gk != 0 && (m / gk) % 2 == 1, "needs m / gcd(m, kappa) odd");
      r.claims_planar = r.valid;
      cover(m % 2 == 1 && m >= 3, "needs odd m >= 3");
      break;
    }
    case Family::Trinomial:
      require(q == 3, "needs q = 3");
      require(m % 2 == 1, "needs odd m");
      r.claims_planar = r.valid;
      cover(m >= 3, "needs m >= 3");
      break;
    case Family::QhGeometric:
      require(h >= 1, "needs h >= 1");
      cover(!binary, "closed form is for odd q");
      cover(h >= 3 && 2 * h <= (m % 2 == 1 ? m - 1 : m), "h outside 3 <= h <= (m-1)/2 or m/2");
      break;
    case Family::CoulterMathews:
      require(q == 3, "needs q = 3");
      require(h % 2 == 1 && g == 1, "needs odd h with gcd(m, h) = 1");
      r.claims_planar = r.valid;
      cover(h >= 3 && 2 * h <= (m % 2 == 1 ? m - 1 : m), "h outside 3 <= h <= (m-1)/2 or m/2");
      break;
    case Family::Cube:
      require(q > 3, "needs q > 3");
      r.claims_apn = r.valid;
      cover(m >= 2, "needs m >= 2");
      break;
    case Family::Generic:
      cover(false, "no closed form");
      break;
  }
  r.theorem_covered = r.valid && r.uncovered.empty();
  return r;
}

/// The exponent e of a monomial family, as an integer (not reduced mod n).
inline std::uint64_t exponent_of(const FunctionSpec& f, Scalar q, unsigned m) {
  auto rep = validate_params(f.family, q, m, f.h, f.kappa);
  if (!rep.valid) throw InvalidParams(std::string(family_name(f.family)) + ": " + rep.problems.front());
  using detail::pow2;
  switch (f.family) {
    case Family::Inverse: return ipow(q, m) - 2;
    case Family::Gold: return pow2(f.h) + 1;
    case Family::Kasami: return pow2(2 * f.h) - pow2(f.h) + 1;
    case Family::Welch: return pow2((m - 1) / 2) + 3;
    case Family::Niho1: return pow2((m - 1) / 2) + pow2((m - 1) / 4) - 1;
    case Family::Niho2: return pow2((m - 1) / 2) + pow2((3 * m - 1) / 4) - 1;
    case Family::Dobbertin: {
      const unsigned i = m / 5;
      return pow2(4 * i) + pow2(3 * i) + pow2(2 * i) + pow2(i) - 1;
    }
    case Family::TwoToHMinusOne: return pow2(f.h) - 1;
    case Family::Square: return 2;
    case Family::DembowskiOstrom: return ipow(q, f.kappa) + 1;
    case Family::QhGeometric: return (ipow(q, f.h) - 1) / (q - 1);
    case Family::CoulterMathews: return (ipow(3, f.h) + 1) / 2;
    case Family::Cube: return 3;
    case Family::Generic: return f.exponent;
    case Family::Trinomial: break;
  }
  throw NotMonomial(std::string(family_name(f.family)) + " is not a monomial");
}

/// Evaluates f at x. Every catalogued function maps 0 to 0.
inline FieldElement evaluate(const FunctionSpec& f, FieldElement x, const FieldCtx& ctx) {
  if (f.family == Family::Trinomial) {
    FieldElement x2 = ctx.pow(x, 2);
    FieldElement t = ctx.sub(ctx.pow(x, 10), ctx.mul(f.u, ctx.pow(x, 6)));
    return ctx.sub(t, ctx.mul(ctx.mul(f.u, f.u), x2));
  }
  return ctx.pow(x, exponent_of(f, ctx.q(), ctx.m()));
}

/// Returns a table T with T[log] = f(alpha^log) and T[n] = f(0).
template <typename F>
  requires std::invocable<F&, FieldElement>
std::vector<FieldElement> tabulate(F&& fn, const FieldCtx& ctx) {
  std::vector<FieldElement> t(std::size_t{ctx.n()} + 1);
  for (std::uint32_t i = 0; i < ctx.n(); ++i) t[i] = fn(FieldElement{i});
  t[ctx.n()] = fn(FieldCtx::zero());
  return t;
}

inline std::vector<FieldElement> tabulate(const FunctionSpec& f, const FieldCtx& ctx) {
  if (f.is_monomial()) {
    const std::uint64_t e = exponent_of(f, ctx.q(), ctx.m());
    return tabulate([&](FieldElement x) { return ctx.pow(x, e); }, ctx);
  }
  return tabulate([&](FieldElement x) { return evaluate(f, x, ctx); }, ctx);
}

inline constexpr std::uint32_t kMaxUniformityField = 1u << 14;

namespace detail {

inline std::size_t slot(FieldElement x, std::uint32_t n) { return x.is_zero() ? n : x.log; }

// max over b of #{x : f(x + a) - f(x) = b} for one fixed nonzero a.
inline unsigned uniformity_for(const std::vector<FieldElement>& table, FieldElement a, const FieldCtx& ctx,
                               std::vector<unsigned>& counts) {
  const std::uint32_t n = ctx.n();
  std::fill(counts.begin(), counts.end(), 0u);
  unsigned best = 0;
  auto visit = [&](FieldElement x) {
    FieldElement d = ctx.sub(table[slot(ctx.add(x, a), n)], table[slot(x, n)]);
    best = std::max(best, ++counts[slot(d, n)]);
  };
  visit(FieldCtx::zero());
  for (std::uint32_t i = 0; i < n; ++i) visit(FieldElement{i});
  return best;
}

}  // namespace detail

/// Differential uniformity of a tabulated function (see tabulate). Scans every
/// nonzero a unless only_a_equal_one is set, which is exact for monomials.
inline unsigned differential_uniformity(const std::vector<FieldElement>& table, const FieldCtx& ctx,
                                        bool only_a_equal_one = false) {
  if (ctx.size() > kMaxUniformityField) throw FieldTooLarge("differential uniformity scan is capped at 2^14 elements");
  std::vector<unsigned> counts(ctx.size());
  if (only_a_equal_one) return detail::uniformity_for(table, FieldCtx::one(), ctx, counts);
  unsigned best = 0;
  for (std::uint32_t a = 0; a < ctx.n(); ++a)
    best = std::max(best, detail::uniformity_for(table, FieldElement{a}, ctx, counts));
  return best;
}

/// Differential uniformity of f over ctx. Monomials use the a = 1 slice, since
/// f(x + a) - f(x) = a^e (f(y + 1) - f(y)) with y = x / a; set exhaustive to scan all a.
inline unsigned differential_uniformity(const FunctionSpec& f, const FieldCtx& ctx, bool exhaustive = false) {
  if (ctx.size() > kMaxUniformityField) throw FieldTooLarge("differential uniformity scan is capped at 2^14 elements");
  return differential_uniformity(tabulate(f, ctx), ctx, f.is_monomial() && !exhaustive);
}

/// Trinomial auxiliaries: whether u^6 + u = 0, and delta_u (0 iff Tr(u^2 + u - 1) = 0).
struct TrinomialFlags {
  bool u6u_zero = false;
  int delta = 0;
};

inline TrinomialFlags trinomial_flags(FieldElement u, const FieldCtx& ctx) {
  TrinomialFlags fl;
  fl.u6u_zero = ctx.add(ctx.pow(u, 6), u).is_zero();
  FieldElement v = ctx.sub(ctx.add(ctx.mul(u, u), u), FieldCtx::one());
  fl.delta = ctx.trace(v) == 0 ? 0 : 1;
  return fl;
}

}  // namespace apncodes
