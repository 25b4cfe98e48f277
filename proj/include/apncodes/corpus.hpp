#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "analysis.hpp"
#include "cyclic_code.hpp"
#include "cyclotomy.hpp"
#include "errors.hpp"
#include "field.hpp"
#include "functions.hpp"
#include "poly.hpp"
#include "predict.hpp"
#include "sequence.hpp"

namespace apncodes {

struct ModulusEntry {
  Scalar q;
  unsigned m;
  std::string_view modulus;
};

/// Moduli used by the published worked examples; other (q, m) fall back to a search.
inline constexpr std::array<ModulusEntry, 13> kKnownModuli{{
    {2, 3, "x^3+x+1"},
    {2, 5, "x^5+x^2+1"},
    {2, 7, "x^7+x+1"},
    {2, 9, "x^9+x^4+1"},
    {3, 2, "x^2+2x+2"},
    {3, 3, "x^3+2x+1"},
    {3, 4, "x^4+2x^3+2"},
    {3, 5, "x^5+2x+1"},
    {3, 6, "x^6+2x^4+x^2+2x+2"},
    {3, 7, "x^7+2x^2+1"},
    {5, 2, "x^2+4x+2"},
    {5, 3, "x^3+3x+3"},
    {5, 6, "x^6+x^4+4x^3+x^2+2"},
}};

/// True iff f is monic of degree m and x has order q^m - 1 modulo f.
inline bool is_primitive(const Poly& f) {
  const Scalar q = f.q();
  const int m = f.degree();
  if (m < 1 || !f.is_monic() || f[0] == 0) return false;
  if (!is_irreducible(f)) return false;
  const std::uint64_t n = ipow(q, static_cast<unsigned>(m)) - 1;
  const Poly one = Poly::constant(q, 1);
  for (auto p : prime_factors(n))
    if (detail::powmod_x(n / p, f) == one) return false;
  return true;
}

/// Smallest primitive polynomial of degree m, ordering candidates by their
/// coefficient lists (c_0, c_1, ..., c_{m-1}) lexicographically.
inline Poly find_primitive(Scalar q, unsigned m) {
  if (!is_prime(q)) throw UnsupportedBase("q = " + std::to_string(q) + " is not prime");
  if (m == 0) throw InvalidArgs("m must be at least 1");
  if (static_cast<double>(ipow(q, m)) - 1 > static_cast<double>(kMaxFieldPeriod))
    throw FieldTooLarge("q^m - 1 exceeds " + std::to_string(kMaxFieldPeriod));
  std::vector<Scalar> c(m + 1, 0);
  c[m] = 1;
  // Odometer with c_{m-1} as the fastest digit, so c_0 is most significant.
  for (c[0] = 1; c[0] < q; ++c[0]) {
    std::fill(c.begin() + 1, c.begin() + m, 0);
    for (;;) {
      Poly f(q, c);
      if (is_primitive(f)) return f;
      std::size_t i = m - 1;
      while (i >= 1 && c[i] == q - 1) c[i--] = 0;
      if (i == 0) break;
      ++c[i];
    }
  }
  throw NotPrimitive("no primitive polynomial found");
}

/// Embedded modulus for a published (q, m), else the smallest primitive polynomial.
inline Poly default_modulus(Scalar q, unsigned m) {
  for (const auto& e : kKnownModuli)
    if (e.q == q && e.m == m) return parse_poly(q, e.modulus);
  return find_primitive(q, m);
}

inline FieldCtx default_field(Scalar q, unsigned m) { return build_field(q, m, default_modulus(q, m)); }

enum class SequenceKind { Defining, Differential };

/// How a published value was found to be inconsistent, checked at verification time.
enum class ErratumEvidence {
  /// The published generator does not divide x^n - 1.
  NotADivisor,
  /// The published generator is the code of a different exponent (erratum.other_exponent).
  OtherExponent,
};

struct Erratum {
  std::string_view corrected_generator;
  std::size_t corrected_k = 0;
  ErratumEvidence evidence = ErratumEvidence::NotADivisor;
  std::uint64_t other_exponent = 0;
  std::string_view note;
};

struct ExampleRecord {
  std::string_view id;
  Scalar q = 2;
  unsigned m = 0;
  std::string_view modulus;
  Family family = Family::Generic;
  unsigned h = 0;
  unsigned kappa = 0;
  std::string_view u;             // trinomial only
  std::uint64_t exponent = 0;     // Generic only
  SequenceKind kind = SequenceKind::Defining;
  std::string_view generator;     // as published
  std::uint32_t n = 0;
  std::size_t k = 0;
  std::uint64_t d_lo = 0;         // 0: distance not stated
  std::uint64_t d_hi = 0;         // 0: no upper value stated
  std::size_t dual_k = 0;         // 0: dual not stated
  std::uint64_t dual_d = 0;
  /// Parameters lie outside the proved range; no theorem comparison.
  bool exploratory = false;
  std::optional<Erratum> erratum;
  std::string_view citation;

  bool d_exact() const { return d_lo != 0 && d_lo == d_hi; }
};

inline FunctionSpec function_of(const ExampleRecord& r, const FieldCtx& ctx) {
  if (r.family == Family::Generic) return FunctionSpec::generic(r.exponent);
  if (r.family == Family::Trinomial) return FunctionSpec::trinomial(ctx.parse(r.u));
  return FunctionSpec::make(r.family, r.h, r.kappa);
}

// clang-format off
inline const std::vector<ExampleRecord>& example_corpus() {
  using F = Family;
  static const std::vector<ExampleRecord> corpus = {
    {"inverse-m3", 2, 3, "x^3+x+1", F::Inverse, 0, 0, "", 0, SequenceKind::Defining,
     "x^4+x^3+x^2+1", 7, 3, 4, 4, 4, 3, false, {},
     "worked example: inverse function over GF(8), alpha^3+alpha+1=0"},
    {"inverse-m5", 2, 5, "x^5+x^2+1", F::Inverse, 0, 0, "", 0, SequenceKind::Defining,
     "x^16+x^14+x^13+x^10+x^9+x^8+x^7+x^6+x^5+x^2+x+1", 31, 15, 8, 8, 16, 7, false, {},
     "worked example: inverse function over GF(32), alpha^5+alpha^2+1=0"},
    {"gold-3-1", 2, 3, "x^3+x+1", F::Gold, 1, 0, "", 0, SequenceKind::Defining,
     "x^4+x^3+x^2+1", 7, 3, 4, 4, 4, 3, false, {},
     "worked example: Gold x^3 over GF(8)"},
    {"gold-5-1", 2, 5, "x^5+x^2+1", F::Gold, 1, 0, "", 0, SequenceKind::Defining,
     "x^6+x^5+x^4+1", 31, 25, 4, 4, 6, 15, false, {},
     "worked example: Gold x^3 over GF(32)"},
    {"gold-7-2", 2, 7, "x^7+x+1", F::Gold, 2, 0, "", 0, SequenceKind::Defining,
     "x^8+x^4+x+1", 127, 119, 4, 4, 8, 63, false, {},
     "worked example: Gold x^5 over GF(128)"},
    {"welch-m3", 2, 3, "x^3+x+1", F::Welch, 0, 0, "", 0, SequenceKind::Defining,
     "x^4+x^3+x^2+1", 7, 3, 4, 4, 4, 3, true, {},
     "worked example: Welch x^5 over GF(8)"},
    {"welch-m5", 2, 5, "x^5+x^2+1", F::Welch, 0, 0, "", 0, SequenceKind::Defining,
     "x^16+x^15+x^13+x^12+x^8+x^6+x^3+1", 31, 15, 8, 8, 16, 7, true, {},
     "worked example: Welch x^7 over GF(32)"},
    {"welch-m7", 2, 7, "x^7+x+1", F::Welch, 0, 0, "", 0, SequenceKind::Defining,
     "x^36+x^34+x^33+x^32+x^29+x^28+x^27+x^26+x^25+x^24+x^21+x^12+x^11+x^9+x^7+x^6+x^5+x^3+x+1",
     127, 91, 8, 8, 0, 0, false, {},
     "worked example: Welch x^11 over GF(128)"},
    {"two-to-h-3-2", 2, 3, "x^3+x+1", F::TwoToHMinusOne, 2, 0, "", 0, SequenceKind::Defining,
     "x^4+x^3+x^2+1", 7, 3, 4, 4, 4, 3, true, {},
     "worked example: x^3 as x^(2^h-1) over GF(8)"},
    {"two-to-h-5-2", 2, 5, "x^5+x^2+1", F::TwoToHMinusOne, 2, 0, "", 0, SequenceKind::Defining,
     "x^6+x^5+x^4+1", 31, 25, 4, 4, 0, 0, false, {},
     "worked example: x^3 as x^(2^h-1) over GF(32)"},
    {"two-to-h-7-2", 2, 7, "x^7+x+1", F::TwoToHMinusOne, 2, 0, "", 0, SequenceKind::Defining,
     "x^8+x^6+x^5+x^4+x^3+x^2+x+1", 127, 119, 4, 4, 0, 0, false, {},
     "worked example: x^3 as x^(2^h-1) over GF(128)"},
    {"two-to-h-7-3", 2, 7, "x^7+x+1", F::TwoToHMinusOne, 3, 0, "", 0, SequenceKind::Defining,
     "x^22+x^21+x^20+x^18+x^17+x^16+x^14+x^13+x^8+x^7+x^6+x^5+x^4+1", 127, 105, 4, 8, 0, 0, false, {},
     "worked example: x^7 over GF(128), distance stated as 4 <= d <= 8"},
    {"niho1-m5", 2, 5, "x^5+x^2+1", F::Niho1, 0, 0, "", 0, SequenceKind::Defining,
     "x^6+x^3+x^2+1", 31, 25, 4, 4, 0, 0, true, {},
     "worked example: Niho x^(2^2+2-1) over GF(32)"},
    {"niho1-m9", 2, 9, "x^9+x^4+1", F::Niho1, 0, 0, "", 0, SequenceKind::Defining,
     "x^46+x^45+x^41+x^40+x^39+x^36+x^35+x^33+x^28+x^27+x^26+x^25+x^24+x^22+x^21+x^20+x^19+x^14+x^12+x^7+x^4+x^2+x+1",
     511, 465, 6, 0, 0, 0, false, {},
     "worked example: Niho function over GF(512), distance stated as d >= 6"},
    {"kasami-3-2", 2, 3, "x^3+x+1", F::Kasami, 2, 0, "", 0, SequenceKind::Defining,
     "x^4+x^3+x^2+1", 7, 3, 4, 4, 4, 3, true, {},
     "worked example: Kasami x^13 over GF(8), h outside the proved range"},
    {"kasami-5-2", 2, 5, "x^5+x^2+1", F::Kasami, 2, 0, "", 0, SequenceKind::Defining,
     "x^16+x^14+x^10+x^9+x^8+x^7+x^5+x^4+x^3+x^2+x+1", 31, 15, 8, 8, 16, 7, true, {},
     "worked example: Kasami x^13 over GF(32), h outside the proved range"},
    {"kasami-7-2", 2, 7, "x^7+x+1", F::Kasami, 2, 0, "", 0, SequenceKind::Defining,
     "x^36+x^28+x^27+x^23+x^21+x^20+x^18+x^13+x^12+x^9+x^7+x^6+x^5+1", 127, 91, 8, 8, 0, 0, true, {},
     "worked example: Kasami x^13 over GF(128)"},
    {"square-9", 3, 2, "x^2+2x+2", F::Square, 0, 0, "", 0, SequenceKind::Defining,
     "x^5+2x^3+x^2+x+1", 8, 3, 5, 5, 0, 0, false, {},
     "worked example: x^2 over GF(9)"},
    {"square-27", 3, 3, "x^3+2x+1", F::Square, 0, 0, "", 0, SequenceKind::Defining,
     "x^6+x^5+x^3+2x+2", 26, 20, 4, 4, 0, 0, false, {},
     "worked example: x^2 over GF(27)"},
    {"square-81", 3, 4, "x^4+2x^3+2", F::Square, 0, 0, "", 0, SequenceKind::Defining,
     "x^9+2x^8+x^7+2x^6+x^4+x^2+1", 80, 71, 5, 5, 0, 0, false, {},
     "worked example: x^2 over GF(81)"},
    {"square-25", 5, 2, "x^2+4x+2", F::Square, 0, 0, "", 0, SequenceKind::Defining,
     "x^5+3x^4+2x^3+3x^2+3x+3", 24, 19, 4, 4, 0, 0, false, {},
     "worked example: x^2 over GF(25)"},
    {"square-125", 5, 3, "x^3+3x+3", F::Square, 0, 0, "", 0, SequenceKind::Defining,
     "x^7+4x^6+4x^4+3x^2+3", 124, 117, 4, 4, 0, 0, false, {},
     "worked example: x^2 over GF(125)"},
    {"do-3-1-3", 3, 3, "x^3+2x+1", F::DembowskiOstrom, 0, 1, "", 0, SequenceKind::Defining,
     "x^6+2x^5+2x^4+x^3+x^2+2x+1", 26, 20, 4, 4, 0, 0, false,
     Erratum{"x^6+2x^5+2x^4+x^3+x^2+2x+2", 20, ErratumEvidence::NotADivisor, 0,
             "published constant term 1 cannot occur: the generator m_{a^-1} m_{a^-4} has constant -1"},
     "worked example: x^4 over GF(27)"},
    {"do-4-4-3", 3, 4, "x^4+2x^3+2", F::DembowskiOstrom, 0, 4, "", 0, SequenceKind::Defining,
     "x^9+2x^8+x^7+2x^6+x^4+x^2+1", 80, 71, 5, 5, 0, 0, true, {},
     "worked example: x^82 over GF(81)"},
    {"trinomial-u1", 3, 3, "x^3+2x+1", F::Trinomial, 0, 0, "1", 0, SequenceKind::Defining,
     "x^9+x^8+2x^7+2x^6+2x^5+x^4+x^3+x^2+2x+1", 26, 17, 5, 5, 0, 0, false, {},
     "worked example: x^10-x^6-x^2 over GF(27)"},
    {"trinomial-u-1", 3, 3, "x^3+2x+1", F::Trinomial, 0, 0, "-1", 0, SequenceKind::Defining,
     "x^6+2x^5+2x^4+x^3+x^2+2x+2", 26, 20, 4, 4, 0, 0, false, {},
     "worked example: x^10+x^6-x^2 over GF(27)"},
    {"trinomial-alpha", 3, 3, "x^3+2x+1", F::Trinomial, 0, 0, "alpha", 0, SequenceKind::Defining,
     "x^10+x^8+2x^5+x^2+2x+2", 26, 16, 6, 6, 0, 0, false, {},
     "worked example: x^10-alpha x^6-alpha^2 x^2 over GF(27)"},
    {"qh-2-3-3", 3, 2, "x^2+2x+2", F::QhGeometric, 3, 0, "", 0, SequenceKind::Defining,
     "x^6+2x^5+2x^4+2x^2+x+1", 8, 2, 6, 6, 0, 0, true, {},
     "worked example: x^13 over GF(9), h > m/2"},
    {"qh-3-3-3", 3, 3, "x^3+2x+1", F::QhGeometric, 3, 0, "", 0, SequenceKind::Defining,
     "1", 26, 26, 1, 1, 0, 0, true, {},
     "worked example: x^13 over GF(27), trivial code"},
    {"qh-4-3-3", 3, 4, "x^4+2x^3+2", F::QhGeometric, 3, 0, "", 0, SequenceKind::Defining,
     "x^11+2x^8+2x^6+2x^5+2x^4+x^3+2x^2+x+2", 80, 69, 5, 5, 0, 0, true, {},
     "worked example: x^13 over GF(81), h > m/2"},
    {"qh-5-3-3", 3, 5, "x^5+2x+1", F::QhGeometric, 3, 0, "", 0, SequenceKind::Defining,
     "x^16+2x^14+2x^12+2x^11+x^10+x^9+x^6+x^3+2x^2+2", 242, 226, 0, 0, 0, 0, true, {},
     "worked example: x^13 over GF(243)"},
    {"qh-6-3-3", 3, 6, "x^6+2x^4+x^2+2x+2", F::QhGeometric, 3, 0, "", 0, SequenceKind::Defining,
     "x^18+2x^15+2x^14+2x^13+2x^11+x^10+2x^9+x^8+x^6+2x^4+x^3+x^2+2", 728, 710, 0, 0, 0, 0, false, {},
     "worked example: x^13 over GF(729)"},
    {"qh-2-3-5", 5, 2, "x^2+4x+2", F::QhGeometric, 3, 0, "", 0, SequenceKind::Defining,
     "x^8+x^7+2x^4+2x^3+3x^2+4x+2", 24, 16, 5, 5, 0, 0, true, {},
     "worked example: x^31 over GF(25), h > m/2"},
    {"qh-6-3-5", 5, 6, "x^6+x^4+4x^3+x^2+2", F::QhGeometric, 3, 0, "", 0, SequenceKind::Defining,
     "x^25+x^24+3x^23+2x^22+3x^21+x^20+2x^19+4x^18+4x^17+x^16+2x^14+4x^12+2x^11+3x^10+4x^8+4x^6+4x^5+x^4+4x^3+x^2+4",
     15624, 15599, 0, 0, 0, 0, false, {},
     "worked example: x^31 over GF(15625)"},
    {"cm-2-3-3", 3, 2, "x^2+2x+2", F::CoulterMathews, 3, 0, "", 0, SequenceKind::Defining,
     "x^5+2x^3+x^2+x+1", 8, 3, 5, 5, 0, 0, true, {},
     "worked example: Coulter-Mathews x^14 over GF(9), h > m/2"},
    {"cm-4-3-3", 3, 4, "x^4+2x^3+2", F::CoulterMathews, 3, 0, "", 0, SequenceKind::Defining,
     "x^11+2x^8+2x^6+2x^5+2x^4+x^3+2x^2+x+2", 80, 69, 5, 5, 0, 0, true,
     Erratum{"x^27+x^25+x^24+2x^23+2x^21+x^20+2x^19+x^18+x^17+2x^16+x^14+2x^13+2x^12+2x^11+x^7+x^5+x^4+2x^3+x^2+2x+1",
             53, ErratumEvidence::OtherExponent, 13,
             "published text repeats the x^13 example over GF(81); x^14 is not a permutation there (gcd(14,80)=2)"},
     "worked example: Coulter-Mathews x^14 over GF(81), h > m/2"},
    {"cm-7-3-3", 3, 7, "x^7+2x^2+1", F::CoulterMathews, 3, 0, "", 0, SequenceKind::Defining,
     "x^50+x^49+x^48+2x^47+2x^46+x^45+2x^44+2x^43+x^42+x^41+2x^40+2x^39+2x^38+2x^37+x^36+2x^35+2x^34+2x^33+x^31+2x^30+x^29+2x^28+2x^27+2x^26+2x^25+x^24+x^23+x^22+2x^21+2x^20+x^18+x^16+x^15+x^14+x^13+2x^12+x^11+2x^10+2x^9+2x^4+1",
     2186, 2136, 0, 0, 0, 0, false, {},
     "worked example: Coulter-Mathews x^14 over GF(2187); header lists q=5, read as q=3 from n=3^7-1"},
    {"cube-25", 5, 2, "x^2+4x+2", F::Cube, 0, 0, "", 0, SequenceKind::Defining,
     "x^7+3x^6+4x^5+4x^4+2x^3+4x^2+x+1", 24, 17, 5, 5, 0, 0, false, {},
     "worked example: x^3 over GF(25)"},
    {"cube-125", 5, 3, "x^3+3x+3", F::Cube, 0, 0, "", 0, SequenceKind::Defining,
     "x^10+x^9+x^5+3x^4+4x^3+x+4", 124, 114, 5, 5, 0, 0, false, {},
     "worked example: x^3 over GF(125)"},
    {"open-11-m3", 3, 3, "x^3+2x+1", F::Generic, 0, 0, "", 12, SequenceKind::Defining,
     "x^6+2x^5+2x^4+x^3+x^2+2x+2", 26, 20, 4, 4, 0, 0, true, {},
     "worked example: x^((3^m-3)/2) over GF(27)"},
    {"open-11-m4", 3, 4, "x^4+2x^3+2", F::Generic, 0, 0, "", 39, SequenceKind::Defining,
     "x^11+2x^8+2x^6+2x^5+2x^4+x^3+2x^2+x+2", 80, 69, 5, 5, 0, 0, true, {},
     "worked example: x^((3^m-3)/2) over GF(81)"},
    {"diff-welch-m3", 2, 3, "x^3+x+1", F::Welch, 0, 0, "", 0, SequenceKind::Differential,
     "x+1", 7, 6, 2, 2, 0, 0, true, {},
     "worked example: differential sequence of Welch x^5 over GF(8)"},
    {"diff-welch-m5", 2, 5, "x^5+x^2+1", F::Welch, 0, 0, "", 0, SequenceKind::Differential,
     "x^11+x^9+x^8+x^7+x^2+1", 31, 20, 6, 6, 0, 0, true, {},
     "worked example: differential sequence of Welch x^7 over GF(32)"},
    {"diff-welch-m7", 2, 7, "x^7+x+1", F::Welch, 0, 0, "", 0, SequenceKind::Differential,
     "x^37+x^36+x^35+x^34+x^33+x^28+x^26+x^24+x^22+x^21+x^17+x^13+x^9+x^8+x^7+x^5+x^4+1",
     127, 98, 8, 8, 0, 0, false,
     Erratum{"x^29+x^27+x^25+x^24+x^22+x^15+x^14+x^12+x^11+x^9+x^7+x^6+x^4+x^3+x+1", 98,
             ErratumEvidence::NotADivisor, 0,
             "published polynomial has degree 37 while [127,98] needs degree 29"},
     "worked example: differential sequence of Welch x^11 over GF(128)"},
  };
  return corpus;
}
// clang-format on

/// Structural problems in a record set: missing citation or id, duplicate ids,
/// bad modulus, or a generator degree that contradicts the stated [n, k].
inline std::vector<std::string> lint_corpus(const std::vector<ExampleRecord>& records) {
  std::vector<std::string> problems;
  std::set<std::string_view> ids;
  for (const auto& r : records) {
    const std::string id = r.id.empty() ? std::string("<no id>") : std::string(r.id);
    if (r.id.empty()) problems.push_back("record without id");
    if (!ids.insert(r.id).second) problems.push_back(id + ": duplicate id");
    if (r.citation.empty()) problems.push_back(id + ": no citation");
    try {
      const Poly mod = parse_poly(r.q, r.modulus);
      if (mod.degree() != static_cast<int>(r.m)) problems.push_back(id + ": modulus degree differs from m");
      if (!is_primitive(mod)) problems.push_back(id + ": modulus not primitive");
      if (ipow(r.q, r.m) - 1 != r.n) problems.push_back(id + ": n differs from q^m - 1");
      const Poly g = parse_poly(r.q, r.generator);
      const auto deg = static_cast<std::size_t>(g.degree());
      if (!r.erratum && deg + r.k != r.n) problems.push_back(id + ": generator degree contradicts [n, k]");
      if (r.erratum) {
        const Poly c = parse_poly(r.q, r.erratum->corrected_generator);
        if (static_cast<std::size_t>(c.degree()) + r.erratum->corrected_k != r.n)
          problems.push_back(id + ": corrected generator degree contradicts corrected k");
        if (r.erratum->note.empty()) problems.push_back(id + ": erratum without a note");
      }
    } catch (const Error& e) {
      problems.push_back(id + ": " + e.what());
    }
    if (r.d_hi != 0 && r.d_hi < r.d_lo) problems.push_back(id + ": d_hi < d_lo");
  }
  return problems;
}

enum class CheckStatus { Pass, Fail, Unchecked, Unresolved };

inline std::string_view status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Unchecked: return "unchecked";
    case CheckStatus::Unresolved: return "unresolved";
  }
  return "unknown";
}

struct ExampleOutcome {
  std::string id;
  Poly generator;
  std::size_t k = 0;
  bool generator_ok = false;
  bool nk_ok = false;
  /// Theorem-predicted generator agrees; Unchecked for exploratory records.
  CheckStatus prediction = CheckStatus::Unchecked;
  CheckStatus distance = CheckStatus::Unchecked;
  CheckStatus dual = CheckStatus::Unchecked;
  /// Erratum evidence confirmed; Unchecked when the record has none.
  CheckStatus erratum = CheckStatus::Unchecked;
  BoundReport bounds;
  DistanceResult d;
  std::vector<std::string> notes;
  double seconds = 0;

  bool pass() const {
    return generator_ok && nk_ok && prediction != CheckStatus::Fail && distance != CheckStatus::Fail &&
           dual != CheckStatus::Fail && erratum != CheckStatus::Fail;
  }
};

/// Codes at least this long only have their lower distance bound verified.
inline constexpr std::uint32_t kBoundsOnlyLength = 511;

inline ExampleOutcome verify_example(const ExampleRecord& r, const DistanceOptions& opt = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  ExampleOutcome out;
  out.id = std::string(r.id);
  try {
    const FieldCtx ctx = build_field(r.q, r.m, r.modulus);
    const CosetTable cosets = build_cosets(r.q, ctx.n());
    const FunctionSpec f = function_of(r, ctx);
    const PeriodicSequence s =
        r.kind == SequenceKind::Defining ? defining_sequence(f, ctx) : differential_sequence(f, ctx);
    const CyclicCode code = code_from_sequence(s, ctx, &cosets);
    out.generator = code.generator;
    out.k = code.k;

    const Poly published = parse_poly(r.q, r.generator);
    std::size_t expect_k = r.k;
    if (r.erratum) {
      const Poly corrected = parse_poly(r.q, r.erratum->corrected_generator);
      expect_k = r.erratum->corrected_k;
      out.generator_ok = code.generator == corrected;
      bool evidence = false;
      if (r.erratum->evidence == ErratumEvidence::NotADivisor) {
        evidence = !published.divides(Poly::x_n_minus_one(r.q, ctx.n()));
      } else {
        auto other = defining_sequence(FunctionSpec::generic(r.erratum->other_exponent), ctx);
        evidence = minimal_poly_gcd(other).minimal == published && !(published == code.generator);
      }
      out.erratum = evidence ? CheckStatus::Pass : CheckStatus::Fail;
      out.notes.push_back("erratum: " + std::string(r.erratum->note));
    } else {
      out.generator_ok = code.generator == published;
    }
    out.nk_ok = code.n == r.n && code.k == expect_k;

    if (!r.exploratory) {
      const Poly predicted = r.kind == SequenceKind::Defining ? predicted_generator(f, ctx)
                                                              : predicted_differential_generator(f, ctx);
      out.prediction = predicted == code.generator ? CheckStatus::Pass : CheckStatus::Fail;
    }

    if (code.k > 0) {
      out.bounds = bound_report(code, cosets);
      DistanceOptions o = opt;
      if (code.n >= kBoundsOnlyLength) o.strategy = DistanceStrategy::BoundsOnly;
      out.d = minimum_distance(code, out.bounds, o);
      const bool stated = r.d_lo != 0 && !(r.erratum && r.erratum->corrected_k != r.k);
      if (stated) {
        if (r.d_exact() && code.n < kBoundsOnlyLength) {
          if (out.d.exact())
            out.distance = out.d.lo == r.d_lo ? CheckStatus::Pass : CheckStatus::Fail;
          else
            out.distance = (out.d.lo <= r.d_lo && r.d_lo <= out.d.hi) ? CheckStatus::Unresolved : CheckStatus::Fail;
        } else {
          // Only a lower value (or an interval) is stated: our proven lower bound must reach it.
          bool ok = out.d.lo >= r.d_lo;
          if (r.d_hi != 0) ok = ok && out.d.lo <= r.d_hi;
          out.distance = ok ? CheckStatus::Pass : CheckStatus::Fail;
        }
      }
    }

    if (r.dual_k != 0) {
      const CyclicCode dual = dual_code(code, ctx, &cosets);
      const auto dd = minimum_distance(dual, cosets, opt);
      const bool ok = dual.k == r.dual_k && dd.exact() && dd.lo == r.dual_d &&
                      (code.generator * code.parity_check()) == Poly::x_n_minus_one(r.q, ctx.n());
      out.dual = ok ? CheckStatus::Pass : CheckStatus::Fail;
    }
  } catch (const Error& e) {
    out.notes.push_back(std::string("error: ") + e.what());
    out.generator_ok = false;
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

/// Records whose id or family name contains the filter text.
inline std::vector<ExampleRecord> filter_corpus(std::string_view filter) {
  std::vector<ExampleRecord> out;
  for (const auto& r : example_corpus())
    if (filter.empty() || r.id.find(filter) != std::string_view::npos ||
        family_name(r.family).find(filter) != std::string_view::npos)
      out.push_back(r);
  return out;
}

}  // namespace apncodes
