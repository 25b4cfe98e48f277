#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "poly.hpp"
#include "prime_field.hpp"

namespace apncodes {

/// Element of GF(q^m) stored as its discrete log base alpha, or the ZERO sentinel.
struct FieldElement {
  static constexpr std::uint32_t kZero = std::numeric_limits<std::uint32_t>::max();
  std::uint32_t log = kZero;

  bool is_zero() const { return log == kZero; }
  friend bool operator==(FieldElement a, FieldElement b) { return a.log == b.log; }
  friend bool operator!=(FieldElement a, FieldElement b) { return a.log != b.log; }
};

inline constexpr std::uint64_t kMaxFieldPeriod = std::uint64_t{1} << 24;

/// GF(q^m) for prime q with alpha = x mod modulus. Immutable once built.
///
/// Elements in vector form are encoded as the integer sum of c_i q^i over the
/// coordinates c_0..c_{m-1} in the polynomial basis 1, alpha, ..., alpha^{m-1}.
class FieldCtx {
 public:
  Scalar q() const { return q_; }
  unsigned m() const { return m_; }
  /// Multiplicative order of alpha, q^m - 1.
  std::uint32_t n() const { return n_; }
  /// Number of field elements, q^m.
  std::uint32_t size() const { return n_ + 1; }
  const Poly& modulus() const { return modulus_; }

  static FieldElement zero() { return {}; }
  static FieldElement one() { return {0}; }

  FieldElement alpha_pow(std::int64_t k) const {
    std::int64_t r = k % static_cast<std::int64_t>(n_);
    if (r < 0) r += n_;
    return {static_cast<std::uint32_t>(r)};
  }

  FieldElement from_scalar(std::int64_t c) const { return from_encoded(mod_reduce(c, q_)); }

  FieldElement from_encoded(std::uint32_t enc) const {
    if (enc > n_) throw InvalidArgs("encoded element out of range");
    return {log_[enc]};
  }

  FieldElement from_vector(const std::vector<Scalar>& coords) const {
    if (coords.size() > m_) throw InvalidArgs("vector longer than extension degree");
    std::uint32_t enc = 0, place = 1;
    for (Scalar c : coords) {
      enc += (c % q_) * place;
      place *= q_;
    }
    return from_encoded(enc);
  }

  std::uint32_t encoded(FieldElement a) const { return a.is_zero() ? 0 : exp_[a.log]; }

  std::vector<Scalar> to_vector(FieldElement a) const {
    std::vector<Scalar> v(m_, 0);
    std::uint32_t enc = encoded(a);
    for (unsigned i = 0; i < m_; ++i) {
      v[i] = enc % q_;
      enc /= q_;
    }
    return v;
  }

  /// Whether a lies in the prime subfield GF(q).
  bool in_base_field(FieldElement a) const { return encoded(a) < q_; }

  /// The GF(q) value of a base-field element; throws if a is outside GF(q).
  Scalar to_scalar(FieldElement a) const {
    std::uint32_t enc = encoded(a);
    if (enc >= q_) throw InvalidArgs("element is not in the base field");
    return enc;
  }

  FieldElement add(FieldElement a, FieldElement b) const {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    std::uint32_t d = b.log >= a.log ? b.log - a.log : b.log + n_ - a.log;
    std::uint32_t z = zech_[d];
    if (z == FieldElement::kZero) return {};
    return {add_log(a.log, z)};
  }

  FieldElement neg(FieldElement a) const {
    if (a.is_zero() || q_ == 2) return a;
    return {add_log(a.log, n_ / 2)};
  }

  FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

  FieldElement mul(FieldElement a, FieldElement b) const {
    if (a.is_zero() || b.is_zero()) return {};
    return {add_log(a.log, b.log)};
  }

  FieldElement inv(FieldElement a) const {
    if (a.is_zero()) throw DivisionByZero("inverse of zero field element");
    return {a.log == 0 ? 0 : n_ - a.log};
  }

  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }

  /// a^e with 0^0 = 1; exponents reduce mod n on nonzero bases.
  FieldElement pow(FieldElement a, std::uint64_t e) const {
    if (a.is_zero()) return e == 0 ? one() : zero();
    return {static_cast<std::uint32_t>((std::uint64_t{a.log} * (e % n_)) % n_)};
  }

  /// Absolute trace to GF(q).
  Scalar trace(FieldElement a) const { return a.is_zero() ? 0 : trace_[a.log]; }

  /// Tr(alpha^k) for k in [0, n).
  const std::vector<Scalar>& trace_table() const { return trace_; }

  /// Pretty form: "0" or "alpha^k".
  std::string to_string(FieldElement a) const {
    return a.is_zero() ? "0" : "alpha^" + std::to_string(a.log);
  }

  /// Accepts "0", "1", "-1", "alpha", "alpha^k", "a^k", "-alpha^k", or a bare integer (base field).
  FieldElement parse(std::string_view text) const {
    std::string s;
    for (char ch : text)
      if (ch != ' ') s += ch;
    if (s.empty()) throw ParseError("empty field element");
    bool negate = false;
    if (s[0] == '-') {
      negate = true;
      s.erase(0, 1);
    }
    FieldElement v;
    auto digits_only = [](const std::string& t) {
      return !t.empty() && t.find_first_not_of("0123456789") == std::string::npos;
    };
    if (digits_only(s)) {
      v = from_scalar(static_cast<std::int64_t>(std::stoull(s) % q_));
    } else {
      std::size_t caret = s.find('^');
      std::string base = s.substr(0, caret);
      if (base != "alpha" && base != "a") throw ParseError("cannot parse field element '" + std::string(text) + "'");
      std::int64_t k = 1;
      if (caret != std::string::npos) {
        std::string e = s.substr(caret + 1);
        bool eneg = !e.empty() && e[0] == '-';
        if (eneg) e.erase(0, 1);
        if (!digits_only(e)) throw ParseError("bad exponent in '" + std::string(text) + "'");
        k = static_cast<std::int64_t>(std::stoull(e) % n_);
        if (eneg) k = -k;
      }
      v = alpha_pow(k);
    }
    return negate ? neg(v) : v;
  }

 private:
  friend FieldCtx build_field(Scalar, unsigned, const Poly&);

  std::uint32_t add_log(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    return s >= n_ ? s - n_ : s;
  }

  Scalar q_ = 2;
  unsigned m_ = 1;
  std::uint32_t n_ = 1;
  Poly modulus_;
  std::vector<std::uint32_t> exp_;    // log -> encoded
  std::vector<std::uint32_t> log_;    // encoded -> log, kZero for 0
  std::vector<std::uint32_t> zech_;   // k -> log(1 + alpha^k)
  std::vector<Scalar> trace_;         // k -> Tr(alpha^k)
};

namespace detail {

// x^e mod f over GF(q), by square and multiply.
inline Poly powmod_x(std::uint64_t e, const Poly& f) {
  const Scalar q = f.q();
  Poly result = Poly::constant(q, 1) % f;
  Poly base = Poly::monomial(q, 1) % f;
  while (e) {
    if (e & 1) result = (result * base) % f;
    base = (base * base) % f;
    e >>= 1;
  }
  return result;
}

}  // namespace detail

/// Ben-Or irreducibility test over GF(q).
inline bool is_irreducible(const Poly& f) {
  const int d = f.degree();
  if (d < 1) return false;
  if (d == 1) return true;
  const Scalar q = f.q();
  const Poly x = Poly::monomial(q, 1);
  Poly xp = x;
  for (int i = 1; i <= d / 2; ++i) {
    // xp = x^{q^i} mod f
    Poly acc = Poly::constant(q, 1);
    Poly b = xp;
    for (Scalar e = q; e; e >>= 1) {
      if (e & 1) acc = (acc * b) % f;
      b = (b * b) % f;
    }
    xp = acc;
    if (gcd(f, xp - x).degree() > 0) return false;
  }
  return true;
}

/// Builds GF(q^m) with alpha = x mod modulus. The modulus must be monic of
/// degree m, irreducible, and have x as a primitive root.
inline FieldCtx build_field(Scalar q, unsigned m, const Poly& modulus) {
  if (!is_prime(q)) throw UnsupportedBase("base field order " + std::to_string(q) + " is not prime");
  if (m < 1) throw InvalidArgs("extension degree must be at least 1");
  if (modulus.q() != q) throw InvalidArgs("modulus is over a different base field");
  if (modulus.degree() != static_cast<int>(m) || !modulus.is_monic())
    throw InvalidArgs("modulus must be monic of degree " + std::to_string(m));
  long double size = 1;
  for (unsigned i = 0; i < m; ++i) size *= q;
  if (size - 1 > static_cast<long double>(kMaxFieldPeriod))
    throw FieldTooLarge("q^m - 1 exceeds " + std::to_string(kMaxFieldPeriod));

  FieldCtx f;
  f.q_ = q;
  f.m_ = m;
  f.n_ = static_cast<std::uint32_t>(ipow(q, m) - 1);
  f.modulus_ = modulus;
  const std::uint32_t n = f.n_;

  f.exp_.assign(n, 0);
  f.log_.assign(std::size_t{n} + 1, FieldElement::kZero);
  std::vector<Scalar> v(m, 0), low(m);
  for (unsigned i = 0; i < m; ++i) low[i] = modulus[i];
  v[0] = 1;
  std::vector<std::uint32_t> place(m, 1);
  for (unsigned i = 1; i < m; ++i) place[i] = place[i - 1] * q;

  auto encode = [&] {
    std::uint32_t e = 0;
    for (unsigned i = 0; i < m; ++i) e += v[i] * place[i];
    return e;
  };

  bool primitive = true;
  for (std::uint32_t i = 0; i < n; ++i) {
    std::uint32_t e = encode();
    if (e == 0 || f.log_[e] != FieldElement::kZero) {
      primitive = false;
      break;
    }
    f.exp_[i] = e;
    f.log_[e] = i;
    // v <- v * x mod modulus
    Scalar top = v[m - 1];
    for (unsigned k = m - 1; k > 0; --k) v[k] = mod_sub(v[k - 1], mod_mul(top, low[k], q), q);
    v[0] = mod_neg(mod_mul(top, low[0], q), q);
  }
  if (primitive && encode() != 1) primitive = false;
  if (!primitive) {
    if (!is_irreducible(modulus)) throw NotIrreducible(modulus.to_string() + " factors over GF(" + std::to_string(q) + ")");
    throw NotPrimitive("x has order below " + std::to_string(n) + " modulo " + modulus.to_string());
  }

  f.zech_.assign(n, FieldElement::kZero);
  for (std::uint32_t k = 0; k < n; ++k) {
    std::uint32_t e = f.exp_[k];
    Scalar d0 = e % q;
    std::uint32_t s = e - d0 + (d0 + 1) % q;
    f.zech_[k] = f.log_[s];
  }

  // Trace is linear: tabulate Tr on the polynomial basis, then expand.
  std::vector<Scalar> basis_tr(m);
  for (unsigned k = 0; k < m; ++k) {
    FieldElement sum = FieldCtx::zero(), x = f.alpha_pow(k);
    for (unsigned j = 0; j < m; ++j) {
      sum = f.add(sum, x);
      x = f.pow(x, q);
    }
    basis_tr[k] = f.to_scalar(sum);
  }
  f.trace_.assign(n, 0);
  for (std::uint32_t k = 0; k < n; ++k) {
    std::uint32_t e = f.exp_[k];
    std::uint64_t t = 0;
    for (unsigned i = 0; i < m; ++i) {
      t += std::uint64_t{e % q} * basis_tr[i];
      e /= q;
    }
    f.trace_[k] = static_cast<Scalar>(t % q);
  }
  return f;
}

inline FieldCtx build_field(Scalar q, unsigned m, std::string_view modulus_text) {
  return build_field(q, m, parse_poly(q, modulus_text));
}

}  // namespace apncodes
