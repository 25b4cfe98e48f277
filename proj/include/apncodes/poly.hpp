#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "prime_field.hpp"

namespace apncodes {

/// Dense univariate polynomial over the prime field GF(q), ascending
/// coefficients, never carrying trailing zeros.
class Poly {
 public:
  explicit Poly(Scalar q = 2) : q_(q) {}

  Poly(Scalar q, std::vector<Scalar> coeffs) : q_(q), c_(std::move(coeffs)) {
    for (auto& v : c_) v %= q_;
    trim();
  }

  static Poly constant(Scalar q, Scalar c) { return Poly(q, {c}); }

  static Poly monomial(Scalar q, std::size_t degree, Scalar c = 1) {
    std::vector<Scalar> v(degree + 1, 0);
    v[degree] = c;
    return Poly(q, std::move(v));
  }

  /// x^n - 1.
  static Poly x_n_minus_one(Scalar q, std::size_t n) {
    std::vector<Scalar> v(n + 1, 0);
    v[0] = q - 1;
    v[n] = 1;
    if (n == 0) v = {0};
    return Poly(q, std::move(v));
  }

  Scalar q() const { return q_; }
  const std::vector<Scalar>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Scalar operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  Scalar leading() const { return c_.empty() ? 0 : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  /// Number of nonzero coefficients.
  std::size_t weight() const {
    return static_cast<std::size_t>(std::count_if(c_.begin(), c_.end(), [](Scalar v) { return v != 0; }));
  }

  Poly monic() const {
    if (is_zero()) return *this;
    Scalar inv = mod_inv(leading(), q_);
    std::vector<Scalar> v(c_);
    for (auto& x : v) x = mod_mul(x, inv, q_);
    return Poly(q_, std::move(v));
  }

  Poly scaled(Scalar s) const {
    std::vector<Scalar> v(c_);
    for (auto& x : v) x = mod_mul(x, s % q_, q_);
    return Poly(q_, std::move(v));
  }

  /// Coefficients reversed, then made monic. Requires a nonzero constant term.
  Poly reciprocal() const {
    if (is_zero() || c_.front() == 0) throw ZeroConstantTerm("reciprocal needs f(0) != 0");
    std::vector<Scalar> v(c_.rbegin(), c_.rend());
    return Poly(q_, std::move(v)).monic();
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.q_ == b.q_ && a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  friend Poly operator+(const Poly& a, const Poly& b) {
    check_same(a, b);
    std::vector<Scalar> v(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = mod_add(a[i], b[i], a.q_);
    return Poly(a.q_, std::move(v));
  }

  friend Poly operator-(const Poly& a, const Poly& b) {
    check_same(a, b);
    std::vector<Scalar> v(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = mod_sub(a[i], b[i], a.q_);
    return Poly(a.q_, std::move(v));
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    check_same(a, b);
    if (a.is_zero() || b.is_zero()) return Poly(a.q_);
    const Scalar q = a.q_;
    std::vector<std::uint64_t> acc(a.c_.size() + b.c_.size() - 1, 0);
    // Accumulate raw products and reduce lazily; q < 2^16 keeps this far from overflow.
    const std::uint64_t flush = q < 65536 ? (std::uint64_t{1} << 62) / (std::uint64_t{q} * q) : 1;
    std::uint64_t pending = 0;
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) acc[i + j] += std::uint64_t{a.c_[i]} * b.c_[j];
      if (++pending >= flush) {
        for (auto& x : acc) x %= q;
        pending = 0;
      }
    }
    std::vector<Scalar> v(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) v[i] = static_cast<Scalar>(acc[i] % q);
    return Poly(q, std::move(v));
  }

  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  /// Quotient and remainder with deg(remainder) < deg(divisor).
  friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    check_same(a, b);
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    const Scalar q = a.q_;
    if (a.degree() < b.degree()) return {Poly(q), a};
    std::vector<Scalar> r(a.c_);
    const std::size_t db = b.c_.size() - 1;
    std::vector<Scalar> quot(r.size() - db, 0);
    reduce_in_place(r, b.c_, q, &quot);
    r.resize(db);
    return {Poly(q, std::move(quot)), Poly(q, std::move(r))};
  }

  friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

  /// Exact division; throws NonExactDivision on a nonzero remainder.
  friend Poly exact_div(const Poly& a, const Poly& b) {
    auto [quot, rem] = divmod(a, b);
    if (!rem.is_zero()) throw NonExactDivision("remainder " + rem.to_string() + " is nonzero");
    return quot;
  }

  bool divides(const Poly& other) const { return (other % *this).is_zero(); }

  /// Monic gcd; gcd(0, 0) = 0.
  friend Poly gcd(Poly a, Poly b) {
    check_same(a, b);
    const Scalar q = a.q_;
    std::vector<Scalar> x = std::move(a.c_), y = std::move(b.c_);
    while (!y.empty()) {
      reduce_in_place(x, y, q, nullptr);
      x.resize(y.size() - 1);
      while (!x.empty() && x.back() == 0) x.pop_back();
      std::swap(x, y);
    }
    return Poly(q, std::move(x)).monic();
  }

  /// Horner evaluation at a base-field point.
  Scalar eval(Scalar x) const {
    std::uint64_t acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = (acc * x + *it) % q_;
    return static_cast<Scalar>(acc);
  }

  /// Pretty form, e.g. "x^5+2x^3+x+1"; the zero polynomial prints as "0".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
      Scalar c = c_[static_cast<std::size_t>(i)];
      if (c == 0) continue;
      if (!first) os << '+';
      first = false;
      if (i == 0) {
        os << c;
        continue;
      }
      if (c != 1) os << c;
      os << 'x';
      if (i > 1) os << '^' << i;
    }
    return os.str();
  }

  /// Canonical ascending coefficient list, e.g. "1,1,0,1".
  std::string to_coeff_list() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
    return os.str();
  }

 private:
  static void check_same(const Poly& a, const Poly& b) {
    if (a.q_ != b.q_) throw InvalidArgs("polynomials over different fields");
  }

  // Long division of r by d in place; r keeps the remainder in its low
  // deg(d) slots. Optionally records quotient coefficients.
  static void reduce_in_place(std::vector<Scalar>& r, const std::vector<Scalar>& d, Scalar q,
                              std::vector<Scalar>* quot) {
    const std::size_t dd = d.size() - 1;
    if (r.size() <= dd) return;
    const Scalar lead_inv = mod_inv(d.back(), q);
    if (q == 2) {
      for (std::size_t top = r.size() - 1; top >= dd; --top) {
        if (r[top]) {
          const std::size_t shift = top - dd;
          if (quot) (*quot)[shift] = 1;
          Scalar* rp = r.data() + shift;
          for (std::size_t i = 0; i < dd; ++i) rp[i] ^= d[i];
          r[top] = 0;
        }
        if (top == 0) break;
      }
      return;
    }
    // neg_row[v] = -(c * v) mod q for the current multiplier c.
    std::vector<Scalar> neg_row(q < 4096 ? q : 0);
    for (std::size_t top = r.size() - 1; top >= dd; --top) {
      const Scalar lead = r[top];
      if (lead) {
        const Scalar c = mod_mul(lead, lead_inv, q);
        const std::size_t shift = top - dd;
        if (quot) (*quot)[shift] = c;
        Scalar* rp = r.data() + shift;
        if (!neg_row.empty()) {
          for (Scalar v = 0; v < q; ++v) neg_row[v] = mod_neg(mod_mul(c, v, q), q);
          for (std::size_t i = 0; i < dd; ++i) {
            Scalar s = rp[i] + neg_row[d[i]];
            rp[i] = s >= q ? s - q : s;
          }
        } else {
          for (std::size_t i = 0; i < dd; ++i) rp[i] = mod_sub(rp[i], mod_mul(c, d[i], q), q);
        }
        r[top] = 0;
      }
      if (top == 0) break;
    }
  }

  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  Scalar q_;
  std::vector<Scalar> c_;
};

/// Product of a list of polynomials (1 for an empty list).
inline Poly product(Scalar q, const std::vector<Poly>& factors) {
  Poly acc = Poly::constant(q, 1);
  for (const auto& f : factors) acc *= f;
  return acc;
}

/// Parses either an ascending coefficient list ("1,1,0,1") or a pretty
/// polynomial ("x^3+x+1", "2x^5 - x + 1", "2*x^2"). Coefficients are reduced
/// modulo q, so negative coefficients are accepted.
inline Poly parse_poly(Scalar q, std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw ParseError("empty polynomial");

  auto parse_int = [&](std::size_t& i) -> std::int64_t {
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i) throw ParseError("expected integer in '" + s + "'");
    return std::stoll(s.substr(start, i - start));
  };

  if (s.find('x') == std::string::npos && s.find('X') == std::string::npos) {
    std::vector<Scalar> coeffs;
    std::size_t i = 0;
    while (i <= s.size()) {
      bool neg = false;
      if (i < s.size() && s[i] == '-') {
        neg = true;
        ++i;
      }
      std::int64_t v = parse_int(i);
      coeffs.push_back(mod_reduce(neg ? -v : v, q));
      if (i == s.size()) break;
      if (s[i] != ',') throw ParseError("unexpected '" + std::string(1, s[i]) + "' in coefficient list");
      ++i;
    }
    return Poly(q, std::move(coeffs));
  }

  std::vector<std::int64_t> acc;
  std::size_t i = 0;
  while (i < s.size()) {
    std::int64_t sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    }
    std::int64_t coef = 1;
    bool have_coef = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      coef = parse_int(i);
      have_coef = true;
    }
    if (i < s.size() && s[i] == '*') ++i;
    std::size_t deg = 0;
    if (i < s.size() && (s[i] == 'x' || s[i] == 'X')) {
      ++i;
      deg = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        deg = static_cast<std::size_t>(parse_int(i));
      }
    } else if (!have_coef) {
      throw ParseError("malformed term in '" + s + "'");
    }
    if (acc.size() <= deg) acc.resize(deg + 1, 0);
    acc[deg] += sign * coef;
    if (i < s.size() && s[i] != '+' && s[i] != '-') throw ParseError("unexpected '" + std::string(1, s[i]) + "'");
  }
  std::vector<Scalar> coeffs(acc.size());
  for (std::size_t k = 0; k < acc.size(); ++k) coeffs[k] = mod_reduce(acc[k], q);
  return Poly(q, std::move(coeffs));
}

}  // namespace apncodes
