#pragma once

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cyclic_code.hpp"
#include "cyclotomy.hpp"
#include "errors.hpp"
#include "field.hpp"
#include "poly.hpp"

namespace apncodes {

/// Longest cyclic run a, a+b, a+2b, ... inside the marked set, for gcd(b, n) = 1.
inline std::uint32_t longest_run(const std::vector<bool>& marked, std::uint32_t step) {
  const auto n = static_cast<std::uint32_t>(marked.size());
  std::uint32_t best = 0, cur = 0, lead = 0;
  bool leading = true;
  std::uint64_t pos = 0;
  for (std::uint32_t i = 0; i < n; ++i, pos = (pos + step) % n) {
    if (marked[pos]) {
      ++cur;
      if (leading) ++lead;
    } else {
      leading = false;
      best = std::max(best, cur);
      cur = 0;
    }
  }
  if (leading) return n;  // every element marked
  return std::max(best, cur + lead);
}

inline constexpr std::uint32_t kMaxBchStep = 64;

/// Largest (run + 1) over steps b with gcd(b, n) = 1 and b <= min(n/2, 64), where
/// the run is a cyclic progression inside the root exponent set.
inline std::uint32_t bch_bound(const std::vector<bool>& roots) {
  const auto n = static_cast<std::uint32_t>(roots.size());
  if (n == 0) return 1;
  std::uint32_t best = 0;
  const std::uint32_t top = std::max<std::uint32_t>(1, std::min(n / 2, kMaxBchStep));
  for (std::uint32_t b = 1; b <= top; ++b)
    if (std::gcd(b, n) == 1) best = std::max(best, longest_run(roots, b));
  return best + 1;
}

/// Marks every exponent in the cosets of the given leaders; negate marks -j instead.
inline std::vector<bool> root_mask(const std::vector<std::uint32_t>& leaders, const CosetTable& cosets,
                                   bool negate = false) {
  std::vector<bool> mask(cosets.n(), false);
  for (auto l : leaders)
    for (auto e : cosets.coset_of(l).elements) mask[negate ? (e == 0 ? 0 : cosets.n() - e) : e] = true;
  return mask;
}

/// BCH-type bound from a list of zero exponents closed under multiplication by q.
inline std::uint32_t bch_bound(const std::vector<std::uint32_t>& zero_exponents, std::uint32_t n) {
  std::vector<bool> mask(n, false);
  for (auto e : zero_exponents) mask[e % n] = true;
  return bch_bound(mask);
}

/// Smallest even d >= 2 with d^2 - d + 1 >= n.
inline std::uint64_t square_root_bound(std::uint64_t n) {
  std::uint64_t d = 2;
  while (d * d - d + 1 < n) d += 2;
  return d;
}

/// Largest d with Hamming-ball volume V(n, floor((d-1)/2)) <= q^(n-k), capped by n - k + 1.
inline std::uint64_t sphere_packing_upper(std::uint64_t n, std::uint64_t k, std::uint64_t q) {
  using boost::multiprecision::cpp_int;
  if (k > n) throw InvalidArgs("sphere packing needs k <= n");
  if (k == 0) return n;  // zero code: no constraint beyond length
  cpp_int cap = 1;
  for (std::uint64_t i = 0; i < n - k; ++i) cap *= q;
  cpp_int vol = 0, binom = 1, qpow = 1;
  std::uint64_t t = 0;
  for (;; ++t) {
    vol += binom * qpow;
    if (vol > cap) break;
    if (t == n) {
      ++t;
      break;
    }
    binom = binom * (n - t) / (t + 1);
    qpow *= (q - 1);
  }
  // t is the first radius whose ball overflows, so radius t-1 is the largest feasible.
  const std::uint64_t d = 2 * (t - 1) + 2;
  return std::min(d, n - k + 1);
}

enum class DistanceStrategy { Auto, Enumerate, Syndrome, BoundsOnly };

inline std::string_view strategy_name(DistanceStrategy s) {
  switch (s) {
    case DistanceStrategy::Auto: return "auto";
    case DistanceStrategy::Enumerate: return "enumeration";
    case DistanceStrategy::Syndrome: return "syndrome-search";
    case DistanceStrategy::BoundsOnly: return "bounds";
  }
  return "unknown";
}

struct DistanceOptions {
  DistanceStrategy strategy = DistanceStrategy::Auto;
  /// Full enumeration when q^k is at most this.
  double enumeration_cap = 67108864.0;  // 2^26
  /// Largest meet-in-the-middle table, in entries.
  double table_cap = 4194304.0;  // 2^22
  /// Per-call budget of table entries plus lookups for the syndrome search.
  double max_work = 6e7;
  /// Stop the syndrome search after this weight (0 = no limit).
  unsigned max_weight = 0;
  double max_seconds = 120.0;
};

struct DistanceResult {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  DistanceStrategy strategy = DistanceStrategy::BoundsOnly;
  /// A codeword of weight hi when one was found by search.
  std::vector<Scalar> witness;
  bool exact() const { return lo == hi; }
};

struct BoundReport {
  std::uint32_t bch_lower = 1;
  std::uint32_t bch_lower_reciprocal = 1;
  bool even_weight_lift = false;
  std::optional<std::uint64_t> square_root_lower;
  std::uint64_t sphere_packing_upper = 0;
  std::uint64_t generator_weight = 0;
  DistanceResult distance;

  /// Best proven lower bound from the zero set, including the parity lift.
  std::uint64_t lower() const {
    std::uint64_t b = std::max(bch_lower, bch_lower_reciprocal);
    if (even_weight_lift && b % 2 == 1) ++b;
    return b;
  }
};

inline BoundReport bound_report(const CyclicCode& code, const CosetTable& cosets) {
  BoundReport r;
  r.bch_lower = bch_bound(root_mask(code.zero_set, cosets));
  r.bch_lower_reciprocal = bch_bound(root_mask(code.zero_set, cosets, true));
  r.even_weight_lift = code.q == 2 && code.generator.degree() >= 1 && code.generator.eval(1) == 0;
  r.sphere_packing_upper = sphere_packing_upper(code.n, code.k, code.q);
  r.generator_weight = code.generator.weight();
  return r;
}

namespace detail {

using Clock = std::chrono::steady_clock;

inline double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

inline double binom_d(double n, double k) {
  if (k < 0 || k > n) return 0;
  double r = 1;
  for (double i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

// Minimum nonzero weight over all q^k codewords, visiting them in a q-ary
// modular Gray order so each step adds one shifted generator.
inline std::optional<std::uint64_t> enumerate_min_weight(const CyclicCode& code, std::uint64_t stop_at,
                                                         double max_seconds, std::vector<Scalar>& witness) {
  const std::uint32_t n = code.n;
  const std::size_t k = code.k;
  const Scalar q = code.q;
  const auto& g = code.generator.coeffs();
  const std::size_t r = g.size();
  const auto t0 = Clock::now();
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint32_t> counter(k, 0);
  std::uint64_t best_step = 0, step = 0;

  auto advance = [&]() -> std::size_t {
    std::size_t j = 0;
    while (j < k && counter[j] == q - 1) counter[j++] = 0;
    if (j < k) ++counter[j];
    return j;
  };

  if (q == 2) {
    const std::size_t words = (n + 63) / 64;
    std::vector<std::uint64_t> rows(k * words, 0), cw(words, 0);
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t i = 0; i < r; ++i)
        if (g[i]) rows[j * words + (i + j) / 64] |= std::uint64_t{1} << ((i + j) % 64);
    for (;;) {
      const std::size_t j = advance();
      if (j == k) break;
      ++step;
      std::uint64_t w = 0;
      for (std::size_t x = 0; x < words; ++x) {
        cw[x] ^= rows[j * words + x];
        w += static_cast<std::uint64_t>(std::popcount(cw[x]));
      }
      if (w < best) {
        best = w;
        best_step = step;
        if (best <= stop_at) break;
      }
      if ((step & 0xFFFF) == 0 && seconds_since(t0) > max_seconds) return std::nullopt;
    }
  } else {
    std::vector<Scalar> cw(n, 0);
    std::uint64_t w = 0;
    for (;;) {
      const std::size_t j = advance();
      if (j == k) break;
      ++step;
      for (std::size_t i = 0; i < r; ++i) {
        if (!g[i]) continue;
        Scalar& c = cw[i + j];
        const bool was = c != 0;
        c = mod_add(c, g[i], q);
        w += (c != 0) - static_cast<std::uint64_t>(was);
      }
      if (w < best) {
        best = w;
        best_step = step;
        if (best <= stop_at) break;
      }
      if ((step & 0xFFFF) == 0 && seconds_since(t0) > max_seconds) return std::nullopt;
    }
  }
  if (best == std::numeric_limits<std::uint64_t>::max()) return std::nullopt;

  // Rebuild the minimum-weight codeword from its Gray index.
  std::fill(counter.begin(), counter.end(), 0);
  std::vector<Scalar> msg(k, 0);
  for (std::uint64_t s = 0; s < best_step; ++s) {
    const std::size_t j = advance();
    msg[j] = mod_add(msg[j], 1, q);
  }
  witness = (Poly(q, msg) * code.generator).coeffs();
  witness.resize(n, 0);
  return best;
}

using Key = unsigned __int128;

// Meet-in-the-middle search for low-weight codewords through syndromes
// s(c) = sum c_i (x^i mod g). Every codeword is a cyclic shift of one with c_0 = 1,
// so the left half always contains position 0 with coefficient 1 and the right
// half ranges over positions 1..n-1; a key collision is then a nonzero codeword.
class SyndromeSearch {
 public:
  explicit SyndromeSearch(const CyclicCode& code)
      : n_(code.n), q_(code.q), r_(static_cast<std::size_t>(code.generator.degree())) {
    bits_ = 1;
    while ((Scalar{1} << bits_) < q_) ++bits_;
    packable_ = r_ * bits_ <= 128;
    cols_.assign(std::size_t{n_} * (q_ - 1) * r_, 0);
    const auto& g = code.generator.coeffs();
    std::vector<Scalar> v(r_, 0);
    if (r_ > 0) v[0] = 1;
    for (std::uint32_t i = 0; i < n_; ++i) {
      for (Scalar c = 1; c < q_; ++c)
        for (std::size_t d = 0; d < r_; ++d) col(i, c)[d] = static_cast<std::uint8_t>(mod_mul(c, v[d], q_));
      // v <- v * x mod g (g monic)
      if (r_ == 0) continue;
      Scalar top = v[r_ - 1];
      for (std::size_t d = r_ - 1; d > 0; --d) v[d] = mod_sub(v[d - 1], mod_mul(top, g[d], q_), q_);
      v[0] = mod_neg(mod_mul(top, g[0], q_), q_);
    }
  }

  bool packable() const { return packable_; }

  double table_size(unsigned b) const { return binom_d(n_ - 1.0, b) * std::pow(q_ - 1.0, b); }
  double lookups(unsigned a) const { return binom_d(n_ - 1.0, a - 1.0) * std::pow(q_ - 1.0, a - 1.0); }

  /// Searches weight w with a left half of size a (including position 0).
  /// Returns a nonzero codeword of weight <= w, or nothing.
  std::optional<std::vector<Scalar>> search(unsigned w, unsigned a) {
    const unsigned b = w - a;
    table_.clear();
    table_.reserve(static_cast<std::size_t>(table_size(b)));
    std::vector<std::uint8_t> zero(r_, 0);
    enumerate(b, 1, zero, [&](const std::vector<std::uint8_t>& s) { table_.push_back(pack(s, true)); });
    std::sort(table_.begin(), table_.end());

    std::vector<std::uint8_t> start(col(0, 1), col(0, 1) + r_);
    std::optional<Key> hit;
    std::vector<std::pair<std::uint32_t, Scalar>> left{{0u, Scalar{1}}};
    enumerate_tracked(a - 1, 1, start, left, [&](const std::vector<std::uint8_t>& s) {
      Key key = pack(s, false);
      if (std::binary_search(table_.begin(), table_.end(), key)) {
        hit = key;
        return true;
      }
      return false;
    });
    if (!hit) return std::nullopt;

    // Recover the right half whose negated syndrome equals the hit key.
    std::vector<std::pair<std::uint32_t, Scalar>> right;
    enumerate_tracked(b, 1, zero, right, [&](const std::vector<std::uint8_t>& s) { return pack(s, true) == *hit; });
    std::vector<Scalar> cw(n_, 0);
    for (auto [pos, c] : found_left_) cw[pos] = mod_add(cw[pos], c, q_);
    for (auto [pos, c] : found_right_) cw[pos] = mod_add(cw[pos], c, q_);
    return cw;
  }

 private:
  std::uint8_t* col(std::uint32_t i, Scalar c) { return &cols_[(std::size_t{i} * (q_ - 1) + (c - 1)) * r_]; }

  Key pack(const std::vector<std::uint8_t>& s, bool negate) const {
    Key k = 0;
    for (std::size_t d = 0; d < r_; ++d) {
      Scalar v = negate ? mod_neg(s[d], q_) : s[d];
      k = (k << bits_) | v;
    }
    return k;
  }

  template <typename Visit>
  void enumerate(unsigned depth, std::uint32_t from, const std::vector<std::uint8_t>& acc, Visit&& visit) {
    if (depth == 0) {
      visit(acc);
      return;
    }
    std::vector<std::uint8_t> next(r_);
    for (std::uint32_t i = from; i + depth <= n_; ++i)
      for (Scalar c = 1; c < q_; ++c) {
        const std::uint8_t* cc = col(i, c);
        for (std::size_t d = 0; d < r_; ++d) {
          unsigned s = acc[d] + cc[d];
          next[d] = static_cast<std::uint8_t>(s >= q_ ? s - q_ : s);
        }
        enumerate(depth - 1, i + 1, next, visit);
      }
  }

  // Like enumerate, but tracks the chosen support and stops on the first visit
  // returning true; the stopping support is saved for witness reconstruction.
  template <typename Visit>
  bool enumerate_tracked(unsigned depth, std::uint32_t from, const std::vector<std::uint8_t>& acc,
                         std::vector<std::pair<std::uint32_t, Scalar>>& chosen, Visit&& visit) {
    if (depth == 0) {
      if (visit(acc)) {
        auto& dst = (chosen.empty() || chosen.front().first != 0) ? found_right_ : found_left_;
        dst = chosen;
        return true;
      }
      return false;
    }
    std::vector<std::uint8_t> next(r_);
    for (std::uint32_t i = from; i + depth <= n_; ++i)
      for (Scalar c = 1; c < q_; ++c) {
        const std::uint8_t* cc = col(i, c);
        for (std::size_t d = 0; d < r_; ++d) {
          unsigned s = acc[d] + cc[d];
          next[d] = static_cast<std::uint8_t>(s >= q_ ? s - q_ : s);
        }
        chosen.emplace_back(i, c);
        bool stop = enumerate_tracked(depth - 1, i + 1, next, chosen, visit);
        chosen.pop_back();
        if (stop) return true;
      }
    return false;
  }

  std::uint32_t n_;
  Scalar q_;
  std::size_t r_;
  unsigned bits_ = 1;
  bool packable_ = true;
  std::vector<std::uint8_t> cols_;
  std::vector<Key> table_;
  std::vector<std::pair<std::uint32_t, Scalar>> found_left_, found_right_;
};

inline std::uint64_t weight_of(const std::vector<Scalar>& v) {
  return static_cast<std::uint64_t>(std::count_if(v.begin(), v.end(), [](Scalar c) { return c != 0; }));
}

}  // namespace detail

/// Minimum distance, exact when a strategy completes, otherwise an interval
/// between the proven lower bound and the best known upper bound.
inline DistanceResult minimum_distance(const CyclicCode& code, const BoundReport& bounds,
                                       const DistanceOptions& opt = {}) {
  DistanceResult res;
  if (code.k == 0) throw InvalidArgs("minimum distance of the zero code is undefined");
  if (code.generator.degree() == 0) {
    res.lo = res.hi = 1;
    res.witness.assign(code.n, 0);
    res.witness[0] = 1;
    return res;
  }
  const bool even_only = bounds.even_weight_lift;
  std::uint64_t lo = std::max<std::uint64_t>(bounds.lower(), 1);
  std::uint64_t hi = std::min(bounds.sphere_packing_upper, bounds.generator_weight);
  res.lo = lo;
  res.hi = hi;
  {
    auto w = code.generator.coeffs();
    w.resize(code.n, 0);
    res.witness = w;
  }
  if (lo >= hi) {
    res.lo = hi;
    return res;
  }

  DistanceStrategy strat = opt.strategy;
  const double space = std::pow(static_cast<double>(code.q), static_cast<double>(code.k));
  if (strat == DistanceStrategy::Auto)
    strat = space <= opt.enumeration_cap ? DistanceStrategy::Enumerate : DistanceStrategy::Syndrome;

  if (strat == DistanceStrategy::Enumerate) {
    std::vector<Scalar> witness;
    auto best = detail::enumerate_min_weight(code, lo, opt.max_seconds, witness);
    if (best) {
      res.lo = res.hi = *best;
      res.witness = std::move(witness);
      res.strategy = DistanceStrategy::Enumerate;
    }
    return res;
  }
  if (strat != DistanceStrategy::Syndrome) return res;

  detail::SyndromeSearch search(code);
  if (!search.packable()) return res;
  const auto t0 = detail::Clock::now();
  double spent = 0;
  for (std::uint64_t w = lo; w < hi; ++w) {
    if (even_only && w % 2 == 1) continue;
    if (opt.max_weight && w > opt.max_weight) break;
    // Pick the split with the least work whose table fits.
    unsigned best_a = 0;
    double best_cost = 0;
    for (unsigned a = 1; a <= w; ++a) {
      const double t = search.table_size(static_cast<unsigned>(w) - a);
      if (t > opt.table_cap) continue;
      const double cost = t + search.lookups(a);
      if (best_a == 0 || cost < best_cost) {
        best_a = a;
        best_cost = cost;
      }
    }
    if (best_a == 0 || spent + best_cost > opt.max_work || detail::seconds_since(t0) > opt.max_seconds) break;
    spent += best_cost;
    res.strategy = DistanceStrategy::Syndrome;
    auto cw = search.search(static_cast<unsigned>(w), best_a);
    if (cw) {
      res.lo = res.hi = detail::weight_of(*cw);
      res.witness = std::move(*cw);
      return res;
    }
    // No codeword of weight w: the bound moves past it.
    res.lo = w + 1;
    if (even_only && res.lo % 2 == 1) ++res.lo;
  }
  if (res.lo >= res.hi) res.lo = res.hi;
  return res;
}

inline DistanceResult minimum_distance(const CyclicCode& code, const CosetTable& cosets,
                                       const DistanceOptions& opt = {}) {
  return minimum_distance(code, bound_report(code, cosets), opt);
}

/// Dual of a cyclic code: generator is the monic reciprocal of h(x) = (x^n - 1) / g(x).
inline CyclicCode dual_code(const CyclicCode& code, const FieldCtx& ctx, const CosetTable* cosets = nullptr) {
  return make_code(code.parity_check().reciprocal(), ctx, cosets);
}

enum class SubcodeKind { Equal, FirstInSecond, SecondInFirst, Incomparable };

inline std::string_view subcode_name(SubcodeKind k) {
  switch (k) {
    case SubcodeKind::Equal: return "equal";
    case SubcodeKind::FirstInSecond: return "first-in-second";
    case SubcodeKind::SecondInFirst: return "second-in-first";
    case SubcodeKind::Incomparable: return "incomparable";
  }
  return "unknown";
}

struct SubcodeRelation {
  SubcodeKind kind = SubcodeKind::Incomparable;
  /// Quotient of the larger generator by the smaller when one contains the other.
  Poly extra_factor;
  /// Binary only: the contained code is the even-weight subcode of the other.
  bool even_weight_subcode = false;
};

/// Relation by generator divisibility: the code with generator g_a lies in the
/// code with generator g_b iff g_b divides g_a.
inline SubcodeRelation subcode_relation(const CyclicCode& a, const CyclicCode& b) {
  if (a.n != b.n || a.q != b.q) throw InvalidArgs("codes differ in length or field");
  SubcodeRelation rel;
  rel.extra_factor = Poly::constant(a.q, 1);
  if (a.generator == b.generator) {
    rel.kind = SubcodeKind::Equal;
    return rel;
  }
  if (b.generator.divides(a.generator)) {
    rel.kind = SubcodeKind::FirstInSecond;
    rel.extra_factor = exact_div(a.generator, b.generator);
  } else if (a.generator.divides(b.generator)) {
    rel.kind = SubcodeKind::SecondInFirst;
    rel.extra_factor = exact_div(b.generator, a.generator);
  } else {
    return rel;
  }
  rel.even_weight_subcode = a.q == 2 && rel.extra_factor == Poly(2, {1, 1});
  return rel;
}

}  // namespace apncodes
