#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "prime_field.hpp"

namespace apncodes {

struct Coset {
  std::uint32_t leader = 0;
  /// j, qj, q^2 j, ... in orbit order starting at the leader.
  std::vector<std::uint32_t> elements;
  std::size_t size() const { return elements.size(); }
};

/// All q-cyclotomic cosets modulo n, keyed by their smallest element.
class CosetTable {
 public:
  Scalar q() const { return q_; }
  std::uint32_t n() const { return n_; }
  const std::vector<Coset>& cosets() const { return cosets_; }

  std::vector<std::uint32_t> leaders() const {
    std::vector<std::uint32_t> out;
    out.reserve(cosets_.size());
    for (const auto& c : cosets_) out.push_back(c.leader);
    return out;
  }

  static std::uint32_t reduce(std::int64_t j, std::uint32_t n) {
    std::int64_t r = j % static_cast<std::int64_t>(n);
    return static_cast<std::uint32_t>(r < 0 ? r + n : r);
  }

  const Coset& coset_of(std::int64_t j) const { return cosets_[index_[reduce(j, n_)]]; }
  std::uint32_t leader_of(std::int64_t j) const { return coset_of(j).leader; }
  std::size_t size_of(std::int64_t j) const { return coset_of(j).size(); }
  bool same_coset(std::int64_t a, std::int64_t b) const {
    return index_[reduce(a, n_)] == index_[reduce(b, n_)];
  }

 private:
  friend CosetTable build_cosets(Scalar, std::uint32_t);
  Scalar q_ = 2;
  std::uint32_t n_ = 1;
  std::vector<Coset> cosets_;        // ascending by leader
  std::vector<std::uint32_t> index_;  // j -> position in cosets_
};

inline CosetTable build_cosets(Scalar q, std::uint32_t n) {
  if (n == 0) throw InvalidArgs("modulus n must be positive");
  if (std::gcd<std::uint64_t, std::uint64_t>(q, n) != 1)
    throw NotCoprime("gcd(" + std::to_string(q) + ", " + std::to_string(n) + ") != 1");
  CosetTable t;
  t.q_ = q;
  t.n_ = n;
  constexpr std::uint32_t kUnset = 0xFFFFFFFFu;
  t.index_.assign(n, kUnset);
  for (std::uint32_t j = 0; j < n; ++j) {
    if (t.index_[j] != kUnset) continue;
    Coset c;
    c.leader = j;
    std::uint32_t e = j;
    do {
      c.elements.push_back(e);
      t.index_[e] = static_cast<std::uint32_t>(t.cosets_.size());
      e = static_cast<std::uint32_t>((std::uint64_t{e} * q) % n);
    } while (e != j);
    t.cosets_.push_back(std::move(c));
  }
  return t;
}

/// Per-leader counts of even members (rho) and the parity nu = (m rho / l) mod 2.
struct CosetStats {
  std::vector<std::uint32_t> leaders;
  std::vector<std::uint32_t> rho;
  std::vector<int> nu;

  int nu_of_leader(std::uint32_t leader) const {
    auto it = std::lower_bound(leaders.begin(), leaders.end(), leader);
    if (it == leaders.end() || *it != leader) throw InvalidArgs("not a coset leader");
    return nu[static_cast<std::size_t>(it - leaders.begin())];
  }
};

/// Binary only: the parity statistic is defined for 2-cyclotomic cosets.
inline CosetStats coset_stats(const CosetTable& table, unsigned m) {
  if (table.q() != 2) throw InvalidArgs("coset statistics are defined for q = 2 only");
  CosetStats st;
  for (const auto& c : table.cosets()) {
    if (m % c.size() != 0) throw Error("coset size does not divide m");
    std::uint32_t rho = static_cast<std::uint32_t>(
        std::count_if(c.elements.begin(), c.elements.end(), [](std::uint32_t e) { return e % 2 == 0; }));
    st.leaders.push_back(c.leader);
    st.rho.push_back(rho);
    st.nu.push_back(static_cast<int>(((m / c.size()) * rho) % 2));
  }
  return st;
}

/// Number of i >= 0 with a * 2^i <= T, where T = 2^t - 1 and a is odd in [1, T].
inline unsigned epsilon(std::uint64_t a, unsigned t) {
  const std::uint64_t T = (std::uint64_t{1} << t) - 1;
  if (a == 0 || a % 2 == 0 || a > T) throw InvalidArgs("epsilon needs odd a in [1, 2^t - 1]");
  unsigned e = 0;
  for (std::uint64_t v = a; v <= T; v <<= 1) ++e;
  return e;
}

struct EpsilonTable {
  unsigned t = 1;
  std::uint64_t T = 1;
  std::map<std::uint64_t, unsigned> eps;                      // odd a -> epsilon
  std::map<std::uint64_t, std::vector<std::uint64_t>> blocks;  // odd a -> {a, 2a, ..., a 2^{eps-1}}
};

inline EpsilonTable epsilon_table(unsigned t) {
  if (t < 1 || t > 40) throw InvalidArgs("epsilon table needs 1 <= t <= 40");
  EpsilonTable tab;
  tab.t = t;
  tab.T = (std::uint64_t{1} << t) - 1;
  for (std::uint64_t a = 1; a <= tab.T; a += 2) {
    unsigned e = epsilon(a, t);
    tab.eps[a] = e;
    auto& b = tab.blocks[a];
    for (unsigned i = 0; i < e; ++i) b.push_back(a << i);
  }
  return tab;
}

/// Count of odd a <= 2^t - 1 whose epsilon is odd.
inline std::uint64_t count_odd_eps(unsigned t) {
  std::uint64_t c = 0;
  const std::uint64_t T = (std::uint64_t{1} << t) - 1;
  for (std::uint64_t a = 1; a <= T; a += 2) c += epsilon(a, t) % 2;
  return c;
}

/// Closed form (2^t + (-1)^{t-1}) / 3 for t >= 2, and 1 for t = 1.
inline std::uint64_t count_odd_eps_closed(unsigned t) {
  if (t == 1) return 1;
  std::int64_t v = (std::int64_t{1} << t) + (t % 2 == 1 ? 1 : -1);
  return static_cast<std::uint64_t>(v / 3);
}

/// Number of strictly increasing (t-1)-tuples drawn from [1, J), via the
/// summation recurrence. Requires J >= t >= 1.
inline std::uint64_t n_choose_chain(unsigned J, unsigned t) {
  if (t < 1 || J < t) throw InvalidArgs("n_choose_chain needs J >= t >= 1");
  if (t == 1) return 1;
  std::uint64_t s = 0;
  for (unsigned j = t - 1; j <= J - 1; ++j) s += n_choose_chain(j, t - 1);
  return s;
}

/// As n_choose_chain, but 0 whenever J < t.
inline std::uint64_t n_choose_chain_or_zero(unsigned J, unsigned t) {
  return J < t ? 0 : n_choose_chain(J, t);
}

/// True iff the given exponents lie in pairwise distinct cosets.
inline bool pairwise_distinct_cosets(const CosetTable& table, const std::vector<std::uint64_t>& exps) {
  std::set<std::uint32_t> seen;
  for (auto e : exps)
    if (!seen.insert(table.leader_of(static_cast<std::int64_t>(e % table.n()))).second) return false;
  return true;
}

/// True iff every coset containing one of exps (or its negative, if asked) has size m.
inline bool all_cosets_of_size(const CosetTable& table, const std::vector<std::uint64_t>& exps, unsigned m,
                               bool include_negatives = false) {
  for (auto e : exps) {
    auto r = static_cast<std::int64_t>(e % table.n());
    if (table.size_of(r) != m) return false;
    if (include_negatives && table.size_of(-r) != m) return false;
  }
  return true;
}

/// Exponents 1 + sum_{i in S} q^i over all subsets S of {1, ..., h-1} (S may be empty).
inline std::vector<std::uint64_t> geometric_subset_exponents(Scalar q, unsigned h, std::uint64_t base = 1,
                                                             bool include_empty = true) {
  std::vector<std::uint64_t> out;
  const unsigned bits = h >= 1 ? h - 1 : 0;
  for (std::uint64_t mask = include_empty ? 0 : 1; mask < (std::uint64_t{1} << bits); ++mask) {
    std::uint64_t e = base;
    for (unsigned i = 0; i < bits; ++i)
      if (mask >> i & 1) e += ipow(q, i + 1);
    out.push_back(e);
  }
  return out;
}

// Coset facts used by the closed-form generator predictions. Each returns true
// when the stated property holds for the given instance.

/// Five exponents 1, 3, 2^t+1, 2^t+2, 2^t+3 (m = 2t+1) in distinct cosets of size m.
inline bool welch_cosets_hold(unsigned m) {
  if (m % 2 == 0 || m < 3) throw InvalidArgs("Welch cosets need odd m >= 3");
  const unsigned t = (m - 1) / 2;
  auto tab = build_cosets(2, static_cast<std::uint32_t>(ipow(2, m) - 1));
  const std::uint64_t p = std::uint64_t{1} << t;
  std::vector<std::uint64_t> e{1, 3, p + 1, p + 2, p + 3};
  return pairwise_distinct_cosets(tab, e) && all_cosets_of_size(tab, e, m);
}

/// For 1 <= j <= 2^h the coset of j has size m, and odd j < 2^h lie in distinct cosets.
inline bool two_to_h_cosets_hold(unsigned m, unsigned h) {
  auto tab = build_cosets(2, static_cast<std::uint32_t>(ipow(2, m) - 1));
  std::vector<std::uint64_t> all, odd;
  for (std::uint64_t j = 1; j <= (std::uint64_t{1} << h); ++j) {
    all.push_back(j);
    if (j % 2 == 1 && j < (std::uint64_t{1} << h)) odd.push_back(j);
  }
  return all_cosets_of_size(tab, all, m) && pairwise_distinct_cosets(tab, odd);
}

/// With A = {0, ..., 2^h - 1} and B = shift + A: cosets of B have size m and are
/// pairwise distinct; the coset of i + shift meets the coset of odd j in A only at (i, j) = (0, 1).
inline bool shifted_block_cosets_hold(unsigned m, unsigned h, std::uint64_t shift) {
  auto tab = build_cosets(2, static_cast<std::uint32_t>(ipow(2, m) - 1));
  const std::uint64_t top = std::uint64_t{1} << h;
  std::vector<std::uint64_t> b;
  for (std::uint64_t i = 0; i < top; ++i) b.push_back(i + shift);
  if (!all_cosets_of_size(tab, b, m) || !pairwise_distinct_cosets(tab, b)) return false;
  for (std::uint64_t i = 0; i < top; ++i)
    for (std::uint64_t j = 1; j < top; j += 2) {
      bool meet = tab.same_coset(static_cast<std::int64_t>(i + shift), static_cast<std::int64_t>(j));
      if (meet != (i == 0 && j == 1)) return false;
    }
  return true;
}

/// Exponents 1 + sum q^{i} (distinct i in [1, h-1]) have cosets of size m, as do
/// their negatives, and all lie in distinct cosets.
inline bool geometric_cosets_hold(Scalar q, unsigned m, unsigned h) {
  auto tab = build_cosets(q, static_cast<std::uint32_t>(ipow(q, m) - 1));
  auto e = geometric_subset_exponents(q, h);
  return all_cosets_of_size(tab, e, m, true) && pairwise_distinct_cosets(tab, e);
}

/// Over GF(3^m): exponents 2 + sum 3^{i} and 1 + sum 3^{i} (distinct i in [1, h-1],
/// possibly none) have cosets of size m and are pairwise in distinct cosets.
inline bool coulter_mathews_cosets_hold(unsigned m, unsigned h) {
  auto tab = build_cosets(3, static_cast<std::uint32_t>(ipow(3, m) - 1));
  auto ones = geometric_subset_exponents(3, h, 1);
  auto twos = geometric_subset_exponents(3, h, 2);
  std::vector<std::uint64_t> all(ones);
  all.insert(all.end(), twos.begin(), twos.end());
  return all_cosets_of_size(tab, all, m, true) && pairwise_distinct_cosets(tab, all);
}

}  // namespace apncodes
