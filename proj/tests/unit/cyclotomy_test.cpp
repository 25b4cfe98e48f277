#include <gtest/gtest.h>

#include <set>

#include "apncodes/cyclotomy.hpp"
#include "apncodes/field.hpp"
#include "apncodes/minimal_poly.hpp"
#include "apncodes/corpus.hpp"

using namespace apncodes;

TEST(Cosets, PartitionResidues) {
  for (auto [q, n] : {std::pair<Scalar, std::uint32_t>{2, 31}, {2, 63}, {3, 26}, {3, 80}, {5, 24}, {2, 45}}) {
    const CosetTable t = build_cosets(q, n);
    std::vector<int> seen(n, 0);
    for (const auto& c : t.cosets()) {
      EXPECT_EQ(c.leader, *std::min_element(c.elements.begin(), c.elements.end()));
      for (auto e : c.elements) {
        ++seen[e];
        EXPECT_EQ(t.coset_of(e).leader, c.leader);
        EXPECT_TRUE(t.same_coset(e, (static_cast<std::uint64_t>(e) * q) % n));
      }
    }
    for (auto v : seen) EXPECT_EQ(v, 1);
  }
  EXPECT_THROW(build_cosets(3, 12), NotCoprime);
}

TEST(Cosets, KnownBinaryCosetsModulo31) {
  const CosetTable t = build_cosets(2, 31);
  EXPECT_EQ(t.leaders(), (std::vector<std::uint32_t>{0, 1, 3, 5, 7, 11, 15}));
  EXPECT_EQ(t.coset_of(3).elements, (std::vector<std::uint32_t>{3, 6, 12, 24, 17}));
  EXPECT_EQ(t.size_of(-1), 5u);
}

TEST(MinimalPolynomial, DegreeMatchesCosetAndHasRoot) {
  const FieldCtx ctx = default_field(3, 3);
  const CosetTable t = build_cosets(3, ctx.n());
  Poly all = Poly::constant(3, 1);
  for (auto l : t.leaders()) {
    const Poly mp = minimal_polynomial(l, ctx);
    EXPECT_EQ(mp.degree(), static_cast<int>(t.size_of(l)));
    EXPECT_TRUE(evaluate(mp, ctx.alpha_pow(l), ctx).is_zero());
    all = all * mp;
  }
  EXPECT_EQ(all, Poly::x_n_minus_one(3, ctx.n()));
  EXPECT_EQ(minimal_polynomial(1, ctx), ctx.modulus());
}

TEST(Epsilon, SmallValues) {
  // t = 3, T = 7: eps(1) = 3 (1, 2, 4), eps(3) = 2 (3, 6), eps(5) = eps(7) = 1.
  EXPECT_EQ(epsilon(1, 3), 3u);
  EXPECT_EQ(epsilon(3, 3), 2u);
  EXPECT_EQ(epsilon(5, 3), 1u);
  EXPECT_EQ(epsilon(7, 3), 1u);
  EXPECT_THROW(epsilon(2, 3), InvalidArgs);
  EXPECT_THROW(epsilon(9, 3), InvalidArgs);
}

TEST(Epsilon, OddCountClosedFormMatchesCount) {
  for (unsigned t = 1; t <= 16; ++t) EXPECT_EQ(count_odd_eps(t), count_odd_eps_closed(t)) << t;
}

TEST(Epsilon, BlocksPartitionOneToT) {
  for (unsigned t = 1; t <= 12; ++t) {
    const EpsilonTable tab = epsilon_table(t);
    std::set<std::uint64_t> covered;
    for (const auto& [a, block] : tab.blocks)
      for (auto v : block) EXPECT_TRUE(covered.insert(v).second) << v;
    EXPECT_EQ(covered.size(), tab.T);
    EXPECT_EQ(*covered.rbegin(), tab.T);
  }
}

TEST(Chain, RecursionMatchesBinomial) {
  // Strictly increasing (t-1)-tuples from [1, J) number C(J-1, t-1).
  auto binom = [](unsigned n, unsigned k) {
    std::uint64_t r = 1;
    for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  };
  for (unsigned J = 1; J <= 14; ++J)
    for (unsigned t = 1; t <= J; ++t) EXPECT_EQ(n_choose_chain(J, t), binom(J - 1, t - 1)) << J << "," << t;
  EXPECT_EQ(n_choose_chain_or_zero(2, 5), 0u);
  EXPECT_THROW(n_choose_chain(2, 5), InvalidArgs);
}

TEST(CosetLemmas, HoldInTheirRanges) {
  for (unsigned m : {7u, 9u, 11u}) EXPECT_TRUE(welch_cosets_hold(m)) << m;
  EXPECT_TRUE(two_to_h_cosets_hold(9, 3));
  EXPECT_TRUE(two_to_h_cosets_hold(10, 4));
  EXPECT_TRUE(shifted_block_cosets_hold(9, 2, 16));   // Niho, m = 9
  EXPECT_TRUE(shifted_block_cosets_hold(11, 2, 512));  // Kasami, m = 11, h = 2
  EXPECT_TRUE(geometric_cosets_hold(3, 7, 3));
  EXPECT_TRUE(geometric_cosets_hold(5, 6, 3));
  EXPECT_TRUE(coulter_mathews_cosets_hold(7, 3));
}

TEST(CosetLemmas, FailOutsideTheirRanges) {
  // m = 3: exponents 1 and 2^1 + 2 = 4 share a coset.
  EXPECT_FALSE(welch_cosets_hold(3));
  // 2^h exceeds the field: j = 2^h wraps into a smaller coset.
  EXPECT_FALSE(two_to_h_cosets_hold(4, 3));
}

TEST(CosetStats, InverseParityCountsEvenElements) {
  const CosetTable t = build_cosets(2, 7);
  const CosetStats st = coset_stats(t, 3);
  // C_1 = {1, 2, 4}: rho = 2, nu = 0; C_3 = {3, 6, 5}: rho = 1, nu = 1.
  EXPECT_EQ(st.nu_of_leader(1), 0);
  EXPECT_EQ(st.nu_of_leader(3), 1);
  EXPECT_THROW(coset_stats(build_cosets(3, 8), 2), InvalidArgs);
}
