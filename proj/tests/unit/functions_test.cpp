#include <gtest/gtest.h>

#include "apncodes/corpus.hpp"
#include "apncodes/functions.hpp"

using namespace apncodes;

TEST(Validity, FamilyConditions) {
  EXPECT_TRUE(validate_params(Family::Gold, 2, 5, 2).valid);
  EXPECT_FALSE(validate_params(Family::Gold, 2, 6, 2).valid);  // gcd(2, 6) = 2
  EXPECT_FALSE(validate_params(Family::Gold, 3, 5, 1).valid);
  EXPECT_FALSE(validate_params(Family::Welch, 2, 6).valid);
  EXPECT_FALSE(validate_params(Family::Niho1, 2, 7).valid);
  EXPECT_TRUE(validate_params(Family::Niho2, 2, 7).valid);
  EXPECT_FALSE(validate_params(Family::Square, 2, 4).valid);
  EXPECT_FALSE(validate_params(Family::DembowskiOstrom, 3, 4, 0, 2).valid);  // 4 / gcd(4, 2) even
  EXPECT_FALSE(validate_params(Family::DembowskiOstrom, 3, 4, 0, 1).valid);
  EXPECT_TRUE(validate_params(Family::DembowskiOstrom, 3, 3, 0, 1).valid);
  EXPECT_FALSE(validate_params(Family::CoulterMathews, 3, 3, 2).valid);
  EXPECT_FALSE(validate_params(Family::Trinomial, 3, 4).valid);
  EXPECT_FALSE(validate_params(Family::Cube, 3, 2).valid);
}

TEST(Validity, ClaimsAndCoverage) {
  const auto inv = validate_params(Family::Inverse, 2, 5);
  EXPECT_TRUE(inv.claims_apn);
  EXPECT_TRUE(inv.theorem_covered);
  EXPECT_FALSE(validate_params(Family::Inverse, 2, 4).claims_apn);
  EXPECT_TRUE(validate_params(Family::Square, 5, 2).claims_planar);
  EXPECT_FALSE(validate_params(Family::Welch, 2, 5).theorem_covered);  // valid, below m = 7
  EXPECT_TRUE(validate_params(Family::Welch, 2, 5).valid);
  EXPECT_FALSE(validate_params(Family::Kasami, 2, 7, 1).theorem_covered);
  EXPECT_TRUE(validate_params(Family::Kasami, 2, 11, 2).theorem_covered);
}

TEST(Exponents, ClosedForms) {
  EXPECT_EQ(exponent_of(FunctionSpec::make(Family::Inverse), 2, 5), 30u);
  EXPECT_EQ(exponent_of(FunctionSpec::make(Family::Gold, 2), 2, 7), 5u);
  EXPECT_EQ(exponent_of(FunctionSpec::make(Family::Kasami, 2), 2, 7), 13u);
  EXPECT_EQ(exponent_of(FunctionSpec::make(Family::Welch), 2, 7), 11u);
  EXPECT_EQ(exponent_of(FunctionSpec::make(Family::Niho1), 2, 9), 16u + 4u - 1u);
  EXPECT_EQ(exponent_of(FunctionSpec::make(Family::TwoToHMinusOne, 3), 2, 7), 7u);
  EXPECT_EQ(exponent_of(FunctionSpec::make(Family::DembowskiOstrom, 0, 2), 3, 3), 10u);
  EXPECT_EQ(exponent_of(FunctionSpec::make(Family::QhGeometric, 3), 5, 6), 31u);
  EXPECT_EQ(exponent_of(FunctionSpec::make(Family::CoulterMathews, 3), 3, 7), 14u);
  EXPECT_THROW(exponent_of(FunctionSpec::make(Family::Gold, 2), 2, 6), InvalidParams);
  EXPECT_THROW(exponent_of(FunctionSpec::trinomial(FieldCtx::one()), 3, 3), NotMonomial);
}

TEST(Uniformity, KnownValues) {
  EXPECT_EQ(differential_uniformity(FunctionSpec::make(Family::Gold, 1), default_field(2, 5)), 2u);
  EXPECT_EQ(differential_uniformity(FunctionSpec::make(Family::Inverse), default_field(2, 5)), 2u);
  EXPECT_EQ(differential_uniformity(FunctionSpec::make(Family::Inverse), default_field(2, 4)), 4u);
  EXPECT_EQ(differential_uniformity(FunctionSpec::make(Family::Square), default_field(3, 3)), 1u);
  EXPECT_EQ(differential_uniformity(FunctionSpec::make(Family::Cube), default_field(5, 2)), 2u);
  EXPECT_EQ(differential_uniformity(FunctionSpec::generic(1), default_field(2, 3)), 8u);  // linear
}

TEST(Uniformity, MonomialShortcutAgreesWithFullScan) {
  for (auto [q, m, e] : {std::tuple<Scalar, unsigned, std::uint64_t>{2, 5, 7}, {2, 6, 13}, {3, 3, 5}, {5, 2, 7}}) {
    const FieldCtx ctx = default_field(q, m);
    const auto f = FunctionSpec::generic(e);
    EXPECT_EQ(differential_uniformity(f, ctx), differential_uniformity(f, ctx, true)) << q << "^" << m << " x^" << e;
  }
}

TEST(Uniformity, TrinomialIsPlanarOverGf27) {
  const FieldCtx ctx = default_field(3, 3);
  for (std::uint32_t i = 0; i <= ctx.n(); ++i) {
    const auto f = FunctionSpec::trinomial(ctx.from_encoded(i));
    EXPECT_EQ(differential_uniformity(f, ctx), 1u) << ctx.to_string(f.u);
  }
}

TEST(Uniformity, RefusesLargeFields) {
  EXPECT_THROW(differential_uniformity(FunctionSpec::make(Family::Gold, 1), default_field(2, 15)), FieldTooLarge);
}

TEST(Trinomial, Flags) {
  const FieldCtx ctx = default_field(3, 3);
  // u = 0 and u = -1 satisfy u^6 + u = 0; u = 1 does not.
  EXPECT_TRUE(trinomial_flags(FieldCtx::zero(), ctx).u6u_zero);
  EXPECT_TRUE(trinomial_flags(ctx.parse("-1"), ctx).u6u_zero);
  EXPECT_FALSE(trinomial_flags(FieldCtx::one(), ctx).u6u_zero);
  // delta_1: Tr(1 + 1 - 1) = Tr(1) = 3 mod 3 = 0.
  EXPECT_EQ(trinomial_flags(FieldCtx::one(), ctx).delta, 0);
}

TEST(Families, ParseNamesAndAliases) {
  for (const auto& f : kFamilies) EXPECT_EQ(parse_family(f.name), f.family);
  EXPECT_EQ(parse_family("do"), Family::DembowskiOstrom);
  EXPECT_EQ(parse_family("2h-1"), Family::TwoToHMinusOne);
  EXPECT_THROW(parse_family("nope"), ParseError);
}
