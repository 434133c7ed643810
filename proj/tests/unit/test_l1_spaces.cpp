#include <gtest/gtest.h>

#include <random>

#include "core/errors.hpp"
#include "core/l1_spaces.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace vmeasure;
using fixture::vec;

namespace {

const GeometricSequence kG({{0, 2}, {1, Rational(1, 2)}}, 2, 0, 0);

}  // namespace

TEST(NuNorm, Examples) {
  const auto nu = fixture::measure(fixture::e1_function(NormExponent::Infinity));
  EXPECT_EQ(nu_norm(kG, nu), ExtendedReal(2));
  EXPECT_EQ(nu_norm(GeometricSequence::zero(), nu), ExtendedReal(0));
  const auto e3 = fixture::measure(fixture::e3_function());
  EXPECT_EQ(nu_norm(GeometricSequence::constant(1), e3), ExtendedReal(10));
}

TEST(MfIsometry, Examples) {
  const auto nu = fixture::measure(fixture::e1_function(NormExponent::Infinity));
  const auto check = mf_isometry_check(kG, nu);
  EXPECT_EQ(check.lhs, ExtendedReal(2));
  EXPECT_EQ(check.rhs, ExtendedReal(2));
  EXPECT_TRUE(check.equal);
  EXPECT_TRUE(check.membership_agrees);
  const auto zero = mf_isometry_check(GeometricSequence::zero(), nu);
  EXPECT_TRUE(zero.equal);
  EXPECT_EQ(zero.lhs, ExtendedReal(0));
  const auto constant = fixture::measure(fixture::constant_function());
  const auto b = RepresentableSet::finite({0, 3, 4});
  const auto indicator = mf_isometry_check(GeometricSequence::indicator(b), constant);
  EXPECT_EQ(indicator.lhs, constant.semivariation(b));
  EXPECT_TRUE(indicator.equal);
  const auto divergent = mf_isometry_check(GeometricSequence::constant(1), constant);
  EXPECT_TRUE(divergent.lhs.is_infinite());
  EXPECT_TRUE(divergent.equal);
  EXPECT_TRUE(divergent.membership_agrees);
}

TEST(Integrate, Examples) {
  const auto nu = fixture::measure(fixture::e1_function(NormExponent::Infinity));
  EXPECT_EQ(std::get<FiniteDimVector>(integrate(kG, nu, RepresentableSet::all())),
            vec({2, NormExponent::Infinity}, {2, 1}));
  const auto b = RepresentableSet::finite({1});
  EXPECT_EQ(integrate(GeometricSequence::indicator(b), nu, RepresentableSet::all()), nu.evaluate(b));
  const auto e3 = fixture::measure(fixture::e3_function());
  const auto g = GeometricSequence::geometric(3, Rational(1, 3));
  // integral of g f dmu = 3 / (1 - 1/6) = 18/5, times (3,4).
  EXPECT_EQ(std::get<FiniteDimVector>(integrate(g, e3, RepresentableSet::all())),
            vec({2, NormExponent::Two}, {Rational(54, 5), Rational(72, 5)}));
  const auto constant = fixture::measure(fixture::constant_function());
  EXPECT_THROW(integrate(GeometricSequence::constant(1), constant, RepresentableSet::all()),
               NotNuIntegrableError);
  const auto ones = fixture::diagonal(GeometricSequence::constant(1));
  EXPECT_TRUE(in_L1w(GeometricSequence::constant(1), ones));
  EXPECT_FALSE(in_L1(GeometricSequence::constant(1), ones));
  EXPECT_THROW(integrate(GeometricSequence::constant(1), ones, RepresentableSet::all()), NotNuIntegrableError);
}

TEST(VariationNorm, Examples) {
  const auto nu = fixture::measure(fixture::e1_function(NormExponent::Infinity));
  const auto check = l1_variation_check(kG, nu);
  EXPECT_EQ(check.lhs, ExtendedReal(3));
  EXPECT_TRUE(check.equal);
  EXPECT_EQ(variation_norm(GeometricSequence::zero(), nu), ExtendedReal(0));
}

TEST(Multipliers, RankOneSpacesCoincide) {
  const auto e3 = fixture::measure(fixture::e3_function());
  for (const auto& g : {GeometricSequence::constant(1), GeometricSequence::geometric(1, 2),
                        GeometricSequence::geometric(1, 3), GeometricSequence::delta(4, -7)}) {
    const auto v = classify_multiplier(g, e3);
    EXPECT_EQ(v.in_L1w, v.in_L1);
    EXPECT_EQ(v.in_L1, v.in_L1_of_variation);
    EXPECT_EQ(v.nu_norm, v.variation_norm);
  }
}

TEST(Multipliers, NormalizationZeroesNullAtoms) {
  const FiniteDimSpace r1{1, NormExponent::One};
  const auto nu = fixture::measure(RankDecomposedFunction::rank_one(
      GeometricSequence::geometric(1, Rational(1, 2)).restricted(RepresentableSet::cofinite({1})), vec(r1, {1})));
  const auto g = GeometricSequence::delta(1, 100) + GeometricSequence::delta(0, 1);
  EXPECT_EQ(normalize_multiplier(g, nu), GeometricSequence::delta(0, 1));
  EXPECT_EQ(classify_multiplier(g, nu).nu_norm, ExtendedReal(1));
}

TEST(SimpleFunctions, Defects) {
  const auto e3 = fixture::measure(fixture::e3_function());
  EXPECT_EQ(simple_function_approximation(GeometricSequence::constant(1), e3, 4).defect,
            ExtendedReal(Rational(5, 8)));
  EXPECT_EQ(simple_function_approximation(kG, e3, 3).defect, ExtendedReal(0));
  ExtendedReal previous = ExtendedReal::infinity();
  for (Index n = 0; n < 60; ++n) {
    const auto approx = simple_function_approximation(GeometricSequence::geometric(1, Rational(3, 2)), e3, n);
    EXPECT_LE(approx.defect, previous);
    previous = approx.defect;
  }
  EXPECT_LT(previous.to_double(), 1e-3);
}

TEST(L1Spaces, IsometriesOnRandomTriples) {
  std::mt19937_64 rng(5150);
  const Rational ratios[] = {0, Rational(1, 2), 1, 2};
  for (int i = 0; i < 150; ++i) {
    const FiniteDimSpace space{1 + rng() % 3, static_cast<NormExponent>(rng() % 3)};
    std::vector<Rational> c(space.dim);
    for (auto& x : c) x = oracle::random_rational(rng, 2, 2);
    std::vector<Rational> d(space.dim);
    for (auto& x : d) x = oracle::random_rational(rng, 2, 3);
    const Rational r = ratios[rng() % 3];
    const RankDecomposedFunction f(space, {{GeometricSequence({{0, 1}}, 2, 1, r), FiniteDimVector(space, c)},
                                           {GeometricSequence::delta(1, 2), FiniteDimVector(space, d)}});
    const AtomicMeasureSpace mu(GeometricSequence({{0, 1}}, 1, 1, ratios[1 + rng() % 2]));
    const auto nu = fixture::measure(f, mu);
    const auto g = GeometricSequence({{0, oracle::random_rational(rng, 3, 2)}}, 1,
                                     oracle::random_rational(rng, 2, 2), ratios[rng() % 4]);
    const auto iso = mf_isometry_check(g, nu);
    EXPECT_TRUE(iso.equal) << iso.lhs.str() << " vs " << iso.rhs.str();
    EXPECT_TRUE(iso.membership_agrees);
    const auto var = l1_variation_check(g, nu);
    EXPECT_TRUE(var.equal) << var.lhs.str() << " vs " << var.rhs.str();
    EXPECT_TRUE(var.membership_agrees);
    const auto v = classify_multiplier(g, nu);
    if (v.in_L1_of_variation) EXPECT_TRUE(v.in_L1);
    if (v.in_L1) EXPECT_TRUE(v.in_L1w);
    EXPECT_LE(v.nu_norm, v.variation_norm);
    if (v.in_L1) {
      std::vector<DualVector> duals;
      for (int k = 0; k < 10; ++k) duals.emplace_back(oracle::sample_dual_ball(space.dual(), rng));
      EXPECT_TRUE(integral_matches_components(g, nu, RepresentableSet::cofinite({1}), duals));
    }
  }
}

TEST(L1Spaces, DiagonalStrictInclusion) {
  const auto ones = fixture::diagonal(GeometricSequence::constant(1));
  const auto g = GeometricSequence::geometric(1, Rational(1, 2));
  const auto v = classify_multiplier(g, ones);
  EXPECT_TRUE(v.in_L1w && v.in_L1 && v.in_L1_of_variation);
  EXPECT_EQ(v.variation_norm, ExtendedReal(2));
  const auto iso = mf_isometry_check(GeometricSequence::constant(1), ones);
  EXPECT_TRUE(iso.equal);
  EXPECT_EQ(iso.lhs, ExtendedReal(1));
}
