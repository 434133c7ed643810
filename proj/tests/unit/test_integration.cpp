#include <gtest/gtest.h>

#include <random>

#include "core/errors.hpp"
#include "core/integration.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace vmeasure;
using fixture::vec;

namespace {

const AtomicMeasureSpace kCounting = AtomicMeasureSpace::counting();

}  // namespace

TEST(BochnerIntegral, Examples) {
  const VectorFunction f = fixture::e3_function();
  const FiniteDimSpace space{2, NormExponent::Two};
  EXPECT_EQ(std::get<FiniteDimVector>(bochner_integral(f, kCounting, RepresentableSet::all())),
            vec(space, {6, 8}));
  EXPECT_EQ(std::get<FiniteDimVector>(bochner_integral(f, kCounting, RepresentableSet::empty())),
            FiniteDimVector::zero(space));
  EXPECT_THROW(bochner_integral(VectorFunction(fixture::constant_function()), kCounting,
                                RepresentableSet::all()),
               NotBochnerIntegrableError);
}

TEST(DunfordNorm, Examples) {
  EXPECT_EQ(dunford_norm(VectorFunction(DiagonalFunction(GeometricSequence::constant(1))), kCounting),
            ExtendedReal(1));
  EXPECT_EQ(dunford_norm(VectorFunction(fixture::e3_function()), kCounting), ExtendedReal(10));
  EXPECT_EQ(dunford_norm(VectorFunction(RankDecomposedFunction({2, NormExponent::One}, {})), kCounting),
            ExtendedReal(0));
  EXPECT_EQ(dunford_norm(VectorFunction(fixture::e1_function(NormExponent::Infinity)), kCounting),
            ExtendedReal(2));
}

TEST(PettisIntegral, DiagonalFamily) {
  const VectorFunction ones = DiagonalFunction(GeometricSequence::constant(1));
  const auto verdict = pettis_decide(ones, kCounting);
  EXPECT_TRUE(verdict.dunford);
  EXPECT_FALSE(verdict.pettis);
  ASSERT_TRUE(verdict.witness_vector);
  EXPECT_EQ(std::get<C0DiagonalVector>(*verdict.witness_vector).entries(), GeometricSequence::constant(1));
  EXPECT_THROW(pettis_integral(ones, kCounting, RepresentableSet::all()), NotPettisError);
  // Finite sets always integrate.
  EXPECT_EQ(std::get<C0DiagonalVector>(pettis_integral(ones, kCounting, RepresentableSet::finite({2}))).entries(),
            GeometricSequence::delta(2, 1));

  const auto halves = GeometricSequence::geometric(1, Rational(1, 2));
  const VectorFunction geometric = DiagonalFunction(halves);
  EXPECT_TRUE(pettis_decide(geometric, kCounting).pettis);
  EXPECT_EQ(std::get<C0DiagonalVector>(pettis_integral(geometric, kCounting, RepresentableSet::all())).entries(),
            halves);
}

TEST(PettisIntegral, FiniteDimensionalCollapse) {
  const VectorFunction f = fixture::e3_function();
  const auto verdict = pettis_decide(f, kCounting);
  EXPECT_TRUE(verdict.bochner);
  EXPECT_TRUE(verdict.pettis);
  EXPECT_TRUE(verdict.dunford);
  EXPECT_EQ(pettis_integral(f, kCounting, RepresentableSet::all()),
            bochner_integral(f, kCounting, RepresentableSet::all()));
  const auto constant = pettis_decide(VectorFunction(fixture::constant_function()), kCounting);
  EXPECT_FALSE(constant.dunford);
  EXPECT_FALSE(constant.pettis);
  EXPECT_FALSE(constant.bochner);
}

TEST(LocallyIntegrable, Examples) {
  const auto local = locally_integrable(VectorFunction(fixture::constant_function()), kCounting);
  EXPECT_TRUE(local.locally_bochner);
  EXPECT_TRUE(local.locally_pettis);
  const AtomicMeasureSpace with_infinite_atom(GeometricSequence::constant(1), {2}, true);
  EXPECT_THROW(locally_integrable(VectorFunction(fixture::constant_function()), with_infinite_atom),
               NotLocallyDeterminedError);
  const FiniteDimSpace space{1, NormExponent::One};
  const VectorFunction growing = RankDecomposedFunction::rank_one(GeometricSequence::geometric(1, 3), vec(space, {1}));
  const auto verdict = locally_integrable(growing, AtomicMeasureSpace(GeometricSequence::geometric(1, Rational(1, 2))));
  EXPECT_FALSE(verdict.locally_bochner);
  EXPECT_FALSE(verdict.locally_pettis);
}

TEST(Integration, PropertiesOnRandomFunctions) {
  std::mt19937_64 rng(31);
  const Rational ratios[] = {0, Rational(1, 2), 1, Rational(3, 2)};
  for (int i = 0; i < 150; ++i) {
    const FiniteDimSpace space{1 + rng() % 3, static_cast<NormExponent>(rng() % 3)};
    const Rational r = ratios[rng() % 4];
    std::vector<RankTerm> terms;
    for (int k = 0; k < 2; ++k) {
      std::vector<Rational> c(space.dim);
      for (auto& x : c) x = oracle::random_rational(rng, 2, 2);
      terms.push_back({GeometricSequence({{0, oracle::random_rational(rng, 2, 3)}}, 1 + rng() % 3,
                                         oracle::random_rational(rng, 2, 2), r),
                       FiniteDimVector(space, std::move(c))});
    }
    const VectorFunction f = RankDecomposedFunction(space, terms);
    const AtomicMeasureSpace mu(GeometricSequence({{0, 2}}, 1, 1, ratios[rng() % 3]));
    const auto verdict = pettis_decide(f, mu);
    if (verdict.bochner) EXPECT_TRUE(verdict.pettis);
    if (verdict.pettis) EXPECT_TRUE(verdict.dunford);
    EXPECT_EQ(verdict.dunford, verdict.dunford_norm.is_finite());
    EXPECT_LE(verdict.dunford_norm, verdict.bochner_norm);
    if (verdict.bochner) {
      const auto local = locally_integrable(f, mu);
      EXPECT_TRUE(local.locally_bochner && local.locally_pettis);
    }
    const auto set = RepresentableSet::finite({0, 2, 3});
    const auto x = std::get<FiniteDimVector>(pettis_integral(f, mu, set));
    const auto& rank = std::get<RankDecomposedFunction>(f);
    for (int k = 0; k < 10; ++k) {
      const auto xstar = oracle::sample_dual_ball(space.dual(), rng);
      Rational expected = 0;
      for (Index t : set.members()) expected += mu.weights()(t) * pairing(rank(t), xstar);
      EXPECT_EQ(pairing(x, xstar), expected);
    }
    if (verdict.pettis) {
      const auto a = RepresentableSet::finite({1, 4});
      const auto whole = std::get<FiniteDimVector>(pettis_integral(f, mu, RepresentableSet::all()));
      const auto part = std::get<FiniteDimVector>(pettis_integral(f, mu, a));
      const auto rest = std::get<FiniteDimVector>(pettis_integral(f, mu, a.complement()));
      EXPECT_EQ(whole, part + rest);
    }
  }
}
