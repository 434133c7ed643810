#include <gtest/gtest.h>

#include <random>

#include "core/errors.hpp"
#include "core/geometric_sequence.hpp"
#include "support/oracles.hpp"

using namespace vmeasure;

namespace {

GeometricSequence random_sequence(std::mt19937_64& rng, bool nonnegative) {
  static const Rational kRatios[] = {0, Rational(1, 3), Rational(1, 2), Rational(2, 3), 1, 2};
  std::map<Index, Rational> head;
  const Index start = rng() % 6;
  for (Index t = 0; t < start; ++t)
    if (rng() % 3) head[t] = oracle::random_rational(rng, 4, 3);
  Rational c = oracle::random_rational(rng, 3, 2);
  if (nonnegative) {
    for (auto& [t, v] : head) v = abs(v);
    c = abs(c);
  }
  return GeometricSequence(std::move(head), start, c, kRatios[rng() % 6]);
}

RepresentableSet random_set(std::mt19937_64& rng) {
  std::vector<Index> idx;
  for (Index t = 0; t < 10; ++t)
    if (rng() % 3 == 0) idx.push_back(t);
  return rng() % 2 ? RepresentableSet::finite(idx) : RepresentableSet::cofinite(idx);
}

}  // namespace

TEST(GeometricSequence, ValueFollowsRepresentation) {
  GeometricSequence s({{0, 5}, {2, Rational(-1, 2)}}, 3, 4, Rational(1, 2));
  EXPECT_EQ(s(0), 5);
  EXPECT_EQ(s(1), 0);
  EXPECT_EQ(s(2), Rational(-1, 2));
  EXPECT_EQ(s(3), Rational(1, 2));
  EXPECT_EQ(s(5), Rational(1, 8));
}

TEST(GeometricSequence, RejectsBadRepresentations) {
  EXPECT_THROW(GeometricSequence({}, 0, 1, -1), ValidationError);
  EXPECT_THROW(GeometricSequence({{4, 1}}, 2, 1, 1), ValidationError);
}

TEST(GeometricSequence, CanonicalFormMakesEqualityPointwise) {
  // Exceptional values that already follow the tail are absorbed into it.
  GeometricSequence a({{1, Rational(1, 2)}, {2, Rational(1, 4)}}, 3, 1, Rational(1, 2));
  GeometricSequence b({{0, 0}}, 1, 1, Rational(1, 2));
  EXPECT_EQ(a, b.restricted(RepresentableSet::from(1)));
  EXPECT_EQ(GeometricSequence({{3, 0}}, 5, 0, 7), GeometricSequence::zero());
}

TEST(SeqSum, ClosedForms) {
  EXPECT_EQ(seq_sum(GeometricSequence::geometric(1, Rational(1, 2)), RepresentableSet::all()),
            ExtendedRational(2));
  EXPECT_EQ(seq_sum(GeometricSequence::zero(), RepresentableSet::all()), ExtendedRational(0));
  EXPECT_TRUE(seq_sum(GeometricSequence::constant(1), RepresentableSet::all()).is_infinite());
  EXPECT_EQ(seq_sum(GeometricSequence::constant(1), RepresentableSet::range(0, 10)),
            ExtendedRational(10));
  EXPECT_THROW(seq_sum(GeometricSequence::delta(2, -1), RepresentableSet::all()), NegativeTermError);
  EXPECT_EQ(seq_sum(GeometricSequence::delta(2, -1), RepresentableSet::finite({0, 1})),
            ExtendedRational(0));
}

TEST(SeqSum, PartialSumsIncreaseToClosedForm) {
  const auto s = GeometricSequence::geometric(1, Rational(1, 2));
  Rational previous = -1;
  for (Index n = 0; n <= 64; n += 8) {
    const Rational partial = oracle::partial_sum(s, n);
    EXPECT_GE(partial, previous);
    EXPECT_LE(partial, 2);
    previous = partial;
  }
  EXPECT_LT(Rational(2 - previous), Rational(1, 1L << 62));
}

TEST(SeqSum, AdditiveAndMonotoneOnRandomInputs) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 400; ++i) {
    const auto s = random_sequence(rng, true);
    const auto a = random_set(rng), b = random_set(rng);
    const auto whole = seq_sum(s, a | b);
    EXPECT_EQ(whole, seq_sum(s, a - b) + seq_sum(s, b)) << s.str();
    // Monotone exhaustion A ∩ [0, n) -> A.
    const Index n = 40;
    const auto truncated = seq_sum(s, a.truncated(n));
    EXPECT_LE(truncated, seq_sum(s, a));
    if (a.is_finite()) EXPECT_EQ(truncated, seq_sum(s, a));
  }
}

TEST(SeqSum, TailAgreesWithPartialSums) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    auto s = random_sequence(rng, true);
    if (s.tail_ratio() >= 1) continue;
    const Index n = 200;
    const Rational exact = seq_sum(s, RepresentableSet::all()).value();
    const Rational partial = oracle::partial_sum(s, n);
    const Rational remainder = seq_sum(s, RepresentableSet::from(n)).value();
    EXPECT_EQ(exact, partial + remainder);
  }
}

TEST(SeqSumSigned, ConvergentAndDivergent) {
  GeometricSequence s({{0, -3}}, 1, -1, Rational(1, 2));
  EXPECT_EQ(seq_sum_signed(s, RepresentableSet::all()), Rational(-4));
  EXPECT_THROW(seq_sum_signed(GeometricSequence::constant(-1), RepresentableSet::all()),
               DivergentSeriesError);
}

TEST(SeqMul, Examples) {
  const auto a = GeometricSequence::geometric(1, Rational(1, 2));
  const auto b = GeometricSequence::geometric(1, Rational(1, 3));
  EXPECT_EQ(seq_mul(a, b), GeometricSequence::geometric(1, Rational(1, 6)));
  for (Index t = 0; t <= 10; ++t) EXPECT_EQ(seq_mul(a, b)(t), a(t) * b(t));
  EXPECT_EQ(seq_mul(GeometricSequence::constant(1), a), a);
  EXPECT_EQ(seq_mul(GeometricSequence::delta(3, 5), GeometricSequence::constant(2)),
            GeometricSequence::delta(3, 10));
}

TEST(GeometricSequence, ClosureOperationsArePointwise) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    const auto a = random_sequence(rng, false);
    const auto b = random_sequence(rng, false);
    const auto set = random_set(rng);
    const auto prod = a * b;
    const auto r = a.restricted(set);
    for (Index t = 0; t < 15; ++t) {
      EXPECT_EQ(prod(t), a(t) * b(t));
      EXPECT_EQ(a.abs()(t), abs(a(t)));
      EXPECT_EQ(r(t), set.contains(t) ? a(t) : Rational(0));
    }
    if (a.tail_is_zero() || b.tail_is_zero() || a.tail_ratio() == b.tail_ratio()) {
      const auto sum = a + b;
      for (Index t = 0; t < 15; ++t) EXPECT_EQ(sum(t), a(t) + b(t));
    } else {
      EXPECT_THROW(a + b, MixedTailRatioError);
    }
  }
}

TEST(SeqSupAbs, ExactSupremum) {
  EXPECT_EQ(seq_sup_abs(GeometricSequence({{0, -3}}, 1, 2, Rational(1, 2)), RepresentableSet::all()),
            ExtendedRational(3));
  EXPECT_EQ(seq_sup_abs(GeometricSequence::geometric(1, 2), RepresentableSet::range(0, 4)),
            ExtendedRational(8));
  EXPECT_TRUE(seq_sup_abs(GeometricSequence::geometric(1, 2), RepresentableSet::from(3)).is_infinite());
  EXPECT_EQ(seq_sup_abs(GeometricSequence::constant(1), RepresentableSet::empty()),
            ExtendedRational(0));
}
