#include "verify/sampling.hpp"

namespace vmeasure::verify {

Rational draw_unit(std::mt19937_64& rng, long denom) {
  Rational r(static_cast<long>(draw(rng, 2 * denom + 1)) - denom, denom);
  r.canonicalize();
  return r;
}

FiniteDimVector sample_dual(const FiniteDimSpace& dual, std::mt19937_64& rng) {
  const std::size_t n = dual.dim;
  std::vector<Rational> x(n, Rational(0));
  switch (dual.p) {
    case NormExponent::Infinity:
      for (auto& c : x) c = draw(rng, 3) == 0 ? Rational(draw(rng, 2) ? 1 : -1) : draw_unit(rng, 64);
      break;
    case NormExponent::One: {
      if (draw(rng, 3) == 0) {
        x[draw(rng, n)] = draw(rng, 2) ? 1 : -1;
        break;
      }
      Rational total = 0;
      for (auto& c : x) {
        c = draw_unit(rng, 64);
        total += abs(c);
      }
      if (total != 0)
        for (auto& c : x) c = Rational(c / total);
      break;
    }
    case NormExponent::Two: {
      if (n == 1) {
        x[0] = draw(rng, 2) ? 1 : -1;
        break;
      }
      std::vector<Rational> u(n - 1);
      Rational sq = 0;
      for (auto& c : u) {
        c = Rational(draw_unit(rng, 32) * 4);
        sq += c * c;
      }
      for (std::size_t i = 0; i + 1 < n; ++i) x[i] = Rational(2 * u[i] / (sq + 1));
      x[n - 1] = Rational((sq - 1) / (sq + 1));
      break;
    }
  }
  return FiniteDimVector(dual, std::move(x));
}

GeometricSequence sample_l1(std::mt19937_64& rng) {
  std::map<Index, Rational> head;
  const std::size_t k = 1 + draw(rng, 4);
  for (std::size_t i = 0; i < k; ++i) head[draw(rng, 8)] = draw_unit(rng, 16);
  const Index start = 8;
  Rational coeff = 0;
  const Rational ratio(1, 2);
  if (draw(rng, 2)) coeff = Rational(draw_unit(rng, 16) * 256);  // |c 2^-8| <= 1
  GeometricSequence x(head, start, coeff, ratio);
  const Rational mass = seq_sum(x.abs(), RepresentableSet::all()).value();
  if (mass > 1) x = x.scaled(Rational(1 / mass));
  return x;
}

DualVector sample_dual_for(const DensityMeasure& nu, std::mt19937_64& rng) {
  if (nu.is_diagonal()) return sample_l1(rng);
  return sample_dual(std::get<RankDecomposedFunction>(nu.density()).space().dual(), rng);
}

std::uint64_t stable_hash(std::string_view text, std::uint64_t seed) {
  std::uint64_t h = seed;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace vmeasure::verify
