#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "core/density_measure.hpp"

namespace vmeasure::verify {

/// Portable draws: raw engine output reduced modulo the range.
inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

/// Rational in [-1, 1] with denominator `denom`.
Rational draw_unit(std::mt19937_64& rng, long denom);

/// A point of the dual unit ball: l^1, l^inf or the Euclidean sphere
/// (rational points via inverse stereographic projection).
FiniteDimVector sample_dual(const FiniteDimSpace& dual, std::mt19937_64& rng);

/// A functional in the unit ball of l^1: a few weighted unit vectors plus an
/// optional geometric tail.
GeometricSequence sample_l1(std::mt19937_64& rng);

/// Sample matching the kind of nu's target.
DualVector sample_dual_for(const DensityMeasure& nu, std::mt19937_64& rng);

/// FNV-1a, used to derive per-check seeds.
std::uint64_t stable_hash(std::string_view text, std::uint64_t seed = 1469598103934665603ULL);

}  // namespace vmeasure::verify
