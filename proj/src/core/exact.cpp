#include "core/exact.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "core/errors.hpp"

namespace vmeasure {

Rational parse_rational(std::string_view text) {
  const std::string s(text);
  auto valid = [](const std::string& part, bool allow_sign) {
    if (part.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  const auto slash = s.find('/');
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid(num, true) || !valid(den, false))
    throw ParseError("invalid rational literal '" + s + "'");
  Integer n(num[0] == '+' ? num.substr(1) : num, 10);
  Integer d(den, 10);
  if (d == 0) throw ParseError("zero denominator in '" + s + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) {
  Rational canonical = value;
  canonical.canonicalize();
  return canonical.get_str();
}

Rational pow(const Rational& base, Index exponent) {
  if (exponent > std::numeric_limits<unsigned long>::max())
    throw TooLargeError("exponent out of range");
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------------------
// ExtendedRational

ExtendedRational ExtendedRational::parse(std::string_view text) {
  if (text == "inf" || text == "+inf") return infinity();
  return ExtendedRational(parse_rational(text));
}

const Rational& ExtendedRational::value() const {
  if (infinite_) throw InvalidArgumentError("value() of an infinite extended rational");
  return value_;
}

ExtendedRational operator+(const ExtendedRational& a, const ExtendedRational& b) {
  if (a.infinite_ || b.infinite_) return ExtendedRational::infinity();
  return ExtendedRational(Rational(a.value_ + b.value_));
}

ExtendedRational operator*(const ExtendedRational& a, const ExtendedRational& b) {
  if (a.infinite_ || b.infinite_) {
    const ExtendedRational& other = a.infinite_ ? b : a;
    if (other.is_finite() && other.value_ == 0) return ExtendedRational(0);
    if (other.is_finite() && other.value_ < 0)
      throw InvalidArgumentError("negative multiple of infinity");
    return ExtendedRational::infinity();
  }
  return ExtendedRational(Rational(a.value_ * b.value_));
}

bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
  const int c = cmp(a.value_, b.value_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

// ---------------------------------------------------------------------------
// QuadraticSurd

namespace {

struct SquareSplit {
  Integer outside;     // s
  Integer squarefree;  // m, with n = s^2 m
};

constexpr unsigned long kTrialDivisionLimit = 1UL << 14;

// n = s^2 * m. Trial division removes every prime below d until d^3 exceeds
// the cofactor; the cofactor then has at most two prime factors, so it is
// either a perfect square or squarefree and m is squarefree. Past the trial
// bound the cofactor is kept whole; add_term merges dependent radicands.
SquareSplit split_square(const Integer& n) {
  static thread_local std::map<Integer, SquareSplit> cache;
  if (auto it = cache.find(n); it != cache.end()) return it->second;

  SquareSplit out{1, 1};
  Integer rem = n;
  if (mpz_perfect_square_p(rem.get_mpz_t())) {
    mpz_sqrt(out.outside.get_mpz_t(), rem.get_mpz_t());
    rem = 1;
  }
  for (unsigned long d = 2; rem > 1 && d <= kTrialDivisionLimit; d = (d == 2 ? 3 : d + 2)) {
    Integer cube = Integer(d) * d * d;
    if (cube > rem) break;
    unsigned e = 0;
    while (mpz_divisible_ui_p(rem.get_mpz_t(), d)) {
      mpz_divexact_ui(rem.get_mpz_t(), rem.get_mpz_t(), d);
      ++e;
    }
    for (unsigned i = 0; i < e / 2; ++i) out.outside *= d;
    if (e % 2) out.squarefree *= d;
  }
  if (rem > 1) {
    if (mpz_perfect_square_p(rem.get_mpz_t())) {
      Integer root;
      mpz_sqrt(root.get_mpz_t(), rem.get_mpz_t());
      out.outside *= root;
    } else {
      out.squarefree *= rem;
    }
  }
  if (cache.size() > (1u << 16)) cache.clear();
  cache.emplace(n, out);
  return out;
}

// Bounds on sqrt(m) with resolution 2^-bits.
std::pair<Rational, Rational> sqrt_bounds(const Integer& m, unsigned bits) {
  Integer scaled = m << (2 * bits);
  Integer root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  Integer upper = root * root == scaled ? root : Integer(root + 1);
  Integer scale = Integer(1) << bits;
  Rational lo(root, scale), hi(upper, scale);
  lo.canonicalize();
  hi.canonicalize();
  return {lo, hi};
}

}  // namespace

QuadraticSurd::QuadraticSurd(const Rational& value) {
  if (value != 0) terms_.emplace(Integer(1), value).first->second.canonicalize();
}

QuadraticSurd QuadraticSurd::sqrt(const Rational& x) {
  if (x < 0) throw InvalidArgumentError("square root of a negative rational");
  QuadraticSurd out;
  if (x == 0) return out;
  // sqrt(p/q) = sqrt(p q) / q
  const Integer n = x.get_num() * x.get_den();
  const SquareSplit split = split_square(n);
  Rational coeff(split.outside, x.get_den());
  coeff.canonicalize();
  out.terms_.emplace(split.squarefree, coeff);
  return out;
}

void QuadraticSurd::add_term(const Integer& radicand, const Rational& coeff) {
  if (coeff == 0) return;
  Integer key = radicand;
  Rational c = coeff;
  if (!terms_.contains(key) && key != 1) {
    // sqrt(n) = sqrt(n m) / m * sqrt(m) when n m is a perfect square.
    for (auto it = terms_.begin(); it != terms_.end(); ++it) {
      if (it->first == 1) continue;
      Integer product = it->first * key;
      if (!mpz_perfect_square_p(product.get_mpz_t())) continue;
      Integer root;
      mpz_sqrt(root.get_mpz_t(), product.get_mpz_t());
      if (key < it->first) {
        Rational moved = it->second * Rational(root, key);
        moved.canonicalize();
        terms_.erase(it);
        terms_.emplace(key, moved);
      } else {
        c *= Rational(root, it->first);
        c.canonicalize();
        key = it->first;
      }
      break;
    }
  }
  auto [it, inserted] = terms_.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool QuadraticSurd::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

std::optional<Rational> QuadraticSurd::as_rational() const {
  if (terms_.empty()) return Rational(0);
  if (is_rational()) return terms_.begin()->second;
  return std::nullopt;
}

std::pair<Rational, Rational> QuadraticSurd::enclosure(unsigned bits) const {
  Rational lo(0), hi(0);
  for (const auto& [m, a] : terms_) {
    if (m == 1) {
      lo += a;
      hi += a;
      continue;
    }
    auto [rlo, rhi] = sqrt_bounds(m, bits);
    if (a > 0) {
      lo += a * rlo;
      hi += a * rhi;
    } else {
      lo += a * rhi;
      hi += a * rlo;
    }
  }
  return {lo, hi};
}

int QuadraticSurd::sign() const {
  if (terms_.empty()) return 0;
  if (terms_.size() == 1) return sgn(terms_.begin()->second);
  // Nonzero by canonicity, so refinement terminates.
  for (unsigned bits = 32; bits <= (1u << 20); bits *= 2) {
    auto [lo, hi] = enclosure(bits);
    if (lo > 0) return 1;
    if (hi < 0) return -1;
  }
  throw PrecisionError("sign of quadratic surd not resolved: " + str());
}

double QuadraticSurd::to_double() const {
  double out = 0.0;
  for (const auto& [m, a] : terms_) out += a.get_d() * std::sqrt(m.get_d());
  return out;
}

std::string QuadraticSurd::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, a] : terms_) {
    if (!first && a > 0) os << "+";
    first = false;
    if (m == 1) {
      os << to_string(a);
    } else if (a == 1) {
      os << "sqrt(" << m.get_str() << ")";
    } else if (a == -1) {
      os << "-sqrt(" << m.get_str() << ")";
    } else {
      os << to_string(a) << "*sqrt(" << m.get_str() << ")";
    }
  }
  return os.str();
}

QuadraticSurd operator+(const QuadraticSurd& a, const QuadraticSurd& b) {
  QuadraticSurd out = a;
  for (const auto& [m, c] : b.terms_) out.add_term(m, c);
  return out;
}

QuadraticSurd operator-(const QuadraticSurd& a) {
  QuadraticSurd out = a;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

QuadraticSurd operator-(const QuadraticSurd& a, const QuadraticSurd& b) { return a + (-b); }

QuadraticSurd operator*(const QuadraticSurd& a, const Rational& k) {
  QuadraticSurd out;
  if (k == 0) return out;
  out = a;
  for (auto& [m, c] : out.terms_) c *= k;
  return out;
}

std::strong_ordering operator<=>(const QuadraticSurd& a, const QuadraticSurd& b) {
  const int s = (a - b).sign();
  return s < 0 ? std::strong_ordering::less
               : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

// ---------------------------------------------------------------------------
// ExtendedReal

ExtendedReal::ExtendedReal(const ExtendedRational& value) {
  if (value.is_infinite())
    kind_ = Kind::Infinite;
  else
    exact_ = QuadraticSurd(value.value());
}

bool ExtendedReal::is_zero() const {
  switch (kind_) {
    case Kind::Exact: return exact_.is_zero();
    case Kind::Approximate: return approx_ == 0.0;
    case Kind::Infinite: return false;
  }
  return false;
}

const QuadraticSurd& ExtendedReal::exact() const {
  if (kind_ != Kind::Exact) throw InvalidArgumentError("exact() of a non-exact value " + str());
  return exact_;
}

std::optional<Rational> ExtendedReal::as_rational() const {
  if (kind_ != Kind::Exact) return std::nullopt;
  return exact_.as_rational();
}

double ExtendedReal::to_double() const {
  switch (kind_) {
    case Kind::Exact: return exact_.to_double();
    case Kind::Approximate: return approx_;
    case Kind::Infinite: return std::numeric_limits<double>::infinity();
  }
  return 0.0;
}

std::string ExtendedReal::str() const {
  switch (kind_) {
    case Kind::Exact: return exact_.str();
    case Kind::Infinite: return "inf";
    case Kind::Approximate: {
      std::ostringstream os;
      os.precision(17);
      os << "~" << approx_;
      return os.str();
    }
  }
  return {};
}

ExtendedReal operator+(const ExtendedReal& a, const ExtendedReal& b) {
  if (a.is_infinite() || b.is_infinite()) return ExtendedReal::infinity();
  if (a.is_approximate() || b.is_approximate())
    return ExtendedReal::approximate(a.to_double() + b.to_double());
  return ExtendedReal(a.exact_ + b.exact_);
}

ExtendedReal operator-(const ExtendedReal& a, const ExtendedReal& b) {
  if (b.is_infinite()) throw InvalidArgumentError("subtraction of infinity");
  if (a.is_infinite()) return a;
  if (a.is_approximate() || b.is_approximate())
    return ExtendedReal::approximate(a.to_double() - b.to_double());
  return ExtendedReal(a.exact_ - b.exact_);
}

ExtendedReal operator*(const ExtendedRational& k, const ExtendedReal& a) {
  if (k.is_finite() && k.value() < 0) throw InvalidArgumentError("negative scaling of an extended real");
  if (k.is_finite() && k.value() == 0) return ExtendedReal(0);
  if (a.is_zero()) return ExtendedReal(0);
  if (k.is_infinite() || a.is_infinite()) {
    if (a.is_finite() && a.to_double() < 0)
      throw InvalidArgumentError("infinite multiple of a negative value");
    return ExtendedReal::infinity();
  }
  if (a.is_approximate()) return ExtendedReal::approximate(k.value().get_d() * a.approx_);
  return ExtendedReal(a.exact_ * k.value());
}

bool operator==(const ExtendedReal& a, const ExtendedReal& b) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() && b.is_infinite();
  if (a.is_approximate() || b.is_approximate()) return a.to_double() == b.to_double();
  return a.exact_ == b.exact_;
}

std::partial_ordering operator<=>(const ExtendedReal& a, const ExtendedReal& b) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() <=> b.is_infinite();
  if (a.is_approximate() || b.is_approximate()) return a.to_double() <=> b.to_double();
  return a.exact_ <=> b.exact_;
}

bool same_value(const ExtendedReal& a, const ExtendedReal& b) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() && b.is_infinite();
  if (a.is_exact() && b.is_exact()) return a == b;
  const double x = a.to_double(), y = b.to_double();
  return std::abs(x - y) <= kApproxTolerance * std::max({1.0, std::abs(x), std::abs(y)});
}

bool at_most(const ExtendedReal& a, const ExtendedReal& b) {
  if (b.is_infinite()) return true;
  if (a.is_infinite()) return false;
  if (a.is_exact() && b.is_exact()) return a <= b;
  const double x = a.to_double(), y = b.to_double();
  return x <= y + kApproxTolerance * std::max({1.0, std::abs(x), std::abs(y)});
}

}  // namespace vmeasure
