#include "dyadic/coord.hpp"

#include <cmath>
#include <limits>

#include "dyadic/errors.hpp"

namespace dyadic {

namespace {

void check_unit_range(const BigRational& v) {
  if (v < 0 || v > 1) {
    throw ContractError("coordinate outside the normalized domain [0,1]");
  }
}

}  // namespace

Coord::Coord(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw ContractError("coordinate denominator must be positive");
  value_ = BigRational(BigInt(num), BigInt(den));
  check_unit_range(value_);
}

Coord::Coord(BigRational value) : value_(std::move(value)) { check_unit_range(value_); }

double Coord::to_double() const { return value_.convert_to<double>(); }

std::string Coord::fraction() const { return num().str() + "/" + den().str(); }

bool Coord::is_dyadic() const {
  const BigInt d = den();
  if (d == 1) return true;
  return boost::multiprecision::lsb(d) == boost::multiprecision::msb(d);
}

Coord convex_combination(const Coord& a, const Coord& b, std::int64_t w_num, std::int64_t w_den) {
  if (w_den <= 0 || w_num < 0 || w_num > w_den) {
    throw ContractError("convex weight must satisfy 0 <= w_num <= w_den");
  }
  if (a > b) throw ContractError("convex_combination requires a <= b");
  const BigRational w(BigInt(w_num), BigInt(w_den));
  return Coord(w * a.value() + (1 - w) * b.value());
}

double denormalize(const Coord& a, double domain_lo, double domain_hi) {
  return domain_lo + a.to_double() * (domain_hi - domain_lo);
}

BigRational exact_rational(double v) {
  if (!std::isfinite(v)) throw ContractError("exact_rational requires a finite value");
  int exp = 0;
  const double mant = std::frexp(v, &exp);  // v = mant * 2^exp, |mant| in [0.5, 1)
  const auto scaled = static_cast<std::int64_t>(std::ldexp(mant, 53));
  BigRational r(BigInt(scaled), BigInt(1));
  const int shift = 53 - exp;
  if (shift >= 0) {
    r /= BigRational(BigInt(1) << shift);
  } else {
    r *= BigRational(BigInt(1) << -shift);
  }
  return r;
}

}  // namespace dyadic
