#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <string>

namespace dyadic {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Exact rational position in the normalized domain [0,1]. Query points and
// active-interval endpoints are kept exact so point identity survives any
// number of epochs; the user's interval enters only at denormalization.
class Coord {
public:
  Coord() : value_(0) {}
  Coord(std::int64_t num, std::int64_t den);
  explicit Coord(BigRational value);

  const BigRational& value() const noexcept { return value_; }
  BigInt num() const { return boost::multiprecision::numerator(value_); }
  BigInt den() const { return boost::multiprecision::denominator(value_); }

  double to_double() const;
  std::string fraction() const;  // "num/den", always with denominator

  // True iff the denominator (in lowest terms) is a power of two.
  bool is_dyadic() const;

  friend bool operator==(const Coord& a, const Coord& b) { return a.value_ == b.value_; }
  friend bool operator!=(const Coord& a, const Coord& b) { return a.value_ != b.value_; }
  friend bool operator<(const Coord& a, const Coord& b) { return a.value_ < b.value_; }
  friend bool operator<=(const Coord& a, const Coord& b) { return a.value_ <= b.value_; }
  friend bool operator>(const Coord& a, const Coord& b) { return a.value_ > b.value_; }
  friend bool operator>=(const Coord& a, const Coord& b) { return a.value_ >= b.value_; }

private:
  BigRational value_;
};

// Exact (w_num/w_den)*a + (1 - w_num/w_den)*b. Requires 0 <= w_num <= w_den
// and a <= b.
Coord convex_combination(const Coord& a, const Coord& b, std::int64_t w_num, std::int64_t w_den);

// Maps a normalized coordinate into the user's interval [domain_lo, domain_hi].
double denormalize(const Coord& a, double domain_lo, double domain_hi);

// Exact rational value of a finite double (doubles are dyadic rationals).
BigRational exact_rational(double v);

}  // namespace dyadic
