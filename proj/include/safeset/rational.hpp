#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>

#include "safeset/errors.hpp"

namespace safeset {

// Exact rational on 64-bit components; every guarantee threshold in the
// approximation schemes is compared through this type, never through doubles.
// Comparisons cross-multiply in 128-bit, so they never overflow.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long num, long long den) : num_(num), den_(den) { normalize(); }

  long long num() const { return num_; }
  long long den() const { return den_; }
  bool is_positive() const { return num_ > 0; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  std::string str() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  void normalize() {
    if (den_ == 0) throw Error(ErrorKind::BadRange, "rational with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  long long num_;
  long long den_;
};

// Builds num/den from 128-bit intermediates, reducing first; rejects values
// that do not fit the 64-bit components after reduction.
Rational make_rational_128(__int128 num, __int128 den);

// Accepts "p" or "p/q" with non-negative integer tokens.
Rational parse_rational(std::string_view text);

// floor(x*num/den) and ceil(x*num/den) for x,num >= 0, den > 0.
long long floor_mul_div(long long x, long long num, long long den);
long long ceil_mul_div(long long x, long long num, long long den);

}  // namespace safeset
