#include "safeset/rational.hpp"

#include <cassert>
#include <limits>

namespace safeset {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

Rational make_rational_128(__int128 num, __int128 den) {
  if (den == 0) throw Error(ErrorKind::BadRange, "rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  constexpr __int128 kMax = std::numeric_limits<long long>::max();
  if (num > kMax || num < -kMax || den > kMax)
    throw Error(ErrorKind::WeightOverflow, "rational does not fit 64-bit components");
  return Rational(static_cast<long long>(num), static_cast<long long>(den));
}

Rational parse_rational(std::string_view text) {
  auto parse_uint = [&](std::string_view tok) -> long long {
    if (tok.empty()) throw Error(ErrorKind::Parse, "empty rational component");
    long long v = 0;
    for (char ch : tok) {
      if (ch < '0' || ch > '9')
        throw Error(ErrorKind::Parse, "rational must be p or p/q with integer p,q: '" +
                                          std::string(text) + "'");
      if (v > (std::numeric_limits<long long>::max() - (ch - '0')) / 10)
        throw Error(ErrorKind::WeightOverflow, "rational component too large");
      v = v * 10 + (ch - '0');
    }
    return v;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_uint(text), 1);
  long long p = parse_uint(text.substr(0, slash));
  long long q = parse_uint(text.substr(slash + 1));
  if (q == 0) throw Error(ErrorKind::Parse, "rational with zero denominator");
  return Rational(p, q);
}

long long floor_mul_div(long long x, long long num, long long den) {
  assert(x >= 0 && num >= 0 && den > 0);
  __int128 prod = static_cast<__int128>(x) * num;
  return static_cast<long long>(prod / den);
}

long long ceil_mul_div(long long x, long long num, long long den) {
  assert(x >= 0 && num >= 0 && den > 0);
  __int128 prod = static_cast<__int128>(x) * num;
  return static_cast<long long>((prod + den - 1) / den);
}

}  // namespace safeset
