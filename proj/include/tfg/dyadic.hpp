#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>

namespace tfg {

// Exact element of Z[1/2]: mantissa / 2^exponent, kept normalized so that
// the exponent is zero or the mantissa is odd.
class Dyadic {
 public:
  using Int = boost::multiprecision::cpp_int;

  Dyadic() = default;
  Dyadic(long long n) : mantissa_(n) {}  // NOLINT(google-explicit-constructor)
  Dyadic(Int mantissa, unsigned exponent);

  // 2^k for any integer k.
  static Dyadic pow2(long k);

  const Int& mantissa() const { return mantissa_; }
  unsigned exponent() const { return exponent_; }
  bool is_zero() const { return mantissa_ == 0; }

  Dyadic operator-() const { return Dyadic(-mantissa_, exponent_); }
  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
  Dyadic& operator+=(const Dyadic& b) { return *this = *this + b; }

  // Multiplication by 2^k.
  Dyadic scaled(long k) const;

  friend bool operator==(const Dyadic& a, const Dyadic& b) = default;
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

  // "p" or "p/2^e" rendered as "p/q".
  std::string str() const;
  static Dyadic parse(const std::string& text);

 private:
  void normalize();

  Int mantissa_ = 0;
  unsigned exponent_ = 0;
};

}  // namespace tfg
