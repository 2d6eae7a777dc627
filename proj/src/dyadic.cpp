#include "tfg/dyadic.hpp"

#include "tfg/errors.hpp"

namespace tfg {

Dyadic::Dyadic(Int mantissa, unsigned exponent)
    : mantissa_(std::move(mantissa)), exponent_(exponent) {
  normalize();
}

void Dyadic::normalize() {
  if (mantissa_ == 0) {
    exponent_ = 0;
    return;
  }
  while (exponent_ > 0 && !boost::multiprecision::bit_test(mantissa_, 0)) {
    mantissa_ >>= 1;
    --exponent_;
  }
}

Dyadic Dyadic::pow2(long k) {
  if (k >= 0) return Dyadic(Int(1) << k, 0);
  return Dyadic(Int(1), static_cast<unsigned>(-k));
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  unsigned e = std::max(a.exponent_, b.exponent_);
  Dyadic::Int m = (a.mantissa_ << (e - a.exponent_)) +
                  (b.mantissa_ << (e - b.exponent_));
  return Dyadic(std::move(m), e);
}

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
  return Dyadic(a.mantissa_ * b.mantissa_, a.exponent_ + b.exponent_);
}

Dyadic Dyadic::scaled(long k) const {
  if (k >= 0) {
    if (static_cast<unsigned long>(k) <= exponent_)
      return Dyadic(mantissa_, exponent_ - static_cast<unsigned>(k));
    return Dyadic(mantissa_ << (k - static_cast<long>(exponent_)), 0);
  }
  return Dyadic(mantissa_, exponent_ + static_cast<unsigned>(-k));
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  unsigned e = std::max(a.exponent_, b.exponent_);
  Dyadic::Int lhs = a.mantissa_ << (e - a.exponent_);
  Dyadic::Int rhs = b.mantissa_ << (e - b.exponent_);
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Dyadic::str() const {
  std::string s = mantissa_.str();
  if (exponent_ == 0) return s;
  return s + "/" + (Int(1) << exponent_).str();
}

Dyadic Dyadic::parse(const std::string& text) {
  try {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Dyadic(Int(text), 0);
    Int num(text.substr(0, slash));
    Int den(text.substr(slash + 1));
    if (den <= 0) throw ParseError("dyadic denominator must be positive: " + text);
    unsigned e = 0;
    while (den > 1) {
      if (boost::multiprecision::bit_test(den, 0))
        throw ParseError("denominator is not a power of two: " + text);
      den >>= 1;
      ++e;
    }
    return Dyadic(num, e);
  } catch (const std::runtime_error&) {
    throw ParseError("malformed dyadic rational: " + text);
  }
}

}  // namespace tfg
