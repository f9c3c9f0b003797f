#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "vndim/error.hpp"

namespace vndim {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number with arbitrary-precision numerator and denominator.
///
/// Always stored reduced with a positive denominator; zero is 0/1. All
/// arithmetic is exact, and division by zero raises `DivisionByZero`.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) fail(ErrorKind::DivisionByZero, "zero denominator");
    value_ = den < 0 ? Backend(BigInt(-num), BigInt(-den)) : Backend(num, den);
  }

  BigInt num() const { return boost::multiprecision::numerator(value_); }
  BigInt den() const { return boost::multiprecision::denominator(value_); }

  bool is_zero() const { return value_ == 0; }
  bool is_integer() const { return den() == 1; }
  int sign() const { return value_.sign(); }

  Rational operator-() const { return Rational(Backend(-value_)); }

  Rational& operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) fail(ErrorKind::DivisionByZero, "division by zero rational");
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  Rational reciprocal() const { return Rational(1) / *this; }

  /// Integer power; negative exponents invert.
  Rational pow(std::int64_t e) const {
    if (e < 0) return reciprocal().pow(-e);
    Rational result(1);
    Rational base = *this;
    while (e > 0) {
      if (e & 1) result *= base;
      base *= base;
      e >>= 1;
    }
    return result;
  }

  /// "n" for integers, "n/d" otherwise.
  std::string str() const {
    if (is_integer()) return num().str();
    return num().str() + "/" + den().str();
  }

  /// Accepts "n" or "n/d" with an optional leading sign.
  static Rational parse(std::string_view text) {
    auto parse_int = [&](std::string_view s) -> BigInt {
      if (s.empty()) fail(ErrorKind::Usage, "malformed rational '" + std::string(text) + "'");
      std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
      if (i == s.size()) fail(ErrorKind::Usage, "malformed rational '" + std::string(text) + "'");
      for (std::size_t j = i; j < s.size(); ++j)
        if (s[j] < '0' || s[j] > '9')
          fail(ErrorKind::Usage, "malformed rational '" + std::string(text) + "'");
      BigInt v(std::string(s.substr(i)));
      return s[0] == '-' ? BigInt(-v) : v;
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
  }

 private:
  using Backend = boost::multiprecision::cpp_rational;
  explicit Rational(Backend v) : value_(std::move(v)) {}

  Backend value_{0};
};

inline BigInt ipow(const BigInt& base, std::uint64_t e) {
  return boost::multiprecision::pow(base, static_cast<unsigned>(e));
}

}  // namespace vndim
