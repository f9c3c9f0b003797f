#pragma once

#include <compare>
#include <string>

#include "vndim/rational.hpp"

namespace vndim {

/// An exact scalar `coeff * pi^pi_exp` with pi_exp in {-1, 0, 1}.
///
/// Every covolume, formal dimension and von Neumann dimension in this library
/// has this shape, so products like d_pi * vol(Gamma\G) cancel the powers of
/// pi exactly. Zero is canonical: coeff == 0 forces pi_exp == 0.
class PiRational {
 public:
  static constexpr int kMinExp = -1;
  static constexpr int kMaxExp = 1;

  PiRational() = default;
  PiRational(Rational coeff) : coeff_(std::move(coeff)) {}  // NOLINT(google-explicit-constructor)
  PiRational(std::int64_t n) : coeff_(n) {}  // NOLINT(google-explicit-constructor)
  PiRational(Rational coeff, int pi_exp) : coeff_(std::move(coeff)), pi_exp_(pi_exp) {
    if (pi_exp_ < kMinExp || pi_exp_ > kMaxExp)
      fail(ErrorKind::ExponentOverflow, "pi exponent " + std::to_string(pi_exp_) + " outside [-1, 1]");
    if (coeff_.is_zero()) pi_exp_ = 0;
  }

  static PiRational pi() { return {Rational(1), 1}; }

  const Rational& coeff() const { return coeff_; }
  int pi_exp() const { return pi_exp_; }
  bool is_rational() const { return pi_exp_ == 0; }

  /// The rational value; only valid when pi_exp == 0.
  const Rational& rational() const {
    if (pi_exp_ != 0)
      fail(ErrorKind::IncomparableExponents, "value carries a power of pi and is not rational");
    return coeff_;
  }

  /// Multiplicative inverse; zero raises DivisionByZero.
  PiRational inverse() const { return {coeff_.reciprocal(), -pi_exp_}; }

  /// Scales the rational coefficient, leaving the power of pi alone.
  PiRational scaled(const Rational& c) const { return {coeff_ * c, pi_exp_}; }

  friend PiRational operator*(const PiRational& a, const PiRational& b) {
    return {a.coeff_ * b.coeff_, a.pi_exp_ + b.pi_exp_};
  }
  friend PiRational operator/(const PiRational& a, const PiRational& b) { return a * b.inverse(); }

  friend bool operator==(const PiRational& a, const PiRational& b) {
    return a.pi_exp_ == b.pi_exp_ && a.coeff_ == b.coeff_;
  }

 private:
  Rational coeff_;
  int pi_exp_ = 0;
};

/// Exact product; raises ExponentOverflow when the result would need pi^2.
inline PiRational mul(const PiRational& a, const PiRational& b) { return a * b; }

/// Orders like terms. Values with different powers of pi are not compared,
/// except that zero is comparable with anything.
inline std::strong_ordering compare(const PiRational& a, const PiRational& b) {
  if (a.pi_exp() != b.pi_exp() && !a.coeff().is_zero() && !b.coeff().is_zero())
    fail(ErrorKind::IncomparableExponents, "cannot order pi^" + std::to_string(a.pi_exp()) +
                                               " against pi^" + std::to_string(b.pi_exp()));
  return a.coeff() <=> b.coeff();
}

}  // namespace vndim
