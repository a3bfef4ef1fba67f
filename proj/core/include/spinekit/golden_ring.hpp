#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>

namespace spinekit {

using BigInt = boost::multiprecision::cpp_int;

/// Element a + b*eps of the ring Z[eps], where eps = (1+sqrt(5))/2 is the
/// positive solution of eps^2 = eps + 1. Since eps is irrational, {1, eps}
/// is a basis and the coefficient pair (a, b) is already the canonical form;
/// equality is componentwise. Values are immutable and safe to share across
/// threads.
class GoldenInt {
 public:
  GoldenInt() = default;
  GoldenInt(BigInt a, BigInt b) : a_(std::move(a)), b_(std::move(b)) {}

  static GoldenInt zero() { return {0, 0}; }
  static GoldenInt one() { return {1, 0}; }
  static GoldenInt eps() { return {0, 1}; }

  const BigInt& a() const { return a_; }
  const BigInt& b() const { return b_; }

  friend GoldenInt operator+(const GoldenInt& x, const GoldenInt& y) {
    return {x.a_ + y.a_, x.b_ + y.b_};
  }
  friend GoldenInt operator-(const GoldenInt& x, const GoldenInt& y) {
    return {x.a_ - y.a_, x.b_ - y.b_};
  }
  GoldenInt operator-() const { return {-a_, -b_}; }

  // (a + b*eps)(c + d*eps) = ac + bd + (ad + bc + bd)*eps, via eps^2 = eps + 1.
  friend GoldenInt operator*(const GoldenInt& x, const GoldenInt& y) {
    return {x.a_ * y.a_ + x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_ + x.b_ * y.b_};
  }

  bool operator==(const GoldenInt& other) const = default;

 private:
  BigInt a_ = 0;
  BigInt b_ = 0;
};

/// eps^k for any signed k. Nonnegative powers by repeated multiplication;
/// negative powers by repeated multiplication with eps^-1 = eps - 1
/// (the inverse exists since eps*(eps - 1) = eps^2 - eps = 1).
GoldenInt eps_pow(long long k);

/// Floating approximation a + b*(1+sqrt(5))/2, for reports only. The two
/// terms cancel heavily for eps^-k, so the sum is formed in extended
/// precision before rounding to double.
double to_real(const GoldenInt& x);

/// Report form `a + b*eps` with the sign of b folded into the operator,
/// e.g. "-33 + 21*eps", "34 - 21*eps".
std::string to_string(const GoldenInt& x);

}  // namespace spinekit
