#ifndef STVB_RATIONAL_HPP_
#define STVB_RATIONAL_HPP_

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace stvb {

/// Exact rational with 64-bit numerator and denominator, always normalized
/// (gcd 1, positive denominator).  Products go through 128-bit intermediates
/// and throw on overflow.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long num) : num_(num), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(long long num, long long den) : num_(num), den_(den) { normalize(); }

  long long num() const { return num_; }
  long long den() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(checked(static_cast<__int128>(a.num_) * b.den_
                            + static_cast<__int128>(b.num_) * a.den_),
                    checked(static_cast<__int128>(a.den_) * b.den_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return a + Rational(-b.num_, b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(checked(static_cast<__int128>(a.num_) * b.num_),
                    checked(static_cast<__int128>(a.den_) * b.den_));
  }

  auto operator<=>(const Rational&) const = default;

  std::string str() const {
    return den_ == 1 ? std::to_string(num_)
                     : std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  static long long checked(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("rational overflow");
    return static_cast<long long>(v);
  }

  void normalize() {
    if (den_ == 0) throw std::invalid_argument("zero denominator");
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

}  // namespace stvb

#endif  // STVB_RATIONAL_HPP_
