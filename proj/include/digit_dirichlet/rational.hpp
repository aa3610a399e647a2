#ifndef DIGIT_DIRICHLET_RATIONAL_HPP
#define DIGIT_DIRICHLET_RATIONAL_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace digit_dirichlet {

/// Sign-magnitude arbitrary-size integer, base 2^32 limbs.
///
/// Just enough arithmetic for exact Bernoulli numbers: the recurrence needs
/// add/sub/mul, and reducing fractions needs divmod and gcd. Magnitudes stay
/// in the few-hundred-bit range, so schoolbook algorithms are plenty.
class BigInt {
 public:
  BigInt() = default;
  BigInt(std::int64_t v);  // NOLINT(google-explicit-constructor)

  BigInt operator+(const BigInt& rhs) const;
  BigInt operator-(const BigInt& rhs) const;
  BigInt operator*(const BigInt& rhs) const;
  BigInt operator-() const;

  /// Quotient truncated toward zero, remainder with the sign of *this.
  static std::pair<BigInt, BigInt> divmod(const BigInt& num, const BigInt& den);

  bool operator==(const BigInt& rhs) const;
  bool operator<(const BigInt& rhs) const;

  bool is_zero() const { return sign_ == 0; }
  int sign() const { return sign_; }
  BigInt abs() const;

  static BigInt gcd(BigInt a, BigInt b);

  double to_double() const;
  /// Signed mantissa m with value = m * 2^exp2; keeps conversions finite
  /// even when the integer itself exceeds double range.
  double frexp_approx(long& exp2) const;
  std::string to_string() const;

 private:
  // limbs_ is little-endian with no leading zero limb; sign_ == 0 iff empty.
  int sign_ = 0;
  std::vector<std::uint32_t> limbs_;

  static int compare_mag(const std::vector<std::uint32_t>& a,
                         const std::vector<std::uint32_t>& b);
  static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
  static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
  void normalize();
};

/// Exact rational; denominator kept positive, fraction always reduced.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT
  Rational(std::int64_t n, std::int64_t d);
  Rational(BigInt n, BigInt d);

  const BigInt& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }

  Rational operator+(const Rational& rhs) const;
  Rational operator-(const Rational& rhs) const;
  Rational operator*(const Rational& rhs) const;
  Rational operator/(const Rational& rhs) const;
  Rational operator-() const;
  bool operator==(const Rational& rhs) const;

  bool is_zero() const { return num_.is_zero(); }
  double to_double() const;
  std::string to_string() const;

 private:
  BigInt num_;
  BigInt den_;
  void normalize();
};

}  // namespace digit_dirichlet

#endif
