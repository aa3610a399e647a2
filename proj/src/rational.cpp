#include "digit_dirichlet/rational.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace digit_dirichlet {

BigInt::BigInt(std::int64_t v) {
  if (v == 0) return;
  sign_ = v > 0 ? 1 : -1;
  // Avoid UB on INT64_MIN by going through unsigned.
  std::uint64_t mag = v > 0 ? static_cast<std::uint64_t>(v)
                            : ~static_cast<std::uint64_t>(v) + 1u;
  limbs_.push_back(static_cast<std::uint32_t>(mag & 0xffffffffu));
  if (mag >> 32) limbs_.push_back(static_cast<std::uint32_t>(mag >> 32));
}

void BigInt::normalize() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  if (limbs_.empty()) sign_ = 0;
}

int BigInt::compare_mag(const std::vector<std::uint32_t>& a,
                        const std::vector<std::uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  const auto& lo = a.size() < b.size() ? a : b;
  const auto& hi = a.size() < b.size() ? b : a;
  std::vector<std::uint32_t> out(hi.size() + 1, 0);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < hi.size(); ++i) {
    std::uint64_t sum = carry + hi[i] + (i < lo.size() ? lo[i] : 0u);
    out[i] = static_cast<std::uint32_t>(sum & 0xffffffffu);
    carry = sum >> 32;
  }
  out[hi.size()] = static_cast<std::uint32_t>(carry);
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

// Requires |a| >= |b|.
std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> out(a.size(), 0);
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t diff = static_cast<std::int64_t>(a[i]) - borrow -
                        (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
    if (diff < 0) {
      diff += (std::int64_t{1} << 32);
      borrow = 1;
    } else {
      borrow = 0;
    }
    out[i] = static_cast<std::uint32_t>(diff);
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

BigInt BigInt::operator+(const BigInt& rhs) const {
  if (is_zero()) return rhs;
  if (rhs.is_zero()) return *this;
  BigInt out;
  if (sign_ == rhs.sign_) {
    out.sign_ = sign_;
    out.limbs_ = add_mag(limbs_, rhs.limbs_);
  } else {
    int cmp = compare_mag(limbs_, rhs.limbs_);
    if (cmp == 0) return BigInt();
    if (cmp > 0) {
      out.sign_ = sign_;
      out.limbs_ = sub_mag(limbs_, rhs.limbs_);
    } else {
      out.sign_ = rhs.sign_;
      out.limbs_ = sub_mag(rhs.limbs_, limbs_);
    }
  }
  out.normalize();
  return out;
}

BigInt BigInt::operator-() const {
  BigInt out = *this;
  out.sign_ = -out.sign_;
  return out;
}

BigInt BigInt::operator-(const BigInt& rhs) const { return *this + (-rhs); }

BigInt BigInt::operator*(const BigInt& rhs) const {
  if (is_zero() || rhs.is_zero()) return BigInt();
  BigInt out;
  out.sign_ = sign_ * rhs.sign_;
  out.limbs_.assign(limbs_.size() + rhs.limbs_.size(), 0);
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < rhs.limbs_.size(); ++j) {
      std::uint64_t cur = out.limbs_[i + j] + carry +
                          static_cast<std::uint64_t>(limbs_[i]) * rhs.limbs_[j];
      out.limbs_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    std::size_t k = i + rhs.limbs_.size();
    while (carry) {
      std::uint64_t cur = out.limbs_[k] + carry;
      out.limbs_[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
      ++k;
    }
  }
  out.normalize();
  return out;
}

namespace {

int top_bit_index(const std::vector<std::uint32_t>& mag) {
  if (mag.empty()) return -1;
  std::uint32_t top = mag.back();
  int bit = 31;
  while (!(top & (1u << bit))) --bit;
  return static_cast<int>(mag.size() - 1) * 32 + bit;
}

bool get_bit(const std::vector<std::uint32_t>& mag, int i) {
  return (mag[static_cast<std::size_t>(i) / 32] >> (i % 32)) & 1u;
}

void set_bit(std::vector<std::uint32_t>& mag, int i) {
  mag[static_cast<std::size_t>(i) / 32] |= 1u << (i % 32);
}

// mag <<= 1, then mag |= bit.
void shl1_or(std::vector<std::uint32_t>& mag, bool bit) {
  std::uint32_t carry = bit ? 1u : 0u;
  for (auto& limb : mag) {
    std::uint32_t next = limb >> 31;
    limb = (limb << 1) | carry;
    carry = next;
  }
  if (carry) mag.push_back(carry);
}

}  // namespace

std::pair<BigInt, BigInt> BigInt::divmod(const BigInt& num, const BigInt& den) {
  if (den.is_zero()) throw std::domain_error("BigInt: division by zero");
  if (num.is_zero()) return {BigInt(), BigInt()};
  if (compare_mag(num.limbs_, den.limbs_) < 0) return {BigInt(), num};

  // Schoolbook binary long division on magnitudes.
  std::vector<std::uint32_t> quot(num.limbs_.size(), 0);
  std::vector<std::uint32_t> rem;
  for (int i = top_bit_index(num.limbs_); i >= 0; --i) {
    shl1_or(rem, get_bit(num.limbs_, i));
    if (compare_mag(rem, den.limbs_) >= 0) {
      rem = sub_mag(rem, den.limbs_);
      set_bit(quot, i);
    }
  }

  BigInt q, r;
  q.limbs_ = std::move(quot);
  q.sign_ = num.sign_ * den.sign_;
  q.normalize();
  r.limbs_ = std::move(rem);
  r.sign_ = num.sign_;
  r.normalize();
  return {q, r};
}

bool BigInt::operator==(const BigInt& rhs) const {
  return sign_ == rhs.sign_ && limbs_ == rhs.limbs_;
}

bool BigInt::operator<(const BigInt& rhs) const {
  if (sign_ != rhs.sign_) return sign_ < rhs.sign_;
  int cmp = compare_mag(limbs_, rhs.limbs_);
  return sign_ >= 0 ? cmp < 0 : cmp > 0;
}

BigInt BigInt::abs() const {
  BigInt out = *this;
  if (out.sign_ < 0) out.sign_ = 1;
  return out;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
  a = a.abs();
  b = b.abs();
  while (!b.is_zero()) {
    BigInt r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return BigInt(1);
  return a;
}

double BigInt::to_double() const {
  double mag = 0.0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    mag = mag * 4294967296.0 + static_cast<double>(limbs_[i]);
  }
  return sign_ < 0 ? -mag : mag;
}

double BigInt::frexp_approx(long& exp2) const {
  if (is_zero()) {
    exp2 = 0;
    return 0.0;
  }
  // Top three limbs carry 96 bits, more than a double mantissa.
  std::size_t top = limbs_.size() - 1;
  std::size_t low = top >= 2 ? top - 2 : 0;
  double m = 0.0;
  for (std::size_t i = top + 1; i-- > low;) {
    m = m * 4294967296.0 + static_cast<double>(limbs_[i]);
  }
  exp2 = static_cast<long>(low) * 32;
  return sign_ < 0 ? -m : m;
}

std::string BigInt::to_string() const {
  if (is_zero()) return "0";
  std::string digits;
  BigInt cur = abs();
  const BigInt chunk(1000000000);
  while (!cur.is_zero()) {
    auto [q, r] = divmod(cur, chunk);
    std::uint64_t part = 0;
    for (std::size_t i = r.limbs_.size(); i-- > 0;) {
      part = (part << 32) | r.limbs_[i];
    }
    std::string block = std::to_string(part);
    if (!q.is_zero()) block.insert(0, 9 - block.size(), '0');
    digits.insert(0, block);
    cur = std::move(q);
  }
  return sign_ < 0 ? "-" + digits : digits;
}

Rational::Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
  normalize();
}

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
  normalize();
}

void Rational::normalize() {
  if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
  if (den_.sign() < 0) {
    den_ = -den_;
    num_ = -num_;
  }
  if (num_.is_zero()) {
    den_ = BigInt(1);
    return;
  }
  BigInt g = BigInt::gcd(num_, den_);
  num_ = BigInt::divmod(num_, g).first;
  den_ = BigInt::divmod(den_, g).first;
}

Rational Rational::operator+(const Rational& rhs) const {
  return Rational(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

Rational Rational::operator-(const Rational& rhs) const {
  return Rational(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
}

Rational Rational::operator*(const Rational& rhs) const {
  return Rational(num_ * rhs.num_, den_ * rhs.den_);
}

Rational Rational::operator/(const Rational& rhs) const {
  if (rhs.is_zero()) throw std::domain_error("Rational: division by zero");
  return Rational(num_ * rhs.den_, den_ * rhs.num_);
}

Rational Rational::operator-() const {
  Rational out = *this;
  out.num_ = -out.num_;
  return out;
}

bool Rational::operator==(const Rational& rhs) const {
  return num_ == rhs.num_ && den_ == rhs.den_;
}

double Rational::to_double() const {
  long en = 0;
  long ed = 0;
  double mn = num_.frexp_approx(en);
  double md = den_.frexp_approx(ed);
  return std::ldexp(mn / md, static_cast<int>(en - ed));
}

std::string Rational::to_string() const {
  return num_.to_string() + "/" + den_.to_string();
}

}  // namespace digit_dirichlet
