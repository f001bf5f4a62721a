#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace loopchar {

using i64 = std::int64_t;
using i128 = __int128;

inline i64 checked_cast(i128 v) {
  if (v > i128(INT64_MAX) || v < i128(INT64_MIN))
    throw std::overflow_error("integer overflow in exact arithmetic");
  return static_cast<i64>(v);
}

inline i64 checked_add(i64 a, i64 b) { return checked_cast(i128(a) + i128(b)); }
inline i64 checked_sub(i64 a, i64 b) { return checked_cast(i128(a) - i128(b)); }
inline i64 checked_mul(i64 a, i64 b) { return checked_cast(i128(a) * i128(b)); }

/// Exact rational number over int64 with overflow-checked arithmetic.
/// Always stored reduced with positive denominator.
class Rat {
public:
  Rat() : num_(0), den_(1) {}
  Rat(i64 n) : num_(n), den_(1) {}
  Rat(i64 n, i64 d) : num_(n), den_(d) { normalize(); }

  i64 num() const { return num_; }
  i64 den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  Rat operator-() const { return Rat(checked_cast(-i128(num_)), den_); }

  friend Rat operator+(const Rat& a, const Rat& b) {
    i64 g = std::gcd(a.den_, b.den_);
    i64 da = a.den_ / g;
    i64 db = b.den_ / g;
    i128 n = i128(a.num_) * db + i128(b.num_) * da;
    i128 d = i128(a.den_) * db;
    return make_reduced(n, d);
  }
  friend Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }
  friend Rat operator*(const Rat& a, const Rat& b) {
    i64 g1 = std::gcd(std::abs(a.num_), b.den_);
    i64 g2 = std::gcd(std::abs(b.num_), a.den_);
    i128 n = i128(a.num_ / g1) * (b.num_ / g2);
    i128 d = i128(a.den_ / g2) * (b.den_ / g1);
    return make_reduced(n, d);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return a * Rat(b.den_, b.num_);
  }

  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

  /// Largest integer <= value.
  i64 floor() const {
    i64 q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }
  i64 ceil() const { return -(-*this).floor(); }

  double to_double() const { return double(num_) / double(den_); }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

private:
  static Rat make_reduced(i128 n, i128 d) {
    if (d == 0) throw std::domain_error("zero denominator");
    if (d < 0) { n = -n; d = -d; }
    i128 a = n < 0 ? -n : n;
    i128 b = d;
    while (b != 0) { i128 t = a % b; a = b; b = t; }
    if (a == 0) a = 1;
    Rat r;
    r.num_ = checked_cast(n / a);
    r.den_ = checked_cast(d / a);
    return r;
  }
  void normalize() {
    *this = make_reduced(num_, den_);
  }
  i64 num_;
  i64 den_;
};

inline Rat abs(const Rat& r) { return r < Rat(0) ? -r : r; }

/// lcm of the denominators of a range of rationals.
template <class It>
i64 common_denominator(It first, It last) {
  i64 l = 1;
  for (It it = first; it != last; ++it)
    l = checked_mul(l / std::gcd(l, it->den()), it->den());
  return l;
}

} // namespace loopchar
