#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "loopchar/rational.hpp"

namespace loopchar {

/// m-th cyclotomic polynomial as integer coefficients c[0..deg], monic.
inline const std::vector<i64>& cyclotomic_poly(int m) {
  static std::map<int, std::vector<i64>> cache;
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  // x^m - 1 divided by all lower cyclotomics
  std::vector<i64> num(m + 1, 0);
  num[0] = -1;
  num[m] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    const std::vector<i64>& phi = cyclotomic_poly(d);
    // exact polynomial long division num /= phi
    std::vector<i64> q(num.size() - phi.size() + 1, 0);
    std::vector<i64> r = num;
    for (int i = int(q.size()) - 1; i >= 0; --i) {
      i64 c = r[i + phi.size() - 1];
      q[i] = c;
      if (c == 0) continue;
      for (std::size_t j = 0; j < phi.size(); ++j)
        r[i + j] = checked_sub(r[i + j], checked_mul(c, phi[j]));
    }
    num = q;
  }
  return cache.emplace(m, num).first->second;
}

/// Element of Z[zeta_m] represented as an integer polynomial in zeta
/// reduced modulo the m-th cyclotomic polynomial. m = 1 gives plain Z.
class CycInt {
public:
  CycInt() : m_(1), c_(1, 0) {}
  explicit CycInt(int m) : m_(m), c_(degree(m), 0) {}
  CycInt(int m, i64 value) : m_(m), c_(degree(m), 0) { c_[0] = value; }

  static int degree(int m) { return int(cyclotomic_poly(m).size()) - 1; }

  static CycInt zeta_pow(int m, long j) {
    j %= m;
    if (j < 0) j += m;
    std::vector<i64> p(std::size_t(j) + 1, 0);
    p[std::size_t(j)] = 1;
    CycInt r(m);
    r.c_ = reduce(m, p);
    return r;
  }

  int order() const { return m_; }
  const std::vector<i64>& coeffs() const { return c_; }

  bool is_zero() const {
    for (i64 v : c_)
      if (v != 0) return false;
    return true;
  }
  bool is_rational_integer() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) return false;
    return true;
  }
  i64 integer_value() const {
    if (!is_rational_integer())
      throw std::domain_error("cyclotomic value is not a rational integer");
    return c_[0];
  }

  friend CycInt operator+(const CycInt& a, const CycInt& b) {
    CycInt r = promote(a, b);
    CycInt s = promote(b, a);
    for (std::size_t i = 0; i < r.c_.size(); ++i)
      r.c_[i] = checked_add(r.c_[i], s.c_[i]);
    return r;
  }
  friend CycInt operator-(const CycInt& a, const CycInt& b) {
    CycInt r = promote(a, b);
    CycInt s = promote(b, a);
    for (std::size_t i = 0; i < r.c_.size(); ++i)
      r.c_[i] = checked_sub(r.c_[i], s.c_[i]);
    return r;
  }
  CycInt operator-() const {
    CycInt r = *this;
    for (i64& v : r.c_) v = -v;
    return r;
  }
  friend CycInt operator*(const CycInt& a, const CycInt& b) {
    CycInt x = promote(a, b);
    CycInt y = promote(b, a);
    std::vector<i64> prod(x.c_.size() + y.c_.size() - 1, 0);
    for (std::size_t i = 0; i < x.c_.size(); ++i) {
      if (x.c_[i] == 0) continue;
      for (std::size_t j = 0; j < y.c_.size(); ++j)
        prod[i + j] = checked_add(prod[i + j], checked_mul(x.c_[i], y.c_[j]));
    }
    CycInt r(x.m_);
    r.c_ = reduce(x.m_, prod);
    return r;
  }
  CycInt& operator+=(const CycInt& o) { return *this = *this + o; }
  CycInt& operator-=(const CycInt& o) { return *this = *this - o; }
  CycInt& operator*=(const CycInt& o) { return *this = *this * o; }

  friend bool operator==(const CycInt& a, const CycInt& b) {
    return (a - b).is_zero();
  }
  friend bool operator!=(const CycInt& a, const CycInt& b) { return !(a == b); }

  std::complex<double> to_complex() const {
    std::complex<double> z(0.0, 0.0);
    const double two_pi = 6.283185307179586476925286766559;
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (c_[i] != 0)
        z += double(c_[i]) *
             std::exp(std::complex<double>(0.0, two_pi * double(i) / m_));
    return z;
  }

  std::string str() const {
    if (is_rational_integer()) return std::to_string(c_[0]);
    std::string s = "(";
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(c_[i]);
    }
    s += ")z" + std::to_string(m_);
    return s;
  }

private:
  static std::vector<i64> reduce(int m, std::vector<i64> p) {
    const std::vector<i64>& phi = cyclotomic_poly(m);
    std::size_t deg = phi.size() - 1;
    for (std::size_t i = p.size(); i-- > deg;) {
      i64 c = p[i];
      if (c == 0) continue;
      for (std::size_t j = 0; j < phi.size(); ++j)
        p[i - deg + j] = checked_sub(p[i - deg + j], checked_mul(c, phi[j]));
    }
    p.resize(deg);
    return p;
  }
  // rewrites a in the ring of b when b has the larger conductor
  static CycInt promote(const CycInt& a, const CycInt& b) {
    if (a.m_ == b.m_ || b.m_ % a.m_ != 0 || a.m_ > b.m_) {
      if (a.m_ != b.m_ && b.m_ % a.m_ != 0 && a.m_ % b.m_ != 0)
        throw std::domain_error("incompatible cyclotomic orders");
      if (a.m_ >= b.m_) return a;
    }
    int step = b.m_ / a.m_;
    CycInt r(b.m_);
    std::vector<i64> p(std::size_t(CycInt::degree(a.m_) - 1) * step + 1, 0);
    p.assign(std::size_t((CycInt::degree(a.m_) - 1) * step) + 1, 0);
    for (int i = 0; i < CycInt::degree(a.m_); ++i)
      p[std::size_t(i) * step] = a.c_[std::size_t(i)];
    r.c_ = reduce(b.m_, p);
    return r;
  }

  int m_;
  std::vector<i64> c_;
};

} // namespace loopchar
