#pragma once

#include <vector>

#include "loopchar/root_system.hpp"

namespace loopchar {

/// Real affine root alpha + n*delta. Equality is structural.
struct AffineRoot {
  QVec alpha;
  i64 degree = 0;

  friend bool operator==(const AffineRoot& a, const AffineRoot& b) {
    return a.degree == b.degree && a.alpha == b.alpha;
  }
  friend bool operator<(const AffineRoot& a, const AffineRoot& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.alpha < b.alpha;
  }
};

/// Extended Dynkin diagram: node 0 is the affine node alpha_0 = delta - theta.
struct AffineDiagram {
  const RootSystem* rs = nullptr;
  std::vector<std::vector<int>> cartan; // (l+1) x (l+1)
  std::vector<int> marks;               // a_0 = 1, a_i = marks of theta
};

inline AffineDiagram extended_diagram(const RootSystem& rs) {
  int l = rs.rank;
  AffineDiagram d;
  d.rs = &rs;
  d.cartan.assign(l + 1, std::vector<int>(l + 1, 0));
  d.cartan[0][0] = 2;
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) d.cartan[i + 1][j + 1] = rs.cartan[i][j];
  for (int j = 0; j < l; ++j) {
    // alpha_0 has finite part -theta and <alpha_0,alpha_0> = 2
    Rat a0j = -rs.pair(rs.theta, rs.simple_root(j));
    Rat aj0 = -rs.coroot_pair(rs.theta, j);
    if (!a0j.is_integer() || !aj0.is_integer())
      throw std::logic_error("non-integer affine Cartan entry");
    d.cartan[0][j + 1] = int(a0j.num());
    d.cartan[j + 1][0] = int(aj0.num());
  }
  d.marks.resize(l + 1);
  d.marks[0] = 1;
  for (int i = 0; i < l; ++i) d.marks[i + 1] = rs.marks[i];

  // corank-1 check: the marks must span the kernel
  for (int i = 0; i <= l; ++i) {
    long s = 0;
    for (int j = 0; j <= l; ++j) s += long(d.cartan[i][j]) * d.marks[j];
    if (s != 0) throw std::logic_error("affine Cartan kernel check failed");
  }
  return d;
}

/// { alpha + n delta : alpha in Delta, 0 <= n <= N, (n=0 => alpha positive) }
inline std::vector<AffineRoot> real_positive_roots(const RootSystem& rs, i64 n_max) {
  if (n_max < 0) throw std::invalid_argument("negative truncation");
  std::vector<AffineRoot> out;
  for (const QVec& a : rs.positive_roots) out.push_back({a, 0});
  for (i64 n = 1; n <= n_max; ++n)
    for (const QVec& a : rs.positive_roots) {
      out.push_back({a, n});
      out.push_back({scale(Rat(-1), a), n});
    }
  return out;
}

/// Height of a real affine root with respect to the affine basis:
/// alpha + n delta = n alpha_0 + sum_i (n a_i + c_i) alpha_i.
inline i64 affine_height(const AffineDiagram& d, const AffineRoot& r) {
  const RootSystem& rs = *d.rs;
  if (is_zero(r.alpha) || !rs.is_root(r.alpha))
    throw std::invalid_argument("affine_height expects a real root");
  i64 h = r.degree;
  for (int i = 0; i < rs.rank; ++i) {
    Rat c = Rat(r.degree) * Rat(d.marks[i + 1]) + r.alpha[i];
    if (!c.is_integer()) throw std::logic_error("non-integral affine coefficient");
    h = checked_add(h, c.num());
  }
  return h;
}

} // namespace loopchar
