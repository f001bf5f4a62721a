#pragma once

#include <algorithm>
#include <cassert>
#include <optional>
#include <vector>

#include "loopchar/rational.hpp"

namespace loopchar {

using QVec = std::vector<Rat>;
using QMat = std::vector<std::vector<Rat>>;

inline QVec zero_vec(std::size_t n) { return QVec(n, Rat(0)); }

inline QVec add(const QVec& a, const QVec& b) {
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline QVec sub(const QVec& a, const QVec& b) {
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline QVec scale(const Rat& c, const QVec& a) {
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline bool is_zero(const QVec& a) {
  for (const Rat& x : a)
    if (!x.is_zero()) return false;
  return true;
}

inline QMat identity_mat(std::size_t n) {
  QMat m(n, zero_vec(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = Rat(1);
  return m;
}

inline QVec mat_vec(const QMat& m, const QVec& v) {
  QVec r(m.size(), Rat(0));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!m[i][j].is_zero() && !v[j].is_zero()) r[i] += m[i][j] * v[j];
  return r;
}

inline QMat mat_mul(const QMat& a, const QMat& b) {
  std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  QMat r(n, zero_vec(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t)
      if (!a[i][t].is_zero())
        for (std::size_t j = 0; j < m; ++j)
          if (!b[t][j].is_zero()) r[i][j] += a[i][t] * b[t][j];
  return r;
}

inline QMat transpose(const QMat& a) {
  if (a.empty()) return {};
  QMat r(a[0].size(), zero_vec(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j) r[j][i] = a[i][j];
  return r;
}

/// Gauss-Jordan inverse. Throws on singular input.
inline QMat mat_inverse(const QMat& a) {
  std::size_t n = a.size();
  QMat m = a;
  QMat inv = identity_mat(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) throw std::domain_error("singular matrix");
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    Rat d = m[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      m[col][j] /= d;
      inv[col][j] /= d;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || m[i][col].is_zero()) continue;
      Rat f = m[i][col];
      for (std::size_t j = 0; j < n; ++j) {
        m[i][j] -= f * m[col][j];
        inv[i][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

inline std::size_t mat_rank(QMat m) {
  std::size_t rows = m.size();
  if (rows == 0) return 0;
  std::size_t cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][col].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    Rat d = m[rank][col];
    for (std::size_t j = col; j < cols; ++j) m[rank][j] /= d;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || m[i][col].is_zero()) continue;
      Rat f = m[i][col];
      for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

/// Solves A x = b exactly. Returns nullopt if inconsistent. For
/// underdetermined systems returns one particular solution.
inline std::optional<QVec> solve_linear(QMat a, QVec b) {
  std::size_t rows = a.size();
  std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][col].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    std::swap(b[piv], b[rank]);
    Rat d = a[rank][col];
    for (std::size_t j = col; j < cols; ++j) a[rank][j] /= d;
    b[rank] /= d;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || a[i][col].is_zero()) continue;
      Rat f = a[i][col];
      for (std::size_t j = col; j < cols; ++j) a[i][j] -= f * a[rank][j];
      b[i] -= f * b[rank];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (std::size_t i = rank; i < rows; ++i)
    if (!b[i].is_zero()) return std::nullopt;
  QVec x(cols, Rat(0));
  for (std::size_t i = 0; i < rank; ++i) x[pivot_col[i]] = b[i];
  return x;
}

/// Characteristic polynomial coefficients c[0..n], c[n] = 1 (monic,
/// p(x) = sum c[i] x^i), via the Faddeev-LeVerrier recursion.
inline std::vector<Rat> char_poly(const QMat& a) {
  std::size_t n = a.size();
  std::vector<Rat> c(n + 1, Rat(0));
  c[n] = Rat(1);
  QMat m = QMat(n, zero_vec(n));
  for (std::size_t k = 1; k <= n; ++k) {
    // m = a * (m + c_{n-k+1} I)
    QMat t = m;
    for (std::size_t i = 0; i < n; ++i) t[i][i] += c[n - k + 1];
    m = mat_mul(a, t);
    Rat tr(0);
    for (std::size_t i = 0; i < n; ++i) tr += m[i][i];
    c[n - k] = -tr / Rat(i64(k));
  }
  return c;
}

inline Rat mat_det(const QMat& a) {
  std::vector<Rat> c = char_poly(a);
  Rat d = c[0];
  if (a.size() % 2 == 1) d = -d;
  return d;
}

/// Row-style Hermite reduction of an integer matrix: returns a basis
/// (as rows) of the row span. Entries stay within int64 (checked).
inline std::vector<std::vector<i64>> hnf_rows(std::vector<std::vector<i64>> m) {
  if (m.empty()) return m;
  std::size_t cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    // euclidean elimination in this column below `row`
    while (true) {
      std::size_t piv = m.size();
      for (std::size_t i = row; i < m.size(); ++i)
        if (m[i][col] != 0 && (piv == m.size() ||
                               std::abs(m[i][col]) < std::abs(m[piv][col])))
          piv = i;
      if (piv == m.size()) break;
      std::swap(m[row], m[piv]);
      bool clean = true;
      for (std::size_t i = row + 1; i < m.size(); ++i) {
        if (m[i][col] == 0) continue;
        i64 q = m[i][col] / m[row][col];
        for (std::size_t j = 0; j < cols; ++j)
          m[i][j] = checked_sub(m[i][j], checked_mul(q, m[row][j]));
        if (m[i][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (m[row][col] != 0) {
      if (m[row][col] < 0)
        for (std::size_t j = 0; j < cols; ++j) m[row][j] = -m[row][j];
      // reduce rows above
      for (std::size_t i = 0; i < row; ++i) {
        i64 q = m[i][col] >= 0 ? m[i][col] / m[row][col]
                               : -((-m[i][col] + m[row][col] - 1) / m[row][col]);
        if (q != 0)
          for (std::size_t j = 0; j < cols; ++j)
            m[i][j] = checked_sub(m[i][j], checked_mul(q, m[row][j]));
      }
      ++row;
    }
  }
  m.resize(row);
  return m;
}

/// LDL^T decomposition of a symmetric positive definite matrix.
/// Returns (L, D) with L unit lower triangular, D the diagonal.
inline std::pair<QMat, QVec> ldl_decompose(const QMat& g) {
  std::size_t n = g.size();
  QMat l = identity_mat(n);
  QVec d(n, Rat(0));
  for (std::size_t j = 0; j < n; ++j) {
    Rat dj = g[j][j];
    for (std::size_t k = 0; k < j; ++k) dj -= l[j][k] * l[j][k] * d[k];
    if (!(Rat(0) < dj)) throw std::domain_error("matrix not positive definite");
    d[j] = dj;
    for (std::size_t i = j + 1; i < n; ++i) {
      Rat v = g[i][j];
      for (std::size_t k = 0; k < j; ++k) v -= l[i][k] * l[j][k] * d[k];
      l[i][j] = v / dj;
    }
  }
  return {l, d};
}

} // namespace loopchar
