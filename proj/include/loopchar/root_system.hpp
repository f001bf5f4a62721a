#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "loopchar/linalg.hpp"

namespace loopchar {

/// Finite simple root system with the invariant bilinear form normalized
/// so that long roots have squared length 2. Vectors are coordinates in
/// the simple-root basis; node numbering follows Bourbaki (see README).
struct RootSystem {
  std::string label;
  char family = '?';
  int rank = 0;
  std::vector<std::vector<int>> cartan; // cartan[i][j] = <alpha_j, alpha_i^vee>
  QMat gram;                            // gram[i][j] = <alpha_i, alpha_j>
  std::vector<QVec> positive_roots;     // integer coordinates, height-sorted
  QVec theta;
  QVec rho;
  std::vector<QVec> fundamental_weights; // identified with coweights
  std::vector<int> marks;                // theta = sum marks[i] alpha_i
  Rat dual_coxeter;

  Rat pair(const QVec& x, const QVec& y) const {
    Rat s(0);
    for (int i = 0; i < rank; ++i) {
      if (x[i].is_zero()) continue;
      for (int j = 0; j < rank; ++j)
        if (!y[j].is_zero()) s += x[i] * gram[i][j] * y[j];
    }
    return s;
  }

  Rat norm2(const QVec& x) const { return pair(x, x); }

  /// <v, alpha_i^vee>, i zero-based.
  Rat coroot_pair(const QVec& v, int i) const {
    Rat s(0);
    for (int j = 0; j < rank; ++j)
      if (!v[j].is_zero()) s += Rat(cartan[i][j]) * v[j];
    return s;
  }

  QVec simple_root(int i) const {
    QVec v = zero_vec(rank);
    v[i] = Rat(1);
    return v;
  }

  QVec coroot(const QVec& root) const {
    return scale(Rat(2) / norm2(root), root);
  }

  QVec simple_reflect(int i, QVec v) const {
    Rat c = coroot_pair(v, i);
    v[i] -= c;
    return v;
  }

  QVec reflect_in(const QVec& root, const QVec& v) const {
    Rat c = Rat(2) * pair(v, root) / norm2(root);
    return sub(v, scale(c, root));
  }

  bool is_root(const QVec& v) const {
    if (root_set_.empty()) {
      for (const QVec& r : positive_roots) {
        root_set_.insert(r);
        root_set_.insert(scale(Rat(-1), r));
      }
    }
    return root_set_.count(v) > 0;
  }

  i64 height(const QVec& root) const {
    Rat h(0);
    for (const Rat& c : root) h += c;
    if (!h.is_integer()) throw std::logic_error("non-integral root height");
    return h.num();
  }

private:
  mutable std::set<QVec> root_set_;
};

namespace detail {

inline std::vector<std::vector<int>> chain_cartan(int n) {
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    a[i][i] = 2;
    if (i + 1 < n) a[i][i + 1] = a[i + 1][i] = -1;
  }
  return a;
}

inline std::vector<std::vector<int>> cartan_matrix(char family, int n) {
  std::vector<std::vector<int>> a = chain_cartan(n);
  switch (family) {
    case 'A':
      break;
    case 'B': // alpha_n short
      a[n - 1][n - 2] = -2;
      break;
    case 'C': // alpha_n long
      a[n - 2][n - 1] = -2;
      break;
    case 'D':
      a[n - 2][n - 1] = a[n - 1][n - 2] = 0;
      a[n - 3][n - 1] = a[n - 1][n - 3] = -1;
      break;
    case 'E': { // Bourbaki: chain 1-3-4-5-..., node 2 hangs off node 4
      a = std::vector<std::vector<int>>(n, std::vector<int>(n, 0));
      for (int i = 0; i < n; ++i) a[i][i] = 2;
      auto link = [&](int i, int j) { a[i - 1][j - 1] = a[j - 1][i - 1] = -1; };
      link(1, 3);
      link(3, 4);
      link(2, 4);
      for (int i = 4; i < n; ++i) link(i, i + 1);
      break;
    }
    case 'F': // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      a[1][2] = -2;
      a[2][1] = -1;
      break;
    case 'G': // alpha_1 short, alpha_2 long
      a[0][1] = -3;
      a[1][0] = -1;
      break;
    default:
      throw std::invalid_argument("unknown family");
  }
  return a;
}

} // namespace detail

inline RootSystem build_root_system(const std::string& label) {
  if (label.size() < 2)
    throw std::invalid_argument("unsupported type label: " + label);
  char family = label[0];
  int n = std::stoi(label.substr(1));
  auto supported = [&] {
    switch (family) {
      case 'A': return n >= 1 && n <= 8;
      case 'B': return n >= 2 && n <= 8;
      case 'C': return n >= 2 && n <= 8;
      case 'D': return n >= 4 && n <= 8;
      case 'E': return n >= 6 && n <= 8;
      case 'F': return n == 4;
      case 'G': return n == 2;
      default: return false;
    }
  };
  if (!supported())
    throw std::invalid_argument("unsupported type label: " + label);

  RootSystem rs;
  rs.label = label;
  rs.family = family;
  rs.rank = n;
  rs.cartan = family == 'A' && n == 1
                  ? std::vector<std::vector<int>>{{2}}
                  : detail::cartan_matrix(family, n);

  // squared lengths d_i = <alpha_i,alpha_i>/2 from the Cartan symmetrizer,
  // normalized so the longest root has length 2
  std::vector<Rat> d(n, Rat(0));
  d[0] = Rat(1);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j || rs.cartan[i][j] == 0) continue;
        if (!d[i].is_zero() && d[j].is_zero()) {
          d[j] = d[i] * Rat(rs.cartan[j][i]) / Rat(rs.cartan[i][j]);
          changed = true;
        }
      }
  }
  Rat dmax = *std::max_element(d.begin(), d.end());
  for (Rat& x : d) x /= dmax;
  rs.gram = QMat(n, zero_vec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rs.gram[i][j] = Rat(rs.cartan[i][j]) * d[i];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rs.gram[i][j] != rs.gram[j][i])
        throw std::logic_error("asymmetric gram matrix");

  // all roots by reflection closure of the simple roots
  std::set<QVec> roots;
  std::vector<QVec> queue;
  for (int i = 0; i < n; ++i) {
    roots.insert(rs.simple_root(i));
    queue.push_back(rs.simple_root(i));
  }
  while (!queue.empty()) {
    QVec v = queue.back();
    queue.pop_back();
    for (int i = 0; i < n; ++i) {
      QVec w = rs.simple_reflect(i, v);
      if (roots.insert(w).second) queue.push_back(w);
    }
  }
  for (const QVec& r : roots) {
    bool nonneg = true;
    for (const Rat& c : r)
      if (c < Rat(0)) { nonneg = false; break; }
    if (nonneg) rs.positive_roots.push_back(r);
  }
  std::sort(rs.positive_roots.begin(), rs.positive_roots.end(),
            [&](const QVec& a, const QVec& b) {
              i64 ha = rs.height(a), hb = rs.height(b);
              if (ha != hb) return ha < hb;
              return a < b;
            });
  rs.theta = rs.positive_roots.back();
  if (rs.norm2(rs.theta) != Rat(2))
    throw std::logic_error("highest root not normalized to length 2");

  rs.rho = zero_vec(n);
  for (const QVec& r : rs.positive_roots) rs.rho = add(rs.rho, r);
  rs.rho = scale(Rat(1, 2), rs.rho);

  QMat cartan_q(n, zero_vec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) cartan_q[i][j] = Rat(rs.cartan[i][j]);
  QMat cinv = mat_inverse(cartan_q);
  for (int i = 0; i < n; ++i) {
    QVec w(n);
    for (int j = 0; j < n; ++j) w[j] = cinv[j][i];
    rs.fundamental_weights.push_back(w);
  }

  rs.marks.resize(n);
  for (int i = 0; i < n; ++i) {
    if (!rs.theta[i].is_integer()) throw std::logic_error("non-integer mark");
    rs.marks[i] = int(rs.theta[i].num());
  }
  rs.dual_coxeter = Rat(1);
  for (int i = 0; i < n; ++i) rs.dual_coxeter += Rat(rs.marks[i]) * d[i];

  // sanity: <rho, alpha_i^vee> = 1
  for (int i = 0; i < n; ++i)
    if (rs.coroot_pair(rs.rho, i) != Rat(1))
      throw std::logic_error("rho pairing check failed");
  return rs;
}

/// Applies s_{i_1} ... s_{i_m} to v, word entries 1-based as in the CLI.
inline QVec apply_weyl_word(const RootSystem& rs, const std::vector<int>& word,
                            QVec v) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    int i = *it;
    if (i < 1 || i > rs.rank) throw std::out_of_range("reflection index");
    v = rs.simple_reflect(i - 1, v);
  }
  return v;
}

inline std::set<QVec> weyl_orbit(const RootSystem& rs, const QVec& v) {
  std::set<QVec> orbit{v};
  std::vector<QVec> queue{v};
  while (!queue.empty()) {
    QVec x = queue.back();
    queue.pop_back();
    for (int i = 0; i < rs.rank; ++i) {
      QVec y = rs.simple_reflect(i, x);
      if (orbit.insert(y).second) queue.push_back(y);
    }
  }
  return orbit;
}

/// <lambda, lambda + 2 rho>, the Kac-Casimir constant.
inline Rat casimir_constant(const RootSystem& rs, const QVec& lambda) {
  return rs.pair(lambda, add(lambda, scale(Rat(2), rs.rho)));
}

/// Matrix (columns = images of simple roots) of a Weyl word.
inline QMat weyl_word_matrix(const RootSystem& rs, const std::vector<int>& word) {
  QMat m(rs.rank, zero_vec(rs.rank));
  for (int j = 0; j < rs.rank; ++j) {
    QVec img = apply_weyl_word(rs, word, rs.simple_root(j));
    for (int i = 0; i < rs.rank; ++i) m[i][j] = img[i];
  }
  return m;
}

/// Full Weyl group as matrices (BFS closure over simple reflections).
/// Throws if the order exceeds `cap`.
inline std::vector<QMat> weyl_group_elements(const RootSystem& rs,
                                             std::size_t cap = 4000) {
  std::vector<QMat> gens;
  for (int i = 0; i < rs.rank; ++i) {
    QMat m(rs.rank, zero_vec(rs.rank));
    for (int j = 0; j < rs.rank; ++j) {
      QVec img = rs.simple_reflect(i, rs.simple_root(j));
      for (int r = 0; r < rs.rank; ++r) m[r][j] = img[r];
    }
    gens.push_back(m);
  }
  std::set<QMat> seen{identity_mat(rs.rank)};
  std::vector<QMat> queue{identity_mat(rs.rank)};
  std::size_t head = 0;
  while (head < queue.size()) {
    QMat w = queue[head++];
    for (const QMat& g : gens) {
      QMat x = mat_mul(g, w);
      if (seen.insert(x).second) {
        queue.push_back(x);
        if (queue.size() > cap)
          throw std::runtime_error("Weyl group too large for enumeration");
      }
    }
  }
  return queue;
}

} // namespace loopchar
