#pragma once

// Exact linear algebra over GF(p) in ambient dimension 3: row vectors,
// matrices acting on the right, echelon-canonical subspaces, affine maps,
// and the permutation representation of affine groups on p^3 points.

#include <array>
#include <stdexcept>
#include <vector>

#include "ssg/perm_group.hpp"

namespace ssg {

inline int gf_norm(long v, int p) {
  long r = v % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

inline int gf_inv(int a, int p) {
  a = gf_norm(a, p);
  if (a == 0) throw std::domain_error("gf: zero has no inverse");
  // Fermat: a^(p-2) mod p.
  long r = 1, b = a, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<int>(r);
}

struct GfVector {
  int p = 0;
  std::array<int, 3> c{0, 0, 0};

  GfVector() = default;
  GfVector(int p_, int a, int b, int d) : p(p_), c{gf_norm(a, p_), gf_norm(b, p_), gf_norm(d, p_)} {}

  bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0; }
  bool operator==(const GfVector& o) const { return p == o.p && c == o.c; }
  bool operator!=(const GfVector& o) const { return !(*this == o); }
  bool operator<(const GfVector& o) const { return c < o.c; }

  friend GfVector operator+(const GfVector& a, const GfVector& b) {
    return GfVector(a.p, a.c[0] + b.c[0], a.c[1] + b.c[1], a.c[2] + b.c[2]);
  }
  friend GfVector operator-(const GfVector& a, const GfVector& b) {
    return GfVector(a.p, a.c[0] - b.c[0], a.c[1] - b.c[1], a.c[2] - b.c[2]);
  }
  friend GfVector operator*(int s, const GfVector& a) {
    s = gf_norm(s, a.p);
    return GfVector(a.p, s * a.c[0], s * a.c[1], s * a.c[2]);
  }
};

struct GfMatrix {
  int p = 0;
  std::array<std::array<int, 3>, 3> a{};

  GfMatrix() = default;
  GfMatrix(int p_, std::array<std::array<int, 3>, 3> rows) : p(p_), a(rows) {
    for (auto& r : a)
      for (auto& v : r) v = gf_norm(v, p);
  }

  static GfMatrix identity(int p) { return GfMatrix(p, {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}); }

  GfVector row(int i) const { return GfVector(p, a[i][0], a[i][1], a[i][2]); }

  bool operator==(const GfMatrix& o) const { return p == o.p && a == o.a; }
  bool operator!=(const GfMatrix& o) const { return !(*this == o); }

  friend GfMatrix operator*(const GfMatrix& x, const GfMatrix& y) {
    GfMatrix r;
    r.p = x.p;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        long s = 0;
        for (int k = 0; k < 3; ++k) s += static_cast<long>(x.a[i][k]) * y.a[k][j];
        r.a[i][j] = gf_norm(s, x.p);
      }
    return r;
  }

  /// Row vector times matrix.
  friend GfVector operator*(const GfVector& v, const GfMatrix& m) {
    GfVector r;
    r.p = m.p;
    for (int j = 0; j < 3; ++j) {
      long s = 0;
      for (int k = 0; k < 3; ++k) s += static_cast<long>(v.c[k]) * m.a[k][j];
      r.c[j] = gf_norm(s, m.p);
    }
    return r;
  }

  /// Determinant by Gaussian elimination.
  int det() const {
    std::array<std::array<int, 3>, 3> m = a;
    long d = 1;
    for (int col = 0; col < 3; ++col) {
      int piv = -1;
      for (int r = col; r < 3; ++r)
        if (m[r][col] != 0) {
          piv = r;
          break;
        }
      if (piv < 0) return 0;
      if (piv != col) {
        std::swap(m[piv], m[col]);
        d = -d;
      }
      d = d * m[col][col] % p;
      int inv = gf_inv(m[col][col], p);
      for (int r = col + 1; r < 3; ++r) {
        int f = gf_norm(static_cast<long>(m[r][col]) * inv, p);
        for (int j = col; j < 3; ++j) m[r][j] = gf_norm(m[r][j] - static_cast<long>(f) * m[col][j], p);
      }
    }
    return gf_norm(d, p);
  }

  GfMatrix inverse() const {
    int d = det();
    if (d == 0) throw std::domain_error("gf: matrix is singular");
    int dinv = gf_inv(d, p);
    GfMatrix r;
    r.p = p;
    // Adjugate transpose with cofactor signs.
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        int r0 = (i + 1) % 3, r1 = (i + 2) % 3;
        int c0 = (j + 1) % 3, c1 = (j + 2) % 3;
        long cof = static_cast<long>(a[r0][c0]) * a[r1][c1] - static_cast<long>(a[r0][c1]) * a[r1][c0];
        r.a[j][i] = gf_norm(cof * dinv, p);
      }
    return r;
  }
};

/// m^e for any integer e (negative powers via the inverse).
inline GfMatrix mat_pow(GfMatrix m, long e) {
  if (e < 0) {
    m = m.inverse();
    e = -e;
  }
  GfMatrix r = GfMatrix::identity(m.p);
  while (e) {
    if (e & 1) r = r * m;
    m = m * m;
    e >>= 1;
  }
  return r;
}

/// Subspace of GF(p)^3 with its canonical reduced-row-echelon basis.
struct Subspace {
  int p = 0;
  std::vector<GfVector> basis;  // RREF rows, pivots strictly increasing

  static Subspace row_space(int p, std::vector<GfVector> rows) {
    Subspace s;
    s.p = p;
    int rank = 0;
    for (int col = 0; col < 3; ++col) {
      int piv = -1;
      for (int r = rank; r < static_cast<int>(rows.size()); ++r)
        if (rows[r].c[col] != 0) {
          piv = r;
          break;
        }
      if (piv < 0) continue;
      std::swap(rows[rank], rows[piv]);
      rows[rank] = gf_inv(rows[rank].c[col], p) * rows[rank];
      for (int r = 0; r < static_cast<int>(rows.size()); ++r)
        if (r != rank && rows[r].c[col] != 0) rows[r] = rows[r] - rows[r].c[col] * rows[rank];
      ++rank;
      if (rank == 3) break;
    }
    rows.resize(rank);
    s.basis = std::move(rows);
    return s;
  }

  int dim() const { return static_cast<int>(basis.size()); }

  bool contains(GfVector v) const {
    for (const auto& b : basis) {
      int piv = 0;
      while (b.c[piv] == 0) ++piv;
      if (v.c[piv] != 0) v = v - v.c[piv] * b;
    }
    return v.is_zero();
  }

  /// Image under a matrix acting on the right.
  Subspace image(const GfMatrix& m) const {
    std::vector<GfVector> rows;
    for (const auto& b : basis) rows.push_back(b * m);
    return row_space(p, std::move(rows));
  }

  bool operator==(const Subspace& o) const { return p == o.p && basis == o.basis; }
  bool operator!=(const Subspace& o) const { return !(*this == o); }
  bool operator<(const Subspace& o) const {
    if (basis.size() != o.basis.size()) return basis.size() < o.basis.size();
    return basis < o.basis;
  }
};

/// {v : r . v == 0 for every row r}; with rows = basis of S this is the
/// annihilator of S under the standard bilinear form.
inline Subspace solution_space(int p, const std::vector<GfVector>& rows) {
  Subspace r = Subspace::row_space(p, rows);
  std::array<int, 3> pivot_col{-1, -1, -1};
  std::array<bool, 3> is_pivot{false, false, false};
  for (int i = 0; i < r.dim(); ++i) {
    int c = 0;
    while (r.basis[i].c[c] == 0) ++c;
    pivot_col[i] = c;
    is_pivot[c] = true;
  }
  std::vector<GfVector> null_basis;
  for (int free = 0; free < 3; ++free) {
    if (is_pivot[free]) continue;
    GfVector v(p, 0, 0, 0);
    v.c[free] = 1;
    for (int i = 0; i < r.dim(); ++i) v.c[pivot_col[i]] = gf_norm(-r.basis[i].c[free], p);
    null_basis.push_back(v);
  }
  return Subspace::row_space(p, std::move(null_basis));
}

inline Subspace annihilator(const Subspace& s) { return solution_space(s.p, s.basis); }

inline Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.p != b.p) throw std::invalid_argument("gf: field mismatch");
  std::vector<GfVector> rows = annihilator(a).basis;
  for (const auto& v : annihilator(b).basis) rows.push_back(v);
  return solution_space(a.p, rows);
}

/// All subspaces of the given dimension, in canonical echelon order
/// (by pivot pattern, then lexicographically by basis entries).
inline std::vector<Subspace> enumerate_subspaces(int p, int dim) {
  std::vector<Subspace> out;
  auto put = [&](std::vector<GfVector> rows) {
    Subspace s;
    s.p = p;
    s.basis = std::move(rows);
    out.push_back(std::move(s));
  };
  switch (dim) {
    case 0:
      put({});
      break;
    case 1:
      for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b) put({GfVector(p, 1, a, b)});
      for (int a = 0; a < p; ++a) put({GfVector(p, 0, 1, a)});
      put({GfVector(p, 0, 0, 1)});
      break;
    case 2:
      for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b) put({GfVector(p, 1, 0, a), GfVector(p, 0, 1, b)});
      for (int a = 0; a < p; ++a) put({GfVector(p, 1, a, 0), GfVector(p, 0, 0, 1)});
      put({GfVector(p, 0, 1, 0), GfVector(p, 0, 0, 1)});
      break;
    case 3:
      put({GfVector(p, 1, 0, 0), GfVector(p, 0, 1, 0), GfVector(p, 0, 0, 1)});
      break;
    default:
      throw std::invalid_argument("gf: dimension must be 0..3");
  }
  return out;
}

/// Subspaces of the given dimension fixed setwise by m, by exhaustive sweep.
inline std::vector<Subspace> fixed_subspaces(const GfMatrix& m, int dim) {
  std::vector<Subspace> out;
  for (auto& s : enumerate_subspaces(m.p, dim))
    if (s.image(m) == s) out.push_back(std::move(s));
  return out;
}

/// s^(m^i) n s^(m^j) n s^(m^k), the intersection of three images.
inline Subspace triple_intersection(const Subspace& s, const GfMatrix& m, int i, int j, int k) {
  Subspace r = intersect(s.image(mat_pow(m, i)), s.image(mat_pow(m, j)));
  return intersect(r, s.image(mat_pow(m, k)));
}

/// Determinant of the 3x3 matrix with rows a*m^-i, a*m^-j, a*m^-k
/// (Gaussian route; tests pin this against cofactor expansion and the
/// closed form 4*a1^3*(i-j)(k-i)(k-j)).
inline int lemma_determinant(const GfVector& a, const GfMatrix& m, int i, int j, int k) {
  GfMatrix rows;
  rows.p = m.p;
  rows.a[0] = (a * mat_pow(m, -i)).c;
  rows.a[1] = (a * mat_pow(m, -j)).c;
  rows.a[2] = (a * mat_pow(m, -k)).c;
  return rows.det();
}

/// Affine map v -> v*mat + t. Composition is left to right, so that
/// g^-1 * translation(alpha) * g == translation(alpha * g) for linear g.
struct AffineMap {
  GfMatrix mat;
  GfVector t;

  static AffineMap linear(GfMatrix m) { return {m, GfVector(m.p, 0, 0, 0)}; }
  static AffineMap translation(GfVector v) { return {GfMatrix::identity(v.p), v}; }

  GfVector apply(const GfVector& v) const { return v * mat + t; }

  friend AffineMap operator*(const AffineMap& f, const AffineMap& g) {
    return {f.mat * g.mat, f.t * g.mat + g.t};
  }

  AffineMap inverse() const {
    GfMatrix mi = mat.inverse();
    return {mi, GfVector(t.p, 0, 0, 0) - t * mi};
  }

  bool operator==(const AffineMap& o) const { return mat == o.mat && t == o.t; }
};

inline int point_index(const GfVector& v) { return (v.c[0] * v.p + v.c[1]) * v.p + v.c[2]; }

inline GfVector vector_at(int p, int idx) {
  return GfVector(p, idx / (p * p), idx / p % p, idx % p);
}

/// Permutation image of one affine map on the p^3 points of GF(p)^3,
/// indexed by point_index.
inline Permutation affine_permutation(const AffineMap& f) {
  int p = f.t.p;
  std::vector<int> img(p * p * p);
  for (int idx = 0; idx < p * p * p; ++idx) img[idx] = point_index(f.apply(vector_at(p, idx)));
  return Permutation(std::move(img));
}

/// Faithful permutation representation of the group generated by affine maps.
inline PermGroup affine_perm_rep(const std::vector<AffineMap>& maps) {
  if (maps.empty()) throw std::invalid_argument("gf: need at least one affine map");
  std::vector<Permutation> gens;
  for (const auto& m : maps) gens.push_back(affine_permutation(m));
  return PermGroup(std::move(gens));
}

}  // namespace ssg
