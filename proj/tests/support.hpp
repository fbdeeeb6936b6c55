#pragma once

// Fixtures, brute-force oracles and random generators shared by the unit
// and acceptance suites. The oracles here deliberately avoid the library's
// elimination code: determinants by cofactor expansion, vertices by
// Cramer's rule, invariant factors by gcds of minors.

#include "toric/toric.hpp"

#include <algorithm>
#include <cstddef>
#include <random>
#include <string>
#include <vector>

namespace toric::testing {

inline Halfspace hs(std::initializer_list<long> normal, Rational offset, long label = 1) {
  LatticeVector n;
  for (auto x : normal) n.push_back(x);
  return {std::move(n), std::move(offset), label};
}

inline Rational q(long p, long den = 1) { return Rational(p) / Rational(den); }

inline RationalVector pt(std::initializer_list<Rational> xs) { return RationalVector(xs); }

inline LatticeVector lv(std::initializer_list<long> xs) {
  LatticeVector v;
  for (auto x : xs) v.push_back(x);
  return v;
}

// --- fixtures ---------------------------------------------------------------

inline LabeledPolytope unit_square() {
  return canonicalize({hs({1, 0}, 1), hs({-1, 0}, 0), hs({0, 1}, 1), hs({0, -1}, 0)});
}

inline LabeledPolytope square(long side) {
  return canonicalize({hs({1, 0}, side), hs({-1, 0}, 0), hs({0, 1}, side), hs({0, -1}, 0)});
}

inline LabeledPolytope simplex2() {
  return canonicalize({hs({-1, 0}, 0), hs({0, -1}, 0), hs({1, 1}, 1)});
}

inline LabeledPolytope cube() {
  return canonicalize({hs({1, 0, 0}, 1), hs({-1, 0, 0}, 0), hs({0, 1, 0}, 1), hs({0, -1, 0}, 0),
                       hs({0, 0, 1}, 1), hs({0, 0, -1}, 0)});
}

inline std::vector<Halfspace> octahedron_halfspaces() {
  std::vector<Halfspace> out;
  for (long a : {1, -1})
    for (long b : {1, -1})
      for (long c : {1, -1}) out.push_back(hs({a, b, c}, 1));
  return out;
}

inline LabeledPolytope octahedron() { return canonicalize(octahedron_halfspaces()); }

/// [0, 1] with label `left` on the facet x >= 0 and `right` on x <= 1.
inline LabeledPolytope interval(long left, long right) {
  return canonicalize({hs({-1}, 0, left), hs({1}, 1, right)});
}

// --- oracles ----------------------------------------------------------------

inline Integer cofactor_determinant(const std::vector<std::vector<Integer>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Integer det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    std::vector<std::vector<Integer>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Integer> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    const Integer c = m[0][j] * cofactor_determinant(minor);
    det += (j % 2 == 0) ? c : Integer(-c);
  }
  return det;
}

inline Integer cofactor_determinant(const IntMatrix& a) {
  std::vector<std::vector<Integer>> m(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) m[i] = a.row(i);
  return cofactor_determinant(m);
}

/// Invariant factors from determinantal divisors: D_k = gcd of k x k minors,
/// d_k = D_k / D_{k-1}. Only nonzero factors are returned.
inline std::vector<Integer> invariant_factors_by_minors(const IntMatrix& a) {
  std::vector<Integer> factors;
  Integer prev = 1;
  for (std::size_t k = 1; k <= std::min(a.rows(), a.cols()); ++k) {
    Integer g = 0;
    for_each_combination(a.rows(), k, [&](const std::vector<std::size_t>& rows) {
      for_each_combination(a.cols(), k, [&](const std::vector<std::size_t>& cols) {
        std::vector<std::vector<Integer>> m;
        for (auto r : rows) {
          std::vector<Integer> row;
          for (auto c : cols) row.push_back(a(r, c));
          m.push_back(std::move(row));
        }
        g = boost::multiprecision::gcd(g, Integer(abs(cofactor_determinant(m))));
        return true;
      });
      return true;
    });
    if (g == 0) break;
    factors.push_back(g / prev);
    prev = g;
  }
  return factors;
}

/// Solves a square system by Cramer's rule. Empty result when singular.
inline std::optional<RationalVector> cramer(const std::vector<LatticeVector>& rows, const RationalVector& rhs) {
  const std::size_t n = rows.size();
  // Scale rhs to integers so every determinant is integral.
  Integer den = 1;
  for (auto& r : rhs) den = boost::multiprecision::lcm(den, Integer(boost::multiprecision::denominator(r)));
  std::vector<std::vector<Integer>> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = rows[i];
  const Integer det = cofactor_determinant(m);
  if (det == 0) return std::nullopt;
  RationalVector x(n);
  for (std::size_t j = 0; j < n; ++j) {
    auto mj = m;
    for (std::size_t i = 0; i < n; ++i) {
      const Rational scaled = rhs[i] * Rational(den);
      mj[i][j] = boost::multiprecision::numerator(scaled);
    }
    x[j] = Rational(cofactor_determinant(mj)) / Rational(det * den);
  }
  return x;
}

/// Vertices of {<a_i, x> <= b_i} (optionally also on the hyperplane
/// <e, x> = c) by trying every subset of tight constraints.
inline std::vector<RationalVector> brute_force_vertices(const std::vector<Halfspace>& hs,
                                                        std::size_t n,
                                                        const std::optional<Halfspace>& plane = {}) {
  std::vector<RationalVector> out;
  const std::size_t pick = plane ? n - 1 : n;
  for_each_combination(hs.size(), pick, [&](const std::vector<std::size_t>& idx) {
    std::vector<LatticeVector> rows;
    RationalVector rhs;
    for (auto i : idx) {
      rows.push_back(hs[i].normal);
      rhs.push_back(hs[i].offset);
    }
    if (plane) {
      rows.push_back(plane->normal);
      rhs.push_back(plane->offset);
    }
    auto x = cramer(rows, rhs);
    if (!x) return true;
    for (auto& h : hs)
      if (dot(h.normal, *x) > h.offset) return true;
    out.push_back(*x);
    return true;
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::vector<RationalVector> vertex_points(const LabeledPolytope& P) {
  std::vector<RationalVector> out;
  for (auto& v : P.vertices()) out.push_back(v.point);
  std::sort(out.begin(), out.end());
  return out;
}

// --- random generators --------------------------------------------------------

inline IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

/// Random unimodular A together with its inverse, built from elementary
/// integer row operations.
inline std::pair<IntMatrix, IntMatrix> random_unimodular(std::mt19937& rng, std::size_t n, int steps = 12) {
  IntMatrix a = IntMatrix::identity(n);
  IntMatrix inv = IntMatrix::identity(n);
  if (n == 1) {
    if (rng() % 2) {
      a(0, 0) = -1;
      inv(0, 0) = -1;
    }
    return {a, inv};
  }
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> mult(-2, 2);
  for (int s = 0; s < steps; ++s) {
    const auto i = pick(rng);
    auto j = pick(rng);
    if (i == j) j = (j + 1) % n;
    switch (rng() % 3) {
      case 0: {  // row i += k row j ; inverse: col j -= k col i on the right
        const int k = mult(rng);
        a.add_row_multiple(i, j, k);
        inv.add_col_multiple(j, i, -k);
        break;
      }
      case 1:
        a.swap_rows(i, j);
        inv.swap_cols(i, j);
        break;
      default:
        a.negate_row(i);
        inv.negate_col(i);
        break;
    }
  }
  return {a, inv};
}

/// Transforms P by x -> A x. Normals map by inv^T.
inline std::vector<Halfspace> transform(const LabeledPolytope& P, const IntMatrix& inv) {
  const IntMatrix inv_t = inv.transpose();
  std::vector<Halfspace> out;
  for (auto& h : P.halfspaces()) out.push_back({inv_t * h.normal, h.offset, h.label});
  return out;
}

inline RationalVector map_point(const IntMatrix& a, const RationalVector& x) {
  RationalVector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] += Rational(a(i, j)) * x[j];
  return y;
}

/// Random full-dimensional polytope containing the origin in its interior:
/// a box (sometimes loose) plus extra random cuts, random labels.
inline LabeledPolytope random_polytope(std::mt19937& rng, std::size_t n, bool labels = false) {
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<int> num(1, 12);
  std::uniform_int_distribution<int> den(1, 4);
  std::uniform_int_distribution<int> lab(1, 3);
  auto offset = [&] { return Rational(num(rng)) / Rational(den(rng)); };
  std::vector<Halfspace> hs;
  for (std::size_t i = 0; i < n; ++i)
    for (int s : {1, -1}) {
      LatticeVector v(n, Integer(0));
      v[i] = s;
      hs.push_back({v, offset() + 2, labels ? Integer(lab(rng)) : Integer(1)});
    }
  const int extra = 2 + static_cast<int>(rng() % 4);
  for (int e = 0; e < extra; ++e) {
    LatticeVector v(n);
    do {
      for (auto& x : v) x = coef(rng);
    } while (is_zero(v));
    const Integer g = gcd_of(v);
    Halfspace h{primitive_part(v), offset() / Rational(g), labels ? Integer(lab(rng)) : Integer(1)};
    // identical halfspaces with different labels are rejected by canonicalize
    if (std::none_of(hs.begin(), hs.end(),
                     [&](const Halfspace& o) { return o.normal == h.normal && o.offset == h.offset; }))
      hs.push_back(std::move(h));
  }
  return canonicalize(std::move(hs));
}

inline LatticeVector random_direction(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> coef(-3, 3);
  LatticeVector v(n);
  do {
    for (auto& x : v) x = coef(rng);
  } while (is_zero(v));
  return primitive_part(v);
}

}  // namespace toric::testing
