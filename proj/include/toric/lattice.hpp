#pragma once

// Exact integer and rational linear algebra: lattice vectors, integer
// matrices, Smith and Hermite normal forms, lattice kernels, and a small
// rational Gaussian elimination used by the polytope code.

#include "toric/error.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace toric {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using LatticeVector = std::vector<Integer>;
using RationalVector = std::vector<Rational>;

inline std::string to_string(const Integer& value) { return value.str(); }

/// "p/q" in lowest terms, or just "p" when the denominator is 1.
inline std::string to_string(const Rational& value) {
  const Integer num = boost::multiprecision::numerator(value);
  const Integer den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if (q * b != a && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Integer gcd_of(std::span<const Integer> entries) {
  Integer g = 0;
  for (const auto& x : entries) g = boost::multiprecision::gcd(g, Integer(abs(x)));
  return g;
}

inline bool is_zero(std::span<const Integer> v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

inline bool is_primitive(std::span<const Integer> v) { return gcd_of(v) == 1; }

/// v / gcd(v). Direction is preserved.
inline LatticeVector primitive_part(std::span<const Integer> v) {
  const Integer g = gcd_of(v);
  if (g == 0) throw Error(Errc::ZeroVector, "primitive part of the zero vector");
  LatticeVector out(v.begin(), v.end());
  for (auto& x : out) x /= g;
  return out;
}

inline Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Rational dot(std::span<const Integer> a, std::span<const Rational> b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * b[i];
  return s;
}

inline RationalVector to_rational(std::span<const Integer> v) {
  return RationalVector(v.begin(), v.end());
}

inline LatticeVector negated(std::span<const Integer> v) {
  LatticeVector out(v.begin(), v.end());
  for (auto& x : out) x = -x;
  return out;
}

/// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<Integer>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw Error(Errc::DimensionMismatch, "ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(const std::vector<LatticeVector>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw Error(Errc::DimensionMismatch, "row length differs");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static IntMatrix from_columns(const std::vector<LatticeVector>& columns, std::size_t rows) {
    IntMatrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].size() != rows) throw Error(Errc::DimensionMismatch, "column length differs");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  LatticeVector row(std::size_t i) const {
    return LatticeVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                         data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  LatticeVector column(std::size_t j) const {
    LatticeVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  LatticeVector operator*(std::span<const Integer> v) const {
    if (v.size() != cols_) throw Error(Errc::DimensionMismatch, "matrix-vector size mismatch");
    LatticeVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw Error(Errc::DimensionMismatch, "matrix product size mismatch");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
  }

  // Elementary operations. Every normal-form routine below is written in
  // terms of these so the transforms stay unimodular.
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  /// row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k) {
    if (k == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += k * (*this)(src, j);
  }
  /// col[dst] += k * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& k) {
    if (k == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += k * (*this)(i, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
  }
  void negate_col(std::size_t c) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, c) = -(*this)(i, c);
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// U·A·V = D with U, V unimodular and D diagonal, d1 | d2 | ... , all di >= 0.
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;

  /// Nonzero diagonal entries of D in divisibility order.
  std::vector<Integer> invariant_factors() const {
    std::vector<Integer> out;
    for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i)
      if (D(i, i) != 0) out.push_back(D(i, i));
    return out;
  }

  /// Invariant factors greater than one: the torsion of coker(A).
  std::vector<Integer> nontrivial_factors() const {
    std::vector<Integer> out;
    for (auto& d : invariant_factors())
      if (d > 1) out.push_back(d);
    return out;
  }

  std::size_t rank() const { return invariant_factors().size(); }
};

inline SmithDecomposition smith_normal_form(const IntMatrix& A) {
  const std::size_t r = A.rows();
  const std::size_t c = A.cols();
  IntMatrix D = A;
  IntMatrix U = IntMatrix::identity(r);
  IntMatrix V = IntMatrix::identity(c);

  for (std::size_t t = 0; t < std::min(r, c); ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::optional<std::pair<std::size_t, std::size_t>> best;
      for (std::size_t i = t; i < r; ++i)
        for (std::size_t j = t; j < c; ++j)
          if (D(i, j) != 0 && (!best || abs(D(i, j)) < abs(D(best->first, best->second))))
            best = {i, j};
      if (!best) return {std::move(U), std::move(D), std::move(V)};

      D.swap_rows(t, best->first);
      U.swap_rows(t, best->first);
      D.swap_cols(t, best->second);
      V.swap_cols(t, best->second);

      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        const Integer q = D(i, t) / D(t, t);
        D.add_row_multiple(i, t, -q);
        U.add_row_multiple(i, t, -q);
        if (D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        const Integer q = D(t, j) / D(t, t);
        D.add_col_multiple(j, t, -q);
        V.add_col_multiple(j, t, -q);
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Enforce d_t | every remaining entry.
      std::optional<std::size_t> offending_row;
      for (std::size_t i = t + 1; i < r && !offending_row; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (D(i, j) % D(t, t) != 0) {
            offending_row = i;
            break;
          }
      if (!offending_row) break;
      D.add_row_multiple(t, *offending_row, 1);
      U.add_row_multiple(t, *offending_row, 1);
    }
    if (D(t, t) < 0) {
      D.negate_row(t);
      U.negate_row(t);
    }
  }
  return {std::move(U), std::move(D), std::move(V)};
}

/// A·U = H with U unimodular and H in column Hermite normal form.
struct HermiteDecomposition {
  IntMatrix H;
  IntMatrix U;
  std::size_t rank = 0;
};

/// Column-style Hermite normal form. The canonical shape is lower echelon:
/// the first `rank` columns carry positive pivots in strictly increasing
/// rows, every entry left of a pivot lies in [0, pivot), and the trailing
/// columns are zero. Example: [[2,1],[0,1]] -> [[1,0],[1,2]].
inline HermiteDecomposition hermite_decomposition(const IntMatrix& A) {
  const std::size_t r = A.rows();
  const std::size_t c = A.cols();
  IntMatrix H = A;
  IntMatrix U = IntMatrix::identity(c);
  std::size_t k = 0;

  for (std::size_t i = 0; i < r && k < c; ++i) {
    for (;;) {
      std::optional<std::size_t> best;
      for (std::size_t j = k; j < c; ++j)
        if (H(i, j) != 0 && (!best || abs(H(i, j)) < abs(H(i, *best)))) best = j;
      if (!best) break;
      H.swap_cols(k, *best);
      U.swap_cols(k, *best);
      bool done = true;
      for (std::size_t j = k + 1; j < c; ++j) {
        const Integer q = H(i, j) / H(i, k);
        H.add_col_multiple(j, k, -q);
        U.add_col_multiple(j, k, -q);
        if (H(i, j) != 0) done = false;
      }
      if (done) break;
    }
    if (H(i, k) == 0) continue;  // no pivot in this row
    if (H(i, k) < 0) {
      H.negate_col(k);
      U.negate_col(k);
    }
    for (std::size_t j = 0; j < k; ++j) {
      const Integer q = floor_div(H(i, j), H(i, k));
      H.add_col_multiple(j, k, -q);
      U.add_col_multiple(j, k, -q);
    }
    ++k;
  }
  return {std::move(H), std::move(U), k};
}

inline IntMatrix hermite_normal_form(const IntMatrix& A) { return hermite_decomposition(A).H; }

inline std::size_t rank(const IntMatrix& A) { return hermite_decomposition(A).rank; }

/// Saturated basis of {v in Z^c : A v = 0}, in Hermite-canonical form
/// (the basis matrix, taken column-wise, is its own column HNF).
inline std::vector<LatticeVector> lattice_kernel(const IntMatrix& A) {
  const auto dec = hermite_decomposition(A);
  const std::size_t c = A.cols();
  std::vector<LatticeVector> raw;
  for (std::size_t j = dec.rank; j < c; ++j) raw.push_back(dec.U.column(j));
  if (raw.empty()) return {};
  const IntMatrix canonical = hermite_normal_form(IntMatrix::from_columns(raw, c));
  std::vector<LatticeVector> basis;
  for (std::size_t j = 0; j < canonical.cols(); ++j) basis.push_back(canonical.column(j));
  return basis;
}

/// Fraction-free Bareiss determinant.
inline Integer determinant(const IntMatrix& A) {
  const std::size_t n = A.rows();
  if (n != A.cols()) throw Error(Errc::DimensionMismatch, "determinant of a non-square matrix");
  if (n == 0) return 1;
  IntMatrix M = A;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (M(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && M(p, k) == 0) ++p;
      if (p == n) return 0;
      M.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        M(i, j) = (M(i, j) * M(k, k) - M(i, k) * M(k, j)) / prev;
    prev = M(k, k);
  }
  return sign * M(n - 1, n - 1);
}

/// Solves the square system rows·x = rhs. Returns nullopt when singular.
inline std::optional<RationalVector> solve(const std::vector<LatticeVector>& rows,
                                           const RationalVector& rhs) {
  const std::size_t n = rows.size();
  std::vector<RationalVector> M(n);
  for (std::size_t i = 0; i < n; ++i) {
    M[i] = to_rational(rows[i]);
    M[i].push_back(rhs[i]);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && M[p][col] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(M[p], M[col]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || M[i][col] == 0) continue;
      const Rational f = M[i][col] / M[col][col];
      for (std::size_t j = col; j <= n; ++j) M[i][j] -= f * M[col][j];
    }
  }
  RationalVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = M[i][n] / M[i][i];
  return x;
}

inline std::size_t rational_rank(std::vector<RationalVector> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][col] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (rows[i][col] == 0) continue;
      const Rational f = rows[i][col] / rows[rank][col];
      for (std::size_t j = col; j < cols; ++j) rows[i][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

/// Dimension of the affine hull of a nonempty point set.
inline std::size_t affine_dimension(const std::vector<RationalVector>& points) {
  if (points.size() <= 1) return 0;
  std::vector<RationalVector> diffs;
  for (std::size_t i = 1; i < points.size(); ++i) {
    RationalVector d(points[i].size());
    for (std::size_t j = 0; j < d.size(); ++j) d[j] = points[i][j] - points[0][j];
    diffs.push_back(std::move(d));
  }
  return rational_rank(std::move(diffs));
}

/// Calls fn(indices) for every k-subset of {0..m-1} in lexicographic order.
/// fn may return false to stop early.
template <class Fn>
void for_each_combination(std::size_t m, std::size_t k, Fn&& fn) {
  if (k > m) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    if (!fn(std::as_const(idx))) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == m - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace toric
