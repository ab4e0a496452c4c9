#ifndef CHARTWO_MATRIX_HPP
#define CHARTWO_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chartwo/fields.hpp"

namespace chartwo {

/// Dense matrix over an exact scalar field. All eliminations are exact
/// Gaussian elimination; any nonzero entry is a valid pivot.
template <ScalarField F>
class Matrix {
 public:
  using Elem = typename F::Element;

  Matrix(F field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), a_(rows * cols, field.zero()) {}

  static Matrix identity(F field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field.one();
    return m;
  }

  static Matrix from_rows(F field, const std::vector<std::vector<Elem>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    Matrix m(field, r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw std::invalid_argument("Matrix: ragged rows");
      for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Elem& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Elem& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::vector<Elem> row(std::size_t i) const {
    return std::vector<Elem>(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                             a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  std::vector<Elem> col(std::size_t j) const {
    std::vector<Elem> v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v.push_back(at(i, j));
    return v;
  }

  Matrix operator+(const Matrix& rhs) const {
    require_same_shape(rhs);
    Matrix r(field_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + rhs.a_[i];
    return r;
  }

  Matrix operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("Matrix: product shape mismatch");
    Matrix r(field_, rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t k = 0; k < cols_; ++k) {
        const Elem& aik = at(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < rhs.cols_; ++j) {
          r.at(i, j) = r.at(i, j) + aik * rhs.at(k, j);
        }
      }
    }
    return r;
  }

  std::vector<Elem> apply(const std::vector<Elem>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("Matrix: apply shape mismatch");
    std::vector<Elem> r(rows_, field_.zero());
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!at(i, j).is_zero()) r[i] = r[i] + at(i, j) * v[j];
      }
    }
    return r;
  }

  Matrix transpose() const {
    Matrix r(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    }
    return r;
  }

  Matrix scaled(const Elem& c) const {
    Matrix r(field_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = c * a_[i];
    return r;
  }

  /// Entry-wise change of scalars, e.g. lifting K-matrices into K'.
  template <ScalarField G, typename Fn>
  Matrix<G> map_entries(G target, Fn&& fn) const {
    Matrix<G> r(target, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = fn(at(i, j));
    }
    return r;
  }

  bool operator==(const Matrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && a_ == rhs.a_;
  }

  struct Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivot_cols;
  };

  Echelon reduced_row_echelon() const {
    Matrix m = *this;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t p = r;
      while (p < rows_ && m.at(p, c).is_zero()) ++p;
      if (p == rows_) continue;
      m.swap_rows(p, r);
      const Elem inv = m.at(r, c).inverse();
      for (std::size_t j = c; j < cols_; ++j) m.at(r, j) = inv * m.at(r, j);
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r || m.at(i, c).is_zero()) continue;
        const Elem f = m.at(i, c);
        for (std::size_t j = c; j < cols_; ++j) {
          m.at(i, j) = m.at(i, j) - f * m.at(r, j);
        }
      }
      pivots.push_back(c);
      ++r;
    }
    return {std::move(m), std::move(pivots)};
  }

  std::size_t rank() const { return reduced_row_echelon().pivot_cols.size(); }

  /// Basis of { v : M v = 0 }, one vector per free column in ascending order.
  std::vector<std::vector<Elem>> kernel_basis_vectors() const {
    const Echelon e = reduced_row_echelon();
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : e.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<Elem>> basis;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (is_pivot[c]) continue;
      std::vector<Elem> v(cols_, field_.zero());
      v[c] = field_.one();
      for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) {
        // x_pivot = -reduced[r][c] (equal to +, characteristic two).
        v[e.pivot_cols[r]] = e.reduced.at(r, c);
      }
      basis.push_back(std::move(v));
    }
    return basis;
  }

  /// One exact solution of M x = rhs if consistent; free variables are zero.
  std::optional<std::vector<Elem>> solve(const std::vector<Elem>& rhs) const {
    if (rhs.size() != rows_) throw std::invalid_argument("Matrix: solve shape mismatch");
    Matrix aug(field_, rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
      aug.at(i, cols_) = rhs[i];
    }
    const auto e = aug.reduced_row_echelon();
    std::vector<Elem> x(cols_, field_.zero());
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) {
      if (e.pivot_cols[r] == cols_) return std::nullopt;  // 0 = 1 row
      x[e.pivot_cols[r]] = e.reduced.at(r, cols_);
    }
    return x;
  }

  Elem determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("Matrix: determinant of non-square");
    // Row swaps are sign-free in characteristic two.
    Matrix m = *this;
    Elem det = field_.one();
    for (std::size_t c = 0; c < cols_; ++c) {
      std::size_t p = c;
      while (p < rows_ && m.at(p, c).is_zero()) ++p;
      if (p == rows_) return field_.zero();
      m.swap_rows(p, c);
      det = det * m.at(c, c);
      const Elem inv = m.at(c, c).inverse();
      for (std::size_t i = c + 1; i < rows_; ++i) {
        if (m.at(i, c).is_zero()) continue;
        const Elem f = m.at(i, c) * inv;
        for (std::size_t j = c; j < cols_; ++j) {
          m.at(i, j) = m.at(i, j) - f * m.at(c, j);
        }
      }
    }
    return det;
  }

  bool invertible() const {
    return rows_ == cols_ && !determinant().is_zero();
  }

  std::optional<Matrix> inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("Matrix: inverse of non-square");
    Matrix aug(field_, rows_, 2 * cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
      aug.at(i, cols_ + i) = field_.one();
    }
    const auto e = aug.reduced_row_echelon();
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i >= e.pivot_cols.size() || e.pivot_cols[i] != i) return std::nullopt;
    }
    Matrix inv(field_, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) inv.at(i, j) = e.reduced.at(i, cols_ + j);
    }
    return inv;
  }

  /// Rows of scalar literals separated by spaces, rows by newlines.
  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j > 0) out += ' ';
        out += field_.to_string(at(i, j));
      }
      out += '\n';
    }
    return out;
  }

 private:
  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
  }

  void require_same_shape(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
      throw std::invalid_argument("Matrix: shape mismatch");
    }
  }

  F field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> a_;
};

template <ScalarField F>
std::vector<typename F::Element> vec_add(const std::vector<typename F::Element>& a,
                                         const std::vector<typename F::Element>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vec_add: length mismatch");
  std::vector<typename F::Element> r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = r[i] + b[i];
  return r;
}

template <ScalarField F>
bool vec_is_zero(const F&, const std::vector<typename F::Element>& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

template <ScalarField F>
typename F::Element dot(const F& field, const std::vector<typename F::Element>& a,
                        const std::vector<typename F::Element>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  typename F::Element r = field.zero();
  for (std::size_t i = 0; i < a.size(); ++i) r = r + a[i] * b[i];
  return r;
}

/// Unit coordinate vector e_i in F^n.
template <ScalarField F>
std::vector<typename F::Element> unit_vector(const F& field, std::size_t n, std::size_t i) {
  std::vector<typename F::Element> v(n, field.zero());
  v[i] = field.one();
  return v;
}

/// Visits every vector of GF(2^k)^n; the caller is responsible for keeping
/// order()^n within reach.
template <typename Fn>
void for_each_vector(const Gf2kField& field, std::size_t n, Fn&& fn) {
  const std::uint64_t q = field.order();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= q;
  std::vector<Gf2k> v(n, field.zero());
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t rest = idx;
    for (std::size_t i = 0; i < n; ++i) {
      v[i] = field.element_at(rest % q);
      rest /= q;
    }
    fn(v);
  }
}

}  // namespace chartwo

#endif  // CHARTWO_MATRIX_HPP
