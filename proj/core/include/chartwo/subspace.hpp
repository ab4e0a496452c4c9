#ifndef CHARTWO_SUBSPACE_HPP
#define CHARTWO_SUBSPACE_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "chartwo/matrix.hpp"

namespace chartwo {

/// Linear subspace of F^n held in canonical form: basis rows in reduced row
/// echelon form with pivot columns ascending, so subspace equality is a
/// literal comparison of the stored matrices.
template <ScalarField F>
class Subspace {
 public:
  using Elem = typename F::Element;

  static Subspace zero(F field, std::size_t ambient) {
    return Subspace(field, ambient, Matrix<F>(field, 0, ambient), {});
  }

  static Subspace full(F field, std::size_t ambient) {
    return from_rows(Matrix<F>::identity(field, ambient));
  }

  static Subspace from_rows(const Matrix<F>& rows) {
    const auto e = rows.reduced_row_echelon();
    const std::size_t r = e.pivot_cols.size();
    Matrix<F> basis(rows.field(), r, rows.cols());
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < rows.cols(); ++j) basis.at(i, j) = e.reduced.at(i, j);
    }
    return Subspace(rows.field(), rows.cols(), std::move(basis), e.pivot_cols);
  }

  static Subspace from_vectors(F field, std::size_t ambient,
                               const std::vector<std::vector<Elem>>& vectors) {
    Matrix<F> m(field, vectors.size(), ambient);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      if (vectors[i].size() != ambient) {
        throw std::invalid_argument("Subspace: vector length mismatch");
      }
      for (std::size_t j = 0; j < ambient; ++j) m.at(i, j) = vectors[i][j];
    }
    return from_rows(m);
  }

  const F& field() const { return field_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix<F>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivot_cols() const { return pivots_; }
  std::vector<Elem> basis_vector(std::size_t i) const { return basis_.row(i); }

  /// Remainder of v after eliminating all pivot coordinates; zero iff v lies
  /// in the subspace.
  std::vector<Elem> reduce(std::vector<Elem> v) const {
    if (v.size() != ambient_) throw std::invalid_argument("Subspace: length mismatch");
    for (std::size_t r = 0; r < basis_.rows(); ++r) {
      const Elem c = v[pivots_[r]];
      if (c.is_zero()) continue;
      for (std::size_t j = 0; j < ambient_; ++j) {
        v[j] = v[j] - c * basis_.at(r, j);
      }
    }
    return v;
  }

  bool contains(const std::vector<Elem>& v) const {
    return vec_is_zero(field_, reduce(v));
  }

  bool contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) return false;
    for (std::size_t i = 0; i < other.dim(); ++i) {
      if (!contains(other.basis_vector(i))) return false;
    }
    return true;
  }

  bool operator==(const Subspace& rhs) const {
    return ambient_ == rhs.ambient_ && basis_ == rhs.basis_;
  }

  Subspace sum(const Subspace& rhs) const {
    require_same_ambient(rhs);
    Matrix<F> stacked(field_, dim() + rhs.dim(), ambient_);
    copy_rows_into(stacked, 0, basis_);
    copy_rows_into(stacked, dim(), rhs.basis_);
    return from_rows(stacked);
  }

  /// Zassenhaus: row-reduce [A|A; B|0]; rows with zero left half carry the
  /// intersection in their right half.
  Subspace intersect(const Subspace& rhs) const {
    require_same_ambient(rhs);
    const std::size_t n = ambient_;
    Matrix<F> big(field_, dim() + rhs.dim(), 2 * n);
    for (std::size_t i = 0; i < dim(); ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        big.at(i, j) = basis_.at(i, j);
        big.at(i, n + j) = basis_.at(i, j);
      }
    }
    for (std::size_t i = 0; i < rhs.dim(); ++i) {
      for (std::size_t j = 0; j < n; ++j) big.at(dim() + i, j) = rhs.basis_.at(i, j);
    }
    const auto e = big.reduced_row_echelon();
    std::vector<std::vector<Elem>> inter;
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) {
      if (e.pivot_cols[r] < n) continue;
      const std::vector<Elem> full_row = e.reduced.row(r);
      inter.emplace_back(full_row.begin() + static_cast<std::ptrdiff_t>(n),
                         full_row.end());
    }
    return from_vectors(field_, n, inter);
  }

  /// Surjection onto coordinates of F^n / W together with a right inverse;
  /// the kernel of the projection is exactly this subspace.
  struct Quotient {
    Matrix<F> projection;  // (n - dim) x n
    Matrix<F> section;     // n x (n - dim)
  };

  Quotient quotient_map() const {
    std::vector<bool> is_pivot(ambient_, false);
    for (std::size_t c : pivots_) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < ambient_; ++c) {
      if (!is_pivot[c]) free_cols.push_back(c);
    }
    const std::size_t q = free_cols.size();
    Matrix<F> projection(field_, q, ambient_);
    // reduce() is linear; column j of the projection is the free-coordinate
    // part of reduce(e_j).
    for (std::size_t j = 0; j < ambient_; ++j) {
      const std::vector<Elem> red = reduce(unit_vector(field_, ambient_, j));
      for (std::size_t r = 0; r < q; ++r) projection.at(r, j) = red[free_cols[r]];
    }
    Matrix<F> section(field_, ambient_, q);
    for (std::size_t r = 0; r < q; ++r) section.at(free_cols[r], r) = field_.one();
    return {std::move(projection), std::move(section)};
  }

 private:
  Subspace(F field, std::size_t ambient, Matrix<F> basis, std::vector<std::size_t> pivots)
      : field_(field), ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  void require_same_ambient(const Subspace& rhs) const {
    if (ambient_ != rhs.ambient_) {
      throw std::invalid_argument("Subspace: ambient dimension mismatch");
    }
  }

  static void copy_rows_into(Matrix<F>& dst, std::size_t row_offset, const Matrix<F>& src) {
    for (std::size_t i = 0; i < src.rows(); ++i) {
      for (std::size_t j = 0; j < src.cols(); ++j) dst.at(row_offset + i, j) = src.at(i, j);
    }
  }

  F field_;
  std::size_t ambient_;
  Matrix<F> basis_;
  std::vector<std::size_t> pivots_;
};

/// Additive map with f(lambda x) = lambda^2 f(x): columns are the images of
/// the basis vectors, applied after squaring the coordinates.
template <ScalarField F>
struct SemilinearMap {
  Matrix<F> matrix;

  std::vector<typename F::Element> apply(const std::vector<typename F::Element>& v) const {
    std::vector<typename F::Element> squared(v);
    for (auto& x : squared) x = x * x;
    return matrix.apply(squared);
  }

  /// Span of the set-theoretic image; equals the span of the columns because
  /// f(sum a_i e_i) = sum a_i^2 f(e_i).
  Subspace<F> image_span() const {
    return Subspace<F>::from_rows(matrix.transpose());
  }
};

}  // namespace chartwo

#endif  // CHARTWO_SUBSPACE_HPP
