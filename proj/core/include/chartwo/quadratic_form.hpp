#ifndef CHARTWO_QUADRATIC_FORM_HPP
#define CHARTWO_QUADRATIC_FORM_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <vector>

#include "chartwo/subspace.hpp"

namespace chartwo {

template <ScalarField F>
class BilinearForm;

/// Quadratic form in characteristic two, stored as the upper-triangular
/// coefficient array of Q(v) = sum_{i<=j} c[i][j] v_i v_j. A form is not
/// determined by its bilinear form here: the diagonal coefficients carry
/// the square terms that polarization kills.
template <ScalarField F>
class QuadraticForm {
 public:
  using Elem = typename F::Element;

  QuadraticForm(F field, std::size_t dim)
      : field_(field), n_(dim), c_(dim * (dim + 1) / 2, field.zero()) {}

  const F& field() const { return field_; }
  std::size_t dim() const { return n_; }

  const Elem& coeff(std::size_t i, std::size_t j) const { return c_[tri_index(i, j)]; }
  void set_coeff(std::size_t i, std::size_t j, Elem v) { c_[tri_index(i, j)] = std::move(v); }

  /// Coefficients as a flat vector indexed like sym2_index (i <= j row-major).
  const std::vector<Elem>& coeffs() const { return c_; }
  static QuadraticForm from_coeffs(F field, std::size_t dim, std::vector<Elem> coeffs) {
    QuadraticForm q(field, dim);
    if (coeffs.size() != q.c_.size()) throw std::invalid_argument("QuadraticForm: bad size");
    q.c_ = std::move(coeffs);
    return q;
  }

  Elem evaluate(const std::vector<Elem>& v) const {
    if (v.size() != n_) throw std::invalid_argument("QuadraticForm: dimension mismatch");
    Elem acc = field_.zero();
    for (std::size_t i = 0; i < n_; ++i) {
      if (v[i].is_zero()) continue;
      for (std::size_t j = i; j < n_; ++j) {
        const Elem& c = coeff(i, j);
        if (!c.is_zero() && !v[j].is_zero()) acc = acc + c * v[i] * v[j];
      }
    }
    return acc;
  }

  /// beta(v, w) = Q(v+w) + Q(v) + Q(w); the gram matrix picks up the
  /// off-diagonal coefficients and is alternating by construction.
  BilinearForm<F> polarize() const;

  /// Q composed with a linear map g: F^m -> F^n, as an exact coefficient
  /// computation (no evaluation involved).
  QuadraticForm pullback(const Matrix<F>& g) const {
    if (g.rows() != n_) throw std::invalid_argument("QuadraticForm: pullback shape");
    const std::size_t m = g.cols();
    QuadraticForm r(field_, m);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i; j < n_; ++j) {
        const Elem& c = coeff(i, j);
        if (c.is_zero()) continue;
        for (std::size_t k = 0; k < m; ++k) {
          // square term: c * g[i][k] g[j][k]
          const Elem sq = c * g.at(i, k) * g.at(j, k);
          if (!sq.is_zero()) r.set_coeff(k, k, r.coeff(k, k) + sq);
          for (std::size_t l = k + 1; l < m; ++l) {
            const Elem cross = c * (g.at(i, k) * g.at(j, l) + g.at(i, l) * g.at(j, k));
            if (!cross.is_zero()) r.set_coeff(k, l, r.coeff(k, l) + cross);
          }
        }
      }
    }
    return r;
  }

  QuadraticForm operator+(const QuadraticForm& rhs) const {
    if (rhs.n_ != n_) throw std::invalid_argument("QuadraticForm: dimension mismatch");
    QuadraticForm r(field_, n_);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + rhs.c_[i];
    return r;
  }

  QuadraticForm scaled(const Elem& a) const {
    QuadraticForm r(field_, n_);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = a * c_[i];
    return r;
  }

  template <ScalarField G, typename Fn>
  QuadraticForm<G> map_coeffs(G target, Fn&& fn) const {
    QuadraticForm<G> r(target, n_);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i; j < n_; ++j) r.set_coeff(i, j, fn(coeff(i, j)));
    }
    return r;
  }

  Subspace<F> radical() const;
  bool is_nondegenerate() const;

  bool operator==(const QuadraticForm& rhs) const {
    return n_ == rhs.n_ && c_ == rhs.c_;
  }

 private:
  std::size_t tri_index(std::size_t i, std::size_t j) const {
    if (i > j || j >= n_) throw std::invalid_argument("QuadraticForm: bad index");
    // rows 0..i-1 hold n, n-1, ..., n-i+1 entries
    return i * n_ - i * (i - 1) / 2 + (j - i);
  }

  F field_;
  std::size_t n_;
  std::vector<Elem> c_;
};

/// Symmetric bilinear form with zero diagonal (every characteristic-two
/// polarization is alternating; the constructor enforces it).
template <ScalarField F>
class BilinearForm {
 public:
  using Elem = typename F::Element;

  explicit BilinearForm(Matrix<F> gram) : gram_(std::move(gram)) {
    if (gram_.rows() != gram_.cols()) {
      throw std::invalid_argument("BilinearForm: gram must be square");
    }
    for (std::size_t i = 0; i < gram_.rows(); ++i) {
      if (!gram_.at(i, i).is_zero()) {
        throw std::invalid_argument("BilinearForm: diagonal must vanish");
      }
      for (std::size_t j = i + 1; j < gram_.cols(); ++j) {
        if (!(gram_.at(i, j) == gram_.at(j, i))) {
          throw std::invalid_argument("BilinearForm: gram must be symmetric");
        }
      }
    }
  }

  const Matrix<F>& gram() const { return gram_; }
  std::size_t dim() const { return gram_.rows(); }

  Elem evaluate(const std::vector<Elem>& v, const std::vector<Elem>& w) const {
    return dot(gram_.field(), v, gram_.apply(w));
  }

  Subspace<F> radical() const {
    return Subspace<F>::from_vectors(gram_.field(), dim(), gram_.kernel_basis_vectors());
  }

  bool operator==(const BilinearForm& rhs) const { return gram_ == rhs.gram_; }

 private:
  Matrix<F> gram_;
};

template <ScalarField F>
BilinearForm<F> QuadraticForm<F>::polarize() const {
  Matrix<F> gram(field_, n_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      gram.at(i, j) = coeff(i, j);
      gram.at(j, i) = coeff(i, j);
    }
  }
  return BilinearForm<F>(std::move(gram));
}

template <ScalarField F>
Subspace<F> QuadraticForm<F>::radical() const {
  return polarize().radical();
}

template <ScalarField F>
bool QuadraticForm<F>::is_nondegenerate() const {
  const Subspace<F> rad = radical();
  if (n_ % 2 == 0) return rad.dim() == 0;
  if (rad.dim() != 1) return false;
  return !evaluate(rad.basis_vector(0)).is_zero();
}

/// Q(b_i) = 0 for every basis vector and beta(b_i, b_j) = 0 for i < j; in
/// characteristic two this decides Q|_W = 0 on the whole subspace.
template <ScalarField F>
bool is_isotropic_subspace(const QuadraticForm<F>& q, const Subspace<F>& w) {
  if (w.ambient_dim() != q.dim()) {
    throw std::invalid_argument("is_isotropic_subspace: ambient mismatch");
  }
  const BilinearForm<F> beta = q.polarize();
  for (std::size_t i = 0; i < w.dim(); ++i) {
    if (!q.evaluate(w.basis_vector(i)).is_zero()) return false;
    for (std::size_t j = i + 1; j < w.dim(); ++j) {
      if (!beta.evaluate(w.basis_vector(i), w.basis_vector(j)).is_zero()) return false;
    }
  }
  return true;
}

template <ScalarField F>
QuadraticForm<F> hyperbolic_plane(F field) {
  QuadraticForm<F> q(field, 2);
  q.set_coeff(0, 1, field.one());
  return q;
}

template <ScalarField F>
struct DirectSum {
  QuadraticForm<F> form;
  bool nondegenerate;  // two odd nondegenerate summands lose it; flagged, not an error
};

template <ScalarField F>
DirectSum<F> direct_sum(const QuadraticForm<F>& a, const QuadraticForm<F>& b) {
  QuadraticForm<F> q(a.field(), a.dim() + b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = i; j < a.dim(); ++j) q.set_coeff(i, j, a.coeff(i, j));
  }
  for (std::size_t i = 0; i < b.dim(); ++i) {
    for (std::size_t j = i; j < b.dim(); ++j) {
      q.set_coeff(a.dim() + i, a.dim() + j, b.coeff(i, j));
    }
  }
  return {q, q.is_nondegenerate()};
}

/// Embeds a form on F^m into F^n at a coordinate offset (zero elsewhere).
template <ScalarField F>
QuadraticForm<F> embed_form(const QuadraticForm<F>& q, std::size_t ambient,
                            std::size_t offset) {
  if (offset + q.dim() > ambient) throw std::invalid_argument("embed_form: out of range");
  QuadraticForm<F> r(q.field(), ambient);
  for (std::size_t i = 0; i < q.dim(); ++i) {
    for (std::size_t j = i; j < q.dim(); ++j) {
      r.set_coeff(offset + i, offset + j, q.coeff(i, j));
    }
  }
  return r;
}

/// Exhaustive count of { v : Q(v) = 0 } over GF(2^k)^n, sharded over threads
/// with a deterministic sum. Enumeration bound: k * dim <= 24.
inline std::uint64_t count_isotropic_vectors(const QuadraticForm<Gf2kField>& q,
                                             bool include_zero, int threads = 1) {
  const Gf2kField field = q.field();
  const int kbits = field.k * static_cast<int>(q.dim());
  if (kbits > 24) throw std::invalid_argument("count_isotropic_vectors: bound exceeded");
  const std::uint64_t total = std::uint64_t{1} << kbits;
  const std::uint64_t q_order = field.order();

  auto count_range = [&](std::uint64_t begin, std::uint64_t end) {
    std::uint64_t count = 0;
    std::vector<Gf2k> v(q.dim(), field.zero());
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      std::uint64_t rest = idx;
      for (std::size_t i = 0; i < q.dim(); ++i) {
        v[i] = field.element_at(rest % q_order);
        rest /= q_order;
      }
      if (q.evaluate(v).is_zero()) ++count;
    }
    return count;
  };

  std::uint64_t count = 0;
  if (threads <= 1) {
    count = count_range(0, total);
  } else {
    const std::uint64_t n_shards = static_cast<std::uint64_t>(threads);
    std::vector<std::uint64_t> partial(n_shards, 0);
    std::vector<std::thread> pool;
    for (std::uint64_t s = 0; s < n_shards; ++s) {
      const std::uint64_t begin = total * s / n_shards;
      const std::uint64_t end = total * (s + 1) / n_shards;
      pool.emplace_back([&, s, begin, end] { partial[s] = count_range(begin, end); });
    }
    for (auto& th : pool) th.join();
    for (std::uint64_t c : partial) count += c;
  }
  if (!include_zero) --count;  // zero vector is always isotropic
  return count;
}

}  // namespace chartwo

#endif  // CHARTWO_QUADRATIC_FORM_HPP
