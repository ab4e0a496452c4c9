#ifndef CHARTWO_ORTHO_HPP
#define CHARTWO_ORTHO_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "chartwo/quadratic_form.hpp"

namespace chartwo {

/// Split quadratic form of SO(8) type on F^8: x1x7 + x2x8 + x3x5 + x4x6
/// (1-based). Chosen so that the stabilizer of W = <e1,e2> has block shape.
template <ScalarField F>
QuadraticForm<F> so8_standard_form(F field) {
  QuadraticForm<F> q(field, 8);
  q.set_coeff(0, 6, field.one());
  q.set_coeff(1, 7, field.one());
  q.set_coeff(2, 4, field.one());
  q.set_coeff(3, 5, field.one());
  return q;
}

/// Split quadratic form of SO(7) type on F^7: x1x6 + x2x7 + x3x4 + x5^2
/// (1-based). The radical of its polarization is the line <e5>, on which the
/// form takes the value 1, so the form is non-degenerate of odd dimension.
template <ScalarField F>
QuadraticForm<F> so7_standard_form(F field) {
  QuadraticForm<F> q(field, 7);
  q.set_coeff(0, 5, field.one());
  q.set_coeff(1, 6, field.one());
  q.set_coeff(2, 3, field.one());
  q.set_coeff(4, 4, field.one());
  return q;
}

/// Q(g e_i) = Q(e_i) for all i together with beta(g e_i, g e_j) = beta(e_i, e_j)
/// for i < j decides Q(g v) = Q(v) on the whole space. For an orthogonal g the
/// determinant is checked to be 1 (in characteristic two O(n) sits in SL(n)).
template <ScalarField F>
bool is_orthogonal(const Matrix<F>& g, const QuadraticForm<F>& q) {
  if (g.rows() != g.cols() || g.rows() != q.dim()) {
    throw std::invalid_argument("is_orthogonal: shape mismatch");
  }
  if (!g.invertible()) return false;
  const std::size_t n = q.dim();
  const BilinearForm<F> beta = q.polarize();
  std::vector<std::vector<typename F::Element>> images;
  images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) images.push_back(g.col(i));
  for (std::size_t i = 0; i < n; ++i) {
    if (!(q.evaluate(images[i]) == q.evaluate(unit_vector(q.field(), n, i)))) return false;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!(beta.evaluate(images[i], images[j]) ==
            beta.gram().at(i, j))) {
        return false;
      }
    }
  }
  if (!(g.determinant() == q.field().one())) {
    throw std::logic_error("is_orthogonal: orthogonal element with det != 1");
  }
  return true;
}

/// Dickson invariant D(g) = rank(g + 1) mod 2; the kernel of D on O(n) for
/// n even is the index-two subgroup SO(n).
template <ScalarField F>
int dickson_invariant(const Matrix<F>& g) {
  const Matrix<F> shifted = g + Matrix<F>::identity(g.field(), g.rows());
  return static_cast<int>(shifted.rank() % 2);
}

enum class LieVariant { scheme_tangent, smooth };

/// A subspace of End(V) closed under [A,B] = AB + BA, carried together with
/// the quadratic form whose invariance conditions cut it out.
template <ScalarField F>
struct LieSubalgebra {
  QuadraticForm<F> form;
  Subspace<F> space;  // subspace of F^(n^2), matrices flattened row-major
  LieVariant variant = LieVariant::smooth;

  std::size_t matrix_dim() const { return form.dim(); }
  std::size_t dim() const { return space.dim(); }

  Matrix<F> basis_matrix(std::size_t r) const {
    return unflatten(space.field(), matrix_dim(), space.basis_vector(r));
  }

  bool contains(const Matrix<F>& a) const { return space.contains(flatten(a)); }

  static std::vector<typename F::Element> flatten(const Matrix<F>& a) {
    std::vector<typename F::Element> v;
    v.reserve(a.rows() * a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) v.push_back(a.at(i, j));
    }
    return v;
  }

  static Matrix<F> unflatten(const F& field, std::size_t n,
                             const std::vector<typename F::Element>& v) {
    Matrix<F> m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m.at(i, j) = v[i * n + j];
    }
    return m;
  }

  bool bracket_closed() const {
    for (std::size_t i = 0; i < dim(); ++i) {
      const Matrix<F> a = basis_matrix(i);
      for (std::size_t j = i; j < dim(); ++j) {
        const Matrix<F> b = basis_matrix(j);
        if (!contains(a * b + b * a)) return false;
      }
    }
    return true;
  }

  /// Invariance of each basis element: beta(e_i, A e_j) = beta(e_j, A e_i)
  /// and beta(e_i, A e_i) = 0, i.e. gram*A is alternating.
  bool satisfies_invariance_conditions() const {
    const auto gram = form.polarize().gram();
    for (std::size_t r = 0; r < dim(); ++r) {
      const Matrix<F> m = gram * basis_matrix(r);
      for (std::size_t i = 0; i < matrix_dim(); ++i) {
        if (!m.at(i, i).is_zero()) return false;
        for (std::size_t j = i + 1; j < matrix_dim(); ++j) {
          if (!(m.at(i, j) == m.at(j, i))) return false;
        }
      }
    }
    return true;
  }
};

/// Lie algebra of the orthogonal group of q as the kernel of a linear system:
/// gram*A alternating, i.e. beta(v, A v) = 0 for all v. The smooth variant
/// additionally demands that A annihilate the radical of beta, which for odd
/// n removes the one scaling direction of the radical line that the naive
/// stabilizer scheme keeps.
template <ScalarField F>
LieSubalgebra<F> lie_algebra(const QuadraticForm<F>& q, LieVariant variant) {
  if (!q.is_nondegenerate()) throw std::invalid_argument("lie_algebra: degenerate form");
  const F field = q.field();
  const std::size_t n = q.dim();
  const auto gram = q.polarize().gram();
  const Subspace<F> rad = q.radical();

  std::vector<std::vector<typename F::Element>> rows;
  // diagonal conditions beta(e_i, A e_i) = 0
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<typename F::Element> row(n * n, field.zero());
    for (std::size_t k = 0; k < n; ++k) row[k * n + i] = gram.at(i, k);
    rows.push_back(std::move(row));
  }
  // symmetry conditions beta(e_i, A e_j) + beta(e_j, A e_i) = 0
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<typename F::Element> row(n * n, field.zero());
      for (std::size_t k = 0; k < n; ++k) {
        row[k * n + j] = row[k * n + j] + gram.at(i, k);
        row[k * n + i] = row[k * n + i] + gram.at(j, k);
      }
      rows.push_back(std::move(row));
    }
  }
  if (variant == LieVariant::smooth) {
    for (std::size_t r = 0; r < rad.dim(); ++r) {
      const auto rv = rad.basis_vector(r);
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<typename F::Element> row(n * n, field.zero());
        for (std::size_t j = 0; j < n; ++j) row[i * n + j] = rv[j];
        rows.push_back(std::move(row));
      }
    }
  }
  const Matrix<F> system = Matrix<F>::from_rows(field, rows);
  const Subspace<F> space =
      Subspace<F>::from_vectors(field, n * n, system.kernel_basis_vectors());
  return {q, space, variant};
}

/// Block conventions for the parametric 21-dimensional so(7) family. The
/// x3x4 coupling of the standard form reverses the two middle coordinates,
/// so the transposed coupling blocks must be conjugated by the 2x2 swap J;
/// the plain-transpose variant is kept as a falsifiable alternative (its
/// span is not invariant for the form -- see the lie suite report).
enum class So7Coupling { swap_adjusted, plain_transpose };

namespace family_detail {

template <ScalarField F>
void put_block(Matrix<F>& m, std::size_t r0, std::size_t c0, const Matrix<F>& b) {
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) m.at(r0 + i, c0 + j) = b.at(i, j);
  }
}

template <ScalarField F>
Matrix<F> block2(const F& field, const typename F::Element& a,
                 const typename F::Element& b, const typename F::Element& c,
                 const typename F::Element& d) {
  Matrix<F> m(field, 2, 2);
  m.at(0, 0) = a;
  m.at(0, 1) = b;
  m.at(1, 0) = c;
  m.at(1, 1) = d;
  return m;
}

template <ScalarField F>
Matrix<F> antidiag(const F& field, const typename F::Element& lambda) {
  return block2(field, field.zero(), lambda, lambda, field.zero());
}

template <ScalarField F>
Matrix<F> swap_rows2(const Matrix<F>& b) {
  Matrix<F> m = b;
  for (std::size_t j = 0; j < 2; ++j) {
    m.at(0, j) = b.at(1, j);
    m.at(1, j) = b.at(0, j);
  }
  return m;
}

template <ScalarField F>
Matrix<F> swap_cols2(const Matrix<F>& b) {
  Matrix<F> m = b;
  for (std::size_t i = 0; i < 2; ++i) {
    m.at(i, 0) = b.at(i, 1);
    m.at(i, 1) = b.at(i, 0);
  }
  return m;
}

}  // namespace family_detail

/// The 28-parameter so(8) block family: six free 2x2 blocks X1..X6 placed
/// against their transposes, four antidiagonal blocks D1..D4. Parameters:
/// X1..X6 row-major (24), then the D1..D4 scalars.
template <ScalarField F>
Matrix<F> so8_family_matrix(F field, const std::vector<typename F::Element>& p) {
  using family_detail::antidiag;
  using family_detail::block2;
  using family_detail::put_block;
  if (p.size() != 28) throw std::invalid_argument("so8_family_matrix: need 28 parameters");
  std::array<Matrix<F>, 6> x{Matrix<F>(field, 2, 2), Matrix<F>(field, 2, 2),
                             Matrix<F>(field, 2, 2), Matrix<F>(field, 2, 2),
                             Matrix<F>(field, 2, 2), Matrix<F>(field, 2, 2)};
  for (std::size_t b = 0; b < 6; ++b) {
    x[b] = block2(field, p[4 * b], p[4 * b + 1], p[4 * b + 2], p[4 * b + 3]);
  }
  Matrix<F> m(field, 8, 8);
  put_block(m, 0, 0, x[0]);
  put_block(m, 0, 2, x[1]);
  put_block(m, 0, 4, x[2]);
  put_block(m, 0, 6, antidiag(field, p[24]));
  put_block(m, 2, 0, x[3]);
  put_block(m, 2, 2, x[4]);
  put_block(m, 2, 4, antidiag(field, p[25]));
  put_block(m, 2, 6, x[2].transpose());
  put_block(m, 4, 0, x[5]);
  put_block(m, 4, 2, antidiag(field, p[26]));
  put_block(m, 4, 4, x[4].transpose());
  put_block(m, 4, 6, x[1].transpose());
  put_block(m, 6, 0, antidiag(field, p[27]));
  put_block(m, 6, 2, x[5].transpose());
  put_block(m, 6, 4, x[3].transpose());
  put_block(m, 6, 6, x[0].transpose());
  return m;
}

/// The 21-parameter so(7) block family. Parameters: X1, X2, X3 row-major
/// (12), the diagonal scalar of the middle block, the D1 and D2 scalars,
/// then the three 1x2 rows x1, x2, x3 of the radical row.
template <ScalarField F>
Matrix<F> so7_family_matrix(F field, const std::vector<typename F::Element>& p,
                            So7Coupling coupling = So7Coupling::swap_adjusted) {
  using family_detail::antidiag;
  using family_detail::block2;
  using family_detail::put_block;
  using family_detail::swap_cols2;
  using family_detail::swap_rows2;
  if (p.size() != 21) throw std::invalid_argument("so7_family_matrix: need 21 parameters");
  const Matrix<F> x1 = block2(field, p[0], p[1], p[2], p[3]);
  const Matrix<F> x2 = block2(field, p[4], p[5], p[6], p[7]);
  const Matrix<F> x3 = block2(field, p[8], p[9], p[10], p[11]);
  const auto& lambda = p[12];
  const auto& d1 = p[13];
  const auto& d2 = p[14];

  Matrix<F> m(field, 7, 7);
  put_block(m, 0, 0, x1);
  put_block(m, 0, 2, x2);
  put_block(m, 0, 5, antidiag(field, d1));
  put_block(m, 2, 0, x3);
  m.at(2, 2) = lambda;
  m.at(3, 3) = lambda;
  const Matrix<F> upper = coupling == So7Coupling::swap_adjusted
                              ? swap_rows2(x2.transpose())
                              : x2.transpose();
  const Matrix<F> lower = coupling == So7Coupling::swap_adjusted
                              ? swap_cols2(x3.transpose())
                              : x3.transpose();
  put_block(m, 2, 5, upper);
  m.at(4, 0) = p[15];
  m.at(4, 1) = p[16];
  m.at(4, 2) = p[17];
  m.at(4, 3) = p[18];
  m.at(4, 5) = p[19];
  m.at(4, 6) = p[20];
  put_block(m, 5, 0, antidiag(field, d2));
  put_block(m, 5, 2, lower);
  put_block(m, 5, 5, x1.transpose());
  return m;
}

/// Span of a parametric family inside F^(n^2), one generator per parameter.
template <ScalarField F, typename Builder>
Subspace<F> family_span(F field, std::size_t n, std::size_t params, Builder&& build) {
  std::vector<std::vector<typename F::Element>> rows;
  rows.reserve(params);
  for (std::size_t i = 0; i < params; ++i) {
    std::vector<typename F::Element> p(params, field.zero());
    p[i] = field.one();
    rows.push_back(LieSubalgebra<F>::flatten(build(p)));
  }
  return Subspace<F>::from_vectors(field, n * n, rows);
}

template <ScalarField F>
Subspace<F> so8_family_span(F field) {
  return family_span(field, 8, 28, [&](const auto& p) { return so8_family_matrix(field, p); });
}

template <ScalarField F>
Subspace<F> so7_family_span(F field, So7Coupling coupling = So7Coupling::swap_adjusted) {
  return family_span(field, 7, 21,
                     [&](const auto& p) { return so7_family_matrix(field, p, coupling); });
}

/// Span equality of a parametric family against a computed algebra; with
/// canonical echelon bases this is a literal comparison.
template <ScalarField F>
bool shape_equivalence(const Subspace<F>& family, const LieSubalgebra<F>& computed) {
  return family == computed.space;
}

/// Full linear stabilizer { A in End(V) : A W <= W } as a subspace of F^(n^2).
template <ScalarField F>
Subspace<F> stabilizer_subspace(F field, std::size_t n, const Subspace<F>& w) {
  const auto quot = w.quotient_map();
  std::vector<std::vector<typename F::Element>> rows;
  for (std::size_t wi = 0; wi < w.dim(); ++wi) {
    const auto wv = w.basis_vector(wi);
    for (std::size_t r = 0; r < quot.projection.rows(); ++r) {
      std::vector<typename F::Element> row(n * n, field.zero());
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          row[a * n + b] = row[a * n + b] + quot.projection.at(r, a) * wv[b];
        }
      }
      rows.push_back(std::move(row));
    }
  }
  const Matrix<F> system = Matrix<F>::from_rows(field, rows);
  return Subspace<F>::from_vectors(field, n * n, system.kernel_basis_vectors());
}

/// Parabolic subalgebra p = { A in g : A W <= W }, solved in the coefficient
/// space of g's basis. Requires W isotropic for the form of g.
template <ScalarField F>
LieSubalgebra<F> parabolic(const LieSubalgebra<F>& g, const Subspace<F>& w) {
  // W = V stabilizes vacuously; every proper W must be isotropic.
  if (w.dim() < w.ambient_dim() && !is_isotropic_subspace(g.form, w)) {
    throw std::invalid_argument("parabolic: subspace is not isotropic");
  }
  const F field = g.space.field();
  const std::size_t n = g.matrix_dim();
  const auto quot = w.quotient_map();
  const std::size_t qdim = quot.projection.rows();

  // Row (wi, r) of the system evaluates coordinate r of P(B_c w_wi) on the
  // coefficient vector c of a general element of g.
  Matrix<F> system(field, w.dim() * qdim, g.dim());
  for (std::size_t c = 0; c < g.dim(); ++c) {
    const Matrix<F> basis_c = g.basis_matrix(c);
    for (std::size_t wi = 0; wi < w.dim(); ++wi) {
      const auto image = quot.projection.apply(basis_c.apply(w.basis_vector(wi)));
      for (std::size_t r = 0; r < qdim; ++r) system.at(wi * qdim + r, c) = image[r];
    }
  }
  std::vector<std::vector<typename F::Element>> members;
  for (const auto& coeffs : system.kernel_basis_vectors()) {
    std::vector<typename F::Element> vec(n * n, field.zero());
    for (std::size_t c = 0; c < g.dim(); ++c) {
      if (coeffs[c].is_zero()) continue;
      const auto bv = g.space.basis_vector(c);
      for (std::size_t e = 0; e < n * n; ++e) vec[e] = vec[e] + coeffs[c] * bv[e];
    }
    members.push_back(std::move(vec));
  }
  return {g.form, Subspace<F>::from_vectors(field, n * n, members), g.variant};
}

/// The bilinear form (x, x') -> beta(A x, x') on W, i.e. the component of the
/// class of A in Hom(W, V/W_perp) = W* (x) W*.
template <ScalarField F>
Matrix<F> dual_pair_component(const QuadraticForm<F>& form, const Matrix<F>& a,
                              const Matrix<F>& w_basis) {
  const BilinearForm<F> beta = form.polarize();
  Matrix<F> b(form.field(), w_basis.rows(), w_basis.rows());
  for (std::size_t i = 0; i < w_basis.rows(); ++i) {
    const auto img = a.apply(w_basis.row(i));
    for (std::size_t j = 0; j < w_basis.rows(); ++j) {
      b.at(i, j) = beta.evaluate(img, w_basis.row(j));
    }
  }
  return b;
}

template <ScalarField F>
struct QuotientSequenceReport {
  std::size_t dim_g = 0;
  std::size_t dim_p = 0;
  std::size_t dim_quotient = 0;   // dim g/p
  std::size_t hom_layer_dim = 0;  // dim Hom(W, W_perp/W) layer
  std::size_t dline_dim = 0;      // image in W* (x) W*
  bool parabolic_is_kernel = false;
  bool hom_layer_full = false;
  bool dline_is_alternating_line = false;
  bool dims_consistent = false;
  Matrix<F> dline_generator;

  explicit QuotientSequenceReport(F field) : dline_generator(field, 2, 2) {}
};

/// Verifies the two-layer structure of g/p for the stabilized isotropic
/// plane W: the classes mapping into W_perp/W fill Hom(W, W_perp/W), and the
/// quotient line in W* (x) W* is the alternating line spanned by
/// e (x) f + f (x) e.
template <ScalarField F>
QuotientSequenceReport<F> quotient_sequence_report(const LieSubalgebra<F>& g,
                                                   const LieSubalgebra<F>& p,
                                                   const Matrix<F>& w_basis) {
  const F field = g.space.field();
  const std::size_t n = g.matrix_dim();
  const std::size_t wd = w_basis.rows();
  QuotientSequenceReport<F> rep(field);
  rep.dim_g = g.dim();
  rep.dim_p = p.dim();
  rep.dim_quotient = g.dim() - p.dim();

  const Subspace<F> w = Subspace<F>::from_rows(w_basis);
  const auto wquot = w.quotient_map();
  const std::size_t vmodw = wquot.projection.rows();

  // L: g-coefficients -> Hom(W, V/W), columns indexed by g's basis.
  Matrix<F> L(field, wd * vmodw, g.dim());
  // C: g-coefficients -> W* (x) W* via beta(A w_i, w_j).
  Matrix<F> C(field, wd * wd, g.dim());
  for (std::size_t c = 0; c < g.dim(); ++c) {
    const Matrix<F> a = g.basis_matrix(c);
    for (std::size_t i = 0; i < wd; ++i) {
      const auto img = wquot.projection.apply(a.apply(w_basis.row(i)));
      for (std::size_t r = 0; r < vmodw; ++r) L.at(i * vmodw + r, c) = img[r];
    }
    const Matrix<F> b = dual_pair_component(g.form, a, w_basis);
    for (std::size_t i = 0; i < wd; ++i) {
      for (std::size_t j = 0; j < wd; ++j) C.at(i * wd + j, c) = b.at(i, j);
    }
  }

  // ker L: coefficient vectors of elements with A W <= W; as matrices they
  // must recover exactly p.
  std::vector<std::vector<typename F::Element>> kerL_members;
  for (const auto& coeffs : L.kernel_basis_vectors()) {
    std::vector<typename F::Element> vec(n * n, field.zero());
    for (std::size_t c = 0; c < g.dim(); ++c) {
      if (coeffs[c].is_zero()) continue;
      const auto bv = g.space.basis_vector(c);
      for (std::size_t e = 0; e < n * n; ++e) vec[e] = vec[e] + coeffs[c] * bv[e];
    }
    kerL_members.push_back(std::move(vec));
  }
  rep.parabolic_is_kernel =
      Subspace<F>::from_vectors(field, n * n, kerL_members) == p.space;

  // Kernel of the composite C: classes landing in Hom(W, W_perp/W).
  const auto kerC = C.kernel_basis_vectors();
  Matrix<F> kerC_images(field, kerC.size(), wd * vmodw);
  for (std::size_t r = 0; r < kerC.size(); ++r) {
    const auto img = L.apply(kerC[r]);
    for (std::size_t e = 0; e < img.size(); ++e) kerC_images.at(r, e) = img[e];
  }
  const Subspace<F> hom_layer = Subspace<F>::from_rows(kerC_images);
  rep.hom_layer_dim = hom_layer.dim();

  // Target layer: maps W -> V/W with image inside (W_perp)/W.
  const BilinearForm<F> beta = g.form.polarize();
  Matrix<F> perp_system(field, wd, n);
  for (std::size_t i = 0; i < wd; ++i) {
    const auto row = beta.gram().apply(w_basis.row(i));
    for (std::size_t j = 0; j < n; ++j) perp_system.at(i, j) = row[j];
  }
  const Subspace<F> wperp =
      Subspace<F>::from_vectors(field, n, perp_system.kernel_basis_vectors());
  std::vector<std::vector<typename F::Element>> wperp_classes;
  for (std::size_t r = 0; r < wperp.dim(); ++r) {
    wperp_classes.push_back(wquot.projection.apply(wperp.basis_vector(r)));
  }
  const Subspace<F> wperp_modw =
      Subspace<F>::from_vectors(field, vmodw, wperp_classes);
  std::vector<std::vector<typename F::Element>> target;
  for (std::size_t slot = 0; slot < wd; ++slot) {
    for (std::size_t r = 0; r < wperp_modw.dim(); ++r) {
      std::vector<typename F::Element> v(wd * vmodw, field.zero());
      const auto u = wperp_modw.basis_vector(r);
      for (std::size_t e = 0; e < vmodw; ++e) v[slot * vmodw + e] = u[e];
      target.push_back(std::move(v));
    }
  }
  rep.hom_layer_full =
      hom_layer == Subspace<F>::from_vectors(field, wd * vmodw, target);

  // Image of C: should be the alternating line spanned by e (x) f + f (x) e.
  const Subspace<F> dline = Subspace<F>::from_rows(C.transpose());
  rep.dline_dim = dline.dim();
  std::vector<typename F::Element> alternating(wd * wd, field.zero());
  alternating[0 * wd + 1] = field.one();
  alternating[1 * wd + 0] = field.one();
  rep.dline_is_alternating_line =
      dline == Subspace<F>::from_vectors(field, wd * wd, {alternating});
  if (rep.dline_dim >= 1) {
    const auto gen = dline.basis_vector(0);
    for (std::size_t i = 0; i < wd; ++i) {
      for (std::size_t j = 0; j < wd; ++j) rep.dline_generator.at(i, j) = gen[i * wd + j];
    }
  }

  rep.dims_consistent = rep.dim_quotient == rep.hom_layer_dim + rep.dline_dim;
  return rep;
}

}  // namespace chartwo

#endif  // CHARTWO_ORTHO_HPP
