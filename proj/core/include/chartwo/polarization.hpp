#ifndef CHARTWO_POLARIZATION_HPP
#define CHARTWO_POLARIZATION_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "chartwo/quadratic_form.hpp"

namespace chartwo {

/// Coordinate conventions shared by the squared spaces of a dimension-n V:
///  - Sym^2 V: monomials e_i e_j, i <= j, indexed row-major upper-triangular;
///  - S_2(V) (symmetric tensors): e_i (x) e_i and e_i (x) e_j + e_j (x) e_i,
///    sharing the i <= j index space;
///  - Lambda^2 V: e_i ^ e_j, i < j;
///  - V (x) V: index i*n + j.
inline std::size_t sym2_dim(std::size_t n) { return n * (n + 1) / 2; }
inline std::size_t lambda2_dim(std::size_t n) { return n * (n - 1) / 2; }

inline std::size_t sym2_index(std::size_t n, std::size_t i, std::size_t j) {
  return i * n - i * (i - 1) / 2 + (j - i);
}

inline std::size_t lambda2_index(std::size_t n, std::size_t i, std::size_t j) {
  // i < j
  return i * (n - 1) - i * (i - 1) / 2 + (j - i - 1);
}

inline std::optional<Gf2k> element_sqrt(const Gf2kField&, const Gf2k& e) {
  return e.sqrt();
}
inline std::optional<RatFun> element_sqrt(const FunctionField&, const RatFun& e) {
  return e.sqrt_witness();
}
inline std::optional<Tower> element_sqrt(const TowerField&, const Tower& e) {
  if (!e.in_base()) return std::nullopt;
  return Tower::sqrt_of_base(e.base_part());
}

/// v (x) v followed by the projection V (x) V -> Sym^2 V. The cross terms
/// cancel in characteristic two, leaving sum v_i^2 e_i e_i.
template <ScalarField F>
std::vector<typename F::Element> symmetric_square(const F& field,
                                                  const std::vector<typename F::Element>& v) {
  const std::size_t n = v.size();
  std::vector<typename F::Element> out(sym2_dim(n), field.zero());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t idx = i <= j ? sym2_index(n, i, j) : sym2_index(n, j, i);
      out[idx] = out[idx] + v[i] * v[j];
    }
  }
  return out;
}

/// Matrix of the Frobenius-semilinear map v -> v.v from V into Sym^2 V:
/// columns are the symmetric squares of the basis vectors.
template <ScalarField F>
SemilinearMap<F> squares_semilinear_map(F field, std::size_t n) {
  Matrix<F> m(field, sym2_dim(n), n);
  for (std::size_t c = 0; c < n; ++c) {
    const auto img = symmetric_square(field, unit_vector(field, n, c));
    for (std::size_t r = 0; r < img.size(); ++r) m.at(r, c) = img[r];
  }
  return {std::move(m)};
}

/// The polarisation map P: Sym^2(V*) -> S_2(V*), computed by polarizing each
/// monomial form and reading the gram coefficients in the shared index space.
template <ScalarField F>
Matrix<F> polarization_matrix(F field, std::size_t n) {
  const std::size_t N = sym2_dim(n);
  Matrix<F> P(field, N, N);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      QuadraticForm<F> monomial(field, n);
      monomial.set_coeff(i, j, field.one());
      const auto gram = monomial.polarize().gram();
      const std::size_t col = sym2_index(n, i, j);
      for (std::size_t a = 0; a < n; ++a) {
        P.at(sym2_index(n, a, a), col) = gram.at(a, a);
        for (std::size_t b = a + 1; b < n; ++b) {
          P.at(sym2_index(n, a, b), col) = gram.at(a, b);
        }
      }
    }
  }
  return P;
}

/// Sym^2 V -> Lambda^2 V, e_i e_j -> e_i ^ e_j (squares map to zero).
template <ScalarField F>
Matrix<F> sym2_to_lambda2_matrix(F field, std::size_t n) {
  Matrix<F> m(field, lambda2_dim(n), sym2_dim(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      m.at(lambda2_index(n, i, j), sym2_index(n, i, j)) = field.one();
    }
  }
  return m;
}

/// V (x) V -> Lambda^2 V (sign-free in characteristic two).
template <ScalarField F>
Matrix<F> tensor_to_lambda2_matrix(F field, std::size_t n) {
  Matrix<F> m(field, lambda2_dim(n), n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const std::size_t row =
          i < j ? lambda2_index(n, i, j) : lambda2_index(n, j, i);
      m.at(row, i * n + j) = field.one();
    }
  }
  return m;
}

/// V (x) V -> Sym^2 V canonical projection.
template <ScalarField F>
Matrix<F> tensor_to_sym2_matrix(F field, std::size_t n) {
  Matrix<F> m(field, sym2_dim(n), n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t row = i <= j ? sym2_index(n, i, j) : sym2_index(n, j, i);
      m.at(row, i * n + j) = field.one();
    }
  }
  return m;
}

/// S_2(V) inside V (x) V, derived as the kernel of T -> T - sigma(T).
template <ScalarField F>
Subspace<F> symmetric_tensor_subspace(F field, std::size_t n) {
  Matrix<F> antisym(field, n * n, n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      antisym.at(i * n + j, i * n + j) = antisym.at(i * n + j, i * n + j) + field.one();
      antisym.at(i * n + j, j * n + i) = antisym.at(i * n + j, j * n + i) + field.one();
    }
  }
  return Subspace<F>::from_vectors(field, n * n, antisym.kernel_basis_vectors());
}

/// Is this Sym^2(V*) coefficient vector the square of a linear form?
/// Reconstructs l from the diagonal coefficients and compares l.l exactly.
template <ScalarField F>
bool is_square_of_linear_form(const F& field, std::size_t n,
                              const std::vector<typename F::Element>& coeffs) {
  std::vector<typename F::Element> linear(n, field.zero());
  for (std::size_t i = 0; i < n; ++i) {
    auto root = element_sqrt(field, coeffs[sym2_index(n, i, i)]);
    if (!root) return false;
    linear[i] = *root;
  }
  return symmetric_square(field, linear) == coeffs;
}

struct PolarizationReport {
  std::size_t n = 0;
  std::size_t ker_dim = 0;
  std::size_t coker_dim = 0;
  bool kernel_elements_are_squares = false;
  bool kernel_equals_frobenius_twist = false;   // ker P == span of squared forms
  bool image_is_alternating_slice = false;      // im P == { zero diagonal values }
  bool coker_spanned_by_diagonal_values = false;
};

template <ScalarField F>
PolarizationReport polarization_report(F field, std::size_t n) {
  PolarizationReport rep;
  rep.n = n;
  const std::size_t N = sym2_dim(n);
  const Matrix<F> P = polarization_matrix(field, n);

  const auto kernel_vectors = P.kernel_basis_vectors();
  rep.ker_dim = kernel_vectors.size();
  rep.coker_dim = N - P.rank();

  rep.kernel_elements_are_squares = true;
  for (const auto& v : kernel_vectors) {
    if (!is_square_of_linear_form(field, n, v)) {
      rep.kernel_elements_are_squares = false;
      break;
    }
  }

  const Subspace<F> kernel = Subspace<F>::from_vectors(field, N, kernel_vectors);
  rep.kernel_equals_frobenius_twist =
      kernel == squares_semilinear_map(field, n).image_span();

  // Alternating constraint: the image of P is exactly the symmetric tensors
  // with vanishing diagonal values.
  const Subspace<F> image = Subspace<F>::from_rows(P.transpose());
  std::vector<std::vector<typename F::Element>> zero_diag;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      zero_diag.push_back(unit_vector(field, N, sym2_index(n, i, j)));
    }
  }
  rep.image_is_alternating_slice =
      image == Subspace<F>::from_vectors(field, N, zero_diag);

  // The diagonal-value functionals span the cokernel: classes of e_i (x) e_i
  // generate S_2 / im P.
  const auto quot = image.quotient_map();
  Matrix<F> diag_classes(field, n, N - image.dim());
  for (std::size_t i = 0; i < n; ++i) {
    const auto cls = quot.projection.apply(unit_vector(field, N, sym2_index(n, i, i)));
    for (std::size_t r = 0; r < cls.size(); ++r) diag_classes.at(i, r) = cls[r];
  }
  rep.coker_spanned_by_diagonal_values = diag_classes.rank() == rep.coker_dim;
  return rep;
}

struct Sym2SequenceReport {
  std::size_t n = 0;
  std::size_t frobenius_twist_dim = 0;  // dim F(V)
  bool squares_map_injective = false;
  bool kernel_equals_squares = false;   // ker(Sym^2 -> Lambda^2) == F(V)
  bool projection_surjective = false;
  bool dims_add_up = false;
  bool symmetric_tensor_image_is_squares = false;  // im(S_2(V) -> Sym^2 V) == F(V)
  bool tensor_sequence_exact = false;   // 0 -> S_2(V) -> V(x)V -> Lambda^2 V -> 0
  bool exhaustive_closure_matches = false;  // span{v.v over all v} == F(V), finite fields
  bool exhaustive_closure_checked = false;
};

template <ScalarField F>
Sym2SequenceReport sym2_sequence_report(F field, std::size_t n) {
  Sym2SequenceReport rep;
  rep.n = n;
  const std::size_t N = sym2_dim(n);

  const SemilinearMap<F> squares = squares_semilinear_map(field, n);
  const Subspace<F> fv = squares.image_span();
  rep.frobenius_twist_dim = fv.dim();
  rep.squares_map_injective = squares.matrix.rank() == n;

  const Matrix<F> proj = sym2_to_lambda2_matrix(field, n);
  const Subspace<F> ker =
      Subspace<F>::from_vectors(field, N, proj.kernel_basis_vectors());
  rep.kernel_equals_squares = ker == fv;
  rep.projection_surjective = proj.rank() == lambda2_dim(n);
  rep.dims_add_up = fv.dim() + proj.rank() == N;

  // Push S_2(V) through V (x) V -> Sym^2 V and compare against F(V).
  const Subspace<F> sym_tensors = symmetric_tensor_subspace(field, n);
  const Matrix<F> to_sym2 = tensor_to_sym2_matrix(field, n);
  std::vector<std::vector<typename F::Element>> pushed;
  for (std::size_t i = 0; i < sym_tensors.dim(); ++i) {
    pushed.push_back(to_sym2.apply(sym_tensors.basis_vector(i)));
  }
  rep.symmetric_tensor_image_is_squares =
      Subspace<F>::from_vectors(field, N, pushed) == fv;

  const Matrix<F> to_lambda2 = tensor_to_lambda2_matrix(field, n);
  const Subspace<F> tensor_kernel =
      Subspace<F>::from_vectors(field, n * n, to_lambda2.kernel_basis_vectors());
  rep.tensor_sequence_exact = tensor_kernel == sym_tensors &&
                              to_lambda2.rank() == lambda2_dim(n) &&
                              sym_tensors.dim() + lambda2_dim(n) == n * n;
  return rep;
}

/// Exhaustive well-definedness check over a small finite field: the span of
/// { v.v : v in V } coincides with the column span of the semilinear map.
inline bool frobenius_twist_exhaustive_check(const Gf2kField& field, std::size_t n) {
  std::vector<std::vector<Gf2k>> images;
  for_each_vector(field, n, [&](const std::vector<Gf2k>& v) {
    images.push_back(symmetric_square(field, v));
  });
  const auto span = Subspace<Gf2kField>::from_vectors(field, sym2_dim(n), images);
  return span == squares_semilinear_map(field, n).image_span() && span.dim() == n;
}

}  // namespace chartwo

#endif  // CHARTWO_POLARIZATION_HPP
