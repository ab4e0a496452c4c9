#ifndef CHARTWO_FIBER_HPP
#define CHARTWO_FIBER_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "chartwo/ortho.hpp"

namespace chartwo {

/// Middle-layer choices for the assembled W + middle + W* quadratic spaces:
///  - so7:     traceless 2x2 matrices (a,b,c) <-> [[a,b],[c,a]] with det = a^2 + bc;
///  - so8_hat: full 2x2 matrices (a,b,c,d) with det = ad + bc;
///  - so8_b:   a split rank-4 space W' + W'* with q(u) + q*(u*) + <u,u*>,
///             q and q* squares of the first coordinate of their summand.
enum class ModelKind { so7, so8_hat, so8_b };

inline std::string to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::so7: return "so7";
    case ModelKind::so8_hat: return "so8-hat";
    case ModelKind::so8_b: return "so8-B";
  }
  return "?";
}

/// det on traceless 2x2 matrices in coordinates (a, b, c) <-> [[a,b],[c,a]]:
/// a^2 + bc. Its polarization is beta(v, w) = Tr(v w), with radical the
/// identity line (1,0,0), on which det = 1.
template <ScalarField F>
QuadraticForm<F> sl2_det_form(F field) {
  QuadraticForm<F> q(field, 3);
  q.set_coeff(0, 0, field.one());
  q.set_coeff(1, 2, field.one());
  return q;
}

/// det on full 2x2 matrices in coordinates (a, b, c, d): ad + bc.
template <ScalarField F>
QuadraticForm<F> end2_det_form(F field) {
  QuadraticForm<F> q(field, 4);
  q.set_coeff(0, 3, field.one());
  q.set_coeff(1, 2, field.one());
  return q;
}

/// Split rank-4 form on (u1, u2, u1*, u2*): u1^2 + u1*^2 + u1 u1* + u2 u2*.
template <ScalarField F>
QuadraticForm<F> split_rank4_form(F field) {
  QuadraticForm<F> q(field, 4);
  q.set_coeff(0, 0, field.one());
  q.set_coeff(2, 2, field.one());
  q.set_coeff(0, 2, field.one());
  q.set_coeff(1, 3, field.one());
  return q;
}

/// The canonical embedding of the 2-plane W into the middle layer:
/// e1 -> identity, e2 -> nilpotent N for the matrix middles, and the
/// first-summand inclusion for the split rank-4 middle. In every case
/// the middle form restricts to x1^2 on W.
template <ScalarField F>
Matrix<F> middle_embedding(ModelKind kind, F field) {
  switch (kind) {
    case ModelKind::so7: {
      // (a,b,c) coordinates: Id = (1,0,0), N = [[0,1],[0,0]] = (0,1,0)
      Matrix<F> phi(field, 3, 2);
      phi.at(0, 0) = field.one();
      phi.at(1, 1) = field.one();
      return phi;
    }
    case ModelKind::so8_hat: {
      // (a,b,c,d) coordinates: Id = (1,0,0,1), N = (0,1,0,0)
      Matrix<F> phi(field, 4, 2);
      phi.at(0, 0) = field.one();
      phi.at(3, 0) = field.one();
      phi.at(1, 1) = field.one();
      return phi;
    }
    case ModelKind::so8_b: {
      Matrix<F> phi(field, 4, 2);
      phi.at(0, 0) = field.one();
      phi.at(1, 1) = field.one();
      return phi;
    }
  }
  throw std::invalid_argument("middle_embedding: unknown kind");
}

template <ScalarField F>
QuadraticForm<F> middle_form(ModelKind kind, F field) {
  switch (kind) {
    case ModelKind::so7: return sl2_det_form(field);
    case ModelKind::so8_hat: return end2_det_form(field);
    case ModelKind::so8_b: return split_rank4_form(field);
  }
  throw std::invalid_argument("middle_form: unknown kind");
}

/// phi together with its adjoint psi and the restricted form q = Q_mid o phi.
/// psi is the solution of < x, psi(y) > = beta(phi(x), y), set up and solved
/// as a linear system (it is unique; the normalization scalar is 1).
template <ScalarField F>
struct AdjointPair {
  Matrix<F> phi;          // middle_dim x 2
  Matrix<F> psi;          // 2 x middle_dim
  QuadraticForm<F> q_w;   // form on W
};

template <ScalarField F>
AdjointPair<F> build_adjoint_pair(F field, const QuadraticForm<F>& middle,
                                  const Matrix<F>& phi) {
  const std::size_t mid = middle.dim();
  const BilinearForm<F> beta = middle.polarize();
  // Unknowns psi[i][j] flattened row-major; equation (i, j) reads
  // psi[i][j] = beta(phi(e_i), e_j).
  Matrix<F> system(field, 2 * mid, 2 * mid);
  std::vector<typename F::Element> rhs;
  rhs.reserve(2 * mid);
  for (std::size_t i = 0; i < 2; ++i) {
    const auto phi_ei = phi.col(i);
    for (std::size_t j = 0; j < mid; ++j) {
      system.at(i * mid + j, i * mid + j) = field.one();
      rhs.push_back(beta.evaluate(phi_ei, unit_vector(field, mid, j)));
    }
  }
  const auto sol = system.solve(rhs);
  if (!sol) throw std::logic_error("build_adjoint_pair: adjoint system inconsistent");
  Matrix<F> psi(field, 2, mid);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < mid; ++j) psi.at(i, j) = (*sol)[i * mid + j];
  }
  return {phi, std::move(psi), middle.pullback(phi)};
}

/// The canonical 3-dimensional pair: phi(x1,x2) = x1*Id + x2*N into the
/// traceless matrices, q(x) = x1^2, psi(a,b,c) = (0,c).
template <ScalarField F>
AdjointPair<F> build_sl2_adjoint_pair(F field) {
  return build_adjoint_pair(field, sl2_det_form(field),
                            middle_embedding(ModelKind::so7, field));
}

/// Assembled quadratic space W + middle + W* (+ padding hyperbolic planes):
/// Q(x + y + x*) = <x, x*> + Q_mid(y) + pads. Coordinates: W at offset 0,
/// middle at 2, W* at 2 + middle_dim, hyperbolic pairs after that. For the
/// so7 kind this is literally the standard SO(7) form after identifying the
/// middle coordinates (b, c, a) with x3, x4, x5.
template <ScalarField F>
struct FiberModel {
  ModelKind kind = ModelKind::so7;
  int padding = 0;
  std::size_t dim = 0;
  std::size_t middle_dim = 0;
  QuadraticForm<F> form;
  AdjointPair<F> pair;

  std::size_t wstar_offset() const { return 2 + middle_dim; }

  /// Middle-layer vector placed at its ambient coordinates.
  std::vector<typename F::Element> embed_middle(
      const std::vector<typename F::Element>& y) const {
    std::vector<typename F::Element> v(dim, form.field().zero());
    for (std::size_t i = 0; i < middle_dim; ++i) v[2 + i] = y[i];
    return v;
  }
};

template <ScalarField F>
FiberModel<F> build_model(ModelKind kind, int padding, F field) {
  if (padding < 0) throw std::invalid_argument("build_model: negative padding");
  QuadraticForm<F> mid = kind == ModelKind::so7
                             ? [&] {
                                 // middle coordinates ordered (b, c, a) so that
                                 // the assembled form matches the standard
                                 // so7 form with radical at x5
                                 QuadraticForm<F> q(field, 3);
                                 q.set_coeff(0, 1, field.one());
                                 q.set_coeff(2, 2, field.one());
                                 return q;
                               }()
                             : middle_form(kind, field);
  // phi in the (b, c, a)-ordered coordinates for so7: Id = (0,0,1), N = (1,0,0).
  Matrix<F> phi(field, mid.dim(), 2);
  if (kind == ModelKind::so7) {
    phi.at(2, 0) = field.one();
    phi.at(0, 1) = field.one();
  } else {
    phi = middle_embedding(kind, field);
  }

  FiberModel<F> model{kind, padding, 0, mid.dim(),
                      QuadraticForm<F>(field, 1), build_adjoint_pair(field, mid, phi)};
  const std::size_t n = 2 + mid.dim() + 2 + 2 * static_cast<std::size_t>(padding);
  model.dim = n;
  QuadraticForm<F> q(field, n);
  const std::size_t ws = 2 + mid.dim();
  q.set_coeff(0, ws, field.one());
  q.set_coeff(1, ws + 1, field.one());
  for (std::size_t i = 0; i < mid.dim(); ++i) {
    for (std::size_t j = i; j < mid.dim(); ++j) {
      q.set_coeff(2 + i, 2 + j, mid.coeff(i, j));
    }
  }
  for (int p = 0; p < padding; ++p) {
    const std::size_t base = ws + 2 + 2 * static_cast<std::size_t>(p);
    q.set_coeff(base, base + 1, field.one());
  }
  model.form = std::move(q);
  return model;
}

/// Q-tilde = Q + t*q on the W coordinates; defined over fields containing t.
template <ScalarField F>
  requires requires(const F f) { { f.t() } -> std::same_as<typename F::Element>; }
QuadraticForm<F> twisted_form(const FiberModel<F>& model) {
  return model.form +
         embed_form(model.pair.q_w, model.dim, 0).scaled(model.form.field().t());
}

/// The unipotent automorphism g(x, y, x*) = (x, y + s*phi(x), x* + s*psi(y)),
/// an involution because psi o phi = 0. Defined for the so7 model.
inline Matrix<TowerField> gs_automorphism(const FiberModel<TowerField>& model,
                                          const Tower& s) {
  if (model.kind != ModelKind::so7) {
    throw std::invalid_argument("gs_automorphism: so7 model required");
  }
  const TowerField field{s.k()};
  Matrix<TowerField> g = Matrix<TowerField>::identity(field, model.dim);
  for (std::size_t r = 0; r < model.middle_dim; ++r) {
    for (std::size_t c = 0; c < 2; ++c) {
      g.at(2 + r, c) = s * model.pair.phi.at(r, c);
    }
  }
  const std::size_t ws = model.wstar_offset();
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < model.middle_dim; ++c) {
      g.at(ws + r, 2 + c) = s * model.pair.psi.at(r, c);
    }
  }
  return g;
}

struct TwistIdentityReport {
  bool identity_holds = false;
  bool gs_involution = false;
  std::string witness;  // first differing monomial on failure
};

/// Exact coefficient comparison of Q o g_s against Q + t*q over the tower
/// K' = GF(2^k)(t)[s]/(s^2 - t). An optional base-field scalar rescales psi;
/// any value other than 1 breaks the cross-term cancellation and the report
/// carries the first differing monomial.
inline TwistIdentityReport verify_twist_identity(
    int base_k, std::optional<RatFun> psi_scale = std::nullopt, int padding = 0) {
  const TowerField field{base_k};
  FiberModel<TowerField> model = build_model(ModelKind::so7, padding, field);
  if (psi_scale) {
    model.pair.psi = model.pair.psi.scaled(Tower::from_base(*psi_scale));
  }
  const Matrix<TowerField> gs = gs_automorphism(model, field.s());

  TwistIdentityReport rep;
  rep.gs_involution = gs * gs == Matrix<TowerField>::identity(field, model.dim);

  const QuadraticForm<TowerField> lhs = model.form.pullback(gs);
  const QuadraticForm<TowerField> rhs = twisted_form(model);
  // dim may exceed 7 when hyperbolic padding is present; the pads ride along
  // untouched through g_s.
  rep.identity_holds = lhs == rhs;
  if (!rep.identity_holds) {
    for (std::size_t i = 0; i < model.dim && rep.witness.empty(); ++i) {
      for (std::size_t j = i; j < model.dim; ++j) {
        if (!(lhs.coeff(i, j) == rhs.coeff(i, j))) {
          // compact (no spaces) so the witness can ride in a key=value slot
          rep.witness = "x" + std::to_string(i + 1) + "*x" + std::to_string(j + 1) +
                        ":lhs=" + lhs.coeff(i, j).to_string() +
                        ":rhs=" + rhs.coeff(i, j).to_string();
          break;
        }
      }
    }
  }
  return rep;
}

struct NondegenerateTwistReport {
  bool polarization_unchanged = false;
  std::size_t radical_dim = 0;
  bool form_nonzero_on_radical = false;
  bool nondegenerate = false;
};

/// Q-tilde adds t*q with q a square of a linear form, so the polarization is
/// untouched; the radical stays the identity line of the middle with value 1.
inline NondegenerateTwistReport verify_nondegenerate_twist(int base_k, int padding = 0) {
  const FunctionField field{base_k};
  const FiberModel<FunctionField> model = build_model(ModelKind::so7, padding, field);
  const QuadraticForm<FunctionField> qt = twisted_form(model);

  NondegenerateTwistReport rep;
  rep.polarization_unchanged = qt.polarize() == model.form.polarize();
  const Subspace<FunctionField> rad = qt.radical();
  rep.radical_dim = rad.dim();
  rep.form_nonzero_on_radical =
      rad.dim() == 1 && !qt.evaluate(rad.basis_vector(0)).is_zero();
  rep.nondegenerate = qt.is_nondegenerate();
  return rep;
}

/// Columns of the graph embedding x -> (x, lambda*phi(x), 0).
template <ScalarField F>
Matrix<F> graph_embedding(const FiberModel<F>& model, const typename F::Element& lambda) {
  const F field = model.form.field();
  Matrix<F> g(field, model.dim, 2);
  g.at(0, 0) = field.one();
  g.at(1, 1) = field.one();
  for (std::size_t r = 0; r < model.middle_dim; ++r) {
    for (std::size_t c = 0; c < 2; ++c) {
      g.at(2 + r, c) = lambda * model.pair.phi.at(r, c);
    }
  }
  return g;
}

struct DescentReport {
  // Restriction of Q-tilde to the graph family equals (lambda^2 + t) * q,
  // certified on enough sample points to pin a degree-2 polynomial in lambda.
  bool family_identity = false;
  std::size_t family_sample_points = 0;
  bool no_isotropic_graph_over_base = false;  // t has no square root in K
  bool t_is_square_in_base = false;
  Tower lambda;                                // the K' solution (= s)
  bool lambda_squares_to_t = false;
  bool graph_isotropic_over_tower = false;
  // Control: with t^2 in place of t the graph S_t is isotropic over K itself.
  RatFun t_squared_witness;
  bool t_squared_graph_isotropic_over_base = false;

  explicit DescentReport(int k) : lambda(k), t_squared_witness(k) {}
};

/// The descent obstruction for the so7 model: the graph (x, lambda*phi(x), 0)
/// is isotropic for Q-tilde exactly when lambda^2 = t, which has no solution
/// in K = GF(2)(t) and the unique solution lambda = s in K'.
inline DescentReport descent_obstruction(int base_k = 1, int padding = 0) {
  const FunctionField K{base_k};
  const FiberModel<FunctionField> model = build_model(ModelKind::so7, padding, K);
  const QuadraticForm<FunctionField> qt = twisted_form(model);

  DescentReport rep(base_k);

  // Restriction at lambda: a quadratic polynomial in lambda, determined by
  // its values at three points; five exact samples leave margin.
  const RatFun t = K.t();
  const std::vector<RatFun> samples = {
      K.zero(), K.one(), t, t * t, K.one() + t};
  rep.family_identity = true;
  rep.family_sample_points = samples.size();
  for (const RatFun& lambda : samples) {
    const QuadraticForm<FunctionField> restricted = qt.pullback(graph_embedding(model, lambda));
    QuadraticForm<FunctionField> expected = model.pair.q_w.scaled(lambda * lambda + t);
    if (!(restricted == expected)) rep.family_identity = false;
    // lambda^2 + t never vanishes over K, so no member of the family is isotropic.
    if ((lambda * lambda + t).is_zero()) rep.family_identity = false;
  }

  rep.t_is_square_in_base = t.sqrt_witness().has_value();
  rep.no_isotropic_graph_over_base = !rep.t_is_square_in_base;

  // Over K' the unique square root of t is s.
  const TowerField Kp{base_k};
  rep.lambda = Tower::sqrt_of_base(t);
  rep.lambda_squares_to_t = rep.lambda * rep.lambda == Kp.t();

  const FiberModel<TowerField> model_kp = build_model(ModelKind::so7, padding, Kp);
  const QuadraticForm<TowerField> qt_kp = twisted_form(model_kp);
  const Matrix<TowerField> graph = graph_embedding(model_kp, rep.lambda);
  const Subspace<TowerField> span =
      Subspace<TowerField>::from_rows(graph.transpose());
  rep.graph_isotropic_over_tower =
      span.dim() == 2 && is_isotropic_subspace(qt_kp, span);

  // Control variant: twist by t^2 instead of t; then lambda = t works over K.
  const QuadraticForm<FunctionField> qt2 =
      model.form + embed_form(model.pair.q_w, model.dim, 0).scaled(t * t);
  const auto witness = (t * t).sqrt_witness();
  if (witness) {
    rep.t_squared_witness = *witness;
    const Subspace<FunctionField> graph_t = Subspace<FunctionField>::from_rows(
        graph_embedding(model, *witness).transpose());
    rep.t_squared_graph_isotropic_over_base = is_isotropic_subspace(qt2, graph_t);
  }
  return rep;
}

struct PhiClassReport {
  bool solvable = false;
  std::size_t so_dim = 0;
  std::size_t p_dim = 0;
  std::size_t quotient_dim = 0;
  bool outside_parabolic = false;      // nonzero class in so/p
  bool dline_component_zero = false;   // class lies in the Hom(W, W_perp/W) layer
};

/// Realizes the phi-datum of the model as an element A of so(Q) whose class
/// in so/p restricts on W to phi (mod W), then locates that class inside the
/// two-layer quotient: nonzero, with vanishing W* (x) W* component.
template <ScalarField F>
PhiClassReport phi_class_in_quotient(const FiberModel<F>& model) {
  const F field = model.form.field();
  const std::size_t n = model.dim;
  PhiClassReport rep;

  const LieSubalgebra<F> so = lie_algebra(model.form, LieVariant::smooth);
  Matrix<F> w_basis(field, 2, n);
  w_basis.at(0, 0) = field.one();
  w_basis.at(1, 1) = field.one();
  const Subspace<F> w = Subspace<F>::from_rows(w_basis);
  const LieSubalgebra<F> p = parabolic(so, w);
  rep.so_dim = so.dim();
  rep.p_dim = p.dim();
  rep.quotient_dim = so.dim() - p.dim();

  // Solve for A in so with P(A e_j) = P(embed(phi(e_j))) for j = 0, 1.
  const auto quot = w.quotient_map();
  const std::size_t vmodw = quot.projection.rows();
  Matrix<F> system(field, 2 * vmodw, so.dim());
  for (std::size_t c = 0; c < so.dim(); ++c) {
    const Matrix<F> basis_c = so.basis_matrix(c);
    for (std::size_t j = 0; j < 2; ++j) {
      const auto img = quot.projection.apply(basis_c.apply(w.basis_vector(j)));
      for (std::size_t r = 0; r < vmodw; ++r) system.at(j * vmodw + r, c) = img[r];
    }
  }
  std::vector<typename F::Element> rhs;
  for (std::size_t j = 0; j < 2; ++j) {
    const auto target = quot.projection.apply(model.embed_middle(model.pair.phi.col(j)));
    rhs.insert(rhs.end(), target.begin(), target.end());
  }
  const auto coeffs = system.solve(rhs);
  rep.solvable = coeffs.has_value();
  if (!rep.solvable) return rep;

  Matrix<F> a(field, n, n);
  for (std::size_t c = 0; c < so.dim(); ++c) {
    if ((*coeffs)[c].is_zero()) continue;
    const Matrix<F> basis_c = so.basis_matrix(c);
    a = a + basis_c.scaled((*coeffs)[c]);
  }
  rep.outside_parabolic = !p.contains(a);
  const Matrix<F> dline = dual_pair_component(model.form, a, w_basis);
  bool zero = true;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      if (!dline.at(i, j).is_zero()) zero = false;
    }
  }
  rep.dline_component_zero = zero;
  return rep;
}

}  // namespace chartwo

#endif  // CHARTWO_FIBER_HPP
