#ifndef CHARTWO_FIELDS_HPP
#define CHARTWO_FIELDS_HPP

#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "chartwo/gf2k.hpp"
#include "chartwo/rational.hpp"
#include "chartwo/rng.hpp"
#include "chartwo/tower.hpp"

namespace chartwo {

/// A coefficient domain for the exact linear algebra. Field descriptors are
/// cheap immutable values; elements carry their own arithmetic via operators
/// and the descriptor supplies constants, literals and sampling.
template <typename F>
concept ScalarField = requires(const F f, const typename F::Element a,
                               const typename F::Element b, Rng& rng,
                               std::string_view sv) {
  { f.zero() } -> std::same_as<typename F::Element>;
  { f.one() } -> std::same_as<typename F::Element>;
  { f.name() } -> std::same_as<std::string>;
  { f.to_string(a) } -> std::same_as<std::string>;
  { f.parse(sv) } -> std::same_as<std::optional<typename F::Element>>;
  { f.random(rng) } -> std::same_as<typename F::Element>;
  { a + b } -> std::same_as<typename F::Element>;
  { a - b } -> std::same_as<typename F::Element>;
  { a* b } -> std::same_as<typename F::Element>;
  { a.inverse() } -> std::same_as<typename F::Element>;
  { a.is_zero() } -> std::same_as<bool>;
  { a == b } -> std::same_as<bool>;
};

/// GF(2^k); finite, so exhaustive enumeration is available.
struct Gf2kField {
  int k = 1;

  using Element = Gf2k;

  Element zero() const { return Gf2k::zero(k); }
  Element one() const { return Gf2k::one(k); }
  std::uint64_t order() const { return std::uint64_t{1} << k; }
  Element element_at(std::uint64_t index) const {
    return Gf2k(k, static_cast<std::uint32_t>(index));
  }
  Element random(Rng& rng) const { return element_at(rng.below(order())); }

  std::string name() const { return "gf2^" + std::to_string(k); }
  std::string to_string(const Element& e) const { return e.to_string(); }
  std::optional<Element> parse(std::string_view sv) const { return Gf2k::parse(k, sv); }

  bool operator==(const Gf2kField&) const = default;
};

/// The rational function field K = GF(2^k)(t).
struct FunctionField {
  int k = 1;

  using Element = RatFun;

  Element zero() const { return RatFun::zero(k); }
  Element one() const { return RatFun::one(k); }
  Element t() const { return RatFun::t(k); }

  /// Random reduced fraction with numerator/denominator degree <= max_degree.
  Element random(Rng& rng, int max_degree) const {
    const Gf2kField coeffs{k};
    auto poly = [&](bool nonzero) {
      std::vector<Gf2k> c(static_cast<std::size_t>(max_degree) + 1, coeffs.zero());
      for (auto& x : c) x = coeffs.random(rng);
      Poly p = Poly::from_coeffs(k, c);
      if (nonzero && p.is_zero()) p = Poly::constant(coeffs.one());
      return p;
    };
    return RatFun(poly(false), poly(true));
  }
  Element random(Rng& rng) const { return random(rng, 3); }

  std::string name() const {
    return k == 1 ? std::string("rational") : "rational(gf2^" + std::to_string(k) + ")";
  }
  std::string to_string(const Element& e) const { return e.to_string(); }
  std::optional<Element> parse(std::string_view sv) const { return RatFun::parse(k, sv); }

  bool operator==(const FunctionField&) const = default;
};

/// K' = K[s]/(s^2 - t) over K = GF(2^k)(t).
struct TowerField {
  int k = 1;

  using Element = Tower;

  Element zero() const { return Tower::zero(k); }
  Element one() const { return Tower::one(k); }
  Element s() const { return Tower::s(k); }
  Element t() const { return Tower::t(k); }
  Element from_base(const RatFun& a) const { return Tower::from_base(a); }

  Element random(Rng& rng, int max_degree) const {
    const FunctionField base{k};
    return Tower(base.random(rng, max_degree), base.random(rng, max_degree));
  }
  Element random(Rng& rng) const { return random(rng, 2); }

  std::string name() const {
    return k == 1 ? std::string("tower") : "tower(gf2^" + std::to_string(k) + ")";
  }
  std::string to_string(const Element& e) const { return e.to_string(); }
  std::optional<Element> parse(std::string_view sv) const { return Tower::parse(k, sv); }

  bool operator==(const TowerField&) const = default;
};

/// Scalar-level Frobenius x -> x^2, available in every domain here.
template <typename Elem>
Elem frobenius(const Elem& x) {
  return x * x;
}

}  // namespace chartwo

#endif  // CHARTWO_FIELDS_HPP
