#ifndef CHARTWO_RATIONAL_HPP
#define CHARTWO_RATIONAL_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "chartwo/polynomial.hpp"

namespace chartwo {

/// Rational function over GF(2^k), kept reduced eagerly: the denominator is
/// monic and nonzero and gcd(num, den) == 1, so equality is syntactic.
/// Text literals are "num/den" with polynomial literals ("01/11" is t/(1+t));
/// a bare polynomial literal means denominator 1.
class RatFun {
 public:
  explicit RatFun(int k = 1) : num_(k), den_(Poly::constant(Gf2k::one(k))) {}
  explicit RatFun(Poly num);
  RatFun(Poly num, Poly den);

  static RatFun zero(int k) { return RatFun(k); }
  static RatFun one(int k) { return RatFun(Poly::constant(Gf2k::one(k))); }
  static RatFun t(int k) { return RatFun(Poly::t(k)); }
  static RatFun constant(Gf2k c) { return RatFun(Poly::constant(c)); }

  int k() const { return num_.k(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }

  RatFun operator+(const RatFun& rhs) const;
  RatFun operator-(const RatFun& rhs) const { return *this + rhs; }
  RatFun operator*(const RatFun& rhs) const;
  RatFun operator/(const RatFun& rhs) const { return *this * rhs.inverse(); }
  RatFun inverse() const;
  RatFun frobenius() const;

  /// Square-root witness: the unique c with c^2 == *this when one exists.
  /// A reduced p/q is a square iff both p and q have vanishing derivative.
  std::optional<RatFun> sqrt_witness() const;

  /// Decomposition f = E^2 + t * O^2 as the pair (E, O); it exists uniquely
  /// for every rational function in characteristic two.
  std::pair<RatFun, RatFun> even_odd_parts() const;

  bool operator==(const RatFun&) const = default;

  std::string to_string() const;
  static std::optional<RatFun> parse(int k, std::string_view text);

 private:
  void reduce();

  Poly num_;
  Poly den_;
};

}  // namespace chartwo

#endif  // CHARTWO_RATIONAL_HPP
