#ifndef CHARTWO_TOWER_HPP
#define CHARTWO_TOWER_HPP

#include <optional>
#include <string>
#include <string_view>

#include "chartwo/rational.hpp"

namespace chartwo {

/// Element a + b*s of the inseparable quadratic extension K' = K[s]/(s^2 - t)
/// of K = GF(2^k)(t). K' is a field because t is not a square in K; squaring
/// lands back in K: (a + b*s)^2 = a^2 + t*b^2.
/// Text literals are "a+s*b" with rational-function parts; "a" and "s" and
/// "s*b" are accepted, spaces are ignored.
class Tower {
 public:
  explicit Tower(int k = 1) : a_(k), b_(k) {}
  Tower(RatFun a, RatFun b);

  static Tower from_base(RatFun a);
  static Tower zero(int k) { return Tower(k); }
  static Tower one(int k) { return from_base(RatFun::one(k)); }
  static Tower s(int k) { return Tower(RatFun::zero(k), RatFun::one(k)); }
  static Tower t(int k) { return from_base(RatFun::t(k)); }

  int k() const { return a_.k(); }
  const RatFun& base_part() const { return a_; }
  const RatFun& s_part() const { return b_; }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_one() const { return a_.is_one() && b_.is_zero(); }
  bool in_base() const { return b_.is_zero(); }

  Tower operator+(const Tower& rhs) const;
  Tower operator-(const Tower& rhs) const { return *this + rhs; }
  Tower operator*(const Tower& rhs) const;
  Tower operator/(const Tower& rhs) const { return *this * rhs.inverse(); }
  Tower inverse() const;
  Tower frobenius() const { return *this * *this; }

  /// The unique square root in K' of an element of the base field K
  /// (every square in K' lies in K, and conversely every element of K has
  /// exactly one root in K'). Computed from u = E^2 + t*O^2 as E + O*s.
  static Tower sqrt_of_base(const RatFun& u);

  bool operator==(const Tower&) const = default;

  std::string to_string() const;
  static std::optional<Tower> parse(int k, std::string_view text);

 private:
  RatFun a_;
  RatFun b_;
};

}  // namespace chartwo

#endif  // CHARTWO_TOWER_HPP
