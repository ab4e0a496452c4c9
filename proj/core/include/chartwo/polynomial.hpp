#ifndef CHARTWO_POLYNOMIAL_HPP
#define CHARTWO_POLYNOMIAL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chartwo/gf2k.hpp"

namespace chartwo {

/// Dense univariate polynomial in t over GF(2^k), stored as coefficient bit
/// patterns of ascending degree with no trailing zero. Over GF(2) (k=1) the
/// coefficient vector is literally a bit-vector; text literals are bit-strings
/// of ascending degree ("01" is t, "101" is 1+t^2).
class Poly {
 public:
  explicit Poly(int k = 1) : k_(k) {}
  Poly(int k, std::vector<std::uint32_t> coeff_bits);

  static Poly constant(Gf2k c);
  static Poly t(int k) { return Poly(k, {0, 1}); }
  static Poly from_coeffs(int k, const std::vector<Gf2k>& coeffs);

  int k() const { return k_; }
  /// Degree, with degree(0) == -1.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

  /// Coefficient of t^i (zero beyond the degree).
  Gf2k coeff(std::size_t i) const;
  Gf2k leading() const;

  Poly operator+(const Poly& rhs) const;
  Poly operator-(const Poly& rhs) const { return *this + rhs; }
  Poly operator*(const Poly& rhs) const;

  /// Quotient and remainder of exact long division; throws on zero divisor.
  std::pair<Poly, Poly> divmod(const Poly& divisor) const;
  Poly operator/(const Poly& rhs) const { return divmod(rhs).first; }
  Poly operator%(const Poly& rhs) const { return divmod(rhs).second; }

  /// Monic greatest common divisor (gcd(0,0) == 0).
  static Poly gcd(Poly a, Poly b);

  Poly make_monic() const;
  Poly derivative() const;
  Poly frobenius() const { return *this * *this; }

  /// A polynomial over GF(2^k) is a square iff its derivative vanishes
  /// (all odd-degree coefficients are zero; even ones always have roots
  /// because Frobenius is onto).
  bool is_square() const;
  /// Requires is_square(); extracts the unique square root.
  Poly sqrt() const;

  bool operator==(const Poly&) const = default;

  std::string to_string() const;
  static std::optional<Poly> parse(int k, std::string_view text);

 private:
  void normalize();

  int k_;
  std::vector<std::uint32_t> c_;
};

}  // namespace chartwo

#endif  // CHARTWO_POLYNOMIAL_HPP
