#ifndef CHARTWO_GF2K_HPP
#define CHARTWO_GF2K_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace chartwo {

/// Element of GF(2^k), 1 <= k <= 8, written in the polynomial basis
/// 1, x, ..., x^{k-1} modulo a fixed low-weight irreducible polynomial
/// (see Gf2k::modulus). Addition is coordinate-wise xor, so x - y == x + y,
/// and the Frobenius map x -> x^2 is additive and bijective.
class Gf2k {
 public:
  static constexpr int kMaxDegree = 8;

  Gf2k() = default;
  Gf2k(int k, std::uint32_t bits);

  static Gf2k zero(int k) { return Gf2k(k, 0); }
  static Gf2k one(int k) { return Gf2k(k, 1); }

  int k() const { return k_; }
  std::uint32_t bits() const { return bits_; }
  bool is_zero() const { return bits_ == 0; }
  bool is_one() const { return bits_ == 1; }

  Gf2k operator+(Gf2k rhs) const;
  Gf2k operator-(Gf2k rhs) const { return *this + rhs; }
  Gf2k operator*(Gf2k rhs) const;
  Gf2k operator/(Gf2k rhs) const { return *this * rhs.inverse(); }

  /// Multiplicative inverse; throws std::domain_error on zero.
  Gf2k inverse() const;

  Gf2k frobenius() const { return *this * *this; }

  /// The unique y with y^2 == *this, i.e. x^(2^(k-1)).
  Gf2k sqrt() const;

  bool operator==(const Gf2k&) const = default;

  /// Bit-string of length k, lowest degree first ("01" is the generator of GF(4)).
  std::string to_string() const;
  static std::optional<Gf2k> parse(int k, std::string_view text);

  /// Fixed irreducible modulus for GF(2^k), as bits of ascending degree.
  /// k=2: x^2+x+1, k=3: x^3+x+1, k=4: x^4+x+1, ..., k=8: x^8+x^4+x^3+x+1.
  static std::uint32_t modulus(int k);

 private:
  std::uint8_t k_ = 1;
  std::uint16_t bits_ = 0;
};

}  // namespace chartwo

#endif  // CHARTWO_GF2K_HPP
