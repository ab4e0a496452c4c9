#ifndef CHARTWO_PACKED_GF2_HPP
#define CHARTWO_PACKED_GF2_HPP

#include <cstdint>

#include "chartwo/matrix.hpp"

namespace chartwo {

/// n x n matrix over GF(2), n <= 8, packed row-major into a word: row i is
/// the byte-sized bit group [i*n, (i+1)*n). Same semantics as the generic
/// Matrix<Gf2kField> path (asserted by tests); used where the group
/// enumeration iterates through the full candidate space.
struct PackedGf2Matrix {
  int n = 0;
  std::uint64_t bits = 0;

  static PackedGf2Matrix identity(int n);

  std::uint32_t row(int i) const {
    return static_cast<std::uint32_t>(bits >> (i * n)) & ((1u << n) - 1u);
  }
  bool at(int i, int j) const { return (row(i) >> j) & 1u; }
  void set(int i, int j, bool v);

  PackedGf2Matrix operator+(const PackedGf2Matrix& rhs) const {
    return {n, bits ^ rhs.bits};
  }
  PackedGf2Matrix operator*(const PackedGf2Matrix& rhs) const;

  /// Image of the coordinate mask v (bit j = coordinate j).
  std::uint32_t apply(std::uint32_t v) const;

  int rank() const;
  bool invertible() const { return rank() == n; }

  bool operator==(const PackedGf2Matrix&) const = default;

  Matrix<Gf2kField> unpack() const;
  static PackedGf2Matrix pack(const Matrix<Gf2kField>& m);
};

}  // namespace chartwo

#endif  // CHARTWO_PACKED_GF2_HPP
