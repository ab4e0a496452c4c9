#include "chartwo/packed_gf2.hpp"

#include <bit>
#include <stdexcept>

namespace chartwo {

PackedGf2Matrix PackedGf2Matrix::identity(int n) {
  PackedGf2Matrix m{n, 0};
  for (int i = 0; i < n; ++i) m.bits |= std::uint64_t{1} << (i * n + i);
  return m;
}

void PackedGf2Matrix::set(int i, int j, bool v) {
  const std::uint64_t mask = std::uint64_t{1} << (i * n + j);
  if (v) {
    bits |= mask;
  } else {
    bits &= ~mask;
  }
}

PackedGf2Matrix PackedGf2Matrix::operator*(const PackedGf2Matrix& rhs) const {
  // Row i of the product xors together the rows of rhs selected by row i.
  PackedGf2Matrix r{n, 0};
  for (int i = 0; i < n; ++i) {
    std::uint32_t acc = 0;
    std::uint32_t sel = row(i);
    while (sel != 0) {
      const int j = std::countr_zero(sel);
      acc ^= rhs.row(j);
      sel &= sel - 1;
    }
    r.bits |= static_cast<std::uint64_t>(acc) << (i * n);
  }
  return r;
}

std::uint32_t PackedGf2Matrix::apply(std::uint32_t v) const {
  std::uint32_t out = 0;
  for (int i = 0; i < n; ++i) {
    out |= static_cast<std::uint32_t>(std::popcount(row(i) & v) & 1) << i;
  }
  return out;
}

int PackedGf2Matrix::rank() const {
  std::uint32_t rows[8];
  for (int i = 0; i < n; ++i) rows[i] = row(i);
  int rank = 0;
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int i = rank; i < n; ++i) {
      if ((rows[i] >> c) & 1u) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[pivot], rows[rank]);
    for (int i = 0; i < n; ++i) {
      if (i != rank && ((rows[i] >> c) & 1u)) rows[i] ^= rows[rank];
    }
    ++rank;
  }
  return rank;
}

Matrix<Gf2kField> PackedGf2Matrix::unpack() const {
  const Gf2kField f2{1};
  Matrix<Gf2kField> m(f2, static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (at(i, j)) m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = f2.one();
    }
  }
  return m;
}

PackedGf2Matrix PackedGf2Matrix::pack(const Matrix<Gf2kField>& m) {
  if (m.rows() != m.cols() || m.rows() > 8 || m.field().k != 1) {
    throw std::invalid_argument("PackedGf2Matrix: need n<=8 square GF(2) matrix");
  }
  PackedGf2Matrix p{static_cast<int>(m.rows()), 0};
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m.at(i, j).is_zero()) p.set(static_cast<int>(i), static_cast<int>(j), true);
    }
  }
  return p;
}

}  // namespace chartwo
