#ifndef CHARTWO_ENUMERATION_HPP
#define CHARTWO_ENUMERATION_HPP

#include <cstdint>
#include <vector>

#include "chartwo/packed_gf2.hpp"
#include "chartwo/quadratic_form.hpp"

namespace chartwo {

/// Result of exhaustively filtering GL(n, F_2) by form invariance.
struct OrthogonalGroupEnumeration {
  int n = 0;
  std::vector<std::uint64_t> elements;  // packed bits, ascending (deterministic)
  std::uint64_t order = 0;
  std::uint64_t dickson_zero_order = 0;
  bool closed_under_product = false;
  bool dickson_multiplicative = false;
  bool all_det_one = false;
  bool radical_fixed = true;  // every element fixes the radical generator (odd n)
};

/// Exhaustive enumeration of the orthogonal group of q over GF(2), n <= 4
/// (beyond that the candidate space 2^(n^2) is out of bounds). Shards the
/// candidate range over threads and merges in index order, so the result is
/// independent of the thread count.
OrthogonalGroupEnumeration enumerate_orthogonal_group(const QuadraticForm<Gf2kField>& q,
                                                      int threads = 1);

}  // namespace chartwo

#endif  // CHARTWO_ENUMERATION_HPP
