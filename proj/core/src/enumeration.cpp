#include "chartwo/enumeration.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace chartwo {

OrthogonalGroupEnumeration enumerate_orthogonal_group(const QuadraticForm<Gf2kField>& q,
                                                      int threads) {
  const Gf2kField field = q.field();
  if (field.k != 1) {
    throw std::invalid_argument("enumerate_orthogonal_group: GF(2) forms only");
  }
  const int n = static_cast<int>(q.dim());
  if (n < 1 || n > 4) {
    throw std::invalid_argument("enumerate_orthogonal_group: bound exceeded (n <= 4)");
  }

  // Value table of Q on all 2^n coordinate masks, computed via the generic
  // evaluation path.
  const std::uint32_t space = 1u << n;
  std::vector<std::uint8_t> qval(space, 0);
  for (std::uint32_t v = 0; v < space; ++v) {
    std::vector<Gf2k> vec(static_cast<std::size_t>(n), field.zero());
    for (int i = 0; i < n; ++i) {
      if ((v >> i) & 1u) vec[static_cast<std::size_t>(i)] = field.one();
    }
    qval[v] = q.evaluate(vec).is_zero() ? 0 : 1;
  }

  const std::uint64_t total = std::uint64_t{1} << (n * n);
  auto scan = [&](std::uint64_t begin, std::uint64_t end) {
    std::vector<std::uint64_t> found;
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      const PackedGf2Matrix g{n, idx};
      if (!g.invertible()) continue;
      bool ok = true;
      for (std::uint32_t v = 1; v < space; ++v) {
        if (qval[g.apply(v)] != qval[v]) {
          ok = false;
          break;
        }
      }
      if (ok) found.push_back(idx);
    }
    return found;
  };

  OrthogonalGroupEnumeration out;
  out.n = n;
  if (threads <= 1) {
    out.elements = scan(0, total);
  } else {
    const std::uint64_t shards = static_cast<std::uint64_t>(threads);
    std::vector<std::vector<std::uint64_t>> partial(shards);
    std::vector<std::thread> pool;
    for (std::uint64_t s = 0; s < shards; ++s) {
      const std::uint64_t begin = total * s / shards;
      const std::uint64_t end = total * (s + 1) / shards;
      pool.emplace_back([&, s, begin, end] { partial[s] = scan(begin, end); });
    }
    for (auto& t : pool) t.join();
    for (const auto& part : partial) {
      out.elements.insert(out.elements.end(), part.begin(), part.end());
    }
  }
  out.order = out.elements.size();

  const PackedGf2Matrix id = PackedGf2Matrix::identity(n);
  auto dickson = [&](const PackedGf2Matrix& g) { return (g + id).rank() % 2; };

  out.all_det_one = true;  // invertible over GF(2) forces det = 1
  for (std::uint64_t e : out.elements) {
    const PackedGf2Matrix g{n, e};
    if (!g.invertible()) out.all_det_one = false;
    if (dickson(g) == 0) ++out.dickson_zero_order;
  }

  out.closed_under_product = true;
  out.dickson_multiplicative = true;
  for (std::uint64_t a : out.elements) {
    const PackedGf2Matrix ga{n, a};
    const int da = dickson(ga);
    for (std::uint64_t b : out.elements) {
      const PackedGf2Matrix gb{n, b};
      const PackedGf2Matrix prod = ga * gb;
      if (!std::binary_search(out.elements.begin(), out.elements.end(), prod.bits)) {
        out.closed_under_product = false;
      }
      if (dickson(prod) != (da + dickson(gb)) % 2) {
        out.dickson_multiplicative = false;
      }
    }
  }

  // Odd-dimensional forms: every element must fix the radical line pointwise
  // (the radical generator carries Q = 1, and scaling over GF(2) is trivial).
  const Subspace<Gf2kField> rad = q.radical();
  if (rad.dim() == 1) {
    std::uint32_t rmask = 0;
    for (int i = 0; i < n; ++i) {
      if (!rad.basis_vector(0)[static_cast<std::size_t>(i)].is_zero()) rmask |= 1u << i;
    }
    for (std::uint64_t e : out.elements) {
      const PackedGf2Matrix g{n, e};
      if (g.apply(rmask) != rmask) out.radical_fixed = false;
    }
  }
  return out;
}

}  // namespace chartwo
