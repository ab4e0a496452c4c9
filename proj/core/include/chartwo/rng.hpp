#ifndef CHARTWO_RNG_HPP
#define CHARTWO_RNG_HPP

#include <cstdint>

namespace chartwo {

/// splitmix64: tiny deterministic generator for the property sweeps.
/// Identical sequences on every platform for a fixed seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t bound) { return bound == 0 ? 0 : next() % bound; }

  bool coin() { return next() & 1u; }

 private:
  std::uint64_t state_;
};

}  // namespace chartwo

#endif  // CHARTWO_RNG_HPP
