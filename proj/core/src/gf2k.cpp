#include "chartwo/gf2k.hpp"

#include <array>
#include <stdexcept>

namespace chartwo {

namespace {

// Ascending-degree bit patterns; index by k. Entry 0 unused, entry 1 is x
// (reduction mod 2 never consults it).
constexpr std::array<std::uint32_t, 9> kModuli = {
    0,
    0b10,         // k=1: x
    0b111,        // k=2: x^2+x+1
    0b1011,       // k=3: x^3+x+1
    0b10011,      // k=4: x^4+x+1
    0b100101,     // k=5: x^5+x^2+1
    0b1000011,    // k=6: x^6+x+1
    0b10000011,   // k=7: x^7+x+1
    0b100011011,  // k=8: x^8+x^4+x^3+x+1
};

int bit_length(std::uint32_t v) {
  int len = 0;
  while (v != 0) {
    ++len;
    v >>= 1;
  }
  return len;
}

}  // namespace

Gf2k::Gf2k(int k, std::uint32_t bits) {
  if (k < 1 || k > kMaxDegree) {
    throw std::invalid_argument("Gf2k: k out of range");
  }
  if (bits >> k != 0) {
    throw std::invalid_argument("Gf2k: bits exceed field degree");
  }
  k_ = static_cast<std::uint8_t>(k);
  bits_ = static_cast<std::uint16_t>(bits);
}

std::uint32_t Gf2k::modulus(int k) {
  if (k < 1 || k > kMaxDegree) {
    throw std::invalid_argument("Gf2k::modulus: k out of range");
  }
  return kModuli[static_cast<std::size_t>(k)];
}

Gf2k Gf2k::operator+(Gf2k rhs) const {
  if (k_ != rhs.k_) {
    throw std::invalid_argument("Gf2k: mixed fields in addition");
  }
  Gf2k r;
  r.k_ = k_;
  r.bits_ = bits_ ^ rhs.bits_;
  return r;
}

Gf2k Gf2k::operator*(Gf2k rhs) const {
  if (k_ != rhs.k_) {
    throw std::invalid_argument("Gf2k: mixed fields in multiplication");
  }
  // Carry-less product, then polynomial reduction.
  std::uint32_t prod = 0;
  std::uint32_t a = bits_;
  std::uint32_t b = rhs.bits_;
  while (b != 0) {
    if (b & 1u) prod ^= a;
    a <<= 1;
    b >>= 1;
  }
  const std::uint32_t mod = kModuli[k_];
  const int mod_len = k_ + 1;
  int prod_len = bit_length(prod);
  while (prod_len >= mod_len) {
    prod ^= mod << (prod_len - mod_len);
    prod_len = bit_length(prod);
  }
  Gf2k r;
  r.k_ = k_;
  r.bits_ = static_cast<std::uint16_t>(prod);
  return r;
}

Gf2k Gf2k::inverse() const {
  if (is_zero()) {
    throw std::domain_error("Gf2k: inverse of zero");
  }
  // x^(2^k - 2) by square-and-multiply; the group has order 2^k - 1.
  std::uint32_t e = (1u << k_) - 2;
  Gf2k result = Gf2k::one(k_);
  Gf2k base = *this;
  while (e != 0) {
    if (e & 1u) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

Gf2k Gf2k::sqrt() const {
  Gf2k r = *this;
  for (int i = 0; i + 1 < k_; ++i) {
    r = r * r;
  }
  return r;
}

std::string Gf2k::to_string() const {
  std::string s(static_cast<std::size_t>(k_), '0');
  for (int i = 0; i < k_; ++i) {
    if (bits_ >> i & 1u) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

std::optional<Gf2k> Gf2k::parse(int k, std::string_view text) {
  if (k < 1 || k > kMaxDegree) return std::nullopt;
  if (text.size() != static_cast<std::size_t>(k)) return std::nullopt;
  std::uint32_t bits = 0;
  for (int i = 0; i < k; ++i) {
    const char c = text[static_cast<std::size_t>(i)];
    if (c == '1') {
      bits |= 1u << i;
    } else if (c != '0') {
      return std::nullopt;
    }
  }
  return Gf2k(k, bits);
}

}  // namespace chartwo
