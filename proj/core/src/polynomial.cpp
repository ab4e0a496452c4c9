#include "chartwo/polynomial.hpp"

#include <stdexcept>

namespace chartwo {

Poly::Poly(int k, std::vector<std::uint32_t> coeff_bits)
    : k_(k), c_(std::move(coeff_bits)) {
  for (std::uint32_t bits : c_) {
    if (bits >> k_ != 0) {
      throw std::invalid_argument("Poly: coefficient exceeds field degree");
    }
  }
  normalize();
}

Poly Poly::constant(Gf2k c) {
  Poly p(c.k());
  if (!c.is_zero()) p.c_.push_back(c.bits());
  return p;
}

Poly Poly::from_coeffs(int k, const std::vector<Gf2k>& coeffs) {
  Poly p(k);
  p.c_.reserve(coeffs.size());
  for (const Gf2k& c : coeffs) {
    if (c.k() != k) throw std::invalid_argument("Poly: mixed coefficient fields");
    p.c_.push_back(c.bits());
  }
  p.normalize();
  return p;
}

void Poly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Gf2k Poly::coeff(std::size_t i) const {
  if (i >= c_.size()) return Gf2k::zero(k_);
  return Gf2k(k_, c_[i]);
}

Gf2k Poly::leading() const {
  if (is_zero()) return Gf2k::zero(k_);
  return Gf2k(k_, c_.back());
}

Poly Poly::operator+(const Poly& rhs) const {
  if (k_ != rhs.k_) throw std::invalid_argument("Poly: mixed fields");
  Poly r(k_);
  const std::size_t n = std::max(c_.size(), rhs.c_.size());
  r.c_.resize(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t a = i < c_.size() ? c_[i] : 0;
    std::uint32_t b = i < rhs.c_.size() ? rhs.c_[i] : 0;
    r.c_[i] = a ^ b;
  }
  r.normalize();
  return r;
}

Poly Poly::operator*(const Poly& rhs) const {
  if (k_ != rhs.k_) throw std::invalid_argument("Poly: mixed fields");
  if (is_zero() || rhs.is_zero()) return Poly(k_);
  Poly r(k_);
  r.c_.resize(c_.size() + rhs.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    const Gf2k a(k_, c_[i]);
    for (std::size_t j = 0; j < rhs.c_.size(); ++j) {
      if (rhs.c_[j] == 0) continue;
      r.c_[i + j] ^= (a * Gf2k(k_, rhs.c_[j])).bits();
    }
  }
  r.normalize();
  return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
  if (k_ != divisor.k_) throw std::invalid_argument("Poly: mixed fields");
  if (divisor.is_zero()) throw std::domain_error("Poly: division by zero");
  Poly rem = *this;
  Poly quot(k_);
  const int dd = divisor.degree();
  if (rem.degree() >= dd) {
    quot.c_.resize(static_cast<std::size_t>(rem.degree() - dd) + 1, 0);
  }
  const Gf2k lead_inv = divisor.leading().inverse();
  while (!rem.is_zero() && rem.degree() >= dd) {
    const int shift = rem.degree() - dd;
    const Gf2k factor = rem.leading() * lead_inv;
    quot.c_[static_cast<std::size_t>(shift)] = factor.bits();
    // rem -= factor * t^shift * divisor
    for (std::size_t i = 0; i < divisor.c_.size(); ++i) {
      if (divisor.c_[i] == 0) continue;
      const std::size_t pos = i + static_cast<std::size_t>(shift);
      rem.c_[pos] ^= (factor * Gf2k(k_, divisor.c_[i])).bits();
    }
    rem.normalize();
  }
  quot.normalize();
  return {quot, rem};
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.make_monic();
}

Poly Poly::make_monic() const {
  if (is_zero() || leading().is_one()) return *this;
  const Gf2k inv = leading().inverse();
  Poly r(k_);
  r.c_.reserve(c_.size());
  for (std::uint32_t bits : c_) {
    r.c_.push_back((Gf2k(k_, bits) * inv).bits());
  }
  return r;
}

Poly Poly::derivative() const {
  Poly r(k_);
  if (c_.size() <= 1) return r;
  r.c_.resize(c_.size() - 1, 0);
  // d/dt sum c_i t^i = sum over odd i of c_i t^(i-1) in characteristic two.
  for (std::size_t i = 1; i < c_.size(); i += 2) {
    r.c_[i - 1] = c_[i];
  }
  r.normalize();
  return r;
}

bool Poly::is_square() const {
  for (std::size_t i = 1; i < c_.size(); i += 2) {
    if (c_[i] != 0) return false;
  }
  return true;
}

Poly Poly::sqrt() const {
  if (!is_square()) throw std::domain_error("Poly: sqrt of a non-square");
  Poly r(k_);
  r.c_.resize(c_.size() / 2 + c_.size() % 2, 0);
  for (std::size_t i = 0; i < c_.size(); i += 2) {
    r.c_[i / 2] = Gf2k(k_, c_[i]).sqrt().bits();
  }
  r.normalize();
  return r;
}

std::string Poly::to_string() const {
  if (is_zero()) return k_ == 1 ? "0" : Gf2k::zero(k_).to_string();
  std::string s;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (k_ == 1) {
      s += c_[i] ? '1' : '0';
    } else {
      if (i > 0) s += ':';
      s += Gf2k(k_, c_[i]).to_string();
    }
  }
  return s;
}

std::optional<Poly> Poly::parse(int k, std::string_view text) {
  if (text.empty()) return std::nullopt;
  Poly p(k);
  if (k == 1) {
    p.c_.reserve(text.size());
    for (char c : text) {
      if (c == '0') {
        p.c_.push_back(0);
      } else if (c == '1') {
        p.c_.push_back(1);
      } else {
        return std::nullopt;
      }
    }
  } else {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t sep = text.find(':', start);
      if (sep == std::string_view::npos) sep = text.size();
      auto c = Gf2k::parse(k, text.substr(start, sep - start));
      if (!c) return std::nullopt;
      p.c_.push_back(c->bits());
      start = sep + 1;
      if (sep == text.size()) break;
    }
  }
  p.normalize();
  return p;
}

}  // namespace chartwo
