#include "chartwo/rational.hpp"

#include <stdexcept>

namespace chartwo {

RatFun::RatFun(Poly num)
    : num_(std::move(num)), den_(Poly::constant(Gf2k::one(num_.k()))) {}

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (num_.k() != den_.k()) throw std::invalid_argument("RatFun: mixed fields");
  if (den_.is_zero()) throw std::domain_error("RatFun: zero denominator");
  reduce();
}

void RatFun::reduce() {
  if (num_.is_zero()) {
    den_ = Poly::constant(Gf2k::one(k()));
    return;
  }
  const Poly g = Poly::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
  const Gf2k lead = den_.leading();
  if (!lead.is_one()) {
    const Poly unit = Poly::constant(lead.inverse());
    num_ = num_ * unit;
    den_ = den_ * unit;
  }
}

RatFun RatFun::operator+(const RatFun& rhs) const {
  return RatFun(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

RatFun RatFun::operator*(const RatFun& rhs) const {
  return RatFun(num_ * rhs.num_, den_ * rhs.den_);
}

RatFun RatFun::inverse() const {
  if (is_zero()) throw std::domain_error("RatFun: inverse of zero");
  return RatFun(den_, num_);
}

RatFun RatFun::frobenius() const { return RatFun(num_ * num_, den_ * den_); }

std::optional<RatFun> RatFun::sqrt_witness() const {
  if (!num_.is_square() || !den_.is_square()) return std::nullopt;
  return RatFun(num_.sqrt(), den_.sqrt());
}

std::pair<RatFun, RatFun> RatFun::even_odd_parts() const {
  // p/q = p*q / q^2; split p*q = A^2 + t*B^2 coefficient-wise, then divide by q.
  const Poly pq = num_ * den_;
  std::vector<Gf2k> even, odd;
  for (int i = 0; i <= pq.degree(); ++i) {
    const Gf2k c = pq.coeff(static_cast<std::size_t>(i)).sqrt();
    if (i % 2 == 0) {
      even.resize(static_cast<std::size_t>(i / 2) + 1, Gf2k::zero(k()));
      even[static_cast<std::size_t>(i / 2)] = c;
    } else {
      odd.resize(static_cast<std::size_t>(i / 2) + 1, Gf2k::zero(k()));
      odd[static_cast<std::size_t>(i / 2)] = c;
    }
  }
  return {RatFun(Poly::from_coeffs(k(), even), den_),
          RatFun(Poly::from_coeffs(k(), odd), den_)};
}

std::string RatFun::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

std::optional<RatFun> RatFun::parse(int k, std::string_view text) {
  const std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) {
    auto p = Poly::parse(k, text);
    if (!p) return std::nullopt;
    return RatFun(std::move(*p));
  }
  auto num = Poly::parse(k, text.substr(0, slash));
  auto den = Poly::parse(k, text.substr(slash + 1));
  if (!num || !den || den->is_zero()) return std::nullopt;
  return RatFun(std::move(*num), std::move(*den));
}

}  // namespace chartwo
