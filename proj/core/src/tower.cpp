#include "chartwo/tower.hpp"

#include <stdexcept>

namespace chartwo {

Tower::Tower(RatFun a, RatFun b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.k() != b_.k()) throw std::invalid_argument("Tower: mixed fields");
}

Tower Tower::from_base(RatFun a) {
  const int k = a.k();
  return Tower(std::move(a), RatFun::zero(k));
}

Tower Tower::operator+(const Tower& rhs) const {
  return Tower(a_ + rhs.a_, b_ + rhs.b_);
}

Tower Tower::operator*(const Tower& rhs) const {
  // (a+bs)(c+ds) = (ac + bd*t) + (ad + bc)s  with s^2 = t.
  const RatFun tt = RatFun::t(k());
  return Tower(a_ * rhs.a_ + b_ * rhs.b_ * tt, a_ * rhs.b_ + b_ * rhs.a_);
}

Tower Tower::inverse() const {
  if (is_zero()) throw std::domain_error("Tower: inverse of zero");
  // x * x = a^2 + t b^2 lies in K and is nonzero (t is not a square in K),
  // so x^{-1} = x / (a^2 + t b^2).
  const RatFun norm = a_ * a_ + RatFun::t(k()) * b_ * b_;
  const RatFun inv = norm.inverse();
  return Tower(a_ * inv, b_ * inv);
}

Tower Tower::sqrt_of_base(const RatFun& u) {
  auto [even_root, odd_root] = u.even_odd_parts();
  return Tower(std::move(even_root), std::move(odd_root));
}

std::string Tower::to_string() const {
  if (b_.is_zero()) return a_.to_string();
  if (a_.is_zero() && b_.is_one()) return "s";
  if (a_.is_zero()) return "s*" + b_.to_string();
  if (b_.is_one()) return a_.to_string() + "+s";
  return a_.to_string() + "+s*" + b_.to_string();
}

std::optional<Tower> Tower::parse(int k, std::string_view text) {
  std::string compact;
  compact.reserve(text.size());
  for (char c : text) {
    if (c != ' ' && c != '\t') compact += c;
  }
  std::string_view sv(compact);
  if (sv.empty()) return std::nullopt;

  auto parse_s_term = [k](std::string_view term) -> std::optional<RatFun> {
    if (term == "s") return RatFun::one(k);
    if (term.substr(0, 2) == "s*") return RatFun::parse(k, term.substr(2));
    return std::nullopt;
  };

  const std::size_t plus = sv.find('+', sv.front() == '+' ? 1 : 0);
  if (plus == std::string_view::npos) {
    if (auto b = parse_s_term(sv)) return Tower(RatFun::zero(k), *b);
    auto a = RatFun::parse(k, sv);
    if (!a) return std::nullopt;
    return Tower::from_base(*a);
  }
  auto a = RatFun::parse(k, sv.substr(0, plus));
  auto b = parse_s_term(sv.substr(plus + 1));
  if (!a || !b) return std::nullopt;
  return Tower(*a, *b);
}

}  // namespace chartwo
