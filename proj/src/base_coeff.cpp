#include "epoly/base_coeff.hpp"

#include <algorithm>

namespace epoly {

namespace {

void trim(BaseCoeff::Exponents& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

}  // namespace

BaseCoeff::BaseCoeff(const Rational& r) {
  if (r != 0) terms_.emplace(Exponents{}, r);
}

BaseCoeff BaseCoeff::symbol(std::uint32_t j) {
  BaseCoeff c;
  Exponents e(j + 1, 0);
  e[j] = 1;
  c.terms_.emplace(std::move(e), make_rational(1));
  return c;
}

BaseCoeff BaseCoeff::monomial(Exponents exps, const Rational& coeff) {
  BaseCoeff c;
  if (coeff != 0) {
    trim(exps);
    c.terms_.emplace(std::move(exps), coeff);
  }
  return c;
}

bool BaseCoeff::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.empty() &&
         terms_.begin()->second == 1;
}

bool BaseCoeff::is_rational() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational BaseCoeff::as_rational() const {
  if (terms_.empty()) return Rational(0);
  return terms_.begin()->second;
}

std::uint32_t BaseCoeff::symbol_count() const {
  std::size_t n = 0;
  for (const auto& [e, c] : terms_) n = std::max(n, e.size());
  return static_cast<std::uint32_t>(n);
}

void BaseCoeff::add_term(const Exponents& exps, const Rational& coeff) {
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    if (coeff != 0) terms_.emplace(exps, coeff);
    return;
  }
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

BaseCoeff& BaseCoeff::operator+=(const BaseCoeff& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

BaseCoeff& BaseCoeff::operator-=(const BaseCoeff& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

BaseCoeff operator*(const BaseCoeff& a, const BaseCoeff& b) {
  BaseCoeff out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      BaseCoeff::Exponents e(std::max(ea.size(), eb.size()), 0);
      for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
      for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

BaseCoeff& BaseCoeff::operator*=(const BaseCoeff& rhs) {
  *this = *this * rhs;
  return *this;
}

BaseCoeff BaseCoeff::operator-() const {
  BaseCoeff out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

BaseCoeff BaseCoeff::scaled(const Rational& r) const {
  BaseCoeff out;
  if (r == 0) return out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * r);
  return out;
}

int BaseCoeff::compare(const BaseCoeff& rhs) const {
  auto it = terms_.begin();
  auto jt = rhs.terms_.begin();
  for (; it != terms_.end() && jt != rhs.terms_.end(); ++it, ++jt) {
    if (it->first != jt->first) return it->first < jt->first ? -1 : 1;
    int c = cmp(it->second, jt->second);
    if (c != 0) return c;
  }
  if (it != terms_.end()) return 1;
  if (jt != rhs.terms_.end()) return -1;
  return 0;
}

}  // namespace epoly
