#include "epoly/epoly.hpp"

#include <algorithm>
#include <map>

#include "epoly/errors.hpp"

namespace epoly {

namespace {

const BaseCoeff kZeroCoeff{};

bool all_zero(const std::vector<std::uint32_t>& v) {
  return std::all_of(v.begin(), v.end(), [](std::uint32_t e) { return e == 0; });
}

void require_same_nvars(const EPoly& p, const EPoly& q) {
  if (p.nvars() != q.nvars())
    throw UsageError("operands have different variable counts (" +
                     std::to_string(p.nvars()) + " vs " +
                     std::to_string(q.nvars()) + ")");
}

struct MonoGreater {
  bool operator()(const GenMonomial& a, const GenMonomial& b) const {
    return compare(a, b) > 0;
  }
};

}  // namespace

bool GenMonomial::is_trivial() const { return exparg == nullptr && all_zero(xexp); }

std::uint32_t GenMonomial::xdegree() const {
  std::uint32_t d = 0;
  for (auto e : xexp) d += e;
  return d;
}

std::uint32_t GenMonomial::tower_height() const {
  return exparg == nullptr ? 0 : 1 + exparg->height();
}

int compare(const GenMonomial& a, const GenMonomial& b) {
  // Height of the exponent argument, then graded lex on the x-exponents,
  // then the exponent arguments recursively.
  std::uint32_t ha = a.exparg ? a.exparg->height() : 0;
  std::uint32_t hb = b.exparg ? b.exparg->height() : 0;
  if (ha != hb) return ha < hb ? -1 : 1;
  std::uint32_t da = a.xdegree(), db = b.xdegree();
  if (da != db) return da < db ? -1 : 1;
  std::size_t n = std::max(a.xexp.size(), b.xexp.size());
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t ea = i < a.xexp.size() ? a.xexp[i] : 0;
    std::uint32_t eb = i < b.xexp.size() ? b.xexp[i] : 0;
    if (ea != eb) return ea < eb ? 1 : -1;  // lex: earlier variable wins
  }
  bool za = a.exparg == nullptr;
  bool zb = b.exparg == nullptr;
  if (za && zb) return 0;
  if (za != zb) return za ? -1 : 1;
  return a.exparg->compare(*b.exparg);
}

EPoly EPoly::zero(std::uint32_t nvars) {
  EPoly p;
  p.nvars_ = nvars;
  return p;
}

EPoly EPoly::one(std::uint32_t nvars) { return constant(nvars, make_rational(1)); }

EPoly EPoly::constant(std::uint32_t nvars, const Rational& r) {
  return constant(nvars, BaseCoeff(r));
}

EPoly EPoly::constant(std::uint32_t nvars, const BaseCoeff& c) {
  EPoly p;
  p.nvars_ = nvars;
  if (!c.is_zero())
    p.terms_.emplace_back(GenMonomial{std::vector<std::uint32_t>(nvars, 0), nullptr}, c);
  return p;
}

EPoly EPoly::variable(std::uint32_t nvars, std::uint32_t index) {
  if (index >= nvars) throw UsageError("variable index out of range");
  GenMonomial m{std::vector<std::uint32_t>(nvars, 0), nullptr};
  m.xexp[index] = 1;
  return monomial(nvars, std::move(m), BaseCoeff(make_rational(1)));
}

EPoly EPoly::monomial(std::uint32_t nvars, GenMonomial m, BaseCoeff c) {
  EPoly p;
  p.nvars_ = nvars;
  if (m.xexp.size() > nvars) throw UsageError("monomial exponents exceed nvars");
  if (!c.is_zero()) {
    m.xexp.resize(nvars, 0);
    if (m.exparg && m.exparg->is_zero()) m.exparg = nullptr;
    p.height_ = m.tower_height();
    p.terms_.emplace_back(std::move(m), std::move(c));
  }
  return p;
}

EPoly EPoly::from_terms(std::uint32_t nvars, std::vector<Term> terms) {
  std::map<GenMonomial, BaseCoeff, MonoGreater> acc;
  for (auto& [m, c] : terms) {
    if (c.is_zero()) continue;
    if (m.xexp.size() > nvars)
      throw UsageError("monomial exponents exceed nvars");
    GenMonomial key = m;
    key.xexp.resize(nvars, 0);
    if (key.exparg && key.exparg->is_zero()) key.exparg = nullptr;
    auto it = acc.find(key);
    if (it == acc.end()) {
      acc.emplace(std::move(key), std::move(c));
    } else {
      it->second += c;
      if (it->second.is_zero()) acc.erase(it);
    }
  }
  EPoly p;
  p.nvars_ = nvars;
  p.terms_.reserve(acc.size());
  std::uint32_t h = 0;
  for (auto& [m, c] : acc) {
    h = std::max(h, m.tower_height());
    p.terms_.emplace_back(m, c);
  }
  p.height_ = h;
  return p;
}

bool EPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].first.is_trivial() &&
         terms_[0].second.is_one();
}

const BaseCoeff& EPoly::constant_part() const {
  // The trivial monomial is the smallest, hence last when present.
  if (!terms_.empty() && terms_.back().first.is_trivial())
    return terms_.back().second;
  return kZeroCoeff;
}

int EPoly::compare(const EPoly& rhs) const {
  std::size_t n = std::min(terms_.size(), rhs.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = epoly::compare(terms_[i].first, rhs.terms_[i].first);
    if (c != 0) return c;
    c = terms_[i].second.compare(rhs.terms_[i].second);
    if (c != 0) return c;
  }
  if (terms_.size() != rhs.terms_.size())
    return terms_.size() < rhs.terms_.size() ? -1 : 1;
  return 0;
}

EPoly EPoly::operator-() const { return epoly::neg(*this); }
EPoly operator+(const EPoly& a, const EPoly& b) { return add(a, b); }
EPoly operator-(const EPoly& a, const EPoly& b) { return sub(a, b); }
EPoly operator*(const EPoly& a, const EPoly& b) { return mul(a, b); }

EPoly add(const EPoly& p, const EPoly& q) {
  require_same_nvars(p, q);
  std::vector<EPoly::Term> terms;
  terms.reserve(p.terms().size() + q.terms().size());
  terms.insert(terms.end(), p.terms().begin(), p.terms().end());
  terms.insert(terms.end(), q.terms().begin(), q.terms().end());
  return EPoly::from_terms(p.nvars(), std::move(terms));
}

EPoly sub(const EPoly& p, const EPoly& q) { return add(p, neg(q)); }

EPoly neg(const EPoly& p) {
  std::vector<EPoly::Term> terms;
  terms.reserve(p.terms().size());
  for (const auto& [m, c] : p.terms()) terms.emplace_back(m, -c);
  return EPoly::from_terms(p.nvars(), std::move(terms));
}

EPoly scale(const EPoly& p, const Rational& r) {
  if (r == 0) return EPoly::zero(p.nvars());
  std::vector<EPoly::Term> terms;
  terms.reserve(p.terms().size());
  for (const auto& [m, c] : p.terms()) terms.emplace_back(m, c.scaled(r));
  return EPoly::from_terms(p.nvars(), std::move(terms));
}

EPoly scale(const EPoly& p, const BaseCoeff& c) {
  std::vector<EPoly::Term> terms;
  terms.reserve(p.terms().size());
  for (const auto& [m, k] : p.terms()) terms.emplace_back(m, k * c);
  return EPoly::from_terms(p.nvars(), std::move(terms));
}

EPoly mul(const EPoly& p, const EPoly& q) {
  require_same_nvars(p, q);
  std::vector<EPoly::Term> terms;
  terms.reserve(p.terms().size() * q.terms().size());
  for (const auto& [ma, ca] : p.terms()) {
    for (const auto& [mb, cb] : q.terms()) {
      GenMonomial m;
      m.xexp.resize(p.nvars(), 0);
      for (std::size_t i = 0; i < p.nvars(); ++i)
        m.xexp[i] = ma.xexp[i] + mb.xexp[i];
      // t^a * t^b = t^(a+b); the sum may cancel back to a trivial exponent.
      if (ma.exparg && mb.exparg) {
        EPoly s = add(*ma.exparg, *mb.exparg);
        if (!s.is_zero()) m.exparg = std::make_shared<const EPoly>(std::move(s));
      } else if (ma.exparg) {
        m.exparg = ma.exparg;
      } else if (mb.exparg) {
        m.exparg = mb.exparg;
      }
      terms.emplace_back(std::move(m), ca * cb);
    }
  }
  return EPoly::from_terms(p.nvars(), std::move(terms));
}

std::pair<BaseCoeff, EPoly> split_constant(const EPoly& p) {
  BaseCoeff c = p.constant_part();
  if (c.is_zero()) return {c, p};
  std::vector<EPoly::Term> terms(p.terms().begin(), std::prev(p.terms().end()));
  return {c, EPoly::from_terms(p.nvars(), std::move(terms))};
}

EPoly exp_apply(const EPoly& p) {
  auto [c, a] = split_constant(p);
  (void)c;  // E_K is the trivial exponential: every base constant maps to 1.
  if (a.is_zero()) return EPoly::one(p.nvars());
  GenMonomial m{std::vector<std::uint32_t>(p.nvars(), 0),
                std::make_shared<const EPoly>(std::move(a))};
  return EPoly::monomial(p.nvars(), std::move(m), BaseCoeff(make_rational(1)));
}

std::uint32_t height(const EPoly& p) { return p.height(); }

bool equals(const EPoly& p, const EPoly& q) {
  require_same_nvars(p, q);
  return p == q;
}

EPoly with_nvars(const EPoly& p, std::uint32_t nvars) {
  if (nvars == p.nvars()) return p;
  if (nvars < p.nvars()) {
    for (const auto& [m, c] : p.terms())
      for (std::size_t i = nvars; i < m.xexp.size(); ++i)
        if (m.xexp[i] != 0)
          throw UsageError("cannot narrow variable count: variable in use");
  }
  std::vector<EPoly::Term> terms;
  terms.reserve(p.terms().size());
  for (const auto& [m, c] : p.terms()) {
    GenMonomial mm;
    mm.xexp = m.xexp;
    mm.xexp.resize(nvars, 0);
    mm.exparg = m.exparg ? std::make_shared<const EPoly>(with_nvars(*m.exparg, nvars))
                         : nullptr;
    terms.emplace_back(std::move(mm), c);
  }
  return EPoly::from_terms(nvars, std::move(terms));
}

void validate(const EPoly& p) {
  std::uint32_t h = 0;
  for (std::size_t i = 0; i < p.terms().size(); ++i) {
    const auto& [m, c] = p.terms()[i];
    if (c.is_zero()) throw Error("validate: zero coefficient stored");
    for (const auto& [e, q] : c.terms()) {
      if (q == 0) throw Error("validate: zero rational in coefficient");
      if (!e.empty() && e.back() == 0)
        throw Error("validate: untrimmed coefficient exponents");
    }
    if (m.xexp.size() != p.nvars())
      throw Error("validate: xexp length != nvars");
    if (i + 1 < p.terms().size() &&
        compare(m, p.terms()[i + 1].first) <= 0)
      throw Error("validate: terms not in strictly descending order");
    if (m.exparg) {
      if (m.exparg->is_zero()) throw Error("validate: stored zero exparg");
      if (!m.exparg->constant_part().is_zero())
        throw Error("validate: exparg has nonzero constant part");
      if (m.exparg->nvars() != p.nvars())
        throw Error("validate: exparg nvars mismatch");
      if (m.exparg->height() + 1 > p.height())
        throw Error("validate: exparg height not below container height");
      validate(*m.exparg);
    }
    h = std::max(h, m.tower_height());
  }
  if (h != p.height()) throw Error("validate: cached height incorrect");
}

}  // namespace epoly
