#include "mexcl/series.hpp"

#include "mexcl/errors.hpp"

#include <algorithm>
#include <map>

namespace mexcl {

namespace {

bool is_prime_number(long p) {
  if (p < 2) return false;
  for (long k = 2; k * k <= p; ++k)
    if (p % k == 0) return false;
  return true;
}

Int mod(const Int& x, long p) {
  Int r = x % p;
  if (r < 0) r += p;
  return r;
}

void require_compatible(const Series& f, const Series& h) {
  if (!same_group(f.group(), h.group()))
    throw SpecMismatch("series over " + f.group()->to_string() + " and " + h.group()->to_string());
  if (!(f.field() == h.field()))
    throw SpecMismatch("series over fields " + f.field().to_string() + " and " + h.field().to_string());
}

std::optional<GroupElement> min_trunc(const Series& f, const Series& h) {
  if (!f.trunc()) return h.trunc();
  if (!h.trunc()) return f.trunc();
  return std::min(*f.trunc(), *h.trunc());
}

}  // namespace

Field Field::Fp(long p) {
  if (!is_prime_number(p)) throw DomainError("F_p needs a prime p, got " + std::to_string(p));
  return Field{p};
}

Field Field::parse(const std::string& text) {
  if (text == "Q") return Q();
  std::string digits;
  if (text.rfind("F_", 0) == 0)
    digits = text.substr(2);
  else if (text.rfind("F", 0) == 0)
    digits = text.substr(1);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw ParseError("unknown field '" + text + "' (expected Q or F_p)");
  return Fp(std::stol(digits));
}

Rat Field::normalize(const Rat& x) const {
  if (!p) return x;
  Int num = mod(numerator(x), p);
  Int den = mod(denominator(x), p);
  if (den == 0) throw DomainError("denominator divisible by " + std::to_string(p));
  Int inv = boost::multiprecision::powm(den, Int(p - 2), Int(p));
  return Rat(mod(num * inv, p));
}

Rat Field::inverse(const Rat& x) const {
  if (x == 0) throw DomainError("inverse of zero");
  if (!p) return 1 / x;
  return normalize(Rat(1) / normalize(x));
}

std::string Field::to_string() const { return p ? "F_" + std::to_string(p) : "Q"; }

Series::Series(GroupPtr group, Field field, std::optional<GroupElement> trunc)
    : group_(std::move(group)), field_(field), trunc_(std::move(trunc)) {
  if (trunc_ && !same_group(trunc_->group(), group_)) throw SpecMismatch("truncation over a different group");
}

Series::Series(GroupPtr group, Field field, std::vector<Term> terms, std::optional<GroupElement> trunc)
    : Series(std::move(group), field, std::move(trunc)) {
  for (auto& t : terms) {
    if (!same_group(t.first.group(), group_)) throw SpecMismatch("series term over a different group");
    if (t.first.sign() < 0) throw DomainError("negative exponent " + t.first.to_string() + " in a series");
    t.second = field_.normalize(t.second);
  }
  std::stable_sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
  for (auto& t : terms) {
    if (trunc_ && t.first >= *trunc_) continue;
    if (!terms_.empty() && terms_.back().first == t.first)
      terms_.back().second = field_.normalize(terms_.back().second + t.second);
    else
      terms_.push_back(std::move(t));
    if (terms_.back().second == 0) terms_.pop_back();
  }
}

Series Series::monomial(const GroupElement& g, const Rat& coef, Field field) {
  return Series(g.group(), field, {{g, coef}});
}

Series Series::constant(GroupPtr group, const Rat& c, Field field) {
  auto zero = GroupElement::zero(group);
  return Series(std::move(group), field, {{zero, c}});
}

Rat Series::coefficient(const GroupElement& g) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), g,
                             [](const Term& t, const GroupElement& x) { return t.first < x; });
  if (it != terms_.end() && it->first == g) return it->second;
  return 0;
}

Series Series::with_trunc(std::optional<GroupElement> trunc) const {
  return Series(group_, field_, terms_, std::move(trunc));
}

std::string Series::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [g, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += c.str() + "*X^" + g.to_string();
  }
  return out;
}

bool Series::operator==(const Series& other) const {
  if (!same_group(group_, other.group_) || !(field_ == other.field_)) return false;
  if (terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].first == other.terms_[i].first) || terms_[i].second != other.terms_[i].second) return false;
  return true;
}

Series add(const Series& f, const Series& h) {
  require_compatible(f, h);
  auto terms = f.terms();
  terms.insert(terms.end(), h.terms().begin(), h.terms().end());
  return Series(f.group(), f.field(), std::move(terms), min_trunc(f, h));
}

Series neg(const Series& f) { return scale(-1, f); }

Series sub(const Series& f, const Series& h) { return add(f, neg(h)); }

Series scale(const Rat& c, const Series& f) {
  auto terms = f.terms();
  for (auto& t : terms) t.second *= c;
  return Series(f.group(), f.field(), std::move(terms), f.trunc());
}

Series shift(const Series& f, const GroupElement& by) {
  auto terms = f.terms();
  for (auto& t : terms) t.first = t.first + by;
  std::optional<GroupElement> trunc;
  if (f.trunc()) trunc = *f.trunc() + by;
  return Series(f.group(), f.field(), std::move(terms), std::move(trunc));
}

Series mul_serial(const Series& f, const Series& h) {
  require_compatible(f, h);
  auto trunc = min_trunc(f, h);
  std::map<GroupElement, Rat, GroupLess> acc;
  for (const auto& [u, a] : f.terms())
    for (const auto& [v, b] : h.terms()) {
      auto s = u + v;
      if (trunc && s >= *trunc) continue;
      acc[s] += a * b;
    }
  std::vector<Series::Term> terms(acc.begin(), acc.end());
  return Series(f.group(), f.field(), std::move(terms), trunc);
}

Series mul_parallel(const Series& f, const Series& h) {
  require_compatible(f, h);
  const auto& ft = f.terms();
  const auto& ht = h.terms();
  const std::size_t m = ht.size();
  std::vector<Series::Term> prods(ft.size() * m);
  const auto rows = static_cast<long long>(ft.size());
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < rows; ++i) {
    auto r = static_cast<std::size_t>(i);
    for (std::size_t j = 0; j < m; ++j)
      prods[r * m + j] = {ft[r].first + ht[j].first, ft[r].second * ht[j].second};
  }
  return Series(f.group(), f.field(), std::move(prods), min_trunc(f, h));
}

Series mul(const Series& f, const Series& h, Exec exec) {
  return exec == Exec::Parallel ? mul_parallel(f, h) : mul_serial(f, h);
}

bool is_unit(const Series& f) { return !f.is_zero() && f.terms().front().first.is_zero(); }

Series invert(const Series& f, const GroupElement& trunc, std::size_t budget) {
  if (!is_unit(f)) throw DomainError("cannot invert a non-unit series (0 is not in its support)");
  if (trunc.sign() <= 0) throw DomainError("inversion needs a positive truncation");
  auto t = f.trunc() ? std::min(*f.trunc(), trunc) : trunc;
  const auto& field = f.field();
  Rat cinv = field.inverse(f.terms().front().second);
  auto one = Series::constant(f.group(), 1, field).with_trunc(t);
  // f = c (1 - y) with y of positive valuation
  auto y = scale(-cinv, sub(f, Series::constant(f.group(), f.terms().front().second, field))).with_trunc(t);
  std::vector<Series::Term> terms = one.terms();
  auto power = one;
  while (true) {
    power = mul(power, y);
    if (power.is_zero()) break;
    terms.insert(terms.end(), power.terms().begin(), power.terms().end());
    if (terms.size() > budget)
      throw InfiniteExpansion("trunc admits infinite expansion: more than " + std::to_string(budget) +
                              " terms below " + t.to_string());
  }
  return scale(cinv, Series(f.group(), field, std::move(terms), t));
}

GroupElement valuation(const Series& f) {
  if (f.is_zero()) throw DomainError("valuation of the zero series");
  return f.terms().front().first;
}

bool member_ring(const Series& f, const MonoidExpr& s) {
  return std::all_of(f.terms().begin(), f.terms().end(), [&](const Series::Term& t) { return member(s, t.first); });
}

}  // namespace mexcl
