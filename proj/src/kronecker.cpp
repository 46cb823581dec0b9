#include "mexcl/kronecker.hpp"

#include <algorithm>
#include <numeric>

namespace mexcl {

namespace {

bool unit_at(const MonomialValuation& v, const Series& x) { return !x.is_zero() && v.value(x).is_zero(); }

std::optional<TPoly> shift_all(const TPoly& f, const GroupElement& by) {
  std::vector<Series> out;
  try {
    for (const auto& c : f.coefficients()) out.push_back(shift(c, by));
  } catch (const DomainError&) {
    return std::nullopt;
  }
  return TPoly(f.group(), f.field(), std::move(out));
}

}  // namespace

TPoly::TPoly(GroupPtr group, Field field, std::vector<Series> coefficients)
    : group_(std::move(group)), field_(field), coefficients_(std::move(coefficients)) {
  for (const auto& c : coefficients_) {
    if (!same_group(c.group(), group_)) throw SpecMismatch("t-coefficient over a different group");
    if (!(c.field() == field_)) throw SpecMismatch("t-coefficient over a different field");
  }
  while (!coefficients_.empty() && coefficients_.back().is_zero()) coefficients_.pop_back();
}

std::string TPoly::to_string() const {
  if (coefficients_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coefficients_.size(); ++k) {
    if (coefficients_[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + coefficients_[k].to_string() + ")";
    if (k > 0) out += "*t^" + std::to_string(k);
  }
  return out;
}

RatFunc::RatFunc(TPoly n, TPoly d) : num(std::move(n)), den(std::move(d)) {
  if (den.is_zero()) throw DomainError("rational function with zero denominator");
  if (!same_group(num.group(), den.group()) || !(num.field() == den.field()))
    throw SpecMismatch("numerator and denominator over different rings");
}

std::string RatFunc::to_string() const { return "[" + num.to_string() + "] / [" + den.to_string() + "]"; }

MonomialValuation::MonomialValuation(GroupPtr ambient, std::vector<std::size_t> order, std::size_t keep)
    : ambient_(std::move(ambient)), order_(std::move(order)), keep_(keep) {
  const std::size_t n = ambient_->rank();
  auto sorted = order_;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::size_t> identity(n);
  std::iota(identity.begin(), identity.end(), 0);
  if (sorted != identity) throw DomainError("valuation order must be a permutation of the coordinates");
  if (keep_ < 1 || keep_ > n) throw DomainError("valuation keep must lie in 1..rank");
  std::vector<RankOneSpec> comps;
  for (std::size_t k = 0; k < keep_; ++k) comps.push_back(ambient_->component(order_[k]));
  value_group_ = make_group(std::move(comps));
}

MonomialValuation MonomialValuation::standard(GroupPtr ambient, std::size_t keep) {
  std::vector<std::size_t> order(ambient->rank());
  std::iota(order.begin(), order.end(), 0);
  return MonomialValuation(std::move(ambient), std::move(order), keep);
}

MonomialValuation MonomialValuation::from_ring(const RingDesc& r) {
  if (const auto* f = std::get_if<ring::FullValuation>(&r.v)) return standard(f->group, f->group->rank());
  if (const auto* l = std::get_if<ring::LocalizedValuation>(&r.v)) return standard(l->group, l->keep);
  throw DomainError("a valuation family member must be FullValuation or LocalizedValuation, got " + r.kind_name());
}

GroupElement MonomialValuation::value(const GroupElement& g) const {
  if (!same_group(g.group(), ambient_)) throw SpecMismatch("element outside the valuation's ambient group");
  std::vector<Coord> coords;
  for (std::size_t k = 0; k < keep_; ++k) coords.push_back(g[order_[k]]);
  return GroupElement(value_group_, std::move(coords));
}

GroupElement MonomialValuation::value(const Series& f) const {
  if (f.is_zero()) throw DomainError("value of the zero series");
  std::optional<GroupElement> best;
  for (const auto& t : f.terms()) {
    auto v = value(t.first);
    if (!best || v < *best) best = std::move(v);
  }
  return *best;
}

std::string MonomialValuation::to_string() const {
  std::string out = "v[";
  for (std::size_t k = 0; k < order_.size(); ++k) out += (k ? "," : "") + std::to_string(order_[k] + 1);
  return out + "; keep " + std::to_string(keep_) + "]";
}

ValuationFamily family_from_rings(const std::vector<RingPtr>& rings) {
  if (rings.empty()) throw DomainError("empty valuation family");
  ValuationFamily out;
  for (const auto& r : rings) out.push_back(MonomialValuation::from_ring(*r));
  for (const auto& v : out)
    if (!same_group(v.ambient(), out.front().ambient())) throw SpecMismatch("family members over different groups");
  return out;
}

GroupElement tpoly_valuation(const TPoly& f, const MonomialValuation& v) {
  if (f.is_zero()) throw DomainError("valuation of the zero polynomial");
  std::optional<GroupElement> best;
  for (const auto& c : f.coefficients()) {
    if (c.is_zero()) continue;
    auto x = v.value(c);
    if (!best || x < *best) best = std::move(x);
  }
  return *best;
}

bool in_nagata_valuation(const RatFunc& phi, const MonomialValuation& v) {
  if (phi.num.is_zero()) return true;
  return tpoly_valuation(phi.num, v) >= tpoly_valuation(phi.den, v);
}

bool in_kr_family(const RatFunc& phi, const ValuationFamily& family) {
  return std::all_of(family.begin(), family.end(), [&](const MonomialValuation& v) { return in_nagata_valuation(phi, v); });
}

bool linear_fraction_in_nagata(const Monomial& z, const RingDesc& d) {
  if (z.coef == 0) throw DomainError("z = 0");
  auto pos = contains_monomial(d, z.exponent);
  auto inv = contains_monomial(d, -z.exponent);
  if (!pos || !inv) throw NotApplicable("monomial membership undefined for " + d.kind_name());
  return *pos || *inv;
}

RatFunc linear_fraction(const GroupElement& g, Field field) {
  const auto& G = g.group();
  auto one = Series::constant(G, 1, field);
  if (g.sign() >= 0) {
    return RatFunc(TPoly(G, field, {one}), TPoly(G, field, {Series::monomial(g, 1, field), one}));
  }
  auto m = Series::monomial(-g, 1, field);
  return RatFunc(TPoly(G, field, {m}), TPoly(G, field, {one, m}));
}

std::optional<NagataWitness> nagata_counterexample(const RingDesc& d, const ValuationFamily& family,
                                                   const std::vector<GroupElement>& candidates, const Window& window) {
  for (const auto& g : window.enumerate()) {
    auto in = contains_monomial(d, g);
    if (!in) throw NotApplicable("monomial membership undefined for " + d.kind_name());
    if (!*in) continue;
    for (std::size_t k = 0; k < family.size(); ++k)
      if (family[k].value(g).sign() < 0)
        throw PreconditionError("family member " + std::to_string(k + 1) + " does not contain X^" + g.to_string());
  }
  for (const auto& g : candidates) {
    if (g.is_zero()) continue;
    if (*contains_monomial(d, g) || *contains_monomial(d, -g)) continue;
    bool covered = std::all_of(family.begin(), family.end(), [&](const MonomialValuation& v) {
      return v.value(g).sign() >= 0 || v.value(-g).sign() >= 0;
    });
    if (!covered) continue;
    auto phi = linear_fraction(g);
    bool in_family = in_kr_family(phi, family);
    bool in_nagata = linear_fraction_in_nagata({1, g}, d);
    if (in_family && !in_nagata) return NagataWitness{g, std::move(phi), in_family, in_nagata};
  }
  return std::nullopt;
}

void SemilocalDesc::validate() const {
  if (!ambient) throw PreconditionError("semilocal ring needs an ambient group");
  if (valuations.empty()) throw PreconditionError("semilocal ring needs at least one valuation");
  for (const auto& v : valuations)
    if (!same_group(v.ambient(), ambient)) throw SpecMismatch("valuation over a different ambient group");
  std::size_t need = std::max<std::size_t>(1, s() - 1);
  if (units.size() < need)
    throw PreconditionError("U has " + std::to_string(units.size()) + " elements, need at least " + std::to_string(need));
  std::vector<Rat> normalized;
  for (const auto& u : units) {
    auto x = field.normalize(u);
    if (x == 0) throw PreconditionError("0 is not a unit");
    if (std::find(normalized.begin(), normalized.end(), x) != normalized.end())
      throw PreconditionError("elements of U must have unit differences");
    normalized.push_back(x);
  }
  if (field.is_prime() && static_cast<std::size_t>(field.p) < s())
    throw PreconditionError("residue field " + field.to_string() + " has fewer than s elements");
}

bool SemilocalDesc::contains(const Series& x) const {
  if (x.is_zero()) return true;
  return std::all_of(valuations.begin(), valuations.end(),
                     [&](const MonomialValuation& v) { return v.value(x).sign() >= 0; });
}

bool SemilocalDesc::is_unit(const Series& x) const {
  return std::all_of(valuations.begin(), valuations.end(), [&](const MonomialValuation& v) { return unit_at(v, x); });
}

Series combine(const std::vector<Rat>& deltas, const std::vector<Series>& xs) {
  if (deltas.size() != xs.size() || xs.empty()) throw DomainError("coefficient and generator counts differ");
  Series c(xs.front().group(), xs.front().field());
  for (std::size_t k = 0; k < xs.size(); ++k)
    if (deltas[k] != 0) c = add(c, scale(deltas[k], xs[k]));
  return c;
}

std::vector<Rat> semilocal_unit_combination(const SemilocalDesc& a, const std::vector<Series>& xs) {
  a.validate();
  if (xs.empty()) throw PreconditionError("no generators");
  for (std::size_t k = 0; k < xs.size(); ++k) {
    for (std::size_t j = 0; j < a.s(); ++j)
      if (!xs[k].is_zero() && a.valuations[j].value(xs[k]).sign() < 0)
        throw SemilocalFailure("x_" + std::to_string(k + 1) + " is not in A", j);
  }
  const auto& vals = a.valuations;
  auto unit = [&](std::size_t k, std::size_t j) { return unit_at(vals[j], xs[k]); };
  auto generates = [&](const std::vector<std::size_t>& idx, const std::vector<std::size_t>& js) {
    return std::all_of(js.begin(), js.end(), [&](std::size_t j) {
      return std::any_of(idx.begin(), idx.end(), [&](std::size_t k) { return unit(k, j); });
    });
  };
  std::vector<std::size_t> all_idx(xs.size()), all_j(a.s());
  std::iota(all_idx.begin(), all_idx.end(), 0);
  std::iota(all_j.begin(), all_j.end(), 0);
  for (std::size_t j : all_j)
    if (!generates(all_idx, {j})) throw SemilocalFailure("generators lie in the maximal ideal of valuation " + std::to_string(j + 1), j);

  const Rat first_unit = a.field.normalize(a.units.front());
  std::function<std::vector<Rat>(std::vector<std::size_t>, const std::vector<std::size_t>&)> solve =
      [&](std::vector<std::size_t> idx, const std::vector<std::size_t>& js) {
        std::vector<Rat> d(xs.size(), 0);
        if (js.empty()) return d;
        if (idx.size() == 1) {
          d[idx[0]] = first_unit;
          return d;
        }
        for (std::size_t pos = idx.size(); pos-- > 0;) {
          auto rest = idx;
          rest.erase(rest.begin() + static_cast<long>(pos));
          if (generates(rest, js)) return solve(rest, js);
        }
        std::size_t last = idx.back();
        idx.pop_back();
        std::vector<std::size_t> sub;
        for (std::size_t j : js)
          if (!unit(last, j)) sub.push_back(j);
        if (sub.empty()) {
          d[last] = first_unit;
          return d;
        }
        d = solve(idx, sub);
        for (const auto& u : a.units) {
          d[last] = a.field.normalize(u);
          auto c = combine(d, xs);
          if (std::all_of(js.begin(), js.end(), [&](std::size_t j) { return unit_at(vals[j], c); })) return d;
        }
        throw SemilocalFailure("no unit combination found", js.front());
      };
  return solve(all_idx, all_j);
}

std::optional<ScalingCertificate> find_scaling(const RatFunc& phi, const std::function<bool(const Series&)>& in_ring,
                                               const std::function<bool(const TPoly&)>& unit_content) {
  std::vector<GroupElement> shifts{GroupElement::zero(phi.den.group())};
  for (const auto& c : phi.den.coefficients())
    for (const auto& t : c.terms()) shifts.push_back(t.first);
  std::sort(shifts.begin(), shifts.end());
  shifts.erase(std::unique(shifts.begin(), shifts.end()), shifts.end());
  for (const auto& c : shifts) {
    auto num = shift_all(phi.num, -c);
    auto den = shift_all(phi.den, -c);
    if (!num || !den) continue;
    auto ok = [&](const TPoly& p) { return std::all_of(p.coefficients().begin(), p.coefficients().end(), in_ring); };
    if (ok(*num) && ok(*den) && unit_content(*den)) return ScalingCertificate{c, std::move(*num), std::move(*den)};
  }
  return std::nullopt;
}

std::optional<ScalingCertificate> semilocal_nagata_certificate(const RatFunc& phi, const SemilocalDesc& a) {
  return find_scaling(
      phi, [&](const Series& x) { return a.contains(x); },
      [&](const TPoly& den) {
        return std::all_of(a.valuations.begin(), a.valuations.end(), [&](const MonomialValuation& v) {
          return std::any_of(den.coefficients().begin(), den.coefficients().end(),
                             [&](const Series& c) { return unit_at(v, c); });
        });
      });
}

std::string to_string(MembershipStatus s) {
  switch (s) {
    case MembershipStatus::Certified: return "certified";
    case MembershipStatus::NotMember: return "not_member";
    case MembershipStatus::NotCertified: return "not_certified";
  }
  return "?";
}

Construction56Result in_construction56(const RatFunc& phi, const ValuationFamily& kr_family, const RingDesc& a) {
  const auto* m = std::get_if<ring::MonomialRing>(&a.v);
  if (!m) throw PreconditionError("A must be a monomial ring");
  Construction56Result out{MembershipStatus::NotMember, in_kr_family(phi, kr_family), std::nullopt};
  if (!out.in_family) return out;
  out.certificate = find_scaling(
      phi, [&](const Series& x) { return member_ring(x, m->s); },
      [](const TPoly& den) {
        return std::any_of(den.coefficients().begin(), den.coefficients().end(), [](const Series& c) { return is_unit(c); });
      });
  out.status = out.certificate ? MembershipStatus::Certified : MembershipStatus::NotCertified;
  return out;
}

}  // namespace mexcl
