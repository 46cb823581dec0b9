#include "mexcl/rings.hpp"

#include "mexcl/errors.hpp"

#include <algorithm>

namespace mexcl {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

RingPtr make(auto n) { return std::make_shared<const RingDesc>(RingDesc{std::move(n)}); }

/// k with tail_group(big, k) equal to small, if any.
std::optional<std::size_t> tail_offset(const GroupPtr& big, const GroupPtr& small) {
  if (!big || !small) return std::nullopt;
  for (std::size_t k = 1; k < big->rank(); ++k)
    if (same_group(tail_group(big, k), small)) return k;
  return std::nullopt;
}

Window window_for(const GroupPtr& g, const Window& w) {
  if (same_group(g, w.group())) return w;
  if (auto k = tail_offset(w.group(), g)) {
    std::vector<ComponentBounds> b(w.bounds().begin() + static_cast<long>(*k), w.bounds().end());
    return Window(g, std::move(b));
  }
  const auto& first = w.bounds().front();
  return Window::cube(g, first.lo.convert_to<long>(), first.hi.convert_to<long>());
}

GroupElement last_unit_negated(const GroupPtr& g, std::size_t keep) { return -GroupElement::unit(g, keep - 1); }

RingVerdict valuation_verdict(const GroupPtr& g, std::size_t keep) {
  RingVerdict v;
  v.status = RingStatus::VerifiedStructurally;
  v.reason = "valuation domain";
  v.excluded = last_unit_negated(g, keep);
  v.excluded_text = "X^" + v.excluded->to_string();
  return v;
}

RingVerdict from_monoid(const MaxExclVerdict& m) {
  RingVerdict v;
  switch (m.status) {
    case VerdictStatus::RefutedWithWitness: v.status = RingStatus::RefutedWithWitness; break;
    case VerdictStatus::VerifiedOnWindow: v.status = RingStatus::VerifiedOnWindow; break;
    case VerdictStatus::VerifiedStructurally: v.status = RingStatus::VerifiedStructurally; break;
  }
  v.reason = m.verified() ? "symmetry criterion holds" : m.reason;
  v.witness = m.witness;
  v.excluded = m.a;
  v.excluded_text = "X^" + m.a.to_string();
  return v;
}

std::vector<ClosureHypothesis> closure_hypotheses(const MonoidExpr& s, const MonoidExpr& closed, const Window& window) {
  auto all = window.enumerate();
  std::vector<ClosureHypothesis> out;
  for (std::size_t i = 1; i <= s.group()->rank(); ++i) {
    std::vector<GroupElement> ci, si;
    for (const auto& g : all) {
      if (g.sign() <= 0 || hat_index(g) != i) continue;
      if (member(closed, g)) ci.push_back(g);
      if (member(s, g)) si.push_back(g);
    }
    ClosureHypothesis h{i, ci.empty(), std::nullopt};
    for (const auto& anchor : si) {
      if (h.certified) break;
      bool ok = std::all_of(ci.begin(), ci.end(), [&](const GroupElement& g) { return g < anchor || member(s, g); });
      if (ok) {
        h.certified = true;
        h.anchor = anchor;
      }
    }
    out.push_back(h);
  }
  return out;
}

}  // namespace

GroupPtr RingDesc::group() const {
  return std::visit(overloaded{
                        [](const ring::MonomialRing& r) { return r.s.group(); },
                        [](const ring::FullValuation& r) { return r.group; },
                        [](const ring::LocalizedValuation& r) { return r.group; },
                        [](const ring::Pullback& r) { return r.top->group(); },
                        [](const ring::FieldRing&) { return GroupPtr(); },
                    },
                    v);
}

std::string RingDesc::kind_name() const {
  static const char* names[] = {"MonomialRing", "FullValuation", "LocalizedValuation", "Pullback", "Field"};
  return names[v.index()];
}

namespace rings {
RingPtr monomial(MonoidExpr s) {
  if (!member(s, GroupElement::zero(s.group()))) throw DomainError("a monomial ring needs 0 in S");
  return make(ring::MonomialRing{std::move(s)});
}
RingPtr full_valuation(GroupPtr g) { return make(ring::FullValuation{std::move(g)}); }
RingPtr localized(GroupPtr g, std::size_t keep) {
  if (keep < 1 || keep > g->rank()) throw DomainError("localization keep must lie in 1..rank");
  if (keep == g->rank()) return full_valuation(std::move(g));
  return make(ring::LocalizedValuation{std::move(g), keep});
}
RingPtr pullback(RingPtr top, RingPtr base) {
  if (!top || !base) throw DomainError("pullback needs both rings");
  if (std::holds_alternative<ring::FieldRing>(top->v)) throw DomainError("pullback top ring must carry a group");
  return make(ring::Pullback{std::move(top), std::move(base)});
}
RingPtr field(std::optional<bool> minimal_extension) { return make(ring::FieldRing{minimal_extension}); }
}  // namespace rings

std::optional<bool> contains_monomial(const RingDesc& r, const GroupElement& g) {
  return std::visit(
      overloaded{
          [&](const ring::MonomialRing& n) -> std::optional<bool> { return member(n.s, g); },
          [&](const ring::FullValuation&) -> std::optional<bool> { return g.sign() >= 0; },
          [&](const ring::LocalizedValuation& n) -> std::optional<bool> { return g.head(n.keep).sign() >= 0; },
          [&](const ring::Pullback& n) -> std::optional<bool> {
            const auto* loc = std::get_if<ring::LocalizedValuation>(&n.top->v);
            if (!loc || !same_group(tail_group(loc->group, loc->keep), n.base->group())) return std::nullopt;
            int s = g.head(loc->keep).sign();
            if (s != 0) return s > 0;
            return contains_monomial(*n.base, g.tail(loc->keep));
          },
          [](const ring::FieldRing&) -> std::optional<bool> { return std::nullopt; },
      },
      r.v);
}

ValuationCheck check_valuation(const RingDesc& r, const Window& window) {
  return std::visit(
      overloaded{
          [&](const ring::MonomialRing& n) {
            if (is_full_cone(n.s)) return ValuationCheck{true, true, std::nullopt};
            auto w = window_for(n.s.group(), window);
            for (const auto& g : w.enumerate())
              if (g.sign() > 0 && !member(n.s, g)) return ValuationCheck{false, true, g};
            return ValuationCheck{true, false, std::nullopt};
          },
          [&](const ring::Pullback& n) {
            auto top = check_valuation(*n.top, window);
            if (!top.value) return top;
            if (std::holds_alternative<ring::FieldRing>(n.base->v)) return ValuationCheck{false, true, std::nullopt};
            auto base = check_valuation(*n.base, window_for(n.base->group(), window));
            return ValuationCheck{base.value, top.structural && base.structural, std::nullopt};
          },
          [](const auto&) { return ValuationCheck{true, true, std::nullopt}; },
      },
      r.v);
}

bool is_valuation(const RingDesc& r, const Window& window) { return check_valuation(r, window).value; }

std::string to_string(RingStatus s) {
  switch (s) {
    case RingStatus::RefutedWithWitness: return "refuted";
    case RingStatus::VerifiedOnWindow: return "verified_on_window";
    case RingStatus::VerifiedStructurally: return "verified_structurally";
    case RingStatus::NotApplicable: return "not_applicable";
  }
  return "?";
}

std::optional<GroupElement> excluded_candidate(const MonoidExpr& s, const Window& window) {
  auto all = window.enumerate();
  for (auto it = all.rbegin(); it != all.rend(); ++it)
    if (it->sign() > 0 && !member(s, *it)) return *it;
  return std::nullopt;
}

RingVerdict is_maximal_excluding(const RingDesc& r, const Window& window, const std::optional<GroupElement>& a) {
  return std::visit(
      overloaded{
          [&](const ring::MonomialRing& n) {
            if (is_full_cone(n.s)) return valuation_verdict(n.s.group(), n.s.group()->rank());
            auto w = window_for(n.s.group(), window);
            auto cand = a ? a : excluded_candidate(n.s, w);
            if (!cand) {
              RingVerdict v;
              v.reason = "no positive element outside S in the window";
              return v;
            }
            return from_monoid(check_maxexcl(n.s, *cand, w));
          },
          [&](const ring::FullValuation& n) { return valuation_verdict(n.group, n.group->rank()); },
          [&](const ring::LocalizedValuation& n) { return valuation_verdict(n.group, n.keep); },
          [&](const ring::Pullback& n) {
            RingVerdict v;
            auto top = check_valuation(*n.top, window);
            if (!top.value) {
              v.status = RingStatus::RefutedWithWitness;
              v.reason = "T is not a valuation domain";
              v.witness = top.witness;
              return v;
            }
            auto base_group = n.base->group();
            auto base = base_group ? is_maximal_excluding(*n.base, window_for(base_group, window))
                                   : is_maximal_excluding(*n.base, window);
            v = base;
            if (base.status == RingStatus::RefutedWithWitness) {
              v.reason = "B is not maximal excluding: " + base.reason;
              v.excluded.reset();
              v.excluded_text.clear();
              return v;
            }
            if (!base.verified()) return v;
            const auto* loc = std::get_if<ring::LocalizedValuation>(&n.top->v);
            if (base.excluded && loc && same_group(tail_group(loc->group, loc->keep), base_group)) {
              v.excluded = base.excluded->prepend_zeros(loc->group);
              v.excluded_text = "X^" + v.excluded->to_string();
            } else {
              v.excluded.reset();
              v.excluded_text = "any lift of " + (base.excluded_text.empty() ? "B's excluded element" : base.excluded_text);
            }
            v.reason = "T is a valuation domain and B is maximal excluding";
            return v;
          },
          [&](const ring::FieldRing& n) {
            RingVerdict v;
            if (!n.minimal_extension) {
              v.reason = "minimal field extension flag not declared";
            } else if (*n.minimal_extension) {
              v.status = RingStatus::VerifiedStructurally;
              v.reason = "declared minimal field extension";
              v.excluded_text = "a generator of the residue field over B";
            } else {
              v.status = RingStatus::RefutedWithWitness;
              v.reason = "declared not a minimal field extension";
            }
            return v;
          },
      },
      r.v);
}

RingClosure integral_closure(const RingDesc& r, const Window& window, int nmax) {
  return std::visit(
      overloaded{
          [&](const ring::MonomialRing& n) {
            const auto& g = n.s.group();
            auto w = window_for(g, window);
            if (n.s.kind() == MonoidExpr::Kind::Lemma310) {
              auto c = closure(n.s, w, nmax);
              auto base = monoids::slice(c.expr);
              if (is_full_cone(base)) return RingClosure{rings::full_valuation(g), !c.structural, "valuation", {}};
              return RingClosure{rings::pullback(rings::localized(g, 1), rings::monomial(base)), !c.structural,
                                 "pullback", {}};
            }
            auto c = closure(n.s, w, nmax);
            auto hyp = closure_hypotheses(n.s, c.expr, w);
            bool heuristic = std::any_of(hyp.begin(), hyp.end(), [](const ClosureHypothesis& h) { return !h.certified; });
            if (is_full_cone(c.expr)) return RingClosure{rings::full_valuation(g), heuristic, "valuation", hyp};
            return RingClosure{rings::monomial(c.expr), heuristic || !c.structural, "monomial", hyp};
          },
          [&](const ring::Pullback& n) {
            auto base_group = n.base->group();
            if (!base_group) return RingClosure{std::make_shared<const RingDesc>(r), false, "pullback", {}};
            auto b = integral_closure(*n.base, window_for(base_group, window), nmax);
            return RingClosure{rings::pullback(n.top, b.ring), b.heuristic, "pullback", b.hypotheses};
          },
          [&](const ring::FieldRing&) -> RingClosure { throw NotApplicable("integral closure of a field descriptor"); },
          [&](const auto&) { return RingClosure{std::make_shared<const RingDesc>(r), false, "valuation", {}}; },
      },
      r.v);
}

RingPtr complete_integral_closure(const RingDesc& r, const Window& window) {
  const auto* n = std::get_if<ring::MonomialRing>(&r.v);
  if (!n) throw NotApplicable("complete integral closure needs a monomial ring");
  auto verdict = is_maximal_excluding(r, window);
  if (!verdict.verified()) throw NotApplicable("ring not certified maximal excluding: " + verdict.reason);
  const auto& g = n->s.group();
  if (!generates_group(n->s, window_for(g, window)))
    throw NotApplicable("S does not generate G on the window (quotient field differs)");
  if (g->rank() == 1) return rings::full_valuation(g);
  return rings::localized(g, 1);
}

std::string to_string(IntegralStatus s) {
  switch (s) {
    case IntegralStatus::Certified: return "certified";
    case IntegralStatus::RefutedUpToBound: return "refuted_up_to_bound";
    case IntegralStatus::NotCertified: return "not_certified";
  }
  return "?";
}

IntegralStatus is_integral_element(const Series& f, const RingDesc& r, int degree_bound) {
  if (degree_bound < 1) throw DomainError("degree bound must be >= 1");
  auto monomial_integral = [&](const GroupElement& g) {
    for (int k = 1; k <= degree_bound; ++k) {
      auto in = contains_monomial(r, scalar_mul(k, g));
      if (!in) throw NotApplicable("monomial membership undefined for " + r.kind_name());
      if (*in) return true;
    }
    return false;
  };
  if (f.is_zero()) return IntegralStatus::Certified;
  bool all = true;
  for (const auto& t : f.terms()) all = all && monomial_integral(t.first);
  if (all) return IntegralStatus::Certified;
  return f.is_monomial() ? IntegralStatus::RefutedUpToBound : IntegralStatus::NotCertified;
}

std::optional<GroupElement> first_monomial_difference(const RingDesc& a, const RingDesc& b, const Window& window) {
  for (const auto& g : window.enumerate()) {
    auto x = contains_monomial(a, g), y = contains_monomial(b, g);
    if (!x || !y) throw NotApplicable("monomial membership undefined");
    if (*x != *y) return g;
  }
  return std::nullopt;
}

}  // namespace mexcl
