#include "mexcl/repro.hpp"

#include "mexcl/catalog.hpp"
#include "mexcl/errors.hpp"
#include "mexcl/kronecker.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace mexcl {

namespace {

using io::Json;

class Battery {
 public:
  explicit Battery(ReproReport& r) : report_(r) {}

  void check(const std::string& name, bool pass, const std::string& detail = "") {
    report_.assertions.push_back({name, pass, detail});
  }
  /// Runs f; an exception becomes a failed assertion.
  void guard(const std::string& name, const std::function<void()>& f) {
    try {
      f();
    } catch (const std::exception& e) {
      check(name, false, std::string("exception: ") + e.what());
    }
  }

 private:
  ReproReport& report_;
};

std::string show(const std::optional<GroupElement>& g) { return g ? g->to_string() : "none"; }

bool same_members(const MonoidExpr& a, const MonoidExpr& b, const Window& w, std::string& detail) {
  auto d = first_difference(a, b, w);
  detail = d ? "differ at " + d->to_string() : "equal on " + w.to_string();
  return !d;
}

void ring_equal(Battery& t, const std::string& name, const RingDesc& a, const RingDesc& b, const Window& w) {
  auto d = first_monomial_difference(a, b, w);
  t.check(name, !d, d ? "differ at " + d->to_string() : "equal on " + w.to_string());
}

bool is_kind(const RingDesc& r, std::size_t index) { return r.v.index() == index; }

void maxexcl(Battery& t, const std::string& name, const MonoidExpr& s, const GroupElement& a, const Window& w,
             bool structural = true) {
  auto v = check_maxexcl(s, a, w);
  bool pass = structural ? v.status == VerdictStatus::VerifiedStructurally : v.verified();
  t.check(name, pass, to_string(v.status) + (v.witness ? " witness " + v.witness->to_string() : ""));
}

void repro_gap(ReproReport& r) {
  Battery t(r);
  Json windows = Json::object();
  for (long a : {5L, 7L, 11L}) {
    auto tag = "a=" + std::to_string(a);
    auto s = catalog::gap(a);
    auto w = catalog::integer_window(0, 4 * a);
    windows[tag] = io::window_to_json(w);
    auto sub = is_submonoid(s, w);
    t.check(tag + " S is a monoid", sub.pass, to_string(sub));
    maxexcl(t, tag + " maximal excluding X^a", s, GroupElement::of(s.group(), {a}), w);
    t.guard(tag + " integral closure is V", [&] {
      auto c = integral_closure(*rings::monomial(s), w, 8);
      t.check(tag + " integral closure is V", is_kind(*c.ring, 1) && !c.heuristic, c.form);
    });
    t.guard(tag + " complete integral closure is V", [&] {
      auto c = complete_integral_closure(*rings::monomial(s), w);
      t.check(tag + " complete integral closure is V", is_kind(*c, 1), c->kind_name());
    });
  }
  r.data["windows"] = windows;
}

void repro_plane(ReproReport& r) {
  Battery t(r);
  auto g = catalog::integer_plane();
  auto s = catalog::plane_chain();
  auto w = catalog::plane_window(0, 3, -6, 6);
  auto wide = catalog::plane_window(0, 4, -8, 8);
  r.data["window"] = io::window_to_json(w);
  r.data["closure_window"] = io::window_to_json(wide);

  std::string detail;
  t.check("S matches the region description", same_members(s, catalog::plane_explicit(), wide, detail), detail);
  t.check("Y not in D", !member(s, GroupElement::of(g, {1, 0})), "");
  maxexcl(t, "D maximal excluding Y", s, GroupElement::of(g, {1, 0}), w);
  auto s2 = decompose(s, 2);
  t.check("S_2 = {(0,n) : n >= 1}", same_members(s2, monoids::stratum(catalog::plane_upper_axis(), 2), wide, detail),
          detail);

  static const char* names[] = {"D", "D[Y]", "D[Y/X]", "D[Y/X^2]"};
  for (long k = 0; k < 4; ++k) {
    std::string n = names[k];
    auto dk = catalog::plane_chain(k);
    auto a = GroupElement::of(g, {1, -k});
    t.check(n + " matches its adjunction chain", same_members(dk, catalog::plane_chain_by_shifts(k), wide, detail),
            detail);
    maxexcl(t, n + " maximal excluding X^" + a.to_string(), dk, a, w);
    if (k < 3) {
      auto next = catalog::plane_chain(k + 1);
      std::string d2;
      bool ok = same_members(next, monoids::shift(dk, a), wide, d2);
      t.check(n + " minimal overring is " + names[k + 1], ok, d2);
    }
    auto c = closure(dk, wide, 8);
    t.check(n + " closure is the positive cone", same_members(c.expr, monoids::full_cone(g), wide, detail), detail);
    t.guard(n + " integral closure is V", [&] {
      auto ic = integral_closure(*rings::monomial(dk), wide, 8);
      t.check(n + " integral closure is V", is_kind(*ic.ring, 1), ic.form);
    });
  }
  t.guard("complete integral closure is W", [&] {
    auto c = complete_integral_closure(*rings::monomial(s), w);
    t.check("complete integral closure is W", is_kind(*c, 2), c->kind_name());
  });
}

void repro_dual(ReproReport& r) {
  Battery t(r);
  auto g = catalog::integer_plane();
  auto s = catalog::plane_dual();
  auto w = catalog::plane_window(0, 3, -6, 6);
  auto wide = catalog::plane_window(0, 4, -8, 8);
  r.data["window"] = io::window_to_json(w);
  std::string detail;
  t.check("S matches the region description", same_members(s, catalog::plane_dual_explicit(), wide, detail), detail);
  auto sub = is_submonoid(s, w);
  t.check("S is a monoid", sub.pass, to_string(sub));
  maxexcl(t, "D maximal excluding Y", s, GroupElement::of(g, {1, 0}), w);

  auto c = closure(s, w, 6);
  std::vector<GroupElement> added;
  for (const auto& x : w.enumerate())
    if (member(c.expr, x) && !member(s, x)) added.push_back(x);
  t.check("closure adds exactly (1,0)", added.size() == 1 && added[0] == GroupElement::of(g, {1, 0}),
          std::to_string(added.size()) + " added" + (added.empty() ? "" : ", first " + added[0].to_string()));

  t.guard("integral closure is D[Y]", [&] {
    auto ic = integral_closure(*rings::monomial(s), w, 6);
    t.check("integral closure has pullback form", ic.form == "pullback", ic.form);
    ring_equal(t, "integral closure is D[Y]", *ic.ring, *rings::monomial(catalog::plane_dual_with_y()), wide);
  });
  auto dy = rings::monomial(catalog::plane_dual_with_y());
  auto x = GroupElement::of(g, {0, 1});
  t.check("D[Y] is not a valuation domain", !*contains_monomial(*dy, x) && !*contains_monomial(*dy, -x),
          "X and 1/X both outside D[Y]");
  t.guard("complete integral closure is W", [&] {
    auto cc = complete_integral_closure(*rings::monomial(s), w);
    t.check("complete integral closure is W", is_kind(*cc, 2), cc->kind_name());
  });
  auto d = rings::monomial(s);
  auto y_int = is_integral_element(Series::monomial(GroupElement::of(g, {1, 0})), *d, 6);
  t.check("Y integral over D", y_int == IntegralStatus::Certified, to_string(y_int));
  auto x_int = is_integral_element(Series::monomial(x), *d, 8);
  t.check("X not integral up to degree 8", x_int == IntegralStatus::RefutedUpToBound, to_string(x_int));
}

void repro_quadrant(ReproReport& r) {
  Battery t(r);
  auto g = catalog::z_plus_zsqrt2();
  auto h = catalog::quadrant();
  auto w = Window::cube(g, -6, 6);
  auto hw = Window::cube(h.group(), -6, 6);
  r.data["window"] = io::window_to_json(w);
  auto hc = closure(h, hw, 8);
  t.check("H is its own closure (structural)", hc.structural && hc.expr.kind() == MonoidExpr::Kind::QuadrantCone, "");
  std::string detail;
  t.check("H is its own closure on the window",
          same_members(monoids::root_closure(h, hw, 8), h, hw, detail), detail);

  auto comps = catalog::quadrant_components();
  auto a = GroupElement::of(g, {1, 0});
  auto failure = validate_lemma310(a, comps, std::nullopt, w);
  t.check("S_1 construction hypotheses hold", !failure, failure ? failure->reason : "");
  auto s = catalog::quadrant_lift();
  auto e1 = GroupElement(g, {Coord(1), Coord(-2, 1)});
  auto e2 = GroupElement(g, {Coord(1), Coord(-1, -1)});
  t.check("(1, sqrt2 - 2) in S", member(s, e1), "");
  t.check("(1, -1 - sqrt2) not in S", !member(s, e2), "");
  auto sub = is_submonoid(s, w);
  t.check("S is a monoid", sub.pass, to_string(sub));
  maxexcl(t, "D maximal excluding Y", s, a, w);
  t.guard("integral closure is the pullback of A", [&] {
    auto ic = integral_closure(*rings::monomial(s), w, 8);
    const auto* pb = std::get_if<ring::Pullback>(&ic.ring->v);
    bool form = pb && is_kind(*pb->top, 2) && is_kind(*pb->base, 0);
    t.check("integral closure is the pullback of A", form, ic.form);
    if (form) {
      const auto& base = std::get<ring::MonomialRing>(pb->base->v).s;
      std::string d2;
      t.check("pullback base equals H", same_members(base, h, hw, d2), d2);
    }
  });
}

void repro_prop47(ReproReport& r) {
  Battery t(r);
  auto z = catalog::integers();
  auto plane = catalog::integer_plane();
  auto d23 = rings::monomial(catalog::semigroup23());
  ValuationFamily vz{MonomialValuation::standard(z, 1)};
  auto wz = catalog::integer_window(-8, 8);
  auto one = GroupElement::of(z, {1});
  t.check("1/(t+X) not in D(t) for <2,3>", !linear_fraction_in_nagata({1, one}, *d23), "");
  t.check("1/(t+X) in V(t)", in_kr_family(linear_fraction(one), vz), "");
  t.check("1/(t+X^2) in D(t) for <2,3>", linear_fraction_in_nagata({1, GroupElement::of(z, {2})}, *d23), "");
  t.check("1/(t+X) in V(t) for V itself", linear_fraction_in_nagata({1, one}, *rings::full_valuation(z)), "");

  auto w1 = nagata_counterexample(*d23, vz, {one}, wz);
  t.check("<2,3>: witness found", w1 && w1->g == one && w1->in_family && !w1->in_nagata, w1 ? w1->g.to_string() : "none");
  if (w1) r.data["witness_semigroup"] = io::ratfunc_to_json(w1->phi);

  auto d37 = rings::monomial(catalog::plane_chain());
  ValuationFamily vp{MonomialValuation::standard(plane, 2)};
  auto y = GroupElement::of(plane, {1, 0});
  auto w2 = nagata_counterexample(*d37, vp, {y}, catalog::plane_window(-3, 3, -6, 6));
  t.check("plane example: witness found", w2 && w2->g == y && w2->in_family && !w2->in_nagata, w2 ? w2->g.to_string() : "none");
  if (w2) r.data["witness_plane"] = io::ratfunc_to_json(w2->phi);

  std::vector<GroupElement> cands;
  for (long k = -5; k <= 5; ++k) cands.push_back(GroupElement::of(z, {k}));
  auto w3 = nagata_counterexample(*rings::full_valuation(z), vz, cands, wz);
  t.check("valuation ring: no witness", !w3, w3 ? w3->g.to_string() : "none");
}

/// Exhaustive search over (U u {0})^n, used as an independent cross-check.
std::optional<std::vector<Rat>> exhaustive_units(const SemilocalDesc& a, const std::vector<Series>& xs) {
  std::vector<Rat> choices{0};
  for (const auto& u : a.units) choices.push_back(a.field.normalize(u));
  std::vector<std::size_t> pick(xs.size(), 0);
  while (true) {
    std::vector<Rat> d;
    for (auto p : pick) d.push_back(choices[p]);
    if (a.is_unit(combine(d, xs))) return d;
    std::size_t k = 0;
    while (k < pick.size() && ++pick[k] == choices.size()) pick[k++] = 0;
    if (k == pick.size()) return std::nullopt;
  }
}

Json deltas_json(const std::vector<Rat>& d) {
  Json out = Json::array();
  for (const auto& x : d) out.push_back(io::rat_to_json(x));
  return out;
}

void repro_lemma43(ReproReport& r) {
  Battery t(r);
  auto g = catalog::integer_plane();
  auto g3 = integer_lattice(3);
  auto mono = [&](long x, long y) { return Series::monomial(GroupElement::of(g, {x, y})); };
  auto mono3 = [&](long x, long y, long z) { return Series::monomial(GroupElement::of(g3, {x, y, z})); };
  auto along = [](const GroupPtr& group, std::size_t k) {
    std::vector<std::size_t> order(group->rank());
    std::iota(order.begin(), order.end(), 0);
    std::swap(order[0], order[k]);
    return MonomialValuation(group, order, 1);
  };

  struct Case {
    std::string name;
    SemilocalDesc a;
    std::vector<Series> xs;
  };
  std::vector<Case> cases{
      {"two valuations", {g, {along(g, 0), along(g, 1)}, {1}}, {mono(0, 1), mono(1, 0)}},
      {"one unit generator", {g, {along(g, 0), along(g, 1)}, {1}}, {add(mono(0, 0), mono(1, 1))}},
      {"three valuations",
       {g3, {along(g3, 0), along(g3, 1), along(g3, 2)}, {1, 2}},
       {mono3(0, 1, 1), mono3(1, 0, 1), mono3(1, 1, 0)}},
  };
  Json out = Json::object();
  for (const auto& c : cases) {
    t.guard(c.name, [&] {
      auto d = semilocal_unit_combination(c.a, c.xs);
      bool unit = c.a.is_unit(combine(d, c.xs));
      bool in_u = std::all_of(d.begin(), d.end(), [&](const Rat& x) {
        return x == 0 || std::find(c.a.units.begin(), c.a.units.end(), x) != c.a.units.end();
      });
      t.check(c.name + ": combination is a unit", unit && in_u, "");
      t.check(c.name + ": exhaustive search agrees", exhaustive_units(c.a, c.xs).has_value(), "");
      out[c.name] = deltas_json(d);
    });
  }
  r.data["deltas"] = out;
}

void repro_constr56(ReproReport& r) {
  Battery t(r);
  auto g = catalog::integer_plane();
  auto plane23 = monoids::union_of(
      g, {monoids::zero(g), monoids::region(g, {Constraint::eq(0), Constraint::ge(2)}),
          monoids::region(g, {Constraint::ge(1), Constraint::any()})});
  auto a = rings::monomial(plane23);
  ValuationFamily kr{MonomialValuation::standard(g, 2), MonomialValuation::standard(g, 1)};
  r.data["A"] = io::ring_to_json(*a);

  auto res1 = in_construction56(linear_fraction(GroupElement::of(g, {0, 2})), kr, *a);
  t.check("1/(t+X^(0,2)) certified", res1.status == MembershipStatus::Certified, to_string(res1.status));
  auto res2 = in_construction56(linear_fraction(GroupElement::of(g, {0, 1})), kr, *a);
  t.check("1/(t+X^(0,1)) in family but not certified", res2.in_family && res2.status == MembershipStatus::NotCertified,
          to_string(res2.status));
  auto x = Series::monomial(GroupElement::of(g, {0, 1}));
  RatFunc phi(TPoly(g, Field::Q(), {x}), TPoly(g, Field::Q(), {x, x}));
  auto res3 = in_construction56(phi, kr, *a);
  t.check("X/(Xt+X) certified", res3.status == MembershipStatus::Certified && res3.certificate &&
                                    res3.certificate->shift == GroupElement::of(g, {0, 1}),
          to_string(res3.status));
  RatFunc outside(TPoly(g, Field::Q(), {Series::constant(g, 1)}), TPoly(g, Field::Q(), {x}));
  auto res4 = in_construction56(outside, kr, *a);
  t.check("1/X not a member", res4.status == MembershipStatus::NotMember, to_string(res4.status));
}

}  // namespace

bool ReproReport::ok() const {
  return std::all_of(assertions.begin(), assertions.end(), [](const Assertion& a) { return a.pass; });
}

Json ReproReport::to_json() const {
  Json list = Json::array();
  for (const auto& a : assertions) list.push_back({{"name", a.name}, {"pass", a.pass}, {"detail", a.detail}});
  Json failed = Json::array();
  for (const auto& a : assertions)
    if (!a.pass) failed.push_back(a.name);
  return Json{{"example", id}, {"assertions", list}, {"failed", failed}, {"status", ok() ? "verified" : "mismatch"},
              {"data", data}};
}

const std::vector<std::string>& repro_ids() {
  static const std::vector<std::string> ids{"ex34", "ex37", "ex38", "ex314", "prop47", "lemma43", "constr56"};
  return ids;
}

ReproReport run_repro(const std::string& id) {
  static const std::map<std::string, void (*)(ReproReport&)> table{
      {"ex34", repro_gap},         {"ex37", repro_plane},     {"ex38", repro_dual},       {"ex314", repro_quadrant},
      {"prop47", repro_prop47},    {"lemma43", repro_lemma43}, {"constr56", repro_constr56},
  };
  auto it = table.find(id);
  if (it == table.end()) throw ParseError("unknown example id '" + id + "'");
  ReproReport r;
  r.id = id;
  it->second(r);
  return r;
}

}  // namespace mexcl
