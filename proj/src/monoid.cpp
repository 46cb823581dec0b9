#include "mexcl/monoid.hpp"

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

MonoidExpr make(GroupPtr g, auto n) {
  return MonoidExpr(std::move(g), std::make_shared<const MonoidNode>(MonoidNode{std::move(n)}));
}

void require_group(const MonoidExpr& s, const GroupElement& g) {
  if (!same_group(s.group(), g.group()))
    throw SpecMismatch("element of " + g.group()->to_string() + " tested against a monoid over " +
                       s.group()->to_string());
}

GroupPtr rank_one_group(const RankOneSpec& spec) { return make_group({spec}); }

bool constraint_holds(const RankOneSpec& spec, const Constraint& c, const Coord& v) {
  switch (c.op) {
    case ConstraintOp::Any: return true;
    case ConstraintOp::In: return member(*c.monoid, GroupElement(c.monoid->group(), {v}));
    default: break;
  }
  int r = coord_compare(spec, v, c.value);
  switch (c.op) {
    case ConstraintOp::Eq: return r == 0;
    case ConstraintOp::Ne: return r != 0;
    case ConstraintOp::Gt: return r > 0;
    case ConstraintOp::Ge: return r >= 0;
    case ConstraintOp::Lt: return r < 0;
    case ConstraintOp::Le: return r <= 0;
    default: return false;
  }
}

bool admits_all_positive(const RankOneSpec& spec, const Constraint& c) {
  switch (c.op) {
    case ConstraintOp::Any: return true;
    case ConstraintOp::Gt:
    case ConstraintOp::Ne: return coord_sign(spec, c.value) <= 0;
    case ConstraintOp::Ge:
      if (spec.kind == ComponentKind::Integers) return c.value.p <= 1;
      return coord_sign(spec, c.value) <= 0;
    case ConstraintOp::In: return covers_stratum(*c.monoid, 1);
    default: return false;
  }
}

bool is_sign_constraint(const RankOneSpec& spec, const Constraint& c) {
  if (c.op == ConstraintOp::Any) return true;
  if (c.op == ConstraintOp::In) return false;
  return coord_sign(spec, c.value) == 0;
}


bool in_component(const node::Lemma310& n, std::size_t i, const GroupElement& g) {
  // g is known to lie in G^_i with i >= 2
  return member(n.components[i - 2], g);
}

bool lemma310_member(const node::Lemma310& n, const GroupElement& g) {
  int s = g.sign();
  if (s < 0) return false;
  if (s == 0) return true;
  std::size_t h = hat_index(g);
  if (h >= 2) return in_component(n, h, g);
  auto c = cmp(g, n.a);
  if (c > 0) return true;
  if (c == 0) return false;
  int first = coord_compare(g.group()->component(0), g[0], n.a[0]);
  if (first == 0) {
    GroupElement rest = n.a - g;  // positive, first coordinate 0
    return !in_component(n, hat_index(rest), rest);
  }
  return n.s1star && member(*n.s1star, g);
}

std::string pair_text(const GroupElement& g, const GroupElement& h) {
  return g.to_string() + " + " + h.to_string() + " = " + (g + h).to_string();
}

bool structural_family(const MonoidExpr& s, const GroupElement& a, const Window& window) {
  return std::visit(overloaded{
                        [&](const node::Gap& n) { return s.group()->rank() == 1 && n.a == a; },
                        [&](const node::Lemma310& n) {
                          return n.a == a && !validate_lemma310(n.a, n.components, n.s1star, window);
                        },
                        [](const auto&) { return false; },
                    },
                    s.node().v);
}

}  // namespace

MonoidExpr::MonoidExpr(GroupPtr group, std::shared_ptr<const MonoidNode> node)
    : group_(std::move(group)), node_(std::move(node)) {
  if (!group_ || !node_) throw SpecMismatch("monoid expression needs a group and a node");
}

MonoidExpr::Kind MonoidExpr::kind() const { return static_cast<Kind>(node_->v.index()); }

namespace monoids {

MonoidExpr empty(GroupPtr g) { return make(std::move(g), node::Empty{}); }
MonoidExpr zero(GroupPtr g) { return make(std::move(g), node::Zero{}); }

MonoidExpr region(GroupPtr g, std::vector<Constraint> constraints) {
  if (constraints.size() != g->rank()) throw SpecMismatch("region needs one constraint per coordinate");
  for (std::size_t k = 0; k < constraints.size(); ++k) {
    const auto& c = constraints[k];
    if (c.op == ConstraintOp::In) {
      if (!c.monoid || !same_group(c.monoid->group(), rank_one_group(g->component(k))))
        throw SpecMismatch("'in' constraint must name a monoid over component " + std::to_string(k + 1));
    } else if (c.op != ConstraintOp::Any && !coord_fits(g->component(k), c.value)) {
      throw SpecMismatch("constraint value does not lie in component " + std::to_string(k + 1));
    }
  }
  return make(std::move(g), node::Region{std::move(constraints)});
}

MonoidExpr full_cone(GroupPtr g) {
  std::size_t n = g->rank();
  return region(std::move(g), std::vector<Constraint>(n, Constraint::any()));
}

MonoidExpr gap(GroupElement a) {
  if (a.sign() <= 0) throw DomainError("gap monoid needs a > 0");
  auto g = a.group();
  return make(std::move(g), node::Gap{std::move(a)});
}

MonoidExpr half_line(GroupElement a, std::size_t stratum) {
  if (stratum < 1 || stratum > a.rank()) throw DomainError("half line stratum out of range");
  auto g = a.group();
  return make(std::move(g), node::HalfLine{std::move(a), stratum});
}

MonoidExpr quadrant_cone(GroupPtr g, std::size_t component) {
  if (component < 1 || component > g->rank()) throw DomainError("quadrant cone component out of range");
  return make(std::move(g), node::QuadrantCone{component});
}

MonoidExpr lemma310(GroupElement a, std::vector<MonoidExpr> components, std::optional<MonoidExpr> s1star) {
  auto g = a.group();
  if (g->rank() < 2) throw DomainError("the S_1 construction needs rank >= 2");
  if (components.size() != g->rank() - 1)
    throw SpecMismatch("expected " + std::to_string(g->rank() - 1) + " components S_2..S_n");
  for (const auto& c : components)
    if (!same_group(c.group(), g)) throw SpecMismatch("component over a different group");
  if (s1star && !same_group(s1star->group(), g)) throw SpecMismatch("S1* over a different group");
  if (a.sign() <= 0 || hat_index(a) != 1) throw DomainError("a must lie in G^_1 (a_1 > 0)");
  return make(std::move(g), node::Lemma310{std::move(a), std::move(components), std::move(s1star)});
}

MonoidExpr union_of(GroupPtr g, std::vector<MonoidExpr> members) {
  for (const auto& m : members)
    if (!same_group(m.group(), g)) throw SpecMismatch("union member over a different group");
  return make(std::move(g), node::Union{std::move(members)});
}

MonoidExpr shift(MonoidExpr base, GroupElement by) {
  if (!same_group(base.group(), by.group())) throw SpecMismatch("shift element over a different group");
  auto g = base.group();
  return make(std::move(g), node::Shift{std::move(base), std::move(by)});
}

MonoidExpr stratum(MonoidExpr base, std::size_t index) {
  if (index < 1 || index > base.group()->rank()) throw DomainError("stratum index out of range");
  auto g = base.group();
  return make(std::move(g), node::Stratum{std::move(base), index});
}

MonoidExpr slice(MonoidExpr base) {
  auto g = tail_group(base.group());
  return make(std::move(g), node::Slice{std::move(base)});
}

MonoidExpr root_closure(MonoidExpr base, Window window, int nmax) {
  if (nmax < 1) throw DomainError("nmax must be >= 1");
  if (!same_group(base.group(), window.group())) throw SpecMismatch("window over a different group");
  auto g = base.group();
  return make(std::move(g), node::RootClosure{std::move(base), std::move(window), nmax});
}

MonoidExpr toggle(MonoidExpr base, GroupElement point) {
  if (!same_group(base.group(), point.group())) throw SpecMismatch("toggle point over a different group");
  auto g = base.group();
  return make(std::move(g), node::Toggle{std::move(base), std::move(point)});
}

MonoidExpr points(GroupPtr g, const std::vector<GroupElement>& pts) {
  std::vector<MonoidExpr> parts;
  for (const auto& p : pts) {
    std::vector<Constraint> c;
    for (const auto& v : p.coords()) c.push_back(Constraint::eq(v));
    parts.push_back(region(g, std::move(c)));
  }
  return union_of(std::move(g), std::move(parts));
}

}  // namespace monoids

bool member(const MonoidExpr& s, const GroupElement& g) {
  require_group(s, g);
  return std::visit(
      overloaded{
          [](const node::Empty&) { return false; },
          [&](const node::Zero&) { return g.is_zero(); },
          [&](const node::Region& n) {
            if (g.sign() < 0) return false;
            const auto& spec = *g.group();
            for (std::size_t k = 0; k < n.constraints.size(); ++k)
              if (!constraint_holds(spec.component(k), n.constraints[k], g[k])) return false;
            return true;
          },
          [&](const node::Gap& n) {
            if (g.is_zero()) return true;
            auto c = cmp(g, n.a);
            if (c > 0) return true;
            return c < 0 && scalar_mul(2, g) > n.a;
          },
          [&](const node::HalfLine& n) { return g.sign() > 0 && hat_index(g) == n.stratum && g > n.a; },
          [&](const node::QuadrantCone& n) {
            for (std::size_t k = 0; k < g.rank(); ++k) {
              if (k + 1 == n.component) {
                if (g[k].p < 0 || g[k].q < 0) return false;
              } else if (g[k].p != 0 || g[k].q != 0) {
                return false;
              }
            }
            return true;
          },
          [&](const node::Lemma310& n) { return lemma310_member(n, g); },
          [&](const node::Union& n) {
            return std::any_of(n.members.begin(), n.members.end(),
                               [&](const MonoidExpr& m) { return member(m, g); });
          },
          [&](const node::Shift& n) {
            if (member(n.base, g)) return true;
            return g.sign() >= 0 && member(n.base, g - n.by);
          },
          [&](const node::Stratum& n) {
            if (g.sign() <= 0) return false;
            return hat_index(g) == n.index && member(n.base, g);
          },
          [&](const node::Slice& n) { return member(n.base, g.prepend_zeros(n.base.group())); },
          [&](const node::RootClosure& n) {
            if (member(n.base, g)) return true;
            if (g.sign() < 0 || !n.window.contains(g)) return false;
            for (int k = 2; k <= n.nmax; ++k)
              if (member(n.base, scalar_mul(k, g))) return true;
            return false;
          },
          [&](const node::Toggle& n) { return (g == n.point) != member(n.base, g); },
      },
      s.node().v);
}

MonoidExpr decompose(const MonoidExpr& s, std::size_t i) {
  if (i < 1 || i > s.group()->rank())
    throw DomainError("decompose index " + std::to_string(i) + " outside 1.." + std::to_string(s.group()->rank()));
  if (s.kind() == MonoidExpr::Kind::Zero || s.kind() == MonoidExpr::Kind::Empty) return monoids::empty(s.group());
  return monoids::stratum(s, i);
}

bool covers_stratum(const MonoidExpr& s, std::size_t i) {
  return std::visit(
      overloaded{
          [&](const node::Region& n) {
            const auto& spec = *s.group();
            for (std::size_t k = 0; k < n.constraints.size(); ++k) {
              const auto& c = n.constraints[k];
              if (k + 1 < i) {
                if (!constraint_holds(spec.component(k), c, Coord())) return false;
              } else if (k + 1 == i) {
                if (!admits_all_positive(spec.component(k), c)) return false;
              } else if (c.op != ConstraintOp::Any) {
                return false;
              }
            }
            return true;
          },
          [&](const node::HalfLine& n) {
            if (n.stratum != i) return false;
            return n.a.sign() <= 0 || hat_index(n.a) > i;
          },
          [&](const node::Lemma310& n) { return i >= 2 && covers_stratum(n.components[i - 2], i); },
          [&](const node::Union& n) {
            return std::any_of(n.members.begin(), n.members.end(),
                               [&](const MonoidExpr& m) { return covers_stratum(m, i); });
          },
          [&](const node::Shift& n) { return covers_stratum(n.base, i); },
          [&](const node::Stratum& n) { return n.index == i && covers_stratum(n.base, i); },
          [&](const node::Slice& n) { return covers_stratum(n.base, i + 1); },
          [&](const node::RootClosure& n) { return covers_stratum(n.base, i); },
          [](const auto&) { return false; },
      },
      s.node().v);
}

bool is_full_cone(const MonoidExpr& s) {
  if (!member(s, GroupElement::zero(s.group()))) return false;
  for (std::size_t i = 1; i <= s.group()->rank(); ++i)
    if (!covers_stratum(s, i)) return false;
  return true;
}

std::vector<GroupElement> members_in(const MonoidExpr& s, const Window& window) {
  auto all = window.enumerate();
  std::vector<char> in(all.size());
  kernels::tabulate(all.size(), in, [&](std::size_t i) -> char { return member(s, all[i]); }, default_exec());
  std::vector<GroupElement> out;
  for (std::size_t i = 0; i < all.size(); ++i)
    if (in[i]) out.push_back(all[i]);
  return out;
}

std::optional<GroupElement> first_difference(const MonoidExpr& a, const MonoidExpr& b, const Window& window) {
  auto all = window.enumerate();
  auto i = kernels::find_first(all.size(), [&](std::size_t k) { return member(a, all[k]) != member(b, all[k]); },
                               default_exec());
  if (i == kernels::npos) return std::nullopt;
  return all[i];
}

SubmonoidReport is_submonoid(const MonoidExpr& s, const Window& window, Exec exec) {
  SubmonoidReport rep;
  rep.window = window;
  if (!member(s, GroupElement::zero(s.group()))) {
    rep.pass = false;
    rep.zero_missing = true;
    return rep;
  }
  auto all = window.enumerate();
  std::vector<char> in(all.size());
  kernels::tabulate(all.size(), in, [&](std::size_t i) -> char { return member(s, all[i]); }, exec);
  std::vector<GroupElement> m;
  for (std::size_t i = 0; i < all.size(); ++i)
    if (in[i]) m.push_back(all[i]);

  auto bad = [&](const GroupElement& x, const GroupElement& y) {
    auto sum = x + y;
    return window.contains(sum) && !member(s, sum);
  };

  auto row = kernels::find_first(
      m.size(),
      [&](std::size_t i) {
        for (std::size_t j = i + 1; j < m.size(); ++j)
          if (bad(m[i], m[j])) return true;
        return false;
      },
      exec);
  if (row != kernels::npos) {
    for (std::size_t j = row + 1; j < m.size(); ++j) {
      if (bad(m[row], m[j])) {
        rep.pass = false;
        rep.g = m[row];
        rep.h = m[j];
        return rep;
      }
    }
  }
  auto diag = kernels::find_first(m.size(), [&](std::size_t i) { return bad(m[i], m[i]); }, exec);
  if (diag != kernels::npos) {
    rep.pass = false;
    rep.g = m[diag];
    rep.h = m[diag];
  }
  return rep;
}

std::string to_string(const SubmonoidReport& r) {
  if (r.pass) return "closed on " + r.window.to_string();
  if (r.zero_missing) return "0 not in S";
  return pair_text(*r.g, *r.h) + " not in S";
}

std::string to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::RefutedWithWitness: return "refuted";
    case VerdictStatus::VerifiedOnWindow: return "verified_on_window";
    case VerdictStatus::VerifiedStructurally: return "verified_structurally";
  }
  return "?";
}

MaxExclVerdict check_maxexcl(const MonoidExpr& s, const GroupElement& a, const Window& window, Exec exec) {
  require_group(s, a);
  if (a.sign() <= 0) throw PreconditionError("the excluded element must be positive, got " + a.to_string());
  if (member(s, a)) throw PreconditionError("a = " + a.to_string() + " lies in S; it must be excluded");

  MaxExclVerdict v;
  v.a = a;
  v.window = window.widened_to(GroupElement::zero(a.group())).widened_to(a);
  auto all = v.window.enumerate();
  auto mid = half(a);

  auto violation = [&](std::size_t i) {
    const auto& g = all[i];
    if (mid && g == *mid) return false;
    bool in_g = member(s, g);
    if (in_g == member(s, a - g)) return true;
    return !in_g && g > a;
  };
  auto i = kernels::find_first(all.size(), violation, exec);
  if (i != kernels::npos) {
    const auto& g = all[i];
    bool in_g = member(s, g), in_rest = member(s, a - g);
    v.status = VerdictStatus::RefutedWithWitness;
    v.witness = g;
    if (in_g && in_rest)
      v.reason = "g and a-g both in S";
    else if (!in_g && !in_rest)
      v.reason = "neither g nor a-g in S";
    else
      v.reason = "g > a but g not in S";
    return v;
  }
  v.status = structural_family(s, a, v.window) ? VerdictStatus::VerifiedStructurally : VerdictStatus::VerifiedOnWindow;
  return v;
}

ClosureResult closure(const MonoidExpr& s, const Window& window, int nmax) {
  if (nmax < 1) throw DomainError("nmax must be >= 1");
  auto generic = [&]() { return ClosureResult{monoids::root_closure(s, window, nmax), false}; };
  return std::visit(
      overloaded{
          [&](const node::Empty&) { return ClosureResult{s, true}; },
          [&](const node::Zero&) { return ClosureResult{s, true}; },
          [&](const node::QuadrantCone&) { return ClosureResult{s, true}; },
          [&](const node::Gap&) {
            if (s.group()->rank() == 1) return ClosureResult{monoids::full_cone(s.group()), true};
            return generic();
          },
          [&](const node::Region& n) {
            const auto& spec = *s.group();
            for (std::size_t k = 0; k < n.constraints.size(); ++k)
              if (!is_sign_constraint(spec.component(k), n.constraints[k])) return generic();
            return ClosureResult{s, true};
          },
          [&](const node::HalfLine& n) {
            // every rank-one component is archimedean
            if (n.a.sign() <= 0 || hat_index(n.a) >= n.stratum)
              return ClosureResult{monoids::half_line(GroupElement::zero(s.group()), n.stratum), true};
            return ClosureResult{monoids::empty(s.group()), true};
          },
          [&](const node::Lemma310& n) {
            std::vector<MonoidExpr> parts{monoids::zero(s.group()),
                                          monoids::half_line(GroupElement::zero(s.group()), 1)};
            bool structural = true;
            for (std::size_t i = 0; i < n.components.size(); ++i) {
              auto c = closure(n.components[i], window, nmax);
              structural = structural && c.structural;
              parts.push_back(monoids::stratum(c.expr, i + 2));
            }
            return ClosureResult{monoids::union_of(s.group(), std::move(parts)), structural};
          },
          [&](const node::Union& n) {
            std::vector<MonoidExpr> parts;
            bool structural = true;
            for (const auto& m : n.members) {
              auto c = closure(m, window, nmax);
              structural = structural && c.structural;
              parts.push_back(c.expr);
            }
            return ClosureResult{monoids::union_of(s.group(), std::move(parts)), structural};
          },
          [&](const node::Stratum& n) {
            auto c = closure(n.base, window, nmax);
            return ClosureResult{monoids::stratum(c.expr, n.index), c.structural};
          },
          [&](const auto&) { return generic(); },
      },
      s.node().v);
}

std::optional<Lemma310Failure> validate_lemma310(const GroupElement& a, const std::vector<MonoidExpr>& components,
                                                 const std::optional<MonoidExpr>& s1star, const Window& window) {
  const auto& G = a.group();
  if (G->rank() < 2) return Lemma310Failure{"the construction needs rank >= 2", {}, {}};
  if (components.size() != G->rank() - 1)
    return Lemma310Failure{"expected " + std::to_string(G->rank() - 1) + " components S_2..S_n", {}, {}};
  if (a.sign() <= 0 || hat_index(a) != 1) return Lemma310Failure{"a must lie in G^_1", a, {}};
  if (!s1star && !(G->component(0).kind == ComponentKind::Integers && a[0].p == 1))
    return Lemma310Failure{"S1* may be omitted only when G_1 = Z and a_1 = 1", a, {}};

  auto all = window.enumerate();
  const std::size_t n = G->rank();
  std::vector<std::vector<GroupElement>> strata(n + 1);
  for (const auto& g : all) {
    for (std::size_t i = 2; i <= n; ++i) {
      if (!member(components[i - 2], g) || g.is_zero()) continue;
      if (g.sign() < 0 || hat_index(g) != i)
        return Lemma310Failure{"S_" + std::to_string(i) + " is not contained in G^_" + std::to_string(i), g, {}};
      strata[i].push_back(g);
    }
  }
  for (std::size_t i = 2; i <= n; ++i) {
    for (std::size_t j = i; j <= n; ++j) {
      for (const auto& g : strata[i]) {
        for (const auto& h : strata[j]) {
          if (!member(components[i - 2], g + h))
            return Lemma310Failure{"S_" + std::to_string(i) + " + S_" + std::to_string(j) + " not inside S_" +
                                       std::to_string(i) + ": " + pair_text(g, h),
                                   g, h};
        }
      }
    }
  }

  if (!s1star) return std::nullopt;

  auto built = monoids::lemma310(a, components, s1star);
  const auto& spec1 = G->component(0);
  auto in_low = [&](const GroupElement& g) {
    return g.sign() > 0 && hat_index(g) == 1 && coord_compare(spec1, g[0], a[0]) < 0;
  };
  auto mid = half(a);
  std::vector<GroupElement> star;
  for (const auto& g : all) {
    bool in = member(*s1star, g);
    if (in && !in_low(g)) return Lemma310Failure{"S1* leaves {g in G^_1 : g_1 < a_1}", g, {}};
    if (in) star.push_back(g);
    if (in_low(g) && !(mid && g == *mid) && in == member(*s1star, a - g))
      return Lemma310Failure{"S1* fails g in S1* <=> a-g not in S1*", g, {}};
  }
  for (const auto& g : star)
    for (const auto& h : star)
      if (!member(built, g + h)) return Lemma310Failure{"S1* + S1* not inside S_1: " + pair_text(g, h), g, h};
  for (std::size_t j = 2; j <= n; ++j)
    for (const auto& g : strata[j])
      for (const auto& h : star)
        if (!member(*s1star, g + h))
          return Lemma310Failure{"S_" + std::to_string(j) + " + S1* not inside S1*: " + pair_text(g, h), g, h};
  return std::nullopt;
}

MonoidExpr construct_S1(const GroupElement& a, const std::vector<MonoidExpr>& components,
                        const std::optional<MonoidExpr>& s1star, const Window& window) {
  if (auto f = validate_lemma310(a, components, s1star, window)) throw HypothesisError(f->reason);
  return monoids::lemma310(a, components, s1star);
}

bool generates_group(const MonoidExpr& s, const Window& window) {
  auto all = window.enumerate();
  auto in_s = members_in(s, window);
  auto missing = kernels::find_first(
      all.size(),
      [&](std::size_t i) {
        const auto& g = all[i];
        if (g.sign() <= 0) return false;
        return std::none_of(in_s.begin(), in_s.end(), [&](const GroupElement& x) { return member(s, g + x); });
      },
      default_exec());
  return missing == kernels::npos;
}

}  // namespace mexcl
