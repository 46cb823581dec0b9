#include "mexcl/json_io.hpp"

#include "mexcl/errors.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace mexcl::io {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(where + ": missing \"" + key + "\"");
  return j.at(key);
}

std::string kind_of(const Json& j, const std::string& where) {
  const auto& k = field(j, "kind", where);
  if (!k.is_string()) throw ParseError(where + ": \"kind\" must be a string");
  return k.get<std::string>();
}

Int int_from_string(const std::string& s) {
  if (s.empty()) throw ParseError("empty integer");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw ParseError("bad integer '" + s + "'");
  for (std::size_t k = start; k < s.size(); ++k)
    if (s[k] < '0' || s[k] > '9') throw ParseError("bad integer '" + s + "'");
  return Int(s);
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) return int_from_string(j.get<std::string>());
  throw ParseError("expected an integer, got " + j.dump());
}

std::size_t index_from_json(const Json& j, const std::string& what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw ParseError(what + " must be a nonnegative integer");
  return j.get<std::size_t>();
}

Json bounds_to_json(const ComponentBounds& b, const RankOneSpec& spec) {
  Json j{{"lo", int_to_json(b.lo)}, {"hi", int_to_json(b.hi)}};
  if (spec.kind == ComponentKind::QuadraticIntegers) {
    j["qlo"] = int_to_json(b.qlo);
    j["qhi"] = int_to_json(b.qhi);
  }
  if (spec.kind == ComponentKind::Rationals) j["den"] = b.den;
  return j;
}

Json constraint_to_json(const Constraint& c, const RankOneSpec& spec) {
  static const char* ops[] = {"any", "=", "!=", ">", ">=", "<", "<="};
  if (c.op == ConstraintOp::In) return Json{{"op", "in"}, {"monoid", monoid_to_json(*c.monoid)}};
  Json j{{"op", ops[static_cast<int>(c.op)]}};
  if (c.op != ConstraintOp::Any) j["value"] = element_to_json(GroupElement(make_group({spec}), {c.value}))[0];
  return j;
}

Constraint constraint_from_json(const Json& j, const GroupPtr& group, std::size_t k) {
  auto op = field(j, "op", "constraint").get<std::string>();
  if (op == "any") return Constraint::any();
  auto comp = make_group({group->component(k)});
  if (op == "in") return Constraint::in(monoid_from_json(field(j, "monoid", "constraint"), comp));
  Coord v = element_from_json(Json::array({field(j, "value", "constraint")}), comp)[0];
  if (op == "=") return Constraint::eq(v);
  if (op == "!=") return Constraint::ne(v);
  if (op == ">") return Constraint::gt(v);
  if (op == ">=") return Constraint::ge(v);
  if (op == "<") return Constraint::lt(v);
  if (op == "<=") return Constraint::le(v);
  throw ParseError("unknown constraint op '" + op + "'");
}

TPoly tpoly_from_json(const Json& j, const GroupPtr& group, const Field& f) {
  if (!j.is_array()) throw ParseError("t-polynomial must be a list of series");
  std::vector<Series> coefs;
  for (const auto& c : j) coefs.push_back(series_from_json(c, group, f));
  return TPoly(group, f, std::move(coefs));
}

}  // namespace

Json parse_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(source + ": malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_text(buf.str(), path);
}

Json int_to_json(const Int& x) {
  if (x >= INT64_MIN && x <= INT64_MAX) return Json(x.convert_to<long long>());
  return Json(x.str());
}

Json rat_to_json(const Rat& x) {
  if (denominator(x) == 1) return int_to_json(numerator(x));
  return Json(numerator(x).str() + "/" + denominator(x).str());
}

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (!j.is_string()) throw ParseError("expected an exact number (integer or \"p/q\"), got " + j.dump());
  auto s = j.get<std::string>();
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(int_from_string(s));
  Int den = int_from_string(s.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + s + "'");
  return Rat(int_from_string(s.substr(0, slash)), den);
}

Json group_to_json(const GroupSpec& g) {
  Json comps = Json::array();
  for (const auto& c : g.components()) {
    switch (c.kind) {
      case ComponentKind::Integers: comps.push_back({{"kind", "Z"}}); break;
      case ComponentKind::Rationals: comps.push_back({{"kind", "Q"}}); break;
      case ComponentKind::QuadraticIntegers: comps.push_back({{"kind", "Zsqrt"}, {"d", c.d}}); break;
    }
  }
  return Json{{"components", comps}};
}

GroupPtr group_from_json(const Json& j) {
  const auto& comps = field(j, "components", "group");
  if (!comps.is_array() || comps.empty()) throw ParseError("group: \"components\" must be a nonempty list");
  std::vector<RankOneSpec> specs;
  for (const auto& c : comps) {
    auto k = kind_of(c, "group component");
    if (k == "Z")
      specs.push_back(RankOneSpec::Z());
    else if (k == "Q")
      specs.push_back(RankOneSpec::Q());
    else if (k == "Zsqrt")
      specs.push_back(RankOneSpec::Zsqrt(field(c, "d", "Zsqrt component").get<long>()));
    else
      throw ParseError("unsupported group component kind '" + k + "' (Z, Q or Zsqrt)");
  }
  return make_group(std::move(specs));
}

Json element_to_json(const GroupElement& g) {
  Json out = Json::array();
  for (std::size_t k = 0; k < g.rank(); ++k) {
    if (g.group()->component(k).kind == ComponentKind::QuadraticIntegers)
      out.push_back({{"p", rat_to_json(g[k].p)}, {"q", int_to_json(g[k].q)}});
    else
      out.push_back(rat_to_json(g[k].p));
  }
  return out;
}

GroupElement element_from_json(const Json& j, const GroupPtr& group) {
  Json arr = j.is_array() ? j : Json::array({j});
  if (arr.size() != group->rank())
    throw ParseError("element " + j.dump() + " has " + std::to_string(arr.size()) + " coordinates, group rank is " +
                     std::to_string(group->rank()));
  std::vector<Coord> coords;
  for (std::size_t k = 0; k < arr.size(); ++k) {
    const auto& c = arr[k];
    if (c.is_object())
      coords.emplace_back(rat_from_json(field(c, "p", "coordinate")), int_from_json(field(c, "q", "coordinate")));
    else
      coords.emplace_back(rat_from_json(c));
  }
  try {
    return GroupElement(group, std::move(coords));
  } catch (const Error& e) {
    throw ParseError(std::string("element ") + j.dump() + ": " + e.what());
  }
}

Json window_to_json(const Window& w) {
  Json b = Json::array();
  for (std::size_t k = 0; k < w.bounds().size(); ++k) b.push_back(bounds_to_json(w.bounds()[k], w.group()->component(k)));
  return Json{{"bounds", b}};
}

Window window_from_json(const Json& j, const GroupPtr& group) {
  if (j.is_string()) return parse_window(j.get<std::string>(), group);
  const auto& b = field(j, "bounds", "window");
  if (!b.is_array() || b.size() != group->rank()) throw ParseError("window needs one bound per component");
  std::vector<ComponentBounds> bounds;
  for (const auto& x : b) {
    ComponentBounds cb;
    cb.lo = int_from_json(field(x, "lo", "window"));
    cb.hi = int_from_json(field(x, "hi", "window"));
    if (x.contains("qlo")) cb.qlo = int_from_json(x.at("qlo"));
    if (x.contains("qhi")) cb.qhi = int_from_json(x.at("qhi"));
    if (x.contains("den")) cb.den = x.at("den").get<long>();
    bounds.push_back(cb);
  }
  return Window(group, std::move(bounds));
}

Window parse_window(const std::string& text, const GroupPtr& group) {
  auto fail = [&](const std::string& why) { return ParseError("window '" + text + "': " + why); };
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
  if (parts.size() == 1 && group->rank() > 1) parts.assign(group->rank(), parts[0]);
  if (parts.size() != group->rank()) throw fail("expected " + std::to_string(group->rank()) + " comma-separated bounds");
  auto range = [&](const std::string& r, Int& lo, Int& hi) {
    auto colon = r.find(':', 1);
    if (colon == std::string::npos) throw fail("bound '" + r + "' is not lo:hi");
    try {
      lo = int_from_string(r.substr(0, colon));
      hi = int_from_string(r.substr(colon + 1));
    } catch (const ParseError&) {
      throw fail("bound '" + r + "' is not lo:hi");
    }
  };
  std::vector<ComponentBounds> bounds;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    ComponentBounds cb;
    std::string p = parts[k];
    if (auto at = p.find('@'); at != std::string::npos) {
      cb.den = std::stol(p.substr(at + 1));
      p = p.substr(0, at);
    }
    std::string q;
    if (auto slash = p.find('/'); slash != std::string::npos) {
      q = p.substr(slash + 1);
      p = p.substr(0, slash);
    }
    range(p, cb.lo, cb.hi);
    if (!q.empty())
      range(q, cb.qlo, cb.qhi);
    else if (group->component(k).kind == ComponentKind::QuadraticIntegers) {
      cb.qlo = cb.lo;
      cb.qhi = cb.hi;
    }
    bounds.push_back(cb);
  }
  try {
    return Window(group, std::move(bounds));
  } catch (const Error& e) {
    throw fail(e.what());
  }
}

Json monoid_to_json(const MonoidExpr& s) {
  return std::visit(
      overloaded{
          [](const node::Empty&) { return Json{{"kind", "Empty"}}; },
          [](const node::Zero&) { return Json{{"kind", "Zero"}}; },
          [&](const node::Region& n) {
            Json c = Json::array();
            for (std::size_t k = 0; k < n.constraints.size(); ++k)
              c.push_back(constraint_to_json(n.constraints[k], s.group()->component(k)));
            return Json{{"kind", "Region"}, {"constraints", c}};
          },
          [](const node::Gap& n) { return Json{{"kind", "GapMonoid"}, {"a", element_to_json(n.a)}}; },
          [](const node::HalfLine& n) {
            return Json{{"kind", "HalfLine"}, {"a", element_to_json(n.a)}, {"stratum", n.stratum}};
          },
          [](const node::QuadrantCone& n) { return Json{{"kind", "QuadrantCone"}, {"component", n.component}}; },
          [](const node::Lemma310& n) {
            Json comps = Json::array();
            for (const auto& c : n.components) comps.push_back(monoid_to_json(c));
            Json j{{"kind", "Lemma310"}, {"a", element_to_json(n.a)}, {"components", comps}};
            if (n.s1star) j["s1star"] = monoid_to_json(*n.s1star);
            return j;
          },
          [](const node::Union& n) {
            Json m = Json::array();
            for (const auto& x : n.members) m.push_back(monoid_to_json(x));
            return Json{{"kind", "Union"}, {"members", m}};
          },
          [](const node::Shift& n) {
            return Json{{"kind", "Shift"}, {"base", monoid_to_json(n.base)}, {"by", element_to_json(n.by)}};
          },
          [](const node::Stratum& n) {
            return Json{{"kind", "Stratum"}, {"base", monoid_to_json(n.base)}, {"index", n.index}};
          },
          [](const node::Slice& n) {
            return Json{{"kind", "Slice"}, {"base", monoid_to_json(n.base)}, {"base_group", group_to_json(*n.base.group())}};
          },
          [](const node::RootClosure& n) {
            return Json{{"kind", "RootClosure"},
                        {"base", monoid_to_json(n.base)},
                        {"window", window_to_json(n.window)},
                        {"nmax", n.nmax}};
          },
          [](const node::Toggle& n) {
            return Json{{"kind", "Toggle"}, {"base", monoid_to_json(n.base)}, {"point", element_to_json(n.point)}};
          },
      },
      s.node().v);
}

MonoidExpr monoid_from_json(const Json& j, const GroupPtr& group) {
  auto k = kind_of(j, "monoid");
  auto sub = [&](const char* key) { return monoid_from_json(field(j, key, k), group); };
  auto elem = [&](const char* key) { return element_from_json(field(j, key, k), group); };
  try {
    if (k == "Empty") return monoids::empty(group);
    if (k == "Zero") return monoids::zero(group);
    if (k == "Region") {
      const auto& cs = field(j, "constraints", k);
      if (!cs.is_array() || cs.size() != group->rank()) throw ParseError("Region needs one constraint per component");
      std::vector<Constraint> c;
      for (std::size_t i = 0; i < cs.size(); ++i) c.push_back(constraint_from_json(cs[i], group, i));
      return monoids::region(group, std::move(c));
    }
    if (k == "GapMonoid" || k == "Gap") return monoids::gap(elem("a"));
    if (k == "HalfLine") return monoids::half_line(elem("a"), index_from_json(field(j, "stratum", k), "stratum"));
    if (k == "QuadrantCone") {
      std::size_t c = j.contains("component") ? index_from_json(j.at("component"), "component") : group->rank();
      return monoids::quadrant_cone(group, c);
    }
    if (k == "Lemma310") {
      std::vector<MonoidExpr> comps;
      for (const auto& c : field(j, "components", k)) comps.push_back(monoid_from_json(c, group));
      std::optional<MonoidExpr> star;
      if (j.contains("s1star") && !j.at("s1star").is_null()) star = sub("s1star");
      return monoids::lemma310(elem("a"), std::move(comps), std::move(star));
    }
    if (k == "Union") {
      std::vector<MonoidExpr> m;
      for (const auto& x : field(j, "members", k)) m.push_back(monoid_from_json(x, group));
      return monoids::union_of(group, std::move(m));
    }
    if (k == "Points") {
      std::vector<GroupElement> pts;
      for (const auto& x : field(j, "points", k)) pts.push_back(element_from_json(x, group));
      return monoids::points(group, pts);
    }
    if (k == "Shift") return monoids::shift(sub("base"), elem("by"));
    if (k == "Stratum") return monoids::stratum(sub("base"), index_from_json(field(j, "index", k), "index"));
    if (k == "Slice") {
      auto base_group = group_from_json(field(j, "base_group", k));
      auto s = monoids::slice(monoid_from_json(field(j, "base", k), base_group));
      if (!same_group(s.group(), group)) throw ParseError("Slice base_group does not extend the target group");
      return s;
    }
    if (k == "RootClosure")
      return monoids::root_closure(sub("base"), window_from_json(field(j, "window", k), group),
                                   field(j, "nmax", k).get<int>());
    if (k == "Toggle") return monoids::toggle(sub("base"), elem("point"));
  } catch (const ParseError&) {
    throw;
  } catch (const Json::exception& e) {
    throw ParseError(k + ": " + e.what());
  }
  throw ParseError("unknown monoid kind '" + k + "'");
}

Json series_to_json(const Series& f) {
  Json terms = Json::array();
  for (const auto& [g, c] : f.terms()) terms.push_back({{"exp", element_to_json(g)}, {"coef", rat_to_json(c)}});
  Json j{{"field", f.field().to_string()}, {"terms", terms}};
  j["trunc"] = f.trunc() ? element_to_json(*f.trunc()) : Json();
  return j;
}

Series series_from_json(const Json& j, const GroupPtr& group, const Field& default_field) {
  Field f = default_field;
  if (j.is_number_integer() || j.is_string()) return Series::constant(group, rat_from_json(j), f);
  if (j.contains("field")) f = Field::parse(j.at("field").get<std::string>());
  std::vector<Series::Term> terms;
  for (const auto& t : field(j, "terms", "series"))
    terms.emplace_back(element_from_json(field(t, "exp", "term"), group), rat_from_json(field(t, "coef", "term")));
  std::optional<GroupElement> trunc;
  if (j.contains("trunc") && !j.at("trunc").is_null()) trunc = element_from_json(j.at("trunc"), group);
  try {
    return Series(group, f, std::move(terms), std::move(trunc));
  } catch (const DomainError& e) {
    throw ParseError(std::string("series: ") + e.what());
  }
}

Json ring_to_json(const RingDesc& r) {
  return std::visit(overloaded{
                        [](const ring::MonomialRing& n) {
                          return Json{{"kind", "MonomialRing"}, {"monoid", monoid_to_json(n.s)}};
                        },
                        [](const ring::FullValuation&) { return Json{{"kind", "FullValuation"}}; },
                        [](const ring::LocalizedValuation& n) {
                          return Json{{"kind", "LocalizedValuation"}, {"keep", n.keep}};
                        },
                        [](const ring::Pullback& n) {
                          Json j{{"kind", "Pullback"}, {"top", ring_to_json(*n.top)}, {"base", ring_to_json(*n.base)}};
                          if (auto g = n.base->group()) j["base"]["group"] = group_to_json(*g);
                          return j;
                        },
                        [](const ring::FieldRing& n) {
                          Json j{{"kind", "Field"}};
                          j["minimal_extension"] = n.minimal_extension ? Json(*n.minimal_extension) : Json();
                          return j;
                        },
                    },
                    r.v);
}

RingPtr ring_from_json(const Json& j, const GroupPtr& parent) {
  auto k = kind_of(j, "ring");
  GroupPtr group = j.contains("group") ? group_from_json(j.at("group")) : parent;
  if (k == "MonomialRing") return rings::monomial(monoid_from_json(field(j, "monoid", k), group));
  if (k == "FullValuation") return rings::full_valuation(group);
  if (k == "LocalizedValuation") return rings::localized(group, index_from_json(field(j, "keep", k), "keep"));
  if (k == "Pullback") return rings::pullback(ring_from_json(field(j, "top", k), group), ring_from_json(field(j, "base", k), group));
  if (k == "Field") {
    std::optional<bool> flag;
    if (j.contains("minimal_extension") && !j.at("minimal_extension").is_null())
      flag = j.at("minimal_extension").get<bool>();
    return rings::field(flag);
  }
  throw ParseError("unknown ring kind '" + k + "'");
}

Json tpoly_to_json(const TPoly& f) {
  Json out = Json::array();
  for (const auto& c : f.coefficients()) out.push_back(series_to_json(c));
  return out;
}

Json ratfunc_to_json(const RatFunc& phi) { return Json{{"num", tpoly_to_json(phi.num)}, {"den", tpoly_to_json(phi.den)}}; }

RatFunc ratfunc_from_json(const Json& j, const GroupPtr& group, const Field& f) {
  return RatFunc(tpoly_from_json(field(j, "num", "ratfunc"), group, f), tpoly_from_json(field(j, "den", "ratfunc"), group, f));
}

Json valuation_to_json(const MonomialValuation& v) {
  Json order = Json::array();
  for (auto k : v.order()) order.push_back(k + 1);
  return Json{{"order", order}, {"keep", v.keep()}};
}

MonomialValuation valuation_from_json(const Json& j, const GroupPtr& group) {
  if (j.contains("kind")) return MonomialValuation::from_ring(*ring_from_json(j, group));
  std::vector<std::size_t> order;
  if (j.contains("order")) {
    for (const auto& x : j.at("order")) {
      auto k = index_from_json(x, "order entry");
      if (k < 1) throw ParseError("valuation order entries are 1-based");
      order.push_back(k - 1);
    }
  } else {
    for (std::size_t k = 0; k < group->rank(); ++k) order.push_back(k);
  }
  std::size_t keep = j.contains("keep") ? index_from_json(j.at("keep"), "keep") : group->rank();
  return MonomialValuation(group, std::move(order), keep);
}

std::string digest(const std::string& text) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace mexcl::io
