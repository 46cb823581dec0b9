#include "mexcl/ordered_group.hpp"

#include "mexcl/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace mexcl {

namespace {

bool is_squarefree(long d) {
  for (long f = 2; f * f <= d; ++f)
    if (d % (f * f) == 0) return false;
  return true;
}

Int floor_rat(const Rat& r) {
  Int n = numerator(r), d = denominator(r);
  Int q = n / d;
  if (n < 0 && q * d != n) --q;
  return q;
}

Int ceil_rat(const Rat& r) { return -floor_rat(-r); }

void require_same(const GroupElement& x, const GroupElement& y) {
  if (!same_group(x.group(), y.group()))
    throw SpecMismatch("elements belong to different groups: " +
                       (x.group() ? x.group()->to_string() : "<none>") + " vs " +
                       (y.group() ? y.group()->to_string() : "<none>"));
}

}  // namespace

RankOneSpec RankOneSpec::Zsqrt(long d) {
  if (d < 2 || !is_squarefree(d))
    throw SpecMismatch("Z[sqrt d] needs a squarefree d >= 2, got " + std::to_string(d));
  return {ComponentKind::QuadraticIntegers, d};
}

std::string RankOneSpec::to_string() const {
  switch (kind) {
    case ComponentKind::Integers: return "Z";
    case ComponentKind::Rationals: return "Q";
    case ComponentKind::QuadraticIntegers: return "Z[sqrt" + std::to_string(d) + "]";
  }
  return "?";
}

GroupSpec::GroupSpec(std::vector<RankOneSpec> components) : components_(std::move(components)) {
  if (components_.empty()) throw SpecMismatch("a group needs rank >= 1");
  for (const auto& c : components_)
    if (c.kind == ComponentKind::QuadraticIntegers) RankOneSpec::Zsqrt(c.d);
}

std::string GroupSpec::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) s += "+";
    s += components_[i].to_string();
  }
  return s;
}

GroupPtr make_group(std::vector<RankOneSpec> components) {
  return std::make_shared<const GroupSpec>(std::move(components));
}

GroupPtr integer_lattice(std::size_t rank) {
  return make_group(std::vector<RankOneSpec>(rank, RankOneSpec::Z()));
}

GroupPtr tail_group(const GroupPtr& g, std::size_t drop) {
  if (drop >= g->rank()) throw DomainError("tail of a group must keep at least one component");
  return make_group({g->components().begin() + static_cast<long>(drop), g->components().end()});
}

GroupPtr head_group(const GroupPtr& g, std::size_t keep) {
  if (keep == 0 || keep > g->rank()) throw DomainError("head size out of range");
  if (keep == g->rank()) return g;
  return make_group({g->components().begin(), g->components().begin() + static_cast<long>(keep)});
}

bool same_group(const GroupPtr& a, const GroupPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

int quadratic_sign(const Rat& p, const Int& q, long d) {
  int sp = p.sign(), sq = q.sign();
  if (sq == 0) return sp;
  if (sp == 0 || sp == sq) return sq;
  // Opposite signs: |p| vs |q| sqrt(d), i.e. p^2 vs d q^2. Never equal for
  // squarefree d and q != 0.
  Rat lhs = p * p;
  Rat rhs = Rat(Int(d) * q * q);
  int c = lhs > rhs ? 1 : -1;
  return sp > 0 ? c : -c;
}

int coord_sign(const RankOneSpec& spec, const Coord& c) {
  if (spec.kind == ComponentKind::QuadraticIntegers) return quadratic_sign(c.p, c.q, spec.d);
  return c.p.sign();
}

int coord_compare(const RankOneSpec& spec, const Coord& x, const Coord& y) {
  if (x.q == y.q) return x.p < y.p ? -1 : (x.p > y.p ? 1 : 0);
  return quadratic_sign(x.p - y.p, x.q - y.q, spec.d);
}

bool coord_fits(const RankOneSpec& spec, const Coord& c) {
  switch (spec.kind) {
    case ComponentKind::Integers: return c.q == 0 && denominator(c.p) == 1;
    case ComponentKind::Rationals: return c.q == 0;
    case ComponentKind::QuadraticIntegers: return denominator(c.p) == 1;
  }
  return false;
}

std::string coord_to_string(const RankOneSpec& spec, const Coord& c) {
  std::ostringstream os;
  if (spec.kind != ComponentKind::QuadraticIntegers) {
    os << c.p;
    return os.str();
  }
  if (c.q == 0) {
    os << c.p;
  } else if (c.p == 0) {
    os << c.q << "r" << spec.d;
  } else {
    os << c.p << (c.q > 0 ? "+" : "") << c.q << "r" << spec.d;
  }
  return os.str();
}

GroupElement::GroupElement(GroupPtr group, std::vector<Coord> coords)
    : group_(std::move(group)), coords_(std::move(coords)) {
  if (!group_) throw SpecMismatch("element without a group");
  if (coords_.size() != group_->rank())
    throw SpecMismatch("element has " + std::to_string(coords_.size()) +
                       " coordinates, group rank is " + std::to_string(group_->rank()));
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (!coord_fits(group_->component(i), coords_[i]))
      throw SpecMismatch("coordinate " + std::to_string(i + 1) + " does not lie in " +
                         group_->component(i).to_string());
}

GroupElement GroupElement::zero(GroupPtr group) {
  std::size_t n = group->rank();
  return GroupElement(std::move(group), std::vector<Coord>(n));
}

GroupElement GroupElement::of(GroupPtr group, std::initializer_list<long> values) {
  std::vector<Coord> c;
  c.reserve(values.size());
  for (long v : values) c.emplace_back(v);
  return GroupElement(std::move(group), std::move(c));
}

GroupElement GroupElement::unit(GroupPtr group, std::size_t i) {
  std::vector<Coord> c(group->rank());
  c.at(i) = Coord(1);
  return GroupElement(std::move(group), std::move(c));
}

bool GroupElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](const Coord& c) { return c.p == 0 && c.q == 0; });
}

int GroupElement::sign() const {
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (int s = coord_sign(group_->component(i), coords_[i])) return s;
  return 0;
}

GroupElement GroupElement::head(std::size_t k) const {
  return GroupElement(head_group(group_, k), {coords_.begin(), coords_.begin() + static_cast<long>(k)});
}

GroupElement GroupElement::tail(std::size_t drop) const {
  return GroupElement(tail_group(group_, drop), {coords_.begin() + static_cast<long>(drop), coords_.end()});
}

GroupElement GroupElement::prepend_zeros(const GroupPtr& larger) const {
  if (larger->rank() < rank()) throw SpecMismatch("target group is smaller");
  std::size_t pad = larger->rank() - rank();
  std::vector<Coord> c(pad);
  c.insert(c.end(), coords_.begin(), coords_.end());
  GroupElement out(larger, std::move(c));
  if (pad && !same_group(tail_group(larger, pad), group_))
    throw SpecMismatch("target group tail differs from " + group_->to_string());
  return out;
}

std::string GroupElement::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ",";
    s += coord_to_string(group_->component(i), coords_[i]);
  }
  return s + ")";
}

std::strong_ordering cmp(const GroupElement& x, const GroupElement& y) {
  require_same(x, y);
  const auto& spec = *x.group();
  for (std::size_t i = 0; i < x.rank(); ++i) {
    int c = coord_compare(spec.component(i), x[i], y[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

GroupElement operator+(const GroupElement& x, const GroupElement& y) {
  require_same(x, y);
  std::vector<Coord> c(x.rank());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = Coord(x[i].p + y[i].p, x[i].q + y[i].q);
  return GroupElement(x.group(), std::move(c));
}

GroupElement operator-(const GroupElement& x, const GroupElement& y) {
  require_same(x, y);
  std::vector<Coord> c(x.rank());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = Coord(x[i].p - y[i].p, x[i].q - y[i].q);
  return GroupElement(x.group(), std::move(c));
}

GroupElement operator-(const GroupElement& x) {
  std::vector<Coord> c(x.rank());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = Coord(-x[i].p, Int(-x[i].q));
  return GroupElement(x.group(), std::move(c));
}

GroupElement scalar_mul(const Int& n, const GroupElement& x) {
  std::vector<Coord> c(x.rank());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = Coord(x[i].p * Rat(n), Int(x[i].q * n));
  return GroupElement(x.group(), std::move(c));
}

std::size_t hat_index(const GroupElement& g) {
  for (std::size_t i = 0; i < g.rank(); ++i) {
    int s = coord_sign(g.group()->component(i), g[i]);
    if (s < 0) throw DomainError("hat_index of negative element " + g.to_string());
    if (s > 0) return i + 1;
  }
  return 0;
}

std::optional<GroupElement> half(const GroupElement& x) {
  std::vector<Coord> c(x.rank());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto& spec = x.group()->component(i);
    Rat p = x[i].p / 2;
    if (spec.kind == ComponentKind::Rationals) {
      c[i] = Coord(p);
      continue;
    }
    if (denominator(p) != 1 || x[i].q % 2 != 0) return std::nullopt;
    c[i] = Coord(p, Int(x[i].q / 2));
  }
  return GroupElement(x.group(), std::move(c));
}

Window::Window(GroupPtr group, std::vector<ComponentBounds> bounds)
    : group_(std::move(group)), bounds_(std::move(bounds)) {
  if (!group_ || bounds_.size() != group_->rank())
    throw SpecMismatch("window needs one bounds entry per component");
  for (const auto& b : bounds_) {
    if (b.lo > b.hi || b.qlo > b.qhi) throw DomainError("window bounds must satisfy lo <= hi");
    if (b.den < 1) throw DomainError("window denominator must be positive");
  }
}

Window Window::cube(GroupPtr group, long lo, long hi) {
  std::vector<ComponentBounds> b;
  for (const auto& c : group->components()) {
    ComponentBounds cb{lo, hi, 0, 0, 1};
    if (c.kind == ComponentKind::QuadraticIntegers) {
      cb.qlo = lo;
      cb.qhi = hi;
    }
    b.push_back(cb);
  }
  return Window(std::move(group), std::move(b));
}

bool Window::contains(const GroupElement& g) const {
  if (!same_group(g.group(), group_)) throw SpecMismatch("element and window in different groups");
  for (std::size_t i = 0; i < bounds_.size(); ++i) {
    const auto& b = bounds_[i];
    const auto& c = g[i];
    switch (group_->component(i).kind) {
      case ComponentKind::Integers:
        if (c.p < Rat(b.lo) || c.p > Rat(b.hi)) return false;
        break;
      case ComponentKind::Rationals:
        if (c.p < Rat(b.lo) || c.p > Rat(b.hi)) return false;
        if (denominator(c.p * Rat(b.den)) != 1) return false;
        break;
      case ComponentKind::QuadraticIntegers:
        if (c.p < Rat(b.lo) || c.p > Rat(b.hi) || c.q < b.qlo || c.q > b.qhi) return false;
        break;
    }
  }
  return true;
}

Window Window::widened_to(const GroupElement& g) const {
  if (!same_group(g.group(), group_)) throw SpecMismatch("element and window in different groups");
  auto b = bounds_;
  for (std::size_t i = 0; i < b.size(); ++i) {
    const auto& c = g[i];
    b[i].lo = std::min(b[i].lo, floor_rat(c.p));
    b[i].hi = std::max(b[i].hi, ceil_rat(c.p));
    b[i].qlo = std::min(b[i].qlo, c.q);
    b[i].qhi = std::max(b[i].qhi, c.q);
    if (group_->component(i).kind == ComponentKind::Rationals) {
      long dd = static_cast<long>(denominator(c.p));
      b[i].den = std::lcm(b[i].den, dd);
    }
  }
  return Window(group_, std::move(b));
}

std::size_t Window::size() const {
  std::size_t n = 1;
  for (std::size_t i = 0; i < bounds_.size(); ++i) {
    const auto& b = bounds_[i];
    auto span = static_cast<std::size_t>(b.hi - b.lo) + 1;
    if (group_->component(i).kind == ComponentKind::Rationals)
      span = static_cast<std::size_t>(b.hi - b.lo) * static_cast<std::size_t>(b.den) + 1;
    if (group_->component(i).kind == ComponentKind::QuadraticIntegers)
      span *= static_cast<std::size_t>(b.qhi - b.qlo) + 1;
    n *= span;
  }
  return n;
}

std::vector<GroupElement> Window::enumerate() const {
  std::vector<std::vector<Coord>> axes;
  for (std::size_t i = 0; i < bounds_.size(); ++i) {
    const auto& b = bounds_[i];
    const auto& spec = group_->component(i);
    std::vector<Coord> axis;
    switch (spec.kind) {
      case ComponentKind::Integers:
        for (Int v = b.lo; v <= b.hi; ++v) axis.emplace_back(Rat(v));
        break;
      case ComponentKind::Rationals:
        for (Int k = b.lo * b.den; k <= b.hi * b.den; ++k) axis.emplace_back(Rat(k, Int(b.den)));
        break;
      case ComponentKind::QuadraticIntegers:
        for (Int p = b.lo; p <= b.hi; ++p)
          for (Int q = b.qlo; q <= b.qhi; ++q) axis.emplace_back(Rat(p), q);
        std::sort(axis.begin(), axis.end(), [&spec](const Coord& x, const Coord& y) {
          return coord_compare(spec, x, y) < 0;
        });
        break;
    }
    axes.push_back(std::move(axis));
  }

  std::vector<GroupElement> out;
  out.reserve(size());
  std::vector<std::size_t> idx(axes.size(), 0);
  for (;;) {
    std::vector<Coord> c(axes.size());
    for (std::size_t i = 0; i < axes.size(); ++i) c[i] = axes[i][idx[i]];
    out.emplace_back(group_, std::move(c));
    std::size_t k = axes.size();
    while (k > 0) {
      --k;
      if (++idx[k] < axes[k].size()) break;
      idx[k] = 0;
      if (k == 0) return out;
    }
  }
}

std::string Window::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < bounds_.size(); ++i) {
    if (i) os << ",";
    const auto& b = bounds_[i];
    os << b.lo << ":" << b.hi;
    if (group_->component(i).kind == ComponentKind::QuadraticIntegers) os << "/" << b.qlo << ":" << b.qhi;
    if (b.den != 1) os << "@" << b.den;
  }
  return os.str();
}

bool Window::operator==(const Window& other) const {
  return same_group(group_, other.group_) && bounds_ == other.bounds_;
}

}  // namespace mexcl
