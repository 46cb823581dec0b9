#pragma once

// Totally ordered abelian groups G = G_1 (+) ... (+) G_n, ordered
// lexicographically, with each G_i one of Z, Q or Z[sqrt d].

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace mexcl {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

enum class ComponentKind { Integers, Rationals, QuadraticIntegers };

struct RankOneSpec {
  ComponentKind kind = ComponentKind::Integers;
  long d = 0;  // radicand, only for QuadraticIntegers

  static RankOneSpec Z() { return {ComponentKind::Integers, 0}; }
  static RankOneSpec Q() { return {ComponentKind::Rationals, 0}; }
  static RankOneSpec Zsqrt(long d);

  bool operator==(const RankOneSpec&) const = default;
  std::string to_string() const;
};

class GroupSpec {
 public:
  explicit GroupSpec(std::vector<RankOneSpec> components);

  std::size_t rank() const { return components_.size(); }
  const RankOneSpec& component(std::size_t i) const { return components_[i]; }
  const std::vector<RankOneSpec>& components() const { return components_; }

  bool operator==(const GroupSpec&) const = default;
  std::string to_string() const;

 private:
  std::vector<RankOneSpec> components_;
};

using GroupPtr = std::shared_ptr<const GroupSpec>;

GroupPtr make_group(std::vector<RankOneSpec> components);
/// Z^n, the most common test group.
GroupPtr integer_lattice(std::size_t rank);
/// G' = G_{k+1} (+) ... (+) G_n.
GroupPtr tail_group(const GroupPtr& g, std::size_t drop = 1);
/// G_1 (+) ... (+) G_k.
GroupPtr head_group(const GroupPtr& g, std::size_t keep);
bool same_group(const GroupPtr& a, const GroupPtr& b);

/// A value of one rank-one component: p + q*sqrt(d). q is zero for Z and Q;
/// p is integral for Z and Z[sqrt d].
struct Coord {
  Rat p = 0;
  Int q = 0;

  Coord() = default;
  Coord(long v) : p(v) {}  // NOLINT(google-explicit-constructor)
  Coord(Rat p_, Int q_ = 0) : p(std::move(p_)), q(std::move(q_)) {}

  bool operator==(const Coord&) const = default;
};

/// Exact sign of p + q*sqrt(d); d > 0.
int quadratic_sign(const Rat& p, const Int& q, long d);
int coord_sign(const RankOneSpec& spec, const Coord& c);
int coord_compare(const RankOneSpec& spec, const Coord& x, const Coord& y);
bool coord_fits(const RankOneSpec& spec, const Coord& c);
std::string coord_to_string(const RankOneSpec& spec, const Coord& c);

class GroupElement {
 public:
  GroupElement() = default;
  GroupElement(GroupPtr group, std::vector<Coord> coords);

  static GroupElement zero(GroupPtr group);
  /// Element with coordinate values given as plain integers.
  static GroupElement of(GroupPtr group, std::initializer_list<long> values);
  /// The i-th unit vector (0-based component index).
  static GroupElement unit(GroupPtr group, std::size_t i);

  const GroupPtr& group() const { return group_; }
  std::size_t rank() const { return coords_.size(); }
  const Coord& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Coord>& coords() const { return coords_; }

  bool is_zero() const;
  int sign() const;

  /// First k coordinates, as an element of head_group(group, k).
  GroupElement head(std::size_t k) const;
  /// Coordinates after the first `drop`, as an element of tail_group.
  GroupElement tail(std::size_t drop = 1) const;
  /// (0, ..., 0, *this) in a group whose tail is this element's group.
  GroupElement prepend_zeros(const GroupPtr& larger) const;

  std::string to_string() const;

 private:
  GroupPtr group_;
  std::vector<Coord> coords_;
};

/// Lexicographic comparison; throws SpecMismatch across groups.
std::strong_ordering cmp(const GroupElement& x, const GroupElement& y);

inline std::strong_ordering operator<=>(const GroupElement& x, const GroupElement& y) {
  return cmp(x, y);
}
inline bool operator==(const GroupElement& x, const GroupElement& y) {
  return cmp(x, y) == std::strong_ordering::equal;
}

GroupElement operator+(const GroupElement& x, const GroupElement& y);
GroupElement operator-(const GroupElement& x, const GroupElement& y);
GroupElement operator-(const GroupElement& x);
GroupElement scalar_mul(const Int& n, const GroupElement& x);

/// 0 for the identity, otherwise the 1-based index of the first nonzero
/// coordinate. Throws DomainError for negative elements.
std::size_t hat_index(const GroupElement& g);

/// x/2 when it exists in the group.
std::optional<GroupElement> half(const GroupElement& x);

struct GroupLess {
  bool operator()(const GroupElement& x, const GroupElement& y) const { return x < y; }
};

/// Per-component bounds. For Z[sqrt d] the bounds apply to p and q
/// separately; for Q the values enumerated are k/den with lo <= k/den <= hi.
struct ComponentBounds {
  Int lo = 0;
  Int hi = 0;
  Int qlo = 0;
  Int qhi = 0;
  long den = 1;

  bool operator==(const ComponentBounds&) const = default;
};

/// Finite box of group elements used for every scan over an infinite set.
class Window {
 public:
  Window() = default;
  Window(GroupPtr group, std::vector<ComponentBounds> bounds);

  /// Same integer bounds [lo, hi] on every coordinate (and on both p and q
  /// for quadratic components).
  static Window cube(GroupPtr group, long lo, long hi);

  const GroupPtr& group() const { return group_; }
  const std::vector<ComponentBounds>& bounds() const { return bounds_; }

  bool contains(const GroupElement& g) const;
  /// Smallest enlargement of this window containing g.
  Window widened_to(const GroupElement& g) const;
  std::size_t size() const;
  /// Every element of the window once, strictly increasing in the group order.
  std::vector<GroupElement> enumerate() const;

  std::string to_string() const;
  bool operator==(const Window& other) const;

 private:
  GroupPtr group_;
  std::vector<ComponentBounds> bounds_;
};

}  // namespace mexcl
