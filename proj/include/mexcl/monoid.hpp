#pragma once

// Decidable symbolic descriptions of submonoids S of the positive cone G_{>=0},
// and the monoid-level algorithms built on them: the symmetry criterion for
// maximal excluding monomial rings, stratification by the semigroups
// G^_i, root closure, and the construction of S_1 from prescribed S_2..S_n.

#include "mexcl/kernels.hpp"
#include "mexcl/ordered_group.hpp"

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace mexcl {

struct MonoidNode;

/// Immutable handle on a monoid expression tree over one group.
class MonoidExpr {
 public:
  enum class Kind {
    Empty,
    Zero,
    Region,
    Gap,
    HalfLine,
    QuadrantCone,
    Lemma310,
    Union,
    Shift,
    Stratum,
    Slice,
    RootClosure,
    Toggle,
  };

  MonoidExpr(GroupPtr group, std::shared_ptr<const MonoidNode> node);

  const GroupPtr& group() const { return group_; }
  const MonoidNode& node() const { return *node_; }
  Kind kind() const;

 private:
  GroupPtr group_;
  std::shared_ptr<const MonoidNode> node_;
};

enum class ConstraintOp { Any, Eq, Ne, Gt, Ge, Lt, Le, In };

/// Constraint on one coordinate of a Region. For In, the coordinate value,
/// read as an element of the rank-one component group, must lie in `monoid`.
struct Constraint {
  ConstraintOp op = ConstraintOp::Any;
  Coord value;
  std::optional<MonoidExpr> monoid;

  static Constraint any() { return {}; }
  static Constraint eq(Coord c) { return {ConstraintOp::Eq, std::move(c), std::nullopt}; }
  static Constraint ne(Coord c) { return {ConstraintOp::Ne, std::move(c), std::nullopt}; }
  static Constraint gt(Coord c) { return {ConstraintOp::Gt, std::move(c), std::nullopt}; }
  static Constraint ge(Coord c) { return {ConstraintOp::Ge, std::move(c), std::nullopt}; }
  static Constraint lt(Coord c) { return {ConstraintOp::Lt, std::move(c), std::nullopt}; }
  static Constraint le(Coord c) { return {ConstraintOp::Le, std::move(c), std::nullopt}; }
  static Constraint in(MonoidExpr m) { return {ConstraintOp::In, Coord(), std::move(m)}; }
};

namespace node {
struct Empty {};
struct Zero {};
/// {g >= 0 : every coordinate constraint holds}.
struct Region {
  std::vector<Constraint> constraints;
};
/// {0} u {a/2 < g < a} u {g > a}.
struct Gap {
  GroupElement a;
};
/// {g in G^_stratum : g > a}.
struct HalfLine {
  GroupElement a;
  std::size_t stratum;
};
/// Elements supported on one component with p, q >= 0 there (p + q sqrt d).
struct QuadrantCone {
  std::size_t component;  // 1-based
};
/// S_0 u S_1' u S_1'' u S_1* u S_2 u ... u S_n for an excluded element a in
/// G^_1; components[k] describes S_{k+2} (intersected with G^_{k+2}).
struct Lemma310 {
  GroupElement a;
  std::vector<MonoidExpr> components;
  std::optional<MonoidExpr> s1star;
};
struct Union {
  std::vector<MonoidExpr> members;
};
/// base u (by + base): one adjunction step S -> S[X^by] when 2*by lies in S.
struct Shift {
  MonoidExpr base;
  GroupElement by;
};
/// base n G^_index.
struct Stratum {
  MonoidExpr base;
  std::size_t index;
};
/// {g' in G' : (0, g') in base}; base lives over G = G_1 (+) G'.
struct Slice {
  MonoidExpr base;
};
/// base u {g in window : n g in base for some 2 <= n <= nmax}.
struct RootClosure {
  MonoidExpr base;
  Window window;
  int nmax;
};
/// base with the membership of `point` flipped.
struct Toggle {
  MonoidExpr base;
  GroupElement point;
};
}  // namespace node

struct MonoidNode {
  std::variant<node::Empty, node::Zero, node::Region, node::Gap, node::HalfLine, node::QuadrantCone,
               node::Lemma310, node::Union, node::Shift, node::Stratum, node::Slice, node::RootClosure,
               node::Toggle>
      v;
};

namespace monoids {
MonoidExpr empty(GroupPtr g);
MonoidExpr zero(GroupPtr g);
MonoidExpr region(GroupPtr g, std::vector<Constraint> constraints);
/// G_{>=0} itself.
MonoidExpr full_cone(GroupPtr g);
MonoidExpr gap(GroupElement a);
MonoidExpr half_line(GroupElement a, std::size_t stratum);
MonoidExpr quadrant_cone(GroupPtr g, std::size_t component);
MonoidExpr lemma310(GroupElement a, std::vector<MonoidExpr> components,
                    std::optional<MonoidExpr> s1star = std::nullopt);
MonoidExpr union_of(GroupPtr g, std::vector<MonoidExpr> members);
MonoidExpr shift(MonoidExpr base, GroupElement by);
MonoidExpr stratum(MonoidExpr base, std::size_t index);
MonoidExpr slice(MonoidExpr base);
MonoidExpr root_closure(MonoidExpr base, Window window, int nmax);
MonoidExpr toggle(MonoidExpr base, GroupElement point);
/// Finite set of elements (plus nothing else); a union of point regions.
MonoidExpr points(GroupPtr g, const std::vector<GroupElement>& pts);
}  // namespace monoids

/// Exact membership by structural recursion.
bool member(const MonoidExpr& s, const GroupElement& g);

/// Members of s whose first nonzero coordinate is the i-th.
MonoidExpr decompose(const MonoidExpr& s, std::size_t i);

/// Sound structural test that s contains every element of G^_i.
bool covers_stratum(const MonoidExpr& s, std::size_t i);
/// Sound structural test that s = G_{>=0}.
bool is_full_cone(const MonoidExpr& s);

struct SubmonoidReport {
  bool pass = true;
  bool zero_missing = false;
  std::optional<GroupElement> g, h;  // violating pair: g + h in window, not in S
  Window window;
};

/// 0 in S and closure under addition for pairs inside the window. Distinct
/// pairs g < h are scanned first (lex order), then the doubles g + g.
SubmonoidReport is_submonoid(const MonoidExpr& s, const Window& window, Exec exec = default_exec());
std::string to_string(const SubmonoidReport& r);

enum class VerdictStatus { RefutedWithWitness, VerifiedOnWindow, VerifiedStructurally };
std::string to_string(VerdictStatus s);

struct MaxExclVerdict {
  VerdictStatus status = VerdictStatus::VerifiedOnWindow;
  std::optional<GroupElement> witness;
  std::string reason;
  GroupElement a;
  Window window;

  bool verified() const { return status != VerdictStatus::RefutedWithWitness; }
};

/// Checks, on the window, that S is exactly the monoid of a maximal excluding
/// ring excluding X^a: for g != a/2, g in S xor a - g in S, and g in S for
/// every g > a. Throws PreconditionError when a <= 0 or a in S.
MaxExclVerdict check_maxexcl(const MonoidExpr& s, const GroupElement& a, const Window& window,
                             Exec exec = default_exec());

struct ClosureResult {
  MonoidExpr expr;
  bool structural;  // false: exact only inside the window
};

/// Root closure {g : n g in S for some n >= 1}.
ClosureResult closure(const MonoidExpr& s, const Window& window, int nmax);

/// Failure of a hypothesis of the S_1 construction, with the offending data.
struct Lemma310Failure {
  std::string reason;
  std::optional<GroupElement> g, h;
};

/// Window-bounded check of the hypotheses used to build S_1.
std::optional<Lemma310Failure> validate_lemma310(const GroupElement& a, const std::vector<MonoidExpr>& components,
                                                 const std::optional<MonoidExpr>& s1star, const Window& window);

/// Builds S = S_0 u S_1 u ... u S_n for the excluded element a. Throws
/// HypothesisError (message carries the witness) when a hypothesis fails.
MonoidExpr construct_S1(const GroupElement& a, const std::vector<MonoidExpr>& components,
                        const std::optional<MonoidExpr>& s1star, const Window& window);

/// Window-bounded check that S generates G as a group: every positive g in
/// the window is a difference of two members.
bool generates_group(const MonoidExpr& s, const Window& window);

/// Members of s inside the window, in increasing order.
std::vector<GroupElement> members_in(const MonoidExpr& s, const Window& window);

/// First window element on which membership in a and b differs.
std::optional<GroupElement> first_difference(const MonoidExpr& a, const MonoidExpr& b, const Window& window);

}  // namespace mexcl
