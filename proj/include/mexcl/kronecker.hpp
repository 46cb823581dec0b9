#pragma once

// Polynomials in t over series rings, the trivial extension of a monomial
// valuation, and membership in Nagata rings V(t) and in finite intersections
// of them. Also the unit search in semilocal rings and the linear-fraction
// witness 1/(t + X^g).

#include "mexcl/errors.hpp"
#include "mexcl/rings.hpp"
#include "mexcl/series.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace mexcl {

/// Polynomial in t; coefficients[k] is the coefficient of t^k.
class TPoly {
 public:
  TPoly(GroupPtr group, Field field, std::vector<Series> coefficients);

  const GroupPtr& group() const { return group_; }
  const Field& field() const { return field_; }
  const std::vector<Series>& coefficients() const { return coefficients_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  bool is_zero() const { return coefficients_.empty(); }
  std::string to_string() const;

 private:
  GroupPtr group_;
  Field field_;
  std::vector<Series> coefficients_;
};

struct RatFunc {
  TPoly num;
  TPoly den;

  RatFunc(TPoly num, TPoly den);
  std::string to_string() const;
};

/// Value X^g -> (g_{order[0]}, ..., g_{order[keep-1]}), ordered
/// lexicographically. The identity order gives V and its localizations.
class MonomialValuation {
 public:
  MonomialValuation(GroupPtr ambient, std::vector<std::size_t> order, std::size_t keep);
  static MonomialValuation standard(GroupPtr ambient, std::size_t keep);
  /// FullValuation or LocalizedValuation descriptor.
  static MonomialValuation from_ring(const RingDesc& r);

  const GroupPtr& ambient() const { return ambient_; }
  const GroupPtr& value_group() const { return value_group_; }
  const std::vector<std::size_t>& order() const { return order_; }
  std::size_t keep() const { return keep_; }

  GroupElement value(const GroupElement& g) const;
  /// Least value over the support; DomainError for the zero series.
  GroupElement value(const Series& f) const;
  std::string to_string() const;

 private:
  GroupPtr ambient_;
  GroupPtr value_group_;
  std::vector<std::size_t> order_;
  std::size_t keep_;
};

using ValuationFamily = std::vector<MonomialValuation>;
ValuationFamily family_from_rings(const std::vector<RingPtr>& rings);

/// min over nonzero coefficients; DomainError for the zero polynomial.
GroupElement tpoly_valuation(const TPoly& f, const MonomialValuation& v);
bool in_nagata_valuation(const RatFunc& phi, const MonomialValuation& v);
bool in_kr_family(const RatFunc& phi, const ValuationFamily& family);

/// coef * X^exponent with any exponent in G.
struct Monomial {
  Rat coef;
  GroupElement exponent;
};

/// 1/(t + z) in D(t) for local D: z in D or 1/z in D.
bool linear_fraction_in_nagata(const Monomial& z, const RingDesc& d);
/// 1/(t + X^g) as a RatFunc with nonnegative exponents.
RatFunc linear_fraction(const GroupElement& g, Field field = Field::Q());

struct NagataWitness {
  GroupElement g;
  RatFunc phi;
  bool in_family;
  bool in_nagata;
};

/// Searches candidates for g with X^g, X^-g outside D but one of them in
/// every family member. Throws PreconditionError when some member fails to
/// contain D on the window.
std::optional<NagataWitness> nagata_counterexample(const RingDesc& d, const ValuationFamily& family,
                                                   const std::vector<GroupElement>& candidates, const Window& window);

/// Intersection of s monomial valuation rings over one ambient group, with a
/// set of scalar units U whose pairwise differences are nonzero.
struct SemilocalDesc {
  GroupPtr ambient;
  ValuationFamily valuations;
  std::vector<Rat> units;
  Field field = Field::Q();

  std::size_t s() const { return valuations.size(); }
  void validate() const;
  bool contains(const Series& x) const;
  bool is_unit(const Series& x) const;
};

/// NoSolution-style failure: carries the index of the failing valuation.
struct SemilocalFailure : PreconditionError {
  std::size_t valuation_index;
  SemilocalFailure(const std::string& what, std::size_t index) : PreconditionError(what), valuation_index(index) {}
};

/// delta_1..delta_n in U u {0} with sum delta_k x_k a unit of A.
std::vector<Rat> semilocal_unit_combination(const SemilocalDesc& a, const std::vector<Series>& xs);
Series combine(const std::vector<Rat>& deltas, const std::vector<Series>& xs);

/// Divide numerator and denominator by X^shift.
struct ScalingCertificate {
  GroupElement shift;
  TPoly num;
  TPoly den;
};

/// Sound search for a representation num'/den' with coefficients in the ring
/// and unit content. Shifts tried: 0 and every support exponent of den.
std::optional<ScalingCertificate> find_scaling(const RatFunc& phi, const std::function<bool(const Series&)>& in_ring,
                                               const std::function<bool(const TPoly&)>& unit_content);

/// D(t) membership for a semilocal D, certified by scaling search.
std::optional<ScalingCertificate> semilocal_nagata_certificate(const RatFunc& phi, const SemilocalDesc& a);

enum class MembershipStatus { Certified, NotMember, NotCertified };
std::string to_string(MembershipStatus s);

struct Construction56Result {
  MembershipStatus status;
  bool in_family;
  std::optional<ScalingCertificate> certificate;
};

/// phi in Kr^F(D-bar) n A(t) for a local monomial ring A.
Construction56Result in_construction56(const RatFunc& phi, const ValuationFamily& kr_family, const RingDesc& a);

}  // namespace mexcl
