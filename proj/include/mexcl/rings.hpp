#pragma once

// Symbolic descriptions of generalized power series rings: monomial rings
// [[K^S]], the valuation ring V = [[K^{G>=0}]] and its localizations, and
// pullbacks T -> T/m along B. Verdicts on valuation and maximal excluding
// properties, integral and complete integral closure.

#include "mexcl/monoid.hpp"
#include "mexcl/series.hpp"

#include <memory>
#include <optional>
#include <string>
#include <variant>

namespace mexcl {

struct RingDesc;
using RingPtr = std::shared_ptr<const RingDesc>;

namespace ring {
struct MonomialRing {
  MonoidExpr s;
};
struct FullValuation {
  GroupPtr group;
};
/// Overring of V whose value is the first `keep` coordinates.
struct LocalizedValuation {
  GroupPtr group;
  std::size_t keep;
};
/// phi^{-1}(base) for phi : top -> top/m. The residue data is symbolic: base
/// carries its own group.
struct Pullback {
  RingPtr top;
  RingPtr base;
};
/// A residue field used as the base of a pullback, with a declared flag for
/// the minimal field extension condition.
struct FieldRing {
  std::optional<bool> minimal_extension;
};
}  // namespace ring

struct RingDesc {
  std::variant<ring::MonomialRing, ring::FullValuation, ring::LocalizedValuation, ring::Pullback, ring::FieldRing> v;

  /// Group of exponents; null for FieldRing.
  GroupPtr group() const;
  std::string kind_name() const;
};

namespace rings {
RingPtr monomial(MonoidExpr s);
RingPtr full_valuation(GroupPtr g);
RingPtr localized(GroupPtr g, std::size_t keep);
RingPtr pullback(RingPtr top, RingPtr base);
RingPtr field(std::optional<bool> minimal_extension = std::nullopt);
}  // namespace rings

/// X^g in R, for any g in G (negative exponents allowed). Empty when R is a
/// field or a pullback whose residue data is not the tail of its top ring.
std::optional<bool> contains_monomial(const RingDesc& r, const GroupElement& g);

struct ValuationCheck {
  bool value = false;
  bool structural = false;
  std::optional<GroupElement> witness;  // positive g with X^g outside a MonomialRing
};

ValuationCheck check_valuation(const RingDesc& r, const Window& window);
bool is_valuation(const RingDesc& r, const Window& window);

enum class RingStatus { RefutedWithWitness, VerifiedOnWindow, VerifiedStructurally, NotApplicable };
std::string to_string(RingStatus s);

struct RingVerdict {
  RingStatus status = RingStatus::NotApplicable;
  std::string reason;
  std::optional<GroupElement> witness;
  std::optional<GroupElement> excluded;  // X^excluded generates the minimal overring
  std::string excluded_text;

  bool verified() const { return status == RingStatus::VerifiedOnWindow || status == RingStatus::VerifiedStructurally; }
};

/// Candidate excluded element for a monomial ring: the largest positive
/// window element outside S.
std::optional<GroupElement> excluded_candidate(const MonoidExpr& s, const Window& window);

RingVerdict is_maximal_excluding(const RingDesc& r, const Window& window,
                                 const std::optional<GroupElement>& a = std::nullopt);

struct ClosureHypothesis {
  std::size_t stratum;
  bool certified;
  std::optional<GroupElement> anchor;  // a_i
};

struct RingClosure {
  RingPtr ring;
  bool heuristic = false;  // some step only holds on the window
  std::string form;        // "valuation", "monomial", "pullback"
  std::vector<ClosureHypothesis> hypotheses;
};

/// Integral closure. Throws NotApplicable for field descriptors.
RingClosure integral_closure(const RingDesc& r, const Window& window, int nmax);

/// The rank-one overring W; throws NotApplicable when the ring is not
/// certified maximal excluding with the same quotient field.
RingPtr complete_integral_closure(const RingDesc& r, const Window& window);

enum class IntegralStatus { Certified, RefutedUpToBound, NotCertified };
std::string to_string(IntegralStatus s);

/// Power test: X^g is integral when n g in S for some n <= degree_bound.
/// Series with several terms are certified term by term.
IntegralStatus is_integral_element(const Series& f, const RingDesc& r, int degree_bound);

/// Members of the monomial content of two rings agree on the window.
std::optional<GroupElement> first_monomial_difference(const RingDesc& a, const RingDesc& b, const Window& window);

}  // namespace mexcl
