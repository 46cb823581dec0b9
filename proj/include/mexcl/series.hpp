#pragma once

// Finite-support generalized power series sum u_s X^s with exponents in the
// positive cone of a lex-ordered group and coefficients in Q or F_p.

#include "mexcl/kernels.hpp"
#include "mexcl/monoid.hpp"
#include "mexcl/ordered_group.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mexcl {

/// Coefficient field: Q when p == 0, otherwise F_p. F_p elements are stored
/// as integers in [0, p).
struct Field {
  long p = 0;

  static Field Q() { return {}; }
  static Field Fp(long p);
  /// Parses "Q" or "F_p" / "Fp".
  static Field parse(const std::string& text);

  bool is_prime() const { return p != 0; }
  Rat normalize(const Rat& x) const;
  Rat inverse(const Rat& x) const;
  std::string to_string() const;

  bool operator==(const Field&) const = default;
};

inline constexpr std::size_t default_term_budget = 100000;

class Series {
 public:
  using Term = std::pair<GroupElement, Rat>;

  explicit Series(GroupPtr group, Field field = Field::Q(), std::optional<GroupElement> trunc = std::nullopt);
  /// Normalizes: merges equal exponents, drops zeros and terms >= trunc.
  /// Throws DomainError for negative exponents.
  Series(GroupPtr group, Field field, std::vector<Term> terms, std::optional<GroupElement> trunc = std::nullopt);

  static Series monomial(const GroupElement& g, const Rat& coef = 1, Field field = Field::Q());
  static Series constant(GroupPtr group, const Rat& c, Field field = Field::Q());

  const GroupPtr& group() const { return group_; }
  const Field& field() const { return field_; }
  const std::vector<Term>& terms() const { return terms_; }
  const std::optional<GroupElement>& trunc() const { return trunc_; }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rat coefficient(const GroupElement& g) const;
  bool is_monomial() const { return terms_.size() == 1; }

  Series with_trunc(std::optional<GroupElement> trunc) const;
  std::string to_string() const;

  bool operator==(const Series& other) const;

 private:
  GroupPtr group_;
  Field field_;
  std::vector<Term> terms_;
  std::optional<GroupElement> trunc_;
};

Series add(const Series& f, const Series& h);
Series sub(const Series& f, const Series& h);
Series neg(const Series& f);
Series scale(const Rat& c, const Series& f);
Series shift(const Series& f, const GroupElement& by);

/// Convolution product. The serial version accumulates into an ordered map;
/// the parallel version forms every pairwise product in parallel and merges.
Series mul_serial(const Series& f, const Series& h);
Series mul_parallel(const Series& f, const Series& h);
Series mul(const Series& f, const Series& h, Exec exec = default_exec());

bool is_unit(const Series& f);
/// h with f*h = 1 below trunc; throws InfiniteExpansion once more than
/// `budget` terms have been produced.
Series invert(const Series& f, const GroupElement& trunc, std::size_t budget = default_term_budget);
/// Least exponent of the support; throws DomainError on the zero series.
GroupElement valuation(const Series& f);
/// Every support element lies in S.
bool member_ring(const Series& f, const MonoidExpr& s);

}  // namespace mexcl
