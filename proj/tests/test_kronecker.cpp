#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

#include "mexcl/errors.hpp"

using namespace mexcl;
using support::uniform;

namespace {

GroupPtr line() { return catalog::integers(); }
GroupElement z(long v) { return GroupElement::of(line(), {v}); }
GroupElement xy(long x, long y) { return GroupElement::of(catalog::integer_plane(), {x, y}); }
Series xz(long k) { return Series::monomial(z(k)); }
Series zero_line() { return Series(line()); }
TPoly poly(std::vector<Series> c) {
  auto g = c.front().group();
  return TPoly(g, Field::Q(), std::move(c));
}
MonomialValuation v_line() { return MonomialValuation::standard(line(), 1); }

RatFunc random_ratfunc(std::mt19937_64& rng, const GroupPtr& g) {
  auto coef = [&] {
    if (uniform(rng, 0, 3) == 0) return Series(g);
    std::vector<long> e;
    for (std::size_t k = 0; k < g->rank(); ++k) e.push_back(uniform(rng, 0, 4));
    auto ge = g->rank() == 1 ? GroupElement::of(g, {e[0]}) : GroupElement::of(g, {e[0], e[1]});
    return Series::monomial(ge, support::small_rat(rng));
  };
  auto make = [&](bool nonzero) {
    std::vector<Series> c;
    long d = uniform(rng, 0, 2);
    for (long k = 0; k <= d; ++k) c.push_back(coef());
    if (nonzero) c.push_back(Series::monomial(GroupElement::zero(g), 1));
    return TPoly(g, Field::Q(), c);
  };
  auto den = make(false);
  if (den.is_zero()) den = make(true);
  return RatFunc(make(false), den);
}

}  // namespace

TEST_CASE("polynomials") {
  auto f = poly({xz(3), xz(1), Series::constant(line(), 1)});
  CHECK(f.degree() == 2);
  CHECK(poly({xz(1), zero_line()}).degree() == 0);
  CHECK(poly({zero_line()}).is_zero());
  CHECK_THROWS(RatFunc(poly({xz(1)}), poly({zero_line()})));
}

TEST_CASE("trivial extension valuation") {
  CHECK(tpoly_valuation(poly({xz(3), xz(1), Series::constant(line(), 1)}), v_line()) == z(0));
  CHECK(tpoly_valuation(poly({xz(2), xz(1)}), v_line()) == z(1));
  auto g = catalog::integer_plane();
  auto f = poly({Series::monomial(xy(2, -9)), Series::monomial(xy(1, 5))});
  CHECK(tpoly_valuation(f, MonomialValuation::standard(g, 1)) == GroupElement::of(line(), {1}));
  CHECK(tpoly_valuation(f, MonomialValuation::standard(g, 2)) == xy(1, 5));
  CHECK_THROWS_AS(tpoly_valuation(poly({zero_line()}), v_line()), DomainError);
}

TEST_CASE("Nagata valuation membership") {
  auto a = poly({xz(2), xz(1)});                             // X t + X^2
  auto b = poly({xz(1), Series::constant(line(), 1)});       // t + X
  CHECK(in_nagata_valuation(RatFunc(a, b), v_line()));
  CHECK_FALSE(in_nagata_valuation(RatFunc(b, a), v_line()));
  auto one = poly({Series::constant(line(), 1)});
  CHECK(in_nagata_valuation(RatFunc(one, one), v_line()));
  CHECK(in_nagata_valuation(RatFunc(poly({zero_line()}), one), v_line()));
}

TEST_CASE("family membership") {
  CHECK(in_kr_family(linear_fraction(z(1)), {v_line()}));
  auto phi = RatFunc(poly({xz(1), Series::constant(line(), 1)}), poly({xz(2), Series::constant(line(), 1)}));
  CHECK(in_kr_family(phi, {v_line(), MonomialValuation::from_ring(*rings::localized(line(), 1))}));
  auto g = catalog::integer_plane();
  auto lf = linear_fraction(xy(0, -1));
  CHECK(in_kr_family(lf, {MonomialValuation::standard(g, 1)}));
  // 1/(t + X^-g) = X^g/(X^g t + 1): value 0 on both sides
  CHECK(in_kr_family(linear_fraction(xy(-1, 0)), {MonomialValuation::standard(g, 2)}));
}

TEST_CASE("shrinking the family keeps members") {
  std::mt19937_64 rng(41);
  auto g = catalog::integer_plane();
  ValuationFamily fam{MonomialValuation::standard(g, 2), MonomialValuation::standard(g, 1),
                      MonomialValuation(g, {1, 0}, 2), MonomialValuation(g, {1, 0}, 1)};
  for (int k = 0; k < 300; ++k) {
    auto phi = random_ratfunc(rng, g);
    if (!in_kr_family(phi, fam)) continue;
    for (std::size_t drop = 0; drop < fam.size(); ++drop) {
      auto sub = fam;
      sub.erase(sub.begin() + static_cast<long>(drop));
      CHECK(in_kr_family(phi, sub));
    }
  }
}

TEST_CASE("linear fractions") {
  auto d23 = rings::monomial(catalog::semigroup23());
  CHECK_FALSE(linear_fraction_in_nagata({1, z(1)}, *d23));
  CHECK(linear_fraction_in_nagata({1, z(1)}, *rings::full_valuation(line())));
  CHECK(linear_fraction_in_nagata({1, z(2)}, *d23));
  CHECK(linear_fraction_in_nagata({1, z(-3)}, *d23));
  CHECK_THROWS_AS(linear_fraction_in_nagata({0, z(1)}, *d23), DomainError);
}

TEST_CASE("members of D(t) lie in every family of overring valuations") {
  auto d = rings::monomial(catalog::plane_chain());
  ValuationFamily fam{MonomialValuation::standard(catalog::integer_plane(), 2),
                      MonomialValuation::standard(catalog::integer_plane(), 1)};
  for (long x = -2; x <= 2; ++x)
    for (long y = -4; y <= 4; ++y) {
      if (x == 0 && y == 0) continue;
      if (linear_fraction_in_nagata({1, xy(x, y)}, *d)) CHECK(in_kr_family(linear_fraction(xy(x, y)), fam));
    }
}

TEST_CASE("counterexample search") {
  auto wit = nagata_counterexample(*rings::monomial(catalog::semigroup23()), {v_line()}, {z(1)},
                                   catalog::integer_window(-8, 8));
  REQUIRE(wit);
  CHECK(wit->g == z(1));
  CHECK(wit->in_family);
  CHECK_FALSE(wit->in_nagata);

  CHECK_FALSE(nagata_counterexample(*rings::full_valuation(line()), {v_line()}, {z(1), z(2), z(-1)},
                                    catalog::integer_window(-8, 8)));

  auto plane = catalog::integer_plane();
  auto p = nagata_counterexample(*rings::monomial(catalog::plane_chain()), {MonomialValuation::standard(plane, 2)},
                                 {xy(1, 0)}, catalog::plane_window(-3, 3, -6, 6));
  REQUIRE(p);
  CHECK(p->g == xy(1, 0));

  // a member that does not contain D is rejected
  CHECK_THROWS_AS(nagata_counterexample(*rings::monomial(catalog::semigroup23()), {MonomialValuation(plane, {1, 0}, 2)},
                                        {xy(1, 0)}, catalog::plane_window(-3, 3, -6, 6)),
                  SpecMismatch);
}

TEST_CASE("semilocal unit search") {
  auto g = integer_lattice(2);
  SemilocalDesc a{g, {MonomialValuation(g, {0, 1}, 1), MonomialValuation(g, {1, 0}, 1)}, {1}, Field::Q()};
  auto x1 = Series::monomial(xy(0, 1));
  auto x2 = Series::monomial(xy(1, 0));
  auto d = semilocal_unit_combination(a, {x1, x2});
  CHECK(d == std::vector<Rat>{1, 1});
  CHECK(a.is_unit(combine(d, {x1, x2})));

  auto unit = Series::constant(g, 3);
  auto single = semilocal_unit_combination(a, {unit});
  CHECK(single.size() == 1);
  CHECK(single[0] == 1);

  CHECK_THROWS_AS(semilocal_unit_combination(a, {x1}), SemilocalFailure);
  try {
    semilocal_unit_combination(a, {x1});
  } catch (const SemilocalFailure& e) {
    CHECK(e.valuation_index == 1);  // X^(0,1) has value 1 at the second valuation
  }
}

TEST_CASE("semilocal search over three valuations") {
  auto g = integer_lattice(3);
  auto e = [&](long a, long b, long c) { return Series::monomial(GroupElement::of(g, {a, b, c})); };
  SemilocalDesc a{g,
                  {MonomialValuation(g, {0, 1, 2}, 1), MonomialValuation(g, {1, 0, 2}, 1), MonomialValuation(g, {2, 0, 1}, 1)},
                  {1, 2},
                  Field::Q()};
  std::vector<Series> xs{add(e(0, 1, 1), e(1, 0, 0)), add(e(1, 0, 1), e(0, 1, 0)), sub(e(1, 1, 0), e(0, 0, 1))};
  auto d = semilocal_unit_combination(a, xs);
  CHECK(a.is_unit(combine(d, xs)));
}

TEST_CASE("semilocal descriptor validation") {
  auto g = integer_lattice(2);
  ValuationFamily three{MonomialValuation(g, {0, 1}, 1), MonomialValuation(g, {1, 0}, 1), MonomialValuation(g, {0, 1}, 2)};
  CHECK_THROWS_AS((SemilocalDesc{g, three, {1}, Field::Q()}.validate()), PreconditionError);
  CHECK_THROWS_AS((SemilocalDesc{g, three, {1, 1}, Field::Q()}.validate()), PreconditionError);
  CHECK_THROWS_AS((SemilocalDesc{g, three, {0, 1}, Field::Q()}.validate()), PreconditionError);
  CHECK_THROWS_AS((SemilocalDesc{g, three, {1, 2}, Field::Fp(2)}.validate()), PreconditionError);
  CHECK_NOTHROW((SemilocalDesc{g, three, {1, 2}, Field::Q()}.validate()));
}

TEST_CASE("scaling certificates are sound for two valuations") {
  auto g = integer_lattice(2);
  SemilocalDesc a{g, {MonomialValuation(g, {0, 1}, 1), MonomialValuation(g, {1, 0}, 1)}, {1}, Field::Q()};
  std::mt19937_64 rng(44);
  int certified = 0;
  for (int k = 0; k < 400; ++k) {
    auto phi = random_ratfunc(rng, g);
    auto cert = semilocal_nagata_certificate(phi, a);
    if (!cert) continue;
    ++certified;
    CHECK(in_kr_family(phi, a.valuations));
    for (const auto& c : cert->num.coefficients()) CHECK((c.is_zero() || a.contains(c)));
    // unit content: at each valuation some coefficient has value 0
    for (const auto& [order, keep] : std::vector<std::pair<std::vector<std::size_t>, std::size_t>>{{{0, 1}, 1}, {{1, 0}, 1}}) {
      bool unit = false;
      for (const auto& c : cert->den.coefficients())
        unit = unit || (!c.is_zero() && support::plain_value(c, order, keep) == std::vector<long>{0});
      CHECK(unit);
    }
  }
  CHECK(certified > 50);
}

TEST_CASE("construction membership") {
  auto a = rings::monomial(catalog::semigroup23());
  ValuationFamily kr{v_line()};
  auto r1 = in_construction56(linear_fraction(z(2)), kr, *a);
  CHECK(r1.status == MembershipStatus::Certified);
  auto r2 = in_construction56(linear_fraction(z(1)), kr, *a);
  CHECK(r2.in_family);
  CHECK(r2.status == MembershipStatus::NotCertified);
  auto common = RatFunc(poly({xz(1)}), poly({xz(1), xz(1)}));
  auto r3 = in_construction56(common, kr, *a);
  REQUIRE(r3.status == MembershipStatus::Certified);
  CHECK(r3.certificate->shift == z(1));
  auto outside = RatFunc(poly({Series::constant(line(), 1)}), poly({xz(1)}));
  CHECK(in_construction56(outside, kr, *a).status == MembershipStatus::NotMember);
}
