#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

#include "mexcl/errors.hpp"

using namespace mexcl;
using support::uniform;

namespace {

GroupElement z(long v) { return GroupElement::of(catalog::integers(), {v}); }
GroupElement xy(long x, long y) { return GroupElement::of(catalog::integer_plane(), {x, y}); }
GroupElement zq(long x, long p, long q) {
  return GroupElement(catalog::z_plus_zsqrt2(), {Coord(x), Coord(Rat(p), Int(q))});
}

// Numerical semigroup generated by gens, by dynamic programming up to n.
std::vector<bool> generated(const std::vector<long>& gens, long n) {
  std::vector<bool> in(static_cast<std::size_t>(n + 1), false);
  in[0] = true;
  for (long k = 1; k <= n; ++k)
    for (long g : gens)
      if (k >= g && in[static_cast<std::size_t>(k - g)]) in[static_cast<std::size_t>(k)] = true;
  return in;
}

}  // namespace

TEST_CASE("membership") {
  CHECK(member(catalog::gap(5), z(4)));
  CHECK_FALSE(member(catalog::gap(5), z(2)));
  CHECK_FALSE(member(catalog::plane_chain(), xy(1, 0)));
  CHECK(member(catalog::plane_chain(), xy(1, 1)));
  CHECK(member(catalog::plane_chain(), xy(2, -40)));
  CHECK_FALSE(member(catalog::quadrant(), GroupElement(catalog::quadrant().group(), {Coord(Rat(2), Int(-1))})));
  CHECK_THROWS_AS(member(catalog::gap(5), xy(1, 0)), SpecMismatch);
}

TEST_CASE("gap monoid matches the semigroup generated by 3 and 4") {
  auto in = generated({3, 4}, 40);
  for (long k = 0; k <= 40; ++k) CHECK(member(catalog::gap(5), z(k)) == in[static_cast<std::size_t>(k)]);
}

TEST_CASE("decompose") {
  auto s2 = decompose(catalog::plane_chain(), 2);
  auto w = catalog::plane_window(-2, 3, -6, 6);
  for (const auto& g : w.enumerate()) {
    bool expected = g[0].p == 0 && g[1].p >= 1;
    CHECK(member(s2, g) == expected);
  }
  auto s1 = decompose(catalog::plane_dual(), 1);
  for (const auto& g : w.enumerate()) {
    bool expected = (g[0].p == 1 && g[1].p != 0) || g[0].p >= 2;
    CHECK(member(s1, g) == expected);
  }
  auto zero = monoids::zero(catalog::integer_plane());
  CHECK(members_in(decompose(zero, 1), w).empty());
  CHECK_THROWS(decompose(zero, 3));
}

TEST_CASE("decompose partitions the nonzero members") {
  auto w = catalog::plane_window(0, 3, -6, 6);
  for (const auto& s : {catalog::plane_chain(), catalog::plane_dual(), catalog::plane_dual_with_y()})
    for (const auto& g : members_in(s, w)) {
      if (g.is_zero()) continue;
      int count = member(decompose(s, 1), g) + member(decompose(s, 2), g);
      CHECK(count == 1);
    }
}

TEST_CASE("submonoid scan") {
  CHECK(is_submonoid(catalog::gap(5), catalog::integer_window(0, 20)).pass);
  auto pts = monoids::points(catalog::integers(), {z(0), z(3), z(5)});
  auto r = is_submonoid(pts, catalog::integer_window(0, 10));
  CHECK_FALSE(r.pass);
  REQUIRE(r.g);
  CHECK(*r.g == z(3));
  CHECK(*r.h == z(5));  // distinct pairs are scanned before doubles
  CHECK_FALSE(is_submonoid(monoids::points(catalog::integers(), {z(0), z(3)}), catalog::integer_window(0, 10)).pass);
  auto no_doubles = monoids::union_of(catalog::integers(), {monoids::zero(catalog::integers()),
                                                            monoids::points(catalog::integers(), {z(3), z(5)})});
  CHECK_FALSE(is_submonoid(no_doubles, catalog::integer_window(0, 10)).pass);
  CHECK(is_submonoid(catalog::quadrant_lift(), Window::cube(catalog::z_plus_zsqrt2(), 0, 6)).pass);
  auto missing_zero = monoids::region(catalog::integers(), {Constraint::ge(1)});
  CHECK(is_submonoid(missing_zero, catalog::integer_window(0, 4)).zero_missing);
}

TEST_CASE("serial and parallel scans agree") {
  auto w = catalog::plane_window(0, 3, -6, 6);
  std::mt19937_64 rng(3);
  for (int k = 0; k < 20; ++k) {
    auto s = monoids::toggle(catalog::plane_chain(), xy(uniform(rng, 0, 3), uniform(rng, -6, 6)));
    auto a = is_submonoid(s, w, Exec::Serial), b = is_submonoid(s, w, Exec::Parallel);
    CHECK(a.pass == b.pass);
    CHECK(a.g == b.g);
    CHECK(a.h == b.h);
    auto va = check_maxexcl(s, xy(1, 0), w, Exec::Serial);
    auto vb = check_maxexcl(s, xy(1, 0), w, Exec::Parallel);
    CHECK(va.status == vb.status);
    CHECK(va.witness == vb.witness);
  }
}

TEST_CASE("symmetry criterion") {
  auto v = check_maxexcl(catalog::gap(5), z(5), catalog::integer_window(0, 20));
  CHECK(v.status == VerdictStatus::VerifiedStructurally);
  CHECK(check_maxexcl(catalog::plane_chain(), xy(1, 0), catalog::plane_window(0, 3, -6, 6)).status ==
        VerdictStatus::VerifiedStructurally);
  CHECK(check_maxexcl(catalog::plane_explicit(), xy(1, 0), catalog::plane_window(0, 3, -6, 6)).status ==
        VerdictStatus::VerifiedOnWindow);
  auto bad = check_maxexcl(catalog::all_but(5), z(5), catalog::integer_window(0, 20));
  CHECK(bad.status == VerdictStatus::RefutedWithWitness);
  CHECK(bad.witness == z(1));
  CHECK_THROWS_AS(check_maxexcl(catalog::gap(5), z(4), catalog::integer_window(0, 20)), PreconditionError);
  CHECK_THROWS_AS(check_maxexcl(catalog::gap(5), z(0), catalog::integer_window(0, 20)), PreconditionError);
}

TEST_CASE("half of the excluded element is skipped") {
  // {0} u {4, 5, ...} minus nothing around 3 = 6/2: 3 is neither in S nor is 6 - 3
  auto s = monoids::union_of(catalog::integers(), {monoids::zero(catalog::integers()),
                                                   monoids::points(catalog::integers(), {z(4), z(5)}),
                                                   monoids::region(catalog::integers(), {Constraint::ge(7)})});
  auto v = check_maxexcl(s, z(6), catalog::integer_window(0, 24));
  CHECK(v.verified());
}

TEST_CASE("verified verdicts survive an independent rescan") {
  auto w = catalog::plane_window(0, 3, -6, 6);
  for (const auto& s : {catalog::plane_chain(), catalog::plane_dual()}) {
    REQUIRE(check_maxexcl(s, xy(1, 0), w).verified());
    for (const auto& g : w.enumerate()) {
      if (g == xy(1, 0) || g.sign() < 0) continue;
      CHECK(member(s, g) != member(s, xy(1, 0) - g));
    }
  }
}

TEST_CASE("closure fast paths") {
  auto w = catalog::integer_window(0, 30);
  auto c = closure(catalog::gap(5), w, 4);
  CHECK(c.structural);
  CHECK_FALSE(first_difference(c.expr, monoids::full_cone(catalog::integers()), w));
  auto q = closure(catalog::quadrant(), Window::cube(catalog::quadrant().group(), -4, 4), 4);
  CHECK(q.structural);
  auto d = closure(catalog::plane_dual(), catalog::plane_window(0, 3, -6, 6), 6);
  CHECK(member(d.expr, xy(1, 0)));
  CHECK_FALSE(member(d.expr, xy(0, 1)));
}

TEST_CASE("closure properties on the window") {
  auto w = catalog::integer_window(0, 24);
  for (const auto& s : {catalog::semigroup23(), catalog::from_four(), catalog::all_but(3),
                        monoids::union_of(catalog::integers(), {monoids::zero(catalog::integers()),
                                                                monoids::region(catalog::integers(), {Constraint::ge(9)}),
                                                                monoids::points(catalog::integers(), {z(6)})})}) {
    auto once = monoids::root_closure(s, w, 6);
    auto twice = monoids::root_closure(once, w, 6);
    CHECK_FALSE(first_difference(once, twice, w));
    for (const auto& g : members_in(s, w)) CHECK(member(once, g));
    CHECK(is_submonoid(once, w).pass);
  }
}

TEST_CASE("construct S_1") {
  auto g = catalog::z_plus_zsqrt2();
  auto w = Window::cube(g, -6, 6);
  auto s = construct_S1(GroupElement::of(g, {1, 0}), catalog::quadrant_components(), std::nullopt, w);
  CHECK(member(s, zq(1, -2, 1)));
  CHECK_FALSE(member(s, zq(1, -1, -1)));
  CHECK(member(s, zq(2, -100, -100)));

  auto plane = catalog::integer_plane();
  auto empty = construct_S1(xy(1, 0), {monoids::empty(plane)}, std::nullopt, catalog::plane_window(-3, 3, -6, 6));
  CHECK(member(empty, xy(1, -3)));
  CHECK(member(empty, xy(1, 3)));
  CHECK_FALSE(member(empty, xy(1, 0)));
  CHECK_FALSE(member(empty, xy(0, 1)));

  CHECK_THROWS_WITH_AS(
      construct_S1(xy(0, 1), {monoids::empty(plane)}, std::nullopt, catalog::plane_window(-3, 3, -6, 6)),
      "a must lie in G^_1", HypothesisError);
  CHECK_THROWS_AS(construct_S1(xy(1, 0), {monoids::points(plane, {xy(0, 1)})}, std::nullopt,
                               catalog::plane_window(-3, 3, -6, 6)),
                  HypothesisError);
}

TEST_CASE("random constructions are sound over Z^3") {
  auto g = integer_lattice(3);
  auto w = Window::cube(g, -2, 3);
  std::mt19937_64 rng(310);
  int built = 0;
  for (int k = 0; k < 40; ++k) {
    // S_2, S_3: cones cut by lower bounds, so the sum condition holds.
    auto s3 = monoids::region(g, {Constraint::eq(0), Constraint::eq(0), Constraint::ge(uniform(rng, 1, 3))});
    std::vector<Constraint> c2{Constraint::eq(0), Constraint::ge(uniform(rng, 1, 2)), Constraint::any()};
    if (uniform(rng, 0, 1)) c2[2] = Constraint::ge(uniform(rng, -2, 0));
    auto s2 = monoids::union_of(g, {monoids::region(g, c2), uniform(rng, 0, 1) ? s3 : monoids::empty(g)});
    std::vector<MonoidExpr> comps{monoids::stratum(s2, 2), monoids::stratum(s3, 3)};
    auto a = GroupElement::of(g, {1, uniform(rng, -2, 2), uniform(rng, -2, 2)});
    if (validate_lemma310(a, comps, std::nullopt, w)) continue;
    ++built;
    auto s = construct_S1(a, comps, std::nullopt, w);
    CHECK(is_submonoid(s, w).pass);
    CHECK(check_maxexcl(s, a, w).verified());
  }
  CHECK(built > 20);
}

TEST_CASE("group generation") {
  CHECK(generates_group(catalog::gap(5), catalog::integer_window(-10, 10)));
  CHECK(generates_group(catalog::plane_chain(), catalog::plane_window(-2, 2, -4, 4)));
  CHECK_FALSE(generates_group(monoids::zero(catalog::integers()), catalog::integer_window(-4, 4)));
}
