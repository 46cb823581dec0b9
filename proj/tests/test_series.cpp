#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

#include "mexcl/errors.hpp"

#include <map>

using namespace mexcl;
using support::uniform;

namespace {

GroupPtr line() { return catalog::integers(); }
Series xpow(long k, Rat c = 1, Field f = Field::Q()) { return Series::monomial(GroupElement::of(line(), {k}), c, f); }
Series one(Field f = Field::Q()) { return Series::constant(line(), 1, f); }

// Dense convolution on exponent vectors of Z as an independent product.
std::map<long, Rat> dense_product(const Series& f, const Series& h) {
  std::map<long, Rat> out;
  for (const auto& [a, x] : f.terms())
    for (const auto& [b, y] : h.terms()) out[support::plain(a)[0] + support::plain(b)[0]] += x * y;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

}  // namespace

TEST_CASE("products") {
  CHECK(mul(xpow(2), xpow(3)) == xpow(5));
  CHECK(mul(add(one(), xpow(1)), sub(one(), xpow(1))) == sub(one(), xpow(2)));
  auto g = catalog::integer_plane();
  auto m = Series::monomial(GroupElement::of(g, {1, 0}));
  CHECK(add(m, neg(m)).is_zero());
}

TEST_CASE("product matches dense convolution") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 200; ++k) {
    auto f = support::random_line_series(rng, 10, 12), h = support::random_line_series(rng, 10, 12);
    auto p = mul(f, h);
    auto expected = dense_product(f, h);
    REQUIRE(p.size() == expected.size());
    for (const auto& [e, c] : p.terms()) CHECK(expected.at(support::plain(e)[0]) == c);
  }
}

TEST_CASE("serial and parallel products agree") {
  std::mt19937_64 rng(12);
  for (int k = 0; k < 200; ++k) {
    auto f = support::random_plane_series(rng, 12), h = support::random_plane_series(rng, 12);
    CHECK(mul_serial(f, h) == mul_parallel(f, h));
    CHECK(mul(f, h, Exec::Serial) == mul(f, h, Exec::Parallel));
  }
}

TEST_CASE("units") {
  CHECK(is_unit(add(one(), xpow(1))));
  CHECK_FALSE(is_unit(add(xpow(1), xpow(2))));
  CHECK_FALSE(is_unit(Series(line())));
  std::mt19937_64 rng(13);
  for (int k = 0; k < 200; ++k) {
    auto f = support::random_plane_series(rng, 6), h = support::random_plane_series(rng, 6);
    CHECK(is_unit(mul(f, h)) == (is_unit(f) && is_unit(h)));
  }
}

TEST_CASE("inversion") {
  auto inv = invert(sub(one(), xpow(3)), GroupElement::of(line(), {10}));
  CHECK(inv == add(add(add(one(), xpow(3)), xpow(6)), xpow(9)).with_trunc(GroupElement::of(line(), {10})));
  auto half = invert(Series::constant(line(), 2), GroupElement::of(line(), {4}));
  CHECK(half.coefficient(GroupElement::zero(line())) == Rat(1, 2));
  CHECK(half.size() == 1);
  CHECK_THROWS_AS(invert(xpow(1), GroupElement::of(line(), {4})), DomainError);
}

TEST_CASE("inversion below an infinite antichain is reported") {
  auto g = catalog::integer_plane();
  auto f = add(Series::constant(g, 1), Series::monomial(GroupElement::of(g, {0, 1})));
  CHECK_THROWS_WITH_AS(invert(f, GroupElement::of(g, {1, 0}), 1000),
                       doctest::Contains("trunc admits infinite expansion"), InfiniteExpansion);
  auto finite = invert(f, GroupElement::of(g, {0, 5}));
  CHECK(finite.size() == 5);
  CHECK(finite.coefficient(GroupElement::of(g, {0, 3})) == -1);
}

TEST_CASE("inversion over a prime field") {
  auto f7 = Field::Fp(7);
  auto f = add(Series::constant(line(), 3, f7), xpow(1, 1, f7));
  auto t = GroupElement::of(line(), {8});
  auto prod = mul(f, invert(f, t)).with_trunc(t);
  CHECK(prod == one(f7).with_trunc(t));
  CHECK(Series::constant(line(), 10, f7).coefficient(GroupElement::zero(line())) == 3);
  CHECK(Series::constant(line(), 7, f7).is_zero());
  CHECK(f7.inverse(3) == 5);
  CHECK_THROWS(Field::Fp(8));
  CHECK(Field::parse("F_11").p == 11);
  CHECK(Field::parse("Q").p == 0);
}

TEST_CASE("truncation") {
  auto t = GroupElement::of(line(), {3});
  auto f = Series(line(), Field::Q(), {{GroupElement::of(line(), {1}), 1}, {GroupElement::of(line(), {4}), 1}}, t);
  CHECK(f.size() == 1);
  auto h = add(f, xpow(5));
  CHECK(h.trunc() == t);
  CHECK(h.size() == 1);
}

TEST_CASE("valuation") {
  CHECK(valuation(add(xpow(2), xpow(5))) == GroupElement::of(line(), {2}));
  CHECK(valuation(add(Series::constant(line(), 3), xpow(1))) == GroupElement::zero(line()));
  auto g = catalog::integer_plane();
  auto f = add(Series::monomial(GroupElement::of(g, {1, -5})), Series::monomial(GroupElement::of(g, {2, 0})));
  CHECK(valuation(f) == GroupElement::of(g, {1, -5}));
  CHECK_THROWS_AS(valuation(Series(line())), DomainError);
}

TEST_CASE("ring membership") {
  CHECK(member_ring(add(xpow(3), xpow(4)), catalog::gap(5)));
  CHECK_FALSE(member_ring(add(xpow(3), xpow(2)), catalog::gap(5)));
  CHECK_FALSE(member_ring(Series::monomial(GroupElement::of(catalog::integer_plane(), {1, 0})), catalog::plane_chain()));
  CHECK(member_ring(Series(line()), catalog::gap(5)));
}

TEST_CASE("invariants") {
  CHECK_THROWS_AS(Series::monomial(GroupElement::of(line(), {-1})), DomainError);
  CHECK_THROWS_AS(mul(xpow(1), one(Field::Fp(5))), SpecMismatch);
  CHECK_THROWS_AS(add(xpow(1), Series::monomial(GroupElement::of(catalog::integer_plane(), {1, 0}))), SpecMismatch);
  auto merged = Series(line(), Field::Q(), {{GroupElement::of(line(), {1}), 2}, {GroupElement::of(line(), {1}), -2}});
  CHECK(merged.is_zero());
}
