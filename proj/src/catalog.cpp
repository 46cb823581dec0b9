#include "mexcl/catalog.hpp"

namespace mexcl::catalog {

GroupPtr integers() { return integer_lattice(1); }
GroupPtr integer_plane() { return integer_lattice(2); }
GroupPtr z_plus_zsqrt2() { return make_group({RankOneSpec::Z(), RankOneSpec::Zsqrt(2)}); }

MonoidExpr gap(long a) { return monoids::gap(GroupElement::of(integers(), {a})); }

MonoidExpr semigroup23() {
  auto g = integers();
  return monoids::union_of(g, {monoids::zero(g), monoids::region(g, {Constraint::ge(2)})});
}

MonoidExpr all_but(long a) { return monoids::region(integers(), {Constraint::ne(a)}); }

MonoidExpr plane_upper_axis() {
  return monoids::region(integer_plane(), {Constraint::eq(0), Constraint::gt(0)});
}

MonoidExpr plane_chain(long k) {
  return monoids::lemma310(GroupElement::of(integer_plane(), {1, -k}), {plane_upper_axis()});
}

MonoidExpr plane_explicit() {
  auto g = integer_plane();
  return monoids::union_of(g, {monoids::region(g, {Constraint::eq(0), Constraint::ge(0)}),
                               monoids::region(g, {Constraint::eq(1), Constraint::ge(1)}),
                               monoids::region(g, {Constraint::ge(2), Constraint::any()})});
}

MonoidExpr plane_chain_by_shifts(long k) {
  auto s = plane_explicit();
  for (long step = 0; step < k; ++step) s = monoids::shift(s, GroupElement::of(integer_plane(), {1, -step}));
  return s;
}

MonoidExpr plane_dual() {
  auto g = integer_plane();
  return monoids::lemma310(GroupElement::of(g, {1, 0}), {monoids::empty(g)});
}

MonoidExpr plane_dual_explicit() {
  auto g = integer_plane();
  return monoids::union_of(g, {monoids::zero(g), monoids::region(g, {Constraint::eq(1), Constraint::ne(0)}),
                               monoids::region(g, {Constraint::ge(2), Constraint::any()})});
}

MonoidExpr plane_dual_with_y() {
  auto g = integer_plane();
  return monoids::union_of(g, {monoids::zero(g), monoids::region(g, {Constraint::ge(1), Constraint::any()})});
}

MonoidExpr quadrant() { return monoids::quadrant_cone(make_group({RankOneSpec::Zsqrt(2)}), 1); }

std::vector<MonoidExpr> quadrant_components() { return {monoids::quadrant_cone(z_plus_zsqrt2(), 2)}; }

MonoidExpr quadrant_lift() {
  return monoids::lemma310(GroupElement::of(z_plus_zsqrt2(), {1, 0}), quadrant_components());
}

MonoidExpr from_four() {
  auto g = integers();
  return monoids::union_of(g, {monoids::zero(g), monoids::region(g, {Constraint::ge(4)})});
}

Window integer_window(long lo, long hi) { return Window::cube(integers(), lo, hi); }

Window plane_window(long xlo, long xhi, long ylo, long yhi) {
  return Window(integer_plane(), {ComponentBounds{xlo, xhi, 0, 0, 1}, ComponentBounds{ylo, yhi, 0, 0, 1}});
}

}  // namespace mexcl::catalog
