#pragma once

// The concrete groups, monoids and windows of the worked examples.

#include "mexcl/monoid.hpp"
#include "mexcl/ordered_group.hpp"

#include <vector>

namespace mexcl::catalog {

GroupPtr integers();
GroupPtr integer_plane();
/// Z (+) Z[sqrt 2].
GroupPtr z_plus_zsqrt2();

/// {0} u {a/2 < g < a} u {g > a} over Z.
MonoidExpr gap(long a);
/// <2,3> = {0, 2, 3, 4, ...} over Z.
MonoidExpr semigroup23();
/// Z_{>=0} minus the single element a.
MonoidExpr all_but(long a);

/// {(0,n) : n >= 0} u {(1,n) : n >= 1} u {(m,n) : m >= 2}, as the S_1
/// construction excluding (1,0) over S_2 = {(0,n) : n >= 1}.
MonoidExpr plane_chain(long k = 0);
/// The same monoid written as a union of regions.
MonoidExpr plane_explicit();
/// D[Y], D[Y/X], ... built by successive Shift steps: step k adjoins (1,-k+1).
MonoidExpr plane_chain_by_shifts(long k);
/// Second coordinate strictly positive on the first-coordinate-zero line.
MonoidExpr plane_upper_axis();

/// {(0,0)} u {(1,n) : n != 0} u {(m,n) : m >= 2}, as the S_1 construction
/// excluding (1,0) over an empty S_2.
MonoidExpr plane_dual();
MonoidExpr plane_dual_explicit();
/// {0} u {(m,n) : m >= 1}.
MonoidExpr plane_dual_with_y();

/// H = {p + q sqrt 2 : p, q >= 0} inside Z[sqrt 2].
MonoidExpr quadrant();
/// S_1 construction over Z (+) Z[sqrt 2] excluding (1,0) with S_2 = H.
MonoidExpr quadrant_lift();
std::vector<MonoidExpr> quadrant_components();

/// {0} u {g >= 4} over Z; not maximal excluding.
MonoidExpr from_four();

Window integer_window(long lo, long hi);
Window plane_window(long xlo, long xhi, long ylo, long yhi);

}  // namespace mexcl::catalog
