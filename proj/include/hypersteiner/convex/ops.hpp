#pragma once

#include <optional>
#include <vector>

#include "hypersteiner/convex/norm.hpp"
#include "hypersteiner/convex/polygon.hpp"

namespace hypersteiner::convex {

/// max over vertices of <v, u>; u must be nonzero.
Rat support(const ConvexPolygon& p, const Vec2& u);

/// Exact Minkowski sum of two convex polygons by merging edge cycles in
/// slope order.
ConvexPolygon minkowski_sum(const ConvexPolygon& p, const ConvexPolygon& q);

/// The closed r-neighborhood of a: a + r * unit ball. r >= 0; r = 0
/// returns a unchanged.
ConvexPolygon minkowski_offset(const ConvexPolygon& a, const Rat& r, const PolyhedralNorm& norm);

/// An offset polygon remembering the radius it was built with.
struct OffsetRegion {
    ConvexPolygon polygon;
    Rat radius;
};

OffsetRegion offset_region(const ConvexPolygon& a, const Rat& r, const PolyhedralNorm& norm);

/// Exact intersection by half-plane clipping; nullopt when empty.
/// Degenerate results (segment, point) are valid polygons.
std::optional<ConvexPolygon> intersect(const ConvexPolygon& a, const ConvexPolygon& b);
std::optional<ConvexPolygon> intersect(const std::vector<ConvexPolygon>& polys);

/// min over x in p of gauge(x). Core primitive behind the distance
/// operations: the gauge is linear on each cone spanned by consecutive
/// ball vertices, so the minimum over p is attained at a vertex of p or
/// where an edge of p crosses a cone boundary ray.
Rat gauge_min_over_polygon(const PolyhedralNorm& norm, const ConvexPolygon& p);

/// min over b in B of ||x - b||; the smallest r with x inside the
/// r-offset of B.
Rat dist_point_to_polygon(const Vec2& x, const ConvexPolygon& b, const PolyhedralNorm& norm);

/// inf over a in A of |a B| (one-sided infimum distance between sets).
Rat dist_polygon_to_polygon_inf(const ConvexPolygon& a, const ConvexPolygon& b,
                                const PolyhedralNorm& norm);

/// sup over a in A of |a B|; the distance function to a convex set is
/// convex, so the supremum over A sits at a vertex of A.
Rat sup_dist_polygon_to_polygon(const ConvexPolygon& a, const ConvexPolygon& b,
                                const PolyhedralNorm& norm);

/// Hausdorff distance: max of the two one-sided sups.
Rat hausdorff(const ConvexPolygon& a, const ConvexPolygon& b, const PolyhedralNorm& norm);

/// Mutual-inclusion characterization at radius r: A inside the r-offset
/// of B and B inside the r-offset of A. Independent route used to
/// cross-check hausdorff().
bool hausdorff_inclusion_holds(const ConvexPolygon& a, const ConvexPolygon& b, const Rat& r,
                               const PolyhedralNorm& norm);

/// Slice of B visible from A at radius r: offset(A, r) intersected with
/// B, defined for r strictly above |A B|; nullopt otherwise.
std::optional<ConvexPolygon> f_slice(const ConvexPolygon& a, const ConvexPolygon& b, const Rat& r,
                                     const PolyhedralNorm& norm);

/// Pairwise Hausdorff distances between consecutive slices sampled on an
/// interval (q, t) strictly above |A B|.
struct ContinuityTable {
    std::vector<Rat> radii;       // the sampled r values, ascending
    std::vector<Rat> entries;     // d_H between consecutive slices
    Rat max_entry;
};

ContinuityTable continuity_probe(const ConvexPolygon& a, const ConvexPolygon& b, const Rat& q,
                                 const Rat& t, int steps, const PolyhedralNorm& norm);

/// Distance from an inner point to the polygon's boundary: the largest t
/// with x + t * ball inside p. Zero on the boundary and for degenerate
/// polygons. x must lie in p.
Rat dist_to_boundary_inside(const Vec2& x, const ConvexPolygon& p, const PolyhedralNorm& norm);

}  // namespace hypersteiner::convex
