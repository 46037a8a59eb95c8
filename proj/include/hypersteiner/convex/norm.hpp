#pragma once

#include "hypersteiner/convex/polygon.hpp"

namespace hypersteiner::convex {

/// A norm on the plane whose unit ball is a centrally symmetric convex
/// polygon with the origin strictly inside. Offsets of polygons under such
/// a norm stay polygons with rational vertices, so everything downstream
/// is exact.
class PolyhedralNorm {
public:
    explicit PolyhedralNorm(ConvexPolygon unit_ball);

    static PolyhedralNorm l1();
    static PolyhedralNorm linf();

    const ConvexPolygon& unit_ball() const { return ball_; }

    /// The norm of v: the gauge of the unit ball, max_i <n_i, v>/h_i over
    /// the ball's edge normals.
    Rat gauge(const Vec2& v) const;

    /// Support value of the unit ball in direction u.
    Rat ball_support(const Vec2& u) const;

    ConvexPolygon ball_scaled(const Rat& r) const { return ball_.scaled(r); }

private:
    ConvexPolygon ball_;
    // outward edge normal and its support value, per ball edge
    std::vector<Vec2> normals_;
    std::vector<Rat> heights_;
};

}  // namespace hypersteiner::convex
