#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypersteiner/convex/vec2.hpp"

namespace hypersteiner::convex {

/// A nonempty compact convex polygon with exact rational vertices in
/// canonical form: CCW, strictly convex chain, starting at the
/// lowest-then-leftmost vertex. A single point and a segment are valid
/// degenerate polygons (1 and 2 vertices). Canonical form makes equality
/// plain vertex-list equality.
class ConvexPolygon {
public:
    /// Convex hull of the given points, canonicalized. Throws on an empty
    /// input. This is the only way to build a polygon, so every instance
    /// is normalized by construction.
    static ConvexPolygon hull_of(std::vector<Vec2> points);

    /// hull_of, but rejects input points that end up strictly inside the
    /// hull (repeated and collinear points are fine and get absorbed).
    /// Used when ingesting instance files.
    static ConvexPolygon from_vertex_list(const std::vector<Vec2>& points);

    static ConvexPolygon point(const Vec2& p) { return hull_of({p}); }

    int size() const { return static_cast<int>(vertices_.size()); }
    const std::vector<Vec2>& vertices() const { return vertices_; }
    const Vec2& vertex(int i) const { return vertices_[i]; }
    bool is_point() const { return size() == 1; }
    bool is_segment() const { return size() == 2; }

    /// Closed containment.
    bool contains(const Vec2& p) const;
    /// Interior containment; always false for degenerate polygons.
    bool contains_strictly(const Vec2& p) const;

    ConvexPolygon translated(const Vec2& t) const;
    ConvexPolygon negated() const;
    ConvexPolygon scaled(const Rat& s) const;

    /// Midpoints of the boundary edges (empty for a point).
    std::vector<Vec2> edge_midpoints() const;

    friend bool operator==(const ConvexPolygon& a, const ConvexPolygon& b) {
        return a.vertices_ == b.vertices_;
    }
    friend bool operator!=(const ConvexPolygon& a, const ConvexPolygon& b) { return !(a == b); }

    std::string str() const;

private:
    ConvexPolygon() = default;
    std::vector<Vec2> vertices_;
};

}  // namespace hypersteiner::convex
