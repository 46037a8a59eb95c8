#include "hypersteiner/convex/polygon.hpp"

#include <algorithm>

#include "hypersteiner/errors.hpp"

namespace hypersteiner::convex {

namespace {

bool lex_less(const Vec2& a, const Vec2& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
}

/// Monotone chain; collinear points dropped. Returns CCW hull starting at
/// the lexicographically (x, y) smallest point; re-anchoring happens in
/// the caller.
std::vector<Vec2> monotone_chain(std::vector<Vec2> pts) {
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const int n = static_cast<int>(pts.size());
    if (n <= 2) return pts;
    std::vector<Vec2> hull(2 * n);
    int k = 0;
    for (int i = 0; i < n; ++i) {
        while (k >= 2 && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]).sign() <= 0) --k;
        hull[k++] = pts[i];
    }
    for (int i = n - 2, lower = k + 1; i >= 0; --i) {
        while (k >= lower && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]).sign() <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);  // last point repeats the first
    return hull;
}

}  // namespace

ConvexPolygon ConvexPolygon::hull_of(std::vector<Vec2> points) {
    if (points.empty()) throw ValidationError("polygon needs at least one point");
    std::vector<Vec2> hull = monotone_chain(std::move(points));
    // rotate so the lowest-then-leftmost vertex is first
    int start = 0;
    for (int i = 1; i < static_cast<int>(hull.size()); ++i)
        if (below_left(hull[i], hull[start])) start = i;
    std::rotate(hull.begin(), hull.begin() + start, hull.end());
    ConvexPolygon out;
    out.vertices_ = std::move(hull);
    return out;
}

ConvexPolygon ConvexPolygon::from_vertex_list(const std::vector<Vec2>& points) {
    ConvexPolygon hull = hull_of(points);
    for (const Vec2& p : points)
        if (hull.contains_strictly(p))
            throw ValidationError("vertex (" + p.x.str() + ", " + p.y.str() +
                                  ") lies strictly inside the hull of the vertex list");
    return hull;
}

bool ConvexPolygon::contains(const Vec2& p) const {
    const int n = size();
    if (n == 1) return p == vertices_[0];
    if (n == 2) {
        const Vec2 d = vertices_[1] - vertices_[0];
        const Vec2 w = p - vertices_[0];
        if (cross(d, w).sign() != 0) return false;
        const Rat t = dot(d, w);
        return t.sign() >= 0 && t <= dot(d, d);
    }
    for (int i = 0; i < n; ++i) {
        const Vec2& a = vertices_[i];
        const Vec2& b = vertices_[(i + 1) % n];
        if (cross(b - a, p - a).sign() < 0) return false;
    }
    return true;
}

bool ConvexPolygon::contains_strictly(const Vec2& p) const {
    const int n = size();
    if (n <= 2) return false;
    for (int i = 0; i < n; ++i) {
        const Vec2& a = vertices_[i];
        const Vec2& b = vertices_[(i + 1) % n];
        if (cross(b - a, p - a).sign() <= 0) return false;
    }
    return true;
}

ConvexPolygon ConvexPolygon::translated(const Vec2& t) const {
    std::vector<Vec2> pts;
    pts.reserve(vertices_.size());
    for (const Vec2& v : vertices_) pts.push_back(v + t);
    // translation preserves canonical order; re-running the hull keeps the
    // invariant explicit without relying on that
    return hull_of(std::move(pts));
}

ConvexPolygon ConvexPolygon::negated() const {
    std::vector<Vec2> pts;
    pts.reserve(vertices_.size());
    for (const Vec2& v : vertices_) pts.push_back(-v);
    return hull_of(std::move(pts));
}

ConvexPolygon ConvexPolygon::scaled(const Rat& s) const {
    std::vector<Vec2> pts;
    pts.reserve(vertices_.size());
    for (const Vec2& v : vertices_) pts.push_back(s * v);
    return hull_of(std::move(pts));
}

std::vector<Vec2> ConvexPolygon::edge_midpoints() const {
    std::vector<Vec2> out;
    const int n = size();
    if (n < 2) return out;
    const Rat half(1, 2);
    const int edges = (n == 2) ? 1 : n;
    for (int i = 0; i < edges; ++i) {
        const Vec2& a = vertices_[i];
        const Vec2& b = vertices_[(i + 1) % n];
        out.push_back({half * (a.x + b.x), half * (a.y + b.y)});
    }
    return out;
}

std::string ConvexPolygon::str() const {
    std::string out = "[";
    for (int i = 0; i < size(); ++i) {
        if (i) out += ", ";
        out += "(" + vertices_[i].x.str() + ", " + vertices_[i].y.str() + ")";
    }
    return out + "]";
}

}  // namespace hypersteiner::convex
