#include "hypersteiner/convex/ops.hpp"

#include <algorithm>

#include "hypersteiner/errors.hpp"

namespace hypersteiner::convex {

namespace {

const Vec2 kOrigin{Rat(0), Rat(0)};

/// {x : cross(d, x - p) >= 0}.
struct HalfPlane {
    Vec2 p;
    Vec2 d;
    Rat side(const Vec2& x) const { return cross(d, x - p); }
};

std::vector<HalfPlane> halfplanes_of(const ConvexPolygon& poly) {
    std::vector<HalfPlane> out;
    const int n = poly.size();
    if (n >= 3) {
        for (int i = 0; i < n; ++i)
            out.push_back({poly.vertex(i), poly.vertex((i + 1) % n) - poly.vertex(i)});
        return out;
    }
    if (n == 2) {
        const Vec2 a = poly.vertex(0), b = poly.vertex(1);
        const Vec2 u = b - a;
        out.push_back({a, u});
        out.push_back({b, -u});
        out.push_back({a, Vec2{u.y, -u.x}});   // dot(u, x - a) >= 0
        out.push_back({b, Vec2{-u.y, u.x}});   // dot(-u, x - b) >= 0
        return out;
    }
    const Vec2 a = poly.vertex(0);
    out.push_back({a, Vec2{Rat(0), Rat(-1)}});  // x >= a.x
    out.push_back({a, Vec2{Rat(0), Rat(1)}});   // x <= a.x
    out.push_back({a, Vec2{Rat(1), Rat(0)}});   // y >= a.y
    out.push_back({a, Vec2{Rat(-1), Rat(0)}});  // y <= a.y
    return out;
}

/// One Sutherland-Hodgman pass. Input and output are vertex cycles; the
/// output may carry duplicates, which the caller's hull pass absorbs.
std::vector<Vec2> clip_cycle(const std::vector<Vec2>& pts, const HalfPlane& h) {
    std::vector<Vec2> out;
    const int n = static_cast<int>(pts.size());
    if (n == 0) return out;
    if (n == 1) {
        if (h.side(pts[0]).sign() >= 0) out.push_back(pts[0]);
        return out;
    }
    if (n == 2) {
        const Rat sp = h.side(pts[0]), sq = h.side(pts[1]);
        if (sp.sign() >= 0) out.push_back(pts[0]);
        if (sp.sign() * sq.sign() < 0) {
            const Rat t = sp / (sp - sq);
            out.push_back(pts[0] + t * (pts[1] - pts[0]));
        }
        if (sq.sign() >= 0) out.push_back(pts[1]);
        return out;
    }
    for (int i = 0; i < n; ++i) {
        const Vec2& cur = pts[i];
        const Vec2& nxt = pts[(i + 1) % n];
        const Rat sc = h.side(cur), sn = h.side(nxt);
        if (sc.sign() >= 0) out.push_back(cur);
        if (sc.sign() * sn.sign() < 0) {
            const Rat t = sc / (sc - sn);
            out.push_back(cur + t * (nxt - cur));
        }
    }
    return out;
}

std::optional<ConvexPolygon> clip_by(const ConvexPolygon& subject,
                                     const std::vector<HalfPlane>& planes) {
    std::vector<Vec2> pts = subject.vertices();
    for (const HalfPlane& h : planes) {
        pts = clip_cycle(pts, h);
        if (pts.empty()) return std::nullopt;
    }
    return ConvexPolygon::hull_of(std::move(pts));
}

/// Edge vectors in CCW slope order starting from the canonical vertex.
/// A segment contributes its direction and its reverse.
std::vector<Vec2> edge_cycle(const ConvexPolygon& p) {
    std::vector<Vec2> out;
    const int n = p.size();
    if (n == 2) {
        out.push_back(p.vertex(1) - p.vertex(0));
        out.push_back(p.vertex(0) - p.vertex(1));
        return out;
    }
    if (n >= 3)
        for (int i = 0; i < n; ++i) out.push_back(p.vertex((i + 1) % n) - p.vertex(i));
    return out;
}

}  // namespace

Rat support(const ConvexPolygon& p, const Vec2& u) {
    if (u.is_zero()) throw UsageError("support direction must be nonzero");
    Rat best = dot(p.vertex(0), u);
    for (int i = 1; i < p.size(); ++i) best = max(best, dot(p.vertex(i), u));
    return best;
}

ConvexPolygon minkowski_sum(const ConvexPolygon& p, const ConvexPolygon& q) {
    if (p.is_point()) return q.translated(p.vertex(0));
    if (q.is_point()) return p.translated(q.vertex(0));

    const std::vector<Vec2> ep = edge_cycle(p);
    const std::vector<Vec2> eq = edge_cycle(q);
    // Both cycles start at the lowest-then-leftmost vertex, so both edge
    // sequences have strictly increasing polar angles in [0, 2pi) and
    // merge like sorted lists.
    std::vector<Vec2> merged;
    size_t i = 0, j = 0;
    while (i < ep.size() || j < eq.size()) {
        if (i == ep.size()) merged.push_back(eq[j++]);
        else if (j == eq.size()) merged.push_back(ep[i++]);
        else if (angle_less(eq[j], ep[i])) merged.push_back(eq[j++]);
        else merged.push_back(ep[i++]);
    }

    std::vector<Vec2> pts;
    Vec2 cur = p.vertex(0) + q.vertex(0);
    pts.push_back(cur);
    for (const Vec2& e : merged) {
        cur = cur + e;
        pts.push_back(cur);
    }
    return ConvexPolygon::hull_of(std::move(pts));
}

ConvexPolygon minkowski_offset(const ConvexPolygon& a, const Rat& r, const PolyhedralNorm& norm) {
    if (r.sign() < 0) throw UsageError("offset radius must be non-negative");
    if (r.sign() == 0) return a;
    return minkowski_sum(a, norm.ball_scaled(r));
}

OffsetRegion offset_region(const ConvexPolygon& a, const Rat& r, const PolyhedralNorm& norm) {
    return {minkowski_offset(a, r, norm), r};
}

std::optional<ConvexPolygon> intersect(const ConvexPolygon& a, const ConvexPolygon& b) {
    return clip_by(a, halfplanes_of(b));
}

std::optional<ConvexPolygon> intersect(const std::vector<ConvexPolygon>& polys) {
    if (polys.empty()) throw UsageError("intersection of an empty list");
    std::optional<ConvexPolygon> cur = polys[0];
    for (size_t i = 1; i < polys.size() && cur; ++i) cur = intersect(*cur, polys[i]);
    return cur;
}

Rat gauge_min_over_polygon(const PolyhedralNorm& norm, const ConvexPolygon& p) {
    if (p.contains(kOrigin)) return Rat(0);
    Rat best = norm.gauge(p.vertex(0));
    for (int i = 1; i < p.size(); ++i) best = min(best, norm.gauge(p.vertex(i)));

    // Edge points where the gauge's cone structure changes: the rays from
    // the origin through ball vertices. On such a ray the gauge of t*w is
    // exactly t.
    const int edges = p.is_segment() ? 1 : (p.size() >= 3 ? p.size() : 0);
    for (int i = 0; i < edges; ++i) {
        const Vec2& a = p.vertex(i);
        const Vec2 d = p.vertex((i + 1) % p.size()) - a;
        for (const Vec2& w : norm.unit_ball().vertices()) {
            const Rat denom = cross(w, d);
            if (denom.sign() == 0) continue;
            const Rat t = cross(a, d) / denom;
            const Rat s = cross(a, w) / denom;
            if (t.sign() >= 0 && s.sign() >= 0 && s <= Rat(1)) best = min(best, t);
        }
    }
    return best;
}

Rat dist_point_to_polygon(const Vec2& x, const ConvexPolygon& b, const PolyhedralNorm& norm) {
    return gauge_min_over_polygon(norm, b.translated(-x));
}

Rat dist_polygon_to_polygon_inf(const ConvexPolygon& a, const ConvexPolygon& b,
                                const PolyhedralNorm& norm) {
    return gauge_min_over_polygon(norm, minkowski_sum(b, a.negated()));
}

Rat sup_dist_polygon_to_polygon(const ConvexPolygon& a, const ConvexPolygon& b,
                                const PolyhedralNorm& norm) {
    Rat worst(0);
    for (const Vec2& v : a.vertices()) worst = max(worst, dist_point_to_polygon(v, b, norm));
    return worst;
}

Rat hausdorff(const ConvexPolygon& a, const ConvexPolygon& b, const PolyhedralNorm& norm) {
    return max(sup_dist_polygon_to_polygon(a, b, norm), sup_dist_polygon_to_polygon(b, a, norm));
}

bool hausdorff_inclusion_holds(const ConvexPolygon& a, const ConvexPolygon& b, const Rat& r,
                               const PolyhedralNorm& norm) {
    if (r.sign() < 0) return false;
    const ConvexPolygon br_b = minkowski_offset(b, r, norm);
    for (const Vec2& v : a.vertices())
        if (!br_b.contains(v)) return false;
    const ConvexPolygon br_a = minkowski_offset(a, r, norm);
    for (const Vec2& v : b.vertices())
        if (!br_a.contains(v)) return false;
    return true;
}

std::optional<ConvexPolygon> f_slice(const ConvexPolygon& a, const ConvexPolygon& b, const Rat& r,
                                     const PolyhedralNorm& norm) {
    if (r <= dist_polygon_to_polygon_inf(a, b, norm)) return std::nullopt;
    auto slice = intersect(minkowski_offset(a, r, norm), b);
    // r above the infimum distance guarantees the offset reaches into b
    if (!slice) throw std::logic_error("slice unexpectedly empty above the infimum distance");
    return slice;
}

ContinuityTable continuity_probe(const ConvexPolygon& a, const ConvexPolygon& b, const Rat& q,
                                 const Rat& t, int steps, const PolyhedralNorm& norm) {
    if (steps < 1) throw UsageError("continuity probe needs at least one step");
    if (q <= dist_polygon_to_polygon_inf(a, b, norm))
        throw UsageError("probe interval must start above the infimum distance |A B|");
    if (t <= q) throw UsageError("probe interval is empty");

    ContinuityTable table;
    table.max_entry = Rat(0);
    std::vector<ConvexPolygon> slices;
    for (int i = 0; i <= steps; ++i) {
        const Rat r = q + (t - q) * Rat(i + 1, steps + 2);
        table.radii.push_back(r);
        slices.push_back(*f_slice(a, b, r, norm));
    }
    for (int i = 0; i < steps; ++i) {
        Rat d = hausdorff(slices[i], slices[i + 1], norm);
        table.max_entry = max(table.max_entry, d);
        table.entries.push_back(std::move(d));
    }
    return table;
}

Rat dist_to_boundary_inside(const Vec2& x, const ConvexPolygon& p, const PolyhedralNorm& norm) {
    if (!p.contains(x)) throw UsageError("point lies outside the polygon");
    const int n = p.size();
    if (n <= 2) return Rat(0);
    Rat best;
    bool first = true;
    for (int i = 0; i < n; ++i) {
        const Vec2& a = p.vertex(i);
        const Vec2 e = p.vertex((i + 1) % n) - a;
        const Vec2 normal{e.y, -e.x};
        // largest inscribed ball: per-edge slack over the ball's reach
        const Rat slack = (dot(normal, a) - dot(normal, x)) / norm.ball_support(normal);
        if (first || slack < best) {
            best = slack;
            first = false;
        }
    }
    return best;
}

}  // namespace hypersteiner::convex
