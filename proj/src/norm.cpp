#include "hypersteiner/convex/norm.hpp"

#include <algorithm>

#include "hypersteiner/errors.hpp"

namespace hypersteiner::convex {

PolyhedralNorm::PolyhedralNorm(ConvexPolygon unit_ball) : ball_(std::move(unit_ball)) {
    if (ball_.size() < 4) throw ValidationError("unit ball needs at least 4 vertices");
    if (!ball_.contains_strictly({Rat(0), Rat(0)}))
        throw ValidationError("unit ball must contain the origin strictly");
    if (ball_.negated() != ball_)
        throw ValidationError("unit ball must be centrally symmetric about the origin");
    const int n = ball_.size();
    for (int i = 0; i < n; ++i) {
        const Vec2& a = ball_.vertex(i);
        const Vec2& b = ball_.vertex((i + 1) % n);
        const Vec2 e = b - a;
        const Vec2 normal{e.y, -e.x};  // outward for a CCW chain
        normals_.push_back(normal);
        heights_.push_back(dot(normal, a));
    }
}

PolyhedralNorm PolyhedralNorm::l1() {
    return PolyhedralNorm(ConvexPolygon::hull_of(
        {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(-1), Rat(0)}, {Rat(0), Rat(-1)}}));
}

PolyhedralNorm PolyhedralNorm::linf() {
    return PolyhedralNorm(ConvexPolygon::hull_of(
        {{Rat(1), Rat(1)}, {Rat(-1), Rat(1)}, {Rat(-1), Rat(-1)}, {Rat(1), Rat(-1)}}));
}

Rat PolyhedralNorm::gauge(const Vec2& v) const {
    Rat best(0);
    for (size_t i = 0; i < normals_.size(); ++i) {
        Rat t = dot(normals_[i], v) / heights_[i];
        if (t > best) best = t;
    }
    return best;
}

Rat PolyhedralNorm::ball_support(const Vec2& u) const {
    if (u.is_zero()) throw UsageError("support direction must be nonzero");
    Rat best = dot(ball_.vertex(0), u);
    for (int i = 1; i < ball_.size(); ++i) best = max(best, dot(ball_.vertex(i), u));
    return best;
}

}  // namespace hypersteiner::convex
