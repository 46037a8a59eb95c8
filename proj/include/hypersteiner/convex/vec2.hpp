#pragma once

#include "hypersteiner/rational.hpp"

namespace hypersteiner::convex {

struct Vec2 {
    Rat x;
    Rat y;

    friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(const Rat& s, const Vec2& v) { return {s * v.x, s * v.y}; }
    Vec2 operator-() const { return {-x, -y}; }

    friend bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Vec2& a, const Vec2& b) { return !(a == b); }

    bool is_zero() const { return x.sign() == 0 && y.sign() == 0; }
};

inline Rat cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline Rat dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }

/// Lowest-then-leftmost order: by y, then by x.
inline bool below_left(const Vec2& a, const Vec2& b) {
    if (a.y != b.y) return a.y < b.y;
    return a.x < b.x;
}

/// Strict order of nonzero directions by polar angle in [0, 2pi),
/// angle 0 pointing along +x. Equal angles compare equal.
inline bool angle_less(const Vec2& a, const Vec2& b) {
    auto half = [](const Vec2& v) { return (v.y.sign() > 0 || (v.y.sign() == 0 && v.x.sign() > 0)) ? 0 : 1; };
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    return cross(a, b).sign() > 0;
}

}  // namespace hypersteiner::convex
