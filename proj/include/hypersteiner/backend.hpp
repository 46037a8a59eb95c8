#pragma once

#include <string>

#include "hypersteiner/convex/ops.hpp"
#include "hypersteiner/finite_space.hpp"

namespace hypersteiner {

/// The two hyperspace backends share a tiny concept: an element type, an
/// exact distance, and element equality. Everything generic over networks
/// is written against this.

struct FiniteBackend {
    const FiniteSpace* space;

    using Element = PointSet;

    ExtendedDistance distance(const Element& a, const Element& b) const {
        return hausdorff_supmax(a, b);
    }
    bool equal(const Element& a, const Element& b) const { return a.mask() == b.mask(); }
    std::string describe(const Element& e) const {
        std::string out = "{";
        bool first = true;
        for (const auto& l : e.member_labels()) {
            if (!first) out += ", ";
            out += l;
            first = false;
        }
        return out + "}";
    }
};

struct Convex2dBackend {
    const convex::PolyhedralNorm* norm;

    using Element = convex::ConvexPolygon;

    ExtendedDistance distance(const Element& a, const Element& b) const {
        return ExtendedDistance(convex::hausdorff(a, b, *norm));
    }
    bool equal(const Element& a, const Element& b) const { return a == b; }
    std::string describe(const Element& e) const { return e.str(); }
};

}  // namespace hypersteiner
