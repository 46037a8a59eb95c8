#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hypersteiner/convex/ops.hpp"

namespace hypersteiner::fermat {

/// Boundary family for the planar backend. Hausdorff distances between
/// compact convex polygons are always finite, so no finiteness-class
/// validation is needed here; n >= 1, duplicates allowed.
class Convex2dBoundary {
public:
    Convex2dBoundary(const convex::PolyhedralNorm& norm, std::vector<convex::ConvexPolygon> sets);

    const convex::PolyhedralNorm& norm() const { return *norm_; }
    int n() const { return static_cast<int>(sets_.size()); }
    const convex::ConvexPolygon& set(int i) const { return sets_[i]; }

    /// Cached exact pairwise Hausdorff distances.
    const Rat& pairwise(int i, int j) const { return pairwise_[i][j]; }

private:
    const convex::PolyhedralNorm* norm_;
    std::vector<convex::ConvexPolygon> sets_;
    std::vector<std::vector<Rat>> pairwise_;
};

Rat objective(const Convex2dBoundary& m, const convex::ConvexPolygon& y);

std::vector<Rat> distance_vector(const Convex2dBoundary& m, const convex::ConvexPolygon& k);

/// Intersection of the d_i-offsets of the boundary sets; nullopt when
/// empty.
std::optional<convex::ConvexPolygon> k_d(const Convex2dBoundary& m, const std::vector<Rat>& d);

struct Convex2dSolveOptions {
    uint64_t seed = 0;
    int starts = 16;
    long budget = 10000;   // simplex evaluations per start
    double tol = 1e-9;     // float comparisons before the exact snapshot
    unsigned snapshot_bits = 32;
};

struct Convex2dSolveResult {
    Rat value;
    std::vector<Rat> d;           // exact distance vector of k
    convex::ConvexPolygon k;      // intersection at the returned vector
    long exact_evaluations = 0;
    int starts_run = 0;
    bool converged = false;       // some simplex run met the diameter tolerance
    bool stabilized = false;      // d(K_d) = d holds exactly at the result
};

/// Derivative-free search over radius vectors with an exact rational
/// certificate: the float optimum is snapped to rational candidates
/// (dyadic snapshot, bounded-denominator reconstruction, and closed-form
/// vectors from pairwise distances), each candidate is tightened by the
/// exact d -> d(K_d) iteration, and the best exact result is returned.
Convex2dSolveResult solve_radius_search(const Convex2dBoundary& m, const Convex2dSolveOptions& opts);

/// Vertices of M_i whose open d_i-ball misses K_d, per boundary index.
std::vector<std::vector<int>> d_far_vertices(const Convex2dBoundary& m, const std::vector<Rat>& d);

/// 1-based indices i with d_i = sup over x in M_i of |x K|; the sup of a
/// convex function over a polygon sits at a vertex, so vertices decide.
std::vector<int> one_sided_check(const Convex2dBoundary& m, const std::vector<Rat>& d,
                                 const convex::ConvexPolygon& k);

/// 1-based indices i with d_i = sup over x in K_d of |x M_i|.
std::vector<int> reverse_one_sided_check(const Convex2dBoundary& m, const std::vector<Rat>& d);

}  // namespace hypersteiner::fermat
