#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hypersteiner/finite_space.hpp"

namespace hypersteiner::fermat {

/// An ordered family M_1..M_n of finite-backend hyperspace elements with
/// pairwise finite Hausdorff distances. Duplicates are allowed; n >= 1.
class FiniteBoundary {
public:
    FiniteBoundary(const FiniteSpace& space, std::vector<uint64_t> set_masks);

    const FiniteSpace& space() const { return *space_; }
    int n() const { return static_cast<int>(masks_.size()); }
    uint64_t mask(int i) const { return masks_[i]; }
    PointSet set(int i) const { return PointSet(*space_, masks_[i]); }

private:
    const FiniteSpace* space_;
    std::vector<uint64_t> masks_;
};

/// Sum of Hausdorff distances from Y to every boundary set, saturating.
ExtendedDistance objective(const FiniteBoundary& m, const std::optional<PointSet>& y);

/// Distance vector d(K) = (d_H(K, M_1), ..., d_H(K, M_n)); defined for K
/// at finite distance from the boundary (a finite objective).
std::vector<Rat> distance_vector(const FiniteBoundary& m, uint64_t k_mask);

/// Intersection of the closed d_i-neighborhoods of the M_i; may be empty.
std::optional<PointSet> k_d(const FiniteBoundary& m, const std::vector<Rat>& d);

/// Everything the exhaustive solver knows about an instance: the optimal
/// value, all minimizers, the realized distance vectors, and the class
/// partition (classes listed in ascending order of their vectors).
struct BruteForceResult {
    Rat value;
    std::vector<uint64_t> minimizers;        // ascending masks
    std::vector<std::vector<Rat>> omega;     // distinct vectors, sorted
    std::vector<std::vector<uint64_t>> classes;  // aligned with omega

    bool vector_in_omega(const std::vector<Rat>& d) const;
};

/// Exhaustive scan of every nonempty subset. Spaces up to 12 points.
BruteForceResult solve_bruteforce(const FiniteBoundary& m);

/// Exact search over radius vectors: per coordinate, the candidate radii
/// are the distinct finite matrix values (any Hausdorff distance in a
/// finite space is one of them). Evaluates the true distance vector of
/// each candidate intersection; independent of solve_bruteforce.
struct RadiusSearchResult {
    Rat value;
    std::vector<Rat> d;   // true vector of the winning intersection
    uint64_t k_mask;
    long evaluations;
};

RadiusSearchResult solve_radius_search(const FiniteBoundary& m);

/// Full membership and order structure of one solution class.
struct ClassReport {
    std::vector<Rat> d;
    uint64_t k_d_mask;
    std::vector<uint64_t> members;          // ascending; all have vector d
    std::vector<uint64_t> minimal_members;  // no proper member subset
};

/// Enumerates the class of d by scanning subsets of its greatest element.
/// d must be one of the instance's realized vectors.
ClassReport enumerate_class(const FiniteBoundary& m, const std::vector<Rat>& d,
                            const BruteForceResult& brute);

/// Greedy single-point deletion from a member until no deletion keeps the
/// vector; the endpoint is a minimal element of the class.
uint64_t greedy_minimal_member(const FiniteBoundary& m, const std::vector<Rat>& d, uint64_t start);

/// Points x in M_i whose open d_i-ball misses K_d, per boundary index.
std::vector<std::vector<int>> d_far_points(const FiniteBoundary& m, const std::vector<Rat>& d);

/// 1-based indices i with d_i = sup over x in M_i of |x K|. K must have
/// distance vector d.
std::vector<int> one_sided_check(const FiniteBoundary& m, const std::vector<Rat>& d, uint64_t k_mask);

/// 1-based indices i with d_i = sup over x in K_d of |x M_i|. On the
/// finite backend the list may be empty; it is reported, not asserted.
std::vector<int> reverse_one_sided_check(const FiniteBoundary& m, const std::vector<Rat>& d);

}  // namespace hypersteiner::fermat
