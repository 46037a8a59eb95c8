#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hypersteiner/extended_distance.hpp"

namespace hypersteiner {

/// An explicit extended-metric space: labeled points and a square distance
/// matrix whose entries may be infinite. The matrix is validated at
/// construction (zero diagonal, positivity, symmetry, triangle inequality
/// under saturating addition) and immutable afterwards.
class FiniteSpace {
public:
    FiniteSpace(std::vector<std::string> labels,
                std::vector<std::vector<ExtendedDistance>> dist);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::string& label(int i) const { return labels_[i]; }
    const std::vector<std::string>& labels() const { return labels_; }
    const ExtendedDistance& dist(int i, int j) const { return dist_[i][j]; }

    /// Index of a label, or -1.
    int index_of(const std::string& label) const;

    /// Sorted distinct finite matrix values, always starting with 0.
    const std::vector<Rat>& finite_values() const { return finite_values_; }

    uint64_t full_mask() const { return (size() >= 64) ? ~0ull : ((1ull << size()) - 1); }

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<ExtendedDistance>> dist_;
    std::vector<Rat> finite_values_;
};

/// A nonempty subset of a FiniteSpace, bit-indexed against the space's
/// point ordering. These are the finite-backend hyperspace elements.
class PointSet {
public:
    PointSet(const FiniteSpace& space, uint64_t mask);

    /// nullopt for the empty mask; used where operations are allowed to
    /// produce the empty set.
    static std::optional<PointSet> maybe(const FiniteSpace& space, uint64_t mask);

    const FiniteSpace& space() const { return *space_; }
    uint64_t mask() const { return mask_; }
    bool contains(int i) const { return (mask_ >> i) & 1; }
    int size() const;
    std::vector<int> members() const;  // ascending
    std::vector<std::string> member_labels() const;

    friend bool operator==(const PointSet& a, const PointSet& b) {
        return a.space_ == b.space_ && a.mask_ == b.mask_;
    }

private:
    const FiniteSpace* space_;
    uint64_t mask_;
};

enum class BallKind { Closed, Open };

/// inf over a of |p a|; infinity when the subset is empty.
ExtendedDistance dist_point_to_set(const FiniteSpace& space, int p, uint64_t subset_mask);
ExtendedDistance dist_point_to_set(int p, const std::optional<PointSet>& a);

/// Closed {p : |p A| <= r} or open {p : |p A| < r} neighborhood of A.
/// r must be finite. The open ball of radius 0 is empty.
std::optional<PointSet> ball(const PointSet& a, const ExtendedDistance& r, BallKind kind);

/// inf{r : A within r of B and B within r of A}, scanned over the finite
/// matrix values where any finite value is attained.
ExtendedDistance hausdorff_inf(const PointSet& a, const PointSet& b);

/// max(sup_a |a B|, sup_b |b A|).
ExtendedDistance hausdorff_supmax(const PointSet& a, const PointSet& b);

/// Classes of the relation "distance is finite" over points, each class
/// ascending, classes ordered by smallest member.
std::vector<std::vector<int>> finiteness_classes(const FiniteSpace& space);

/// Same relation on the hyperspace of all nonempty subsets (Hausdorff
/// distance finite). Classes list subset masks in ascending mask order.
/// Supported for spaces of at most 16 points.
std::vector<std::vector<uint64_t>> hyperspace_finiteness_classes(const FiniteSpace& space);

/// {z in M : |x z| = |x M|}; nonempty for nonempty M.
PointSet metric_projection(int x, const PointSet& m);

}  // namespace hypersteiner
