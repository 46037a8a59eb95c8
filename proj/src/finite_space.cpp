#include "hypersteiner/finite_space.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "hypersteiner/errors.hpp"

namespace hypersteiner {

FiniteSpace::FiniteSpace(std::vector<std::string> labels,
                         std::vector<std::vector<ExtendedDistance>> dist)
    : labels_(std::move(labels)), dist_(std::move(dist)) {
    const int n = static_cast<int>(labels_.size());
    if (n == 0) throw ValidationError("space has no points");
    if (n > 63) throw ValidationError("space too large for bit-indexed subsets (max 63 points)");
    if (static_cast<int>(dist_.size()) != n)
        throw ValidationError("distance matrix is not " + std::to_string(n) + "x" + std::to_string(n));
    {
        std::set<std::string> seen(labels_.begin(), labels_.end());
        if (static_cast<int>(seen.size()) != n) throw ValidationError("duplicate point labels");
    }
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(dist_[i].size()) != n)
            throw ValidationError("row " + labels_[i] + " has wrong length");
        if (dist_[i][i] != ExtendedDistance(0))
            throw ValidationError("nonzero diagonal at " + labels_[i]);
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (dist_[i][j] != dist_[j][i])
                throw ValidationError("asymmetric entries at (" + labels_[i] + ", " + labels_[j] + ")");
            if (dist_[i][j] == ExtendedDistance(0))
                throw ValidationError("zero distance between distinct points " + labels_[i] + " and " +
                                      labels_[j]);
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (dist_[i][k] > dist_[i][j] + dist_[j][k])
                    throw ValidationError("triangle inequality fails on (" + labels_[i] + ", " +
                                          labels_[j] + ", " + labels_[k] + ")");

    std::set<Rat> values;
    values.insert(Rat(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (dist_[i][j].is_finite()) values.insert(dist_[i][j].finite());
    finite_values_.assign(values.begin(), values.end());
}

int FiniteSpace::index_of(const std::string& label) const {
    for (int i = 0; i < size(); ++i)
        if (labels_[i] == label) return i;
    return -1;
}

PointSet::PointSet(const FiniteSpace& space, uint64_t mask) : space_(&space), mask_(mask) {
    if (mask == 0) throw ValidationError("empty point set is not a hyperspace element");
    if (mask & ~space.full_mask()) throw ValidationError("point set mask out of range");
}

std::optional<PointSet> PointSet::maybe(const FiniteSpace& space, uint64_t mask) {
    if (mask == 0) return std::nullopt;
    return PointSet(space, mask);
}

int PointSet::size() const { return std::popcount(mask_); }

std::vector<int> PointSet::members() const {
    std::vector<int> out;
    for (int i = 0; i < space_->size(); ++i)
        if (contains(i)) out.push_back(i);
    return out;
}

std::vector<std::string> PointSet::member_labels() const {
    std::vector<std::string> out;
    for (int i : members()) out.push_back(space_->label(i));
    return out;
}

ExtendedDistance dist_point_to_set(const FiniteSpace& space, int p, uint64_t subset_mask) {
    if (p < 0 || p >= space.size()) throw UsageError("point index out of range");
    ExtendedDistance best = ExtendedDistance::infinity();
    for (int i = 0; i < space.size(); ++i)
        if ((subset_mask >> i) & 1) best = min(best, space.dist(p, i));
    return best;
}

ExtendedDistance dist_point_to_set(int p, const std::optional<PointSet>& a) {
    if (!a) return ExtendedDistance::infinity();
    return dist_point_to_set(a->space(), p, a->mask());
}

std::optional<PointSet> ball(const PointSet& a, const ExtendedDistance& r, BallKind kind) {
    if (r.is_infinite()) throw UsageError("ball radius must be finite");
    const FiniteSpace& space = a.space();
    uint64_t out = 0;
    for (int p = 0; p < space.size(); ++p) {
        ExtendedDistance d = dist_point_to_set(space, p, a.mask());
        bool in = (kind == BallKind::Closed) ? (d <= r) : (d < r);
        if (in) out |= 1ull << p;
    }
    return PointSet::maybe(space, out);
}

namespace {

bool mutually_included(const FiniteSpace& space, uint64_t a, uint64_t b, const ExtendedDistance& r) {
    for (int p = 0; p < space.size(); ++p) {
        if ((a >> p) & 1)
            if (dist_point_to_set(space, p, b) > r) return false;
        if ((b >> p) & 1)
            if (dist_point_to_set(space, p, a) > r) return false;
    }
    return true;
}

}  // namespace

ExtendedDistance hausdorff_inf(const PointSet& a, const PointSet& b) {
    const FiniteSpace& space = a.space();
    for (const Rat& r : space.finite_values())
        if (mutually_included(space, a.mask(), b.mask(), ExtendedDistance(r))) return ExtendedDistance(r);
    return ExtendedDistance::infinity();
}

ExtendedDistance hausdorff_supmax(const PointSet& a, const PointSet& b) {
    const FiniteSpace& space = a.space();
    ExtendedDistance worst(0);
    for (int p = 0; p < space.size(); ++p) {
        if ((a.mask() >> p) & 1) worst = max(worst, dist_point_to_set(space, p, b.mask()));
        if ((b.mask() >> p) & 1) worst = max(worst, dist_point_to_set(space, p, a.mask()));
    }
    return worst;
}

std::vector<std::vector<int>> finiteness_classes(const FiniteSpace& space) {
    const int n = space.size();
    std::vector<int> cls(n, -1);
    std::vector<std::vector<int>> out;
    for (int i = 0; i < n; ++i) {
        if (cls[i] >= 0) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        // distance-finite is transitive here (triangle inequality), so one
        // sweep from the representative suffices
        for (int j = i; j < n; ++j)
            if (cls[j] < 0 && space.dist(i, j).is_finite()) {
                cls[j] = id;
                out[id].push_back(j);
            }
    }
    return out;
}

std::vector<std::vector<uint64_t>> hyperspace_finiteness_classes(const FiniteSpace& space) {
    if (space.size() > 16) throw UsageError("hyperspace enumeration supported up to 16 points");
    auto point_classes = finiteness_classes(space);
    std::vector<int> point_class(space.size());
    for (int c = 0; c < static_cast<int>(point_classes.size()); ++c)
        for (int p : point_classes[c]) point_class[p] = c;

    // Two subsets are at finite Hausdorff distance exactly when they touch
    // the same point classes.
    std::map<uint64_t, std::vector<uint64_t>> by_signature;
    for (uint64_t m = 1; m <= space.full_mask(); ++m) {
        uint64_t sig = 0;
        for (int p = 0; p < space.size(); ++p)
            if ((m >> p) & 1) sig |= 1ull << point_class[p];
        by_signature[sig].push_back(m);
    }
    std::vector<std::vector<uint64_t>> out;
    std::vector<std::pair<uint64_t, uint64_t>> order;  // (first member, signature)
    for (auto& [sig, members] : by_signature) order.emplace_back(members.front(), sig);
    std::sort(order.begin(), order.end());
    for (auto& [first, sig] : order) out.push_back(by_signature[sig]);
    return out;
}

PointSet metric_projection(int x, const PointSet& m) {
    const FiniteSpace& space = m.space();
    ExtendedDistance best = dist_point_to_set(space, x, m.mask());
    uint64_t out = 0;
    for (int z : m.members())
        if (space.dist(x, z) == best) out |= 1ull << z;
    return PointSet(space, out);
}

}  // namespace hypersteiner
