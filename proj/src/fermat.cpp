#include "hypersteiner/fermat/finite.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "hypersteiner/errors.hpp"

namespace hypersteiner::fermat {

FiniteBoundary::FiniteBoundary(const FiniteSpace& space, std::vector<uint64_t> set_masks)
    : space_(&space), masks_(std::move(set_masks)) {
    if (masks_.empty()) throw ValidationError("boundary needs at least one set");
    for (uint64_t m : masks_) PointSet(space, m);  // nonempty, in range
    for (size_t i = 0; i < masks_.size(); ++i)
        for (size_t j = i + 1; j < masks_.size(); ++j)
            if (hausdorff_supmax(set(i), set(j)).is_infinite())
                throw ValidationError("boundary sets " + std::to_string(i + 1) + " and " +
                                      std::to_string(j + 1) +
                                      " are at infinite distance; restrict the boundary to one "
                                      "finiteness class");
}

ExtendedDistance objective(const FiniteBoundary& m, const std::optional<PointSet>& y) {
    if (!y) return ExtendedDistance::infinity();
    ExtendedDistance sum(0);
    for (int i = 0; i < m.n(); ++i) sum += hausdorff_supmax(*y, m.set(i));
    return sum;
}

std::vector<Rat> distance_vector(const FiniteBoundary& m, uint64_t k_mask) {
    PointSet k(m.space(), k_mask);
    std::vector<Rat> d;
    d.reserve(m.n());
    for (int i = 0; i < m.n(); ++i) {
        ExtendedDistance di = hausdorff_supmax(k, m.set(i));
        if (di.is_infinite())
            throw UsageError("distance vector requested for a set outside the boundary's finiteness class");
        d.push_back(di.finite());
    }
    return d;
}

std::optional<PointSet> k_d(const FiniteBoundary& m, const std::vector<Rat>& d) {
    if (static_cast<int>(d.size()) != m.n()) throw UsageError("radius vector has wrong length");
    uint64_t mask = m.space().full_mask();
    for (int i = 0; i < m.n(); ++i) {
        if (d[i].sign() < 0) throw UsageError("negative radius");
        auto b = ball(m.set(i), ExtendedDistance(d[i]), BallKind::Closed);
        mask &= b ? b->mask() : 0;
        if (!mask) return std::nullopt;
    }
    return PointSet(m.space(), mask);
}

bool BruteForceResult::vector_in_omega(const std::vector<Rat>& d) const {
    return std::find(omega.begin(), omega.end(), d) != omega.end();
}

BruteForceResult solve_bruteforce(const FiniteBoundary& m) {
    const FiniteSpace& space = m.space();
    if (space.size() > 12) throw UsageError("exhaustive solve supported up to 12 points");

    BruteForceResult out;
    bool have_best = false;
    ExtendedDistance best = ExtendedDistance::infinity();
    std::vector<uint64_t> minimizers;
    for (uint64_t k = 1; k <= space.full_mask(); ++k) {
        ExtendedDistance s = objective(m, PointSet(space, k));
        if (!have_best || s < best) {
            best = s;
            minimizers.clear();
            minimizers.push_back(k);
            have_best = true;
        } else if (s == best) {
            minimizers.push_back(k);
        }
    }
    // the boundary itself is a witness of finiteness
    if (best.is_infinite()) throw std::logic_error("optimal objective cannot be infinite");

    out.value = best.finite();
    out.minimizers = std::move(minimizers);
    std::map<std::vector<Rat>, std::vector<uint64_t>> by_vector;
    for (uint64_t k : out.minimizers) by_vector[distance_vector(m, k)].push_back(k);
    for (auto& [d, members] : by_vector) {
        out.omega.push_back(d);
        out.classes.push_back(members);
    }
    return out;
}

RadiusSearchResult solve_radius_search(const FiniteBoundary& m) {
    const FiniteSpace& space = m.space();
    if (space.size() > 12) throw UsageError("radius search supported up to 12 points");
    if (m.n() > 4) throw UsageError("radius search supported up to 4 boundary sets");

    const std::vector<Rat>& candidates = space.finite_values();
    const int c = static_cast<int>(candidates.size());
    const int n = m.n();

    // ball masks per (boundary set, candidate radius)
    std::vector<std::vector<uint64_t>> balls(n, std::vector<uint64_t>(c, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < c; ++j) {
            auto b = ball(m.set(i), ExtendedDistance(candidates[j]), BallKind::Closed);
            balls[i][j] = b ? b->mask() : 0;
        }

    // distinct intersections seen so far, with their exact objective
    std::unordered_map<uint64_t, Rat> value_of;
    RadiusSearchResult out;
    out.evaluations = 0;
    bool have_best = false;

    std::vector<int> idx(n, 0);
    while (true) {
        uint64_t k = space.full_mask();
        for (int i = 0; i < n && k; ++i) k &= balls[i][idx[i]];
        if (k) {
            auto it = value_of.find(k);
            if (it == value_of.end()) {
                ExtendedDistance s = objective(m, PointSet(space, k));
                ++out.evaluations;
                if (s.is_infinite()) throw std::logic_error("intersection left the finiteness class");
                it = value_of.emplace(k, s.finite()).first;
            }
            if (!have_best || it->second < out.value) {
                out.value = it->second;
                out.k_mask = k;
                have_best = true;
            }
        }
        int pos = n - 1;
        while (pos >= 0 && idx[pos] == c - 1) idx[pos--] = 0;
        if (pos < 0) break;
        ++idx[pos];
    }
    if (!have_best) throw std::logic_error("no feasible radius vector found");
    out.d = distance_vector(m, out.k_mask);
    return out;
}

ClassReport enumerate_class(const FiniteBoundary& m, const std::vector<Rat>& d,
                            const BruteForceResult& brute) {
    if (!brute.vector_in_omega(d)) throw UsageError("vector is not realized by any solution");
    auto great = k_d(m, d);
    if (!great) throw std::logic_error("realized vector has empty intersection");

    ClassReport report;
    report.d = d;
    report.k_d_mask = great->mask();

    // every class member is a subset of the greatest element
    const uint64_t g = great->mask();
    std::vector<int> bits;
    for (int i = 0; i < m.space().size(); ++i)
        if ((g >> i) & 1) bits.push_back(i);
    const uint64_t count = 1ull << bits.size();
    for (uint64_t pick = 1; pick < count; ++pick) {
        uint64_t k = 0;
        for (size_t b = 0; b < bits.size(); ++b)
            if ((pick >> b) & 1) k |= 1ull << bits[b];
        if (distance_vector(m, k) == d) report.members.push_back(k);
    }
    std::sort(report.members.begin(), report.members.end());

    for (uint64_t k : report.members) {
        bool minimal = true;
        for (uint64_t other : report.members)
            if (other != k && (other & ~k) == 0) {
                minimal = false;
                break;
            }
        if (minimal) report.minimal_members.push_back(k);
    }
    return report;
}

uint64_t greedy_minimal_member(const FiniteBoundary& m, const std::vector<Rat>& d, uint64_t start) {
    uint64_t cur = start;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < m.space().size(); ++i) {
            const uint64_t without = cur & ~(1ull << i);
            if (without == cur || without == 0) continue;
            if (distance_vector(m, without) == d) {
                cur = without;
                changed = true;
            }
        }
    }
    return cur;
}

std::vector<std::vector<int>> d_far_points(const FiniteBoundary& m, const std::vector<Rat>& d) {
    auto great = k_d(m, d);
    if (!great) throw UsageError("d-far points need a nonempty intersection");
    std::vector<std::vector<int>> out(m.n());
    for (int i = 0; i < m.n(); ++i)
        for (int x : m.set(i).members()) {
            // U_{d_i}(x) misses K_d exactly when no point of K_d is strictly
            // closer than d_i
            ExtendedDistance dist = dist_point_to_set(m.space(), x, great->mask());
            if (dist >= ExtendedDistance(d[i])) out[i].push_back(x);
        }
    return out;
}

std::vector<int> one_sided_check(const FiniteBoundary& m, const std::vector<Rat>& d, uint64_t k_mask) {
    if (distance_vector(m, k_mask) != d)
        throw UsageError("set does not have the claimed distance vector");
    std::vector<int> out;
    for (int i = 0; i < m.n(); ++i) {
        ExtendedDistance sup(0);
        for (int x : m.set(i).members()) sup = max(sup, dist_point_to_set(m.space(), x, k_mask));
        if (sup == ExtendedDistance(d[i])) out.push_back(i + 1);
    }
    return out;
}

std::vector<int> reverse_one_sided_check(const FiniteBoundary& m, const std::vector<Rat>& d) {
    auto great = k_d(m, d);
    if (!great) throw UsageError("reverse check needs a nonempty intersection");
    std::vector<int> out;
    for (int i = 0; i < m.n(); ++i) {
        ExtendedDistance sup(0);
        for (int x : great->members()) sup = max(sup, dist_point_to_set(m.space(), x, m.mask(i)));
        if (sup == ExtendedDistance(d[i])) out.push_back(i + 1);
    }
    return out;
}

}  // namespace hypersteiner::fermat
