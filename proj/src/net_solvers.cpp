#include "hypersteiner/networks/solvers.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <queue>

namespace hypersteiner::net {

namespace {

constexpr int64_t kInf64 = std::numeric_limits<int64_t>::max() / 4;

/// Shared exact machinery for one (space, instance) pair: distances
/// between arbitrary subsets as indices into the sorted finite matrix
/// values, plus an int64 scaling of those values so tree DP runs on
/// native arithmetic.
class FiniteEvaluator {
public:
    explicit FiniteEvaluator(const FiniteSpace& space) : space_(space) {
        const int p = space.size();
        if (p > 12) throw UsageError("interior image search supported up to 12 points");
        values_ = space.finite_values();

        pair_index_.assign(p, std::vector<uint8_t>(p, 255));
        for (int i = 0; i < p; ++i)
            for (int j = 0; j < p; ++j)
                if (space.dist(i, j).is_finite()) pair_index_[i][j] = index_of(space.dist(i, j).finite());

        const uint64_t full = space.full_mask();
        pt_to_set_.assign(p, std::vector<uint8_t>(full + 1, 255));
        for (int x = 0; x < p; ++x)
            for (uint64_t m = 1; m <= full; ++m) {
                const int low = std::countr_zero(m);
                const uint64_t rest = m & (m - 1);
                uint8_t cand = pair_index_[x][low];
                if (rest) cand = std::min(cand, pt_to_set_[x][rest]);
                pt_to_set_[x][m] = cand;
            }

        // int64 scaling over the least common denominator; desk-scale
        // matrices fit comfortably, anything else trips the guard
        mpz_class lcm = 1;
        for (const Rat& v : values_) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.den().get_mpz_t());
        scaled_ok_ = true;
        for (const Rat& v : values_) {
            mpz_class s = v.num() * (lcm / v.den());
            if (!s.fits_slong_p() || s.get_si() > (int64_t(1) << 44)) {
                scaled_ok_ = false;
                break;
            }
            scaled_.push_back(s.get_si());
        }
    }

    const FiniteSpace& space() const { return space_; }
    bool has_int64_scale() const { return scaled_ok_; }

    /// 255 means infinite.
    uint8_t dh_index(uint64_t a, uint64_t b) const {
        uint8_t worst = 0;
        for (int x = 0; x < space_.size(); ++x) {
            if ((a >> x) & 1) worst = std::max(worst, pt_to_set_[x][b]);
            if ((b >> x) & 1) worst = std::max(worst, pt_to_set_[x][a]);
        }
        return worst;
    }

    ExtendedDistance dh(uint64_t a, uint64_t b) const {
        const uint8_t i = dh_index(a, b);
        return i == 255 ? ExtendedDistance::infinity() : ExtendedDistance(values_[i]);
    }

    int64_t dh_scaled(uint64_t a, uint64_t b) const {
        const uint8_t i = dh_index(a, b);
        return i == 255 ? kInf64 : scaled_[i];
    }

private:
    uint8_t index_of(const Rat& v) const {
        const auto it = std::lower_bound(values_.begin(), values_.end(), v);
        return static_cast<uint8_t>(it - values_.begin());
    }

    const FiniteSpace& space_;
    std::vector<Rat> values_;
    std::vector<int64_t> scaled_;
    bool scaled_ok_ = false;
    std::vector<std::vector<uint8_t>> pair_index_;
    std::vector<std::vector<uint8_t>> pt_to_set_;
};

int64_t sat_add(int64_t a, int64_t b) { return (a >= kInf64 || b >= kInf64) ? kInf64 : a + b; }

Network<FiniteBackend> assemble(const FiniteBackend& backend, const BoundaryGraph& graph,
                                const std::vector<PointSet>& boundary_elements,
                                const std::vector<uint64_t>& interior_masks) {
    const FiniteSpace& space = *backend.space;
    std::vector<PointSet> images;
    images.reserve(graph.vertex_count());
    int bi = 0, ii = 0;
    for (int v = 0; v < graph.vertex_count(); ++v)
        images.push_back(graph.is_boundary(v) ? boundary_elements[bi++]
                                              : PointSet(space, interior_masks[ii++]));
    Network<FiniteBackend> net{graph, std::move(images)};
    validate_network(backend, net);
    return net;
}

/// Exact tree DP: post-order messages over all subset states, then a
/// deterministic top-down argmin pass (ties to the smallest mask).
MpnFiniteResult solve_tree_dp(const FiniteBackend& backend, const FiniteEvaluator& eval,
                              const BoundaryGraph& graph,
                              const std::vector<PointSet>& boundary_elements) {
    const FiniteSpace& space = *backend.space;
    const uint64_t full = space.full_mask();
    const int nv = graph.vertex_count();
    const int root = graph.boundary().front();

    std::vector<int> parent(nv, -1), order;
    {
        std::vector<bool> seen(nv, false);
        std::queue<int> q;
        q.push(root);
        seen[root] = true;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            order.push_back(v);
            for (int u : graph.neighbors(v))
                if (!seen[u]) {
                    seen[u] = true;
                    parent[u] = v;
                    q.push(u);
                }
        }
    }

    // fixed element mask for boundary vertices
    std::vector<uint64_t> fixed(nv, 0);
    {
        int bi = 0;
        for (int v = 0; v < nv; ++v)
            if (graph.is_boundary(v)) fixed[v] = boundary_elements[bi++].mask();
    }

    // cost[v][s]: best cost of v's subtree when v is assigned state s
    // (single state 0 for boundary vertices)
    std::vector<std::vector<int64_t>> cost(nv);
    long evaluations = 0;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const int v = *it;
        const bool vb = graph.is_boundary(v);
        const uint64_t states = vb ? 1 : full;
        cost[v].assign(states, 0);
        for (int u : graph.neighbors(v)) {
            if (u == parent[v]) continue;
            const bool ub = graph.is_boundary(u);
            for (uint64_t s = 0; s < states; ++s) {
                const uint64_t sv = vb ? fixed[v] : s + 1;
                int64_t best = kInf64;
                if (ub) {
                    best = sat_add(cost[u][0], eval.dh_scaled(sv, fixed[u]));
                    ++evaluations;
                } else {
                    for (uint64_t t = 0; t < full; ++t) {
                        const int64_t c = sat_add(cost[u][t], eval.dh_scaled(sv, t + 1));
                        ++evaluations;
                        if (c < best) best = c;
                    }
                }
                cost[v][s] = sat_add(cost[v][s], best);
            }
        }
    }

    // top-down reconstruction
    std::vector<uint64_t> chosen(nv, 0);
    chosen[root] = fixed[root];
    for (int v : order) {
        for (int u : graph.neighbors(v)) {
            if (u == parent[v]) continue;
            if (graph.is_boundary(u)) {
                chosen[u] = fixed[u];
                continue;
            }
            int64_t best = kInf64;
            uint64_t arg = 1;
            for (uint64_t t = 0; t < full; ++t) {
                const int64_t c = sat_add(cost[u][t], eval.dh_scaled(chosen[v], t + 1));
                if (c < best) {
                    best = c;
                    arg = t + 1;
                }
            }
            chosen[u] = arg;
        }
    }

    std::vector<uint64_t> interior_masks;
    for (int v = 0; v < nv; ++v)
        if (!graph.is_boundary(v)) interior_masks.push_back(chosen[v]);
    MpnFiniteResult out{assemble(backend, graph, boundary_elements, interior_masks),
                        ExtendedDistance(0), evaluations};
    out.value = network_length(backend, out.network);
    return out;
}

MpnFiniteResult solve_product(const FiniteBackend& backend, const FiniteEvaluator& eval,
                              const BoundaryGraph& graph,
                              const std::vector<PointSet>& boundary_elements) {
    const FiniteSpace& space = *backend.space;
    const uint64_t full = space.full_mask();
    const auto interior = graph.interior();
    const int k = static_cast<int>(interior.size());
    if (k > 2) throw UsageError("non-tree graphs are solved exactly up to 2 interior vertices");

    std::vector<uint64_t> assign(k, 1);
    std::vector<uint64_t> best_assign;
    ExtendedDistance best = ExtendedDistance::infinity();
    bool have = false;
    long evaluations = 0;

    std::vector<uint64_t> fixed(graph.vertex_count(), 0);
    {
        int bi = 0;
        for (int v = 0; v < graph.vertex_count(); ++v)
            if (graph.is_boundary(v)) fixed[v] = boundary_elements[bi++].mask();
    }
    auto mask_of = [&](int v) {
        for (int i = 0; i < k; ++i)
            if (interior[i] == v) return assign[i];
        return fixed[v];
    };

    while (true) {
        ExtendedDistance len(0);
        for (auto [u, v] : graph.edges()) len += eval.dh(mask_of(u), mask_of(v));
        ++evaluations;
        if (!have || len < best) {
            best = len;
            best_assign = assign;
            have = true;
        }
        int pos = k - 1;
        while (pos >= 0 && assign[pos] == full) assign[pos--] = 1;
        if (pos < 0) break;
        ++assign[pos];
    }

    MpnFiniteResult out{assemble(backend, graph, boundary_elements, best_assign), best, evaluations};
    return out;
}

}  // namespace

MpnFiniteResult mpn_solve(const FiniteBackend& backend, const BoundaryGraph& graph,
                          const std::vector<PointSet>& boundary_elements) {
    if (boundary_elements.size() != graph.boundary().size())
        throw UsageError("boundary element count does not match the graph boundary");

    // boundary across finiteness classes: every network is infinite
    for (size_t i = 0; i < boundary_elements.size(); ++i)
        for (size_t j = i + 1; j < boundary_elements.size(); ++j)
            if (hausdorff_supmax(boundary_elements[i], boundary_elements[j]).is_infinite()) {
                std::vector<uint64_t> collapse(graph.interior_count(), boundary_elements[0].mask());
                MpnFiniteResult out{assemble(backend, graph, boundary_elements, collapse),
                                    ExtendedDistance::infinity(), 0};
                return out;
            }

    if (graph.interior_count() == 0) {
        MpnFiniteResult out{assemble(backend, graph, boundary_elements, {}), ExtendedDistance(0), 0};
        out.value = network_length(backend, out.network);
        return out;
    }

    FiniteEvaluator eval(*backend.space);
    if (graph.is_tree() && eval.has_int64_scale())
        return solve_tree_dp(backend, eval, graph, boundary_elements);
    return solve_product(backend, eval, graph, boundary_elements);
}

namespace {

template <class Result, class Backend, class Solve>
Result smt_generic(const Backend& backend,
                   const std::vector<typename Backend::Element>& boundary_elements,
                   const std::vector<std::string>& boundary_names,
                   const std::vector<TreeTopology>& topologies, Solve solve) {
    if (topologies.empty()) throw UsageError("no topologies to search");
    Result out;
    bool have = false;
    for (size_t t = 0; t < topologies.size(); ++t) {
        BoundaryGraph graph = topologies[t].to_graph(boundary_names);
        auto r = solve(graph);
        out.per_topology.push_back(r.value);
        if (!have || r.value < out.value) {
            out.best_index = static_cast<int>(t);
            out.value = r.value;
            out.topology = topologies[t];
            out.network = reduce_degenerate(backend, r.network);
            have = true;
        }
    }
    return out;
}

}  // namespace

SmtFiniteResult smt_over_topologies(const FiniteBackend& backend,
                                    const std::vector<PointSet>& boundary_elements,
                                    const std::vector<std::string>& boundary_names,
                                    const std::vector<TreeTopology>& topologies) {
    return smt_generic<SmtFiniteResult>(
        backend, boundary_elements, boundary_names, topologies,
        [&](const BoundaryGraph& g) { return mpn_solve(backend, g, boundary_elements); });
}

SmtFiniteResult smt_solve(const FiniteBackend& backend, const std::vector<PointSet>& boundary_elements,
                          const std::vector<std::string>& boundary_names) {
    const int n = static_cast<int>(boundary_elements.size());
    if (n < 2 || n > 6) throw UsageError("smt supported for 2 <= n <= 6 boundary elements");
    return smt_over_topologies(backend, boundary_elements, boundary_names, enumerate_topologies(n));
}

MpnConvexResult mpn_solve(const Convex2dBackend& backend, const BoundaryGraph& graph,
                          const std::vector<convex::ConvexPolygon>& boundary_elements,
                          const Convex2dMpnOptions& opts) {
    using convex::ConvexPolygon;
    if (boundary_elements.size() != graph.boundary().size())
        throw UsageError("boundary element count does not match the graph boundary");

    const auto interior = graph.interior();
    MpnConvexResult out;

    // starting images: boundary elements, then pairwise half-distance
    // intersections (midpoints in the hyperspace)
    std::vector<ConvexPolygon> seeds = boundary_elements;
    for (size_t i = 0; i < boundary_elements.size(); ++i)
        for (size_t j = i + 1; j < boundary_elements.size(); ++j) {
            fermat::Convex2dBoundary pair(*backend.norm, {boundary_elements[i], boundary_elements[j]});
            const Rat half = pair.pairwise(0, 1) * Rat(1, 2);
            if (auto mid = fermat::k_d(pair, {half, half})) seeds.push_back(std::move(*mid));
        }

    if (interior.empty()) {
        std::vector<ConvexPolygon> images;
        int bi = 0;
        for (int v = 0; v < graph.vertex_count(); ++v) images.push_back(boundary_elements[bi++]);
        out.network = {graph, std::move(images)};
        validate_network(backend, out.network);
        out.value = network_length(backend, out.network);
        out.starts_run = 0;
        return out;
    }

    bool have = false;
    for (int start = 0; start < opts.starts; ++start) {
        Network<Convex2dBackend> net{graph, {}};
        {
            int bi = 0;
            for (int v = 0; v < graph.vertex_count(); ++v) {
                if (graph.is_boundary(v)) net.images.push_back(boundary_elements[bi++]);
                else net.images.push_back(seeds[(start + v) % seeds.size()]);
            }
        }
        validate_network(backend, net);
        ++out.starts_run;

        ExtendedDistance len = network_length(backend, net);
        for (int sweep = 0; sweep < opts.max_sweeps; ++sweep) {
            bool improved = false;
            for (int v : interior) {
                std::vector<ConvexPolygon> adjacent;
                for (int u : graph.neighbors(v)) adjacent.push_back(net.images[u]);
                fermat::Convex2dBoundary block(*backend.norm, adjacent);
                fermat::Convex2dSolveOptions inner = opts.inner;
                inner.seed = opts.seed ^ (0x9e3779b97f4a7c15ull * (start * 131 + sweep * 17 + v + 1));
                auto sol = fermat::solve_radius_search(block, inner);
                out.exact_evaluations += sol.exact_evaluations;

                ConvexPolygon old = net.images[v];
                net.images[v] = sol.k;
                ExtendedDistance new_len = network_length(backend, net);
                if (new_len < len) {
                    len = new_len;
                    improved = true;
                    if (sweep > 0) out.improved_after_first_sweep = true;
                } else {
                    net.images[v] = std::move(old);
                }
            }
            if (!improved) break;
        }

        if (!have || len < out.value) {
            out.value = len;
            out.network = net;
            have = true;
        }
    }
    return out;
}

SmtConvexResult smt_solve(const Convex2dBackend& backend,
                          const std::vector<convex::ConvexPolygon>& boundary_elements,
                          const std::vector<std::string>& boundary_names,
                          const Convex2dMpnOptions& opts) {
    const int n = static_cast<int>(boundary_elements.size());
    if (n < 2 || n > 6) throw UsageError("smt supported for 2 <= n <= 6 boundary elements");
    long total_evals = 0;
    auto out = smt_generic<SmtConvexResult>(
        backend, boundary_elements, boundary_names, enumerate_topologies(n),
        [&](const BoundaryGraph& g) {
            auto r = mpn_solve(backend, g, boundary_elements, opts);
            total_evals += r.exact_evaluations;
            return r;
        });
    out.exact_evaluations = total_evals;
    return out;
}

}  // namespace hypersteiner::net
