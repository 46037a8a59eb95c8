#pragma once

#include <vector>

#include "hypersteiner/errors.hpp"
#include "hypersteiner/extended_distance.hpp"
#include "hypersteiner/networks/graph.hpp"

namespace hypersteiner::net {

/// A map from a graph's vertices into a hyperspace, identity on the
/// boundary (boundary vertices carry their bound elements). The graph is
/// owned by value; reduction rewrites it.
template <class Backend>
struct Network {
    BoundaryGraph graph;
    std::vector<typename Backend::Element> images;  // one per vertex
};

/// Boundary elements must be pairwise distinct: the boundary is a subset
/// of the hyperspace, not a multiset.
template <class Backend>
void validate_network(const Backend& backend, const Network<Backend>& g) {
    if (static_cast<int>(g.images.size()) != g.graph.vertex_count())
        throw ValidationError("image count does not match vertex count");
    const auto& boundary = g.graph.boundary();
    for (size_t i = 0; i < boundary.size(); ++i)
        for (size_t j = i + 1; j < boundary.size(); ++j)
            if (backend.equal(g.images[boundary[i]], g.images[boundary[j]]))
                throw ValidationError("boundary elements " + g.graph.name(boundary[i]) + " and " +
                                      g.graph.name(boundary[j]) + " coincide");
}

/// Sum of edge lengths, saturating at infinity.
template <class Backend>
ExtendedDistance network_length(const Backend& backend, const Network<Backend>& g) {
    ExtendedDistance sum(0);
    for (auto [u, v] : g.graph.edges()) sum += backend.distance(g.images[u], g.images[v]);
    return sum;
}

template <class Backend>
bool is_degenerate(const Backend& backend, const Network<Backend>& g) {
    for (auto [u, v] : g.graph.edges())
        if (backend.equal(g.images[u], g.images[v])) return true;
    return false;
}

/// Removes degenerate edges by merging their endpoints: re-target the
/// interior endpoint's other edges onto the survivor, drop the edge and
/// the vertex, repeat. Keeps the boundary and connectivity; never
/// increases the length (parallel edges produced by re-targeting merge,
/// and those carried equal lengths).
template <class Backend>
Network<Backend> reduce_degenerate(const Backend& backend, Network<Backend> g) {
    validate_network(backend, g);
    while (true) {
        int removed = -1, kept = -1;
        for (auto [u, v] : g.graph.edges()) {
            if (!backend.equal(g.images[u], g.images[v])) continue;
            const bool ub = g.graph.is_boundary(u), vb = g.graph.is_boundary(v);
            // both-boundary coincidences are ruled out by validation
            if (ub) { removed = v; kept = u; }
            else if (vb) { removed = u; kept = v; }
            else { removed = std::max(u, v); kept = std::min(u, v); }
            break;
        }
        if (removed < 0) break;

        std::vector<std::pair<int, int>> edges;
        for (auto [u, v] : g.graph.edges()) {
            int a = (u == removed) ? kept : u;
            int b = (v == removed) ? kept : v;
            if (a == b) continue;  // the degenerate edge itself
            edges.emplace_back(std::min(a, b), std::max(a, b));
        }
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

        // drop the vertex and reindex everything above it
        std::vector<std::string> names;
        std::vector<typename Backend::Element> images;
        for (int v = 0; v < g.graph.vertex_count(); ++v) {
            if (v == removed) continue;
            names.push_back(g.graph.name(v));
            images.push_back(g.images[v]);
        }
        for (auto& [u, v] : edges) {
            if (u > removed) --u;
            if (v > removed) --v;
        }
        std::vector<int> boundary;
        for (int v : g.graph.boundary()) boundary.push_back(v > removed ? v - 1 : v);

        g.graph = BoundaryGraph(std::move(names), std::move(edges), std::move(boundary));
        g.images = std::move(images);
    }
    return g;
}

}  // namespace hypersteiner::net
