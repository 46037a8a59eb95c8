#pragma once

#include <string>
#include <utility>
#include <vector>

namespace hypersteiner::net {

/// A connected simple graph with a distinguished nonempty boundary.
/// Edges are stored as ordered pairs (u < v), sorted and unique.
class BoundaryGraph {
public:
    /// Trivial single-vertex graph; placeholder for default-constructed
    /// solver results.
    BoundaryGraph() : names_{"v0"}, boundary_{0} {}

    BoundaryGraph(std::vector<std::string> vertex_names, std::vector<std::pair<int, int>> edges,
                  std::vector<int> boundary);

    int vertex_count() const { return static_cast<int>(names_.size()); }
    const std::string& name(int v) const { return names_[v]; }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& boundary() const { return boundary_; }
    bool is_boundary(int v) const;

    std::vector<int> interior() const;
    int interior_count() const { return vertex_count() - static_cast<int>(boundary_.size()); }
    int degree(int v) const;
    std::vector<int> neighbors(int v) const;  // ascending
    bool is_tree() const { return static_cast<int>(edges_.size()) == vertex_count() - 1; }

private:
    std::vector<std::string> names_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<int> boundary_;  // ascending
};

/// A tree whose k interior vertices all have degree >= 3 and k <= n - 2.
/// Boundary vertices are 0..n-1, interior vertices n..n+k-1; the edge
/// list is the canonical certificate under relabelings of the interior.
struct TreeTopology {
    int boundary_count = 0;
    int interior_count = 0;
    std::vector<std::pair<int, int>> edges;

    /// Materializes a BoundaryGraph with the given boundary names;
    /// interior vertices are named s1, s2, ...
    BoundaryGraph to_graph(const std::vector<std::string>& boundary_names) const;

    friend bool operator==(const TreeTopology& a, const TreeTopology& b) = default;
};

/// Validates the tree/degree/count invariants of a candidate topology.
void validate_topology(const TreeTopology& t);

/// All tree topologies on n labeled boundary vertices with unlabeled
/// interior vertices of degree >= 3, up to isomorphisms fixing the
/// boundary pointwise. Deterministic order: by vertex count, then by
/// canonical edge list. 2 <= n <= 8.
std::vector<TreeTopology> enumerate_topologies(int n);

/// Reference enumerator: decodes every labeled tree on n + k vertices
/// (k = 0..n-2) from its Pruefer sequence, keeps those whose interior
/// degrees are >= min_interior_degree, and de-duplicates up to
/// boundary-fixing isomorphism. Same order as enumerate_topologies.
/// min_interior_degree = 1 yields the unfiltered complete list.
std::vector<TreeTopology> enumerate_topologies_pruefer(int n, int min_interior_degree);

/// Canonical edge list under permutations of the interior labels.
std::vector<std::pair<int, int>> canonical_edges(int boundary_count, int interior_count,
                                                 const std::vector<std::pair<int, int>>& edges);

}  // namespace hypersteiner::net
