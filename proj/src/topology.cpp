#include "hypersteiner/networks/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "hypersteiner/errors.hpp"

namespace hypersteiner::net {

BoundaryGraph::BoundaryGraph(std::vector<std::string> vertex_names,
                             std::vector<std::pair<int, int>> edges, std::vector<int> boundary)
    : names_(std::move(vertex_names)), edges_(std::move(edges)), boundary_(std::move(boundary)) {
    const int n = vertex_count();
    if (n == 0) throw ValidationError("graph has no vertices");
    {
        std::set<std::string> seen(names_.begin(), names_.end());
        if (static_cast<int>(seen.size()) != n) throw ValidationError("duplicate vertex names");
    }
    for (auto& [u, v] : edges_) {
        if (u < 0 || v < 0 || u >= n || v >= n) throw ValidationError("edge endpoint out of range");
        if (u == v) throw ValidationError("loop edge at " + names_[u]);
        if (u > v) std::swap(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw ValidationError("parallel edges");
    if (boundary_.empty()) throw ValidationError("boundary is empty");
    std::sort(boundary_.begin(), boundary_.end());
    if (std::adjacent_find(boundary_.begin(), boundary_.end()) != boundary_.end())
        throw ValidationError("repeated boundary vertex");
    if (boundary_.front() < 0 || boundary_.back() >= n)
        throw ValidationError("boundary vertex out of range");

    // connectivity
    std::vector<int> stack{0};
    std::vector<bool> seen(n, false);
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (auto& [a, b] : edges_) {
            int other = -1;
            if (a == v) other = b;
            else if (b == v) other = a;
            if (other >= 0 && !seen[other]) {
                seen[other] = true;
                ++reached;
                stack.push_back(other);
            }
        }
    }
    if (reached != n) throw ValidationError("graph is not connected");
}

bool BoundaryGraph::is_boundary(int v) const {
    return std::binary_search(boundary_.begin(), boundary_.end(), v);
}

std::vector<int> BoundaryGraph::interior() const {
    std::vector<int> out;
    for (int v = 0; v < vertex_count(); ++v)
        if (!is_boundary(v)) out.push_back(v);
    return out;
}

int BoundaryGraph::degree(int v) const {
    int d = 0;
    for (auto& [a, b] : edges_)
        if (a == v || b == v) ++d;
    return d;
}

std::vector<int> BoundaryGraph::neighbors(int v) const {
    std::vector<int> out;
    for (auto& [a, b] : edges_) {
        if (a == v) out.push_back(b);
        if (b == v) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

BoundaryGraph TreeTopology::to_graph(const std::vector<std::string>& boundary_names) const {
    if (static_cast<int>(boundary_names.size()) != boundary_count)
        throw UsageError("boundary name count mismatch");
    std::vector<std::string> names = boundary_names;
    for (int i = 0; i < interior_count; ++i) names.push_back("s" + std::to_string(i + 1));
    std::vector<int> boundary(boundary_count);
    std::iota(boundary.begin(), boundary.end(), 0);
    return BoundaryGraph(std::move(names), edges, std::move(boundary));
}

void validate_topology(const TreeTopology& t) {
    const int n = t.boundary_count, k = t.interior_count;
    if (n < 2) throw ValidationError("topology needs at least two boundary vertices");
    if (k > n - 2) throw ValidationError("too many interior vertices");
    if (static_cast<int>(t.edges.size()) != n + k - 1) throw ValidationError("not a tree (edge count)");
    std::vector<std::string> names;
    for (int i = 0; i < n + k; ++i) names.push_back("v" + std::to_string(i));
    std::vector<int> boundary(n);
    std::iota(boundary.begin(), boundary.end(), 0);
    BoundaryGraph g(names, t.edges, boundary);  // connected + simple; tree follows from edge count
    for (int v = n; v < n + k; ++v)
        if (g.degree(v) < 3) throw ValidationError("interior vertex of degree < 3");
}

std::vector<std::pair<int, int>> canonical_edges(int boundary_count, int interior_count,
                                                 const std::vector<std::pair<int, int>>& edges) {
    std::vector<int> perm(interior_count);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::pair<int, int>> best;
    bool have = false;
    do {
        std::vector<std::pair<int, int>> relabeled;
        relabeled.reserve(edges.size());
        for (auto [u, v] : edges) {
            int a = u < boundary_count ? u : boundary_count + perm[u - boundary_count];
            int b = v < boundary_count ? v : boundary_count + perm[v - boundary_count];
            relabeled.emplace_back(std::min(a, b), std::max(a, b));
        }
        std::sort(relabeled.begin(), relabeled.end());
        if (!have || relabeled < best) {
            best = std::move(relabeled);
            have = true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

namespace {

struct RawTree {
    int boundary = 0;
    int interior = 0;
    std::vector<std::pair<int, int>> edges;  // canonical
};

std::vector<TreeTopology> finalize(std::set<std::vector<std::pair<int, int>>>* per_size_certs,
                                   int n, int max_interior) {
    std::vector<TreeTopology> out;
    for (int k = 0; k <= max_interior; ++k) {
        std::vector<std::vector<std::pair<int, int>>> certs(per_size_certs[k].begin(),
                                                            per_size_certs[k].end());
        std::sort(certs.begin(), certs.end());
        for (auto& e : certs) {
            TreeTopology t;
            t.boundary_count = n;
            t.interior_count = k;
            t.edges = std::move(e);
            out.push_back(std::move(t));
        }
    }
    return out;
}

}  // namespace

std::vector<TreeTopology> enumerate_topologies(int n) {
    if (n < 2 || n > 8) throw UsageError("topology enumeration supported for 2 <= n <= 8");

    // Grow the boundary one labeled vertex at a time. Every admissible
    // tree on m+1 boundary vertices arises from one on m by a single move
    // on the new vertex (the inverse moves are: delete a leaf and smooth
    // its support if that drops to degree 2; smooth a degree-2 boundary
    // vertex; relabel a degree->=3 boundary vertex as interior).
    std::vector<RawTree> level;
    {
        RawTree base;
        base.boundary = 1;
        level.push_back(base);
    }
    for (int m = 2; m <= n; ++m) {
        std::set<std::pair<int, std::vector<std::pair<int, int>>>> seen;
        std::vector<RawTree> next;
        auto emit = [&](int interior, std::vector<std::pair<int, int>> edges) {
            auto cert = canonical_edges(m, interior, edges);
            if (seen.insert({interior, cert}).second) next.push_back({m, interior, std::move(cert)});
        };
        for (const RawTree& t : level) {
            // shift old interior labels up to make room for boundary m-1
            auto shifted = t.edges;
            for (auto& [u, v] : shifted) {
                if (u >= m - 1) ++u;
                if (v >= m - 1) ++v;
            }
            const int nb = m - 1;  // the new boundary vertex's label
            const int total_old = (m - 1) + t.interior;

            // attach the new boundary vertex to an existing vertex
            for (int v = 0; v < total_old; ++v) {
                int vv = v < m - 1 ? v : v + 1;
                auto e = shifted;
                e.emplace_back(std::min(nb, vv), std::max(nb, vv));
                emit(t.interior, std::move(e));
            }
            // subdivide an edge with a fresh interior vertex and hang the
            // new boundary vertex on it
            for (size_t i = 0; i < shifted.size(); ++i) {
                auto e = shifted;
                auto [u, v] = e[i];
                int w = m + t.interior;
                e.erase(e.begin() + static_cast<long>(i));
                e.emplace_back(std::min(u, w), std::max(u, w));
                e.emplace_back(std::min(v, w), std::max(v, w));
                e.emplace_back(nb, w);
                emit(t.interior + 1, std::move(e));
            }
            // subdivide an edge with the new boundary vertex itself
            for (size_t i = 0; i < shifted.size(); ++i) {
                auto e = shifted;
                auto [u, v] = e[i];
                e.erase(e.begin() + static_cast<long>(i));
                e.emplace_back(std::min(u, nb), std::max(u, nb));
                e.emplace_back(std::min(v, nb), std::max(v, nb));
                emit(t.interior, std::move(e));
            }
            // promote an interior vertex to be the new boundary vertex
            for (int w = 0; w < t.interior; ++w) {
                auto e = shifted;
                const int wl = m + w;
                for (auto& [u, v] : e) {
                    if (u == wl) u = nb;
                    if (v == wl) v = nb;
                    if (u > wl) --u;
                    if (v > wl) --v;
                    if (u > v) std::swap(u, v);
                }
                emit(t.interior - 1, std::move(e));
            }
        }
        level = std::move(next);
    }

    const int max_interior = n - 2;
    std::vector<std::set<std::vector<std::pair<int, int>>>> per_size(max_interior + 1);
    for (RawTree& t : level) {
        if (t.interior > max_interior) continue;  // cannot happen; kept as a guard
        per_size[t.interior].insert(t.edges);
    }
    auto out = finalize(per_size.data(), n, max_interior);
    for (const TreeTopology& t : out) validate_topology(t);
    return out;
}

std::vector<TreeTopology> enumerate_topologies_pruefer(int n, int min_interior_degree) {
    if (n < 2 || n > 6) throw UsageError("reference enumeration supported for 2 <= n <= 6");
    const int max_interior = n - 2;
    std::vector<std::set<std::vector<std::pair<int, int>>>> per_size(max_interior + 1);

    for (int k = 0; k <= max_interior; ++k) {
        const int m = n + k;
        if (m == 2) {
            per_size[k].insert({{0, 1}});
            continue;
        }
        // all Pruefer sequences of length m-2 over [0, m)
        std::vector<int> seq(m - 2, 0);
        while (true) {
            std::vector<int> degree(m, 1);
            for (int s : seq) ++degree[s];
            std::vector<std::pair<int, int>> edges;
            std::vector<int> deg = degree;
            std::vector<bool> used(m, false);
            for (int s : seq) {
                int leaf = -1;
                for (int v = 0; v < m; ++v)
                    if (deg[v] == 1 && !used[v]) {
                        leaf = v;
                        break;
                    }
                used[leaf] = true;
                edges.emplace_back(std::min(leaf, s), std::max(leaf, s));
                --deg[s];
            }
            int a = -1, b = -1;
            for (int v = 0; v < m; ++v)
                if (!used[v] && deg[v] == 1) (a < 0 ? a : b) = v;
            edges.emplace_back(std::min(a, b), std::max(a, b));

            bool ok = true;
            for (int v = n; v < m; ++v)
                if (degree[v] < min_interior_degree) ok = false;
            if (ok) per_size[k].insert(canonical_edges(n, k, edges));

            int pos = m - 3;
            while (pos >= 0 && seq[pos] == m - 1) seq[pos--] = 0;
            if (pos < 0) break;
            ++seq[pos];
        }
    }
    return finalize(per_size.data(), n, max_interior);
}

}  // namespace hypersteiner::net
