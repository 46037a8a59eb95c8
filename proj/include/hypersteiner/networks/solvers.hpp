#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hypersteiner/backend.hpp"
#include "hypersteiner/fermat/convex.hpp"
#include "hypersteiner/networks/network.hpp"

namespace hypersteiner::net {

/// Exact minimal parametric network on the finite backend. Interior
/// images range over every nonempty subset; trees of any admissible size
/// are solved by dynamic programming over the tree, other graphs by
/// product enumeration over at most two interior vertices. A boundary
/// pair at infinite distance short-circuits to an infinite value.
struct MpnFiniteResult {
    Network<FiniteBackend> network;
    ExtendedDistance value;
    long evaluations = 0;
};

MpnFiniteResult mpn_solve(const FiniteBackend& backend, const BoundaryGraph& graph,
                          const std::vector<PointSet>& boundary_elements);

struct SmtFiniteResult {
    int best_index = -1;
    ExtendedDistance value;
    TreeTopology topology;
    Network<FiniteBackend> network;  // non-degenerate witness
    std::vector<ExtendedDistance> per_topology;
};

/// Minimum of mpn over the admissible tree topologies (2 <= n <= 6);
/// ties break by enumeration order.
SmtFiniteResult smt_solve(const FiniteBackend& backend, const std::vector<PointSet>& boundary_elements,
                          const std::vector<std::string>& boundary_names);

/// Same search over an explicit topology list (used to compare the
/// degree-filtered list against the complete labeled-tree list).
SmtFiniteResult smt_over_topologies(const FiniteBackend& backend,
                                    const std::vector<PointSet>& boundary_elements,
                                    const std::vector<std::string>& boundary_names,
                                    const std::vector<TreeTopology>& topologies);

/// Heuristic minimal parametric network on the planar backend:
/// block-coordinate descent over interior vertices, each block solved as
/// a Fermat-Steiner instance on the adjacent images, with deterministic
/// multi-starts seeded from the boundary elements and their pairwise
/// midpoint intersections.
struct Convex2dMpnOptions {
    uint64_t seed = 0;
    int starts = 16;
    int max_sweeps = 8;
    fermat::Convex2dSolveOptions inner{.seed = 0, .starts = 2, .budget = 600};
};

struct MpnConvexResult {
    Network<Convex2dBackend> network;
    ExtendedDistance value;
    long exact_evaluations = 0;
    int starts_run = 0;
    bool improved_after_first_sweep = false;
};

MpnConvexResult mpn_solve(const Convex2dBackend& backend, const BoundaryGraph& graph,
                          const std::vector<convex::ConvexPolygon>& boundary_elements,
                          const Convex2dMpnOptions& opts);

struct SmtConvexResult {
    int best_index = -1;
    ExtendedDistance value;
    TreeTopology topology;
    Network<Convex2dBackend> network;
    std::vector<ExtendedDistance> per_topology;
    long exact_evaluations = 0;
};

SmtConvexResult smt_solve(const Convex2dBackend& backend,
                          const std::vector<convex::ConvexPolygon>& boundary_elements,
                          const std::vector<std::string>& boundary_names,
                          const Convex2dMpnOptions& opts);

}  // namespace hypersteiner::net
