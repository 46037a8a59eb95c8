#pragma once

#include <json.hpp>

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hypersteiner/convex/norm.hpp"
#include "hypersteiner/finite_space.hpp"
#include "hypersteiner/networks/graph.hpp"

namespace hypersteiner::io {

using nlohmann::json;

/// Finite-backend instance: a distance matrix plus named subsets.
///
///   {"points": ["p0", ...],
///    "dist": [[0, "1/2", "inf"], ...],
///    "sets": [{"name": "M1", "members": ["p0", ...]}, ...]}
struct FiniteInstance {
    std::shared_ptr<FiniteSpace> space;
    std::vector<std::string> set_names;
    std::vector<uint64_t> set_masks;

    int set_index(const std::string& name) const;
};

/// Planar instance: a polyhedral norm plus named convex polygons.
///
///   {"norm": {"unit_ball": [["1","0"], ...]},
///    "sets": [{"name": "M1", "vertices": [["0","0"], ...]}, ...]}
struct SceneInstance {
    std::shared_ptr<convex::PolyhedralNorm> norm;
    std::vector<std::string> set_names;
    std::vector<convex::ConvexPolygon> sets;

    int set_index(const std::string& name) const;
};

/// Network topology with boundary bindings by set name.
///
///   {"vertices": ["a", "b", "c"],
///    "edges": [["a", "b"], ["b", "c"]],
///    "boundary": {"a": "M1", "c": "M2"}}
struct TopologyFile {
    net::BoundaryGraph graph;
    std::vector<std::string> bound_set_names;  // aligned with graph.boundary()
};

FiniteInstance parse_finite_instance(const json& j);
SceneInstance parse_scene_instance(const json& j);
TopologyFile parse_topology(const json& j);

/// Loads and dispatches on the top-level shape ("points" vs "norm").
enum class InstanceKind { Finite, Convex2d };
InstanceKind detect_instance_kind(const json& j);

json load_json_file(const std::string& path);

/// Writes text to path atomically (temp file + rename).
void atomic_write_file(const std::string& path, const std::string& text);

/// Serialization helpers; rationals travel as "p/q" strings, infinity as
/// "inf".
json rat_json(const Rat& r);
json extdist_json(const ExtendedDistance& d);
json rat_vector_json(const std::vector<Rat>& d);
json polygon_json(const convex::ConvexPolygon& p);

Rat parse_rat_field(const json& j, const std::string& where);
ExtendedDistance parse_extdist_field(const json& j, const std::string& where);
convex::Vec2 parse_point_field(const json& j, const std::string& where);

}  // namespace hypersteiner::io
