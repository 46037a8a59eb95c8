#include "hypersteiner/io/instance.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "hypersteiner/errors.hpp"

namespace hypersteiner::io {

int FiniteInstance::set_index(const std::string& name) const {
    for (size_t i = 0; i < set_names.size(); ++i)
        if (set_names[i] == name) return static_cast<int>(i);
    return -1;
}

int SceneInstance::set_index(const std::string& name) const {
    for (size_t i = 0; i < set_names.size(); ++i)
        if (set_names[i] == name) return static_cast<int>(i);
    return -1;
}

Rat parse_rat_field(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Rat(j.get<long>());
    if (j.is_string()) {
        auto r = Rat::parse(j.get<std::string>());
        if (r) return *r;
    }
    throw ValidationError(where + ": expected an integer or a \"p/q\" string");
}

ExtendedDistance parse_extdist_field(const json& j, const std::string& where) {
    if (j.is_string() && j.get<std::string>() == "inf") return ExtendedDistance::infinity();
    Rat r = parse_rat_field(j, where);
    if (r.sign() < 0) throw ValidationError(where + ": distances must be non-negative");
    return ExtendedDistance(r);
}

convex::Vec2 parse_point_field(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2)
        throw ValidationError(where + ": expected a two-element [x, y] array");
    return {parse_rat_field(j[0], where + "[0]"), parse_rat_field(j[1], where + "[1]")};
}

FiniteInstance parse_finite_instance(const json& j) {
    if (!j.is_object() || !j.contains("points") || !j.contains("dist"))
        throw ValidationError("finite instance needs \"points\" and \"dist\"");
    if (!j["points"].is_array() || j["points"].empty())
        throw ValidationError("\"points\" must be a nonempty array of labels");

    std::vector<std::string> labels;
    for (const auto& p : j["points"]) {
        if (!p.is_string()) throw ValidationError("\"points\" entries must be strings");
        labels.push_back(p.get<std::string>());
    }
    const size_t n = labels.size();
    if (!j["dist"].is_array() || j["dist"].size() != n)
        throw ValidationError("\"dist\" must be an " + std::to_string(n) + "-row matrix");
    std::vector<std::vector<ExtendedDistance>> dist(n);
    for (size_t r = 0; r < n; ++r) {
        const auto& row = j["dist"][r];
        if (!row.is_array() || row.size() != n)
            throw ValidationError("\"dist\" row " + std::to_string(r) + " has wrong length");
        for (size_t c = 0; c < n; ++c)
            dist[r].push_back(parse_extdist_field(row[c], "dist[" + std::to_string(r) + "][" +
                                                              std::to_string(c) + "]"));
    }

    FiniteInstance out;
    out.space = std::make_shared<FiniteSpace>(std::move(labels), std::move(dist));

    if (j.contains("sets")) {
        if (!j["sets"].is_array()) throw ValidationError("\"sets\" must be an array");
        for (const auto& s : j["sets"]) {
            if (!s.is_object() || !s.contains("name") || !s.contains("members"))
                throw ValidationError("each set needs \"name\" and \"members\"");
            const std::string name = s["name"].get<std::string>();
            if (out.set_index(name) >= 0) throw ValidationError("duplicate set name " + name);
            uint64_t mask = 0;
            for (const auto& m : s["members"]) {
                if (!m.is_string()) throw ValidationError("set " + name + ": members must be labels");
                int idx = out.space->index_of(m.get<std::string>());
                if (idx < 0)
                    throw ValidationError("set " + name + ": unknown point " + m.get<std::string>());
                mask |= 1ull << idx;
            }
            if (!mask) throw ValidationError("set " + name + " is empty");
            out.set_names.push_back(name);
            out.set_masks.push_back(mask);
        }
    }
    return out;
}

SceneInstance parse_scene_instance(const json& j) {
    if (!j.is_object() || !j.contains("norm") || !j.contains("sets"))
        throw ValidationError("scene instance needs \"norm\" and \"sets\"");
    if (!j["norm"].is_object() || !j["norm"].contains("unit_ball"))
        throw ValidationError("\"norm\" needs \"unit_ball\"");

    std::vector<convex::Vec2> ball;
    for (const auto& v : j["norm"]["unit_ball"]) ball.push_back(parse_point_field(v, "unit_ball"));
    if (ball.empty()) throw ValidationError("unit_ball must list vertices");

    SceneInstance out;
    out.norm = std::make_shared<convex::PolyhedralNorm>(convex::ConvexPolygon::from_vertex_list(ball));

    if (!j["sets"].is_array() || j["sets"].empty())
        throw ValidationError("\"sets\" must be a nonempty array");
    for (const auto& s : j["sets"]) {
        if (!s.is_object() || !s.contains("name") || !s.contains("vertices"))
            throw ValidationError("each set needs \"name\" and \"vertices\"");
        const std::string name = s["name"].get<std::string>();
        if (out.set_index(name) >= 0) throw ValidationError("duplicate set name " + name);
        std::vector<convex::Vec2> pts;
        for (const auto& v : s["vertices"]) pts.push_back(parse_point_field(v, "set " + name));
        if (pts.empty()) throw ValidationError("set " + name + " has no vertices");
        out.set_names.push_back(name);
        out.sets.push_back(convex::ConvexPolygon::from_vertex_list(pts));
    }
    return out;
}

TopologyFile parse_topology(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges") || !j.contains("boundary"))
        throw ValidationError("topology needs \"vertices\", \"edges\" and \"boundary\"");

    std::vector<std::string> names;
    for (const auto& v : j["vertices"]) {
        if (!v.is_string()) throw ValidationError("\"vertices\" entries must be strings");
        names.push_back(v.get<std::string>());
    }
    auto index_of = [&](const std::string& name) {
        for (size_t i = 0; i < names.size(); ++i)
            if (names[i] == name) return static_cast<int>(i);
        throw ValidationError("unknown vertex " + name);
    };

    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2) throw ValidationError("edges must be [u, v] pairs");
        edges.emplace_back(index_of(e[0].get<std::string>()), index_of(e[1].get<std::string>()));
    }

    std::vector<std::pair<int, std::string>> bound;
    for (const auto& [vertex, set_name] : j["boundary"].items())
        bound.emplace_back(index_of(vertex), set_name.get<std::string>());
    std::sort(bound.begin(), bound.end());

    std::vector<int> boundary;
    TopologyFile out{net::BoundaryGraph{}, {}};
    for (auto& [v, s] : bound) {
        boundary.push_back(v);
        out.bound_set_names.push_back(s);
    }
    out.graph = net::BoundaryGraph(std::move(names), std::move(edges), std::move(boundary));
    return out;
}

InstanceKind detect_instance_kind(const json& j) {
    if (j.is_object() && j.contains("points")) return InstanceKind::Finite;
    if (j.is_object() && j.contains("norm")) return InstanceKind::Convex2d;
    throw ValidationError("instance must contain \"points\" (finite) or \"norm\" (convex2d)");
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ValidationError(path + ": " + e.what());
    }
    return j;
}

void atomic_write_file(const std::string& path, const std::string& text) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw UsageError("cannot write " + tmp);
        out << text;
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) throw UsageError("cannot move report into place");
}

json rat_json(const Rat& r) { return r.str(); }

json extdist_json(const ExtendedDistance& d) { return d.str(); }

json rat_vector_json(const std::vector<Rat>& d) {
    json out = json::array();
    for (const Rat& r : d) out.push_back(rat_json(r));
    return out;
}

json polygon_json(const convex::ConvexPolygon& p) {
    json out = json::array();
    for (const auto& v : p.vertices()) out.push_back(json::array({v.x.str(), v.y.str()}));
    return out;
}

}  // namespace hypersteiner::io
