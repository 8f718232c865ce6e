#include "geomrep/verify.hpp"

#include <stdexcept>

#include "json.hpp"

namespace geomrep {

VerifyReport verify_representation(const Hypergraph& h, const Representation& r,
                                   const VerifyOptions& options) {
    h.validate();
    for (int v = 1; v <= h.n_vertices; ++v)
        if (!r.points.count(v))
            throw std::invalid_argument("representation missing point for vertex " +
                                        std::to_string(v));
    for (const auto& e : h.edges)
        if (!r.shapes.count(e.id))
            throw std::invalid_argument("representation missing shape for edge " + e.id);

    size_t dim = r.points.at(1).size();
    for (const auto& [v, p] : r.points)
        if (p.size() != dim)
            throw std::invalid_argument("representation points have mixed dimensions");
    for (const auto& [id, s] : r.shapes)
        if (shape_dimension(s) != static_cast<int>(dim))
            throw std::invalid_argument("shape " + id + " has wrong dimension");

    if (!options.allow_coincident_points) {
        for (auto it = r.points.begin(); it != r.points.end(); ++it) {
            auto jt = it;
            for (++jt; jt != r.points.end(); ++jt)
                if (it->second == jt->second)
                    throw std::invalid_argument(
                        "coincident vertex points: " + std::to_string(it->first) + " and " +
                        std::to_string(jt->first));
        }
    }

    VerifyReport report;
    for (const auto& e : h.edges) {
        const Shape& s = r.shapes.at(e.id);
        for (int v = 1; v <= h.n_vertices; ++v) {
            bool expected = h.edge_contains(e, v);
            bool observed = contains(s, r.points.at(v));
            if (expected != observed)
                report.violations.push_back({e.id, v, expected, observed});
        }
    }
    report.pass = report.violations.empty();
    return report;
}

namespace {

nlohmann::json point_to_json(const Point& p) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& c : p) j.push_back(rat_to_string(c));
    return j;
}

Point point_from_json(const nlohmann::json& j) {
    Point p;
    for (const auto& c : j) p.push_back(rat_from_string(c.get<std::string>()));
    return p;
}

nlohmann::json mat_to_json(const Mat& m) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& row : m) j.push_back(point_to_json(row));
    return j;
}

Mat mat_from_json(const nlohmann::json& j) {
    Mat m;
    for (const auto& row : j) m.push_back(point_from_json(row));
    return m;
}

nlohmann::json shape_to_json(const Shape& s) {
    nlohmann::json j;
    if (auto* h = std::get_if<Halfspace>(&s)) {
        j["kind"] = "halfspace";
        j["normal"] = point_to_json(h->normal);
        j["offset"] = rat_to_string(h->offset);
    } else if (auto* d = std::get_if<DiskTranslate>(&s)) {
        j["kind"] = "disk";
        j["center"] = point_to_json(d->center);
    } else if (auto* e = std::get_if<EllipseTranslate>(&s)) {
        j["kind"] = "ellipse";
        j["center"] = point_to_json(e->center);
        j["q"] = mat_to_json(e->q);
    } else {
        const auto& p = std::get<PolygonTranslate>(s);
        j["kind"] = "polygon";
        j["vertices"] = mat_to_json(p.reference);
        j["translation"] = point_to_json(p.translation);
    }
    return j;
}

Shape shape_from_json(const nlohmann::json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "halfspace")
        return Halfspace{point_from_json(j.at("normal")), rat_from_string(j.at("offset"))};
    if (kind == "disk") return DiskTranslate{point_from_json(j.at("center"))};
    if (kind == "ellipse") {
        EllipseTranslate e{point_from_json(j.at("center")), mat_from_json(j.at("q"))};
        if (!positive_definite(e.q))
            throw std::invalid_argument("ellipse q must be symmetric positive definite");
        return e;
    }
    if (kind == "polygon")
        return PolygonTranslate{mat_from_json(j.at("vertices")),
                                point_from_json(j.at("translation"))};
    throw std::invalid_argument("unknown shape kind: " + kind);
}

}  // namespace

std::string serialize_shape(const Shape& s) { return shape_to_json(s).dump(2); }

Shape parse_shape(const std::string& text) {
    return shape_from_json(nlohmann::json::parse(text));
}

std::string serialize_representation(const Representation& r) {
    nlohmann::json j;
    j["points"] = nlohmann::json::object();
    for (const auto& [v, p] : r.points) j["points"][std::to_string(v)] = point_to_json(p);
    j["shapes"] = nlohmann::json::object();
    for (const auto& [id, s] : r.shapes) j["shapes"][id] = shape_to_json(s);
    return j.dump(2);
}

Representation parse_representation(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
        throw std::invalid_argument(std::string("malformed representation document: ") + ex.what());
    }
    Representation r;
    for (const auto& [key, jp] : j.at("points").items())
        r.points[std::stoi(key)] = point_from_json(jp);
    for (const auto& [key, js] : j.at("shapes").items()) r.shapes[key] = shape_from_json(js);
    return r;
}

std::string serialize_report(const VerifyReport& report) {
    nlohmann::json j;
    j["pass"] = report.pass;
    j["violations"] = nlohmann::json::array();
    for (const auto& v : report.violations) {
        nlohmann::json jv;
        jv["edge"] = v.edge;
        jv["vertex"] = v.vertex;
        jv["expected"] = v.expected_in ? "in" : "out";
        jv["observed"] = v.observed_in ? "in" : "out";
        j["violations"].push_back(jv);
    }
    return j.dump(2);
}

}  // namespace geomrep
