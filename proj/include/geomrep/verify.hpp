#pragma once

#include "geomrep/geometry.hpp"
#include "geomrep/hypergraph.hpp"

#include <map>
#include <string>
#include <vector>

namespace geomrep {

// One rational point per vertex, one shape per hyperedge.
struct Representation {
    std::map<int, Point> points;
    std::map<std::string, Shape> shapes;
};

struct Violation {
    std::string edge;
    int vertex = 0;
    bool expected_in = false;
    bool observed_in = false;
};

struct VerifyReport {
    bool pass = false;
    std::vector<Violation> violations;
};

struct VerifyOptions {
    bool allow_coincident_points = false;
};

/// Exact membership check: pass iff for every edge e and vertex v,
/// contains(shape(e), point(v)) <=> v in e. All |V|*|E| tests are exact.
/// Throws on missing points/shapes, dimension mismatches, and (by default)
/// coincident vertex points.
VerifyReport verify_representation(const Hypergraph& h, const Representation& r,
                                   const VerifyOptions& options = {});

std::string serialize_representation(const Representation& r);
Representation parse_representation(const std::string& text);
std::string serialize_report(const VerifyReport& report);

std::string serialize_shape(const Shape& s);
Shape parse_shape(const std::string& text);

}  // namespace geomrep
