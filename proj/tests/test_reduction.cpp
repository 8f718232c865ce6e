#include "geomrep/reduction.hpp"

#include <set>

#include "doctest.h"
#include "helpers.hpp"

using namespace geomrep;

namespace {

WiringDiagram full_wiring(int n, unsigned long seed) {
    auto fx = fixture("random_simple(" + std::to_string(n) + "," + std::to_string(seed) + ")");
    return wiring_from_lines(std::get<HyperplaneArrangement>(fx));
}

std::set<std::set<int>> member_sets(const Hypergraph& h) {
    std::set<std::set<int>> out;
    for (const auto& e : h.edges) out.insert(std::set<int>(e.members.begin(), e.members.end()));
    return out;
}

}  // namespace

TEST_CASE("build_hypergraph: one pseudoline gives the 3-cell path") {
    WiringDiagram one;
    one.n_lines = 1;
    ReductionOutput r = build_hypergraph(one);
    CHECK(r.hypergraph.n_vertices == 3);
    CHECK(r.hypergraph.edges.size() == 2);
    CHECK(member_sets(r.hypergraph) ==
          std::set<std::set<int>>{{1, 2}, {2, 3}});
    CHECK(r.element_labels == std::vector<std::string>{"1", "1'"});
}

TEST_CASE("build_hypergraph: two crossing pseudolines") {
    WiringDiagram crossing;
    crossing.n_lines = 2;
    crossing.swaps = {{1, 2}};
    ReductionOutput r = build_hypergraph(crossing);
    CHECK(r.hypergraph.n_vertices == 9);
    CHECK(r.hypergraph.edges.size() == 4);
    for (const auto& e : r.hypergraph.edges) CHECK(e.members.size() == 6);

    // each pair edge(l), edge(l') covers all vertices
    for (int i = 1; i <= 2; ++i) {
        const Hyperedge* base = r.hypergraph.edge_by_id(std::to_string(i));
        const Hyperedge* twin = r.hypergraph.edge_by_id(std::to_string(i) + "'");
        REQUIRE(base);
        REQUIRE(twin);
        std::set<int> u(base->members.begin(), base->members.end());
        u.insert(twin->members.begin(), twin->members.end());
        CHECK(static_cast<int>(u.size()) == r.hypergraph.n_vertices);
    }

    // the 9 cells around the vertex have pairwise distinct membership patterns
    auto vs = vertex_side_data(crossing);
    REQUIRE(vs.size() == 1);
    auto keys = incident_cell_keys(r, vs[0]);
    CHECK(keys.size() == 9);
    std::set<std::vector<bool>> patterns;
    for (const auto& key : keys) {
        REQUIRE(r.vertex_of_cell.count(key));
        int v = r.vertex_of_cell.at(key);
        std::vector<bool> pattern;
        for (const auto& e : r.hypergraph.edges)
            pattern.push_back(r.hypergraph.edge_contains(e, v));
        patterns.insert(pattern);
    }
    CHECK(patterns.size() == 9);
}

TEST_CASE("build_hypergraph counting law on full simple arrangements") {
    for (int n = 1; n <= 5; ++n) {
        WiringDiagram w = full_wiring(n, 100 + static_cast<unsigned long>(n));
        ReductionOutput r = build_hypergraph(w);
        CHECK(r.hypergraph.n_vertices == 2 * n * n + 1);
        CHECK(static_cast<int>(r.hypergraph.edges.size()) == 2 * n);
        for (int i = 1; i <= n; ++i) {
            const Hyperedge* base = r.hypergraph.edge_by_id(std::to_string(i));
            const Hyperedge* twin = r.hypergraph.edge_by_id(std::to_string(i) + "'");
            REQUIRE(base);
            REQUIRE(twin);
            std::set<int> u(base->members.begin(), base->members.end());
            u.insert(twin->members.begin(), twin->members.end());
            CHECK(static_cast<int>(u.size()) == r.hypergraph.n_vertices);
        }
    }
}

TEST_CASE("build_hypergraph on a coordinate arrangement matches its wiring") {
    auto fx = fixture("random_simple(3,31)");
    const auto& arr = std::get<HyperplaneArrangement>(fx);
    ReductionOutput from_lines = build_hypergraph(arr);
    ReductionOutput from_wiring = build_hypergraph(wiring_from_lines(arr));
    CHECK(from_lines.hypergraph.n_vertices == from_wiring.hypergraph.n_vertices);

    // Vertex numbering differs between the two enumerations; the shared cell
    // sign keys give the bijection under which the hypergraphs must agree.
    REQUIRE(from_lines.vertex_of_cell.size() == from_wiring.vertex_of_cell.size());
    std::map<int, int> wiring_to_lines;
    for (const auto& [key, vid] : from_wiring.vertex_of_cell) {
        REQUIRE(from_lines.vertex_of_cell.count(key));
        wiring_to_lines[vid] = from_lines.vertex_of_cell.at(key);
    }
    for (const auto& e : from_wiring.hypergraph.edges) {
        const Hyperedge* other = from_lines.hypergraph.edge_by_id(e.id);
        REQUIRE(other);
        std::set<int> mapped;
        for (int v : e.members) mapped.insert(wiring_to_lines.at(v));
        CHECK(mapped == std::set<int>(other->members.begin(), other->members.end()));
    }
}

TEST_CASE("halfspace representation from the identity stretching") {
    // one line x = 0 (labels must match the wiring ids)
    HyperplaneArrangement one;
    one.dimension = 2;
    one.hyperplanes.push_back({"1", {{rat(0), rat(1)}, rat(0)}});
    WiringDiagram w;
    w.n_lines = 1;
    ReductionOutput r = build_hypergraph(w);
    Representation rep =
        halfspace_representation_from_stretching(r, vertex_side_data(w), one);
    CHECK(verify_representation(r.hypergraph, rep).pass);
    CHECK(rep.points.size() == 3);
    CHECK(rep.shapes.size() == 2);

    // grid(2): partial coordinate arrangement, identity stretching
    auto grid = std::get<HyperplaneArrangement>(fixture("grid(2)"));
    ReductionOutput rg = build_hypergraph(grid);
    CHECK(rg.hypergraph.n_vertices == 25);
    CHECK(rg.hypergraph.edges.size() == 8);
    Representation rep_g =
        halfspace_representation_from_stretching(rg, vertex_side_data(grid), grid);
    CHECK(verify_representation(rg.hypergraph, rep_g).pass);

    // random full arrangement, identity stretching
    auto arr = std::get<HyperplaneArrangement>(fixture("random_simple(4,77)"));
    ReductionOutput rr = build_hypergraph(arr);
    Representation rep_r =
        halfspace_representation_from_stretching(rr, vertex_side_data(arr), arr);
    CHECK(verify_representation(rr.hypergraph, rep_r).pass);

    // a non-stretching is rejected
    HyperplaneArrangement wrong = arr;
    wrong.hyperplanes[0].plane.normal = scale(arr.hyperplanes[0].plane.normal, Rat(-1));
    wrong.hyperplanes[0].plane.offset = -arr.hyperplanes[0].plane.offset;
    CHECK_THROWS_AS(
        halfspace_representation_from_stretching(rr, vertex_side_data(arr), wrong),
        std::invalid_argument);
}

TEST_CASE("builders accept a stretching that is not the source realization") {
    auto arr = std::get<HyperplaneArrangement>(fixture("random_simple(3,63)"));
    WiringDiagram w = wiring_from_lines(arr);
    ReductionOutput r = build_hypergraph(w);
    auto sides = vertex_side_data(w);

    // a nearby but different rational realization of the same combinatorics
    HyperplaneArrangement other = arr;
    for (size_t i = 0; i < other.hyperplanes.size(); ++i)
        other.hyperplanes[i].plane.offset += rat(static_cast<long>(i) + 1, 997);
    REQUIRE(check_stretching(w, other).ok);
    REQUIRE(serialize_arrangement(other) != serialize_arrangement(arr));

    Representation half = halfspace_representation_from_stretching(r, sides, other);
    CHECK(verify_representation(r.hypergraph, half).pass);

    DiskBuildResult disks = disk_representation_from_stretching(r, sides, other);
    CHECK(verify_representation(r.hypergraph, disks.representation).pass);

    HyperplaneArrangement seps = extract_separators(r.hypergraph, disks.representation, r);
    CHECK(check_stretching(sides, seps).ok);
}

TEST_CASE("halfspace builder in d=3 through a canvas lift") {
    auto planar = std::get<HyperplaneArrangement>(fixture("random_simple(2,29)"));
    CanvasLift lifted = canvas_lift(planar, 3);
    ReductionOutput r = build_hypergraph(lifted.arrangement);
    Representation rep = halfspace_representation_from_stretching(
        r, vertex_side_data(lifted.arrangement), lifted.arrangement);
    CHECK(verify_representation(r.hypergraph, rep).pass);
    CHECK(rep.points.begin()->second.size() == 3);
}

TEST_CASE("disk representation: single line and crossings") {
    for (int n = 1; n <= 3; ++n) {
        auto arr = std::get<HyperplaneArrangement>(
            fixture("random_simple(" + std::to_string(n) + ",19)"));
        ReductionOutput r = build_hypergraph(arr);
        DiskBuildResult built =
            disk_representation_from_stretching(r, vertex_side_data(arr), arr);
        CHECK(verify_representation(r.hypergraph, built.representation).pass);
        CHECK(built.representation.points.size() ==
              static_cast<size_t>(2 * n * n + 1));
        CHECK(built.representation.shapes.size() == static_cast<size_t>(2 * n));
        CHECK(built.scale_f > 0);

        // every vertex point and every tangency anchor lies in the scaled box
        for (const auto& [vid, p] : built.representation.points)
            for (const auto& c : p) CHECK(abs(c) <= built.box_halfwidth_scaled);
        for (const auto& [el, p] : built.tangency)
            for (const auto& c : p) CHECK(abs(c) <= built.box_halfwidth_scaled);
    }
}

TEST_CASE("disk representation without the equidistant rule") {
    auto arr = std::get<HyperplaneArrangement>(fixture("random_simple(2,53)"));
    ReductionOutput r = build_hypergraph(arr);
    DiskBuilderParams params;
    params.equidistant = false;
    DiskBuildResult built =
        disk_representation_from_stretching(r, vertex_side_data(arr), arr, params);
    CHECK(verify_representation(r.hypergraph, built.representation).pass);
}

TEST_CASE("disk representation through an ellipse metric") {
    auto arr = std::get<HyperplaneArrangement>(fixture("random_simple(2,23)"));
    ReductionOutput r = build_hypergraph(arr);
    DiskBuilderParams params;
    params.ellipse_q = Mat{{rat(1), rat(1)}, {rat(1), rat(2)}};  // (R^T R) for R=[[1,1],[0,1]]
    DiskBuildResult built =
        disk_representation_from_stretching(r, vertex_side_data(arr), arr, params);
    CHECK(verify_representation(r.hypergraph, built.representation).pass);
    for (const auto& [id, s] : built.representation.shapes)
        CHECK(std::holds_alternative<EllipseTranslate>(s));

    DiskBuilderParams refused;
    refused.ellipse_q = Mat{{rat(2), rat(0)}, {rat(0), rat(3)}};  // not a rational square
    CHECK_THROWS_AS(
        disk_representation_from_stretching(r, vertex_side_data(arr), arr, refused),
        std::invalid_argument);
}

TEST_CASE("extract_separators and the round trip") {
    // n = 1: a single bisector strictly between the two centers
    HyperplaneArrangement one;
    one.dimension = 2;
    one.hyperplanes.push_back({"1", {{rat(0), rat(1)}, rat(0)}});
    ReductionOutput r1 = build_hypergraph(one);
    DiskBuildResult b1 = disk_representation_from_stretching(r1, vertex_side_data(one), one);
    HyperplaneArrangement sep1 = extract_separators(r1.hypergraph, b1.representation, r1);
    REQUIRE(sep1.hyperplanes.size() == 1);
    const auto& c_base = std::get<DiskTranslate>(b1.representation.shapes.at("1")).center;
    const auto& c_twin = std::get<DiskTranslate>(b1.representation.shapes.at("1'")).center;
    CHECK(side_of_hyperplane(sep1.hyperplanes[0].plane, c_base) > 0);
    CHECK(side_of_hyperplane(sep1.hyperplanes[0].plane, c_twin) < 0);

    // round trip: the separators are a stretching of the source arrangement
    for (int n = 2; n <= 3; ++n) {
        auto arr = std::get<HyperplaneArrangement>(
            fixture("random_simple(" + std::to_string(n) + ",47)"));
        ReductionOutput r = build_hypergraph(arr);
        auto sides = vertex_side_data(arr);
        DiskBuildResult built = disk_representation_from_stretching(r, sides, arr);
        HyperplaneArrangement seps = extract_separators(r.hypergraph, built.representation, r);
        CHECK(seps.hyperplanes.size() == static_cast<size_t>(n));
        CHECK(check_stretching(sides, seps).ok);

        // n = 2: the separator crossing sits inside the central region; the
        // four quadrant points carry the four distinct sign patterns
        if (n == 2) {
            for (int s1 : {-1, 1})
                for (int s2 : {-1, 1}) {
                    std::string key = signs_to_key({s1, s1, s2, s2});
                    REQUIRE(r.vertex_of_cell.count(key));
                    const Point& p =
                        built.representation.points.at(r.vertex_of_cell.at(key));
                    CHECK(side_of_hyperplane(seps.hyperplanes[0].plane, p) == s1);
                    CHECK(side_of_hyperplane(seps.hyperplanes[1].plane, p) == s2);
                }
        }
    }
}

TEST_CASE("reduction serialization carries the provenance maps") {
    WiringDiagram crossing;
    crossing.n_lines = 2;
    crossing.swaps = {{1, 2}};
    ReductionOutput r = build_hypergraph(crossing);
    std::string json = serialize_reduction(r);
    CHECK(json.find("vertex_of_cell") != std::string::npos);
    CHECK(json.find("edge_of_element") != std::string::npos);
    CHECK(json.find("\"1'\"") != std::string::npos);
    // every cell key maps to a distinct vertex id
    std::set<int> ids;
    for (const auto& [key, vid] : r.vertex_of_cell) {
        CHECK(key.size() == r.element_labels.size());
        ids.insert(vid);
    }
    CHECK(static_cast<int>(ids.size()) == r.hypergraph.n_vertices);
}
