#include "geomrep/verify.hpp"

#include "doctest.h"
#include "helpers.hpp"

using namespace geomrep;

namespace {

Point pt(long x, long y) { return Point{rat(x), rat(y)}; }

Hypergraph two_vertices_one_edge() {
    return parse_hypergraph(R"({"n_vertices": 2, "edges": [{"id": "e", "members": [1]}]})");
}

}  // namespace

TEST_CASE("verify: vacuous and constructed cases") {
    Hypergraph lone = parse_hypergraph(R"({"n_vertices": 1, "edges": []})");
    Representation r;
    r.points[1] = pt(5, 7);
    CHECK(verify_representation(lone, r).pass);

    Hypergraph h = two_vertices_one_edge();
    Representation good;
    good.points[1] = pt(0, 0);
    good.points[2] = pt(5, 0);
    good.shapes["e"] = DiskTranslate{pt(0, 0)};
    CHECK(verify_representation(h, good).pass);

    Representation bad = good;
    bad.points[2] = Point{rat(1, 2), rat(0)};
    VerifyReport report = verify_representation(h, bad);
    CHECK_FALSE(report.pass);
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].edge == "e");
    CHECK(report.violations[0].vertex == 2);
    CHECK_FALSE(report.violations[0].expected_in);
    CHECK(report.violations[0].observed_in);
}

TEST_CASE("verify: structural errors") {
    Hypergraph h = two_vertices_one_edge();
    Representation missing_point;
    missing_point.points[1] = pt(0, 0);
    missing_point.shapes["e"] = DiskTranslate{pt(0, 0)};
    CHECK_THROWS_AS(verify_representation(h, missing_point), std::invalid_argument);

    Representation missing_shape;
    missing_shape.points[1] = pt(0, 0);
    missing_shape.points[2] = pt(5, 0);
    CHECK_THROWS_AS(verify_representation(h, missing_shape), std::invalid_argument);

    Representation mixed_dim;
    mixed_dim.points[1] = pt(0, 0);
    mixed_dim.points[2] = Point{rat(5)};
    mixed_dim.shapes["e"] = DiskTranslate{pt(0, 0)};
    CHECK_THROWS_AS(verify_representation(h, mixed_dim), std::invalid_argument);

    Representation coincident;
    coincident.points[1] = pt(0, 0);
    coincident.points[2] = pt(0, 0);
    coincident.shapes["e"] = DiskTranslate{pt(3, 3)};
    CHECK_THROWS_AS(verify_representation(h, coincident), std::invalid_argument);
    VerifyOptions allow;
    allow.allow_coincident_points = true;
    CHECK_NOTHROW(verify_representation(h, coincident, allow));
}

TEST_CASE("verify pass equals exact incidence-matrix equality") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 30; ++trial) {
        Hypergraph h = testutil::random_hypergraph(rng, 5, 3);
        Representation r;
        for (int v = 1; v <= h.n_vertices; ++v)
            r.points[v] = Point{testutil::rrat(rng, 6, 3), testutil::rrat(rng, 6, 3)};
        bool coincident = false;
        for (int u = 1; u <= h.n_vertices && !coincident; ++u)
            for (int v = u + 1; v <= h.n_vertices; ++v)
                coincident = coincident || r.points[u] == r.points[v];
        if (coincident) continue;
        for (const auto& e : h.edges)
            r.shapes[e.id] =
                DiskTranslate{Point{testutil::rrat(rng, 4, 2), testutil::rrat(rng, 4, 2)}};

        VerifyReport report = verify_representation(h, r);
        bool matrix_equal = true;
        for (const auto& e : h.edges)
            for (int v = 1; v <= h.n_vertices; ++v)
                matrix_equal = matrix_equal && (contains(r.shapes[e.id], r.points[v]) ==
                                                h.edge_contains(e, v));
        CHECK(report.pass == matrix_equal);
    }
}

TEST_CASE("verify is invariant under consistent relabeling") {
    Hypergraph h = parse_hypergraph(R"({"n_vertices": 3, "edges": [
        {"id": "a", "members": [1, 2]}, {"id": "b", "members": [3]}]})");
    Representation r;
    r.points[1] = pt(0, 0);
    r.points[2] = pt(1, 0);
    r.points[3] = pt(5, 5);
    r.shapes["a"] = DiskTranslate{Point{rat(1, 2), rat(0)}};
    r.shapes["b"] = DiskTranslate{pt(5, 5)};
    CHECK(verify_representation(h, r).pass);

    // rename edges and permute vertices consistently
    Hypergraph h2 = parse_hypergraph(R"({"n_vertices": 3, "edges": [
        {"id": "x", "members": [2, 3]}, {"id": "y", "members": [1]}]})");
    Representation r2;
    r2.points[2] = r.points[1];
    r2.points[3] = r.points[2];
    r2.points[1] = r.points[3];
    r2.shapes["x"] = r.shapes["a"];
    r2.shapes["y"] = r.shapes["b"];
    CHECK(verify_representation(h2, r2).pass);
}

TEST_CASE("representation JSON round trip") {
    Representation r;
    r.points[1] = Point{rat(1, 3), rat(-2)};
    r.points[2] = pt(4, 0);
    r.shapes["h"] = Halfspace{{rat(1), rat(2)}, rat(3, 7)};
    r.shapes["d"] = DiskTranslate{pt(0, 1)};
    r.shapes["q"] = EllipseTranslate{pt(0, 0), {{rat(2), rat(1)}, {rat(1), rat(2)}}};
    r.shapes["p"] = PolygonTranslate{{pt(0, 0), pt(1, 0), pt(0, 1)}, {rat(5), rat(5)}};

    Representation back = parse_representation(serialize_representation(r));
    CHECK(back.points == r.points);
    REQUIRE(back.shapes.size() == 4);
    CHECK(std::get<Halfspace>(back.shapes["h"]).normal == Vec{rat(1), rat(2)});
    CHECK(std::get<DiskTranslate>(back.shapes["d"]).center == pt(0, 1));
    CHECK(std::get<EllipseTranslate>(back.shapes["q"]).q[0][1] == rat(1));
    CHECK(std::get<PolygonTranslate>(back.shapes["p"]).translation == Vec{rat(5), rat(5)});
}
