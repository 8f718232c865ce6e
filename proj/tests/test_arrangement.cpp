#include "geomrep/arrangement.hpp"

#include <random>
#include <set>

#include "doctest.h"
#include "helpers.hpp"

using namespace geomrep;

namespace {

HyperplaneArrangement lines2d(const std::vector<std::tuple<long, long, long>>& rows) {
    HyperplaneArrangement a;
    a.dimension = 2;
    int id = 1;
    for (const auto& [nx, ny, c] : rows)
        a.hyperplanes.push_back({std::to_string(id++), {{rat(nx), rat(ny)}, rat(c)}});
    return a;
}

long expected_cells(int n_lines, long crossings) { return 1 + n_lines + crossings; }

}  // namespace

TEST_CASE("wiring diagram validation") {
    WiringDiagram w;
    w.n_lines = 3;
    w.swaps = {{1, 2}, {1, 3}, {2, 3}};
    CHECK_NOTHROW(w.validate());
    CHECK(w.crossing_set().size() == 3);

    WiringDiagram bad = w;
    bad.swaps = {{1, 3}};  // not adjacent at the start
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    WiringDiagram twice = w;
    twice.swaps = {{1, 2}, {2, 1}};
    CHECK_THROWS_AS(twice.validate(), std::invalid_argument);

    WiringDiagram perm = w;
    perm.initial_order = {2, 1, 1};
    CHECK_THROWS_AS(perm.validate(), std::invalid_argument);
}

TEST_CASE("cells of wiring diagrams: elementary counts") {
    WiringDiagram one;
    one.n_lines = 1;
    CHECK(cells(one).cells.size() == 2);

    WiringDiagram crossing;
    crossing.n_lines = 2;
    crossing.swaps = {{1, 2}};
    CHECK(cells(crossing).cells.size() == 4);

    WiringDiagram parallel;
    parallel.n_lines = 2;
    CHECK(cells(parallel).cells.size() == 3);

    // sign vectors pairwise distinct
    CellComplex cc = cells(crossing);
    std::set<std::string> keys;
    for (const auto& c : cc.cells) keys.insert(signs_to_key(c.signs));
    CHECK(keys.size() == cc.cells.size());
}

TEST_CASE("cells of coordinate arrangements match the closed form") {
    HyperplaneArrangement one = lines2d({{1, 0, 0}});
    CHECK(cells(one).cells.size() == 2);

    HyperplaneArrangement two = lines2d({{1, 0, 0}, {0, 1, 0}});
    CHECK(cells(two).cells.size() == 4);

    HyperplaneArrangement par = lines2d({{1, 0, 0}, {1, 0, 1}});
    CHECK(cells(par).cells.size() == 3);

    for (int n = 1; n <= 6; ++n) {
        for (unsigned long seed : {11ul, 22ul}) {
            auto fx = fixture("random_simple(" + std::to_string(n) + "," + std::to_string(seed) +
                              ")");
            const auto& arr = std::get<HyperplaneArrangement>(fx);
            CellComplex cc = cells(arr);
            CHECK(static_cast<long>(cc.cells.size()) ==
                  expected_cells(n, static_cast<long>(n) * (n - 1) / 2));
            // representatives realize their own sign vectors
            for (const auto& cell : cc.cells) {
                REQUIRE(cell.representative.has_value());
                for (size_t i = 0; i < arr.hyperplanes.size(); ++i)
                    CHECK(side_of_hyperplane(arr.hyperplanes[i].plane, *cell.representative) ==
                          cell.signs[i]);
            }
            // wiring extraction agrees on the cell count
            CHECK(cells(wiring_from_lines(arr)).cells.size() == cc.cells.size());
        }
    }
}

TEST_CASE("cells rejects non-simple input") {
    HyperplaneArrangement concurrent = lines2d({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}});
    CHECK_THROWS_AS(cells(concurrent), std::invalid_argument);
    HyperplaneArrangement duplicate = lines2d({{1, 0, 0}, {2, 0, 0}});
    CHECK_THROWS_AS(cells(duplicate), std::invalid_argument);
}

TEST_CASE("insert_twins: combinatorial doubling") {
    WiringDiagram one;
    one.n_lines = 1;
    DoubledWiring dw = insert_twins(one);
    CHECK(dw.doubled.n_lines == 2);
    CHECK(cells(dw.doubled).cells.size() == 3);

    WiringDiagram crossing;
    crossing.n_lines = 2;
    crossing.swaps = {{1, 2}};
    DoubledWiring dc = insert_twins(crossing);
    CHECK(dc.doubled.swaps.size() == 4);
    CHECK(cells(dc.doubled).cells.size() == 9);  // two crossing pseudolines: 9 cells

    // full simple arrangements: doubled cell count = 2n^2 + 1
    std::mt19937_64 rng(7);
    for (int n = 1; n <= 5; ++n) {
        auto fx = fixture("random_simple(" + std::to_string(n) + ",5)");
        WiringDiagram w = wiring_from_lines(std::get<HyperplaneArrangement>(fx));
        DoubledWiring d = insert_twins(w);
        CHECK(static_cast<long>(cells(d.doubled).cells.size()) == 2L * n * n + 1);
    }
}

TEST_CASE("insert_twins: coordinate doubling invariants") {
    auto fx = fixture("random_simple(3,42)");
    const auto& arr = std::get<HyperplaneArrangement>(fx);
    DoubledArrangement da = insert_twins(arr);
    CHECK(da.gap > 0);
    CHECK(da.doubled.hyperplanes.size() == 6);
    CHECK(is_simple(da.doubled));

    // twins are parallel to their partners and share crossing patterns
    for (size_t i = 0; i < 3; ++i) {
        CHECK(da.doubled.hyperplanes[2 * i].plane.normal ==
              da.doubled.hyperplanes[2 * i + 1].plane.normal);
        CHECK(da.doubled.hyperplanes[2 * i + 1].plane.offset >
              da.doubled.hyperplanes[2 * i].plane.offset);
        CHECK(da.doubled.hyperplanes[2 * i + 1].label ==
              twin_label(da.doubled.hyperplanes[2 * i].label));
    }

    // no base vertex within distance alpha of a non-incident element
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = i + 1; j < 3; ++j) {
            Mat rows = {arr.hyperplanes[i].plane.normal, arr.hyperplanes[j].plane.normal};
            Vec rhs = {arr.hyperplanes[i].plane.offset, arr.hyperplanes[j].plane.offset};
            auto vertex = solve_linear(rows, rhs);
            REQUIRE(vertex.has_value());
            for (size_t k = 0; k < 3; ++k) {
                if (k == i || k == j) continue;
                const auto& plane = arr.hyperplanes[k].plane;
                Rat val = dot(plane.normal, *vertex) - plane.offset;
                CHECK(val * val > da.gap * da.gap * norm_sq(plane.normal));
            }
        }
    CHECK(cells(da.doubled).cells.size() == 2 * 9 + 1);

    WiringDiagram empty;
    empty.n_lines = 0;
    CHECK(insert_twins(empty).doubled.n_lines == 0);
    HyperplaneArrangement none;
    none.dimension = 2;
    CHECK(insert_twins(none).doubled.hyperplanes.empty());
}

TEST_CASE("check_stretching: identity, flips, and relabeling") {
    auto fx = fixture("random_simple(4,9)");
    const auto& arr = std::get<HyperplaneArrangement>(fx);
    WiringDiagram w = wiring_from_lines(arr);

    StretchReport ok = check_stretching(w, arr);
    CHECK(ok.ok);
    CHECK(ok.entries.size() == 6);  // C(4,2) vertices

    // negating one normal flips recorded sides: reported as failing
    HyperplaneArrangement flipped = arr;
    flipped.hyperplanes[2].plane.normal = scale(arr.hyperplanes[2].plane.normal, Rat(-1));
    flipped.hyperplanes[2].plane.offset = -arr.hyperplanes[2].plane.offset;
    StretchReport bad = check_stretching(w, flipped);
    CHECK_FALSE(bad.ok);
    bool reported = false;
    for (const auto& e : bad.entries)
        for (const auto& off : e.offending) reported = reported || off == "3";
    CHECK(reported);

    // consistent relabeling of both inputs preserves the outcome
    std::vector<int> perm = {3, 1, 4, 2};  // new id of old id i
    WiringDiagram wperm;
    wperm.n_lines = 4;
    for (auto [a, b] : w.swaps)
        wperm.swaps.push_back({perm[static_cast<size_t>(a - 1)], perm[static_cast<size_t>(b - 1)]});
    std::vector<int> order = w.start_order();
    wperm.initial_order.clear();
    for (int id : order) wperm.initial_order.push_back(perm[static_cast<size_t>(id - 1)]);
    HyperplaneArrangement aperm = arr;
    for (size_t i = 0; i < 4; ++i)
        aperm.hyperplanes[i].label = std::to_string(perm[i]);
    CHECK(check_stretching(wperm, aperm).ok);

    // label mismatch is an error, not a false
    HyperplaneArrangement renamed = arr;
    renamed.hyperplanes[0].label = "x";
    CHECK_THROWS_AS(check_stretching(w, renamed), std::invalid_argument);
}

TEST_CASE("vertex_side_data from coordinates matches the wiring diagram") {
    auto fx = fixture("random_simple(4,13)");
    const auto& arr = std::get<HyperplaneArrangement>(fx);
    auto from_lines = vertex_side_data(arr);
    auto from_wiring = vertex_side_data(wiring_from_lines(arr));
    REQUIRE(from_lines.size() == from_wiring.size());
    auto key = [](const VertexSides& vs) {
        std::string k;
        for (const auto& l : vs.on) k += l + ",";
        k += "|";
        for (const auto& [l, s] : vs.side) k += l + (s > 0 ? "+" : "-");
        return k;
    };
    std::set<std::string> a, b;
    for (const auto& vs : from_lines) a.insert(key(vs));
    for (const auto& vs : from_wiring) b.insert(key(vs));
    CHECK(a == b);
}

TEST_CASE("canvas_lift pads coefficients and restricts back exactly") {
    HyperplaneArrangement l = lines2d({{1, 1, 1}});
    CanvasLift lifted = canvas_lift(l, 3);
    REQUIRE(lifted.arrangement.hyperplanes.size() == 2);
    CHECK(lifted.arrangement.hyperplanes[0].plane.normal == Vec{rat(1), rat(1), rat(0)});
    CHECK(lifted.canvas_labels == std::vector<std::string>{"canvas_3"});
    CHECK(lifted.arrangement.hyperplanes[1].plane.normal == Vec{rat(0), rat(0), rat(1)});

    CanvasLift identity = canvas_lift(l, 2);
    CHECK(identity.canvas_labels.empty());
    CHECK(identity.arrangement.hyperplanes.size() == 1);

    CHECK_THROWS_AS(canvas_lift(l, 1), std::invalid_argument);

    // lifted vertices project to crossings of L, verified by exact solving
    auto fx = fixture("random_simple(4,21)");
    const auto& arr = std::get<HyperplaneArrangement>(fx);
    for (int d : {3, 4}) {
        CanvasLift cl = canvas_lift(arr, d);
        WiringDiagram w = wiring_from_lines(arr);
        StretchReport rep = check_stretching(w, cl.arrangement, cl.canvas_labels);
        CHECK(rep.ok);
        // restriction recovers the planar coefficients exactly
        for (size_t i = 0; i < arr.hyperplanes.size(); ++i) {
            const auto& lifted_plane = cl.arrangement.hyperplanes[i].plane;
            CHECK(lifted_plane.normal[0] == arr.hyperplanes[i].plane.normal[0]);
            CHECK(lifted_plane.normal[1] == arr.hyperplanes[i].plane.normal[1]);
            for (int k = 2; k < d; ++k) CHECK(lifted_plane.normal[static_cast<size_t>(k)] == 0);
            CHECK(lifted_plane.offset == arr.hyperplanes[i].plane.offset);
        }
    }
}

TEST_CASE("fixtures are deterministic and well formed") {
    auto g2 = std::get<HyperplaneArrangement>(fixture("grid(2)"));
    CHECK(g2.hyperplanes.size() == 4);
    CHECK(cells(g2).cells.size() == 9);

    auto r1 = std::get<HyperplaneArrangement>(fixture("random_simple(5,77)"));
    auto r2 = std::get<HyperplaneArrangement>(fixture("random_simple(5,77)"));
    CHECK(serialize_arrangement(r1) == serialize_arrangement(r2));

    auto pl = std::get<HyperplaneArrangement>(fixture("pappus_lines"));
    CHECK(pl.hyperplanes.size() == 9);
    CHECK(is_simple(pl));

    auto pw = std::get<WiringDiagram>(fixture("pappus_wiring"));
    CHECK(check_stretching(pw, pl).ok);

    auto npw = std::get<WiringDiagram>(fixture("non_pappus_wiring"));
    CHECK_NOTHROW(npw.validate());
    CHECK(npw.swaps.size() == pw.swaps.size());
    CHECK(npw.swaps != pw.swaps);

    CHECK_THROWS_AS(fixture("unknown"), std::invalid_argument);
}

TEST_CASE("arrangement and wiring JSON round trips") {
    auto arr = std::get<HyperplaneArrangement>(fixture("random_simple(3,4)"));
    HyperplaneArrangement back = parse_arrangement(serialize_arrangement(arr));
    CHECK(back.dimension == arr.dimension);
    REQUIRE(back.hyperplanes.size() == arr.hyperplanes.size());
    for (size_t i = 0; i < arr.hyperplanes.size(); ++i) {
        CHECK(back.hyperplanes[i].label == arr.hyperplanes[i].label);
        CHECK(back.hyperplanes[i].plane.normal == arr.hyperplanes[i].plane.normal);
        CHECK(back.hyperplanes[i].plane.offset == arr.hyperplanes[i].plane.offset);
    }

    WiringDiagram w = wiring_from_lines(arr);
    WiringDiagram wback = parse_wiring(serialize_wiring(w));
    CHECK(wback.n_lines == w.n_lines);
    CHECK(wback.swaps == w.swaps);
    CHECK(wback.start_order() == w.start_order());
}
