#include "geomrep/svg.hpp"

#include "geomrep/reduction.hpp"

#include "doctest.h"

using namespace geomrep;

namespace {

size_t count_of(const std::string& text, const std::string& needle) {
    size_t n = 0, pos = 0;
    while ((pos = text.find(needle, pos)) != std::string::npos) {
        ++n;
        pos += needle.size();
    }
    return n;
}

}  // namespace

TEST_CASE("arrangement rendering: element counts and determinism") {
    HyperplaneArrangement one;
    one.dimension = 2;
    one.hyperplanes.push_back({"1", {{rat(0), rat(1)}, rat(0)}});
    std::string svg = render_arrangement_svg(one);
    CHECK(count_of(svg, "<line ") == 1);

    // doubled grid(2): 8 line elements and 25 cell marks
    auto grid = std::get<HyperplaneArrangement>(fixture("grid(2)"));
    DoubledArrangement doubled = insert_twins(grid);
    std::string dsvg = render_arrangement_svg(doubled.doubled);
    CHECK(count_of(dsvg, "<line ") == 8);
    CHECK(count_of(dsvg, "<circle ") == 25);

    CHECK(render_arrangement_svg(doubled.doubled) == dsvg);  // byte identical
}

TEST_CASE("wiring rendering draws one polyline per wire") {
    WiringDiagram w;
    w.n_lines = 3;
    w.swaps = {{1, 2}, {1, 3}, {2, 3}};
    std::string svg = render_wiring_svg(w);
    CHECK(count_of(svg, "<polyline ") == 3);
    CHECK(render_wiring_svg(w) == svg);
}

TEST_CASE("representation rendering covers all shape kinds") {
    Representation r;
    r.points[1] = {rat(0), rat(0)};
    r.points[2] = {rat(3), rat(0)};
    r.shapes["d"] = DiskTranslate{{rat(0), rat(0)}};
    r.shapes["h"] = Halfspace{{rat(1), rat(0)}, rat(2)};
    r.shapes["e"] = EllipseTranslate{{rat(3), rat(0)}, {{rat(2), rat(0)}, {rat(0), rat(1)}}};
    r.shapes["p"] = PolygonTranslate{{{rat(0), rat(0)}, {rat(1), rat(0)}, {rat(0), rat(1)}},
                                     {rat(-2), rat(-2)}};
    std::string svg = render_representation_svg(r);
    CHECK(count_of(svg, "<circle id=\"shape-d\"") == 1);
    CHECK(count_of(svg, "<line id=\"shape-h\"") == 1);
    CHECK(count_of(svg, "<polygon id=\"shape-e\"") == 1);
    CHECK(count_of(svg, "<polygon id=\"shape-p\"") == 1);
    CHECK(count_of(svg, "<text ") == 2);  // one label per point
    CHECK(render_representation_svg(r) == svg);
}
