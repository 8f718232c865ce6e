#pragma once

#include "geomrep/geometry.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace geomrep {

// Combinatorial pseudoline arrangement as a wiring diagram. Lines carry ids
// 1..n_lines; initial_order lists ids bottom-to-top at the far left (defaults
// to 1..n). Each swap crosses two lines that are currently adjacent in the
// vertical order; every pair crosses at most once (simple); pairs may never
// cross (partial arrangement). The positive side of a line is "above" it.
struct WiringDiagram {
    int n_lines = 0;
    std::vector<std::pair<int, int>> swaps;
    std::vector<int> initial_order;  // empty = identity

    std::vector<int> start_order() const;
    std::set<std::pair<int, int>> crossing_set() const;
    void validate() const;  // throws on inexecutable swaps or repeated crossings
};

struct LabeledHyperplane {
    std::string label;
    Hyperplane plane;
};

struct HyperplaneArrangement {
    int dimension = 2;
    std::vector<LabeledHyperplane> hyperplanes;

    void validate() const;
    int index_of(const std::string& label) const;  // -1 when absent
};

/// No k elements meeting in a set of dimension > d-k, no d+1 through a point.
bool is_simple(const HyperplaneArrangement& a, std::string* why = nullptr);

struct Cell {
    std::vector<int> signs;               // one of -1/+1 per element
    std::optional<Point> representative;  // interior point (coordinate case)
};

struct ArrangementVertex {
    std::vector<int> elements;   // indices of the defining elements
    std::optional<Point> point;  // coordinate case
};

struct CellComplex {
    std::vector<std::string> element_labels;
    std::vector<Cell> cells;
    std::vector<ArrangementVertex> vertices;
};

std::string signs_to_key(const std::vector<int>& signs);

/// All full-dimensional cells, with distinct sign vectors. Coordinate case
/// additionally carries an exact interior representative per cell (max-slack
/// point) and the arrangement's vertices. Throws on non-simple input.
CellComplex cells(const WiringDiagram& a);
CellComplex cells(const HyperplaneArrangement& a);

struct DoubledWiring {
    WiringDiagram base;
    // Line 2i-1 is base line i, line 2i its twin, inserted directly above.
    WiringDiagram doubled;
};

struct DoubledArrangement {
    HyperplaneArrangement base;
    // Elements ordered [l1, l1', l2, l2', ...]; twin of {n,c} is {n, c + t}
    // with rational t <= alpha * |n|.
    HyperplaneArrangement doubled;
    Rat gap;  // certified alpha: no vertex within distance alpha of a non-incident element
};

std::string twin_label(const std::string& base_label);

DoubledWiring insert_twins(const WiringDiagram& a);
/// Twin gap alpha defaults to one third of the minimum vertex-to-nonincident
/// element distance (parallel-pair distances included), as an exact rational
/// lower bound. Throws on non-simple input; empty arrangements double to empty.
DoubledArrangement insert_twins(const HyperplaneArrangement& a);
DoubledArrangement insert_twins(const HyperplaneArrangement& a, const Rat& alpha);

// A vertex of a PPHA with its recorded sides: the labels of the d elements
// through it, plus the side (+1/-1) of every other element.
struct VertexSides {
    std::vector<std::string> on;
    std::map<std::string, int> side;
};

std::vector<VertexSides> vertex_side_data(const WiringDiagram& a);
std::vector<VertexSides> vertex_side_data(const HyperplaneArrangement& a);

struct StretchReport {
    bool ok = true;
    struct Entry {
        std::vector<std::string> vertex;  // labels of the crossing elements
        bool ok = true;
        std::vector<std::string> offending;
    };
    std::vector<Entry> entries;
};

/// True iff every vertex of A exists in B (the corresponding hyperplanes meet
/// in a single point) and lies on the recorded side of every other hyperplane.
/// canvas_labels name extra hyperplanes of B that complete each planar vertex
/// to a d-fold intersection (lifted arrangements); they carry no side records.
StretchReport check_stretching(const std::vector<VertexSides>& a, const HyperplaneArrangement& b,
                               const std::vector<std::string>& canvas_labels = {});
StretchReport check_stretching(const WiringDiagram& a, const HyperplaneArrangement& b,
                               const std::vector<std::string>& canvas_labels = {});

struct CanvasLift {
    HyperplaneArrangement arrangement;       // lifted lines plus canvas planes
    std::vector<std::string> canvas_labels;  // x_i = 0 for i = 3..d
};

/// Embeds a planar arrangement into R^d by zero-padding coefficients and
/// adding the canvas hyperplanes x_i = 0. d_target = 2 is the identity.
CanvasLift canvas_lift(const HyperplaneArrangement& planar, int d_target);

/// Deterministic wiring diagram of a planar line arrangement. Requires every
/// normal to have positive y-coordinate (no vertical lines, "above" matches
/// the positive side) and a simple arrangement.
WiringDiagram wiring_from_lines(const HyperplaneArrangement& lines);

using Fixture = std::variant<WiringDiagram, HyperplaneArrangement>;

/// Named test arrangements: pappus_lines, pappus_wiring, non_pappus_wiring,
/// grid(n), random_simple(n, seed). Deterministic.
Fixture fixture(const std::string& name);

std::string serialize_wiring(const WiringDiagram& w);
WiringDiagram parse_wiring(const std::string& text);
std::string serialize_arrangement(const HyperplaneArrangement& a);
HyperplaneArrangement parse_arrangement(const std::string& text);

}  // namespace geomrep
