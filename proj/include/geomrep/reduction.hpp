#pragma once

#include "geomrep/arrangement.hpp"
#include "geomrep/hypergraph.hpp"
#include "geomrep/verify.hpp"

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace geomrep {

// Arrangement-to-hypergraph reduction: one vertex per full-dimensional cell
// of the doubled arrangement, one hyperedge per doubled element. The edge of
// an element contains exactly the cells on the side its twin lies in.
struct ReductionOutput {
    Hypergraph hypergraph;
    std::map<std::string, int> vertex_of_cell;           // sign key -> vertex id
    std::map<std::string, std::string> edge_of_element;  // doubled element label -> edge id
    std::vector<std::string> element_labels;          // doubled order [l1, l1', l2, l2', ...]
    std::vector<std::string> base_labels;
    CellComplex doubled_cells;  // combinatorics the builders match against
};

ReductionOutput build_hypergraph(const WiringDiagram& a);
ReductionOutput build_hypergraph(const HyperplaneArrangement& a);
ReductionOutput build_hypergraph(const Fixture& a);

std::string serialize_reduction(const ReductionOutput& r);

struct DiskBuilderParams {
    Rat box_halfwidth = Rat(1);      // normalization target: everything in [-w, w]^d
    Rat epsilon = Rat(1, 8);         // normal-cone tolerance around +/- (0, 1)
    std::optional<Rat> scale_f;      // override; computed from the sag bound when absent
    bool equidistant = true;         // place between-twin points on the midline
    std::optional<Mat> ellipse_q;    // build ellipse translates instead of unit disks
    std::optional<Mat> ellipse_q_sqrt;  // rational R with R^T R = q, when known
};

struct DiskBuildResult {
    Representation representation;
    std::map<std::string, Point> tangency;  // per doubled element, in the final frame
    Rat scale_f;                            // the factor the arrangement was shrunk by
    Rat box_halfwidth_scaled;               // final frame: everything within this box
};

/// Halfspace realization of the reduction: vertex points are the cell
/// representatives of the doubled stretching, matched to the reduction's
/// cells by sign vector; edge shapes are the halfspaces bounded by each
/// doubled hyperplane, oriented toward its twin. Exact; the result passes
/// verify_representation.
Representation halfspace_representation_from_stretching(const ReductionOutput& r,
                                                        const std::vector<VertexSides>& a,
                                                        const HyperplaneArrangement& b);

/// Unit-disk realization of the reduction (d = 2): normalizes the stretching
/// so all normals lie in a tight cone and everything fits in a small box,
/// scales by 1/f chosen from the curvature sag bound, and places one unit
/// disk per doubled element, tangent to the element's line on its twin side.
/// Exact; the result passes verify_representation.
DiskBuildResult disk_representation_from_stretching(const ReductionOutput& r,
                                                    const std::vector<VertexSides>& a,
                                                    const HyperplaneArrangement& b,
                                                    const DiskBuilderParams& params = {});

/// Backward step from a disk/ellipse representation: one separator hyperplane
/// per base element, the bisector of the two congruent translates of its twin
/// edges. The result is a stretching of the source arrangement.
HyperplaneArrangement extract_separators(const Hypergraph& h, const Representation& rep,
                                         const ReductionOutput& r);

/// The 3^d cells incident to a base vertex, as sign keys over the doubled
/// element order: for each pair through the vertex one of below/between/above,
/// every other element fixed to the vertex's side. Throws if dims disagree.
std::vector<std::string> incident_cell_keys(const ReductionOutput& r, const VertexSides& vertex);

}  // namespace geomrep
