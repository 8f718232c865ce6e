#pragma once

#include "geomrep/geometry.hpp"
#include "geomrep/hypergraph.hpp"
#include "geomrep/verify.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace geomrep {

// One atom per (vertex, edge) pair: h_e,1*p_v,1 + ... + h_e,d*p_v,d REL h_e,d+1
// with REL "<=" exactly when v is a member of e. Satisfiable over the reals
// iff the hypergraph is representable by halfspaces in R^d.
struct EtrAtom {
    int vertex = 0;
    std::string edge;
    bool is_le = false;
};

struct EtrFormula {
    int dim = 0;
    std::vector<std::string> variables;  // d per vertex, then d+1 per edge
    std::vector<EtrAtom> atoms;
};

EtrFormula emit_etr(const Hypergraph& h, int dim);
std::string render_etr(const EtrFormula& f);

// Region assignment for one (vertex, translate) pair: a triangle of the hull
// triangulation, or a hull edge separating the point from the translate.
struct RegionChoice {
    bool inside = false;
    int index = 0;  // triangle index when inside, hull edge index otherwise
};

struct Certificate {
    std::map<std::pair<int, std::string>, RegionChoice> assignment;
};

enum class Outcome { Yes, No, Unknown };

struct DecisionStats {
    long lps_solved = 0;
    long certificates_checked = 0;
    long subtrees_pruned = 0;
    long restarts = 0;
    std::string note;
};

struct Decision {
    Outcome outcome = Outcome::Unknown;
    std::optional<Representation> witness;
    DecisionStats stats;
};

std::string serialize_decision(const Decision& d);
int exit_code(const Decision& d);  // 0 yes, 1 no, 2 unknown

enum class CertStatus { Feasible, Infeasible, Invalid };

struct CertCheckResult {
    CertStatus status = CertStatus::Invalid;
    std::optional<Representation> representation;  // exactly verified, when Feasible
    std::string detail;
    long lps_solved = 0;
};

/// Solves the certificate's linear program exactly; strict constraints share
/// one slack variable that the solver maximizes (feasible iff optimum > 0).
/// Certificates contradicting the incidence pattern are rejected before any LP.
CertCheckResult check_certificate(const Hypergraph& h, const std::vector<Point>& polygon,
                                  const Certificate& cert);

struct RecognizeOptions {
    long max_pairs = 12;  // refuse instances with more (vertex, edge) pairs
    bool prune = true;    // prune certificate subtrees by partial LP feasibility
};

/// Complete decision procedure for translates of a simple polygon: searches
/// the certificate space depth-first with LP checking. Yes answers carry an
/// exactly verified witness; no means every certificate was enumerated or
/// pruned. Exponential in the number of pairs; refuses above the cap.
Decision recognize_polygon_translates(const Hypergraph& h, const std::vector<Point>& polygon,
                                      const RecognizeOptions& options = {});

struct ShapeFamily {
    enum class Kind { Halfplanes, UnitDisks, Ellipses, PolygonTranslates, Intervals } kind =
        Kind::UnitDisks;
    Mat q;                       // Ellipses
    std::vector<Point> polygon;  // PolygonTranslates
};

struct SearchBudget {
    int restarts = 64;
    int iterations = 2000;
    unsigned long seed = 0xC0FFEEul;
};

/// Randomized multi-start penalty minimization; candidates are rounded to
/// rationals and verified exactly. Returns yes only on an exact pass, never no.
Decision search_representation(const Hypergraph& h, const ShapeFamily& family,
                               const SearchBudget& budget = {});

struct OracleParams {
    Rat resolution = Rat(1, 2);
    Rat point_range = Rat(2);  // point grid spans [0, point_range] per axis
    long max_configurations = 4000000;
};

enum class OracleOutcome { Yes, NoAtResolution };

struct OracleDecision {
    OracleOutcome outcome = OracleOutcome::NoAtResolution;
    std::optional<Representation> witness;
};

/// Exhaustive search over a rational grid of point locations and shape
/// translations. Yes results are exactly verified; "no" holds only at the
/// given resolution. Supports polygon translates, unit disks, and intervals.
OracleDecision brute_force_oracle(const Hypergraph& h, const ShapeFamily& family,
                                  const OracleParams& params = {});

std::vector<Point> unit_square();

}  // namespace geomrep
