#pragma once

#include <optional>
#include <string>
#include <vector>

namespace geomrep {

struct Hyperedge {
    std::string id;
    std::vector<int> members;  // sorted ascending, no duplicates
};

// Vertices are the ids 1..n_vertices. Edge ids are pairwise distinct;
// member sets may repeat and may be empty.
struct Hypergraph {
    int n_vertices = 0;
    std::vector<Hyperedge> edges;

    void validate() const;  // throws std::invalid_argument on violation
    const Hyperedge* edge_by_id(const std::string& id) const;
    bool edge_contains(const Hyperedge& e, int v) const;
};

struct IncidenceProfile {
    int vertex = 0;
    std::vector<std::string> edge_ids;  // in edge-list order
};

/// Parses the canonical JSON document
/// {"n_vertices": n, "edges": [{"id": s, "members": [..]}, ...]}.
Hypergraph parse_hypergraph(const std::string& text);

/// Canonical serialization: edges sorted by id, members ascending.
std::string serialize_hypergraph(const Hypergraph& h);

/// The edges containing v. Throws when v is out of range.
IncidenceProfile incidence_profile(const Hypergraph& h, int v);

struct IntervalDecision {
    bool representable = false;
    std::vector<int> ordering;  // witness when representable
};

/// Decides whether some total vertex order makes every edge consecutive
/// (d=1 representability by translates / halfspaces on a line).
/// Ordering search with pruning; exponential beyond n ~ 12.
IntervalDecision recognize_intervals(const Hypergraph& h);

}  // namespace geomrep
