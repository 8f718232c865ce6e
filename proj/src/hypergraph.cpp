#include "geomrep/hypergraph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace geomrep {

void Hypergraph::validate() const {
    if (n_vertices < 1) throw std::invalid_argument("hypergraph needs n_vertices >= 1");
    std::set<std::string> ids;
    for (const auto& e : edges) {
        if (e.id.empty()) throw std::invalid_argument("empty edge id");
        if (!ids.insert(e.id).second)
            throw std::invalid_argument("duplicate edge id: " + e.id);
        for (size_t i = 0; i < e.members.size(); ++i) {
            int v = e.members[i];
            if (v < 1 || v > n_vertices)
                throw std::invalid_argument("edge " + e.id + " has out-of-range member " +
                                            std::to_string(v));
            if (i > 0 && e.members[i - 1] >= v)
                throw std::invalid_argument("edge " + e.id + " members not sorted/unique");
        }
    }
}

const Hyperedge* Hypergraph::edge_by_id(const std::string& id) const {
    for (const auto& e : edges)
        if (e.id == id) return &e;
    return nullptr;
}

bool Hypergraph::edge_contains(const Hyperedge& e, int v) const {
    return std::binary_search(e.members.begin(), e.members.end(), v);
}

Hypergraph parse_hypergraph(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
        throw std::invalid_argument(std::string("malformed hypergraph document: ") + ex.what());
    }
    if (!j.is_object() || !j.contains("n_vertices") || !j.contains("edges"))
        throw std::invalid_argument("hypergraph document needs n_vertices and edges");
    if (!j["n_vertices"].is_number_integer())
        throw std::invalid_argument("n_vertices must be an integer");
    Hypergraph h;
    h.n_vertices = j["n_vertices"].get<int>();
    if (!j["edges"].is_array()) throw std::invalid_argument("edges must be an array");
    for (const auto& je : j["edges"]) {
        if (!je.is_object() || !je.contains("id") || !je.contains("members") ||
            !je["id"].is_string() || !je["members"].is_array())
            throw std::invalid_argument("each edge needs a string id and a members array");
        Hyperedge e;
        e.id = je["id"].get<std::string>();
        for (const auto& jm : je["members"]) {
            if (!jm.is_number_integer())
                throw std::invalid_argument("edge members must be integers");
            e.members.push_back(jm.get<int>());
        }
        std::sort(e.members.begin(), e.members.end());
        e.members.erase(std::unique(e.members.begin(), e.members.end()), e.members.end());
        h.edges.push_back(std::move(e));
    }
    h.validate();
    return h;
}

std::string serialize_hypergraph(const Hypergraph& h) {
    Hypergraph canon = h;
    canon.validate();
    std::sort(canon.edges.begin(), canon.edges.end(),
              [](const Hyperedge& a, const Hyperedge& b) { return a.id < b.id; });
    nlohmann::json j;
    j["n_vertices"] = canon.n_vertices;
    j["edges"] = nlohmann::json::array();
    for (const auto& e : canon.edges) {
        nlohmann::json je;
        je["id"] = e.id;
        je["members"] = e.members;
        j["edges"].push_back(je);
    }
    return j.dump(2);
}

IncidenceProfile incidence_profile(const Hypergraph& h, int v) {
    if (v < 1 || v > h.n_vertices)
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
    IncidenceProfile p;
    p.vertex = v;
    for (const auto& e : h.edges)
        if (h.edge_contains(e, v)) p.edge_ids.push_back(e.id);
    return p;
}

namespace {

// Consecutive-ones check over a growing prefix: an edge becomes "broken" once
// a non-member is placed after some member while other members remain unplaced.
struct OrderingSearch {
    const Hypergraph& h;
    std::vector<int> placed_count;  // per edge
    std::vector<char> broken;       // per edge: a later member would violate
    std::vector<int> prefix;
    std::vector<char> used;

    explicit OrderingSearch(const Hypergraph& hg)
        : h(hg),
          placed_count(hg.edges.size(), 0),
          broken(hg.edges.size(), 0),
          used(hg.n_vertices + 1, 0) {}

    bool dfs() {
        if (static_cast<int>(prefix.size()) == h.n_vertices) return true;
        for (int v = 1; v <= h.n_vertices; ++v) {
            if (used[v]) continue;
            bool ok = true;
            std::vector<std::pair<size_t, char>> undo;  // (edge idx, was broken)
            for (size_t ei = 0; ei < h.edges.size() && ok; ++ei) {
                const auto& e = h.edges[ei];
                bool member = h.edge_contains(e, v);
                if (member) {
                    if (broken[ei]) ok = false;
                } else if (placed_count[ei] > 0 &&
                           placed_count[ei] < static_cast<int>(e.members.size()) &&
                           !broken[ei]) {
                    undo.push_back({ei, broken[ei]});
                    broken[ei] = 1;
                }
            }
            if (ok) {
                for (size_t ei = 0; ei < h.edges.size(); ++ei)
                    if (h.edge_contains(h.edges[ei], v)) ++placed_count[ei];
                used[v] = 1;
                prefix.push_back(v);
                if (dfs()) return true;
                prefix.pop_back();
                used[v] = 0;
                for (size_t ei = 0; ei < h.edges.size(); ++ei)
                    if (h.edge_contains(h.edges[ei], v)) --placed_count[ei];
            }
            for (auto& [ei, was] : undo) broken[ei] = was;
        }
        return false;
    }
};

}  // namespace

IntervalDecision recognize_intervals(const Hypergraph& h) {
    h.validate();
    OrderingSearch search(h);
    IntervalDecision d;
    if (search.dfs()) {
        d.representable = true;
        d.ordering = search.prefix;
    }
    return d;
}

}  // namespace geomrep
