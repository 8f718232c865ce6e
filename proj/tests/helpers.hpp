#pragma once

// Test-side oracles, independent of the library implementations they check.

#include "geomrep/geometry.hpp"
#include "geomrep/hypergraph.hpp"
#include "geomrep/lp.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

namespace testutil {

using namespace geomrep;

inline Rat rrat(std::mt19937_64& rng, int num_range = 10, int den_range = 6) {
    std::uniform_int_distribution<int> num(-num_range, num_range);
    std::uniform_int_distribution<int> den(1, den_range);
    return rat(num(rng), den(rng));
}

inline Hypergraph random_hypergraph(std::mt19937_64& rng, int max_v = 7, int max_e = 4) {
    std::uniform_int_distribution<int> nv(1, max_v);
    Hypergraph h;
    h.n_vertices = nv(rng);
    std::uniform_int_distribution<int> ne(0, max_e);
    int edges = ne(rng);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int e = 0; e < edges; ++e) {
        Hyperedge edge;
        edge.id = "e" + std::to_string(e + 1);
        for (int v = 1; v <= h.n_vertices; ++v)
            if (coin(rng)) edge.members.push_back(v);
        h.edges.push_back(edge);
    }
    return h;
}

// Exhaustive consecutive-ones check over all vertex orderings.
inline bool intervals_by_enumeration(const Hypergraph& h) {
    std::vector<int> order(static_cast<size_t>(h.n_vertices));
    std::iota(order.begin(), order.end(), 1);
    do {
        bool ok = true;
        for (const auto& e : h.edges) {
            if (e.members.size() < 2) continue;
            int lo = h.n_vertices, hi = -1;
            for (size_t pos = 0; pos < order.size(); ++pos) {
                if (h.edge_contains(e, order[pos])) {
                    lo = std::min<int>(lo, static_cast<int>(pos));
                    hi = std::max<int>(hi, static_cast<int>(pos));
                }
            }
            if (hi - lo + 1 != static_cast<int>(e.members.size())) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    } while (std::next_permutation(order.begin(), order.end()));
    return false;
}

// Brute-force extremeness: idx is NOT extreme iff it lies in some triangle
// of other points (Caratheodory) or on a segment between two others.
inline bool is_extreme_brute(const std::vector<Point>& pts, size_t idx) {
    for (size_t a = 0; a < pts.size(); ++a) {
        if (a == idx) continue;
        for (size_t b = a + 1; b < pts.size(); ++b) {
            if (b == idx) continue;
            for (size_t c = b + 1; c < pts.size(); ++c) {
                if (c == idx) continue;
                int o1 = orientation(pts[a], pts[b], pts[idx]);
                int o2 = orientation(pts[b], pts[c], pts[idx]);
                int o3 = orientation(pts[c], pts[a], pts[idx]);
                if (o1 >= 0 && o2 >= 0 && o3 >= 0 && orientation(pts[a], pts[b], pts[c]) > 0)
                    return false;
                if (o1 <= 0 && o2 <= 0 && o3 <= 0 && orientation(pts[a], pts[b], pts[c]) < 0)
                    return false;
            }
        }
    }
    // on-segment between two others is also non-extreme
    for (size_t a = 0; a < pts.size(); ++a) {
        if (a == idx) continue;
        for (size_t b = a + 1; b < pts.size(); ++b) {
            if (b == idx) continue;
            if (orientation(pts[a], pts[b], pts[idx]) != 0) continue;
            bool within = true;
            for (int c = 0; c < 2; ++c) {
                Rat lo = std::min(pts[a][c], pts[b][c]), hi = std::max(pts[a][c], pts[b][c]);
                within = within && pts[idx][c] >= lo && pts[idx][c] <= hi;
            }
            if (within) return false;
        }
    }
    return true;
}

// Winding-number point-in-polygon oracle (exact quadrant walk), boundary true.
inline bool point_in_polygon_winding(const std::vector<Point>& poly, const Point& p) {
    size_t n = poly.size();
    for (size_t i = 0; i < n; ++i) {
        const Point& a = poly[i];
        const Point& b = poly[(i + 1) % n];
        if (orientation(a, b, p) == 0) {
            bool within = true;
            for (int c = 0; c < 2; ++c) {
                Rat lo = std::min(a[c], b[c]), hi = std::max(a[c], b[c]);
                within = within && p[c] >= lo && p[c] <= hi;
            }
            if (within) return true;
        }
    }
    long winding = 0;
    for (size_t i = 0; i < n; ++i) {
        const Point& a = poly[i];
        const Point& b = poly[(i + 1) % n];
        if (a[1] <= p[1]) {
            if (b[1] > p[1] && orientation(a, b, p) > 0) ++winding;
        } else {
            if (b[1] <= p[1] && orientation(a, b, p) < 0) --winding;
        }
    }
    return winding != 0;
}

// Fraction-free Fourier-Motzkin feasibility and optimum oracle for
// max c.x st A x <= b (equalities pre-split by the caller).
struct FmResult {
    bool feasible = false;
    bool bounded = false;
    Rat optimum;
};

// Rows are kept normalized (first nonzero coefficient has absolute value 1)
// and deduplicated in a set; variables are eliminated fewest-products first.
inline FmResult fm_maximize(const std::vector<Vec>& in_rows, const Vec& in_rhs,
                            const Vec& objective) {
    size_t nv = objective.size();
    using Row = std::vector<Rat>;  // coefficients then rhs, z at index nv
    std::set<Row> rows;
    bool contradiction = false;

    auto insert_row = [&](Row r) {
        Rat pivot = 0;
        for (size_t k = 0; k + 1 < r.size(); ++k) {
            if (r[k] != 0) {
                pivot = abs(r[k]);
                break;
            }
        }
        if (pivot == 0) {
            if (r.back() < 0) contradiction = true;
            return;  // trivially true otherwise
        }
        for (auto& c : r) c /= pivot;
        rows.insert(std::move(r));
    };

    for (size_t i = 0; i < in_rows.size(); ++i) {
        Row r = in_rows[i];
        r.push_back(Rat(0));  // z coefficient
        r.push_back(in_rhs[i]);
        insert_row(std::move(r));
    }
    {
        Row r1(nv + 2, Rat(0)), r2(nv + 2, Rat(0));
        for (size_t j = 0; j < nv; ++j) {
            r1[j] = -objective[j];
            r2[j] = objective[j];
        }
        r1[nv] = 1;
        r2[nv] = -1;
        insert_row(std::move(r1));
        insert_row(std::move(r2));
    }

    std::vector<bool> eliminated(nv, false);
    for (size_t round = 0; round < nv && !contradiction; ++round) {
        // fewest pos*neg products first
        size_t best_var = nv;
        size_t best_cost = 0;
        for (size_t var = 0; var < nv; ++var) {
            if (eliminated[var]) continue;
            size_t pos = 0, neg = 0;
            for (const auto& r : rows) {
                if (r[var] > 0) ++pos;
                if (r[var] < 0) ++neg;
            }
            size_t cost = pos * neg;
            if (best_var == nv || cost < best_cost) {
                best_var = var;
                best_cost = cost;
            }
        }
        size_t var = best_var;
        eliminated[var] = true;

        std::set<Row> next;
        std::vector<Row> pos, neg;
        for (const auto& r : rows) {
            if (r[var] > 0)
                pos.push_back(r);
            else if (r[var] < 0)
                neg.push_back(r);
            else
                next.insert(r);
        }
        rows = std::move(next);
        for (const auto& p : pos)
            for (const auto& q : neg) {
                Rat a = p[var], b = -q[var];
                Row combo(p.size());
                for (size_t k = 0; k < combo.size(); ++k) combo[k] = b * p[k] + a * q[k];
                insert_row(std::move(combo));
                if (contradiction) return {};
            }
        if (rows.size() > 200000) throw std::runtime_error("fm oracle: row blowup");
    }
    if (contradiction) return {};

    // Remaining rows constrain z only.
    FmResult result;
    std::optional<Rat> upper, lower;
    for (const auto& r : rows) {
        Rat a = r[nv];
        Rat c = r.back();
        if (a == 0) {
            if (c < 0) return result;
        } else if (a > 0) {
            Rat bound = c / a;
            if (!upper || bound < *upper) upper = bound;
        } else {
            Rat bound = c / a;  // z >= bound
            if (!lower || bound > *lower) lower = bound;
        }
    }
    if (lower && upper && *lower > *upper) return result;
    result.feasible = true;
    result.bounded = upper.has_value();
    if (upper) result.optimum = *upper;
    return result;
}

inline FmResult fm_oracle(const LinearProgram& lp) {
    std::vector<Vec> rows;
    Vec rhs;
    for (const auto& c : lp.constraints) {
        rows.push_back(c.coeffs);
        rhs.push_back(c.rhs);
        if (c.rel == Rel::Eq) {
            rows.push_back(scale(c.coeffs, Rat(-1)));
            rhs.push_back(-c.rhs);
        }
    }
    Vec obj = lp.objective ? *lp.objective : Vec(lp.variables.size(), Rat(0));
    return fm_maximize(rows, rhs, obj);
}

}  // namespace testutil
