#include "geomrep/arrangement.hpp"

#include "geomrep/lp.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace geomrep {

namespace {

std::pair<int, int> norm_pair(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

void for_each_combination(int m, int k, const std::function<void(const std::vector<int>&)>& fn) {
    if (k > m || k < 0) return;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        fn(idx);
        int pos = k - 1;
        while (pos >= 0 && idx[pos] == m - k + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
}

Rat random_rat(std::mt19937_64& rng, int num_range, int den_range) {
    std::uniform_int_distribution<int> num(-num_range, num_range);
    std::uniform_int_distribution<int> den(1, den_range);
    return rat(num(rng), den(rng));
}

}  // namespace

// ---------------------------------------------------------------------------
// WiringDiagram
// ---------------------------------------------------------------------------

std::vector<int> WiringDiagram::start_order() const {
    if (!initial_order.empty()) return initial_order;
    std::vector<int> ord(n_lines);
    for (int i = 0; i < n_lines; ++i) ord[i] = i + 1;
    return ord;
}

std::set<std::pair<int, int>> WiringDiagram::crossing_set() const {
    std::set<std::pair<int, int>> s;
    for (const auto& [a, b] : swaps) s.insert(norm_pair(a, b));
    return s;
}

void WiringDiagram::validate() const {
    if (n_lines < 0) throw std::invalid_argument("wiring diagram: negative line count");
    std::vector<int> ord = start_order();
    if (static_cast<int>(ord.size()) != n_lines)
        throw std::invalid_argument("wiring diagram: initial_order size mismatch");
    std::vector<char> seen(n_lines + 1, 0);
    for (int id : ord) {
        if (id < 1 || id > n_lines || seen[id])
            throw std::invalid_argument("wiring diagram: initial_order is not a permutation");
        seen[id] = 1;
    }
    std::vector<int> level(n_lines + 1, 0);
    for (int pos = 0; pos < n_lines; ++pos) level[ord[pos]] = pos;
    std::set<std::pair<int, int>> crossed;
    for (const auto& [a, b] : swaps) {
        if (a < 1 || a > n_lines || b < 1 || b > n_lines || a == b)
            throw std::invalid_argument("wiring diagram: bad swap ids");
        if (!crossed.insert(norm_pair(a, b)).second)
            throw std::invalid_argument("wiring diagram: pair crosses more than once");
        if (std::abs(level[a] - level[b]) != 1)
            throw std::invalid_argument("wiring diagram: swap of non-adjacent lines");
        std::swap(level[a], level[b]);
    }
}

// ---------------------------------------------------------------------------
// HyperplaneArrangement
// ---------------------------------------------------------------------------

void HyperplaneArrangement::validate() const {
    if (dimension < 1) throw std::invalid_argument("arrangement: dimension must be >= 1");
    std::set<std::string> labels;
    for (const auto& lh : hyperplanes) {
        if (lh.label.empty()) throw std::invalid_argument("arrangement: empty label");
        if (!labels.insert(lh.label).second)
            throw std::invalid_argument("arrangement: duplicate label " + lh.label);
        if (static_cast<int>(lh.plane.normal.size()) != dimension)
            throw std::invalid_argument("arrangement: normal dimension mismatch at " + lh.label);
        bool nonzero = false;
        for (const auto& v : lh.plane.normal) nonzero = nonzero || v != 0;
        if (!nonzero) throw std::invalid_argument("arrangement: zero normal at " + lh.label);
    }
}

int HyperplaneArrangement::index_of(const std::string& label) const {
    for (size_t i = 0; i < hyperplanes.size(); ++i)
        if (hyperplanes[i].label == label) return static_cast<int>(i);
    return -1;
}

bool is_simple(const HyperplaneArrangement& a, std::string* why) {
    a.validate();
    int d = a.dimension;
    int m = static_cast<int>(a.hyperplanes.size());
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };

    // k-subsets with a nonempty intersection must have full-rank normals.
    for (int k = 2; k <= std::min(d, m); ++k) {
        bool bad = false;
        std::string msg;
        for_each_combination(m, k, [&](const std::vector<int>& idx) {
            if (bad) return;
            Mat normals;
            Mat augmented;
            for (int i : idx) {
                normals.push_back(a.hyperplanes[i].plane.normal);
                Vec row = a.hyperplanes[i].plane.normal;
                row.push_back(a.hyperplanes[i].plane.offset);
                augmented.push_back(row);
            }
            int rn = rank(normals);
            if (rn < k && rank(augmented) == rn) {
                bad = true;
                msg = "elements meet in a set of too-high dimension (k=" + std::to_string(k) + ")";
            }
        });
        if (bad) return fail(msg);
    }

    // No d+1 elements through a common point: check every vertex.
    if (m > d) {
        bool bad = false;
        std::string msg;
        for_each_combination(m, d, [&](const std::vector<int>& idx) {
            if (bad) return;
            Mat rows;
            Vec rhs;
            for (int i : idx) {
                rows.push_back(a.hyperplanes[i].plane.normal);
                rhs.push_back(a.hyperplanes[i].plane.offset);
            }
            auto sol = solve_linear(rows, rhs);
            if (!sol) return;
            for (int j = 0; j < m; ++j) {
                if (std::find(idx.begin(), idx.end(), j) != idx.end()) continue;
                if (side_of_hyperplane(a.hyperplanes[j].plane, *sol) == 0) {
                    bad = true;
                    msg = "more than d elements through a point (extra: " +
                          a.hyperplanes[j].label + ")";
                    return;
                }
            }
        });
        if (bad) return fail(msg);
    }
    return true;
}

// ---------------------------------------------------------------------------
// Cells
// ---------------------------------------------------------------------------

std::string signs_to_key(const std::vector<int>& signs) {
    std::string key(signs.size(), '?');
    for (size_t i = 0; i < signs.size(); ++i) key[i] = signs[i] > 0 ? '+' : '-';
    return key;
}

CellComplex cells(const WiringDiagram& a) {
    a.validate();
    int n = a.n_lines;
    CellComplex cc;
    for (int i = 1; i <= n; ++i) cc.element_labels.push_back(std::to_string(i));

    std::vector<int> ord = a.start_order();
    std::vector<int> level(n + 1, 0);
    for (int pos = 0; pos < n; ++pos) level[ord[pos]] = pos;

    std::set<std::vector<int>> seen;
    auto emit_column = [&]() {
        for (int gap = 0; gap <= n; ++gap) {
            std::vector<int> signs(n);
            for (int id = 1; id <= n; ++id) signs[id - 1] = level[id] < gap ? 1 : -1;
            if (seen.insert(signs).second) cc.cells.push_back(Cell{signs, std::nullopt});
        }
    };

    emit_column();
    for (const auto& [x, y] : a.swaps) {
        ArrangementVertex v;
        v.elements = {std::min(x, y) - 1, std::max(x, y) - 1};
        cc.vertices.push_back(v);
        std::swap(level[x], level[y]);
        emit_column();
    }
    return cc;
}

namespace {

struct SlackCellResult {
    bool feasible = false;
    Point representative;
};

// Max-slack LP for a candidate sign vector: maximize t subject to
// sign_i * (n_i . x - c_i) >= t for every element, t <= 1.
SlackCellResult probe_cell(const HyperplaneArrangement& a, const std::vector<int>& signs) {
    int d = a.dimension;
    int m = static_cast<int>(a.hyperplanes.size());
    LinearProgram lp;
    for (int j = 0; j < d; ++j) lp.variables.push_back("x" + std::to_string(j));
    lp.variables.push_back("t");
    for (int i = 0; i < m; ++i) {
        LinConstraint c;
        c.coeffs.assign(d + 1, Rat(0));
        for (int j = 0; j < d; ++j) c.coeffs[j] = -Rat(signs[i]) * a.hyperplanes[i].plane.normal[j];
        c.coeffs[d] = 1;
        c.rhs = -Rat(signs[i]) * a.hyperplanes[i].plane.offset;
        lp.constraints.push_back(std::move(c));
    }
    LinConstraint cap;
    cap.coeffs.assign(d + 1, Rat(0));
    cap.coeffs[d] = 1;
    cap.rhs = 1;
    lp.constraints.push_back(cap);
    Vec obj(d + 1, Rat(0));
    obj[d] = 1;
    lp.objective = obj;

    LpResult res = solve(lp);
    SlackCellResult out;
    if (res.status != LpStatus::Optimal || res.value <= 0) return out;
    out.feasible = true;
    out.representative.assign(res.assignment.begin(), res.assignment.begin() + d);
    for (int i = 0; i < m; ++i) {
        if (side_of_hyperplane(a.hyperplanes[i].plane, out.representative) != signs[i])
            throw std::logic_error("cell representative does not realize its sign vector");
    }
    return out;
}

std::vector<ArrangementVertex> coordinate_vertices(const HyperplaneArrangement& a) {
    int d = a.dimension;
    int m = static_cast<int>(a.hyperplanes.size());
    std::vector<ArrangementVertex> verts;
    for_each_combination(m, d, [&](const std::vector<int>& idx) {
        Mat rows;
        Vec rhs;
        for (int i : idx) {
            rows.push_back(a.hyperplanes[i].plane.normal);
            rhs.push_back(a.hyperplanes[i].plane.offset);
        }
        auto sol = solve_linear(rows, rhs);
        if (!sol) return;
        ArrangementVertex v;
        v.elements = idx;
        v.point = *sol;
        verts.push_back(std::move(v));
    });
    return verts;
}

}  // namespace

CellComplex cells(const HyperplaneArrangement& a) {
    std::string why;
    if (!is_simple(a, &why)) throw std::invalid_argument("cells: arrangement not simple: " + why);
    int d = a.dimension;
    int m = static_cast<int>(a.hyperplanes.size());

    CellComplex cc;
    for (const auto& lh : a.hyperplanes) cc.element_labels.push_back(lh.label);
    cc.vertices = coordinate_vertices(a);

    std::mt19937_64 rng(0x5EEDull);
    std::deque<std::vector<int>> pending;

    // Generic-point seed: some point off every element.
    for (int attempt = 0; attempt < 512; ++attempt) {
        Point p(d);
        for (int j = 0; j < d; ++j) p[j] = random_rat(rng, 64 + attempt, 16);
        std::vector<int> signs(m);
        bool ok = true;
        for (int i = 0; i < m && ok; ++i) {
            signs[i] = side_of_hyperplane(a.hyperplanes[i].plane, p);
            ok = signs[i] != 0;
        }
        if (ok) {
            pending.push_back(signs);
            break;
        }
    }
    if (pending.empty() && m > 0)
        throw std::logic_error("cells: could not find a generic seed point");
    if (m == 0) pending.push_back({});

    // Vertex seeds: signs at v + eps*u for a symbolic infinitesimal eps.
    for (const auto& v : cc.vertices) {
        for (int attempt = 0; attempt < 8; ++attempt) {
            Vec u(d);
            for (int j = 0; j < d; ++j) u[j] = random_rat(rng, 16, 8);
            std::vector<int> signs(m);
            bool ok = true;
            for (int i = 0; i < m && ok; ++i) {
                int s = side_of_hyperplane(a.hyperplanes[i].plane, *v.point);
                if (s == 0) s = sgn(dot(a.hyperplanes[i].plane.normal, u));
                signs[i] = s;
                ok = s != 0;
            }
            if (ok) {
                pending.push_back(signs);
                break;
            }
        }
    }

    // Close under single-sign flips, validating each candidate by LP.
    std::set<std::string> visited;
    while (!pending.empty()) {
        std::vector<int> signs = pending.front();
        pending.pop_front();
        std::string key = signs_to_key(signs);
        if (!visited.insert(key).second) continue;
        SlackCellResult probe = probe_cell(a, signs);
        if (!probe.feasible) continue;
        cc.cells.push_back(Cell{signs, probe.representative});
        for (int i = 0; i < m; ++i) {
            std::vector<int> flipped = signs;
            flipped[i] = -flipped[i];
            if (!visited.count(signs_to_key(flipped))) pending.push_back(flipped);
        }
    }
    return cc;
}

// ---------------------------------------------------------------------------
// Twins
// ---------------------------------------------------------------------------

std::string twin_label(const std::string& base_label) { return base_label + "'"; }

DoubledWiring insert_twins(const WiringDiagram& a) {
    a.validate();
    DoubledWiring out;
    out.base = a;
    out.doubled.n_lines = 2 * a.n_lines;

    std::vector<int> ord = a.start_order();
    for (int id : ord) {
        out.doubled.initial_order.push_back(2 * id - 1);
        out.doubled.initial_order.push_back(2 * id);
    }

    std::vector<int> level(a.n_lines + 1, 0);
    for (int pos = 0; pos < a.n_lines; ++pos) level[ord[pos]] = pos;
    for (const auto& [x, y] : a.swaps) {
        int lower = level[x] < level[y] ? x : y;
        int upper = lower == x ? y : x;
        // [L, L', U, U'] -> [U, U', L, L'] via four adjacent transpositions
        out.doubled.swaps.push_back({2 * lower, 2 * upper - 1});
        out.doubled.swaps.push_back({2 * lower - 1, 2 * upper - 1});
        out.doubled.swaps.push_back({2 * lower, 2 * upper});
        out.doubled.swaps.push_back({2 * lower - 1, 2 * upper});
        std::swap(level[x], level[y]);
    }
    out.doubled.validate();
    return out;
}

namespace {

// Squared distance between parallel elements i and j along the common normal.
std::optional<Rat> parallel_distance_sq(const Hyperplane& hi, const Hyperplane& hj) {
    Mat stacked = {hi.normal, hj.normal};
    if (rank(stacked) == 2) return std::nullopt;
    size_t k = 0;
    while (hi.normal[k] == 0) ++k;
    Rat lambda = hj.normal[k] / hi.normal[k];
    Rat diff = hj.offset / lambda - hi.offset;
    return diff * diff / norm_sq(hi.normal);
}

bool doubled_ok(const HyperplaneArrangement& base,
                const std::vector<ArrangementVertex>& verts,
                const HyperplaneArrangement& doubled, const Vec& twin_shift) {
    if (!is_simple(doubled)) return false;
    size_t n = base.hyperplanes.size();
    // No base vertex may sit inside any twin slab it is not incident to.
    for (const auto& v : verts) {
        for (size_t i = 0; i < n; ++i) {
            if (std::find(v.elements.begin(), v.elements.end(), static_cast<int>(i)) !=
                v.elements.end())
                continue;
            Rat val = dot(base.hyperplanes[i].plane.normal, *v.point) -
                      base.hyperplanes[i].plane.offset;
            if (val >= 0 && val <= twin_shift[i]) return false;
        }
    }
    // A twin slab must not swallow a parallel element.
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            Mat stacked = {base.hyperplanes[i].plane.normal, base.hyperplanes[j].plane.normal};
            if (rank(stacked) == 2) continue;
            size_t k = 0;
            while (base.hyperplanes[i].plane.normal[k] == 0) ++k;
            Rat lambda = base.hyperplanes[j].plane.normal[k] / base.hyperplanes[i].plane.normal[k];
            Rat pos = base.hyperplanes[j].plane.offset / lambda;
            if (pos >= base.hyperplanes[i].plane.offset &&
                pos <= base.hyperplanes[i].plane.offset + twin_shift[i])
                return false;
        }
    }
    return true;
}

DoubledArrangement make_doubled(const HyperplaneArrangement& a,
                                const std::vector<ArrangementVertex>& verts, const Rat& alpha) {
    DoubledArrangement out;
    out.base = a;
    out.doubled.dimension = a.dimension;
    out.gap = alpha;
    Vec shifts;
    for (const auto& lh : a.hyperplanes) {
        Rat target = alpha * alpha * norm_sq(lh.plane.normal);
        unsigned bits = 64;
        Rat t = sqrt_lower(target, bits);
        while (t == 0 && bits < 4096) {
            bits *= 2;
            t = sqrt_lower(target, bits);
        }
        if (t == 0) throw std::logic_error("insert_twins: twin shift underflow");
        shifts.push_back(t);
        out.doubled.hyperplanes.push_back(lh);
        out.doubled.hyperplanes.push_back(
            LabeledHyperplane{twin_label(lh.label), {lh.plane.normal, lh.plane.offset + t}});
    }
    if (!doubled_ok(a, verts, out.doubled, shifts))
        throw std::invalid_argument("insert_twins: gap too large for this arrangement");
    return out;
}

}  // namespace

DoubledArrangement insert_twins(const HyperplaneArrangement& a, const Rat& alpha) {
    std::string why;
    if (!is_simple(a, &why))
        throw std::invalid_argument("insert_twins: arrangement not simple: " + why);
    if (alpha <= 0) throw std::invalid_argument("insert_twins: gap must be positive");
    if (a.hyperplanes.empty()) {
        DoubledArrangement out;
        out.base = a;
        out.doubled.dimension = a.dimension;
        out.gap = alpha;
        return out;
    }
    return make_doubled(a, coordinate_vertices(a), alpha);
}

DoubledArrangement insert_twins(const HyperplaneArrangement& a) {
    std::string why;
    if (!is_simple(a, &why))
        throw std::invalid_argument("insert_twins: arrangement not simple: " + why);
    if (a.hyperplanes.empty()) {
        DoubledArrangement out;
        out.base = a;
        out.doubled.dimension = a.dimension;
        out.gap = 1;
        return out;
    }
    auto verts = coordinate_vertices(a);

    // alpha = (1/3) * min distance from any vertex to a non-incident element,
    // also capped by parallel-pair distances; exact via squared norms.
    std::optional<Rat> min_sq;
    auto consider = [&](const Rat& dsq) {
        if (!min_sq || dsq < *min_sq) min_sq = dsq;
    };
    for (const auto& v : verts) {
        for (size_t i = 0; i < a.hyperplanes.size(); ++i) {
            if (std::find(v.elements.begin(), v.elements.end(), static_cast<int>(i)) !=
                v.elements.end())
                continue;
            Rat val =
                dot(a.hyperplanes[i].plane.normal, *v.point) - a.hyperplanes[i].plane.offset;
            consider(val * val / norm_sq(a.hyperplanes[i].plane.normal));
        }
    }
    for (size_t i = 0; i < a.hyperplanes.size(); ++i)
        for (size_t j = i + 1; j < a.hyperplanes.size(); ++j) {
            auto dsq = parallel_distance_sq(a.hyperplanes[i].plane, a.hyperplanes[j].plane);
            if (dsq) consider(*dsq);
        }
    Rat base_sq = min_sq ? *min_sq / 9 : Rat(1);

    unsigned bits = 64;
    Rat alpha = sqrt_lower(base_sq, bits);
    while (alpha == 0 && bits < 4096) {
        bits *= 2;
        alpha = sqrt_lower(base_sq, bits);
    }
    if (alpha == 0) throw std::logic_error("insert_twins: alpha underflow");

    for (int attempt = 0; attempt < 12; ++attempt) {
        try {
            return make_doubled(a, verts, alpha);
        } catch (const std::invalid_argument&) {
            alpha /= 2;
        }
    }
    throw std::logic_error("insert_twins: no valid gap found");
}

// ---------------------------------------------------------------------------
// Stretchings
// ---------------------------------------------------------------------------

std::vector<VertexSides> vertex_side_data(const WiringDiagram& a) {
    a.validate();
    std::vector<VertexSides> out;
    std::vector<int> ord = a.start_order();
    std::vector<int> level(a.n_lines + 1, 0);
    for (int pos = 0; pos < a.n_lines; ++pos) level[ord[pos]] = pos;
    for (const auto& [x, y] : a.swaps) {
        int low_level = std::min(level[x], level[y]);
        VertexSides vs;
        vs.on = {std::to_string(std::min(x, y)), std::to_string(std::max(x, y))};
        for (int id = 1; id <= a.n_lines; ++id) {
            if (id == x || id == y) continue;
            vs.side[std::to_string(id)] = level[id] < low_level ? 1 : -1;
        }
        out.push_back(std::move(vs));
        std::swap(level[x], level[y]);
    }
    return out;
}

std::vector<VertexSides> vertex_side_data(const HyperplaneArrangement& a) {
    std::string why;
    if (!is_simple(a, &why))
        throw std::invalid_argument("vertex_side_data: arrangement not simple: " + why);
    std::vector<VertexSides> out;
    for (const auto& v : coordinate_vertices(a)) {
        VertexSides vs;
        for (int e : v.elements) vs.on.push_back(a.hyperplanes[e].label);
        for (size_t i = 0; i < a.hyperplanes.size(); ++i) {
            if (std::find(v.elements.begin(), v.elements.end(), static_cast<int>(i)) !=
                v.elements.end())
                continue;
            int s = side_of_hyperplane(a.hyperplanes[i].plane, *v.point);
            if (s == 0) throw std::logic_error("vertex_side_data: vertex on extra element");
            vs.side[a.hyperplanes[i].label] = s;
        }
        out.push_back(std::move(vs));
    }
    return out;
}

StretchReport check_stretching(const std::vector<VertexSides>& a, const HyperplaneArrangement& b,
                               const std::vector<std::string>& canvas_labels) {
    b.validate();
    int d = b.dimension;
    std::vector<int> canvas_idx;
    for (const auto& cl : canvas_labels) {
        int i = b.index_of(cl);
        if (i < 0) throw std::invalid_argument("check_stretching: unknown canvas label " + cl);
        canvas_idx.push_back(i);
    }

    StretchReport report;
    for (const auto& vs : a) {
        StretchReport::Entry entry;
        entry.vertex = vs.on;
        std::vector<int> defining;
        for (const auto& lbl : vs.on) {
            int i = b.index_of(lbl);
            if (i < 0) throw std::invalid_argument("check_stretching: unknown label " + lbl);
            defining.push_back(i);
        }
        for (int i : canvas_idx) defining.push_back(i);
        if (static_cast<int>(defining.size()) != d)
            throw std::invalid_argument("check_stretching: vertex arity does not match dimension");

        Mat rows;
        Vec rhs;
        for (int i : defining) {
            rows.push_back(b.hyperplanes[i].plane.normal);
            rhs.push_back(b.hyperplanes[i].plane.offset);
        }
        auto sol = solve_linear(rows, rhs);
        if (!sol) {
            entry.ok = false;
            entry.offending.push_back("(no unique intersection point)");
        } else {
            for (const auto& [lbl, want] : vs.side) {
                int i = b.index_of(lbl);
                if (i < 0) throw std::invalid_argument("check_stretching: unknown label " + lbl);
                if (side_of_hyperplane(b.hyperplanes[i].plane, *sol) != want) {
                    entry.ok = false;
                    entry.offending.push_back(lbl);
                }
            }
        }
        report.ok = report.ok && entry.ok;
        report.entries.push_back(std::move(entry));
    }
    return report;
}

StretchReport check_stretching(const WiringDiagram& a, const HyperplaneArrangement& b,
                               const std::vector<std::string>& canvas_labels) {
    std::set<std::string> a_labels;
    for (int i = 1; i <= a.n_lines; ++i) a_labels.insert(std::to_string(i));
    std::set<std::string> b_labels;
    for (const auto& lh : b.hyperplanes) b_labels.insert(lh.label);
    for (const auto& cl : canvas_labels) b_labels.erase(cl);
    if (a_labels != b_labels)
        throw std::invalid_argument(
            "check_stretching: element labels of the two arrangements do not match");
    return check_stretching(vertex_side_data(a), b, canvas_labels);
}

// ---------------------------------------------------------------------------
// Canvas lift
// ---------------------------------------------------------------------------

CanvasLift canvas_lift(const HyperplaneArrangement& planar, int d_target) {
    planar.validate();
    if (planar.dimension != 2)
        throw std::invalid_argument("canvas_lift: input must be planar");
    if (d_target < 2) throw std::invalid_argument("canvas_lift: target dimension must be >= 2");

    CanvasLift out;
    out.arrangement.dimension = d_target;
    for (const auto& lh : planar.hyperplanes) {
        Vec normal = lh.plane.normal;
        normal.resize(d_target, Rat(0));
        out.arrangement.hyperplanes.push_back(
            LabeledHyperplane{lh.label, {std::move(normal), lh.plane.offset}});
    }
    for (int i = 3; i <= d_target; ++i) {
        std::string label = "canvas_" + std::to_string(i);
        if (planar.index_of(label) >= 0)
            throw std::invalid_argument("canvas_lift: label collision with " + label);
        Vec normal(d_target, Rat(0));
        normal[i - 1] = 1;
        out.arrangement.hyperplanes.push_back(LabeledHyperplane{label, {std::move(normal), Rat(0)}});
        out.canvas_labels.push_back(label);
    }
    out.arrangement.validate();
    return out;
}

// ---------------------------------------------------------------------------
// Wiring extraction
// ---------------------------------------------------------------------------

WiringDiagram wiring_from_lines(const HyperplaneArrangement& lines) {
    std::string why;
    if (!is_simple(lines, &why))
        throw std::invalid_argument("wiring_from_lines: arrangement not simple: " + why);
    if (lines.dimension != 2)
        throw std::invalid_argument("wiring_from_lines: planar arrangements only");
    int n = static_cast<int>(lines.hyperplanes.size());
    for (int i = 0; i < n; ++i) {
        if (lines.hyperplanes[i].label != std::to_string(i + 1))
            throw std::invalid_argument("wiring_from_lines: labels must be 1..n in order");
        if (lines.hyperplanes[i].plane.normal[1] <= 0)
            throw std::invalid_argument(
                "wiring_from_lines: every normal needs a positive y-coordinate");
    }

    std::vector<Rat> slope(n), intercept(n);
    for (int i = 0; i < n; ++i) {
        const auto& p = lines.hyperplanes[i].plane;
        slope[i] = -p.normal[0] / p.normal[1];
        intercept[i] = p.offset / p.normal[1];
    }

    WiringDiagram w;
    w.n_lines = n;
    // Bottom-to-top order at x -> -inf: slope descending, then intercept ascending.
    std::vector<int> ids(n);
    for (int i = 0; i < n; ++i) ids[i] = i + 1;
    std::sort(ids.begin(), ids.end(), [&](int a, int b) {
        if (slope[a - 1] != slope[b - 1]) return slope[a - 1] > slope[b - 1];
        return intercept[a - 1] < intercept[b - 1];
    });
    w.initial_order = ids;

    struct Crossing {
        Rat x;
        int a, b;
    };
    std::vector<Crossing> crossings;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (slope[i] == slope[j]) continue;
            Rat x = (intercept[j] - intercept[i]) / (slope[i] - slope[j]);
            crossings.push_back({x, i + 1, j + 1});
        }
    std::sort(crossings.begin(), crossings.end(), [](const Crossing& p, const Crossing& q) {
        if (p.x != q.x) return p.x < q.x;
        if (p.a != q.a) return p.a < q.a;
        return p.b < q.b;
    });

    std::vector<int> level(n + 1, 0);
    for (int pos = 0; pos < n; ++pos) level[ids[pos]] = pos;
    for (const auto& c : crossings) {
        if (std::abs(level[c.a] - level[c.b]) != 1)
            throw std::logic_error("wiring_from_lines: non-adjacent crossing during sweep");
        w.swaps.push_back({c.a, c.b});
        std::swap(level[c.a], level[c.b]);
    }
    w.validate();
    return w;
}

// ---------------------------------------------------------------------------
// Fixtures
// ---------------------------------------------------------------------------

namespace {

HyperplaneArrangement grid_fixture(int n) {
    if (n < 1) throw std::invalid_argument("fixture: grid size must be >= 1");
    HyperplaneArrangement a;
    a.dimension = 2;
    for (int i = 1; i <= n; ++i)
        a.hyperplanes.push_back({std::to_string(i), {{rat(0), rat(1)}, rat(i)}});
    for (int j = 1; j <= n; ++j)
        a.hyperplanes.push_back({std::to_string(n + j), {{rat(1), rat(0)}, rat(j)}});
    return a;
}

HyperplaneArrangement random_simple_fixture(int n, unsigned long seed) {
    if (n < 1) throw std::invalid_argument("fixture: random_simple size must be >= 1");
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 256; ++attempt) {
        HyperplaneArrangement a;
        a.dimension = 2;
        std::set<Rat> used_slopes;
        bool ok = true;
        for (int i = 1; i <= n && ok; ++i) {
            Rat slope, inter;
            int tries = 0;
            do {
                slope = random_rat(rng, 12, 6);
                ok = ++tries < 64;
            } while (ok && used_slopes.count(slope));
            if (!ok) break;
            used_slopes.insert(slope);
            inter = random_rat(rng, 8, 6);
            // y = slope*x + inter as -slope*x + y = inter, scaled integral
            Rat nx = -slope;
            a.hyperplanes.push_back({std::to_string(i), {{nx, rat(1)}, inter}});
        }
        if (!ok) continue;
        if (is_simple(a)) return a;
    }
    throw std::logic_error("fixture: random_simple generation failed");
}

// Perturbed Pappus configuration: the nine classical lines with the six
// cross-line intercepts shifted by distinct small rationals so that the nine
// triple points split into simple crossings. Stretchable by construction.
HyperplaneArrangement pappus_lines_fixture() {
    auto d = [](int k) { return rat(k, 101); };
    HyperplaneArrangement a;
    a.dimension = 2;
    auto line = [&](int id, const Rat& nx, const Rat& ny, const Rat& off) {
        a.hyperplanes.push_back({std::to_string(id), {{nx, ny}, off}});
    };
    line(1, rat(0), rat(1), rat(0));                  // y = 0
    line(2, rat(0), rat(1), rat(1));                  // y = 1
    line(3, rat(-1), rat(1), d(1));                   // y = x + d1
    line(4, rat(1), rat(1), rat(1) + d(2));           // y = 1 - x + d2
    line(5, rat(-1), rat(2), 2 * d(3));               // y = x/2 + d3
    line(6, rat(1), rat(2), 2 * (rat(1) + d(4)));     // y = 1 - x/2 + d4
    line(7, rat(-1), rat(1), rat(-1) + d(5));         // y = x - 1 + d5
    line(8, rat(1), rat(1), rat(2) + d(6));           // y = 2 - x + d6
    line(9, rat(0), rat(1), rat(1, 2));               // y = 1/2
    return a;
}

// Ringel's mutation: rerouting the line through the three forced incidence
// points on the wrong side of one of them. Combinatorially this reverses the
// triangle formed by the crossings of lines 3, 4 and 9.
WiringDiagram non_pappus_fixture() {
    WiringDiagram w = wiring_from_lines(pappus_lines_fixture());
    std::vector<size_t> tri;
    for (size_t i = 0; i < w.swaps.size(); ++i) {
        auto p = norm_pair(w.swaps[i].first, w.swaps[i].second);
        if (p == std::make_pair(3, 4) || p == std::make_pair(3, 9) || p == std::make_pair(4, 9))
            tri.push_back(i);
    }
    if (tri.size() != 3) throw std::logic_error("fixture: pappus triangle not found");
    std::swap(w.swaps[tri[0]], w.swaps[tri[2]]);
    w.validate();
    return w;
}

}  // namespace

Fixture fixture(const std::string& name) {
    if (name == "pappus_lines") return pappus_lines_fixture();
    if (name == "pappus_wiring") return wiring_from_lines(pappus_lines_fixture());
    if (name == "non_pappus_wiring") return non_pappus_fixture();
    auto parse_args = [&](const std::string& prefix) -> std::optional<std::vector<long>> {
        if (name.rfind(prefix + "(", 0) != 0 || name.back() != ')') return std::nullopt;
        std::string inner = name.substr(prefix.size() + 1, name.size() - prefix.size() - 2);
        std::vector<long> args;
        std::stringstream ss(inner);
        std::string tok;
        while (std::getline(ss, tok, ',')) args.push_back(std::stol(tok));
        return args;
    };
    if (auto args = parse_args("grid")) {
        if (args->size() != 1) throw std::invalid_argument("fixture: grid wants one argument");
        return grid_fixture(static_cast<int>((*args)[0]));
    }
    if (auto args = parse_args("random_simple")) {
        if (args->size() != 2)
            throw std::invalid_argument("fixture: random_simple wants (n, seed)");
        return random_simple_fixture(static_cast<int>((*args)[0]),
                                     static_cast<unsigned long>((*args)[1]));
    }
    throw std::invalid_argument("fixture: unknown name " + name);
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

std::string serialize_wiring(const WiringDiagram& w) {
    w.validate();
    nlohmann::json j;
    j["n_lines"] = w.n_lines;
    j["swaps"] = nlohmann::json::array();
    for (const auto& [a, b] : w.swaps) j["swaps"].push_back({a, b});
    if (!w.initial_order.empty()) {
        bool identity = true;
        for (int i = 0; i < w.n_lines; ++i) identity = identity && w.initial_order[i] == i + 1;
        if (!identity) j["initial_order"] = w.initial_order;
    }
    return j.dump(2);
}

WiringDiagram parse_wiring(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
        throw std::invalid_argument(std::string("malformed wiring document: ") + ex.what());
    }
    if (!j.contains("n_lines") || !j.contains("swaps"))
        throw std::invalid_argument("wiring document needs n_lines and swaps");
    WiringDiagram w;
    w.n_lines = j["n_lines"].get<int>();
    for (const auto& js : j["swaps"]) {
        if (!js.is_array() || js.size() != 2)
            throw std::invalid_argument("each swap must be a pair of line ids");
        w.swaps.push_back({js[0].get<int>(), js[1].get<int>()});
    }
    if (j.contains("initial_order")) w.initial_order = j["initial_order"].get<std::vector<int>>();
    w.validate();
    return w;
}

std::string serialize_arrangement(const HyperplaneArrangement& a) {
    a.validate();
    nlohmann::json j;
    j["dimension"] = a.dimension;
    j["lines"] = nlohmann::json::array();
    for (const auto& lh : a.hyperplanes) {
        nlohmann::json je;
        je["label"] = lh.label;
        je["normal"] = nlohmann::json::array();
        for (const auto& v : lh.plane.normal) je["normal"].push_back(rat_to_string(v));
        je["offset"] = rat_to_string(lh.plane.offset);
        j["lines"].push_back(je);
    }
    return j.dump(2);
}

HyperplaneArrangement parse_arrangement(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
        throw std::invalid_argument(std::string("malformed arrangement document: ") + ex.what());
    }
    if (!j.contains("dimension") || !j.contains("lines"))
        throw std::invalid_argument("arrangement document needs dimension and lines");
    HyperplaneArrangement a;
    a.dimension = j["dimension"].get<int>();
    for (const auto& je : j["lines"]) {
        LabeledHyperplane lh;
        lh.label = je.at("label").get<std::string>();
        for (const auto& jv : je.at("normal")) lh.plane.normal.push_back(rat_from_string(jv.get<std::string>()));
        lh.plane.offset = rat_from_string(je.at("offset").get<std::string>());
        a.hyperplanes.push_back(std::move(lh));
    }
    a.validate();
    return a;
}

}  // namespace geomrep
