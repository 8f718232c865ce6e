#include "geomrep/recognize.hpp"

#include "geomrep/lp.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace geomrep {

// ---------------------------------------------------------------------------
// ETR emitter
// ---------------------------------------------------------------------------

namespace {

std::string sanitize(const std::string& id) {
    std::string out;
    for (char c : id) out += (std::isalnum(static_cast<unsigned char>(c)) ? c : '_');
    return out;
}

}  // namespace

EtrFormula emit_etr(const Hypergraph& h, int dim) {
    h.validate();
    if (dim < 1) throw std::invalid_argument("emit_etr: dimension must be >= 1");
    EtrFormula f;
    f.dim = dim;
    for (int v = 1; v <= h.n_vertices; ++v)
        for (int i = 1; i <= dim; ++i)
            f.variables.push_back("p_" + std::to_string(v) + "_" + std::to_string(i));
    for (const auto& e : h.edges)
        for (int i = 1; i <= dim + 1; ++i)
            f.variables.push_back("h_" + sanitize(e.id) + "_" + std::to_string(i));
    for (const auto& e : h.edges)
        for (int v = 1; v <= h.n_vertices; ++v)
            f.atoms.push_back({v, e.id, h.edge_contains(e, v)});
    return f;
}

std::string render_etr(const EtrFormula& f) {
    std::ostringstream os;
    os << "EXISTS";
    for (const auto& v : f.variables) os << " " << v;
    os << " .\n";
    bool first = true;
    for (const auto& atom : f.atoms) {
        os << (first ? "      " : "  AND ");
        first = false;
        std::string e = sanitize(atom.edge);
        os << "(";
        for (int i = 1; i <= f.dim; ++i) {
            if (i > 1) os << " + ";
            os << "h_" << e << "_" << i << "*p_" << atom.vertex << "_" << i;
        }
        os << (atom.is_le ? " <= " : " > ") << "h_" << e << "_" << (f.dim + 1) << ")\n";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Certificate checking
// ---------------------------------------------------------------------------

std::vector<Point> unit_square() {
    return {{rat(0), rat(0)}, {rat(1), rat(0)}, {rat(1), rat(1)}, {rat(0), rat(1)}};
}

namespace {

struct PairChoice {
    int vertex = 0;
    int edge_index = 0;  // into h.edges
    RegionChoice choice;
};

struct CertLpContext {
    const Hypergraph* h = nullptr;
    const Triangulation* tri = nullptr;
    int n_vars = 0;  // 2|V| + 2|E| + 1 (slack last)

    int px(int v) const { return 2 * (v - 1); }
    int py(int v) const { return 2 * (v - 1) + 1; }
    int tx(int e) const { return 2 * h->n_vertices + 2 * e; }
    int ty(int e) const { return 2 * h->n_vertices + 2 * e + 1; }
    int slack() const { return n_vars - 1; }
};

CertLpContext make_context(const Hypergraph& h, const Triangulation& tri) {
    CertLpContext ctx;
    ctx.h = &h;
    ctx.tri = &tri;
    ctx.n_vars = 2 * h.n_vertices + 2 * static_cast<int>(h.edges.size()) + 1;
    return ctx;
}

// cross(B - A, p - A - tau) REL rhs, REL in {>= 0, >= t, <= -t}, as a <=-row.
LinConstraint side_row(const CertLpContext& ctx, const Point& a, const Point& b, int v, int e,
                       int mode /*0: >=0, 1: >=t, 2: <=-t*/) {
    Rat ux = b[0] - a[0], uy = b[1] - a[1];
    LinConstraint c;
    c.coeffs.assign(ctx.n_vars, Rat(0));
    Rat base = ux * a[1] - uy * a[0];
    if (mode == 2) {
        // ux*py - uy*px - ux*ty + uy*tx + t <= base
        c.coeffs[ctx.py(v)] = ux;
        c.coeffs[ctx.px(v)] = -uy;
        c.coeffs[ctx.ty(e)] = -ux;
        c.coeffs[ctx.tx(e)] = uy;
        c.coeffs[ctx.slack()] = 1;
        c.rhs = base;
    } else {
        // -ux*py + uy*px + ux*ty - uy*tx (+ t) <= -base
        c.coeffs[ctx.py(v)] = -ux;
        c.coeffs[ctx.px(v)] = uy;
        c.coeffs[ctx.ty(e)] = ux;
        c.coeffs[ctx.tx(e)] = -uy;
        if (mode == 1) c.coeffs[ctx.slack()] = 1;
        c.rhs = -base;
    }
    return c;
}

void append_choice_rows(const CertLpContext& ctx, std::vector<LinConstraint>& rows,
                        const PairChoice& pc) {
    const Triangulation& tri = *ctx.tri;
    if (pc.choice.inside) {
        const auto& t = tri.triangles[static_cast<size_t>(pc.choice.index)];
        bool pocket = !tri.inside_polygon[static_cast<size_t>(pc.choice.index)];
        for (int k = 0; k < 3; ++k) {
            const Point& a = tri.points[static_cast<size_t>(t[k])];
            const Point& b = tri.points[static_cast<size_t>(t[(k + 1) % 3])];
            // Pocket triangles demand strict interiority: their closure meets
            // the polygon only along triangulation edges.
            rows.push_back(side_row(ctx, a, b, pc.vertex, pc.edge_index, pocket ? 1 : 0));
        }
    } else {
        int k = pc.choice.index;
        const Point& a = tri.points[static_cast<size_t>(tri.hull[static_cast<size_t>(k)])];
        const Point& b = tri.points[static_cast<size_t>(
            tri.hull[static_cast<size_t>((k + 1) % static_cast<int>(tri.hull.size()))])];
        rows.push_back(side_row(ctx, a, b, pc.vertex, pc.edge_index, 2));
    }
}

LinearProgram assemble_lp(const CertLpContext& ctx, const std::vector<LinConstraint>& rows,
                          Vec objective) {
    LinearProgram lp;
    for (int v = 1; v <= ctx.h->n_vertices; ++v) {
        lp.variables.push_back("px" + std::to_string(v));
        lp.variables.push_back("py" + std::to_string(v));
    }
    for (const auto& e : ctx.h->edges) {
        lp.variables.push_back("tx_" + sanitize(e.id));
        lp.variables.push_back("ty_" + sanitize(e.id));
    }
    lp.variables.push_back("t");
    lp.constraints = rows;
    LinConstraint cap;
    cap.coeffs.assign(ctx.n_vars, Rat(0));
    cap.coeffs[ctx.slack()] = 1;
    cap.rhs = 1;
    lp.constraints.push_back(cap);
    lp.objective = std::move(objective);
    return lp;
}

struct SolveOutcome {
    bool feasible = false;
    std::optional<Representation> rep;
    std::string detail;
    long lps = 0;
};

Representation rep_from_assignment(const CertLpContext& ctx, const std::vector<Point>& polygon,
                                   const Vec& x) {
    Representation rep;
    for (int v = 1; v <= ctx.h->n_vertices; ++v)
        rep.points[v] = Point{x[static_cast<size_t>(ctx.px(v))], x[static_cast<size_t>(ctx.py(v))]};
    for (size_t e = 0; e < ctx.h->edges.size(); ++e)
        rep.shapes[ctx.h->edges[e].id] = PolygonTranslate{
            polygon, Vec{x[static_cast<size_t>(ctx.tx(static_cast<int>(e)))],
                         x[static_cast<size_t>(ctx.ty(static_cast<int>(e)))]}};
    return rep;
}

// Feasibility of a (possibly partial) assignment; when full = true, also
// repairs coincident points and rebuilds the exactly verified representation.
SolveOutcome solve_assignment(const CertLpContext& ctx, const std::vector<Point>& polygon,
                              const std::vector<PairChoice>& choices, bool full) {
    std::vector<LinConstraint> rows;
    for (const auto& pc : choices) append_choice_rows(ctx, rows, pc);

    Vec slack_obj(ctx.n_vars, Rat(0));
    slack_obj[static_cast<size_t>(ctx.slack())] = 1;

    SolveOutcome out;
    LpResult res = solve(assemble_lp(ctx, rows, slack_obj));
    ++out.lps;
    if (res.status != LpStatus::Optimal || res.value <= 0) {
        out.detail = "infeasible constraint system";
        return out;
    }
    if (!full) {
        out.feasible = true;
        return out;
    }

    // Keep strictness while separating coincident points: pin t above half the
    // achieved slack, then push pairs apart one linear constraint at a time.
    Rat t_floor = res.value / 2;
    LinConstraint floor_row;
    floor_row.coeffs.assign(ctx.n_vars, Rat(0));
    floor_row.coeffs[static_cast<size_t>(ctx.slack())] = -1;
    floor_row.rhs = -t_floor;
    rows.push_back(floor_row);

    Vec x = res.assignment;
    int max_rounds = ctx.h->n_vertices * (ctx.h->n_vertices - 1) / 2 + 1;
    for (int round = 0; round < max_rounds; ++round) {
        int cu = 0, cv = 0;
        for (int u = 1; u <= ctx.h->n_vertices && cu == 0; ++u)
            for (int v = u + 1; v <= ctx.h->n_vertices; ++v) {
                if (x[static_cast<size_t>(ctx.px(u))] == x[static_cast<size_t>(ctx.px(v))] &&
                    x[static_cast<size_t>(ctx.py(u))] == x[static_cast<size_t>(ctx.py(v))]) {
                    cu = u;
                    cv = v;
                    break;
                }
            }
        if (cu == 0) break;

        bool separated = false;
        for (int dir = 0; dir < 4 && !separated; ++dir) {
            Rat dx = (dir == 0) ? 1 : (dir == 1) ? -1 : 0;
            Rat dy = (dir == 2) ? 1 : (dir == 3) ? -1 : 0;
            Vec sep_obj(ctx.n_vars, Rat(0));
            sep_obj[static_cast<size_t>(ctx.px(cu))] = dx;
            sep_obj[static_cast<size_t>(ctx.py(cu))] = dy;
            sep_obj[static_cast<size_t>(ctx.px(cv))] = -dx;
            sep_obj[static_cast<size_t>(ctx.py(cv))] = -dy;
            std::vector<LinConstraint> probe_rows = rows;
            LinConstraint cap;
            cap.coeffs = sep_obj;
            cap.rhs = 1;
            probe_rows.push_back(cap);
            LpResult sep = solve(assemble_lp(ctx, probe_rows, sep_obj));
            ++out.lps;
            if (sep.status != LpStatus::Optimal || sep.value <= 0) continue;
            Rat delta = std::min(sep.value, Rat(1)) / 2;
            LinConstraint keep;
            keep.coeffs = scale(sep_obj, Rat(-1));
            keep.rhs = -delta;
            rows.push_back(keep);
            LpResult redo = solve(assemble_lp(ctx, rows, slack_obj));
            ++out.lps;
            if (redo.status != LpStatus::Optimal || redo.value <= 0)
                throw std::logic_error("separation constraint broke feasibility");
            x = redo.assignment;
            separated = true;
        }
        if (!separated) {
            out.detail = "points forced to coincide under this certificate";
            return out;
        }
    }

    Representation rep = rep_from_assignment(ctx, polygon, x);
    VerifyReport check = verify_representation(*ctx.h, rep);
    if (!check.pass)
        throw std::logic_error("certificate LP solution failed exact verification");
    out.feasible = true;
    out.rep = std::move(rep);
    return out;
}

std::vector<Point> normalize_ccw(std::vector<Point> polygon) {
    if (!polygon_is_simple(polygon))
        throw std::invalid_argument("polygon must be simple");
    if (polygon_signed_area_2x(polygon) < 0)
        std::reverse(polygon.begin(), polygon.end());
    return polygon;
}

}  // namespace

CertCheckResult check_certificate(const Hypergraph& h, const std::vector<Point>& polygon,
                                  const Certificate& cert) {
    h.validate();
    std::vector<Point> poly = normalize_ccw(polygon);
    Triangulation tri = triangulate_hull(poly);
    CertLpContext ctx = make_context(h, tri);

    CertCheckResult result;
    std::vector<PairChoice> choices;
    for (size_t e = 0; e < h.edges.size(); ++e) {
        for (int v = 1; v <= h.n_vertices; ++v) {
            auto it = cert.assignment.find({v, h.edges[e].id});
            if (it == cert.assignment.end()) {
                result.status = CertStatus::Invalid;
                result.detail = "certificate incomplete for vertex " + std::to_string(v) +
                                ", edge " + h.edges[e].id;
                return result;
            }
            const RegionChoice& rc = it->second;
            bool member = h.edge_contains(h.edges[e], v);
            if (rc.inside) {
                if (rc.index < 0 || rc.index >= static_cast<int>(tri.triangles.size())) {
                    result.status = CertStatus::Invalid;
                    result.detail = "triangle index out of range";
                    return result;
                }
                bool in_p = tri.inside_polygon[static_cast<size_t>(rc.index)];
                if (member != in_p) {
                    result.status = CertStatus::Invalid;
                    result.detail = member ? "member assigned to a pocket triangle"
                                           : "non-member assigned inside the polygon";
                    return result;
                }
            } else {
                if (member) {
                    result.status = CertStatus::Invalid;
                    result.detail = "member assigned outside the hull";
                    return result;
                }
                if (rc.index < 0 || rc.index >= static_cast<int>(tri.hull.size())) {
                    result.status = CertStatus::Invalid;
                    result.detail = "hull edge index out of range";
                    return result;
                }
            }
            choices.push_back({v, static_cast<int>(e), rc});
        }
    }

    SolveOutcome solved = solve_assignment(ctx, poly, choices, /*full=*/true);
    result.lps_solved = solved.lps;
    if (solved.feasible) {
        result.status = CertStatus::Feasible;
        result.representation = solved.rep;
    } else {
        result.status = CertStatus::Infeasible;
        result.detail = solved.detail;
    }
    return result;
}

// ---------------------------------------------------------------------------
// Polygon-translate recognizer
// ---------------------------------------------------------------------------

Decision recognize_polygon_translates(const Hypergraph& h, const std::vector<Point>& polygon,
                                      const RecognizeOptions& options) {
    h.validate();
    std::vector<Point> poly = normalize_ccw(polygon);
    Triangulation tri = triangulate_hull(poly);
    CertLpContext ctx = make_context(h, tri);

    long n_pairs = static_cast<long>(h.n_vertices) * static_cast<long>(h.edges.size());
    if (n_pairs > options.max_pairs)
        throw std::invalid_argument("recognize_polygon_translates: instance exceeds the pair cap (" +
                                    std::to_string(n_pairs) + " > " +
                                    std::to_string(options.max_pairs) + ")");

    Decision decision;

    // Degenerate but legal: no pairs at all means any distinct points work.
    if (n_pairs == 0) {
        Representation rep;
        for (int v = 1; v <= h.n_vertices; ++v) rep.points[v] = Point{rat(v), rat(0)};
        for (const auto& e : h.edges) rep.shapes[e.id] = PolygonTranslate{poly, Vec{rat(0), rat(0)}};
        VerifyReport check = verify_representation(h, rep);
        decision.outcome = check.pass ? Outcome::Yes : Outcome::No;
        if (check.pass) decision.witness = rep;
        return decision;
    }

    // Pair order: vertices by degree descending, edges by size descending.
    std::vector<int> vorder(static_cast<size_t>(h.n_vertices));
    for (int v = 1; v <= h.n_vertices; ++v) vorder[static_cast<size_t>(v - 1)] = v;
    auto degree = [&](int v) {
        int d = 0;
        for (const auto& e : h.edges) d += h.edge_contains(e, v) ? 1 : 0;
        return d;
    };
    std::stable_sort(vorder.begin(), vorder.end(),
                     [&](int a, int b) { return degree(a) > degree(b); });
    std::vector<int> eorder(h.edges.size());
    for (size_t i = 0; i < h.edges.size(); ++i) eorder[i] = static_cast<int>(i);
    std::stable_sort(eorder.begin(), eorder.end(), [&](int a, int b) {
        return h.edges[static_cast<size_t>(a)].members.size() >
               h.edges[static_cast<size_t>(b)].members.size();
    });

    struct PairSlot {
        int vertex;
        int edge_index;
        std::vector<RegionChoice> region_choices;
    };
    std::vector<PairSlot> slots;
    for (int v : vorder) {
        for (int ei : eorder) {
            PairSlot slot;
            slot.vertex = v;
            slot.edge_index = ei;
            bool member = h.edge_contains(h.edges[static_cast<size_t>(ei)], v);
            if (member) {
                for (size_t t = 0; t < tri.triangles.size(); ++t)
                    if (tri.inside_polygon[t])
                        slot.region_choices.push_back({true, static_cast<int>(t)});
            } else {
                for (size_t k = 0; k < tri.hull.size(); ++k)
                    slot.region_choices.push_back({false, static_cast<int>(k)});
                for (size_t t = 0; t < tri.triangles.size(); ++t)
                    if (!tri.inside_polygon[t])
                        slot.region_choices.push_back({true, static_cast<int>(t)});
            }
            slots.push_back(std::move(slot));
        }
    }

    std::vector<PairChoice> prefix;
    std::function<bool(size_t)> dfs = [&](size_t depth) -> bool {
        if (depth == slots.size()) {
            ++decision.stats.certificates_checked;
            SolveOutcome full = solve_assignment(ctx, poly, prefix, /*full=*/true);
            decision.stats.lps_solved += full.lps;
            if (full.feasible) {
                decision.witness = full.rep;
                return true;
            }
            return false;
        }
        const PairSlot& slot = slots[depth];
        for (const RegionChoice& rc : slot.region_choices) {
            prefix.push_back({slot.vertex, slot.edge_index, rc});
            bool viable = true;
            if (options.prune && depth + 1 < slots.size()) {
                SolveOutcome probe = solve_assignment(ctx, poly, prefix, /*full=*/false);
                decision.stats.lps_solved += probe.lps;
                if (!probe.feasible) {
                    viable = false;
                    ++decision.stats.subtrees_pruned;
                }
            }
            if (viable && dfs(depth + 1)) return true;
            prefix.pop_back();
        }
        return false;
    };

    decision.outcome = dfs(0) ? Outcome::Yes : Outcome::No;
    return decision;
}

// ---------------------------------------------------------------------------
// Heuristic search with exact verification
// ---------------------------------------------------------------------------

namespace {

struct PenaltyModel {
    const Hypergraph* h;
    ShapeFamily::Kind kind;
    std::vector<std::vector<double>> qd;  // ellipse form, doubles
    std::vector<std::pair<double, double>> poly;
    int nv, ne;
    int shape_params;  // per edge

    int dim() const { return 2 * nv + shape_params * ne; }
    int pbase(int v) const { return 2 * (v - 1); }
    int sbase(int e) const { return 2 * nv + shape_params * e; }
};

double relu(double x) { return x > 0 ? x : 0; }

// Distance from a point to a polygon boundary plus a sign (negative inside).
double polygon_signed_distance(const std::vector<std::pair<double, double>>& poly, double px,
                               double py) {
    size_t n = poly.size();
    double best = 1e100;
    bool inside = false;
    for (size_t i = 0; i < n; ++i) {
        auto [ax, ay] = poly[i];
        auto [bx, by] = poly[(i + 1) % n];
        double ux = bx - ax, uy = by - ay;
        double len2 = ux * ux + uy * uy;
        double t = len2 > 0 ? ((px - ax) * ux + (py - ay) * uy) / len2 : 0;
        t = std::clamp(t, 0.0, 1.0);
        double dx = px - (ax + t * ux), dy = py - (ay + t * uy);
        best = std::min(best, std::sqrt(dx * dx + dy * dy));
        if ((ay > py) != (by > py)) {
            double xint = ax + (py - ay) / (by - ay) * (bx - ax);
            if (xint > px) inside = !inside;
        }
    }
    return inside ? -best : best;
}

double penalty_and_grad(const PenaltyModel& m, const std::vector<double>& x,
                        std::vector<double>* grad) {
    if (grad) std::fill(grad->begin(), grad->end(), 0.0);
    double pen = 0;
    const double rin2 = 0.81, rout2 = 1.21, mh = 0.08, dmin2 = 0.02;

    auto add = [&](int idx, double g) {
        if (grad) (*grad)[static_cast<size_t>(idx)] += g;
    };

    for (int e = 0; e < m.ne; ++e) {
        const auto& edge = m.h->edges[static_cast<size_t>(e)];
        for (int v = 1; v <= m.nv; ++v) {
            bool member = m.h->edge_contains(edge, v);
            double px = x[static_cast<size_t>(m.pbase(v))];
            double py = x[static_cast<size_t>(m.pbase(v) + 1)];
            int sb = m.sbase(e);
            if (m.kind == ShapeFamily::Kind::UnitDisks ||
                m.kind == ShapeFamily::Kind::Ellipses) {
                double cx = x[static_cast<size_t>(sb)], cy = x[static_cast<size_t>(sb + 1)];
                double dx = px - cx, dy = py - cy;
                double qxx = 1, qxy = 0, qyy = 1;
                if (m.kind == ShapeFamily::Kind::Ellipses) {
                    qxx = m.qd[0][0];
                    qxy = m.qd[0][1];
                    qyy = m.qd[1][1];
                }
                double form = qxx * dx * dx + 2 * qxy * dx * dy + qyy * dy * dy;
                double gx = 2 * (qxx * dx + qxy * dy);
                double gy = 2 * (qxy * dx + qyy * dy);
                if (member) {
                    double g = relu(form - rin2);
                    pen += g * g;
                    add(m.pbase(v), 2 * g * gx);
                    add(m.pbase(v) + 1, 2 * g * gy);
                    add(sb, -2 * g * gx);
                    add(sb + 1, -2 * g * gy);
                } else {
                    double g = relu(rout2 - form);
                    pen += g * g;
                    add(m.pbase(v), -2 * g * gx);
                    add(m.pbase(v) + 1, -2 * g * gy);
                    add(sb, 2 * g * gx);
                    add(sb + 1, 2 * g * gy);
                }
            } else if (m.kind == ShapeFamily::Kind::Halfplanes) {
                double a = x[static_cast<size_t>(sb)], b = x[static_cast<size_t>(sb + 1)],
                       c = x[static_cast<size_t>(sb + 2)];
                double val = a * px + b * py - c;
                if (member) {
                    double g = relu(val + mh);
                    pen += g * g;
                    add(sb, 2 * g * px);
                    add(sb + 1, 2 * g * py);
                    add(sb + 2, -2 * g);
                    add(m.pbase(v), 2 * g * a);
                    add(m.pbase(v) + 1, 2 * g * b);
                } else {
                    double g = relu(mh - val);
                    pen += g * g;
                    add(sb, -2 * g * px);
                    add(sb + 1, -2 * g * py);
                    add(sb + 2, 2 * g);
                    add(m.pbase(v), -2 * g * a);
                    add(m.pbase(v) + 1, -2 * g * b);
                }
            } else {  // PolygonTranslates: numeric gradients supplied elsewhere
                double tx = x[static_cast<size_t>(sb)], ty = x[static_cast<size_t>(sb + 1)];
                double d = polygon_signed_distance(m.poly, px - tx, py - ty);
                double g = member ? relu(d + 0.05) : relu(0.05 - d);
                pen += g * g;
            }
        }
    }

    if (m.kind == ShapeFamily::Kind::Halfplanes) {
        for (int e = 0; e < m.ne; ++e) {
            int sb = m.sbase(e);
            double a = x[static_cast<size_t>(sb)], b = x[static_cast<size_t>(sb + 1)];
            double g = a * a + b * b - 1;
            pen += g * g;
            add(sb, 4 * g * a);
            add(sb + 1, 4 * g * b);
        }
    }

    for (int u = 1; u <= m.nv; ++u)
        for (int v = u + 1; v <= m.nv; ++v) {
            double dx = x[static_cast<size_t>(m.pbase(u))] - x[static_cast<size_t>(m.pbase(v))];
            double dy =
                x[static_cast<size_t>(m.pbase(u) + 1)] - x[static_cast<size_t>(m.pbase(v) + 1)];
            double g = relu(dmin2 - (dx * dx + dy * dy));
            pen += g * g;
            add(m.pbase(u), -4 * g * dx);
            add(m.pbase(u) + 1, -4 * g * dy);
            add(m.pbase(v), 4 * g * dx);
            add(m.pbase(v) + 1, 4 * g * dy);
        }
    return pen;
}

std::optional<Representation> exact_candidate(const PenaltyModel& m, const ShapeFamily& family,
                                              const std::vector<double>& x,
                                              const Hypergraph& h) {
    Representation rep;
    for (int v = 1; v <= m.nv; ++v)
        rep.points[v] = Point{rationalize(x[static_cast<size_t>(m.pbase(v))]),
                              rationalize(x[static_cast<size_t>(m.pbase(v) + 1)])};
    for (int e = 0; e < m.ne; ++e) {
        int sb = m.sbase(e);
        const std::string& id = h.edges[static_cast<size_t>(e)].id;
        switch (m.kind) {
            case ShapeFamily::Kind::UnitDisks:
                rep.shapes[id] = DiskTranslate{Point{rationalize(x[static_cast<size_t>(sb)]),
                                                     rationalize(x[static_cast<size_t>(sb + 1)])}};
                break;
            case ShapeFamily::Kind::Ellipses:
                rep.shapes[id] =
                    EllipseTranslate{Point{rationalize(x[static_cast<size_t>(sb)]),
                                           rationalize(x[static_cast<size_t>(sb + 1)])},
                                     family.q};
                break;
            case ShapeFamily::Kind::Halfplanes:
                rep.shapes[id] = Halfspace{Vec{rationalize(x[static_cast<size_t>(sb)]),
                                               rationalize(x[static_cast<size_t>(sb + 1)])},
                                           rationalize(x[static_cast<size_t>(sb + 2)])};
                break;
            case ShapeFamily::Kind::PolygonTranslates:
                rep.shapes[id] =
                    PolygonTranslate{family.polygon,
                                     Vec{rationalize(x[static_cast<size_t>(sb)]),
                                         rationalize(x[static_cast<size_t>(sb + 1)])}};
                break;
            default:
                return std::nullopt;
        }
    }
    try {
        if (verify_representation(h, rep).pass) return rep;
    } catch (const std::invalid_argument&) {
        // coincident points after rounding: candidate rejected
    }
    return std::nullopt;
}

}  // namespace

Decision search_representation(const Hypergraph& h, const ShapeFamily& family,
                               const SearchBudget& budget) {
    h.validate();
    if (family.kind == ShapeFamily::Kind::Intervals)
        throw std::invalid_argument("search_representation: use recognize_intervals for d=1");
    if (family.kind == ShapeFamily::Kind::PolygonTranslates &&
        !polygon_is_simple(family.polygon))
        throw std::invalid_argument("search_representation: polygon must be simple");
    if (family.kind == ShapeFamily::Kind::Ellipses && !positive_definite(family.q))
        throw std::invalid_argument("search_representation: ellipse form must be positive definite");

    PenaltyModel m;
    m.h = &h;
    m.kind = family.kind;
    m.nv = h.n_vertices;
    m.ne = static_cast<int>(h.edges.size());
    m.shape_params = (family.kind == ShapeFamily::Kind::Halfplanes) ? 3 : 2;
    if (family.kind == ShapeFamily::Kind::Ellipses) {
        m.qd = {{to_double(family.q[0][0]), to_double(family.q[0][1])},
                {to_double(family.q[1][0]), to_double(family.q[1][1])}};
    }
    if (family.kind == ShapeFamily::Kind::PolygonTranslates)
        for (const auto& p : family.polygon) m.poly.push_back({to_double(p[0]), to_double(p[1])});

    Decision decision;
    std::mt19937_64 rng(budget.seed);
    std::normal_distribution<double> noise(0.0, 1.0);
    int dim = m.dim();
    bool numeric_grad = family.kind == ShapeFamily::Kind::PolygonTranslates;

    for (int restart = 0; restart < budget.restarts; ++restart) {
        ++decision.stats.restarts;
        std::vector<double> x(static_cast<size_t>(dim));
        for (int v = 1; v <= m.nv; ++v) {
            x[static_cast<size_t>(m.pbase(v))] = 1.3 * noise(rng);
            x[static_cast<size_t>(m.pbase(v) + 1)] = 1.3 * noise(rng);
        }
        for (int e = 0; e < m.ne; ++e) {
            int sb = m.sbase(e);
            const auto& edge = h.edges[static_cast<size_t>(e)];
            double cx = 0, cy = 0;
            if (!edge.members.empty()) {
                for (int v : edge.members) {
                    cx += x[static_cast<size_t>(m.pbase(v))];
                    cy += x[static_cast<size_t>(m.pbase(v) + 1)];
                }
                cx /= static_cast<double>(edge.members.size());
                cy /= static_cast<double>(edge.members.size());
            } else {
                cx = 8 + noise(rng);
                cy = 8 + noise(rng);
            }
            if (family.kind == ShapeFamily::Kind::Halfplanes) {
                double ang = noise(rng);
                x[static_cast<size_t>(sb)] = std::cos(ang);
                x[static_cast<size_t>(sb + 1)] = std::sin(ang);
                x[static_cast<size_t>(sb + 2)] =
                    x[static_cast<size_t>(sb)] * cx + x[static_cast<size_t>(sb + 1)] * cy + 0.3;
            } else {
                x[static_cast<size_t>(sb)] = cx + 0.3 * noise(rng);
                x[static_cast<size_t>(sb + 1)] = cy + 0.3 * noise(rng);
            }
        }

        std::vector<double> grad(static_cast<size_t>(dim)), mom(static_cast<size_t>(dim), 0.0),
            vel(static_cast<size_t>(dim), 0.0);
        const double lr = 0.04, b1 = 0.9, b2 = 0.999, eps = 1e-9;
        for (int iter = 1; iter <= budget.iterations; ++iter) {
            double pen;
            if (numeric_grad) {
                pen = penalty_and_grad(m, x, nullptr);
                const double hstep = 1e-5;
                for (int j = 0; j < dim; ++j) {
                    std::vector<double> xp = x, xm = x;
                    xp[static_cast<size_t>(j)] += hstep;
                    xm[static_cast<size_t>(j)] -= hstep;
                    grad[static_cast<size_t>(j)] = (penalty_and_grad(m, xp, nullptr) -
                                                    penalty_and_grad(m, xm, nullptr)) /
                                                   (2 * hstep);
                }
            } else {
                pen = penalty_and_grad(m, x, &grad);
            }
            if (pen < 1e-14 || iter == budget.iterations || iter % 400 == 0) {
                if (pen < 1e-10) {
                    auto rep = exact_candidate(m, family, x, h);
                    if (rep) {
                        decision.outcome = Outcome::Yes;
                        decision.witness = *rep;
                        return decision;
                    }
                }
                if (pen < 1e-14) break;
            }
            for (int j = 0; j < dim; ++j) {
                mom[static_cast<size_t>(j)] =
                    b1 * mom[static_cast<size_t>(j)] + (1 - b1) * grad[static_cast<size_t>(j)];
                vel[static_cast<size_t>(j)] = b2 * vel[static_cast<size_t>(j)] +
                                              (1 - b2) * grad[static_cast<size_t>(j)] *
                                                  grad[static_cast<size_t>(j)];
                double mh2 = mom[static_cast<size_t>(j)] / (1 - std::pow(b1, iter));
                double vh = vel[static_cast<size_t>(j)] / (1 - std::pow(b2, iter));
                x[static_cast<size_t>(j)] -= lr * mh2 / (std::sqrt(vh) + eps);
            }
        }
    }
    decision.outcome = Outcome::Unknown;
    decision.stats.note = "budget exhausted without an exactly verified candidate";
    return decision;
}

// ---------------------------------------------------------------------------
// Brute-force oracle on a rational grid
// ---------------------------------------------------------------------------

namespace {

using I64 = long long;

int orientation_i(I64 ax, I64 ay, I64 bx, I64 by, I64 cx, I64 cy) {
    I64 d = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
    return d > 0 ? 1 : d < 0 ? -1 : 0;
}

bool on_segment_i(I64 ax, I64 ay, I64 bx, I64 by, I64 px, I64 py) {
    if (orientation_i(ax, ay, bx, by, px, py) != 0) return false;
    return std::min(ax, bx) <= px && px <= std::max(ax, bx) && std::min(ay, by) <= py &&
           py <= std::max(ay, by);
}

bool point_in_polygon_i(const std::vector<std::pair<I64, I64>>& poly, I64 px, I64 py) {
    size_t n = poly.size();
    for (size_t i = 0; i < n; ++i) {
        auto [ax, ay] = poly[i];
        auto [bx, by] = poly[(i + 1) % n];
        if (on_segment_i(ax, ay, bx, by, px, py)) return true;
    }
    bool inside = false;
    for (size_t i = 0; i < n; ++i) {
        auto [ax, ay] = poly[i];
        auto [bx, by] = poly[(i + 1) % n];
        if ((ay > py) == (by > py)) continue;
        I64 num = (ax - px) * (by - ay) + (py - ay) * (bx - ax);
        if (num != 0 && (num > 0) == (by - ay > 0)) inside = !inside;
    }
    return inside;
}

Int lcm_int(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return a / g * b;
}

}  // namespace

OracleDecision brute_force_oracle(const Hypergraph& h, const ShapeFamily& family,
                                  const OracleParams& params) {
    h.validate();
    if (params.resolution <= 0 || params.point_range <= 0)
        throw std::invalid_argument("oracle: resolution and range must be positive");

    bool intervals = family.kind == ShapeFamily::Kind::Intervals;
    bool disks = family.kind == ShapeFamily::Kind::UnitDisks;
    bool polygons = family.kind == ShapeFamily::Kind::PolygonTranslates;
    if (!intervals && !disks && !polygons)
        throw std::invalid_argument("oracle: family not supported (use polygon/disk/interval)");

    std::vector<Point> poly;
    if (polygons) poly = normalize_ccw(family.polygon);

    // Scale so the grid and the polygon are integral.
    Int scale_den = params.resolution.get_den();
    for (const auto& p : poly)
        for (const auto& c : p) scale_den = lcm_int(scale_den, c.get_den());
    Rat scale_q(scale_den, 1);
    I64 step = static_cast<I64>(Rat(params.resolution * scale_q).get_num().get_si());
    I64 range = static_cast<I64>(mpz_class(params.point_range.get_num() * scale_den /
                                           params.point_range.get_den())
                                     .get_si());

    std::vector<std::pair<I64, I64>> poly_i;
    I64 poly_min_x = 0, poly_max_x = 0, poly_min_y = 0, poly_max_y = 0;
    if (polygons) {
        for (const auto& p : poly) {
            I64 x = static_cast<I64>(mpz_class(p[0].get_num() * scale_den / p[0].get_den()).get_si());
            I64 y = static_cast<I64>(mpz_class(p[1].get_num() * scale_den / p[1].get_den()).get_si());
            poly_i.push_back({x, y});
        }
        poly_min_x = poly_max_x = poly_i[0].first;
        poly_min_y = poly_max_y = poly_i[0].second;
        for (auto [x, y] : poly_i) {
            poly_min_x = std::min(poly_min_x, x);
            poly_max_x = std::max(poly_max_x, x);
            poly_min_y = std::min(poly_min_y, y);
            poly_max_y = std::max(poly_max_y, y);
        }
    }
    I64 unit = static_cast<I64>(scale_den.get_si());  // length 1 in scaled units

    int d = intervals ? 1 : 2;

    // Point grid positions, lexicographic.
    std::vector<std::vector<I64>> grid;
    for (I64 gx = 0; gx <= range; gx += step) {
        if (d == 1) {
            grid.push_back({gx});
        } else {
            for (I64 gy = 0; gy <= range; gy += step) grid.push_back({gx, gy});
        }
    }
    double combos = std::pow(static_cast<double>(grid.size()), h.n_vertices);
    if (combos > static_cast<double>(params.max_configurations))
        throw std::invalid_argument("oracle: configuration cap exceeded");

    // Shape translation grid.
    std::vector<std::vector<I64>> shape_grid;
    I64 slo_x, shi_x, slo_y = 0, shi_y = 0;
    if (polygons) {
        slo_x = -poly_max_x - step;
        shi_x = range - poly_min_x + step;
        slo_y = -poly_max_y - step;
        shi_y = range - poly_min_y + step;
    } else {
        slo_x = -unit - step;
        shi_x = range + unit + step;
        slo_y = slo_x;
        shi_y = shi_x;
    }
    for (I64 sx = slo_x; sx <= shi_x; sx += step) {
        if (d == 1) {
            shape_grid.push_back({sx});
        } else {
            for (I64 sy = slo_y; sy <= shi_y; sy += step) shape_grid.push_back({sx, sy});
        }
    }

    auto shape_contains = [&](const std::vector<I64>& s, const std::vector<I64>& p) {
        if (polygons) {
            return point_in_polygon_i(poly_i, p[0] - s[0], p[1] - s[1]);
        }
        if (d == 1) {
            I64 dx = p[0] - s[0];
            return dx * dx <= unit * unit;
        }
        I64 dx = p[0] - s[0], dy = p[1] - s[1];
        return dx * dx + dy * dy <= unit * unit;
    };

    std::vector<int> pick(static_cast<size_t>(h.n_vertices), 0);
    std::vector<std::vector<I64>> pts(static_cast<size_t>(h.n_vertices));
    for (;;) {
        bool distinct = true;
        for (int v = 0; v < h.n_vertices && distinct; ++v) {
            pts[static_cast<size_t>(v)] = grid[static_cast<size_t>(pick[static_cast<size_t>(v)])];
            for (int u = 0; u < v; ++u)
                distinct = distinct && pts[static_cast<size_t>(u)] != pts[static_cast<size_t>(v)];
        }
        if (distinct) {
            std::vector<int> shape_of(h.edges.size(), -1);
            bool all_ok = true;
            for (size_t e = 0; e < h.edges.size() && all_ok; ++e) {
                const auto& edge = h.edges[e];
                for (size_t s = 0; s < shape_grid.size(); ++s) {
                    bool ok = true;
                    for (int v = 1; v <= h.n_vertices && ok; ++v) {
                        bool member = h.edge_contains(edge, v);
                        ok = shape_contains(shape_grid[s], pts[static_cast<size_t>(v - 1)]) ==
                             member;
                    }
                    if (ok) {
                        shape_of[e] = static_cast<int>(s);
                        break;
                    }
                }
                all_ok = shape_of[e] >= 0;
            }
            if (all_ok) {
                Representation rep;
                for (int v = 1; v <= h.n_vertices; ++v) {
                    Point p;
                    for (int c = 0; c < d; ++c)
                        p.push_back(Rat(Int(static_cast<long>(
                            pts[static_cast<size_t>(v - 1)][static_cast<size_t>(c)])),
                                        scale_den));
                    for (auto& coord : p) coord.canonicalize();
                    rep.points[v] = p;
                }
                for (size_t e = 0; e < h.edges.size(); ++e) {
                    const auto& s = shape_grid[static_cast<size_t>(shape_of[e])];
                    Point c;
                    for (int k = 0; k < d; ++k) {
                        Rat coord(Int(static_cast<long>(s[static_cast<size_t>(k)])), scale_den);
                        coord.canonicalize();
                        c.push_back(coord);
                    }
                    if (polygons)
                        rep.shapes[h.edges[e].id] = PolygonTranslate{poly, c};
                    else
                        rep.shapes[h.edges[e].id] = DiskTranslate{c};
                }
                if (verify_representation(h, rep).pass)
                    return {OracleOutcome::Yes, rep};
                throw std::logic_error("oracle: grid witness failed exact verification");
            }
        }
        int pos = h.n_vertices - 1;
        while (pos >= 0 &&
               pick[static_cast<size_t>(pos)] == static_cast<int>(grid.size()) - 1) {
            pick[static_cast<size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++pick[static_cast<size_t>(pos)];
    }
    return {OracleOutcome::NoAtResolution, std::nullopt};
}

// ---------------------------------------------------------------------------
// Decision JSON
// ---------------------------------------------------------------------------

std::string serialize_decision(const Decision& d) {
    nlohmann::json j;
    j["outcome"] = d.outcome == Outcome::Yes ? "yes" : d.outcome == Outcome::No ? "no" : "unknown";
    if (d.witness) j["witness"] = nlohmann::json::parse(serialize_representation(*d.witness));
    j["stats"] = {{"lps_solved", d.stats.lps_solved},
                  {"certificates_checked", d.stats.certificates_checked},
                  {"subtrees_pruned", d.stats.subtrees_pruned},
                  {"restarts", d.stats.restarts}};
    if (!d.stats.note.empty()) j["stats"]["note"] = d.stats.note;
    return j.dump(2);
}

int exit_code(const Decision& d) {
    switch (d.outcome) {
        case Outcome::Yes:
            return 0;
        case Outcome::No:
            return 1;
        default:
            return 2;
    }
}

}  // namespace geomrep
