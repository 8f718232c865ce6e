#include "geomrep/reduction.hpp"

#include "geomrep/lp.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace geomrep {

namespace {

// Assembles the hypergraph from the doubled cell complex. Element order is
// [l1, l1', l2, l2', ...]; even positions are base elements whose twin lies
// on their positive side, odd positions are twins whose partner lies below.
ReductionOutput assemble(const std::vector<std::string>& base_labels, CellComplex cc) {
    ReductionOutput out;
    out.base_labels = base_labels;
    for (const auto& bl : base_labels) {
        out.element_labels.push_back(bl);
        out.element_labels.push_back(twin_label(bl));
    }
    cc.element_labels = out.element_labels;
    out.doubled_cells = std::move(cc);

    out.hypergraph.n_vertices = static_cast<int>(out.doubled_cells.cells.size());
    for (size_t c = 0; c < out.doubled_cells.cells.size(); ++c)
        out.vertex_of_cell[signs_to_key(out.doubled_cells.cells[c].signs)] =
            static_cast<int>(c) + 1;

    for (size_t k = 0; k < out.element_labels.size(); ++k) {
        int twin_side = (k % 2 == 0) ? 1 : -1;
        Hyperedge e;
        e.id = out.element_labels[k];
        for (size_t c = 0; c < out.doubled_cells.cells.size(); ++c)
            if (out.doubled_cells.cells[c].signs[k] == twin_side)
                e.members.push_back(static_cast<int>(c) + 1);
        out.hypergraph.edges.push_back(std::move(e));
        out.edge_of_element[out.element_labels[k]] = out.element_labels[k];
    }
    out.hypergraph.validate();
    return out;
}

std::vector<std::string> incident_keys_impl(const std::vector<std::string>& element_labels,
                                            const VertexSides& vertex) {
    auto position = [&](const std::string& label) {
        auto it = std::find(element_labels.begin(), element_labels.end(), label);
        if (it == element_labels.end())
            throw std::invalid_argument("incident_cell_keys: unknown element " + label);
        return static_cast<size_t>(it - element_labels.begin());
    };

    std::vector<int> fixed(element_labels.size(), 0);
    for (const auto& [label, side] : vertex.side) {
        fixed[position(label)] = side;
        fixed[position(twin_label(label))] = side;
    }
    std::vector<std::pair<size_t, size_t>> pairs;  // (base pos, twin pos) through the vertex
    for (const auto& label : vertex.on)
        pairs.push_back({position(label), position(twin_label(label))});

    size_t d = pairs.size();
    size_t total = 1;
    for (size_t i = 0; i < d; ++i) total *= 3;

    std::vector<std::string> keys;
    for (size_t code = 0; code < total; ++code) {
        std::vector<int> signs = fixed;
        size_t rem = code;
        for (size_t i = 0; i < d; ++i) {
            int choice = static_cast<int>(rem % 3);  // 0 below, 1 between, 2 above
            rem /= 3;
            signs[pairs[i].first] = choice == 0 ? -1 : 1;
            signs[pairs[i].second] = choice == 2 ? 1 : -1;
        }
        keys.push_back(signs_to_key(signs));
    }
    return keys;
}

}  // namespace

std::vector<std::string> incident_cell_keys(const ReductionOutput& r, const VertexSides& vertex) {
    return incident_keys_impl(r.element_labels, vertex);
}

ReductionOutput build_hypergraph(const WiringDiagram& a) {
    DoubledWiring dw = insert_twins(a);
    CellComplex cc = cells(dw.doubled);
    std::vector<std::string> base_labels;
    for (int i = 1; i <= a.n_lines; ++i) base_labels.push_back(std::to_string(i));
    return assemble(base_labels, std::move(cc));
}

ReductionOutput build_hypergraph(const HyperplaneArrangement& a) {
    std::vector<std::string> base_labels;
    for (const auto& lh : a.hyperplanes) base_labels.push_back(lh.label);
    std::vector<VertexSides> vertices = vertex_side_data(a);

    DoubledArrangement da = insert_twins(a);
    Rat alpha = da.gap;
    for (int attempt = 0;; ++attempt) {
        CellComplex cc = cells(da.doubled);
        ReductionOutput out = assemble(base_labels, std::move(cc));
        bool ok = true;
        for (const auto& vs : vertices) {
            for (const auto& key : incident_cell_keys(out, vs))
                if (!out.vertex_of_cell.count(key)) {
                    ok = false;
                    break;
                }
            if (!ok) break;
        }
        if (ok) return out;
        if (attempt >= 8)
            throw std::logic_error("build_hypergraph: doubled cells incomplete at every gap");
        alpha /= 2;
        da = insert_twins(a, alpha);
    }
}

ReductionOutput build_hypergraph(const Fixture& a) {
    return std::visit([](const auto& arr) { return build_hypergraph(arr); }, a);
}

std::string serialize_reduction(const ReductionOutput& r) {
    nlohmann::json j;
    j["hypergraph"] = nlohmann::json::parse(serialize_hypergraph(r.hypergraph));
    j["vertex_of_cell"] = nlohmann::json::object();
    for (const auto& [key, v] : r.vertex_of_cell) j["vertex_of_cell"][key] = v;
    j["edge_of_element"] = nlohmann::json::object();
    for (const auto& [el, e] : r.edge_of_element) j["edge_of_element"][el] = e;
    j["element_labels"] = r.element_labels;
    j["base_labels"] = r.base_labels;
    return j.dump(2);
}

namespace {

HyperplaneArrangement reorder_by_labels(const HyperplaneArrangement& b,
                                        const std::vector<std::string>& base_labels) {
    std::set<std::string> b_set;
    for (const auto& lh : b.hyperplanes) b_set.insert(lh.label);
    std::set<std::string> a_set(base_labels.begin(), base_labels.end());
    if (a_set != b_set)
        throw std::invalid_argument("builder: arrangement labels do not match the reduction");
    HyperplaneArrangement ordered;
    ordered.dimension = b.dimension;
    for (const auto& label : base_labels)
        ordered.hyperplanes.push_back(b.hyperplanes[b.index_of(label)]);
    return ordered;
}

// Per-cell interior point of the doubled stretching, matched by sign key,
// with between-twin points placed on the midline(s) of their slab(s).
struct MatchedPoints {
    DoubledArrangement doubled;
    std::map<int, Point> points;  // vertex id -> point
    Vec twin_shifts;              // per base element
};

Point equidistant_point(const HyperplaneArrangement& doubled, const std::vector<int>& signs,
                        const Vec& shifts, const std::vector<size_t>& between) {
    int d = doubled.dimension;
    LinearProgram lp;
    for (int j = 0; j < d; ++j) lp.variables.push_back("x" + std::to_string(j));
    lp.variables.push_back("t");
    std::set<size_t> skip;
    for (size_t i : between) {
        const auto& base = doubled.hyperplanes[2 * i].plane;
        LinConstraint eq;
        eq.coeffs.assign(d + 1, Rat(0));
        for (int j = 0; j < d; ++j) eq.coeffs[j] = base.normal[j];
        eq.rel = Rel::Eq;
        eq.rhs = base.offset + shifts[i] / 2;
        lp.constraints.push_back(std::move(eq));
        skip.insert(2 * i);
        skip.insert(2 * i + 1);
    }
    for (size_t k = 0; k < doubled.hyperplanes.size(); ++k) {
        if (skip.count(k)) continue;
        const auto& plane = doubled.hyperplanes[k].plane;
        LinConstraint c;
        c.coeffs.assign(d + 1, Rat(0));
        for (int j = 0; j < d; ++j) c.coeffs[j] = -Rat(signs[k]) * plane.normal[j];
        c.coeffs[d] = 1;
        c.rhs = -Rat(signs[k]) * plane.offset;
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
    if (res.status != LpStatus::Optimal || res.value <= 0)
        throw std::invalid_argument("equidistant placement infeasible in this cell");
    Point p(res.assignment.begin(), res.assignment.begin() + d);
    for (size_t k = 0; k < doubled.hyperplanes.size(); ++k)
        if (side_of_hyperplane(doubled.hyperplanes[k].plane, p) != signs[k])
            throw std::logic_error("equidistant point escaped its cell");
    return p;
}

MatchedPoints match_cells(const ReductionOutput& r, const HyperplaneArrangement& b_ordered,
                          bool equidistant) {
    DoubledArrangement da = insert_twins(b_ordered);
    Rat alpha = da.gap;
    std::string last_error;
    for (int attempt = 0; attempt < 10; ++attempt) {
        try {
            CellComplex cc = cells(da.doubled);
            std::map<std::string, const Cell*> by_key;
            for (const auto& cell : cc.cells) by_key[signs_to_key(cell.signs)] = &cell;

            Vec shifts;
            for (size_t i = 0; i < b_ordered.hyperplanes.size(); ++i)
                shifts.push_back(da.doubled.hyperplanes[2 * i + 1].plane.offset -
                                 da.doubled.hyperplanes[2 * i].plane.offset);

            MatchedPoints out;
            out.doubled = da;
            out.twin_shifts = shifts;
            for (const auto& [key, vid] : r.vertex_of_cell) {
                auto it = by_key.find(key);
                if (it == by_key.end())
                    throw std::invalid_argument("required cell missing in the stretching: " + key);
                const Cell& cell = *it->second;
                std::vector<size_t> between;
                for (size_t i = 0; i < b_ordered.hyperplanes.size(); ++i)
                    if (cell.signs[2 * i] == 1 && cell.signs[2 * i + 1] == -1) between.push_back(i);
                if (equidistant && !between.empty())
                    out.points[vid] = equidistant_point(da.doubled, cell.signs, shifts, between);
                else
                    out.points[vid] = *cell.representative;
            }
            return out;
        } catch (const std::invalid_argument& ex) {
            last_error = ex.what();
            alpha /= 2;
            da = insert_twins(b_ordered, alpha);
        }
    }
    throw std::invalid_argument("builder: could not match doubled cells: " + last_error);
}

void require_stretching(const std::vector<VertexSides>& a, const HyperplaneArrangement& b) {
    StretchReport report = check_stretching(a, b);
    if (!report.ok) throw std::invalid_argument("builder: arrangement is not a stretching");
}

}  // namespace

Representation halfspace_representation_from_stretching(const ReductionOutput& r,
                                                        const std::vector<VertexSides>& a,
                                                        const HyperplaneArrangement& b) {
    require_stretching(a, b);
    HyperplaneArrangement b_ordered = reorder_by_labels(b, r.base_labels);
    MatchedPoints matched = match_cells(r, b_ordered, /*equidistant=*/true);

    Representation rep;
    rep.points = matched.points;
    for (size_t k = 0; k < matched.doubled.doubled.hyperplanes.size(); ++k) {
        const auto& lh = matched.doubled.doubled.hyperplanes[k];
        Halfspace hs;
        if (k % 2 == 0) {  // base element, twin on the positive side
            hs.normal = scale(lh.plane.normal, Rat(-1));
            hs.offset = -lh.plane.offset;
        } else {  // twin, partner below
            hs.normal = lh.plane.normal;
            hs.offset = lh.plane.offset;
        }
        rep.shapes[r.edge_of_element.at(r.element_labels[k])] = hs;
    }

    VerifyReport check = verify_representation(r.hypergraph, rep);
    if (!check.pass)
        throw std::logic_error("halfspace builder produced an invalid representation");
    return rep;
}

namespace {

Rat exact_sqrt(const Rat& q) {
    Int num = q.get_num(), den = q.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0 ||
        mpz_perfect_square_p(den.get_mpz_t()) == 0)
        throw std::invalid_argument("not a perfect rational square");
    Int rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    Rat r(rn, rd);
    r.canonicalize();
    return r;
}

// Rational R with R^T R = q, via LDL^T with perfect-square diagonal.
// A broader rational square root exists for some other q; those are refused.
Mat rational_sqrt_matrix(const Mat& q) {
    size_t n = q.size();
    if (!positive_definite(q))
        throw std::invalid_argument("ellipse form must be symmetric positive definite");
    Mat l = identity(static_cast<int>(n));
    Vec diag(n, Rat(0));
    for (size_t j = 0; j < n; ++j) {
        Rat sum = q[j][j];
        for (size_t k = 0; k < j; ++k) sum -= l[j][k] * l[j][k] * diag[k];
        diag[j] = sum;
        for (size_t i = j + 1; i < n; ++i) {
            Rat s = q[i][j];
            for (size_t k = 0; k < j; ++k) s -= l[i][k] * l[j][k] * diag[k];
            l[i][j] = s / diag[j];
        }
    }
    Mat r = transpose(l);
    for (size_t i = 0; i < n; ++i) {
        Rat root = exact_sqrt(diag[i]);  // throws when not a perfect square
        for (size_t jc = 0; jc < n; ++jc) r[i][jc] *= root;
    }
    if (mat_mul(transpose(r), r) != q) throw std::logic_error("matrix square root mismatch");
    return r;
}

HyperplaneArrangement transform_arrangement(const HyperplaneArrangement& a, const Mat& map) {
    // x -> map * x sends {n . x = c} to {(map^-T n) . y = c}.
    auto inv = invert(map);
    if (!inv) throw std::invalid_argument("transform must be invertible");
    Mat inv_t = transpose(*inv);
    HyperplaneArrangement out;
    out.dimension = a.dimension;
    for (const auto& lh : a.hyperplanes)
        out.hyperplanes.push_back({lh.label, {mat_vec(inv_t, lh.plane.normal), lh.plane.offset}});
    return out;
}

struct NormalizedFrame {
    HyperplaneArrangement doubled;  // transformed doubled arrangement
    std::map<int, Point> points;
    Vec twin_shifts;  // offsets within pairs are preserved by linear maps
};

// Shear + anisotropic scaling + uniform shrink with positive determinant:
// afterwards every normal is epsilon-close to (0, +-1) and all points and
// vertices lie within [-w/2, w/2]^2.
NormalizedFrame normalize_planar(const MatchedPoints& matched, const Rat& epsilon,
                                 const Rat& halfwidth) {
    const HyperplaneArrangement& doubled = matched.doubled.doubled;

    // Shear x -> x + s*y so no normal has a zero y-coordinate.
    Rat shear;
    for (int k = 0;; ++k) {
        Rat s = (k % 2 == 0) ? rat(k / 2) : rat(-(k / 2 + 1));
        bool ok = true;
        for (const auto& lh : doubled.hyperplanes)
            ok = ok && (lh.plane.normal[1] - s * lh.plane.normal[0]) != 0;
        if (ok) {
            shear = s;
            break;
        }
        if (k > 4 * static_cast<int>(doubled.hyperplanes.size()) + 8)
            throw std::logic_error("normalize: no shear found");
    }
    Mat m1 = {{rat(1), shear}, {rat(0), rat(1)}};

    // Scale x by lambda until every normal satisfies the epsilon cone test:
    // ny^2 >= (1 - eps^2/2)^2 * |n|^2, checked exactly on squared norms.
    Rat cone = (1 - epsilon * epsilon / 2);
    if (cone < 0) cone = 0;
    Rat cone_sq = cone * cone;
    HyperplaneArrangement sheared = transform_arrangement(doubled, m1);
    Rat lambda = 1;
    for (int iter = 0; iter < 512; ++iter) {
        bool ok = true;
        for (const auto& lh : sheared.hyperplanes) {
            Rat nx = lh.plane.normal[0] / lambda;
            Rat ny = lh.plane.normal[1];
            if (ny * ny < cone_sq * (nx * nx + ny * ny)) {
                ok = false;
                break;
            }
        }
        if (ok) break;
        lambda *= 2;
        if (iter == 511) throw std::logic_error("normalize: cone scaling diverged");
    }
    Mat m2 = {{lambda, rat(0)}, {rat(0), rat(1)}};
    Mat linear = mat_mul(m2, m1);

    // Uniform shrink into [-w/2, w/2]^2, covering points and vertices.
    Rat extent = 0;
    auto consider = [&](const Point& p) {
        Point q = mat_vec(linear, p);
        for (const auto& c : q) {
            Rat a = abs(c);
            if (a > extent) extent = a;
        }
    };
    for (const auto& [vid, p] : matched.points) consider(p);
    const auto& planes = doubled.hyperplanes;
    for (size_t i = 0; i < planes.size(); ++i)
        for (size_t j = i + 1; j < planes.size(); ++j) {
            Mat rows = {planes[i].plane.normal, planes[j].plane.normal};
            Vec rhs = {planes[i].plane.offset, planes[j].plane.offset};
            auto sol = solve_linear(rows, rhs);
            if (sol) consider(*sol);
        }
    if (extent == 0) extent = 1;
    Rat shrink = halfwidth / (2 * extent);
    Mat m3 = {{shrink, rat(0)}, {rat(0), shrink}};
    Mat full = mat_mul(m3, linear);

    NormalizedFrame frame;
    frame.doubled = transform_arrangement(doubled, full);
    for (const auto& [vid, p] : matched.points) frame.points[vid] = mat_vec(full, p);
    frame.twin_shifts = matched.twin_shifts;
    return frame;
}

}  // namespace

DiskBuildResult disk_representation_from_stretching(const ReductionOutput& r,
                                                    const std::vector<VertexSides>& a,
                                                    const HyperplaneArrangement& b,
                                                    const DiskBuilderParams& params) {
    if (b.dimension != 2)
        throw std::invalid_argument("disk builder: shipped builder is planar (d = 2)");
    if (params.epsilon <= 0 || params.box_halfwidth <= 0)
        throw std::invalid_argument("disk builder: parameters must be positive");
    require_stretching(a, b);
    HyperplaneArrangement b_input = reorder_by_labels(b, r.base_labels);

    // Ellipse route: carry the construction out in the Q-metric frame.
    std::optional<Mat> sqrt_q;
    if (params.ellipse_q) {
        if (params.ellipse_q_sqrt) {
            if (mat_mul(transpose(*params.ellipse_q_sqrt), *params.ellipse_q_sqrt) !=
                *params.ellipse_q)
                throw std::invalid_argument("disk builder: supplied sqrt does not square to q");
            sqrt_q = *params.ellipse_q_sqrt;
        } else {
            sqrt_q = rational_sqrt_matrix(*params.ellipse_q);
        }
    }
    HyperplaneArrangement b_work = sqrt_q ? transform_arrangement(b_input, *sqrt_q) : b_input;

    MatchedPoints matched = match_cells(r, b_work, params.equidistant);
    NormalizedFrame frame = normalize_planar(matched, params.epsilon, params.box_halfwidth);

    size_t n_base = r.base_labels.size();

    // Per-pair Euclidean gap (squared) in the normalized frame.
    Rat gap_min_sq;
    bool have_gap = false;
    for (size_t i = 0; i < n_base; ++i) {
        const auto& plane = frame.doubled.hyperplanes[2 * i].plane;
        Rat g = frame.twin_shifts[i] * frame.twin_shifts[i] / norm_sq(plane.normal);
        if (!have_gap || g < gap_min_sq) {
            gap_min_sq = g;
            have_gap = true;
        }
    }
    if (!have_gap) gap_min_sq = 1;

    unsigned bits = 128;
    Rat alpha_lower = sqrt_lower(gap_min_sq, bits);
    while (alpha_lower == 0 && bits < 8192) {
        bits *= 2;
        alpha_lower = sqrt_lower(gap_min_sq, bits);
    }
    if (alpha_lower == 0) throw std::logic_error("disk builder: gap underflow");

    // Sag bound L^2/(2f) <= alpha/10 with L = 3w >= the box diameter 2*sqrt(2)*w.
    Rat big_l = 3 * params.box_halfwidth;
    Rat f = params.scale_f ? *params.scale_f : 5 * big_l * big_l / alpha_lower;
    if (f <= 0) throw std::invalid_argument("disk builder: scale factor must be positive");

    unsigned standoff_bits = 96;
    for (int attempt = 0; attempt < 6; ++attempt) {
        // Shrink the configuration by 1/f: radius-f disks become unit disks.
        HyperplaneArrangement shrunk;
        shrunk.dimension = 2;
        for (const auto& lh : frame.doubled.hyperplanes)
            shrunk.hyperplanes.push_back({lh.label, {lh.plane.normal, lh.plane.offset / f}});
        std::map<int, Point> pts;
        for (const auto& [vid, p] : frame.points) pts[vid] = scale(p, Rat(1) / f);

        // Reference between-point per base pair, for anchoring tangencies.
        std::vector<Point> between_ref(n_base);
        std::vector<bool> have_ref(n_base, false);
        for (const auto& [key, vid] : r.vertex_of_cell) {
            const auto& cell_signs =
                r.doubled_cells.cells[static_cast<size_t>(vid - 1)].signs;
            for (size_t i = 0; i < n_base; ++i) {
                if (!have_ref[i] && cell_signs[2 * i] == 1 && cell_signs[2 * i + 1] == -1) {
                    between_ref[i] = pts.at(vid);
                    have_ref[i] = true;
                }
            }
        }
        for (size_t i = 0; i < n_base; ++i)
            if (!have_ref[i]) throw std::logic_error("disk builder: no between-twin cell found");

        Representation rep;
        rep.points = pts;
        std::map<std::string, Point> tangency;
        for (size_t k = 0; k < 2 * n_base; ++k) {
            const auto& plane = shrunk.hyperplanes[k].plane;
            int twin_side = (k % 2 == 0) ? 1 : -1;
            const Point& ref = between_ref[k / 2];
            // anchor: projection of the between-point onto the element's line
            Rat offset_err = (dot(plane.normal, ref) - plane.offset) / norm_sq(plane.normal);
            Point anchor = sub(ref, scale(plane.normal, offset_err));
            // center: anchor + s*n with s*|n| >= 1, overshoot shrinking with bits
            Rat s = sqrt_upper(Rat(1) / norm_sq(plane.normal), standoff_bits);
            Point center = add(anchor, scale(plane.normal, Rat(twin_side) * s));
            tangency[r.element_labels[k]] = anchor;
            rep.shapes[r.edge_of_element.at(r.element_labels[k])] = DiskTranslate{center};
        }

        VerifyReport check = verify_representation(r.hypergraph, rep);
        if (check.pass) {
            DiskBuildResult out;
            out.scale_f = f;
            out.box_halfwidth_scaled = params.box_halfwidth / f;
            if (sqrt_q) {
                // Map back through the Q-metric: y = R x, so x = R^-1 y.
                Mat back = *invert(*sqrt_q);
                Representation mapped;
                for (const auto& [vid, p] : rep.points) mapped.points[vid] = mat_vec(back, p);
                for (const auto& [eid, s] : rep.shapes) {
                    const auto& disk = std::get<DiskTranslate>(s);
                    mapped.shapes[eid] =
                        EllipseTranslate{mat_vec(back, disk.center), *params.ellipse_q};
                }
                VerifyReport recheck = verify_representation(r.hypergraph, mapped);
                if (!recheck.pass)
                    throw std::logic_error("disk builder: ellipse mapping broke the pattern");
                out.representation = mapped;
                for (const auto& [el, p] : tangency) out.tangency[el] = mat_vec(back, p);
            } else {
                out.representation = rep;
                out.tangency = tangency;
            }
            return out;
        }
        // Tighten the tangency overshoot first, then thicken the disks.
        if (attempt % 2 == 0)
            standoff_bits *= 2;
        else
            f *= 2;
    }
    throw std::logic_error("disk builder: could not realize the containment pattern");
}

HyperplaneArrangement extract_separators(const Hypergraph& h, const Representation& rep,
                                         const ReductionOutput& r) {
    (void)h;
    HyperplaneArrangement out;
    out.dimension = 0;
    for (const auto& label : r.base_labels) {
        const std::string& edge_base = r.edge_of_element.at(label);
        const std::string& edge_twin = r.edge_of_element.at(twin_label(label));
        if (!rep.shapes.count(edge_base) || !rep.shapes.count(edge_twin))
            throw std::invalid_argument("extract_separators: representation missing edge shapes");
        const Shape& s_base = rep.shapes.at(edge_base);
        const Shape& s_twin = rep.shapes.at(edge_twin);

        // The lens must be nonempty: the two translates share the between points.
        if (auto* d1 = std::get_if<DiskTranslate>(&s_base)) {
            auto* d2 = std::get_if<DiskTranslate>(&s_twin);
            if (!d2) throw std::invalid_argument("extract_separators: mixed shape kinds");
            if (norm_sq(sub(d1->center, d2->center)) > 4)
                throw std::invalid_argument("extract_separators: twin shapes do not intersect");
        } else if (auto* e1 = std::get_if<EllipseTranslate>(&s_base)) {
            auto* e2 = std::get_if<EllipseTranslate>(&s_twin);
            if (!e2) throw std::invalid_argument("extract_separators: mixed shape kinds");
            Vec diff = sub(e1->center, e2->center);
            if (dot(diff, mat_vec(e1->q, diff)) > 4)
                throw std::invalid_argument("extract_separators: twin shapes do not intersect");
        } else {
            throw std::invalid_argument("extract_separators: only disks and ellipses supported");
        }

        // Orientation: the base edge holds the cells above the element, so the
        // base-minus-twin difference must land on the positive side.
        Hyperplane sep = separator_congruent(s_twin, s_base);
        out.dimension = static_cast<int>(sep.normal.size());
        out.hyperplanes.push_back({label, sep});
    }
    if (out.hyperplanes.empty()) out.dimension = 2;
    out.validate();
    return out;
}

}  // namespace geomrep
