#include "geomrep/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace geomrep {

namespace {

void require_dim(const Point& p, size_t d, const char* what) {
    if (p.size() != d) throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}

bool on_segment(const Point& a, const Point& b, const Point& p) {
    if (orientation(a, b, p) != 0) return false;
    for (int c = 0; c < 2; ++c) {
        Rat lo = std::min(a[c], b[c]), hi = std::max(a[c], b[c]);
        if (p[c] < lo || p[c] > hi) return false;
    }
    return true;
}

bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
    int o1 = orientation(a, b, c);
    int o2 = orientation(a, b, d);
    int o3 = orientation(c, d, a);
    int o4 = orientation(c, d, b);
    if (o1 != o2 && o3 != o4) return true;
    if (o1 == 0 && on_segment(a, b, c)) return true;
    if (o2 == 0 && on_segment(a, b, d)) return true;
    if (o3 == 0 && on_segment(c, d, a)) return true;
    if (o4 == 0 && on_segment(c, d, b)) return true;
    return false;
}

// Closed-triangle membership for ccw triangle (a,b,c).
bool in_triangle_closed(const Point& a, const Point& b, const Point& c, const Point& p) {
    return orientation(a, b, p) >= 0 && orientation(b, c, p) >= 0 && orientation(c, a, p) >= 0;
}

// Ear-clips a ccw simple polygon given as indices into pts. Appends ccw
// triangles to out. Rejects consecutive collinear vertices.
void ear_clip(const std::vector<Point>& pts, std::vector<int> ring,
              std::vector<std::array<int, 3>>& out) {
    while (ring.size() > 3) {
        bool clipped = false;
        for (size_t i = 0; i < ring.size(); ++i) {
            int ia = ring[(i + ring.size() - 1) % ring.size()];
            int ib = ring[i];
            int ic = ring[(i + 1) % ring.size()];
            if (orientation(pts[ia], pts[ib], pts[ic]) <= 0) continue;
            bool blocked = false;
            for (int iv : ring) {
                if (iv == ia || iv == ib || iv == ic) continue;
                if (in_triangle_closed(pts[ia], pts[ib], pts[ic], pts[iv])) {
                    blocked = true;
                    break;
                }
            }
            if (blocked) continue;
            out.push_back({ia, ib, ic});
            ring.erase(ring.begin() + static_cast<long>(i));
            clipped = true;
            break;
        }
        if (!clipped)
            throw std::invalid_argument("ear clipping stuck: polygon non-simple or degenerate");
    }
    if (orientation(pts[ring[0]], pts[ring[1]], pts[ring[2]]) <= 0)
        throw std::invalid_argument("degenerate triangle in triangulation");
    out.push_back({ring[0], ring[1], ring[2]});
}

}  // namespace

int shape_dimension(const Shape& s) {
    if (auto* h = std::get_if<Halfspace>(&s)) return static_cast<int>(h->normal.size());
    if (auto* d = std::get_if<DiskTranslate>(&s)) return static_cast<int>(d->center.size());
    if (auto* e = std::get_if<EllipseTranslate>(&s)) return static_cast<int>(e->center.size());
    auto& p = std::get<PolygonTranslate>(s);
    return static_cast<int>(p.translation.size());
}

int orientation(const Point& p, const Point& q, const Point& r) {
    require_dim(p, 2, "orientation");
    require_dim(q, 2, "orientation");
    require_dim(r, 2, "orientation");
    Rat d = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0]);
    return sgn(d);
}

std::vector<Point> convex_hull(std::vector<Point> points) {
    if (points.size() < 3) throw std::invalid_argument("convex hull needs >= 3 points");
    for (const auto& p : points) require_dim(p, 2, "convex_hull");
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    size_t n = points.size();
    if (n < 3) throw std::invalid_argument("convex hull needs >= 3 distinct points");

    std::vector<Point> hull(2 * n);
    size_t k = 0;
    for (size_t i = 0; i < n; ++i) {  // lower chain
        while (k >= 2 && orientation(hull[k - 2], hull[k - 1], points[i]) <= 0) --k;
        hull[k++] = points[i];
    }
    for (size_t i = n - 1, lower = k + 1; i-- > 0;) {  // upper chain
        while (k >= lower && orientation(hull[k - 2], hull[k - 1], points[i]) <= 0) --k;
        hull[k++] = points[i];
    }
    hull.resize(k - 1);
    if (hull.size() < 3) throw std::invalid_argument("convex hull degenerate: points collinear");
    return hull;
}

Rat polygon_signed_area_2x(const std::vector<Point>& polygon) {
    Rat a = 0;
    size_t n = polygon.size();
    for (size_t i = 0; i < n; ++i) {
        const Point& p = polygon[i];
        const Point& q = polygon[(i + 1) % n];
        a += p[0] * q[1] - q[0] * p[1];
    }
    return a;
}

bool polygon_is_simple(const std::vector<Point>& polygon) {
    size_t n = polygon.size();
    if (n < 3) return false;
    for (const auto& p : polygon)
        if (p.size() != 2) return false;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (polygon[i] == polygon[j]) return false;
    if (polygon_signed_area_2x(polygon) == 0) return false;
    for (size_t i = 0; i < n; ++i) {
        const Point& a = polygon[i];
        const Point& b = polygon[(i + 1) % n];
        for (size_t j = i + 1; j < n; ++j) {
            const Point& c = polygon[j];
            const Point& d = polygon[(j + 1) % n];
            bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            if (adjacent) {
                // shared endpoint only; collinear overlap is non-simple
                const Point& shared = (j == i + 1) ? b : a;
                const Point& afar = (j == i + 1) ? a : b;
                const Point& cfar = (j == i + 1) ? d : c;
                if (orientation(afar, shared, cfar) == 0 && on_segment(afar, shared, cfar))
                    return false;
                if (orientation(cfar, shared, afar) == 0 && on_segment(cfar, shared, afar))
                    return false;
                continue;
            }
            if (segments_intersect(a, b, c, d)) return false;
        }
    }
    return true;
}

Triangulation triangulate_hull(const std::vector<Point>& polygon) {
    if (!polygon_is_simple(polygon))
        throw std::invalid_argument("triangulate_hull: polygon not simple");
    if (polygon_signed_area_2x(polygon) < 0)
        throw std::invalid_argument("triangulate_hull: polygon must be counter-clockwise");
    size_t n = polygon.size();
    for (size_t i = 0; i < n; ++i) {
        const Point& a = polygon[(i + n - 1) % n];
        const Point& b = polygon[i];
        const Point& c = polygon[(i + 1) % n];
        if (orientation(a, b, c) == 0)
            throw std::invalid_argument("triangulate_hull: collinear consecutive vertices");
    }

    Triangulation t;
    t.points = polygon;

    std::vector<int> ring(n);
    for (size_t i = 0; i < n; ++i) ring[i] = static_cast<int>(i);
    size_t interior_count_before = t.triangles.size();
    ear_clip(polygon, ring, t.triangles);
    size_t interior_count = t.triangles.size() - interior_count_before;

    // Hull as polygon indices, in ccw order starting from the polygon's
    // first hull vertex.
    std::vector<Point> hull_pts = convex_hull(polygon);
    std::vector<int> hull_idx;
    for (const auto& hp : hull_pts) {
        auto it = std::find(polygon.begin(), polygon.end(), hp);
        hull_idx.push_back(static_cast<int>(it - polygon.begin()));
    }
    t.hull = hull_idx;

    // Pockets: for each hull edge, the ccw polygon chain between its endpoints.
    size_t hn = hull_idx.size();
    for (size_t k = 0; k < hn; ++k) {
        int hi = hull_idx[k];
        int hj = hull_idx[(k + 1) % hn];
        // chain hi -> hj along the polygon
        std::vector<int> chain;
        for (int v = hi; v != hj; v = (v + 1) % static_cast<int>(n)) chain.push_back(v);
        chain.push_back(hj);
        if (chain.size() == 2) continue;  // hull edge is a polygon edge
        std::vector<int> pocket;
        pocket.push_back(hi);
        pocket.push_back(hj);
        for (size_t m = chain.size() - 2; m >= 1; --m) pocket.push_back(chain[m]);
        ear_clip(polygon, pocket, t.triangles);
    }

    t.inside_polygon.assign(t.triangles.size(), false);
    for (size_t i = 0; i < interior_count; ++i) t.inside_polygon[i] = true;
    return t;
}

bool point_in_polygon(const std::vector<Point>& polygon, const Point& p) {
    require_dim(p, 2, "point_in_polygon");
    size_t n = polygon.size();
    for (size_t i = 0; i < n; ++i)
        if (on_segment(polygon[i], polygon[(i + 1) % n], p)) return true;
    bool inside = false;
    for (size_t i = 0; i < n; ++i) {
        const Point& a = polygon[i];
        const Point& b = polygon[(i + 1) % n];
        if ((a[1] > p[1]) == (b[1] > p[1])) continue;
        // x-coordinate where the edge crosses the horizontal line through p
        Rat x = a[0] + (p[1] - a[1]) / (b[1] - a[1]) * (b[0] - a[0]);
        if (x > p[0]) inside = !inside;
    }
    return inside;
}

bool contains(const Shape& s, const Point& p) {
    if (shape_dimension(s) != static_cast<int>(p.size()))
        throw std::invalid_argument("contains: dimension mismatch");
    if (auto* h = std::get_if<Halfspace>(&s)) return dot(h->normal, p) <= h->offset;
    if (auto* d = std::get_if<DiskTranslate>(&s)) return norm_sq(sub(p, d->center)) <= 1;
    if (auto* e = std::get_if<EllipseTranslate>(&s)) {
        Vec v = sub(p, e->center);
        return dot(v, mat_vec(e->q, v)) <= 1;
    }
    const auto& poly = std::get<PolygonTranslate>(s);
    std::vector<Point> translated;
    translated.reserve(poly.reference.size());
    for (const auto& v : poly.reference) translated.push_back(add(v, poly.translation));
    return point_in_polygon(translated, p);
}

int side_of_hyperplane(const Hyperplane& h, const Point& p) {
    if (h.normal.size() != p.size())
        throw std::invalid_argument("side_of_hyperplane: dimension mismatch");
    return sgn(dot(h.normal, p) - h.offset);
}

Hyperplane separator_congruent(const Shape& s1, const Shape& s2) {
    if (auto* d1 = std::get_if<DiskTranslate>(&s1)) {
        auto* d2 = std::get_if<DiskTranslate>(&s2);
        if (!d2) throw std::invalid_argument("separator_congruent: mixed shape kinds");
        if (d1->center == d2->center)
            throw std::invalid_argument("separator_congruent: identical centers");
        Hyperplane h;
        h.normal = sub(d2->center, d1->center);
        h.offset = (norm_sq(d2->center) - norm_sq(d1->center)) / 2;
        return h;
    }
    if (auto* e1 = std::get_if<EllipseTranslate>(&s1)) {
        auto* e2 = std::get_if<EllipseTranslate>(&s2);
        if (!e2) throw std::invalid_argument("separator_congruent: mixed shape kinds");
        if (e1->q != e2->q)
            throw std::invalid_argument("separator_congruent: non-congruent ellipses");
        if (e1->center == e2->center)
            throw std::invalid_argument("separator_congruent: identical centers");
        // bisector in the Q metric: (x-c1)^T Q (x-c1) = (x-c2)^T Q (x-c2)
        Hyperplane h;
        h.normal = mat_vec(e1->q, sub(e2->center, e1->center));
        Rat c2q = dot(e2->center, mat_vec(e1->q, e2->center));
        Rat c1q = dot(e1->center, mat_vec(e1->q, e1->center));
        h.offset = (c2q - c1q) / 2;
        return h;
    }
    throw std::invalid_argument("separator_congruent: unsupported shape kind");
}

}  // namespace geomrep
