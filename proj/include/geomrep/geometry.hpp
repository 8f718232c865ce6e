#pragma once

#include "geomrep/linalg.hpp"
#include "geomrep/rational.hpp"

#include <array>
#include <variant>
#include <vector>

namespace geomrep {

using Point = std::vector<Rat>;  // coordinates, fixed dimension per computation

// {x : normal . x = offset}, normal != 0. The positive side is normal . x > offset.
struct Hyperplane {
    Vec normal;
    Rat offset;
};

// {x : normal . x <= offset}
struct Halfspace {
    Vec normal;
    Rat offset;
};

// Unit-radius disk/ball translate.
struct DiskTranslate {
    Point center;
};

// {x : (x - center)^T q (x - center) <= 1}, q symmetric positive definite.
struct EllipseTranslate {
    Point center;
    Mat q;
};

// Translate of a fixed simple polygon; reference is counter-clockwise.
struct PolygonTranslate {
    std::vector<Point> reference;
    Vec translation;
};

using Shape = std::variant<Halfspace, DiskTranslate, EllipseTranslate, PolygonTranslate>;

int shape_dimension(const Shape& s);

/// Sign of det(q - p, r - p): +1 counter-clockwise, 0 collinear. 2D only.
int orientation(const Point& p, const Point& q, const Point& r);

/// Counter-clockwise list of extreme points (collinear boundary points dropped).
/// Throws on fewer than 3 points or an all-collinear input.
std::vector<Point> convex_hull(std::vector<Point> points);

struct Triangulation {
    std::vector<Point> points;                    // the polygon's vertices
    std::vector<std::array<int, 3>> triangles;    // ccw index triples
    std::vector<bool> inside_polygon;             // per triangle: inside P vs pocket
    std::vector<int> hull;                        // ccw hull vertex indices
};

/// Triangulates conv(P) such that every edge of the simple ccw polygon P
/// appears in the triangulation; pockets (hull minus P) are triangulated too.
Triangulation triangulate_hull(const std::vector<Point>& polygon);

/// Exact closed-set containment for all four shape kinds.
bool contains(const Shape& s, const Point& p);

/// Sign of normal . p - offset.
int side_of_hyperplane(const Hyperplane& h, const Point& p);

/// For two translates of the same disk/ellipse: the bisector in the body's
/// metric. Separates s1 \ s2 (negative side) from s2 \ s1 (positive side).
/// Throws on identical centers or on mixed/polygonal shapes.
Hyperplane separator_congruent(const Shape& s1, const Shape& s2);

/// Boundary-inclusive point-in-simple-polygon test, exact (even-odd rule).
bool point_in_polygon(const std::vector<Point>& polygon, const Point& p);

bool polygon_is_simple(const std::vector<Point>& polygon);

/// Twice the signed area of a polygon (positive when counter-clockwise).
Rat polygon_signed_area_2x(const std::vector<Point>& polygon);

}  // namespace geomrep
