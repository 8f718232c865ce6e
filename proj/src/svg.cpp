#include "geomrep/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace geomrep {

namespace {

std::string fmt(double x) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6f", x);
    return buf;
}

struct Frame {
    double min_x, max_x, min_y, max_y;
    int width, height, margin;

    double sx(double x) const {
        double span = std::max(max_x - min_x, 1e-9);
        return margin + (x - min_x) / span * (width - 2 * margin);
    }
    double sy(double y) const {
        double span = std::max(max_y - min_y, 1e-9);
        return height - margin - (y - min_y) / span * (height - 2 * margin);
    }
};

Frame make_frame(std::vector<std::pair<double, double>> pts, const SvgStyle& style) {
    if (pts.empty()) pts = {{-1, -1}, {1, 1}};
    Frame f{pts[0].first, pts[0].first, pts[0].second, pts[0].second,
            style.width, style.height, style.margin};
    for (auto [x, y] : pts) {
        f.min_x = std::min(f.min_x, x);
        f.max_x = std::max(f.max_x, x);
        f.min_y = std::min(f.min_y, y);
        f.max_y = std::max(f.max_y, y);
    }
    double pad_x = 0.2 * std::max(f.max_x - f.min_x, 1.0);
    double pad_y = 0.2 * std::max(f.max_y - f.min_y, 1.0);
    f.min_x -= pad_x;
    f.max_x += pad_x;
    f.min_y -= pad_y;
    f.max_y += pad_y;
    return f;
}

std::string svg_open(const SvgStyle& style) {
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << style.width << "\" height=\""
       << style.height << "\" viewBox=\"0 0 " << style.width << " " << style.height << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    return os.str();
}

// Clip the line n.x = c to the frame rectangle; empty when it misses.
std::vector<std::pair<double, double>> clip_line(const Frame& f, double nx, double ny, double c) {
    std::vector<std::pair<double, double>> hits;
    auto push = [&](double x, double y) {
        if (x < f.min_x - 1e-9 || x > f.max_x + 1e-9 || y < f.min_y - 1e-9 || y > f.max_y + 1e-9)
            return;
        for (auto [hx, hy] : hits)
            if (std::abs(hx - x) < 1e-9 && std::abs(hy - y) < 1e-9) return;
        hits.push_back({x, y});
    };
    if (std::abs(ny) > 1e-12) {
        push(f.min_x, (c - nx * f.min_x) / ny);
        push(f.max_x, (c - nx * f.max_x) / ny);
    }
    if (std::abs(nx) > 1e-12) {
        push((c - ny * f.min_y) / nx, f.min_y);
        push((c - ny * f.max_y) / nx, f.max_y);
    }
    return hits;
}

void draw_point(std::ostringstream& os, const Frame& f, double x, double y,
                const std::string& label) {
    os << "<circle id=\"pt-" << label << "\" cx=\"" << fmt(f.sx(x)) << "\" cy=\"" << fmt(f.sy(y))
       << "\" r=\"3\" fill=\"black\"/>\n";
    os << "<text x=\"" << fmt(f.sx(x) + 5) << "\" y=\"" << fmt(f.sy(y) - 5)
       << "\" font-size=\"11\">" << label << "</text>\n";
}

}  // namespace

std::string render_arrangement_svg(const HyperplaneArrangement& a, const SvgStyle& style) {
    a.validate();
    if (a.dimension != 2)
        throw std::invalid_argument("render: only planar arrangements are drawable");
    CellComplex cc = cells(a);

    std::vector<std::pair<double, double>> anchors;
    for (const auto& v : cc.vertices)
        anchors.push_back({to_double((*v.point)[0]), to_double((*v.point)[1])});
    for (const auto& cell : cc.cells)
        if (cell.representative)
            anchors.push_back(
                {to_double((*cell.representative)[0]), to_double((*cell.representative)[1])});
    Frame f = make_frame(anchors, style);

    std::ostringstream os;
    os << svg_open(style);
    for (const auto& lh : a.hyperplanes) {
        auto seg = clip_line(f, to_double(lh.plane.normal[0]), to_double(lh.plane.normal[1]),
                             to_double(lh.plane.offset));
        if (seg.size() < 2) continue;
        os << "<line id=\"line-" << lh.label << "\" x1=\"" << fmt(f.sx(seg[0].first)) << "\" y1=\""
           << fmt(f.sy(seg[0].second)) << "\" x2=\"" << fmt(f.sx(seg[1].first)) << "\" y2=\""
           << fmt(f.sy(seg[1].second)) << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    }
    int mark = 0;
    for (const auto& cell : cc.cells) {
        if (!cell.representative) continue;
        os << "<circle id=\"cell-" << mark++ << "\" cx=\""
           << fmt(f.sx(to_double((*cell.representative)[0]))) << "\" cy=\""
           << fmt(f.sy(to_double((*cell.representative)[1])))
           << "\" r=\"2.5\" fill=\"crimson\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::string render_wiring_svg(const WiringDiagram& w, const SvgStyle& style) {
    w.validate();
    int cols = static_cast<int>(w.swaps.size()) + 1;
    std::vector<std::vector<int>> level_of(static_cast<size_t>(cols + 1),
                                           std::vector<int>(static_cast<size_t>(w.n_lines + 1)));
    std::vector<int> ord = w.start_order();
    std::vector<int> level(static_cast<size_t>(w.n_lines + 1));
    for (int pos = 0; pos < w.n_lines; ++pos) level[static_cast<size_t>(ord[pos])] = pos;
    for (int id = 1; id <= w.n_lines; ++id) level_of[0][static_cast<size_t>(id)] = level[static_cast<size_t>(id)];
    for (size_t s = 0; s < w.swaps.size(); ++s) {
        std::swap(level[static_cast<size_t>(w.swaps[s].first)],
                  level[static_cast<size_t>(w.swaps[s].second)]);
        for (int id = 1; id <= w.n_lines; ++id)
            level_of[s + 1][static_cast<size_t>(id)] = level[static_cast<size_t>(id)];
    }

    Frame f{0, static_cast<double>(cols), 0, std::max(1.0, static_cast<double>(w.n_lines - 1)),
            style.width, style.height, style.margin};
    std::ostringstream os;
    os << svg_open(style);
    for (int id = 1; id <= w.n_lines; ++id) {
        os << "<polyline id=\"wire-" << id << "\" fill=\"none\" stroke=\"black\" points=\"";
        for (int col = 0; col <= cols; ++col) {
            double x = col;
            double y = level_of[static_cast<size_t>(std::min(col, cols - 1))]
                               [static_cast<size_t>(id)];
            if (col > 0 && col < cols)
                y = level_of[static_cast<size_t>(col)][static_cast<size_t>(id)];
            os << fmt(f.sx(x)) << "," << fmt(f.sy(y)) << " ";
        }
        os << "\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::string render_representation_svg(const Representation& r, const SvgStyle& style) {
    std::vector<std::pair<double, double>> anchors;
    for (const auto& [v, p] : r.points) {
        if (p.size() != 2)
            throw std::invalid_argument("render: only planar representations are drawable");
        anchors.push_back({to_double(p[0]), to_double(p[1])});
    }
    for (const auto& [id, s] : r.shapes) {
        if (auto* d = std::get_if<DiskTranslate>(&s)) {
            anchors.push_back({to_double(d->center[0]) + 1, to_double(d->center[1]) + 1});
            anchors.push_back({to_double(d->center[0]) - 1, to_double(d->center[1]) - 1});
        } else if (auto* e = std::get_if<EllipseTranslate>(&s)) {
            anchors.push_back({to_double(e->center[0]), to_double(e->center[1])});
        } else if (auto* p = std::get_if<PolygonTranslate>(&s)) {
            for (const auto& vtx : p->reference)
                anchors.push_back({to_double(vtx[0]) + to_double(p->translation[0]),
                                   to_double(vtx[1]) + to_double(p->translation[1])});
        }
    }
    Frame f = make_frame(anchors, style);
    double unit_px = (f.sx(1) - f.sx(0));

    std::ostringstream os;
    os << svg_open(style);
    for (const auto& [id, s] : r.shapes) {
        if (auto* hs = std::get_if<Halfspace>(&s)) {
            auto seg = clip_line(f, to_double(hs->normal[0]), to_double(hs->normal[1]),
                                 to_double(hs->offset));
            if (seg.size() >= 2)
                os << "<line id=\"shape-" << id << "\" x1=\"" << fmt(f.sx(seg[0].first))
                   << "\" y1=\"" << fmt(f.sy(seg[0].second)) << "\" x2=\""
                   << fmt(f.sx(seg[1].first)) << "\" y2=\"" << fmt(f.sy(seg[1].second))
                   << "\" stroke=\"steelblue\" stroke-width=\"1.2\"/>\n";
        } else if (auto* d = std::get_if<DiskTranslate>(&s)) {
            os << "<circle id=\"shape-" << id << "\" cx=\"" << fmt(f.sx(to_double(d->center[0])))
               << "\" cy=\"" << fmt(f.sy(to_double(d->center[1]))) << "\" r=\"" << fmt(unit_px)
               << "\" fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.2\"/>\n";
        } else if (auto* e = std::get_if<EllipseTranslate>(&s)) {
            // display-only outline: sample the boundary curve
            os << "<polygon id=\"shape-" << id << "\" fill=\"none\" stroke=\"steelblue\" points=\"";
            double qxx = to_double(e->q[0][0]), qxy = to_double(e->q[0][1]),
                   qyy = to_double(e->q[1][1]);
            double cx = to_double(e->center[0]), cy = to_double(e->center[1]);
            for (int k = 0; k < 64; ++k) {
                double ang = 2 * M_PI * k / 64;
                double ux = std::cos(ang), uy = std::sin(ang);
                double form = qxx * ux * ux + 2 * qxy * ux * uy + qyy * uy * uy;
                double rr = 1.0 / std::sqrt(form);
                os << fmt(f.sx(cx + rr * ux)) << "," << fmt(f.sy(cy + rr * uy)) << " ";
            }
            os << "\"/>\n";
        } else {
            const auto& p = std::get<PolygonTranslate>(s);
            os << "<polygon id=\"shape-" << id << "\" fill=\"none\" stroke=\"steelblue\" points=\"";
            for (const auto& vtx : p.reference)
                os << fmt(f.sx(to_double(vtx[0]) + to_double(p.translation[0]))) << ","
                   << fmt(f.sy(to_double(vtx[1]) + to_double(p.translation[1]))) << " ";
            os << "\"/>\n";
        }
    }
    for (const auto& [v, p] : r.points)
        draw_point(os, f, to_double(p[0]), to_double(p[1]), std::to_string(v));
    os << "</svg>\n";
    return os.str();
}

}  // namespace geomrep
