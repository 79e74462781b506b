#include "harmonic/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace harmonic {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

}  // namespace

SvgCanvas::SvgCanvas(BBox world, int width, int height)
    : world_(world), width_(width), height_(height) {}

double SvgCanvas::scale() const {
    return std::min(width_ / (world_.x_hi - world_.x_lo),
                    height_ / (world_.y_hi - world_.y_lo));
}

CPoint SvgCanvas::to_view(CPoint w) const {
    double s = scale();
    return CPoint((w.real() - world_.x_lo) * s, height_ - (w.imag() - world_.y_lo) * s);
}

void SvgCanvas::add_circle(const Circle& c, const std::string& stroke,
                           const std::string& dash) {
    CPoint v = to_view(c.center);
    body_ += "<circle cx=\"" + fmt(v.real()) + "\" cy=\"" + fmt(v.imag()) + "\" r=\"" +
             fmt(c.radius * scale()) + "\" fill=\"none\" stroke=\"" + stroke + "\"" +
             (dash.empty() ? "" : " stroke-dasharray=\"" + dash + "\"") + "/>\n";
}

void SvgCanvas::add_ellipse(const AxisEllipse& e, const std::string& stroke,
                            const std::string& dash) {
    CPoint v = to_view(CPoint(e.cx, 0.0));
    body_ += "<ellipse cx=\"" + fmt(v.real()) + "\" cy=\"" + fmt(v.imag()) + "\" rx=\"" +
             fmt(e.a * scale()) + "\" ry=\"" + fmt(e.b * scale()) +
             "\" fill=\"none\" stroke=\"" + stroke + "\"" +
             (dash.empty() ? "" : " stroke-dasharray=\"" + dash + "\"") + "/>\n";
}

void SvgCanvas::add_polygon(const Polygon& p, const std::string& stroke,
                            const std::string& fill) {
    body_ += "<polygon points=\"";
    for (std::size_t i = 0; i < p.size(); ++i) {
        CPoint v = to_view(p[i]);
        if (i) body_ += " ";
        body_ += fmt(v.real()) + "," + fmt(v.imag());
    }
    body_ += "\" fill=\"" + fill + "\" stroke=\"" + stroke + "\"/>\n";
}

void SvgCanvas::add_polyline(const std::vector<CPoint>& pts, const std::string& stroke) {
    if (pts.size() < 2) return;
    body_ += "<polyline points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        CPoint v = to_view(pts[i]);
        if (i) body_ += " ";
        body_ += fmt(v.real()) + "," + fmt(v.imag());
    }
    body_ += "\" fill=\"none\" stroke=\"" + stroke + "\"/>\n";
}

void SvgCanvas::add_segment(CPoint a, CPoint b, const std::string& stroke,
                            const std::string& dash) {
    CPoint va = to_view(a), vb = to_view(b);
    body_ += "<line x1=\"" + fmt(va.real()) + "\" y1=\"" + fmt(va.imag()) + "\" x2=\"" +
             fmt(vb.real()) + "\" y2=\"" + fmt(vb.imag()) + "\" stroke=\"" + stroke +
             "\"" + (dash.empty() ? "" : " stroke-dasharray=\"" + dash + "\"") + "/>\n";
}

void SvgCanvas::add_point(CPoint p, const std::string& fill, double px_radius) {
    CPoint v = to_view(p);
    body_ += "<circle cx=\"" + fmt(v.real()) + "\" cy=\"" + fmt(v.imag()) + "\" r=\"" +
             fmt(px_radius) + "\" fill=\"" + fill + "\"/>\n";
}

void SvgCanvas::add_label(CPoint p, const std::string& text) {
    CPoint v = to_view(p);
    body_ += "<text x=\"" + fmt(v.real() + 5.0) + "\" y=\"" + fmt(v.imag() - 5.0) +
             "\" font-size=\"12\" font-family=\"sans-serif\">" + text + "</text>\n";
}

void SvgCanvas::add_heatmap(const OmegaField& field) {
    double lo = 1e300, hi = -1e300;
    for (double v : field.values) {
        if (std::isnan(v)) continue;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    if (hi <= lo) return;
    double cw = static_cast<double>(width_) / field.nx;
    double ch = static_cast<double>(height_) / field.ny;
    for (int iy = 0; iy < field.ny; ++iy) {
        for (int ix = 0; ix < field.nx; ++ix) {
            double v = field.at(ix, iy);
            if (std::isnan(v)) continue;
            int g = static_cast<int>(std::lround(255.0 * (v - lo) / (hi - lo)));
            CPoint p = to_view(field.node(ix, iy));
            char color[16];
            std::snprintf(color, sizeof color, "#%02x%02x%02x", g, g, 255 - g);
            body_ += "<rect x=\"" + fmt(p.real() - cw / 2) + "\" y=\"" +
                     fmt(p.imag() - ch / 2) + "\" width=\"" + fmt(cw) + "\" height=\"" +
                     fmt(ch) + "\" fill=\"" + color + "\"/>\n";
        }
    }
}

std::string SvgCanvas::str() const {
    return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
           "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 " +
           std::to_string(width_) + " " + std::to_string(height_) + "\">\n" + body_ +
           "</svg>\n";
}

std::string render_family_figure(const FamilySpec& spec, double t) {
    BrocardObjects bo = brocard_objects(spec);
    const Circle& c = bo.circumcircle;
    double pad = 0.35 * c.radius;
    BBox world{c.center.real() - c.radius - pad, c.center.real() + c.radius + pad,
               -c.radius - pad, c.radius + pad};
    SvgCanvas canvas(world);

    canvas.add_circle(c, "#4060c0", "6,4");
    canvas.add_ellipse(bo.inellipse, "#208040");
    if (bo.brocard_circle) canvas.add_circle(*bo.brocard_circle, "#906030", "4,3");
    if (bo.lemoine_axis) {
        double u, v, w;
        bo.lemoine_axis->normal_form(u, v, w);
        double x = w / u;  // vertical in this frame
        if (x > world.x_lo && x < world.x_hi)
            canvas.add_segment(CPoint(x, world.y_lo), CPoint(x, world.y_hi), "#d08020",
                               "3,3");
    }
    canvas.add_polygon(snapshot(spec, t).vertices, "#3030a0");
    canvas.add_point(c.center, "#000000");
    canvas.add_label(c.center, "O");
    canvas.add_point(bo.symmedian, "#a00000");
    canvas.add_label(bo.symmedian, "K");
    canvas.add_point(bo.omega1, "#208040");
    canvas.add_point(bo.omega2, "#208040");
    if (bo.l1) {
        canvas.add_point(*bo.l1, "#d08020");
        canvas.add_label(*bo.l1, "l1");
    }
    if (bo.l2 && bo.l2->real() > world.x_lo && bo.l2->real() < world.x_hi) {
        canvas.add_point(*bo.l2, "#d08020");
        canvas.add_label(*bo.l2, "l2");
    }
    return canvas.str();
}

std::string render_omega_field_figure(const FamilySpec& spec, int resolution) {
    BrocardObjects bo = brocard_objects(spec);
    const Circle& c = bo.circumcircle;
    double half = 2.2 * c.radius;
    BBox world{c.center.real() - half, c.center.real() + half, -half, half};
    SvgCanvas canvas(world);
    OmegaField field = omega_field(spec, world, resolution);
    canvas.add_heatmap(field);
    canvas.add_circle(c, "#ffffff", "6,4");
    if (auto pencil = bo.schoute_pencil()) {
        for (double s : {0.35, 0.8, 1.6, 2.8}) {
            try {
                Circle member = pencil->member_at(
                    0.5 * std::abs(pencil->l2 - pencil->l1) + s * c.radius);
                canvas.add_circle(member, "#ff8000");
            } catch (const std::domain_error&) {
            }
        }
        canvas.add_point(pencil->l1, "#ffffff");
        canvas.add_point(pencil->l2, "#ffffff");
    }
    if (bo.brocard_circle) canvas.add_circle(*bo.brocard_circle, "#ffff00", "4,3");
    return canvas.str();
}

}  // namespace harmonic
