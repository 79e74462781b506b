#include "harmonic/geom.hpp"

#include <algorithm>
#include <cmath>

namespace harmonic {

namespace {

double bbox_scale(const Polygon& p) {
    double lo_x = p[0].real(), hi_x = lo_x, lo_y = p[0].imag(), hi_y = lo_y;
    for (const auto& v : p) {
        lo_x = std::min(lo_x, v.real());
        hi_x = std::max(hi_x, v.real());
        lo_y = std::min(lo_y, v.imag());
        hi_y = std::max(hi_y, v.imag());
    }
    return std::max({hi_x - lo_x, hi_y - lo_y, 1.0});
}

}  // namespace

std::pair<CPoint, CPoint> AxisEllipse::foci() const {
    double c = std::sqrt(std::abs(a * a - b * b));
    if (a >= b) return {CPoint(cx - c, 0.0), CPoint(cx + c, 0.0)};
    return {CPoint(cx, -c), CPoint(cx, c)};
}

void Line::normal_form(double& u, double& v, double& w) const {
    CPoint n = dir * CPoint(0.0, 1.0);
    n /= std::abs(n);
    u = n.real();
    v = n.imag();
    w = dot(n, point);
}

CPoint CirclePencil::axis_dir() const {
    CPoint d = l2 - l1;
    return d / std::abs(d);
}

Circle CirclePencil::member_at(double s) const {
    CPoint mid = 0.5 * (l1 + l2);
    return member_with_center(mid + s * axis_dir());
}

Circle CirclePencil::member_with_center(CPoint c) const {
    CPoint u = axis_dir();
    double r2 = dot(c - l1, u) * dot(c - l2, u);
    if (!(r2 > 0.0))
        throw std::domain_error("no pencil member centered between the limiting points");
    return Circle(c, std::sqrt(r2));
}

CPoint invert_point(CPoint p, const Circle& c) {
    CPoint d = p - c.center;
    double n2 = std::norm(d);
    if (n2 == 0.0) throw std::domain_error("inversion center");
    return c.center + c.radius * c.radius * d / n2;
}

Line polar_line(CPoint p, const Circle& c) {
    if (p == c.center) throw std::domain_error("polar of the center is the line at infinity");
    CPoint q = invert_point(p, c);
    return Line(q, (p - c.center) * CPoint(0.0, 1.0));
}

CPoint pole_of_line(const Line& l, const Circle& c) {
    CPoint f = foot_of_perpendicular(c.center, l);
    if (std::abs(f - c.center) < kDirectTol * c.radius)
        throw std::domain_error("degenerate dual");
    return invert_point(f, c);
}

Polygon polar_dual_polygon(const Polygon& p, const Circle& c) {
    const std::size_t n = p.size();
    if (n < 3) throw std::domain_error("polygon needs at least 3 vertices");
    Polygon dual(n);
    for (std::size_t i = 0; i < n; ++i)
        dual[i] = pole_of_line(Line::through(p[i], p[(i + 1) % n]), c);
    return dual;
}

Circle circle_through(CPoint p1, CPoint p2, CPoint p3) {
    double ax = p1.real(), ay = p1.imag();
    double bx = p2.real(), by = p2.imag();
    double cx = p3.real(), cy = p3.imag();
    double det = 2.0 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by));
    double scale = bbox_scale({p1, p2, p3});
    if (std::abs(det) < kDirectTol * scale * scale)
        throw std::domain_error("collinear points");
    double a2 = ax * ax + ay * ay, b2 = bx * bx + by * by, c2 = cx * cx + cy * cy;
    CPoint center((a2 * (by - cy) + b2 * (cy - ay) + c2 * (ay - by)) / det,
                  (a2 * (cx - bx) + b2 * (ax - cx) + c2 * (bx - ax)) / det);
    return Circle(center, std::abs(p1 - center));
}

CPoint second_intersection(const Line& l, const Circle& c, CPoint known) {
    double scale = std::max(c.radius, 1.0);
    if (point_line_distance(known, l) > kDerivedTol * scale ||
        std::abs(std::abs(known - c.center) - c.radius) > kDerivedTol * scale)
        throw std::domain_error("inconsistent input: known point not on line and circle");
    CPoint f = foot_of_perpendicular(c.center, l);
    double h2 = c.radius * c.radius - std::norm(f - c.center);
    if (h2 <= 0.0) return known;  // tangent
    CPoint u = l.dir / std::abs(l.dir);
    double h = std::sqrt(h2);
    CPoint a = f + h * u, b = f - h * u;
    return std::abs(a - known) > std::abs(b - known) ? a : b;
}

CirclePencil pencil_from_circles(const Circle& c1, const Circle& c2) {
    CPoint axis = c2.center - c1.center;
    double sep = std::abs(axis);
    double scale = std::max({c1.radius, c2.radius, 1.0});
    if (sep < kDirectTol * scale)
        throw std::domain_error("concentric circles have no radical axis");
    CPoint u = axis / sep;
    // Radical axis foot along the center line, from c1.center.
    double xr = (sep * sep + c1.radius * c1.radius - c2.radius * c2.radius) / (2.0 * sep);
    double power = xr * xr - c1.radius * c1.radius;
    if (power <= 0.0)
        throw std::domain_error("elliptic pencil: circles intersect, limiting points imaginary");
    double h = std::sqrt(power);
    CPoint foot = c1.center + xr * u;
    return CirclePencil{c1.center + (xr - h) * u, c1.center + (xr + h) * u,
                        Line(foot, u * CPoint(0.0, 1.0))};
}

double polygon_signed_area(const Polygon& p) {
    const std::size_t n = p.size();
    double a = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const CPoint& u = p[i];
        const CPoint& v = p[(i + 1) % n];
        a += cross(u, v);
    }
    return 0.5 * a;
}

std::vector<double> sidelengths(const Polygon& p) {
    const std::size_t n = p.size();
    std::vector<double> s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = std::abs(p[(i + 1) % n] - p[i]);
    return s;
}

double perimeter(const Polygon& p) {
    double sum = 0.0;
    for (double s : sidelengths(p)) sum += s;
    return sum;
}

std::vector<double> internal_angles(const Polygon& p) {
    const std::size_t n = p.size();
    if (n < 3) throw std::domain_error("polygon needs at least 3 vertices");
    double orient = polygon_signed_area(p) >= 0.0 ? 1.0 : -1.0;
    std::vector<double> angles(n);
    for (std::size_t i = 0; i < n; ++i) {
        CPoint prev = p[(i + n - 1) % n], next = p[(i + 1) % n];
        CPoint e_in = p[i] - prev, e_out = next - p[i];
        // Exterior turn, signed by orientation; interior = pi - turn.
        double turn = orient * std::atan2(cross(e_in, e_out), dot(e_in, e_out));
        double theta = M_PI - turn;
        if (theta <= 0.0) theta += 2.0 * M_PI;
        angles[i] = theta;
    }
    return angles;
}

CPoint foot_of_perpendicular(CPoint p, const Line& l) {
    CPoint u = l.dir / std::abs(l.dir);
    return l.point + u * dot(u, p - l.point);
}

double point_line_distance(CPoint p, const Line& l) {
    CPoint u = l.dir / std::abs(l.dir);
    return std::abs(cross(u, p - l.point));
}

double line_tangency_residual(const Line& l, const AxisEllipse& e) {
    double u, v, w;
    l.normal_form(u, v, w);
    double lhs = e.a * e.a * u * u + e.b * e.b * v * v;
    double rhs = (w - u * e.cx) * (w - u * e.cx);
    double scale2 = std::max({e.a * e.a, e.b * e.b, w * w});
    return std::abs(lhs - rhs) / scale2;
}

double point_on_ellipse_residual(CPoint p, const AxisEllipse& e) {
    double dx = (p.real() - e.cx) / e.a;
    double dy = p.imag() / e.b;
    return std::abs(dx * dx + dy * dy - 1.0);
}

double point_on_circle_residual(CPoint p, const Circle& c) {
    return std::abs(std::abs(p - c.center) - c.radius) / c.radius;
}

}  // namespace harmonic
