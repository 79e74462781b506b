#include "harmonic/family.hpp"

#include <cmath>

namespace harmonic {

namespace {

CPoint regular_vertex(int n, int k, double t) {
    double nu = 2.0 * M_PI / n * k + t;
    return std::polar(1.0, nu);
}

// 2x2 least-squares concurrence point of a set of lines, plus RMS residual.
std::pair<CPoint, double> concur(const std::vector<Line>& lines) {
    double a11 = 0, a12 = 0, a22 = 0, b1 = 0, b2 = 0;
    for (const auto& l : lines) {
        double u, v, w;
        l.normal_form(u, v, w);
        a11 += u * u;
        a12 += u * v;
        a22 += v * v;
        b1 += u * w;
        b2 += v * w;
    }
    double det = a11 * a22 - a12 * a12;
    if (std::abs(det) < 1e-14)
        throw std::domain_error("not harmonic / wrong omega: lines nearly parallel");
    CPoint x((a22 * b1 - a12 * b2) / det, (a11 * b2 - a12 * b1) / det);
    double ss = 0.0;
    for (const auto& l : lines) {
        double r = point_line_distance(x, l);
        ss += r * r;
    }
    return {x, std::sqrt(ss / lines.size())};
}

}  // namespace

PolygonSnapshot PolygonSnapshot::from(const Polygon& poly, double t) {
    PolygonSnapshot s;
    s.t = t;
    s.vertices = poly;
    s.sides = sidelengths(poly);
    s.angles = internal_angles(poly);
    s.area = polygon_area(poly);
    s.perimeter = harmonic::perimeter(poly);
    return s;
}

std::optional<CirclePencil> BrocardObjects::schoute_pencil() const {
    if (!l1 || !l2 || !lemoine_axis) return std::nullopt;
    return CirclePencil{*l1, *l2, *lemoine_axis};
}

Polygon vertices_casey(const FamilySpec& spec, double t) {
    double d = spec.param;
    Polygon p(spec.n);
    for (int k = 1; k <= spec.n; ++k) {
        CPoint zb = std::conj(regular_vertex(spec.n, k, t));
        p[k - 1] = (d * zb - 1.0) / (zb - d);
    }
    return p;
}

Polygon vertices_inversive(const FamilySpec& spec, double t) {
    double x0 = spec.param;
    Polygon p(spec.n);
    for (int k = 1; k <= spec.n; ++k) {
        double nu = 2.0 * spec.alpha() * k + t;
        double den = 2.0 * x0 * std::cos(nu) - 1.0 - x0 * x0;
        p[k - 1] = CPoint(-((1.0 - 2.0 * x0 * x0) * std::cos(nu) + x0 * x0 * x0) / den,
                          -std::sin(nu) / den);
    }
    return p;
}

std::pair<CPoint, CPoint> projective_centers(const Circle& c, CPoint k) {
    CPoint o = c.center;
    double dist = std::abs(k - o);
    if (dist < kDirectTol * c.radius)
        throw std::domain_error("symmedian at the center: polar at infinity");
    if (dist >= c.radius)
        throw std::domain_error("symmedian outside the circumcircle");
    CPoint u = (k - o) / dist;
    CPoint kp = invert_point(k, c);
    double rho = std::sqrt(std::norm(kp - o) - c.radius * c.radius);
    CPoint s1 = kp + rho * u, s2 = kp - rho * u;
    if (std::abs(s1 - o) < c.radius) return {s1, s2};
    return {s2, s1};
}

Polygon vertices_projective(const Circle& c, CPoint k, int n, double t) {
    auto [s, s_outer] = projective_centers(c, k);
    (void)s_outer;
    CPoint u = (k - c.center) / std::abs(k - c.center);
    Polygon p(n);
    for (int i = 1; i <= n; ++i) {
        CPoint r_i = c.center + c.radius * u * regular_vertex(n, i, t);
        p[i - 1] = second_intersection(Line::through(s, r_i), c, r_i);
    }
    return p;
}

BrocardObjects brocard_objects(const FamilySpec& spec) {
    double x0 = spec.x0();
    double alpha = spec.alpha();

    if (x0 == 0.0) {
        BrocardObjects b{Circle(CPoint(0, 0), 1.0),
                         CPoint(0, 0),
                         CPoint(0, 0),
                         CPoint(0, 0),
                         AxisEllipse(0.0, std::cos(alpha), std::cos(alpha))};
        b.eccentricity = 0.0;
        b.brocard_angle = M_PI / 2.0 - alpha;
        b.delta = 0.0;
        return b;
    }

    double x2 = x0 * x0;
    CPoint o(x0 * (x2 - 2.0) / (x2 - 1.0), 0.0);
    double r = 1.0 / std::abs(x2 - 1.0);
    CPoint k_pt(x0 * x2 / (x2 + 1.0), 0.0);

    double kden = 2.0 * x0 * std::cos(2.0 * alpha) - x0 * x2 - 1.0 / x0;
    CPoint om1(((2.0 * x2 - 1.0) * std::cos(2.0 * alpha) - x2 * x2 + x2 - 1.0) / kden,
               std::sin(2.0 * alpha) / kden);
    CPoint om2 = std::conj(om1);

    double kp = (x2 + 1.0) * (x2 + 1.0) - 4.0 * x2 * std::cos(alpha) * std::cos(alpha);
    AxisEllipse inell(om1.real(), (1.0 - x2) * std::cos(alpha) / kp,
                      std::cos(alpha) / std::sqrt(kp));
    double ecc = 2.0 * std::abs(x0) * std::sin(alpha) / std::sqrt(kp);

    double x4 = x2 * x2;
    Circle broc(CPoint(x0 * (x4 - x2 - 1.0) / (x4 - 1.0), 0.0), std::abs(x0 / (x4 - 1.0)));
    CPoint l1(x0, 0.0), l2((x2 - 1.0) / x0, 0.0);

    BrocardObjects b{Circle(o, r), k_pt, om1, om2, inell};
    b.eccentricity = ecc;
    b.brocard_angle = std::atan(std::abs(1.0 - x2) / (1.0 + x2) / std::tan(alpha));
    b.delta = std::abs(k_pt - o);
    b.brocard_circle = broc;
    b.l1 = l1;
    b.l2 = l2;
    b.lemoine_axis = polar_line(k_pt, b.circumcircle);

    if (spec.frame == Frame::Casey) {
        // casey = -(z - O)/R maps circumcircle to the unit circle at the
        // origin and l1, l2 to d, 1/d.
        auto f = [&](CPoint z) { return -(z - o) / r; };
        BrocardObjects c{Circle(CPoint(0, 0), 1.0), f(k_pt), f(om1), f(om2),
                         AxisEllipse(-(inell.cx - o.real()) / r, inell.a / r, inell.b / r)};
        c.eccentricity = ecc;
        c.brocard_angle = b.brocard_angle;
        c.delta = b.delta / r;
        c.brocard_circle = Circle(f(broc.center), broc.radius / r);
        c.l1 = f(l1);
        c.l2 = f(l2);
        c.lemoine_axis = polar_line(c.symmedian, c.circumcircle);
        return c;
    }
    return b;
}

PolygonSnapshot snapshot(const FamilySpec& spec, double t) {
    Polygon p = spec.frame == Frame::Casey ? vertices_casey(spec, t)
                                           : vertices_inversive(spec, t);
    return PolygonSnapshot::from(p, t);
}

std::pair<CPoint, CPoint> brocard_points_by_concurrence(const PolygonSnapshot& p,
                                                        double omega) {
    const int n = static_cast<int>(p.vertices.size());
    double orient = polygon_signed_area(p.vertices) >= 0.0 ? 1.0 : -1.0;
    CPoint rot_fwd = std::polar(1.0, orient * omega);
    CPoint rot_bwd = std::polar(1.0, -orient * omega);

    std::vector<Line> lines1, lines2;
    lines1.reserve(n);
    lines2.reserve(n);
    for (int i = 0; i < n; ++i) {
        CPoint a = p.vertices[i], b = p.vertices[(i + 1) % n];
        lines1.emplace_back(a, (b - a) * rot_fwd);
        lines2.emplace_back(b, (a - b) * rot_bwd);
    }
    auto [w1, r1] = concur(lines1);
    auto [w2, r2] = concur(lines2);

    double scale = 0.0;
    for (const auto& v : p.vertices) scale = std::max(scale, std::abs(v - w1));
    if (r1 > 1e-8 * scale || r2 > 1e-8 * scale)
        throw std::domain_error("not harmonic / wrong omega");
    return {w1, w2};
}

double brocard_angle_measured(const PolygonSnapshot& p) {
    if (p.area == 0.0) throw std::domain_error("degenerate polygon");
    double s2 = 0.0;
    for (double s : p.sides) s2 += s * s;
    return std::atan2(4.0 * p.area, s2);
}

double symmedian_residual(const PolygonSnapshot& p, CPoint k) {
    const int n = static_cast<int>(p.vertices.size());
    std::vector<double> ratio(n);
    double mean = 0.0;
    for (int i = 0; i < n; ++i) {
        Line side = Line::through(p.vertices[i], p.vertices[(i + 1) % n]);
        ratio[i] = point_line_distance(k, side) / p.sides[i];
        mean += ratio[i];
    }
    mean /= n;
    double var = 0.0;
    for (double r : ratio) var += (r - mean) * (r - mean);
    return std::sqrt(var / n) / std::abs(mean);
}

double closure_residual(const FamilySpec& spec, double t) {
    PolygonSnapshot p = snapshot(spec, t);
    AxisEllipse e = brocard_objects(spec).inellipse;
    double worst = 0.0;
    const int n = static_cast<int>(p.vertices.size());
    for (int i = 0; i < n; ++i) {
        Line side = Line::through(p.vertices[i], p.vertices[(i + 1) % n]);
        worst = std::max(worst, line_tangency_residual(side, e));
    }
    return worst;
}

}  // namespace harmonic
