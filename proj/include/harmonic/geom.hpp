#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

// Plane-geometry primitives: complex points, circles, axis-aligned ellipses,
// lines, polygons, inversion, polarity, and coaxial circle pencils.
//
// All types are immutable values; all operations are pure. Points are
// std::complex<double>, used interchangeably as complex numbers and
// Euclidean points.

namespace harmonic {

using CPoint = std::complex<double>;

// Default relative tolerances: direct closed-form constructions vs.
// multi-step derived ones.
inline constexpr double kDirectTol = 1e-12;
inline constexpr double kDerivedTol = 1e-10;

inline double dot(CPoint a, CPoint b) {
    return a.real() * b.real() + a.imag() * b.imag();
}
inline double cross(CPoint a, CPoint b) {
    return a.real() * b.imag() - a.imag() * b.real();
}

struct Circle {
    CPoint center;
    double radius = 1.0;

    Circle(CPoint c, double r) : center(c), radius(r) {
        if (!(r > 0.0)) throw std::domain_error("circle radius must be positive");
    }
};

// Axis-aligned ellipse with center (cx, 0). b may exceed a, in which case
// the major axis is vertical (the Brocard inellipse is of this kind).
struct AxisEllipse {
    double cx = 0.0;
    double a = 1.0;
    double b = 1.0;

    AxisEllipse(double cx_, double a_, double b_) : cx(cx_), a(a_), b(b_) {
        if (!(a > 0.0) || !(b > 0.0))
            throw std::domain_error("ellipse semiaxes must be positive");
    }

    // Foci, on the major axis (x-axis if a >= b, vertical otherwise).
    std::pair<CPoint, CPoint> foci() const;
};

// Point + direction. Vertical lines are exact (dir = (0, 1)).
struct Line {
    CPoint point;
    CPoint dir;

    Line(CPoint p, CPoint d) : point(p), dir(d) {
        if (std::abs(d) == 0.0) throw std::domain_error("line direction is zero");
    }
    static Line through(CPoint p, CPoint q) { return Line(p, q - p); }
    static Line vertical(double x) { return Line(CPoint(x, 0.0), CPoint(0.0, 1.0)); }

    // Unit-normal form u*x + v*y = w with u^2 + v^2 = 1.
    void normal_form(double& u, double& v, double& w) const;
};

using Polygon = std::vector<CPoint>;

// Non-intersecting coaxial pencil, represented by its two limiting points.
// Every member with center c on the axis has
//   r^2 = ((c - l1).u) * ((c - l2).u),  u = unit axis direction.
struct CirclePencil {
    CPoint l1, l2;
    Line radical_axis;

    CPoint axis_dir() const;
    // Member whose center sits at signed axis coordinate s, measured from
    // the midpoint of (l1, l2) along axis_dir(). Throws if no real member
    // exists there (|s| <= half the limiting-point separation).
    Circle member_at(double s) const;
    Circle member_with_center(CPoint c) const;
};

CPoint invert_point(CPoint p, const Circle& c);
Line polar_line(CPoint p, const Circle& c);
CPoint pole_of_line(const Line& l, const Circle& c);
Polygon polar_dual_polygon(const Polygon& p, const Circle& c);
Circle circle_through(CPoint p1, CPoint p2, CPoint p3);
CPoint second_intersection(const Line& l, const Circle& c, CPoint known);
CirclePencil pencil_from_circles(const Circle& c1, const Circle& c2);

double polygon_signed_area(const Polygon& p);
inline double polygon_area(const Polygon& p) { return std::abs(polygon_signed_area(p)); }
std::vector<double> sidelengths(const Polygon& p);
double perimeter(const Polygon& p);

// Positive interior angle at each vertex; lies in (0, pi) for convex
// polygons of either orientation, (0, 2*pi) in general.
std::vector<double> internal_angles(const Polygon& p);

CPoint foot_of_perpendicular(CPoint p, const Line& l);
double point_line_distance(CPoint p, const Line& l);

// Zero iff l is tangent to e. With the line as u*x + v*y = w, (u,v) unit:
// residual = |a^2 u^2 + b^2 v^2 - (w - u*cx)^2| / scale^2.
double line_tangency_residual(const Line& l, const AxisEllipse& e);
double point_on_ellipse_residual(CPoint p, const AxisEllipse& e);
double point_on_circle_residual(CPoint p, const Circle& c);

}  // namespace harmonic
