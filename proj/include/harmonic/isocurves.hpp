#pragma once

#include "harmonic/family.hpp"

// Brocard angle of the Q-inversive image of a harmonic polygon, and the
// conjecture that its level sets are circles of the Schoute pencil.

namespace harmonic {

enum class Support { Supported, Violated, Inconclusive };
const char* to_string(Support s);

inline constexpr double kSupportTol = 1e-7;
inline constexpr double kViolationTol = 1e-4;

// Vertex-wise inversion about a circle centered at q. omega' is
// scale-invariant, so the radius defaults to 1.
Polygon inverted_polygon(const Polygon& p, CPoint q, double radius = 1.0);

// Brocard angle of the Q-inversive image, from the sum-s^2/(4A) identity.
// Throws if q lies on the family circumcircle (the image degenerates).
double omega_prime(const FamilySpec& spec, double t, CPoint q);

struct IsocurveCircleStat {
    Circle circle;
    double mean_omega = 0.0;
    double max_dev = 0.0;
};

struct IsocurveReport {
    std::vector<IsocurveCircleStat> circles;
    double brocard_circle_err = 0.0;  // max |omega' - omega| on the Brocard circle
    double lemoine_axis_err = 0.0;    // same on the Lemoine axis
    bool means_distinct = false;
    Support verdict = Support::Inconclusive;
};

// Samples n_circles Schoute-pencil members (geometrically spaced centers
// beyond l1, skipping the degenerate circumcircle member) at n_points each.
IsocurveReport isocurve_test(const FamilySpec& spec, int n_circles = 12,
                             int n_points = 64);

struct BBox {
    double x_lo, x_hi, y_lo, y_hi;
};

struct OmegaField {
    BBox bbox{};
    int nx = 0, ny = 0;
    std::vector<double> values;  // row-major, NaN where masked
    std::vector<bool> excluded;  // true near the circumcircle ring
    double at(int ix, int iy) const { return values[iy * nx + ix]; }
    CPoint node(int ix, int iy) const;
};

OmegaField omega_field(const FamilySpec& spec, const BBox& bbox, int resolution);

// Marching-squares contour extraction (open/closed polylines) at one level.
std::vector<std::vector<CPoint>> contour_lines(const OmegaField& field, double level);

}  // namespace harmonic
