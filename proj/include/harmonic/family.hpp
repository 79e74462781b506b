#pragma once

#include <optional>
#include <utility>

#include "harmonic/geom.hpp"

// Construction of Poncelet harmonic polygon families and their associated
// Brocard geometry: circumcircle, symmedian point, Brocard points/angle,
// Brocard inellipse (the caustic), Brocard circle, Schoute pencil.
//
// Two coordinate frames appear:
//   Casey     - unit circumcircle at the origin, parameter d; vertices are
//               the Moebius images w_k = (d*conj(z_k) - 1)/(conj(z_k) - d)
//               of the regular vertices z_k = exp(i(2*alpha*k + t)).
//   Inversive - vertices are the inversions of z_k in a unit circle centered
//               at (x0, 0); every associated object has a closed form here.
// The two parameters coincide (d == x0) and the frames are related by the
// exact similarity  casey = -(inversive - O)/R, vertex-wise at equal t.

namespace harmonic {

enum class Frame { Casey, Inversive };

struct FamilySpec {
    int n = 3;
    Frame frame = Frame::Inversive;
    double param = 0.0;  // d (Casey) or x0 (Inversive)

    FamilySpec(int n_, Frame f, double p) : n(n_), frame(f), param(p) {
        if (n < 3) throw std::domain_error("parameter out of range: N must be >= 3");
        if (!(std::abs(p) < 1.0))
            throw std::domain_error("parameter out of range: |param| must be < 1");
    }

    double alpha() const { return M_PI / n; }
    double x0() const { return param; }
    // One full Poncelet period of the phase t.
    double period() const { return 2.0 * M_PI / n; }
};

// One family member at phase t, with cached measurements.
struct PolygonSnapshot {
    double t = 0.0;
    Polygon vertices;
    std::vector<double> sides;
    std::vector<double> angles;  // positive interior angles
    double area = 0.0;           // absolute
    double perimeter = 0.0;

    static PolygonSnapshot from(const Polygon& poly, double t);
};

struct BrocardObjects {
    Circle circumcircle;
    CPoint symmedian;               // K
    CPoint omega1, omega2;          // Brocard points (mirror pair about the x-axis)
    AxisEllipse inellipse;          // Brocard inellipse; foci are omega1, omega2
    double eccentricity = 0.0;
    double brocard_angle = 0.0;     // omega
    double delta = 0.0;             // |K - O|
    // Undefined for x0 == 0 (K == O, the family is regular):
    std::optional<Circle> brocard_circle;  // diameter KO
    std::optional<CPoint> l1, l2;          // limiting points of the Schoute pencil
    std::optional<Line> lemoine_axis;      // polar of K wrt circumcircle
    std::optional<CirclePencil> schoute_pencil() const;
};

Polygon vertices_casey(const FamilySpec& spec, double t);
Polygon vertices_inversive(const FamilySpec& spec, double t);

// Projective construction from a circumcircle and an interior
// symmedian point: derives the projection centers S, S' (they are the pencil
// limiting points) via the polar of K and a tangent length, then maps the
// regular vertices through S.
Polygon vertices_projective(const Circle& c, CPoint k, int n, double t);
// The inner projection center S used above, plus the outer one S'.
std::pair<CPoint, CPoint> projective_centers(const Circle& c, CPoint k);

// All associated objects, in the requested frame. Inversive-frame values
// come from the closed forms; Casey-frame ones are the similarity images.
BrocardObjects brocard_objects(const FamilySpec& spec);

PolygonSnapshot snapshot(const FamilySpec& spec, double t);

// Least-squares concurrence of the N rotated sides. Throws if the rotated
// lines fail to concur within tolerance (not harmonic / wrong omega).
std::pair<CPoint, CPoint> brocard_points_by_concurrence(const PolygonSnapshot& p,
                                                        double omega);

// arccot(sum s_i^2 / (4 A)).
double brocard_angle_measured(const PolygonSnapshot& p);

// Coefficient of variation of dist(K, sideline_i) / s_i; ~0 certifies K as
// the symmedian point.
double symmedian_residual(const PolygonSnapshot& p, CPoint k);

// Max side-to-inellipse tangency residual of the snapshot at phase t.
double closure_residual(const FamilySpec& spec, double t);

// Frame identification: the normalized limiting-point distance is the same
// parameter in both frames.
inline double casey_to_inversive(double d) { return d; }
inline double inversive_to_casey(double x0) { return x0; }

}  // namespace harmonic
