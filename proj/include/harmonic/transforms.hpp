#pragma once

#include "harmonic/invariants.hpp"

// The triangle of maps between the regular, harmonic, and homothetic
// Poncelet families: polar images about the symmedian / inner-ellipse foci,
// the lateral-area machinery, and the loop-closure parameter relations.

namespace harmonic {

// Two concentric homothetic ellipses with common center (cx, 0); the
// outer/inner axis ratio 1/cos(pi/N) is the Poncelet closure condition.
struct HomotheticPair {
    AxisEllipse outer;  // E_H
    AxisEllipse inner;  // E_h

    HomotheticPair(AxisEllipse out, AxisEllipse in) : outer(out), inner(in) {
        if (std::abs(out.cx - in.cx) > kDirectTol * std::max(out.a, 1.0))
            throw std::domain_error("homothetic pair must be concentric");
    }
    // Centered pair from inner semiaxes; axes are swap-normalized so a >= b.
    static HomotheticPair from_inner(double a_h, double b_h, int n);

    double cx() const { return inner.cx; }
    double ratio() const { return outer.a / inner.a; }
    double inner_focal() const { return std::sqrt(inner.a * inner.a - inner.b * inner.b); }
    // Foci of the inner ellipse, (-c_h, 0) and (c_h, 0) relative to center.
    std::pair<CPoint, CPoint> inner_foci() const;
};

struct LateralAreas {
    double a1 = 0.0, a2 = 0.0;
    double inv_sum() const { return 1.0 / a1 + 1.0 / a2; }
};

// Polar image of the harmonic family (parameter x0) about a unit circle on
// its symmedian point.
HomotheticPair harmonic_to_homothetic(double x0, int n);

// Polar image of a centered homothetic pair about a unit circle on the
// left inner focus: circumcircle, caustic, and symmedian of the resulting
// harmonic family.
struct HarmonicImage {
    Circle circumcircle;
    AxisEllipse caustic;
    CPoint symmedian;  // == the focus used as polar center
};
HarmonicImage homothetic_to_harmonic(const HomotheticPair& pair, int n);

// Snapshot of the homothetic family: the affine image of the regular family
// (exact closure by construction). Vertices on the outer ellipse, sides
// tangent to the inner one.
Polygon homothetic_vertices(const HomotheticPair& pair, int n, double t);

// Areas of the two focus-polar harmonic polygons at phase t.
LateralAreas lateral_areas(const HomotheticPair& pair, int n, double t);

// Closed form of 1/A1 + 1/A2 for N = 3, 5; a, b are the OUTER semiaxes
// (the degenerate circle-pair case pins this reading). Throws otherwise.
double lateral_area_sum_closed(int n, double a, double b);

InvariantReport lateral_area_invariant(const HomotheticPair& pair, int n,
                                       int samples = 256);
// 1/sum(s^2) corollary sums over both lateral polygons, plus the shared-omega
// consistency check.
std::vector<InvariantReport> lateral_corollaries(const HomotheticPair& pair, int n,
                                                 int samples = 256);

// Loop-closure parameter relations.
// (a) inversion center making the inversive image of the regular family a
//     harmonic family with Brocard angle omega.
double x0_from_omega(int n, double omega);
// (b) affine stretch (x, y) -> (k x, y) whose focus-polar image has Brocard
//     angle omega.
double stretch_from_omega(int n, double omega);
// (c) as printed, from the inner semiaxes a > b > 0 of a homothetic pair;
//     the returned value exceeds 1 and its reciprocal is the |x0| < 1
//     representative of the same family (omega is invariant under x0 -> 1/x0).
double x0_from_axes(double a, double b);

}  // namespace harmonic
