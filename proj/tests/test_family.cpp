#include <doctest.h>

#include <algorithm>

#include "harmonic/family.hpp"

using namespace harmonic;

namespace {

double max_vertex_gap(const Polygon& a, const Polygon& b) {
    REQUIRE(a.size() == b.size());
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

}  // namespace

TEST_CASE("casey vertices") {
    // d = 0: w_k = -z_k, a rotated regular polygon on the unit circle.
    FamilySpec reg(5, Frame::Casey, 0.0);
    Polygon p = vertices_casey(reg, 0.4);
    for (int k = 1; k <= 5; ++k) {
        CPoint z = std::polar(1.0, 2.0 * M_PI / 5 * k + 0.4);
        CHECK(std::abs(p[k - 1] + z) < 1e-14);
    }

    // The Moebius map preserves the unit circle for any d, t.
    for (double d : {0.15, 0.4, 0.83})
        for (double t : {0.0, 0.9, 2.2})
            for (const auto& w : vertices_casey(FamilySpec(6, Frame::Casey, d), t))
                CHECK(std::abs(std::abs(w) - 1.0) < 1e-14);

    // Geometric oracle: w_k is the second intersection of line(d, z_k)
    // with the unit circle.
    FamilySpec spec(5, Frame::Casey, 0.4);
    double t = 0.3;
    Polygon w = vertices_casey(spec, t);
    Circle unit(CPoint(0, 0), 1.0);
    for (int k = 1; k <= 5; ++k) {
        CPoint z = std::polar(1.0, 2.0 * M_PI / 5 * k + t);
        CPoint other = second_intersection(Line::through(CPoint(0.4, 0.0), z), unit, z);
        CHECK(std::abs(other - w[k - 1]) < 1e-12);
    }

    CHECK_THROWS_AS(FamilySpec(5, Frame::Casey, 1.0), std::domain_error);
    CHECK_THROWS_AS(FamilySpec(2, Frame::Casey, 0.3), std::domain_error);
}

TEST_CASE("inversive vertices: explicit formula vs direct inversion") {
    for (int n = 3; n <= 8; ++n) {
        FamilySpec spec(n, Frame::Inversive, 0.5);
        Circle inv_circle(CPoint(0.5, 0.0), 1.0);
        double worst = 0.0;
        for (int i = 0; i < 64; ++i) {
            double t = 2.0 * M_PI / n * i / 64;
            Polygon p = vertices_inversive(spec, t);
            for (int k = 1; k <= n; ++k) {
                CPoint z = std::polar(1.0, 2.0 * M_PI / n * k + t);
                worst = std::max(worst, std::abs(p[k - 1] - invert_point(z, inv_circle)));
            }
        }
        CHECK(worst < 1e-12);
    }
}

TEST_CASE("inversive vertices lie on the closed-form circumcircle") {
    double x0 = 0.5;
    FamilySpec spec(6, Frame::Inversive, x0);
    Circle circ(CPoint(x0 * (x0 * x0 - 2) / (x0 * x0 - 1), 0),
                1.0 / std::abs(x0 * x0 - 1));
    for (double t : {0.0, 0.45, 1.7})
        for (const auto& v : vertices_inversive(spec, t))
            CHECK(std::abs(std::abs(v - circ.center) - circ.radius) < 1e-12);
}

TEST_CASE("frame similarity: casey = -(inversive - O)/R vertex-wise") {
    for (double x0 : {0.2, 0.5, 0.7}) {
        FamilySpec spec(5, Frame::Inversive, x0);
        BrocardObjects bo = brocard_objects(spec);
        for (double t : {0.1, 0.8}) {
            Polygon inv = vertices_inversive(spec, t);
            Polygon cas = vertices_casey(FamilySpec(5, Frame::Casey, x0), t);
            for (int i = 0; i < 5; ++i)
                CHECK(std::abs(-(inv[i] - bo.circumcircle.center) /
                                   bo.circumcircle.radius -
                               cas[i]) < 1e-13);
        }
    }
}

TEST_CASE("projective construction") {
    double x0 = 0.5;
    int n = 5;
    FamilySpec spec(n, Frame::Inversive, x0);
    BrocardObjects bo = brocard_objects(spec);

    // S, S' are the pencil limiting points.
    auto [s, s_outer] = projective_centers(bo.circumcircle, bo.symmedian);
    CHECK(std::abs(s - *bo.l1) < 1e-10);
    CHECK(std::abs(s_outer - *bo.l2) < 1e-10);

    // Cross-construction agreement.
    for (double t : {0.2, 1.1}) {
        Polygon proj = vertices_projective(bo.circumcircle, bo.symmedian, n, t);
        CHECK(max_vertex_gap(proj, vertices_inversive(spec, t)) < 1e-9);
    }

    CHECK_THROWS_AS(vertices_projective(bo.circumcircle, bo.circumcircle.center, n, 0.0),
                    std::domain_error);
    CHECK_THROWS_AS(
        vertices_projective(bo.circumcircle,
                            bo.circumcircle.center + CPoint(2.0 * bo.circumcircle.radius, 0),
                            n, 0.0),
        std::domain_error);
}

TEST_CASE("brocard objects closed forms") {
    FamilySpec spec(5, Frame::Inversive, 0.5);
    BrocardObjects bo = brocard_objects(spec);
    CHECK(std::abs(bo.symmedian - CPoint(0.1, 0)) < 1e-15);  // x0^3/(x0^2+1)
    CHECK(std::abs(*bo.l1 - CPoint(0.5, 0)) < 1e-15);
    CHECK(std::abs(*bo.l2 - CPoint(-1.5, 0)) < 1e-15);

    // K and O are a diameter of the Brocard circle.
    CPoint mid = 0.5 * (bo.symmedian + bo.circumcircle.center);
    CHECK(std::abs(mid - bo.brocard_circle->center) < 1e-14);
    CHECK(bo.delta == doctest::Approx(2.0 * bo.brocard_circle->radius).epsilon(1e-13));

    // Brocard points are the foci of the inellipse and mirror-symmetric.
    CHECK(std::abs(bo.omega1 - std::conj(bo.omega2)) < 1e-14);
    auto [f1, f2] = bo.inellipse.foci();
    double pair_gap = std::min(std::abs(f1 - bo.omega1) + std::abs(f2 - bo.omega2),
                               std::abs(f1 - bo.omega2) + std::abs(f2 - bo.omega1));
    CHECK(pair_gap < 1e-12);

    // Casey's relation: tan(omega) = sqrt(1 - (delta/R)^2) cot(alpha).
    double dr = bo.delta / bo.circumcircle.radius;
    CHECK(std::tan(bo.brocard_angle) ==
          doctest::Approx(std::sqrt(1.0 - dr * dr) / std::tan(spec.alpha()))
              .epsilon(1e-12));

    // The two roots x0 = (1 +- sqrt(1-(delta/R)^2))/(delta/R) multiply to 1.
    double r1 = (1.0 + std::sqrt(1.0 - dr * dr)) / dr;
    double r2 = (1.0 - std::sqrt(1.0 - dr * dr)) / dr;
    CHECK(r1 * r2 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r2 == doctest::Approx(0.5).epsilon(1e-12));

    // Limiting points are inverse points wrt both pencil-defining circles.
    for (const Circle& c : {bo.circumcircle, *bo.brocard_circle}) {
        CHECK(std::abs(invert_point(*bo.l1, c) - *bo.l2) < 1e-12);
    }

    // Closed-form pencil agrees with the constructed one.
    CirclePencil built = pencil_from_circles(bo.circumcircle, *bo.brocard_circle);
    double gap = std::min(std::abs(built.l1 - *bo.l1) + std::abs(built.l2 - *bo.l2),
                          std::abs(built.l1 - *bo.l2) + std::abs(built.l2 - *bo.l1));
    CHECK(gap < 1e-12);

    // Regular case.
    BrocardObjects reg = brocard_objects(FamilySpec(5, Frame::Inversive, 0.0));
    CHECK(std::abs(reg.symmedian) == 0.0);
    CHECK(reg.brocard_angle == doctest::Approx(M_PI / 2 - M_PI / 5));
    CHECK(reg.inellipse.a == doctest::Approx(std::cos(M_PI / 5)));
    CHECK(!reg.brocard_circle.has_value());
}

TEST_CASE("brocard objects in the casey frame") {
    FamilySpec spec(5, Frame::Casey, 0.5);
    BrocardObjects bo = brocard_objects(spec);
    CHECK(std::abs(bo.circumcircle.center) < 1e-15);
    CHECK(bo.circumcircle.radius == doctest::Approx(1.0));
    CHECK(std::abs(*bo.l1 - CPoint(0.5, 0)) < 1e-13);
    CHECK(std::abs(*bo.l2 - CPoint(2.0, 0)) < 1e-13);

    // Same Brocard angle in both frames; sides tangent to the mapped inellipse.
    CHECK(bo.brocard_angle ==
          doctest::Approx(brocard_objects(FamilySpec(5, Frame::Inversive, 0.5)).brocard_angle)
              .epsilon(1e-14));
    CHECK(closure_residual(spec, 0.37) < 1e-12);
}

TEST_CASE("brocard angle measured") {
    // Equilateral triangle: omega = pi/6.
    FamilySpec reg(3, Frame::Casey, 0.0);
    CHECK(brocard_angle_measured(snapshot(reg, 0.2)) ==
          doctest::Approx(M_PI / 6).epsilon(1e-14));

    // N = 3: cot(omega) = sum cot(theta_i).
    FamilySpec tri(3, Frame::Casey, 0.45);
    auto p = snapshot(tri, 0.8);
    double cot_sum = 0.0;
    for (double th : p.angles) cot_sum += 1.0 / std::tan(th);
    CHECK(1.0 / std::tan(brocard_angle_measured(p)) ==
          doctest::Approx(cot_sum).epsilon(1e-12));

    // Measured angle equals the closed form and is constant over t.
    FamilySpec spec(7, Frame::Inversive, 0.6);
    double omega = brocard_objects(spec).brocard_angle;
    for (int i = 0; i < 32; ++i) {
        double t = spec.period() * i / 32;
        CHECK(std::abs(brocard_angle_measured(snapshot(spec, t)) - omega) < 1e-10);
    }
}

TEST_CASE("brocard points by concurrence") {
    // Regular polygon: both points at the center.
    FamilySpec reg(6, Frame::Casey, 0.0);
    auto proseg = snapshot(reg, 0.3);
    auto [w1, w2] = brocard_points_by_concurrence(proseg, M_PI / 2 - M_PI / 6);
    CHECK(std::abs(w1) < 1e-12);
    CHECK(std::abs(w2) < 1e-12);

    // x0 = 0.5, N = 4: matches the closed forms.
    FamilySpec spec(4, Frame::Inversive, 0.5);
    BrocardObjects bo = brocard_objects(spec);
    auto snap = snapshot(spec, 0.6);
    auto [c1, c2] = brocard_points_by_concurrence(snap, bo.brocard_angle);
    double gap = std::min(std::abs(c1 - bo.omega1) + std::abs(c2 - bo.omega2),
                          std::abs(c1 - bo.omega2) + std::abs(c2 - bo.omega1));
    CHECK(gap < 1e-9);

    // Negative control: a perturbed vertex must fail loudly.
    auto bad = snap;
    bad.vertices[1] += CPoint(1e-3, 0);
    CHECK_THROWS_AS(brocard_points_by_concurrence(
                        PolygonSnapshot::from(bad.vertices, bad.t), bo.brocard_angle),
                    std::domain_error);
}

TEST_CASE("symmedian residual") {
    FamilySpec reg(5, Frame::Casey, 0.0);
    CHECK(symmedian_residual(snapshot(reg, 0.1), CPoint(0, 0)) < 1e-14);

    FamilySpec spec(6, Frame::Inversive, 0.4);
    CPoint k = brocard_objects(spec).symmedian;
    CHECK(symmedian_residual(snapshot(spec, 0.9), k) < 1e-10);
    CHECK(symmedian_residual(snapshot(spec, 0.9), k + CPoint(0.01, 0)) > 1e-4);
}

TEST_CASE("poncelet closure") {
    CHECK(closure_residual(FamilySpec(4, Frame::Inversive, 0.0), 0.7) < 1e-14);

    FamilySpec spec(5, Frame::Inversive, 0.5);
    for (int i = 0; i < 64; ++i)
        CHECK(closure_residual(spec, spec.period() * i / 64) < 1e-9);

    // Wrong inellipse: residual far above tolerance.
    auto p = snapshot(spec, 0.3);
    AxisEllipse e = brocard_objects(spec).inellipse;
    AxisEllipse wrong(e.cx, e.a, e.b * 1.01);
    double worst = 0.0;
    for (int i = 0; i < 5; ++i)
        worst = std::max(worst, line_tangency_residual(
                                    Line::through(p.vertices[i], p.vertices[(i + 1) % 5]),
                                    wrong));
    CHECK(worst > 1e-4);
}

TEST_CASE("stationarity of associated objects over the sweep") {
    FamilySpec spec(5, Frame::Inversive, 0.5);
    BrocardObjects bo = brocard_objects(spec);
    double drift = 0.0;
    for (int i = 0; i < 64; ++i) {
        auto snap = snapshot(spec, spec.period() * i / 64);
        auto [c1, c2] = brocard_points_by_concurrence(snap, bo.brocard_angle);
        double gap = std::min(std::abs(c1 - bo.omega1) + std::abs(c2 - bo.omega2),
                              std::abs(c1 - bo.omega2) + std::abs(c2 - bo.omega1));
        drift = std::max(drift, gap);
    }
    CHECK(drift < 1e-10 * bo.circumcircle.radius);
}

TEST_CASE("omega is monotone in x0 with the right endpoints") {
    int n = 6;
    double prev = M_PI / 2 - M_PI / n;
    CHECK(brocard_objects(FamilySpec(n, Frame::Inversive, 0.0)).brocard_angle ==
          doctest::Approx(prev));
    for (double x0 = 0.05; x0 < 1.0; x0 += 0.05) {
        double omega = brocard_objects(FamilySpec(n, Frame::Inversive, x0)).brocard_angle;
        CHECK(omega < prev);
        prev = omega;
    }
    CHECK(brocard_objects(FamilySpec(n, Frame::Inversive, 0.999)).brocard_angle <
          0.01);  // omega -> 0 as x0 -> 1
}

TEST_CASE("inversion about l2 recovers a regular polygon") {
    FamilySpec spec(5, Frame::Inversive, 0.5);
    BrocardObjects bo = brocard_objects(spec);
    Polygon p = vertices_inversive(spec, 0.3);
    Circle about(*bo.l2, 1.0);
    Polygon w;
    for (const auto& v : p) w.push_back(invert_point(v, about));
    Circle c = circle_through(w[0], w[1], w[2]);
    std::vector<double> angles;
    for (const auto& v : w) angles.push_back(std::arg(v - c.center));
    std::sort(angles.begin(), angles.end());
    angles.push_back(angles.front() + 2.0 * M_PI);
    for (std::size_t i = 1; i < angles.size(); ++i)
        CHECK(angles[i] - angles[i - 1] ==
              doctest::Approx(2.0 * M_PI / 5).epsilon(1e-10));
}
