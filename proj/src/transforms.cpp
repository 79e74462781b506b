#include "harmonic/transforms.hpp"

#include <cmath>

namespace harmonic {

HomotheticPair HomotheticPair::from_inner(double a_h, double b_h, int n) {
    if (a_h < b_h) std::swap(a_h, b_h);  // swap-axes normalization
    double c = std::cos(M_PI / n);
    return HomotheticPair(AxisEllipse(0.0, a_h / c, b_h / c), AxisEllipse(0.0, a_h, b_h));
}

std::pair<CPoint, CPoint> HomotheticPair::inner_foci() const {
    double c = inner_focal();
    return {CPoint(cx() - c, 0.0), CPoint(cx() + c, 0.0)};
}

HomotheticPair harmonic_to_homothetic(double x0, int n) {
    if (!(std::abs(x0) < 1.0)) throw std::domain_error("parameter out of range: |x0| < 1");
    double x2 = x0 * x0;
    double a_h = (x2 + 1.0) * (x2 + 1.0) / std::abs(1.0 - x2);
    double b_h = x2 + 1.0;
    double x_h = x0 == 0.0 ? 0.0 : x0 * (3.0 * x2 * x2 + 3.0 * x2 + 2.0) / (x2 * x2 - 1.0);
    double c = std::cos(M_PI / n);
    return HomotheticPair(AxisEllipse(x_h, a_h / c, b_h / c), AxisEllipse(x_h, a_h, b_h));
}

HarmonicImage homothetic_to_harmonic(const HomotheticPair& pair, int n) {
    if (std::abs(pair.cx()) > kDirectTol)
        throw std::domain_error("pair must be centered at the origin");
    double a_h = pair.inner.a, b_h = pair.inner.b;
    double c_h = pair.inner_focal();
    double ca = std::cos(M_PI / n);
    double o1 = -c_h * (1.0 + b_h * b_h) / (b_h * b_h);
    double r1 = a_h / (b_h * b_h);
    double k2 = a_h * a_h - c_h * c_h * ca * ca;
    double x1 = -c_h * (a_h * a_h + (1.0 - c_h * c_h) * ca * ca) / k2;
    double a1 = a_h * ca / k2;
    double b1 = a_h * ca / (b_h * std::sqrt(k2));
    return HarmonicImage{Circle(CPoint(o1, 0.0), r1), AxisEllipse(x1, a1, b1),
                         CPoint(-c_h, 0.0)};
}

Polygon homothetic_vertices(const HomotheticPair& pair, int n, double t) {
    Polygon p(n);
    for (int k = 1; k <= n; ++k) {
        double nu = 2.0 * M_PI / n * k + t;
        p[k - 1] = CPoint(pair.cx() + pair.outer.a * std::cos(nu),
                          pair.outer.b * std::sin(nu));
    }
    return p;
}

LateralAreas lateral_areas(const HomotheticPair& pair, int n, double t) {
    Polygon h = homothetic_vertices(pair, n, t);
    auto [f1, f2] = pair.inner_foci();
    double a1 = polygon_area(polar_dual_polygon(h, Circle(f1, 1.0)));
    double a2 = polygon_area(polar_dual_polygon(h, Circle(f2, 1.0)));
    return LateralAreas{a1, a2};
}

double lateral_area_sum_closed(int n, double a, double b) {
    if (n == 3) return std::sqrt(3.0) / 18.0 * (b / a) * (a * a + 3.0 * b * b);
    if (n == 5) {
        double a2 = a * a, b2 = b * b;
        double num = (a2 * a2 + 10.0 * b2 * a2 + 5.0 * b2 * b2) *
                     (std::sqrt(5.0) * (a2 + 3.0 * b2) + 5.0 * a2 + 7.0 * b2);
        double den = 5.0 * a2 * a2 + 10.0 * b2 * a2 + b2 * b2;
        return b / (40.0 * std::sin(2.0 * M_PI / 5.0) * a) * num / den;
    }
    throw std::domain_error("closed form known only for N = 3 and N = 5");
}

InvariantReport lateral_area_invariant(const HomotheticPair& pair, int n, int samples) {
    std::optional<double> cf;
    if (n == 3 || n == 5) cf = lateral_area_sum_closed(n, pair.outer.a, pair.outer.b);
    return sweep_quantity(
        "inv_area_sum",
        [&](double t) { return lateral_areas(pair, n, t).inv_sum(); }, 2.0 * M_PI / n,
        samples, cf);
}

std::vector<InvariantReport> lateral_corollaries(const HomotheticPair& pair, int n,
                                                 int samples) {
    auto duals = [&](double t) {
        Polygon h = homothetic_vertices(pair, n, t);
        auto [f1, f2] = pair.inner_foci();
        return std::pair{polar_dual_polygon(h, Circle(f1, 1.0)),
                         polar_dual_polygon(h, Circle(f2, 1.0))};
    };
    auto sum_s2 = [](const Polygon& p) {
        double s2 = 0.0;
        for (double s : sidelengths(p)) s2 += s * s;
        return s2;
    };
    std::vector<InvariantReport> out;
    out.push_back(sweep_quantity(
        "inv_sum_sq_sides_sum",
        [&](double t) {
            auto [d1, d2] = duals(t);
            return 1.0 / sum_s2(d1) + 1.0 / sum_s2(d2);
        },
        2.0 * M_PI / n, samples));
    out.push_back(sweep_quantity(
        "inv_sum_sin2theta_sum",
        [&](double t) {
            auto [d1, d2] = duals(t);
            auto sum_sin2 = [](const Polygon& p) {
                double s = 0.0;
                for (double th : internal_angles(p)) s += std::sin(2.0 * th);
                return s;
            };
            return 1.0 / sum_sin2(d1) + 1.0 / sum_sin2(d2);
        },
        2.0 * M_PI / n, samples));
    // Shared Brocard angle of the two lateral families.
    out.push_back(sweep_quantity(
        "lateral_omega_difference",
        [&](double t) {
            auto [d1, d2] = duals(t);
            return brocard_angle_measured(PolygonSnapshot::from(d1, t)) -
                   brocard_angle_measured(PolygonSnapshot::from(d2, t));
        },
        2.0 * M_PI / n, samples));
    return out;
}

double x0_from_omega(int n, double omega) {
    double ttt = std::tan(M_PI / n) * std::tan(omega);
    if (!(ttt < 1.0))
        throw std::domain_error("tan(alpha)*tan(omega) must be < 1");
    return std::sqrt((1.0 - ttt) / (1.0 + ttt));
}

double stretch_from_omega(int n, double omega) {
    return 1.0 / (std::tan(M_PI / n) * std::tan(omega));
}

double x0_from_axes(double a, double b) {
    if (!(a > b) || !(b > 0.0)) throw std::domain_error("need a > b > 0");
    return std::sqrt((a + b) / (a - b));
}

}  // namespace harmonic
