#include "harmonic/isocurves.hpp"

#include <cmath>
#include <map>

namespace harmonic {

const char* to_string(Support s) {
    switch (s) {
        case Support::Supported: return "Supported";
        case Support::Violated: return "Violated";
        default: return "Inconclusive";
    }
}

Polygon inverted_polygon(const Polygon& p, CPoint q, double radius) {
    double scale = 0.0;
    for (const auto& v : p) scale = std::max(scale, std::abs(v));
    Polygon out;
    out.reserve(p.size());
    Circle c(q, radius);
    for (const auto& v : p) {
        if (std::abs(v - q) < kDirectTol * std::max(scale, 1.0))
            throw std::domain_error("inversion center coincides with a vertex");
        out.push_back(invert_point(v, c));
    }
    return out;
}

double omega_prime(const FamilySpec& spec, double t, CPoint q) {
    Circle circ = brocard_objects(spec).circumcircle;
    if (std::abs(std::abs(q - circ.center) - circ.radius) < 1e-9 * circ.radius)
        throw std::domain_error("Q on circumcircle");
    FamilySpec inv(spec.n, Frame::Inversive, spec.param);
    Polygon image = inverted_polygon(vertices_inversive(inv, t), q);
    return brocard_angle_measured(PolygonSnapshot::from(image, t));
}

IsocurveReport isocurve_test(const FamilySpec& spec, int n_circles, int n_points) {
    BrocardObjects bo = brocard_objects(spec);
    auto pencil = bo.schoute_pencil();
    if (!pencil) throw std::domain_error("regular family (x0 = 0) has no Schoute pencil");

    const Circle circ = bo.circumcircle;
    const double omega = bo.brocard_angle;
    const double t0 = 0.12;  // arbitrary fixed phase; omega' is t-independent

    IsocurveReport rep;

    // Pencil member centers, geometrically spaced beyond l1 out to 4R past
    // the circumcircle center, skipping the circumcircle member itself.
    double l1x = pencil->l1.real(), l2x = pencil->l2.real();
    if (l1x < l2x) std::swap(l1x, l2x);  // sample on the l1 (interior) side
    double g_lo = 0.05 * circ.radius;
    double g_hi = circ.center.real() + 4.0 * circ.radius - l1x;
    int placed = 0, i = 0;
    while (placed < n_circles && i < 4 * n_circles) {
        double f = static_cast<double>(i++) / (n_circles - 1);
        double xc = l1x + g_lo * std::pow(g_hi / g_lo, f);
        if (std::abs(xc - circ.center.real()) < 1e-3 * circ.radius) continue;
        double r2 = (xc - l1x) * (xc - l2x);
        if (r2 <= 0.0) continue;
        Circle member(CPoint(xc, 0.0), std::sqrt(r2));

        double mean = 0.0;
        std::vector<double> vals(n_points);
        for (int j = 0; j < n_points; ++j) {
            CPoint q = member.center + std::polar(member.radius, 2.0 * M_PI * j / n_points);
            vals[j] = omega_prime(spec, t0, q);
            mean += vals[j];
        }
        mean /= n_points;
        double dev = 0.0;
        for (double v : vals) dev = std::max(dev, std::abs(v - mean));
        rep.circles.push_back(IsocurveCircleStat{member, mean, dev});
        ++placed;
    }

    // Q on the Brocard circle and on the Lemoine axis: omega' == omega.
    for (int j = 0; j < 32; ++j) {
        CPoint q = bo.brocard_circle->center +
                   std::polar(bo.brocard_circle->radius, 2.0 * M_PI * j / 32);
        rep.brocard_circle_err =
            std::max(rep.brocard_circle_err, std::abs(omega_prime(spec, t0, q) - omega));
    }
    double mid_x = 0.5 * (pencil->l1.real() + pencil->l2.real());
    for (int j = 1; j <= 16; ++j) {
        double y = 10.0 * circ.radius * j / 16.0;
        for (double sy : {y, -y}) {
            CPoint q(mid_x, sy);
            rep.lemoine_axis_err =
                std::max(rep.lemoine_axis_err, std::abs(omega_prime(spec, t0, q) - omega));
        }
    }

    rep.means_distinct = true;
    for (std::size_t m = 1; m < rep.circles.size(); ++m)
        if (std::abs(rep.circles[m].mean_omega - rep.circles[m - 1].mean_omega) < 1e-12)
            rep.means_distinct = false;

    double worst = std::max(rep.brocard_circle_err, rep.lemoine_axis_err);
    for (const auto& c : rep.circles) worst = std::max(worst, c.max_dev);
    if (worst < kSupportTol && rep.means_distinct)
        rep.verdict = Support::Supported;
    else if (worst > kViolationTol)
        rep.verdict = Support::Violated;
    else
        rep.verdict = Support::Inconclusive;
    return rep;
}

CPoint OmegaField::node(int ix, int iy) const {
    return CPoint(bbox.x_lo + (bbox.x_hi - bbox.x_lo) * ix / (nx - 1),
                  bbox.y_lo + (bbox.y_hi - bbox.y_lo) * iy / (ny - 1));
}

OmegaField omega_field(const FamilySpec& spec, const BBox& bbox, int resolution) {
    if (resolution < 16) throw std::domain_error("resolution must be >= 16");
    Circle circ = brocard_objects(spec).circumcircle;
    OmegaField f;
    f.bbox = bbox;
    f.nx = f.ny = resolution;
    f.values.assign(resolution * resolution, std::nan(""));
    f.excluded.assign(resolution * resolution, false);
    double band = 0.02 * circ.radius;
    for (int iy = 0; iy < resolution; ++iy) {
        for (int ix = 0; ix < resolution; ++ix) {
            CPoint q = f.node(ix, iy);
            std::size_t idx = iy * f.nx + ix;
            if (std::abs(std::abs(q - circ.center) - circ.radius) < band) {
                f.excluded[idx] = true;
                continue;
            }
            f.values[idx] = omega_prime(spec, 0.12, q);
        }
    }
    return f;
}

namespace {

struct SegmentKey {
    long long x, y;
    bool operator<(const SegmentKey& o) const {
        return x != o.x ? x < o.x : y < o.y;
    }
};

SegmentKey quantize(CPoint p, double eps) {
    return SegmentKey{static_cast<long long>(std::llround(p.real() / eps)),
                      static_cast<long long>(std::llround(p.imag() / eps))};
}

}  // namespace

std::vector<std::vector<CPoint>> contour_lines(const OmegaField& field, double level) {
    std::vector<std::pair<CPoint, CPoint>> segments;
    auto interp = [&](CPoint a, double va, CPoint b, double vb) {
        double s = (level - va) / (vb - va);
        return a + s * (b - a);
    };
    for (int iy = 0; iy + 1 < field.ny; ++iy) {
        for (int ix = 0; ix + 1 < field.nx; ++ix) {
            double v[4] = {field.at(ix, iy), field.at(ix + 1, iy),
                           field.at(ix + 1, iy + 1), field.at(ix, iy + 1)};
            if (std::isnan(v[0]) || std::isnan(v[1]) || std::isnan(v[2]) ||
                std::isnan(v[3]))
                continue;
            CPoint c[4] = {field.node(ix, iy), field.node(ix + 1, iy),
                           field.node(ix + 1, iy + 1), field.node(ix, iy + 1)};
            int idx = 0;
            for (int k = 0; k < 4; ++k)
                if (v[k] >= level) idx |= 1 << k;
            if (idx == 0 || idx == 15) continue;
            // Edge crossing points, edges 0..3 = bottom, right, top, left.
            CPoint e[4];
            bool has[4] = {};
            auto edge = [&](int k, int a, int b) {
                if ((v[a] >= level) != (v[b] >= level)) {
                    e[k] = interp(c[a], v[a], c[b], v[b]);
                    has[k] = true;
                }
            };
            edge(0, 0, 1);
            edge(1, 1, 2);
            edge(2, 2, 3);
            edge(3, 3, 0);
            int pts[4], np = 0;
            for (int k = 0; k < 4; ++k)
                if (has[k]) pts[np++] = k;
            if (np == 2) {
                segments.emplace_back(e[pts[0]], e[pts[1]]);
            } else if (np == 4) {
                // Saddle: resolve by the cell-center value.
                double center = 0.25 * (v[0] + v[1] + v[2] + v[3]);
                if ((center >= level) == (v[0] >= level)) {
                    segments.emplace_back(e[0], e[1]);
                    segments.emplace_back(e[2], e[3]);
                } else {
                    segments.emplace_back(e[3], e[0]);
                    segments.emplace_back(e[1], e[2]);
                }
            }
        }
    }

    // Chain segments into polylines.
    double eps = 1e-9 * std::max(field.bbox.x_hi - field.bbox.x_lo, 1.0);
    std::multimap<SegmentKey, std::size_t> by_end;
    for (std::size_t i = 0; i < segments.size(); ++i) {
        by_end.emplace(quantize(segments[i].first, eps), i);
        by_end.emplace(quantize(segments[i].second, eps), i);
    }
    std::vector<bool> used(segments.size(), false);
    std::vector<std::vector<CPoint>> lines;
    for (std::size_t i = 0; i < segments.size(); ++i) {
        if (used[i]) continue;
        used[i] = true;
        std::vector<CPoint> line{segments[i].first, segments[i].second};
        bool extended = true;
        while (extended) {
            extended = false;
            auto range = by_end.equal_range(quantize(line.back(), eps));
            for (auto it = range.first; it != range.second; ++it) {
                std::size_t j = it->second;
                if (used[j]) continue;
                CPoint tail = line.back();
                CPoint next = std::abs(segments[j].first - tail) <
                                      std::abs(segments[j].second - tail)
                                  ? segments[j].second
                                  : segments[j].first;
                used[j] = true;
                line.push_back(next);
                extended = true;
                break;
            }
        }
        lines.push_back(std::move(line));
    }
    return lines;
}

}  // namespace harmonic
