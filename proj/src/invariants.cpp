#include "harmonic/invariants.hpp"

#include <cmath>
#include <limits>

namespace harmonic {

namespace {

// Kahan-compensated sum.
double csum(const std::vector<double>& xs) {
    double s = 0.0, c = 0.0;
    for (double x : xs) {
        double y = x - c;
        double t = s + y;
        c = (t - s) - y;
        s = t;
    }
    return s;
}

PolygonSnapshot casey_snapshot(const FamilySpec& spec, double t) {
    FamilySpec c(spec.n, Frame::Casey, spec.param);
    return snapshot(c, t);
}

InvariantReport classify(const std::string& name, std::vector<double> samples,
                         std::optional<double> closed_form) {
    InvariantReport r;
    r.quantity = name;
    r.closed_form = closed_form;
    r.mean = csum(samples) / static_cast<double>(samples.size());
    double max_abs = 0.0;
    for (double s : samples) {
        r.max_abs_dev = std::max(r.max_abs_dev, std::abs(s - r.mean));
        max_abs = std::max(max_abs, std::abs(s));
    }
    r.relative_dev = r.max_abs_dev / std::max(std::abs(r.mean), kScaleFloor);
    if (max_abs < kZeroTol)
        r.verdict = Verdict::Zero;
    else if (r.relative_dev < kInvariantTol)
        r.verdict = Verdict::Invariant;
    else if (r.relative_dev > kVariesTol)
        r.verdict = Verdict::Varies;
    else
        r.verdict = Verdict::Inconclusive;
    if (closed_form) {
        double err = 0.0;
        for (double s : samples) err = std::max(err, std::abs(s - *closed_form));
        r.closed_form_rel_err = err / std::max(1.0, std::abs(*closed_form));
    }
    r.samples = std::move(samples);
    return r;
}

}  // namespace

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Invariant: return "Invariant";
        case Verdict::Varies: return "Varies";
        case Verdict::Zero: return "Zero";
        default: return "Inconclusive";
    }
}

InvariantReport sweep_quantity(const std::string& name,
                               const std::function<double(double)>& fn,
                               double period, int samples,
                               std::optional<double> closed_form) {
    auto run = [&](int m) {
        std::vector<double> vals(m);
        for (int i = 0; i < m; ++i) vals[i] = fn(period * i / m);
        return classify(name, std::move(vals), closed_form);
    };
    InvariantReport r = run(samples);
    if (r.verdict == Verdict::Inconclusive) r = run(4 * samples);
    return r;
}

double sum_inv_sq_sides_closed(int n, double d) {
    double alpha = M_PI / n;
    double ca = std::cos(alpha), sa = std::sin(alpha);
    double d2 = d * d;
    return n * (d2 * ca * ca + (d2 * d2 + 1.0) / 4.0) /
           ((1.0 - d2) * (1.0 - d2) * sa * sa);
}

double sum_inv_sq_apollonius_closed(int n, double d) {
    if (d == 0.0) return 0.0;  // limit: circles flatten to lines
    double w = 1.0 / d - d;
    return 2.0 * n / (w * w);
}

double cot_theta_closed(int n, double d, double t, int k) {
    double alpha = M_PI / n;
    double rho = (1.0 + d * d) / (d * d - 1.0);
    return -2.0 * d * std::cos(2.0 * alpha * k + t) /
               ((d * d - 1.0) * std::sin(2.0 * alpha)) +
           rho / std::tan(2.0 * alpha);
}

double cot_sum_closed(int n, double d) {
    double rho = (1.0 + d * d) / (d * d - 1.0);
    return n * rho / std::tan(2.0 * M_PI / n);
}

double cot_sq_sum_closed(int n, double d) {
    double rho = (1.0 + d * d) / (d * d - 1.0);
    double c4 = std::cos(4.0 * M_PI / n);
    return n * (rho * rho * (2.0 + c4) - 1.0) / (1.0 - c4);
}

std::vector<double> apollonius_radii(const PolygonSnapshot& p, CPoint l1, CPoint l2) {
    std::vector<double> radii;
    radii.reserve(p.vertices.size());
    double scale = std::abs(l2 - l1);
    for (const auto& w : p.vertices) {
        if (std::abs(cross(l2 - l1, w - l1)) < kDirectTol * scale * scale) {
            radii.push_back(std::numeric_limits<double>::infinity());
            continue;
        }
        radii.push_back(circle_through(w, l1, l2).radius);
    }
    return radii;
}

double sum_inv_sq_apollonius_measured(const PolygonSnapshot& p, CPoint l1, CPoint l2) {
    std::vector<double> terms;
    for (double r : apollonius_radii(p, l1, l2))
        terms.push_back(std::isinf(r) ? 0.0 : 1.0 / (r * r));
    return csum(terms);
}

std::vector<double> elementary_symmetric_values(const std::vector<double>& x) {
    // Coefficients of prod (y + x_i): coeff[k] = e_k.
    std::vector<double> coeff{1.0};
    for (double xi : x) {
        coeff.push_back(0.0);
        for (std::size_t j = coeff.size() - 1; j >= 1; --j)
            coeff[j] += xi * coeff[j - 1];
    }
    return {coeff.begin() + 1, coeff.end()};
}

InvariantReport sum_inv_sq_sides(const FamilySpec& spec, int samples) {
    auto fn = [&](double t) {
        auto p = casey_snapshot(spec, t);
        std::vector<double> terms;
        for (double s : p.sides) terms.push_back(1.0 / (s * s));
        return csum(terms);
    };
    return sweep_quantity("sum_inv_sq_sides", fn, spec.period(), samples,
                          sum_inv_sq_sides_closed(spec.n, spec.param));
}

InvariantReport sum_inv_sq_apollonius(const FamilySpec& spec, int samples) {
    double d = spec.param;
    CPoint l1(d, 0.0), l2(d == 0.0 ? 0.0 : 1.0 / d, 0.0);
    auto fn = [&, l1, l2](double t) {
        return sum_inv_sq_apollonius_measured(casey_snapshot(spec, t), l1, l2);
    };
    if (d == 0.0) {
        // Limiting point at infinity; report the limit value directly.
        return classify("sum_inv_sq_apollonius", std::vector<double>(samples, 0.0), 0.0);
    }
    return sweep_quantity("sum_inv_sq_apollonius", fn, spec.period(), samples,
                          sum_inv_sq_apollonius_closed(spec.n, d));
}

std::vector<InvariantReport> cot_power_sums(const FamilySpec& spec, int kmax,
                                            int samples) {
    if (kmax <= 0) kmax = spec.n + 2;  // exercise the Varies side of the table too
    std::vector<InvariantReport> out;
    for (int k = 1; k <= kmax; ++k) {
        auto fn = [&, k](double t) {
            auto p = casey_snapshot(spec, t);
            std::vector<double> terms;
            for (double th : p.angles) terms.push_back(std::pow(1.0 / std::tan(th), k));
            return csum(terms);
        };
        std::optional<double> cf;
        if (k == 1) cf = cot_sum_closed(spec.n, spec.param);
        if (k == 2) cf = cot_sq_sum_closed(spec.n, spec.param);
        out.push_back(sweep_quantity("cotpow:" + std::to_string(k), fn, spec.period(),
                                     samples, cf));
    }
    return out;
}

std::vector<InvariantReport> elementary_symmetric(const FamilySpec& spec, int samples) {
    std::vector<InvariantReport> out;
    for (int k = 1; k <= spec.n; ++k) {
        auto fn = [&, k](double t) {
            auto p = casey_snapshot(spec, t);
            std::vector<double> cots;
            for (double th : p.angles) cots.push_back(1.0 / std::tan(th));
            return elementary_symmetric_values(cots)[k - 1];
        };
        std::optional<double> cf;
        if (k == 1) cf = cot_sum_closed(spec.n, spec.param);
        out.push_back(sweep_quantity("elemsym:" + std::to_string(k), fn, spec.period(),
                                     samples, cf));
    }
    return out;
}

std::vector<InvariantReport> ratio_invariants(const FamilySpec& spec, int samples) {
    double omega = brocard_objects(spec).brocard_angle;
    auto sum_s2 = [](const PolygonSnapshot& p) {
        std::vector<double> terms;
        for (double s : p.sides) terms.push_back(s * s);
        return csum(terms);
    };
    auto sum_sin2t = [](const PolygonSnapshot& p) {
        std::vector<double> terms;
        for (double th : p.angles) terms.push_back(std::sin(2.0 * th));
        return csum(terms);
    };
    std::vector<InvariantReport> out;
    out.push_back(sweep_quantity(
        "sum_sq_sides_over_area",
        [&](double t) {
            auto p = casey_snapshot(spec, t);
            return sum_s2(p) / p.area;
        },
        spec.period(), samples, 4.0 / std::tan(omega)));
    out.push_back(sweep_quantity(
        "sum_sin2theta_over_area",
        [&](double t) {
            auto p = casey_snapshot(spec, t);
            return sum_sin2t(p) / p.area;
        },
        spec.period(), samples));
    out.push_back(sweep_quantity(
        "sum_sin2theta_over_sum_sq_sides",
        [&](double t) {
            auto p = casey_snapshot(spec, t);
            return sum_sin2t(p) / sum_s2(p);
        },
        spec.period(), samples));
    return out;
}

std::vector<InvariantReport> negative_controls(const FamilySpec& spec, int samples) {
    std::vector<InvariantReport> out;
    out.push_back(sweep_quantity(
        "area", [&](double t) { return casey_snapshot(spec, t).area; }, spec.period(),
        samples));
    out.push_back(sweep_quantity(
        "perimeter", [&](double t) { return casey_snapshot(spec, t).perimeter; },
        spec.period(), samples));
    return out;
}

std::vector<InvariantReport> all_reports(const FamilySpec& spec, int samples) {
    std::vector<InvariantReport> out;
    out.push_back(sum_inv_sq_sides(spec, samples));
    out.push_back(sum_inv_sq_apollonius(spec, samples));
    for (auto& r : cot_power_sums(spec, 0, samples)) out.push_back(std::move(r));
    for (auto& r : elementary_symmetric(spec, samples)) out.push_back(std::move(r));
    for (auto& r : ratio_invariants(spec, samples)) out.push_back(std::move(r));
    for (auto& r : negative_controls(spec, samples)) out.push_back(std::move(r));
    return out;
}

}  // namespace harmonic
