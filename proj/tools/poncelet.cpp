#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>

#include "harmonic/svg.hpp"
#include "harmonic/transforms.hpp"

// Command-line laboratory for Poncelet harmonic polygon families:
// construction, invariant sweeps, conjecture tests, and SVG figures.
//
// Exit codes: 0 success, 2 invalid configuration, 3 tolerance failure.

using nlohmann::json;
using namespace harmonic;

namespace {

constexpr int kSchemaVersion = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitTolerance = 3;

std::string num17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

json point_json(CPoint p) { return json{{"x", p.real()}, {"y", p.imag()}}; }

json report_json(const InvariantReport& r) {
    json j{{"quantity", r.quantity},
           {"mean", r.mean},
           {"max_abs_dev", r.max_abs_dev},
           {"relative_dev", r.relative_dev},
           {"verdict", to_string(r.verdict)}};
    if (r.closed_form) {
        j["closed_form"] = *r.closed_form;
        j["closed_form_rel_err"] = *r.closed_form_rel_err;
    }
    return j;
}

struct Options {
    int n = 5;
    double x0 = std::nan("");
    double casey_d = std::nan("");
    double ah = std::nan("");
    double bh = std::nan("");
    double t = 0.0;
    double omega = std::nan("");
    int samples = 256;
    double tol = 1e-9;
    std::string format = "json";
    std::string out;
    unsigned seed = 0;
    bool allow_negative = false;
    int resolution = 64;
    bool field = false;

    FamilySpec spec() const {
        bool has_x0 = !std::isnan(x0), has_d = !std::isnan(casey_d);
        if (has_x0 && has_d)
            throw std::domain_error("give either --x0 or --casey-d, not both");
        double p = has_d ? casey_d : (has_x0 ? x0 : 0.5);
        if (!allow_negative) p = std::abs(p);
        return FamilySpec(n, has_d ? Frame::Casey : Frame::Inversive, p);
    }
    HomotheticPair pair() const {
        if (std::isnan(ah) || std::isnan(bh))
            throw std::domain_error("--ah and --bh are required here");
        return HomotheticPair::from_inner(ah, bh, n);
    }
};

void emit(const Options& opt, const std::string& payload) {
    if (opt.out.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream f(opt.out, std::ios::binary);
    if (!f) throw std::domain_error("cannot open output file: " + opt.out);
    f << payload;
}

std::string reports_csv(const std::vector<InvariantReport>& reports, double period) {
    std::string csv = "quantity,t,value,closed_form,abs_dev\n";
    for (const auto& r : reports) {
        for (std::size_t i = 0; i < r.samples.size(); ++i) {
            double t = period * i / r.samples.size();
            csv += r.quantity + "," + num17(t) + "," + num17(r.samples[i]) + ",";
            if (r.closed_form) csv += num17(*r.closed_form);
            csv += "," + num17(std::abs(r.samples[i] - r.mean)) + "\n";
        }
    }
    return csv;
}

int cmd_construct(const Options& opt) {
    FamilySpec spec = opt.spec();
    PolygonSnapshot snap = snapshot(spec, opt.t);
    BrocardObjects bo = brocard_objects(spec);

    if (opt.format == "csv") {
        std::string csv = "index,x,y\n";
        for (std::size_t i = 0; i < snap.vertices.size(); ++i)
            csv += std::to_string(i) + "," + num17(snap.vertices[i].real()) + "," +
                   num17(snap.vertices[i].imag()) + "\n";
        emit(opt, csv);
        return 0;
    }

    json j{{"schema_version", kSchemaVersion},
           {"n", spec.n},
           {"frame", spec.frame == Frame::Casey ? "casey" : "inversive"},
           {"param", spec.param},
           {"t", opt.t}};
    json verts = json::array();
    for (const auto& v : snap.vertices) verts.push_back(point_json(v));
    j["vertices"] = verts;
    j["sidelengths"] = snap.sides;
    j["internal_angles"] = snap.angles;
    j["area"] = snap.area;
    j["perimeter"] = snap.perimeter;
    j["objects"] = {
        {"circumcenter", point_json(bo.circumcircle.center)},
        {"circumradius", bo.circumcircle.radius},
        {"symmedian", point_json(bo.symmedian)},
        {"brocard_point_1", point_json(bo.omega1)},
        {"brocard_point_2", point_json(bo.omega2)},
        {"inellipse", {{"cx", bo.inellipse.cx}, {"a", bo.inellipse.a}, {"b", bo.inellipse.b}}},
        {"eccentricity", bo.eccentricity},
        {"brocard_angle", bo.brocard_angle},
        {"delta", bo.delta}};
    if (bo.brocard_circle)
        j["objects"]["brocard_circle"] = {{"center", point_json(bo.brocard_circle->center)},
                                          {"radius", bo.brocard_circle->radius}};
    if (bo.l1) j["objects"]["limiting_point_1"] = point_json(*bo.l1);
    if (bo.l2) j["objects"]["limiting_point_2"] = point_json(*bo.l2);
    emit(opt, j.dump(2) + "\n");
    return 0;
}

int cmd_invariants(const Options& opt, const std::string& quantity) {
    FamilySpec spec = opt.spec();
    std::vector<InvariantReport> reports = all_reports(spec, opt.samples);
    if (!quantity.empty()) {
        std::erase_if(reports,
                      [&](const InvariantReport& r) { return r.quantity != quantity; });
        if (reports.empty()) throw std::domain_error("unknown quantity: " + quantity);
    }

    bool closed_form_failure = false;
    for (const auto& r : reports)
        if (r.closed_form_rel_err && *r.closed_form_rel_err > opt.tol)
            closed_form_failure = true;

    if (opt.format == "csv") {
        emit(opt, reports_csv(reports, spec.period()));
    } else {
        json j{{"schema_version", kSchemaVersion},
               {"n", spec.n},
               {"param", spec.param},
               {"samples", opt.samples}};
        json arr = json::array();
        for (const auto& r : reports) arr.push_back(report_json(r));
        j["reports"] = arr;
        emit(opt, j.dump(2) + "\n");
    }
    return closed_form_failure ? kExitTolerance : 0;
}

int cmd_conjecture_area_sum(const Options& opt) {
    HomotheticPair pair = opt.pair();
    InvariantReport rep = lateral_area_invariant(pair, opt.n, opt.samples);
    auto corollaries = lateral_corollaries(pair, opt.n, opt.samples);
    const char* verdict = rep.relative_dev < kInvariantTol ? "Supported"
                          : rep.relative_dev > kVariesTol  ? "Violated"
                                                           : "Inconclusive";
    json j{{"schema_version", kSchemaVersion},
           {"conjecture", "inv_area_sum"},
           {"n", opt.n},
           {"inner", {{"a", pair.inner.a}, {"b", pair.inner.b}}},
           {"verdict", verdict},
           {"report", report_json(rep)}};
    json cors = json::array();
    for (const auto& c : corollaries) cors.push_back(report_json(c));
    j["corollaries"] = cors;
    emit(opt, j.dump(2) + "\n");
    std::cerr << "area-sum: " << verdict << " (max relative deviation "
              << num17(rep.relative_dev) << ")\n";
    return std::string(verdict) == "Supported" ? 0 : kExitTolerance;
}

int cmd_conjecture_sin2theta(const Options& opt) {
    FamilySpec spec = opt.spec();
    auto reports = ratio_invariants(spec, opt.samples);
    json arr = json::array();
    bool ok = true;
    for (const auto& r : reports) {
        arr.push_back(report_json(r));
        if (r.quantity.find("sin2theta") != std::string::npos &&
            r.verdict != Verdict::Invariant)
            ok = false;
    }
    json j{{"schema_version", kSchemaVersion},
           {"conjecture", "sin2theta_ratios"},
           {"n", spec.n},
           {"param", spec.param},
           {"verdict", ok ? "Supported" : "Violated"},
           {"reports", arr}};
    emit(opt, j.dump(2) + "\n");
    return ok ? 0 : kExitTolerance;
}

int cmd_conjecture_isocurves(const Options& opt) {
    FamilySpec spec = opt.spec();
    IsocurveReport rep = isocurve_test(spec, 12, 64);
    double omega = brocard_objects(spec).brocard_angle;

    // Seeded random spot-checks: a few extra Q on random pencil members.
    std::mt19937 rng(opt.seed);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    double spot_worst = 0.0;
    for (int i = 0; i < 8 && !rep.circles.empty(); ++i) {
        const auto& c = rep.circles[rng() % rep.circles.size()].circle;
        CPoint q = c.center + std::polar(c.radius, angle(rng));
        double w = omega_prime(spec, 0.3, q);
        for (const auto& s : rep.circles)
            if (std::abs(s.circle.center - c.center) < 1e-12)
                spot_worst = std::max(spot_worst, std::abs(w - s.mean_omega));
    }

    json circles = json::array();
    for (const auto& c : rep.circles)
        circles.push_back(json{{"center_x", c.circle.center.real()},
                               {"radius", c.circle.radius},
                               {"mean_omega_prime", c.mean_omega},
                               {"max_dev", c.max_dev}});
    json j{{"schema_version", kSchemaVersion},
           {"conjecture", "isocurves_schoute"},
           {"n", spec.n},
           {"param", spec.param},
           {"omega", omega},
           {"verdict", to_string(rep.verdict)},
           {"brocard_circle_err", rep.brocard_circle_err},
           {"lemoine_axis_err", rep.lemoine_axis_err},
           {"spot_check_err", spot_worst},
           {"circles", circles}};
    emit(opt, j.dump(2) + "\n");
    std::cerr << "isocurves: " << to_string(rep.verdict) << " (Brocard-circle |w'-w| = "
              << num17(rep.brocard_circle_err) << ")\n";
    return rep.verdict == Support::Supported ? 0 : kExitTolerance;
}

int cmd_transform_to_homothetic(const Options& opt) {
    FamilySpec spec = opt.spec();
    HomotheticPair pair = harmonic_to_homothetic(spec.x0(), opt.n);
    json j{{"schema_version", kSchemaVersion},
           {"n", opt.n},
           {"x0", spec.x0()},
           {"center_x", pair.cx()},
           {"outer", {{"a", pair.outer.a}, {"b", pair.outer.b}}},
           {"inner", {{"a", pair.inner.a}, {"b", pair.inner.b}}},
           {"ratio", pair.ratio()}};
    emit(opt, j.dump(2) + "\n");
    return 0;
}

int cmd_transform_to_harmonic(const Options& opt) {
    HomotheticPair pair = opt.pair();
    HarmonicImage img = homothetic_to_harmonic(pair, opt.n);
    double delta = std::abs(img.symmedian - img.circumcircle.center);
    double lhs = delta * delta / (img.circumcircle.radius * img.circumcircle.radius);
    double rhs = 1.0 - (pair.inner.b / pair.inner.a) * (pair.inner.b / pair.inner.a);
    json j{{"schema_version", kSchemaVersion},
           {"n", opt.n},
           {"circumcenter", point_json(img.circumcircle.center)},
           {"circumradius", img.circumcircle.radius},
           {"caustic", {{"cx", img.caustic.cx}, {"a", img.caustic.a}, {"b", img.caustic.b}}},
           {"symmedian", point_json(img.symmedian)},
           {"delta_ratio_sq", lhs},
           {"delta_ratio_identity_err", std::abs(lhs - rhs)}};
    emit(opt, j.dump(2) + "\n");
    return std::abs(lhs - rhs) < 1e-12 ? 0 : kExitTolerance;
}

int cmd_transform_loop(const Options& opt) {
    json j{{"schema_version", kSchemaVersion}, {"n", opt.n}};
    if (!std::isnan(opt.omega)) {
        j["omega"] = opt.omega;
        j["x0_inversive"] = x0_from_omega(opt.n, opt.omega);
        j["affine_stretch"] = stretch_from_omega(opt.n, opt.omega);
    }
    if (!std::isnan(opt.ah) && !std::isnan(opt.bh)) {
        double x0c = x0_from_axes(std::max(opt.ah, opt.bh), std::min(opt.ah, opt.bh));
        j["x0_from_axes"] = x0c;
        j["x0_from_axes_reciprocal"] = 1.0 / x0c;
    }
    if (j.size() == 2)
        throw std::domain_error("loop needs --omega and/or --ah/--bh");
    emit(opt, j.dump(2) + "\n");
    return 0;
}

int cmd_plot(const Options& opt) {
    FamilySpec spec = opt.spec();
    std::string svg = opt.field ? render_omega_field_figure(spec, opt.resolution)
                                : render_family_figure(spec, opt.t);
    emit(opt, svg);
    return 0;
}

void apply_config_defaults(int argc, char** argv, Options& opt) {
    std::string path;
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--config") path = argv[i + 1];
    if (path.empty()) return;
    std::ifstream f(path);
    if (!f) throw std::domain_error("cannot read config file: " + path);
    json c = json::parse(f);
    if (c.contains("n")) opt.n = c["n"];
    if (c.contains("x0")) opt.x0 = c["x0"];
    if (c.contains("casey-d")) opt.casey_d = c["casey-d"];
    if (c.contains("ah")) opt.ah = c["ah"];
    if (c.contains("bh")) opt.bh = c["bh"];
    if (c.contains("t")) opt.t = c["t"];
    if (c.contains("samples")) opt.samples = c["samples"];
    if (c.contains("tol")) opt.tol = c["tol"];
    if (c.contains("format")) opt.format = c["format"];
    if (c.contains("out")) opt.out = c["out"];
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical laboratory for Poncelet harmonic polygon families"};
    app.require_subcommand(1);

    Options opt;
    std::string quantity;
    std::string config_path;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--n", opt.n, "polygon vertex count (>= 3)");
        cmd->add_option("--x0", opt.x0, "inversive-frame parameter, |x0| < 1");
        cmd->add_option("--casey-d", opt.casey_d, "Casey-frame parameter, |d| < 1");
        cmd->add_option("--ah", opt.ah, "inner homothetic semiaxis a");
        cmd->add_option("--bh", opt.bh, "inner homothetic semiaxis b");
        cmd->add_option("--t", opt.t, "family phase");
        cmd->add_option("--omega", opt.omega, "target Brocard angle");
        cmd->add_option("--samples", opt.samples, "sweep sample count");
        cmd->add_option("--tol", opt.tol, "closed-form check tolerance");
        cmd->add_option("--format", opt.format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--out", opt.out, "output path (default stdout)");
        cmd->add_option("--seed", opt.seed, "seed for randomized spot-checks");
        cmd->add_option("--config", config_path, "JSON config file (flags take precedence)");
        cmd->add_flag("--allow-negative", opt.allow_negative,
                      "keep a negative family parameter (mirrored configuration)");
    };

    auto* construct = app.add_subcommand("construct", "vertices + associated objects");
    add_common(construct);
    auto* invariants = app.add_subcommand("invariants", "invariant sweep reports");
    add_common(invariants);
    invariants->add_option("--quantity", quantity, "restrict to one quantity id");
    auto* conjectures = app.add_subcommand("conjectures", "conjecture tests");
    conjectures->require_subcommand(1);
    auto* area_sum = conjectures->add_subcommand("area-sum", "1/A1 + 1/A2 invariance");
    add_common(area_sum);
    auto* sin2theta = conjectures->add_subcommand("sin2theta", "sum sin(2 theta) ratios");
    add_common(sin2theta);
    auto* isocurves = conjectures->add_subcommand("isocurves", "Schoute-pencil isocurves");
    add_common(isocurves);
    auto* transform = app.add_subcommand("transform", "family maps");
    transform->require_subcommand(1);
    auto* to_homothetic = transform->add_subcommand("to-homothetic", "harmonic -> pair");
    add_common(to_homothetic);
    auto* to_harmonic = transform->add_subcommand("to-harmonic", "pair -> harmonic");
    add_common(to_harmonic);
    auto* loop = transform->add_subcommand("loop", "loop-closure parameter relations");
    add_common(loop);
    auto* plot = app.add_subcommand("plot", "SVG figures");
    add_common(plot);
    plot->add_flag("--omega-field", opt.field, "Brocard-angle heatmap instead of a family figure");
    plot->add_option("--resolution", opt.resolution, "field resolution (>= 16)");

    try {
        apply_config_defaults(argc, argv, opt);
        app.parse(argc, argv);

        if (construct->parsed()) return cmd_construct(opt);
        if (invariants->parsed()) return cmd_invariants(opt, quantity);
        if (area_sum->parsed()) return cmd_conjecture_area_sum(opt);
        if (sin2theta->parsed()) return cmd_conjecture_sin2theta(opt);
        if (isocurves->parsed()) return cmd_conjecture_isocurves(opt);
        if (to_homothetic->parsed()) return cmd_transform_to_homothetic(opt);
        if (to_harmonic->parsed()) return cmd_transform_to_harmonic(opt);
        if (loop->parsed()) return cmd_transform_loop(opt);
        if (plot->parsed()) return cmd_plot(opt);
        return kExitInvalid;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
}
