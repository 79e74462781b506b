#pragma once

#include <functional>
#include <optional>
#include <string>

#include "harmonic/family.hpp"

// Sweep-based verification of conserved quantities, with closed forms where
// the theory supplies them. All measured sweeps run in the Casey frame
// (unit circumcircle), the frame the closed forms are written in.

namespace harmonic {

enum class Verdict { Invariant, Varies, Zero, Inconclusive };

const char* to_string(Verdict v);

struct InvariantReport {
    std::string quantity;
    std::optional<double> closed_form;
    std::vector<double> samples;
    double mean = 0.0;
    double max_abs_dev = 0.0;   // max |sample - mean|
    double relative_dev = 0.0;  // max_abs_dev / max(|mean|, scale_floor)
    Verdict verdict = Verdict::Inconclusive;
    // When a closed form is present: max |sample - closed_form| relative.
    std::optional<double> closed_form_rel_err;
};

// Verdict thresholds. A quantity is Invariant below the tight threshold,
// Varies above the loose one; in between the sweep is refined x4 once and,
// if still in between, reported Inconclusive.
inline constexpr double kInvariantTol = 1e-8;
inline constexpr double kVariesTol = 1e-4;
inline constexpr double kScaleFloor = 1e-12;
inline constexpr double kZeroTol = 1e-9;

// Evaluates fn over a uniform grid of `samples` phases spanning one Poncelet
// period and classifies the result. Statistics use compensated summation so
// reruns are bit-identical regardless of evaluation order.
InvariantReport sweep_quantity(const std::string& name,
                               const std::function<double(double)>& fn,
                               double period, int samples,
                               std::optional<double> closed_form = std::nullopt);

// Closed forms (Casey frame, unit circumcircle).
double sum_inv_sq_sides_closed(int n, double d);
double sum_inv_sq_apollonius_closed(int n, double d);
double cot_theta_closed(int n, double d, double t, int k);  // k = 1..N
double cot_sum_closed(int n, double d);
double cot_sq_sum_closed(int n, double d);

// Radii of the generalized Apollonius circles (through vertex w_k and both
// limiting points). A vertex collinear with the limiting points yields an
// infinite radius (the circle degenerates to a line).
std::vector<double> apollonius_radii(const PolygonSnapshot& p, CPoint l1, CPoint l2);
double sum_inv_sq_apollonius_measured(const PolygonSnapshot& p, CPoint l1, CPoint l2);

// Elementary symmetric functions e_1..e_N of (x_1..x_N).
std::vector<double> elementary_symmetric_values(const std::vector<double>& x);

// Sweep reports.
InvariantReport sum_inv_sq_sides(const FamilySpec& spec, int samples = 256);
InvariantReport sum_inv_sq_apollonius(const FamilySpec& spec, int samples = 256);
std::vector<InvariantReport> cot_power_sums(const FamilySpec& spec, int kmax = 0,
                                            int samples = 256);  // kmax 0 -> N+2
std::vector<InvariantReport> elementary_symmetric(const FamilySpec& spec,
                                                  int samples = 256);
std::vector<InvariantReport> ratio_invariants(const FamilySpec& spec,
                                              int samples = 256);
// Negative controls: Area and Perimeter (both vary for d != 0).
std::vector<InvariantReport> negative_controls(const FamilySpec& spec,
                                               int samples = 256);

std::vector<InvariantReport> all_reports(const FamilySpec& spec, int samples = 256);

}  // namespace harmonic
