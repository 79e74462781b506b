#pragma once

#include <string>

#include "harmonic/isocurves.hpp"

// Minimal deterministic SVG 1.1 writer: fixed viewBox, all coordinates
// rounded to 6 decimals, no timestamps. Identical input produces
// byte-identical output.

namespace harmonic {

class SvgCanvas {
  public:
    // World-coordinate window; rendered into a width x height pixel viewBox
    // with y flipped upward.
    SvgCanvas(BBox world, int width = 800, int height = 800);

    void add_circle(const Circle& c, const std::string& stroke,
                    const std::string& dash = "");
    void add_ellipse(const AxisEllipse& e, const std::string& stroke,
                     const std::string& dash = "");
    void add_polygon(const Polygon& p, const std::string& stroke,
                     const std::string& fill = "none");
    void add_polyline(const std::vector<CPoint>& pts, const std::string& stroke);
    void add_segment(CPoint a, CPoint b, const std::string& stroke,
                     const std::string& dash = "");
    void add_point(CPoint p, const std::string& fill, double px_radius = 3.0);
    void add_label(CPoint p, const std::string& text);
    // Grayscale heatmap cell grid for a scalar field; masked nodes are skipped.
    void add_heatmap(const OmegaField& field);

    std::string str() const;

  private:
    CPoint to_view(CPoint w) const;
    double scale() const;

    BBox world_;
    int width_, height_;
    std::string body_;
};

// Figure builders used by the CLI.
std::string render_family_figure(const FamilySpec& spec, double t);
std::string render_omega_field_figure(const FamilySpec& spec, int resolution);

}  // namespace harmonic
