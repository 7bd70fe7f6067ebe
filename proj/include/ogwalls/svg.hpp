#pragma once

#include <cmath>
#include <cstdio>
#include <string>

#include "ogwalls/cones.hpp"
#include "ogwalls/json_io.hpp"

namespace ogwalls {

namespace detail {

inline std::string fmt6(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return buf;
}

inline double rat_d(const Rat& q) { return q.convert_to<double>(); }

inline const char* kind_color(WallKind k) {
    switch (k) {
        case WallKind::Divisorial: return "#c0392b";
        case WallKind::Flopping: return "#2980b9";
        case WallKind::Fake: return "#8e44ad";
        case WallKind::NotAWall: return "#d0d0d0";
    }
    return "#000000";
}

} // namespace detail

/// Deterministic SVG of an enumeration run: the wall curves in the slice
/// window on the left, the nef/movable fan in the (H~, B)-plane on the right.
/// All coordinates are printed with %.6g so identical inputs give identical
/// bytes.
inline std::string render_walls_svg(const WallReport& rep) {
    using detail::fmt6;
    using detail::rat_d;

    const double plot_w = 520, plot_h = 320, margin = 45, fan_w = 260;
    const double width = plot_w + fan_w + 3 * margin, height = plot_h + 2 * margin;
    double u0 = rat_d(rep.window.u_min), u1 = rat_d(rep.window.u_max);
    double t1 = rat_d(rep.window.t_max);
    double sx = plot_w / (u1 - u0), sy = plot_h / t1;
    auto X = [&](double u) { return margin + (u - u0) * sx; };
    auto Y = [&](double t) { return margin + plot_h - t * sy; };

    std::string svg;
    auto add = [&](const std::string& s) { svg += s; };
    add("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt6(width) + "\" height=\"" +
        fmt6(height) + "\" viewBox=\"0 0 " + fmt6(width) + " " + fmt6(height) + "\">\n");
    add("<rect x=\"0\" y=\"0\" width=\"" + fmt6(width) + "\" height=\"" + fmt6(height) +
        "\" fill=\"white\"/>\n");
    // Slice frame and axis.
    add("<rect x=\"" + fmt6(margin) + "\" y=\"" + fmt6(margin) + "\" width=\"" + fmt6(plot_w) +
        "\" height=\"" + fmt6(plot_h) + "\" fill=\"none\" stroke=\"#333\"/>\n");
    add("<text x=\"" + fmt6(margin + plot_w / 2) + "\" y=\"" + fmt6(height - 10) +
        "\" font-size=\"12\" text-anchor=\"middle\">u (beta = uH)</text>\n");
    add("<text x=\"14\" y=\"" + fmt6(margin + plot_h / 2) +
        "\" font-size=\"12\" text-anchor=\"middle\" transform=\"rotate(-90 14 " +
        fmt6(margin + plot_h / 2) + ")\">t (omega = tH)</text>\n");

    for (const auto& rec : rep.walls) {
        const WallCurve& c = rec.curve;
        std::string color = detail::kind_color(rec.classification.kind);
        bool faint = rec.classification.kind == WallKind::NotAWall;
        std::string stroke = "stroke=\"" + color + "\" stroke-width=\"" +
                             (faint ? std::string("1") : std::string("2")) + "\" fill=\"none\"";
        if (c.shape == CurveShape::VerticalLine) {
            double x = X(rat_d(c.line_u));
            add("<line x1=\"" + fmt6(x) + "\" y1=\"" + fmt6(Y(0)) + "\" x2=\"" + fmt6(x) +
                "\" y2=\"" + fmt6(Y(t1)) + "\" " + stroke + "/>\n");
        } else if (c.shape == CurveShape::Circle) {
            double cc = rat_d(c.center_u);
            double r = std::sqrt(rat_d(c.radius_sq));
            // Semicircle as an elliptical arc: the x- and y-scales differ, so
            // the drawn radii do too.
            add("<path d=\"M " + fmt6(X(cc - r)) + " " + fmt6(Y(0)) + " A " + fmt6(r * sx) + " " +
                fmt6(r * sy) + " 0 0 1 " + fmt6(X(cc + r)) + " " + fmt6(Y(0)) + "\" " + stroke +
                "/>\n");
        }
    }

    // Legend.
    struct LegendEntry { WallKind kind; const char* label; };
    const LegendEntry legend[] = {{WallKind::Divisorial, "divisorial"},
                                  {WallKind::Flopping, "flopping"},
                                  {WallKind::Fake, "fake"},
                                  {WallKind::NotAWall, "not a wall"}};
    double ly = margin + 14;
    for (const auto& e : legend) {
        add("<line x1=\"" + fmt6(margin + 8) + "\" y1=\"" + fmt6(ly) + "\" x2=\"" +
            fmt6(margin + 32) + "\" y2=\"" + fmt6(ly) + "\" stroke=\"" +
            detail::kind_color(e.kind) + "\" stroke-width=\"2\"/>\n");
        add("<text x=\"" + fmt6(margin + 38) + "\" y=\"" + fmt6(ly + 4) +
            "\" font-size=\"11\">" + e.label + "</text>\n");
        ly += 16;
    }

    // Fan panel: rays h H~ + b B drawn in the (H~, B)-plane, H~ to the right.
    double fx0 = plot_w + 2 * margin, fy0 = margin + plot_h / 2;
    double fscale = fan_w * 0.45;
    add("<text x=\"" + fmt6(fx0 + fan_w / 2) + "\" y=\"" + fmt6(margin - 14) +
        "\" font-size=\"12\" text-anchor=\"middle\">nef and movable cones</text>\n");
    auto draw_ray = [&](const ConeRay& ray, const char* color, const char* label, double ty) {
        double h = ray.h.convert_to<double>(), b = ray.b.convert_to<double>();
        double len = std::sqrt(h * h + b * b);
        double ex = fx0 + fscale * h / len, ey = fy0 - fscale * b / len;
        add("<line x1=\"" + fmt6(fx0) + "\" y1=\"" + fmt6(fy0) + "\" x2=\"" + fmt6(ex) +
            "\" y2=\"" + fmt6(ey) + "\" stroke=\"" + color + "\" stroke-width=\"2\"/>\n");
        add("<text x=\"" + fmt6(ex + 4) + "\" y=\"" + fmt6(ey + ty) + "\" font-size=\"11\">" +
            label + "</text>\n");
    };
    Surface s = rep.surface;
    ConeResult mov = movable_cone(s);
    ConeResult nef = nef_cone(s);
    draw_ray(mov.left, "#333333", "H~", -4);
    auto ray_label = [](const ConeRay& r) {
        return r.h.str() + "H~ " + (r.b < 0 ? "- " + Int(-r.b).str() : "+ " + r.b.str()) + "B";
    };
    std::string mov_label = "mov: " + ray_label(mov.right);
    std::string nef_label = "nef: " + ray_label(nef.right);
    draw_ray(mov.right, "#27ae60", mov_label.c_str(), 12);
    if (nef.right == mov.right) {
        add("<text x=\"" + fmt6(fx0) + "\" y=\"" + fmt6(fy0 + fscale + 28) +
            "\" font-size=\"11\">" + nef_label + " (= mov)</text>\n");
    } else {
        draw_ray(nef.right, "#e67e22", nef_label.c_str(), 12);
    }
    add("</svg>\n");
    return svg;
}

} // namespace ogwalls
