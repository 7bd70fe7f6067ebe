// Command-line front end: classify a single wall, print nef/movable cones,
// enumerate walls in a slice window (with JSON/SVG export), or evaluate the
// Bayer-Macri ray at a point of the slice.
//
// Mukai vectors are written "r,c,a" where c is the coefficient of H; the
// surface is Pic-rank-one with H^2 = 2d. Rationals accept "p/q" or decimals.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ogwalls/json_io.hpp"
#include "ogwalls/svg.hpp"

namespace {

using namespace ogwalls;

MukaiVector parse_vector(const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : text) {
        if (ch == ',') { parts.push_back(cur); cur.clear(); }
        else if (!std::isspace(static_cast<unsigned char>(ch))) cur += ch;
    }
    parts.push_back(cur);
    if (parts.size() != 3) throw InvalidArgument("Mukai vector must be 'r,c,a': " + text);
    try {
        return {Int(parts[0]), Int(parts[1]), Int(parts[2])};
    } catch (const std::exception&) {
        throw InvalidArgument("Mukai vector must be 'r,c,a': " + text);
    }
}

std::string vec_str(const MukaiVector& v) {
    return "(" + v.r.str() + "," + v.c.str() + "," + v.a.str() + ")";
}

std::string ray_str(const ConeRay& r) {
    std::string b = r.b < 0 ? " - " + Int(-r.b).str() + "B" : " + " + r.b.str() + "B";
    return r.h.str() + "H~" + b;
}

std::string curve_str(const WallCurve& c) {
    if (c.shape == CurveShape::VerticalLine) return "vertical line u = " + rat_to_string(c.line_u);
    if (c.shape == CurveShape::Circle) {
        return "circle center u = " + rat_to_string(c.center_u) +
               ", radius^2 = " + rat_to_string(c.radius_sq);
    }
    return "empty";
}

void print_classification(const WallClassification& cls) {
    std::cout << "curve: " << curve_str(cls.curve) << "\n";
    std::cout << "kind: " << to_string(cls.kind);
    if (cls.kind == WallKind::Divisorial) {
        std::cout << (cls.divisorial_lgu ? " (Brill-Noether + Li-Gieseker-Uhlenbeck)"
                                         : " (Brill-Noether)");
    }
    std::cout << "\n";
    if (cls.bn_witness) std::cout << "BN class: " << vec_str(*cls.bn_witness) << "\n";
    for (const auto& w : cls.lgu_witnesses) std::cout << "LGU class: " << vec_str(w) << "\n";
    for (const auto& w : cls.sc_witnesses) std::cout << "flopping class: " << vec_str(w) << "\n";
    if (cls.ts_witness) {
        std::cout << "totally semistable via: " << vec_str(*cls.ts_witness) << "\n";
    } else if (cls.ts_search_exhausted) {
        std::cout << "note: totally-semistable scan exhausted without a witness\n";
    }
}

int run(int argc, char** argv) {
    CLI::App app{"Wall classification for O'Grady-type moduli on Pic-rank-one K3 surfaces"};
    app.set_config("--config")->envname("OGWALLS_CONFIG");
    app.require_subcommand(1);

    std::string v_text = "2,0,-2";
    std::string w_text;
    std::string point_text;
    std::uint64_t d_val = 1;
    std::uint64_t ts_bound = 10000;
    std::uint64_t walls_ts_bound = 64;
    std::uint64_t rank_bound = 4, c_bound = 0, a_bound = 0;
    std::string u_min = "-2", u_max = "1", t_max = "3/2";
    std::string json_path, svg_path;

    auto* classify_cmd = app.add_subcommand("classify", "Classify the wall spanned by v and w");
    classify_cmd->add_option("-d,--degree", d_val, "Half-degree d (H^2 = 2d)")->capture_default_str();
    classify_cmd->add_option("-v,--vector", v_text, "Mukai vector v as r,c,a")->capture_default_str();
    classify_cmd->add_option("-w,--with", w_text, "Second generator as r,c,a")->required();
    classify_cmd->add_option("--ts-bound", ts_bound, "Scan bound for totally-semistable witnesses")
        ->capture_default_str();

    auto* cones_cmd = app.add_subcommand("cones", "Nef and movable cones of the moduli space");
    cones_cmd->add_option("-d,--degree", d_val, "Half-degree d (H^2 = 2d)")->capture_default_str();
    cones_cmd->add_option("-v,--vector", v_text, "Mukai vector v as r,c,a")->capture_default_str();

    auto* walls_cmd = app.add_subcommand("walls", "Enumerate walls meeting a slice window");
    walls_cmd->add_option("-d,--degree", d_val, "Half-degree d (H^2 = 2d)")->capture_default_str();
    walls_cmd->add_option("-v,--vector", v_text, "Mukai vector v as r,c,a")->capture_default_str();
    walls_cmd->add_option("--u-min", u_min, "Window left edge")->capture_default_str();
    walls_cmd->add_option("--u-max", u_max, "Window right edge")->capture_default_str();
    walls_cmd->add_option("--t-max", t_max, "Window height")->capture_default_str();
    walls_cmd->add_option("--rank-bound", rank_bound, "Generator rank scan bound")->capture_default_str();
    walls_cmd->add_option("--c-bound", c_bound, "Generator degree scan bound (0 = auto)")
        ->capture_default_str();
    walls_cmd->add_option("--a-bound", a_bound, "Generator a-part scan bound (0 = auto)")
        ->capture_default_str();
    walls_cmd
        ->add_option("--ts-bound", walls_ts_bound,
                     "Per-lattice scan bound for totally-semistable witnesses")
        ->capture_default_str();
    walls_cmd->add_option("--json", json_path, "Write the full report as JSON to this file");
    walls_cmd->add_option("--svg", svg_path, "Render the walls and cones as SVG to this file");

    auto* bm_cmd = app.add_subcommand("bm", "Bayer-Macri ray at a slice point");
    bm_cmd->add_option("-d,--degree", d_val, "Half-degree d (H^2 = 2d)")->capture_default_str();
    bm_cmd->add_option("-v,--vector", v_text, "Mukai vector v as r,c,a")->capture_default_str();
    bm_cmd->add_option("-p,--point", point_text, "Slice point as u,t (rationals)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    Surface surf{Int(d_val)};
    MukaiVector v = parse_vector(v_text);

    if (classify_cmd->parsed()) {
        MukaiVector w = parse_vector(w_text);
        WallLattice lat = make_wall_lattice(v, w, surf);
        std::cout << "lattice normal: " << vec_str(lat.normal) << "\n";
        std::cout << "basis: " << vec_str(lat.basis[0]) << ", " << vec_str(lat.basis[1]) << "\n";
        std::cout << "gram: [[" << lat.gram[0][0] << "," << lat.gram[0][1] << "],["
                  << lat.gram[1][0] << "," << lat.gram[1][1] << "]]\n";
        print_classification(classify_wall(lat, Int(ts_bound)));
        return 0;
    }

    if (cones_cmd->parsed()) {
        auto m = normal_form_twist(v, surf);
        if (!m) throw UnsupportedVector();
        if (*m != 0) {
            std::cout << "(computed for the normal form exp(" << *m << "H) . v = (2,0,-2))\n";
        }
        ConeResult mov = movable_cone(surf);
        ConeResult nef = nef_cone(surf);
        std::cout << "movable cone: < H~, " << ray_str(mov.right) << " >"
                  << (mov.kind == ConeCase::PerfectSquare ? " (square-zero boundary)" : "")
                  << "\n";
        std::cout << "nef cone:     < H~, " << ray_str(nef.right) << " >";
        if (nef.kind == ConeCase::NoFloppingWall) std::cout << " (no flopping wall; = movable)";
        if (nef.witness) std::cout << " via spherical " << vec_str(*nef.witness);
        std::cout << "\n";
        if (auto sq = square_zero_class(surf)) {
            std::cout << "square-zero class: " << ray_str(*sq) << " (Lagrangian fibration)\n";
        } else {
            std::cout << "square-zero class: none (d is not a perfect square)\n";
        }
        return 0;
    }

    if (walls_cmd->parsed()) {
        Window win{rat_from_string(u_min), rat_from_string(u_max), rat_from_string(t_max)};
        EnumBounds bounds{Int(rank_bound), Int(c_bound), Int(a_bound)};
        WallReport rep{surf, v, win, bounds,
                       enumerate_walls(v, surf, win, bounds, Int(walls_ts_bound))};
        std::cout << "found " << rep.walls.size() << " potential wall(s) in ["
                  << rat_to_string(win.u_min) << ", " << rat_to_string(win.u_max) << "]\n";
        for (const auto& rec : rep.walls) {
            std::cout << "- " << curve_str(rec.curve) << ": "
                      << to_string(rec.classification.kind);
            if (rec.classification.kind == WallKind::Divisorial &&
                rec.classification.divisorial_lgu) {
                std::cout << " (+LGU)";
            }
            std::cout << "\n";
        }
        if (!json_path.empty()) {
            std::ofstream out(json_path);
            if (!out) throw InvalidArgument("cannot open " + json_path);
            out << report_to_string(rep) << "\n";
            std::cout << "wrote " << json_path << "\n";
        }
        if (!svg_path.empty()) {
            std::ofstream out(svg_path);
            if (!out) throw InvalidArgument("cannot open " + svg_path);
            out << render_walls_svg(rep);
            std::cout << "wrote " << svg_path << "\n";
        }
        return 0;
    }

    // bm
    auto comma = point_text.find(',');
    if (comma == std::string::npos) throw InvalidArgument("point must be 'u,t'");
    SlicePoint pt{rat_from_string(point_text.substr(0, comma)),
                  rat_from_string(point_text.substr(comma + 1))};
    auto m = normal_form_twist(v, surf);
    BMImage img = bm_ray(v, surf, pt);
    std::cout << "w_sigma = (" << rat_to_string(img.w_sigma[0]) << ", "
              << rat_to_string(img.w_sigma[1]) << ", " << rat_to_string(img.w_sigma[2]) << ")\n";
    std::cout << "q(w_sigma) = " << rat_to_string(img.q_value) << "\n";
    if (m && !img.ns_coords) {
        // Twist to the normal form and shift the point accordingly: walls and
        // rays of v at u match those of (2,0,-2) at u + m.
        Rat mm(*m);
        img = bm_ray({2, 0, -2}, surf, SlicePoint{pt.u + mm, pt.t});
        std::cout << "(NS coordinates via the normal-form twist exp(" << *m << "H))\n";
    }
    if (img.ns_coords) {
        const auto& ns = *img.ns_coords;
        std::cout << "NS ray: " << rat_to_string(ns[0]) << " H~ + " << rat_to_string(ns[1])
                  << " B\n";
        if (auto sl = img.slope()) {
            std::cout << "slope: " << rat_to_string(*sl) << "\n";
            ConeResult mov = movable_cone(surf);
            ConeResult nef = nef_cone(surf);
            Rat lam_nef = nef.right.slope(), lam_mov = mov.right.slope();
            std::string chamber;
            if (*sl < 0 || *sl > lam_mov) chamber = "outside the movable cone";
            else if (*sl < lam_nef) chamber = "interior of the nef cone";
            else if (*sl == lam_nef) chamber = "on the nef boundary";
            else if (*sl == lam_mov) chamber = "on the movable boundary";
            else chamber = "movable but not nef";
            std::cout << "chamber: " << chamber << " (nef slope " << rat_to_string(lam_nef)
                      << ", movable slope " << rat_to_string(lam_mov) << ")\n";
        }
    } else {
        std::cout << "NS coordinates unavailable: v is not twistable to (2,0,-2)\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ogwalls::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
