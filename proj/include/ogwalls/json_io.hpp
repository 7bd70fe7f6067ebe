#pragma once

#include <string>

#include <json.hpp>

#include "ogwalls/walls.hpp"

namespace ogwalls {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

/// Everything one `walls` run produced, as written to and read from disk.
struct WallReport {
    Surface surface{1};
    MukaiVector v;
    Window window;
    EnumBounds bounds;
    std::vector<WallRecord> walls;
};

inline bool operator==(const WallLattice& x, const WallLattice& y) {
    return x.basis == y.basis && x.gram == y.gram && x.v_coords == y.v_coords &&
           x.surface.d == y.surface.d && x.normal == y.normal;
}

inline bool operator==(const WallClassification& x, const WallClassification& y) {
    return x.kind == y.kind && x.divisorial_lgu == y.divisorial_lgu && x.curve == y.curve &&
           x.bn_witness == y.bn_witness && x.lgu_witnesses == y.lgu_witnesses &&
           x.sc_witnesses == y.sc_witnesses && x.ts_witness == y.ts_witness &&
           x.ts_search_exhausted == y.ts_search_exhausted;
}

inline bool operator==(const WallRecord& x, const WallRecord& y) {
    return x.curve == y.curve && x.lattice == y.lattice && x.classification == y.classification;
}

inline bool operator==(const WallReport& x, const WallReport& y) {
    return x.surface.d == y.surface.d && x.v == y.v && x.window.u_min == y.window.u_min &&
           x.window.u_max == y.window.u_max && x.window.t_max == y.window.t_max &&
           x.bounds.rank_bound == y.bounds.rank_bound && x.bounds.c_bound == y.bounds.c_bound &&
           x.bounds.a_bound == y.bounds.a_bound && x.walls == y.walls;
}

namespace detail {

using Json = nlohmann::json;

// Integers and rationals travel as decimal strings so arbitrary precision
// survives the round trip.
inline Json int_json(const Int& x) { return x.str(); }
inline Int int_from(const Json& j) { return Int(j.get<std::string>()); }
inline Json rat_json(const Rat& x) { return rat_to_string(x); }
inline Rat rat_from(const Json& j) { return rat_from_string(j.get<std::string>()); }

inline Json vec_json(const MukaiVector& v) {
    return Json::array({int_json(v.r), int_json(v.c), int_json(v.a)});
}
inline MukaiVector vec_from(const Json& j) {
    return {int_from(j.at(0)), int_from(j.at(1)), int_from(j.at(2))};
}

inline const char* shape_name(CurveShape s) {
    switch (s) {
        case CurveShape::Circle: return "circle";
        case CurveShape::VerticalLine: return "vertical-line";
        case CurveShape::Empty: return "empty";
        case CurveShape::Degenerate: return "degenerate";
    }
    return "?";
}

inline Json curve_json(const WallCurve& w) {
    Json j{{"alpha", int_json(w.alpha)},
           {"beta", int_json(w.beta)},
           {"gamma", int_json(w.gamma)},
           {"shape", shape_name(w.shape)}};
    if (w.shape == CurveShape::Circle) {
        j["center_u"] = rat_json(w.center_u);
        j["radius_sq"] = rat_json(w.radius_sq);
    } else if (w.shape == CurveShape::VerticalLine) {
        j["line_u"] = rat_json(w.line_u);
    }
    return j;
}

inline WallCurve curve_from(const Json& j) {
    return curve_from_coefficients(int_from(j.at("alpha")), int_from(j.at("beta")),
                                   int_from(j.at("gamma")));
}

inline Json lattice_json(const WallLattice& L) {
    return {{"basis", Json::array({vec_json(L.basis[0]), vec_json(L.basis[1])})},
            {"gram", Json::array({Json::array({int_json(L.gram[0][0]), int_json(L.gram[0][1])}),
                                  Json::array({int_json(L.gram[1][0]), int_json(L.gram[1][1])})})},
            {"v_coords", Json::array({int_json(L.v_coords[0]), int_json(L.v_coords[1])})},
            {"normal", vec_json(L.normal)}};
}

inline WallLattice lattice_from(const Json& j, const Surface& s) {
    WallLattice L{{vec_from(j.at("basis").at(0)), vec_from(j.at("basis").at(1))},
                  {{{int_from(j.at("gram").at(0).at(0)), int_from(j.at("gram").at(0).at(1))},
                    {int_from(j.at("gram").at(1).at(0)), int_from(j.at("gram").at(1).at(1))}}},
                  {int_from(j.at("v_coords").at(0)), int_from(j.at("v_coords").at(1))},
                  s,
                  vec_from(j.at("normal"))};
    return L;
}

inline Json classification_json(const WallClassification& c) {
    Json j{{"kind", to_string(c.kind)},
           {"divisorial_lgu", c.divisorial_lgu},
           {"curve", curve_json(c.curve)},
           {"ts_search_exhausted", c.ts_search_exhausted}};
    if (c.bn_witness) j["bn_witness"] = vec_json(*c.bn_witness);
    if (c.ts_witness) j["ts_witness"] = vec_json(*c.ts_witness);
    Json lgu = Json::array(), sc = Json::array();
    for (const auto& w : c.lgu_witnesses) lgu.push_back(vec_json(w));
    for (const auto& w : c.sc_witnesses) sc.push_back(vec_json(w));
    j["lgu_witnesses"] = lgu;
    j["sc_witnesses"] = sc;
    return j;
}

inline WallKind kind_from(const std::string& name) {
    if (name == "not-a-wall") return WallKind::NotAWall;
    if (name == "fake") return WallKind::Fake;
    if (name == "flopping") return WallKind::Flopping;
    if (name == "divisorial") return WallKind::Divisorial;
    throw InvalidArgument("unknown wall kind: " + name);
}

inline WallClassification classification_from(const Json& j) {
    WallClassification c;
    c.kind = kind_from(j.at("kind").get<std::string>());
    c.divisorial_lgu = j.at("divisorial_lgu").get<bool>();
    c.curve = curve_from(j.at("curve"));
    c.ts_search_exhausted = j.at("ts_search_exhausted").get<bool>();
    if (j.contains("bn_witness")) c.bn_witness = vec_from(j.at("bn_witness"));
    if (j.contains("ts_witness")) c.ts_witness = vec_from(j.at("ts_witness"));
    for (const auto& w : j.at("lgu_witnesses")) c.lgu_witnesses.push_back(vec_from(w));
    for (const auto& w : j.at("sc_witnesses")) c.sc_witnesses.push_back(vec_from(w));
    return c;
}

} // namespace detail

inline nlohmann::json report_to_json(const WallReport& rep) {
    using detail::Json;
    Json walls = Json::array();
    for (const auto& w : rep.walls) {
        walls.push_back({{"curve", detail::curve_json(w.curve)},
                         {"lattice", detail::lattice_json(w.lattice)},
                         {"classification", detail::classification_json(w.classification)}});
    }
    return {{"schema", kSchemaVersion},
            {"tool_version", kToolVersion},
            {"d", detail::int_json(rep.surface.d)},
            {"v", detail::vec_json(rep.v)},
            {"window",
             {{"u_min", detail::rat_json(rep.window.u_min)},
              {"u_max", detail::rat_json(rep.window.u_max)},
              {"t_max", detail::rat_json(rep.window.t_max)}}},
            {"bounds",
             {{"rank_bound", detail::int_json(rep.bounds.rank_bound)},
              {"c_bound", detail::int_json(rep.bounds.c_bound)},
              {"a_bound", detail::int_json(rep.bounds.a_bound)}}},
            {"walls", walls}};
}

inline WallReport report_from_json(const nlohmann::json& j) {
    if (j.at("schema").get<int>() != kSchemaVersion) {
        throw InvalidArgument("unsupported schema version");
    }
    WallReport rep{Surface{detail::int_from(j.at("d"))}, detail::vec_from(j.at("v")), {}, {}, {}};
    const auto& win = j.at("window");
    rep.window.u_min = detail::rat_from(win.at("u_min"));
    rep.window.u_max = detail::rat_from(win.at("u_max"));
    rep.window.t_max = detail::rat_from(win.at("t_max"));
    const auto& b = j.at("bounds");
    rep.bounds.rank_bound = detail::int_from(b.at("rank_bound"));
    rep.bounds.c_bound = detail::int_from(b.at("c_bound"));
    rep.bounds.a_bound = detail::int_from(b.at("a_bound"));
    for (const auto& w : j.at("walls")) {
        rep.walls.push_back({detail::curve_from(w.at("curve")),
                             detail::lattice_from(w.at("lattice"), rep.surface),
                             detail::classification_from(w.at("classification"))});
    }
    return rep;
}

inline std::string report_to_string(const WallReport& rep) { return report_to_json(rep).dump(2); }

inline WallReport report_from_string(const std::string& text) {
    return report_from_json(nlohmann::json::parse(text));
}

} // namespace ogwalls
