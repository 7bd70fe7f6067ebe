#include <catch_amalgamated.hpp>

#include "ogwalls/json_io.hpp"
#include "ogwalls/svg.hpp"

using namespace ogwalls;

TEST_CASE("rational string forms") {
    CHECK(rat_to_string(Rat(5, 4)) == "5/4");
    CHECK(rat_to_string(Rat(-3)) == "-3");
    CHECK(rat_from_string("5/4") == Rat(5, 4));
    CHECK(rat_from_string("-3") == Rat(-3));
    CHECK(rat_from_string("-1.5") == Rat(-3, 2));
    CHECK(rat_from_string("0.25") == Rat(1, 4));
    CHECK(rat_from_string(rat_to_string(Rat(-123456789, 987))) == Rat(-123456789, 987));
    CHECK_THROWS_AS(rat_from_string(""), InvalidArgument);
    CHECK_THROWS_AS(rat_from_string("x/y"), InvalidArgument);
    CHECK_THROWS_AS(rat_from_string("1/0"), InvalidArgument);
}

TEST_CASE("JSON report round-trip") {
    Surface s{1};
    Window win;
    EnumBounds bounds;
    WallReport rep{s, {2, 0, -2}, win, bounds,
                   enumerate_walls({2, 0, -2}, s, win, bounds)};
    REQUIRE(!rep.walls.empty());
    std::string text = report_to_string(rep);
    WallReport back = report_from_string(text);
    CHECK(back == rep);
    // Serialization is deterministic.
    CHECK(report_to_string(back) == text);
    // Header fields.
    auto j = nlohmann::json::parse(text);
    CHECK(j.at("schema").get<int>() == kSchemaVersion);
    CHECK(j.at("tool_version").get<std::string>() == kToolVersion);
    CHECK(j.at("d").get<std::string>() == "1");
}

TEST_CASE("JSON survives big integers") {
    // Curves with coefficients far beyond 64 bits.
    Int big = Int("123456789012345678901234567890123456789");
    WallCurve c = detail::curve_from_coefficients(1, 0, -big * big);
    nlohmann::json j = detail::curve_json(c);
    WallCurve back = detail::curve_from(j);
    CHECK(back == c);
    CHECK(back.radius_sq == Rat(big * big));
}

TEST_CASE("schema version is enforced") {
    nlohmann::json j = {{"schema", 99}};
    CHECK_THROWS_AS(report_from_json(j), InvalidArgument);
}

TEST_CASE("SVG rendering is deterministic and well-formed") {
    Surface s{1};
    Window win{-2, 2, Rat(3, 2)};
    WallReport rep{s, {2, 2, 0}, win, {}, enumerate_walls({2, 2, 0}, s, win)};
    std::string svg1 = render_walls_svg(rep);
    std::string svg2 = render_walls_svg(rep);
    CHECK(svg1 == svg2);
    CHECK(svg1.rfind("<svg", 0) == 0);
    CHECK(svg1.find("</svg>") != std::string::npos);
    CHECK(svg1.find("stroke-width=\"2\"") != std::string::npos);
    CHECK(svg1.find("nef and movable cones") != std::string::npos);
    CHECK(svg1.find("divisorial") != std::string::npos);
    CHECK(svg1.find("flopping") != std::string::npos);
}
