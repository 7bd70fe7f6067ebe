#pragma once

#include <optional>
#include <set>
#include <vector>

#include "ogwalls/classify.hpp"

namespace ogwalls {

/// Rectangle of the slice that enumeration reports on. Only the u-extent
/// matters for pruning: every circle and vertical line reaches down to t -> 0.
struct Window {
    Rat u_min{-2};
    Rat u_max{1};
    Rat t_max{Rat(3, 2)};

    void validate() const {
        if (u_min >= u_max || t_max <= 0) throw WindowEmpty();
    }
};

/// Search box for generator vectors w = (r', c', a'). Zero c/a bounds mean
/// "derive from the rank bound"; the defaults comfortably cover every wall
/// whose curve meets a unit-scale window for small d.
struct EnumBounds {
    Int rank_bound{4};
    Int c_bound{0};
    Int a_bound{0};

    Int effective_c() const { return c_bound > 0 ? c_bound : 8 * (rank_bound + 1); }
    Int effective_a() const { return a_bound > 0 ? a_bound : 16 * (rank_bound + 1); }
};

struct WallRecord {
    WallCurve curve;
    WallLattice lattice;
    WallClassification classification;
};

namespace detail {

inline bool curve_meets_window(const WallCurve& w, const Window& win) {
    if (w.shape == CurveShape::VerticalLine) {
        return win.u_min <= w.line_u && w.line_u <= win.u_max;
    }
    if (w.shape != CurveShape::Circle) return false;
    // [center - r, center + r] overlaps [u_min, u_max], compared via squares
    // to avoid the square root.
    auto radius_reaches = [&](const Rat& gap) {
        return gap <= 0 || gap * gap <= w.radius_sq;
    };
    return radius_reaches(win.u_min - w.center_u) && radius_reaches(w.center_u - win.u_max);
}

} // namespace detail

/// All distinct potential walls of v whose curve meets the window, found by
/// scanning generator vectors over the bound box, deduplicated by the
/// canonical primitive normal of the spanned lattice, classified, and sorted
/// left to right (by position, then shape, then radius).
inline std::vector<WallRecord> enumerate_walls(const MukaiVector& v, const Surface& s,
                                               const Window& win = {},
                                               const EnumBounds& bounds = {},
                                               // Smaller default than classify_wall's: the scan
                                               // runs once per lattice and genuine totally
                                               // semistable witnesses have tiny coordinates.
                                               const Int& ts_search_bound = 64) {
    win.validate();
    if (!is_ogrady_type(v, s)) throw NotOGradyType();
    if (bounds.rank_bound < 0) throw InvalidArgument("rank bound must be non-negative");

    std::set<MukaiVector> seen;
    std::vector<WallRecord> out;
    const Int rb = bounds.rank_bound, cb = bounds.effective_c(), ab = bounds.effective_a();
    for (Int r = -rb; r <= rb; ++r) {
        for (Int c = -cb; c <= cb; ++c) {
            for (Int a = -ab; a <= ab; ++a) {
                MukaiVector w{r, c, a};
                MukaiVector n = detail::cross(v, w);
                if (n.is_zero()) continue;
                n = detail::sign_normalize(detail::make_primitive(n));
                if (!seen.insert(n).second) continue;
                WallCurve curve = numerical_wall(v, w, s);
                if (!detail::curve_meets_window(curve, win)) continue;
                std::optional<WallLattice> lat;
                try {
                    lat = make_wall_lattice(v, w, s);
                } catch (const NotHyperbolic&) {
                    // Positive semi-definite span: no wall points at all.
                    continue;
                }
                out.push_back({curve, *lat, classify_wall(*lat, ts_search_bound)});
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const WallRecord& x, const WallRecord& y) {
        if (x.curve.position() != y.curve.position())
            return x.curve.position() < y.curve.position();
        if (x.curve.shape != y.curve.shape) return x.curve.shape < y.curve.shape;
        return x.curve.radius_sq < y.curve.radius_sq;
    });
    return out;
}

} // namespace ogwalls
