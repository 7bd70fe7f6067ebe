#pragma once

#include <optional>

#include "ogwalls/pell.hpp"
#include "ogwalls/lattice.hpp"

namespace ogwalls {

/// Ray h*H~ + b*B in the positive cone of NS(M), stored primitive with h >= 0.
/// H~ and B are the distinguished classes on the moduli space attached to the
/// normal-form vector (2, 0, -2): H~ comes from the polarization, B is half
/// the class of the exceptional (symmetric) divisor direction.
struct ConeRay {
    Int h;
    Int b;

    static ConeRay normalized(Int h, Int b) {
        using boost::multiprecision::abs;
        using boost::multiprecision::gcd;
        Int g = gcd(abs(h), abs(b));
        if (g > 1) { h /= g; b /= g; }
        if (h < 0 || (h == 0 && b < 0)) { h = -h; b = -b; }
        return {std::move(h), std::move(b)};
    }

    /// Slope -b/h measuring the angle away from H~; 0 on H~ itself.
    Rat slope() const {
        if (h == 0) throw InvalidArgument("slope of a ray with h = 0");
        return Rat(-b, h);
    }

    friend bool operator==(const ConeRay& x, const ConeRay& y) {
        return x.h == y.h && x.b == y.b;
    }
};

/// Mukai-lattice preimages of the NS(M) basis for v = (2, 0, -2), with the
/// induced intersection form diag(2d, -2).
struct NSBasis {
    MukaiVector h_tilde{0, -1, 0};
    MukaiVector b{-1, 0, -1};

    std::array<std::array<Int, 2>, 2> gram(const Surface& s) const {
        return {{{pairing(h_tilde, h_tilde, s), pairing(h_tilde, b, s)},
                 {pairing(h_tilde, b, s), pairing(b, b, s)}}};
    }
};

/// NS(M) ray cut out by the rank-two lattice <v, s>: the primitive generator
/// of {x : (x, v) = (x, s) = 0}, expressed in the (H~, B) basis. Requires v in
/// the (2, 0, -2) normal form so that the basis applies.
inline ConeRay orthogonal_ray(const MukaiVector& v, const MukaiVector& s, const Surface& surf) {
    if (v != MukaiVector{2, 0, -2}) throw UnsupportedVector();
    // Row of the linear form (x, .) in plain (r, c, a) coordinates.
    auto form_row = [&](const MukaiVector& x) {
        return MukaiVector{-x.a, 2 * surf.d * x.c, -x.r};
    };
    MukaiVector w = detail::cross(form_row(v), form_row(s));
    if (w.is_zero()) throw NotRankTwo();
    w = detail::make_primitive(w);
    // (w, v) = 0 forces w.r = w.a, so w = (-w.c) H~ + (-w.r) B.
    return ConeRay::normalized(-w.c, -w.r);
}

/// Which Pell equation produced the non-polarization boundary ray.
enum class ConeCase { PerfectSquare, BNPell, LGUPell, NoFloppingWall };

struct ConeResult {
    ConeRay left{1, 0}; // the polarization ray H~
    ConeRay right;
    ConeCase kind;
    std::optional<MukaiVector> witness; // spherical class cutting the right boundary
    bool both_sc_solvable = false;      // nef only: both flopping equations had solutions
};

/// Square-zero boundary ray H~ - k B, present exactly when d = k^2 (the
/// movable cone then ends on an isotropic class and M has a Lagrangian
/// fibration model).
inline std::optional<ConeRay> square_zero_class(const Surface& s) {
    Int k;
    if (!is_perfect_square(s.d, k)) return std::nullopt;
    return ConeRay::normalized(1, -k);
}

/// Movable cone of M for v = (2, 0, -2): <H~, right> where the right boundary
/// is H~ - sqrt(d) B when d is a perfect square, and otherwise x1 H~ - d y1 B
/// for the fundamental solution (x1, y1) of x^2 - d y^2 = 1. (A third case,
/// driven by x^2 - d y^2 = 5 when neither applies, cannot occur over Z: the
/// plain Pell equation is always solvable for non-square d.)
inline ConeResult movable_cone(const Surface& s) {
    ConeResult out;
    if (auto sq = square_zero_class(s)) {
        out.right = *sq;
        out.kind = ConeCase::PerfectSquare;
        return out;
    }
    auto fund = pell_fundamental(s.d);
    out.right = ConeRay::normalized(fund->x, -s.d * fund->y);
    out.kind = ConeCase::BNPell;
    return out;
}

/// Nef cone of M for v = (2, 0, -2): the chamber of the movable cone adjacent
/// to H~, bounded by the first flopping wall. Flopping walls come from
/// spherical classes with (s, v) = 2, via x^2 - 4d y^2 = 5 and
/// s = ((x+1)/2, -y, (x-1)/2), or (s, v) = 4, via x^2 - d y^2 = 2 and
/// s = (x+1, -y, x-1). When neither equation is solvable there is no flopping
/// wall and the nef and movable cones agree.
inline ConeResult nef_cone(const Surface& s) {
    const MukaiVector v{2, 0, -2};
    struct Candidate {
        ConeRay ray;
        MukaiVector sph;
    };
    std::optional<Candidate> best;
    int solvable = 0;

    auto offer = [&](const MukaiVector& sph) {
        if (mukai_square(sph, s) != -2) throw NotSpherical();
        Candidate c{orthogonal_ray(v, sph, s), sph};
        ++solvable;
        if (!best || c.ray.slope() < best->ray.slope()) best = c;
    };

    if (auto sol = pell_general(4 * s.d, 5)) {
        offer({(sol->x + 1) / 2, -sol->y, (sol->x - 1) / 2});
    }
    if (auto sol = pell_general(s.d, 2)) {
        offer({sol->x + 1, -sol->y, sol->x - 1});
    }

    ConeResult out;
    if (!best) {
        out = movable_cone(s);
        out.kind = ConeCase::NoFloppingWall;
        return out;
    }
    out.right = best->ray;
    out.kind = ConeCase::BNPell; // boundary realized by a spherical Pell class
    out.witness = best->sph;
    out.both_sc_solvable = solvable == 2;
    return out;
}

} // namespace ogwalls
