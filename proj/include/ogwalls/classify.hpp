#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ogwalls/slice.hpp"

namespace ogwalls {

namespace detail {

/// Complex number over Q(sqrt(R)) — just enough for central charges at wall
/// points, whose t-coordinate is the square root of a rational.
struct QuadComplex {
    QuadExt re;
    QuadExt im;
};

inline QuadComplex charge_at(const MukaiVector& x, const QuadExt& u, const QuadExt& t,
                             const Surface& s) {
    Rat d(s.d);
    QuadExt z2_re = u * u - t * t;
    QuadExt z2_im = (u * t) * Rat(2);
    Rat cx(x.c), rx(x.r), ax(x.a);
    QuadExt re = u * (2 * d * cx) - z2_re * (rx * d) - QuadExt::rational(ax, u.radicand);
    QuadExt im = t * (2 * d * cx) - z2_im * (rx * d);
    return {re, im};
}

/// Sample points on the curve with exact coordinates in Q(sqrt(radius_sq)):
/// the circle top plus Pythagorean-rotation points, or small heights on a
/// vertical line. Pairs are (u, t) as QuadExt values sharing one radicand.
inline std::vector<std::pair<QuadExt, QuadExt>> curve_sample_points(const WallCurve& w) {
    std::vector<std::pair<QuadExt, QuadExt>> pts;
    if (w.shape == CurveShape::Circle) {
        QuadExt rho = QuadExt::root(w.radius_sq);
        QuadExt c = QuadExt::rational(w.center_u, w.radius_sq);
        // (mu, nu) with mu^2 + nu^2 = 1 and nu > 0.
        static const std::pair<Rat, Rat> dirs[] = {
            {Rat(0), Rat(1)},
            {Rat(3, 5), Rat(4, 5)},
            {Rat(-3, 5), Rat(4, 5)},
            {Rat(5, 13), Rat(12, 13)},
            {Rat(-5, 13), Rat(12, 13)},
        };
        for (const auto& [mu, nu] : dirs) pts.push_back({c + rho * mu, rho * nu});
    } else if (w.shape == CurveShape::VerticalLine) {
        for (const Rat& t : {Rat(1), Rat(2), Rat(3), Rat(1, 2), Rat(1, 3)}) {
            pts.push_back({QuadExt::rational(w.line_u, Rat(0)), QuadExt::rational(t, Rat(0))});
        }
    }
    return pts;
}

} // namespace detail

/// Sign of Re(Z_u(z) * conj(Z_v(z))) for z on the wall curve of v, computed
/// exactly in Q(sqrt(radius^2)). On the wall Z_u and Z_v are real multiples of
/// each other, so a positive sign means u is "on the effective side" of v
/// there. Spherical holes (isolated zeros of Z_u on the curve) are dodged by
/// retrying at further exact points; if every sample lands on a zero the sign
/// is genuinely undecidable and AmbiguousSign is thrown.
inline int effectivity_sign(const MukaiVector& u, const MukaiVector& v, const WallCurve& w,
                            const Surface& s) {
    auto pts = detail::curve_sample_points(w);
    if (pts.empty()) throw WallUnrepresented();
    for (const auto& [pu, pt] : pts) {
        auto zu = detail::charge_at(u, pu, pt, s);
        auto zv = detail::charge_at(v, pu, pt, s);
        QuadExt re_prod = zu.re * zv.re + zu.im * zv.im;
        int sg = re_prod.sign();
        if (sg != 0) return sg;
    }
    throw AmbiguousSign();
}

enum class WallKind { NotAWall, Fake, Flopping, Divisorial };

inline const char* to_string(WallKind k) {
    switch (k) {
        case WallKind::NotAWall: return "not-a-wall";
        case WallKind::Fake: return "fake";
        case WallKind::Flopping: return "flopping";
        case WallKind::Divisorial: return "divisorial";
    }
    return "?";
}

/// Classification of the potential wall carried by a rank-two lattice through
/// an O'Grady-type vector v = 2 v_p:
///  - Divisorial when v_p^perp inside the lattice is generated by a (-2) class
///    (Brill-Noether contraction), with an extra LGU flag when an isotropic
///    class w with (w, v_p) = 1 also exists (Li-Gieseker-Uhlenbeck);
///  - Flopping when an effective spherical s with (s, v_p) in {1, 2} exists;
///  - Fake when the locus is merely totally semistable: some effective
///    spherical s pairs negatively with v but nothing above applies;
///  - NotAWall otherwise.
/// Divisibility 2 of v rules out the second totally-semistable mechanism
/// (an isotropic w with (w, v) = 1), so it is never searched for.
struct WallClassification {
    WallKind kind = WallKind::NotAWall;
    bool divisorial_lgu = false;
    WallCurve curve;
    std::optional<MukaiVector> bn_witness;      // effective (-2) class orthogonal to v
    std::vector<MukaiVector> lgu_witnesses;     // isotropic, (w, v) = 2
    std::vector<MukaiVector> sc_witnesses;      // effective spherical, (s, v) in {2, 4}
    std::optional<MukaiVector> ts_witness;      // effective spherical, (s, v) < 0
    bool ts_search_exhausted = false;           // spherical scan hit its bound empty
};

namespace detail {

/// Primitive generator of {x in L : (x, v) = 0}, in lattice coordinates.
inline MukaiVector perp_generator(const WallLattice& L, const MukaiVector& v) {
    Int A = pairing(L.basis[0], v, L.surface);
    Int B = pairing(L.basis[1], v, L.surface);
    if (A == 0 && B == 0) throw DegenerateLattice();
    Int s, t;
    Int g = ext_gcd(A, B, s, t);
    return L.from_coords(B / g, -A / g);
}

/// Bounded scan for an effective spherical class pairing negatively with v.
/// Walks |x| up to bound in lattice coordinates and solves the quadratic
/// s^2 = -2 for y. Returns the first witness in scan order.
inline std::optional<MukaiVector> find_ts_witness(const WallLattice& L, const MukaiVector& v,
                                                  const WallCurve& curve, const Int& bound,
                                                  bool& exhausted) {
    const Int& g00 = L.gram[0][0];
    const Int& g01 = L.gram[0][1];
    const Int& g11 = L.gram[1][1];
    auto consider = [&](const Int& x, const Int& y) -> std::optional<MukaiVector> {
        MukaiVector s = L.from_coords(x, y);
        if (mukai_square(s, L.surface) != -2) return std::nullopt;
        if (effectivity_sign(s, v, curve, L.surface) < 0) s = -s;
        if (pairing(s, v, L.surface) < 0) return s;
        return std::nullopt;
    };
    for (Int x = 0; x <= bound; ++x) {
        for (const Int& xs : {x, Int(-x)}) {
            // Solve g11 y^2 + 2 g01 xs y + (g00 xs^2 + 2) = 0.
            if (g11 != 0) {
                Int qb = 2 * g01 * xs;
                Int qc = g00 * xs * xs + 2;
                Int disc = qb * qb - 4 * g11 * qc;
                Int root;
                if (disc >= 0 && is_perfect_square(disc, root)) {
                    for (const Int& num : {Int(-qb + root), Int(-qb - root)}) {
                        if (num % (2 * g11) != 0) continue;
                        if (auto w = consider(xs, num / (2 * g11))) return w;
                    }
                }
            } else if (g01 != 0) {
                Int qb = 2 * g01 * xs;
                Int qc = g00 * xs * xs + 2;
                if (qb != 0 && qc % qb == 0) {
                    if (auto w = consider(xs, -qc / qb)) return w;
                }
            }
            if (xs == 0) break; // 0 and -0 coincide
        }
    }
    exhausted = true;
    return std::nullopt;
}

} // namespace detail

/// Classifies the potential wall spanned by an O'Grady-type v and its wall
/// lattice, per the decision procedure sketched on WallClassification.
inline WallClassification classify_wall(const WallLattice& L, const Int& ts_search_bound = 10000) {
    const Surface& surf = L.surface;
    MukaiVector v = L.from_coords(L.v_coords[0], L.v_coords[1]);
    if (!is_ogrady_type(v, surf)) throw NotOGradyType();
    for (const auto& e : L.basis) {
        if (pairing(e, v, surf) % 2 != 0) throw OddPairing();
    }

    WallClassification out;
    // Any lattice class independent of v cuts the same numerical wall.
    const MukaiVector& other =
        detail::cross(L.basis[0], v).is_zero() ? L.basis[1] : L.basis[0];
    out.curve = numerical_wall(v, other, surf);
    if (out.curve.shape != CurveShape::Circle && out.curve.shape != CurveShape::VerticalLine) {
        throw WallUnrepresented();
    }

    // Brill-Noether: the rank-one orthogonal complement of v is spanned by a
    // (-2) class.
    MukaiVector g = detail::perp_generator(L, v);
    bool bn = mukai_square(g, surf) == -2;
    if (bn) {
        if (effectivity_sign(g, v, out.curve, surf) < 0) g = -g;
        out.bn_witness = g;
    }

    // Li-Gieseker-Uhlenbeck: isotropic w with (w, v_p) = 1.
    out.lgu_witnesses = solve_constrained_classes({L, 0, 2}, v);
    if (!out.lgu_witnesses.empty() && !bn) {
        // An LGU class forces a BN class; reaching here means the lattice
        // arithmetic is inconsistent.
        throw std::logic_error("LGU wall without BN generator");
    }

    // Flopping: effective spherical s with (s, v_p) in {1, 2}.
    for (const Int& pv : {Int(2), Int(4)}) {
        for (const auto& s : solve_constrained_classes({L, -2, pv}, v)) {
            if (effectivity_sign(s, v, out.curve, surf) > 0) out.sc_witnesses.push_back(s);
        }
    }
    std::sort(out.sc_witnesses.begin(), out.sc_witnesses.end());

    // Totally semistable: effective spherical s with (s, v) < 0.
    out.ts_witness =
        detail::find_ts_witness(L, v, out.curve, ts_search_bound, out.ts_search_exhausted);

    if (bn) {
        out.kind = WallKind::Divisorial;
        out.divisorial_lgu = !out.lgu_witnesses.empty();
    } else if (!out.sc_witnesses.empty()) {
        out.kind = WallKind::Flopping;
    } else if (out.ts_witness) {
        out.kind = WallKind::Fake;
    } else {
        out.kind = WallKind::NotAWall;
    }
    return out;
}

inline WallClassification classify_wall(const MukaiVector& v, const MukaiVector& u,
                                        const Surface& s, const Int& ts_search_bound = 10000) {
    return classify_wall(make_wall_lattice(v, u, s), ts_search_bound);
}

} // namespace ogwalls
