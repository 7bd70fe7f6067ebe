#pragma once

#include <array>
#include <optional>

#include "ogwalls/lattice.hpp"

namespace ogwalls {

/// Point (u, t) of the upper half-plane slice of Stab(X), beta = uH, omega = tH.
/// (The paper's s-coordinate is called u here; s is reserved for spherical classes.)
struct SlicePoint {
    Rat u;
    Rat t;

    SlicePoint(Rat u_, Rat t_) : u(std::move(u_)), t(std::move(t_)) {
        if (t <= 0) throw InvalidArgument("slice point needs t > 0");
    }
};

struct ComplexRat {
    Rat re;
    Rat im;

    bool is_zero() const { return re == 0 && im == 0; }
    friend bool operator==(const ComplexRat& a, const ComplexRat& b) {
        return a.re == b.re && a.im == b.im;
    }
};

/// Central charge Z(x) = <exp((u+it)H), x> = 2d*c*(u+it) - r*d*(u+it)^2 - a,
/// as an exact rational complex number.
inline ComplexRat central_charge(const MukaiVector& x, const SlicePoint& p, const Surface& s) {
    Rat d(s.d);
    Rat z2_re = p.u * p.u - p.t * p.t;
    Rat z2_im = 2 * p.u * p.t;
    Rat cx(x.c), rx(x.r), ax(x.a);
    return {2 * d * cx * p.u - rx * d * z2_re - ax, 2 * d * cx * p.t - rx * d * z2_im};
}

enum class CurveShape { Circle, VerticalLine, Empty, Degenerate };

/// Locus {alpha*(u^2+t^2) + beta*u + gamma = 0, t > 0}: the numerical wall
/// Im(Z_w / Z_v) = 0 in the slice. Coefficients are gcd-reduced with the first
/// nonzero one positive.
struct WallCurve {
    Int alpha, beta, gamma;
    CurveShape shape = CurveShape::Degenerate;
    Rat center_u;  // Circle only
    Rat radius_sq; // Circle only
    Rat line_u;    // VerticalLine only

    friend bool operator==(const WallCurve& a, const WallCurve& b) {
        return a.alpha == b.alpha && a.beta == b.beta && a.gamma == b.gamma;
    }
    friend bool operator<(const WallCurve& a, const WallCurve& b) {
        if (a.alpha != b.alpha) return a.alpha < b.alpha;
        if (a.beta != b.beta) return a.beta < b.beta;
        return a.gamma < b.gamma;
    }

    /// Sort key position: circle center or line abscissa.
    Rat position() const { return shape == CurveShape::Circle ? center_u : line_u; }
};

namespace detail {

inline WallCurve curve_from_coefficients(Int alpha, Int beta, Int gamma) {
    using boost::multiprecision::abs;
    using boost::multiprecision::gcd;
    WallCurve w;
    Int g = gcd(gcd(abs(alpha), abs(beta)), abs(gamma));
    if (g > 1) { alpha /= g; beta /= g; gamma /= g; }
    Int lead = alpha != 0 ? alpha : (beta != 0 ? beta : gamma);
    if (lead < 0) { alpha = -alpha; beta = -beta; gamma = -gamma; }
    w.alpha = alpha; w.beta = beta; w.gamma = gamma;
    if (alpha == 0 && beta == 0 && gamma == 0) {
        w.shape = CurveShape::Degenerate;
    } else if (alpha == 0 && beta == 0) {
        w.shape = CurveShape::Empty;
    } else if (alpha == 0) {
        w.shape = CurveShape::VerticalLine;
        w.line_u = Rat(-gamma, beta);
    } else {
        Int disc = beta * beta - 4 * alpha * gamma;
        if (disc > 0) {
            w.shape = CurveShape::Circle;
            w.center_u = Rat(-beta, 2 * alpha);
            w.radius_sq = Rat(disc, 4 * alpha * alpha);
        } else {
            w.shape = CurveShape::Empty;
        }
    }
    return w;
}

inline WallCurve numerical_wall_unchecked(const MukaiVector& v, const MukaiVector& w,
                                          const Surface& s) {
    Int alpha = s.d * (v.c * w.r - w.c * v.r);
    Int beta = w.a * v.r - v.a * w.r;
    Int gamma = w.c * v.a - v.c * w.a;
    return curve_from_coefficients(alpha, beta, gamma);
}

/// Startup cross-check of the coefficient expansion against two independently
/// computed loci. A failure would mean sign-convention drift and aborts.
inline bool wall_convention_verified() {
    static const bool ok = [] {
        Surface s{1};
        WallCurve flop = numerical_wall_unchecked({2, 2, 0}, {2, 1, 1}, s);
        if (flop.shape != CurveShape::Circle || flop.center_u != Rat(-1, 2) ||
            flop.radius_sq != Rat(5, 4)) {
            throw std::logic_error("wall coefficient convention check failed (circle)");
        }
        WallCurve line = numerical_wall_unchecked({2, 0, -2}, {1, 0, 0}, s);
        if (line.shape != CurveShape::VerticalLine || line.line_u != 0) {
            throw std::logic_error("wall coefficient convention check failed (line)");
        }
        return true;
    }();
    return ok;
}

} // namespace detail

/// Wall curve of the pair (v, w): the locus Im(Z_w(z) * conj(Z_v(z))) = 0 with
/// t > 0. Expanding gives alpha = d(c r' - c' r), beta = a' r - a r',
/// gamma = c' a - c a' up to overall normalization.
inline WallCurve numerical_wall(const MukaiVector& v, const MukaiVector& w, const Surface& s) {
    detail::wall_convention_verified();
    return detail::numerical_wall_unchecked(v, w, s);
}

/// Twist m taking v to the (2,0,-2) normal form, when one exists.
inline std::optional<Int> normal_form_twist(const MukaiVector& v, const Surface& s) {
    if (v.r != 2 || v.c % 2 != 0) return std::nullopt;
    Int m = -v.c / 2;
    if (exp_twist(v, m, s) == MukaiVector{2, 0, -2}) return m;
    return std::nullopt;
}

/// Image of a slice point under the first two stages of the Bayer-Macri map:
/// w_sigma = Im(Omega / -(Omega, v)) with Omega = exp((u+it)H), together with
/// its (H~, B) coordinates when v is in (2,0,-2) normal form.
struct BMImage {
    std::array<Rat, 3> w_sigma;                // rational Mukai triple, (w_sigma, v) = 0
    std::optional<std::array<Rat, 2>> ns_coords; // coefficients of (H~, B)
    Rat q_value;                               // w_sigma^2 = q of the divisor class

    /// Slope -b/h of the NS ray (0 on H~ itself, matching ConeRay::slope),
    /// defined when ns_coords is present and h != 0.
    std::optional<Rat> slope() const {
        if (!ns_coords || (*ns_coords)[0] == 0) return std::nullopt;
        return -(*ns_coords)[1] / (*ns_coords)[0];
    }
};

inline BMImage bm_ray(const MukaiVector& v, const Surface& s, const SlicePoint& p) {
    ComplexRat zv = central_charge(v, p, s);
    if (zv.is_zero()) throw CentralChargeVanishes();
    Rat d(s.d);
    // Omega = (1, z, d z^2)
    std::array<ComplexRat, 3> omega = {
        ComplexRat{1, 0},
        ComplexRat{p.u, p.t},
        ComplexRat{d * (p.u * p.u - p.t * p.t), d * 2 * p.u * p.t}};
    // Im(c / -zv) = (im(c)*(-re zv) - re(c)*(-im zv)) / |zv|^2
    Rat norm = zv.re * zv.re + zv.im * zv.im;
    BMImage out;
    for (std::size_t i = 0; i < 3; ++i) {
        out.w_sigma[i] = (omega[i].re * zv.im - omega[i].im * zv.re) / norm;
    }
    // q = w_sigma^2 under the Mukai pairing extended over Q.
    out.q_value = 2 * d * out.w_sigma[1] * out.w_sigma[1] - 2 * out.w_sigma[0] * out.w_sigma[2];
    if (v == MukaiVector{2, 0, -2}) {
        // w_sigma = x*(0,-1,0) + y*(-1,0,-1) with x = -c-part, y = -r-part.
        out.ns_coords = std::array<Rat, 2>{-out.w_sigma[1], -out.w_sigma[0]};
    }
    return out;
}

} // namespace ogwalls
