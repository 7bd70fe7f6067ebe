#pragma once

#include <array>
#include <ostream>

#include "ogwalls/numeric.hpp"

namespace ogwalls {

/// A Picard-rank-one polarized K3 surface: Pic(X) = Z[H] with H^2 = 2d.
struct Surface {
    Int d;

    explicit Surface(Int half_degree) : d(std::move(half_degree)) {
        if (d < 1) throw InvalidSurface();
    }
};

/// Integral Mukai vector (r, cH, a) in the algebraic Mukai lattice.
struct MukaiVector {
    Int r; // rank
    Int c; // coefficient of H in the degree-2 part
    Int a; // degree-4 part

    MukaiVector() : r(0), c(0), a(0) {}
    MukaiVector(Int rank, Int degree, Int point)
        : r(std::move(rank)), c(std::move(degree)), a(std::move(point)) {}

    bool is_zero() const { return r == 0 && c == 0 && a == 0; }

    friend MukaiVector operator+(const MukaiVector& x, const MukaiVector& y) {
        return {x.r + y.r, x.c + y.c, x.a + y.a};
    }
    friend MukaiVector operator-(const MukaiVector& x, const MukaiVector& y) {
        return {x.r - y.r, x.c - y.c, x.a - y.a};
    }
    MukaiVector operator-() const { return {-r, -c, -a}; }
    friend MukaiVector operator*(const Int& k, const MukaiVector& x) {
        return {k * x.r, k * x.c, k * x.a};
    }
    friend bool operator==(const MukaiVector& x, const MukaiVector& y) {
        return x.r == y.r && x.c == y.c && x.a == y.a;
    }
    friend bool operator!=(const MukaiVector& x, const MukaiVector& y) { return !(x == y); }
    friend bool operator<(const MukaiVector& x, const MukaiVector& y) {
        if (x.r != y.r) return x.r < y.r;
        if (x.c != y.c) return x.c < y.c;
        return x.a < y.a;
    }

    friend std::ostream& operator<<(std::ostream& os, const MukaiVector& x) {
        return os << "(" << x.r << "," << x.c << "," << x.a << ")";
    }
};

/// Mukai pairing ((r,c,a),(r',c',a')) = 2d*c*c' - r*a' - a*r'.
inline Int pairing(const MukaiVector& x, const MukaiVector& y, const Surface& s) {
    return 2 * s.d * x.c * y.c - x.r * y.a - x.a * y.r;
}

inline Int mukai_square(const MukaiVector& x, const Surface& s) { return pairing(x, x, s); }

struct PrimitiveDecomposition {
    Int m;           // divisibility, m > 0
    MukaiVector v_p; // primitive part, v = m * v_p
};

inline PrimitiveDecomposition primitive_decompose(const MukaiVector& v) {
    if (v.is_zero()) throw ZeroVector();
    using boost::multiprecision::gcd;
    Int m = gcd(gcd(boost::multiprecision::abs(v.r), boost::multiprecision::abs(v.c)),
                boost::multiprecision::abs(v.a));
    return {m, {v.r / m, v.c / m, v.a / m}};
}

/// O'Grady type: v = 2*v_p with v_p primitive and v_p^2 = 2.
inline bool is_ogrady_type(const MukaiVector& v, const Surface& s) {
    auto dec = primitive_decompose(v);
    return dec.m == 2 && mukai_square(dec.v_p, s) == 2;
}

/// Multiplication by exp(mH): (r, c, a) -> (r, c + rm, a + 2dmc + dm^2 r).
/// An isometry; twists compose additively in m.
inline MukaiVector exp_twist(const MukaiVector& v, const Int& m, const Surface& s) {
    return {v.r, v.c + v.r * m, v.a + 2 * s.d * m * v.c + s.d * m * m * v.r};
}

/// Cohomological reflection in a spherical class: x -> x + (x,s)s.
/// An involutive isometry. The homological shift [1] is plain negation.
inline MukaiVector spherical_reflect(const MukaiVector& x, const MukaiVector& s,
                                     const Surface& surf) {
    if (mukai_square(s, surf) != -2) throw NotSpherical();
    return x + pairing(x, s, surf) * s;
}

} // namespace ogwalls
