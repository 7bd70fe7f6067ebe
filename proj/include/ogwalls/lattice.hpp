#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <vector>

#include "ogwalls/mukai.hpp"

namespace ogwalls {

namespace detail {

/// Cross product of Mukai triples viewed as plain integer vectors. A normal
/// vector of the rational span of {x, y} w.r.t. the standard dot product.
inline MukaiVector cross(const MukaiVector& x, const MukaiVector& y) {
    return {x.c * y.a - x.a * y.c, x.a * y.r - x.r * y.a, x.r * y.c - x.c * y.r};
}

inline Int dot(const MukaiVector& x, const MukaiVector& y) {
    return x.r * y.r + x.c * y.c + x.a * y.a;
}

inline MukaiVector make_primitive(const MukaiVector& x) {
    return primitive_decompose(x).v_p;
}

inline MukaiVector sign_normalize(const MukaiVector& x) {
    if (x.r != 0) return x.r > 0 ? x : -x;
    if (x.c != 0) return x.c > 0 ? x : -x;
    return x.a >= 0 ? x : -x;
}

/// Extended gcd: returns g = gcd(a,b) and sets (s,t) with s*a + t*b = g.
inline Int ext_gcd(Int a, Int b, Int& s, Int& t) {
    Int old_s = 1, cur_s = 0, old_t = 0, cur_t = 1;
    while (b != 0) {
        Int q = a / b;
        Int r = a - q * b;
        a = b; b = r;
        Int ns = old_s - q * cur_s; old_s = cur_s; cur_s = ns;
        Int nt = old_t - q * cur_t; old_t = cur_t; cur_t = nt;
    }
    if (a < 0) { a = -a; old_s = -old_s; old_t = -old_t; }
    s = old_s; t = old_t;
    return a;
}

/// Integral basis of {x in Z^3 : dot(x, n) = 0} for primitive n.
inline std::array<MukaiVector, 2> kernel_basis(const MukaiVector& n) {
    using boost::multiprecision::gcd;
    if (n.r == 0 && n.c == 0) {
        // n = (0,0,±1)
        return {MukaiVector{1, 0, 0}, MukaiVector{0, 1, 0}};
    }
    Int s, t;
    Int g = ext_gcd(n.r, n.c, s, t);
    MukaiVector e1{n.c / g, -n.r / g, 0};
    // Smallest positive z with g | n.a * z, then solve n.r*x + n.c*y = -n.a*z.
    Int shared = gcd(g, boost::multiprecision::abs(n.a));
    Int z0 = g / shared;
    Int rhs = -n.a * z0;
    MukaiVector e2{s * (rhs / g), t * (rhs / g), z0};
    return {e1, e2};
}

} // namespace detail

/// Saturated rank-two hyperbolic sublattice of the algebraic Mukai lattice,
/// with a reduced basis, its Gram matrix, and the coordinates of v.
struct WallLattice {
    std::array<MukaiVector, 2> basis;
    std::array<std::array<Int, 2>, 2> gram;
    std::array<Int, 2> v_coords;
    Surface surface;
    MukaiVector normal; // primitive, sign-normalized; canonical lattice key

    MukaiVector from_coords(const Int& x, const Int& y) const {
        return x * basis[0] + y * basis[1];
    }

    bool contains(const MukaiVector& x) const { return detail::dot(x, normal) == 0; }

    /// Coordinates of x in the basis, if x lies in the lattice.
    std::optional<std::array<Int, 2>> coords_of(const MukaiVector& x) const {
        if (!contains(x)) return std::nullopt;
        // Solve x = p*e1 + q*e2 using two independent coordinate rows.
        const MukaiVector& e1 = basis[0];
        const MukaiVector& e2 = basis[1];
        std::array<std::array<Int, 3>, 3> rows = {{{e1.r, e2.r, x.r},
                                                   {e1.c, e2.c, x.c},
                                                   {e1.a, e2.a, x.a}}};
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = i + 1; j < 3; ++j) {
                Int det = rows[i][0] * rows[j][1] - rows[i][1] * rows[j][0];
                if (det == 0) continue;
                Int pn = rows[i][2] * rows[j][1] - rows[i][1] * rows[j][2];
                Int qn = rows[i][0] * rows[j][2] - rows[i][2] * rows[j][0];
                if (pn % det != 0 || qn % det != 0) return std::nullopt;
                return std::array<Int, 2>{pn / det, qn / det};
            }
        }
        return std::nullopt;
    }

    Int gram_det() const { return gram[0][0] * gram[1][1] - gram[0][1] * gram[0][1]; }
};

/// Saturation of span{v, u} inside the integral Mukai lattice.
/// Throws NotRankTwo when u is proportional to v and NotHyperbolic when the
/// induced form does not have signature (1,1).
inline WallLattice make_wall_lattice(const MukaiVector& v, const MukaiVector& u,
                                     const Surface& s) {
    MukaiVector n = detail::cross(v, u);
    if (n.is_zero()) throw NotRankTwo();
    n = detail::sign_normalize(detail::make_primitive(n));

    auto basis = detail::kernel_basis(n);

    // Gauss-style reduction of the basis under the Mukai form; bounded number
    // of steps since the coordinate sizes strictly shrink.
    auto pair2 = [&](const MukaiVector& x, const MukaiVector& y) { return pairing(x, y, s); };
    for (int iter = 0; iter < 64; ++iter) {
        Int q00 = pair2(basis[0], basis[0]);
        Int q11 = pair2(basis[1], basis[1]);
        using boost::multiprecision::abs;
        if (abs(q11) < abs(q00)) std::swap(basis[0], basis[1]);
        q00 = pair2(basis[0], basis[0]);
        Int q01 = pair2(basis[0], basis[1]);
        if (q00 == 0) break;
        // Nearest integer to q01/q00.
        Int k = q01 / q00;
        for (const Int& cand : {Int(k - 1), Int(k + 1)}) {
            if (abs(q01 - cand * q00) < abs(q01 - k * q00)) k = cand;
        }
        if (k == 0) break;
        basis[1] = basis[1] - k * basis[0];
    }
    basis[0] = detail::sign_normalize(basis[0]);
    basis[1] = detail::sign_normalize(basis[1]);
    if (basis[1] < basis[0]) std::swap(basis[0], basis[1]);

    WallLattice lat{basis,
                    {{{pair2(basis[0], basis[0]), pair2(basis[0], basis[1])},
                      {pair2(basis[0], basis[1]), pair2(basis[1], basis[1])}}},
                    {0, 0},
                    s,
                    n};
    if (lat.gram_det() >= 0) throw NotHyperbolic();
    auto vc = lat.coords_of(v);
    if (!vc) throw VectorNotInLattice();
    lat.v_coords = *vc;
    return lat;
}

struct ClassQuery {
    WallLattice lattice;
    Int square;         // target u^2 (even)
    Int pairing_with_v; // target (u, v)
};

/// All lattice classes u with u^2 = q.square and (u, v) = q.pairing_with_v.
/// The pairing constraint confines u to an affine line in lattice coordinates;
/// substituting into the quadratic form leaves at most two integer roots.
inline std::vector<MukaiVector> solve_constrained_classes(const ClassQuery& q,
                                                          const MukaiVector& v) {
    const WallLattice& L = q.lattice;
    if (!L.contains(v)) throw VectorNotInLattice();
    if (L.gram_det() == 0) throw DegenerateLattice();

    const Surface& s = L.surface;
    Int A = pairing(L.basis[0], v, s);
    Int B = pairing(L.basis[1], v, s);
    if (A == 0 && B == 0) throw DegenerateLattice();

    Int s0, t0;
    Int g = detail::ext_gcd(A, B, s0, t0);
    if (q.pairing_with_v % g != 0) return {};
    Int scale = q.pairing_with_v / g;
    // Base point (x0, y0) and direction (dx, dy) of the affine solution line.
    Int x0 = s0 * scale, y0 = t0 * scale;
    Int dx = B / g, dy = -A / g;

    const Int& g00 = L.gram[0][0];
    const Int& g01 = L.gram[0][1];
    const Int& g11 = L.gram[1][1];
    auto form = [&](const Int& x, const Int& y) {
        return g00 * x * x + 2 * g01 * x * y + g11 * y * y;
    };
    // form(x0 + t*dx, y0 + t*dy) = qa*t^2 + qb*t + qc
    Int qa = form(dx, dy);
    Int qb = 2 * (g00 * x0 * dx + g01 * (x0 * dy + y0 * dx) + g11 * y0 * dy);
    Int qc = form(x0, y0) - q.square;

    std::vector<Int> roots;
    if (qa != 0) {
        Int disc = qb * qb - 4 * qa * qc;
        Int root;
        if (disc >= 0 && is_perfect_square(disc, root)) {
            for (const Int& num : {Int(-qb + root), Int(-qb - root)}) {
                if (num % (2 * qa) == 0) roots.push_back(num / (2 * qa));
            }
        }
    } else if (qb != 0) {
        if (qc % qb == 0) roots.push_back(-qc / qb);
    } else if (qc == 0) {
        // Entire line satisfies the form; impossible for a non-degenerate
        // lattice containing v (the direction would be orthogonal to all of it).
        throw DegenerateLattice();
    }

    std::vector<MukaiVector> out;
    for (const Int& t : roots) out.push_back(L.from_coords(x0 + t * dx, y0 + t * dy));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace ogwalls
