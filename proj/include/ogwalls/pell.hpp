#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "ogwalls/numeric.hpp"

namespace ogwalls {

struct PellSolution {
    Int x;
    Int y;

    friend bool operator==(const PellSolution& a, const PellSolution& b) {
        return a.x == b.x && a.y == b.y;
    }
    /// Minimality order: smallest x first, ties broken by smallest y.
    friend bool operator<(const PellSolution& a, const PellSolution& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    }
};

/// Fundamental solution of x^2 - D y^2 = 1 with x, y > 0, via the continued
/// fraction expansion of sqrt(D). Empty exactly when D is a perfect square.
inline std::optional<PellSolution> pell_fundamental(const Int& D) {
    if (D < 1) throw InvalidArgument("Pell coefficient D must be >= 1");
    Int a0 = isqrt_floor(D);
    if (a0 * a0 == D) return std::nullopt;

    // Convergents p/q of sqrt(D); (m, den, a) is the standard CF state.
    Int m = 0, den = 1, a = a0;
    Int p_prev = 1, p = a0;
    Int q_prev = 0, q = 1;
    while (p * p - D * q * q != 1) {
        m = den * a - m;
        den = (D - m * m) / den;
        a = (a0 + m) / den;
        Int p_next = a * p + p_prev;
        Int q_next = a * q + q_prev;
        p_prev = p; p = p_next;
        q_prev = q; q = q_next;
    }
    return PellSolution{p, q};
}

/// Minimal solution (smallest x, then smallest y) of x^2 - D y^2 = N with
/// x, y >= 0. For non-square D the scan range comes from the classical bound
/// in terms of the fundamental unit; for square D = k^2 the equation factors
/// as (x-ky)(x+ky) = N and is solved by divisor pairs.
inline std::optional<PellSolution> pell_general(const Int& D, const Int& N) {
    if (D < 1) throw InvalidArgument("Pell coefficient D must be >= 1");
    if (N == 0) throw InvalidArgument("pell_general requires N != 0");
    using boost::multiprecision::abs;

    std::optional<PellSolution> best;
    auto offer = [&](const Int& x, const Int& y) {
        PellSolution cand{abs(x), abs(y)};
        if (!best || cand < *best) best = cand;
    };

    Int k;
    if (is_perfect_square(D, k)) {
        // (x - ky)(x + ky) = N over all divisor pairs, both signs.
        Int absN = abs(N);
        for (Int e = 1; e * e <= absN; ++e) {
            if (absN % e != 0) continue;
            for (const Int& lo : {e, Int(-e), Int(absN / e), Int(-(absN / e))}) {
                Int hi = N / lo;
                if ((lo + hi) % 2 != 0) continue;
                Int x = (lo + hi) / 2;
                Int ky = (hi - lo) / 2;
                if (ky % k != 0) continue;
                offer(x, ky / k);
            }
        }
        return best;
    }

    auto unit = pell_fundamental(D);
    // Every solution class has a representative with 0 <= y <= y1*sqrt(|N|),
    // which over-covers the Nagell bounds for both signs of N.
    Int y_max = unit->y * (isqrt_floor(abs(N)) + 1);
    for (Int y = 0; y <= y_max; ++y) {
        Int x2 = N + D * y * y;
        Int x;
        if (x2 >= 0 && is_perfect_square(x2, x)) offer(x, y);
    }
    return best;
}

/// Independent test oracle: direct scan of y in [0, y_max] with an integer
/// square-root check. Results sorted by (x, y).
inline std::vector<PellSolution> brute_force_oracle(const Int& D, const Int& N,
                                                    const Int& y_max) {
    if (D < 1) throw InvalidArgument("Pell coefficient D must be >= 1");
    if (y_max < 1 || y_max > 1000000) throw BoundTooLarge();
    std::vector<PellSolution> out;
    for (Int y = 0; y <= y_max; ++y) {
        Int x2 = N + D * y * y;
        Int x;
        if (x2 >= 0 && is_perfect_square(x2, x)) out.push_back({x, y});
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Brahmagupta composition of two solutions of x^2 - D y^2 = 1.
inline PellSolution pell_compose(const PellSolution& a, const PellSolution& b, const Int& D) {
    return {a.x * b.x + D * a.y * b.y, a.x * b.y + a.y * b.x};
}

} // namespace ogwalls
