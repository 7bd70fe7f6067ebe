#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <string>

#include "ogwalls/errors.hpp"

namespace ogwalls {

// Pell fundamental solutions grow exponentially in d, so every integer in the
// library is arbitrary precision.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline int sign_of(const Int& x) { return x.sign(); }
inline int sign_of(const Rat& x) { return x.sign(); }

/// Floor of the square root of a non-negative integer, with a 64-bit fast path.
inline Int isqrt_floor(const Int& n) {
    if (n < 0) throw InvalidArgument("isqrt of a negative number");
    if (n <= Int(std::uint64_t(1) << 62)) {
        auto v = n.convert_to<std::uint64_t>();
        auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(v)));
        while (r > 0 && r * r > v) --r;
        while ((r + 1) * (r + 1) <= v) ++r;
        return Int(r);
    }
    return boost::multiprecision::sqrt(n);
}

inline bool is_perfect_square(const Int& n, Int& root) {
    if (n < 0) return false;
    root = isqrt_floor(n);
    return root * root == n;
}

inline bool is_perfect_square(const Int& n) {
    Int r;
    return is_perfect_square(n, r);
}

/// Element a + b*sqrt(radicand) of a real quadratic extension of Q.
/// Used to evaluate central charges exactly at circle-top points, whose
/// t-coordinate is the square root of a rational.
struct QuadExt {
    Rat a;        // rational part
    Rat b;        // coefficient of sqrt(radicand)
    Rat radicand; // fixed non-negative rational under the root

    QuadExt(Rat rational_part, Rat root_part, Rat rad)
        : a(std::move(rational_part)), b(std::move(root_part)), radicand(std::move(rad)) {}

    static QuadExt rational(Rat value, const Rat& rad) { return {std::move(value), Rat(0), rad}; }
    static QuadExt root(const Rat& rad) { return {Rat(0), Rat(1), rad}; }

    QuadExt operator+(const QuadExt& o) const { return {a + o.a, b + o.b, radicand}; }
    QuadExt operator-(const QuadExt& o) const { return {a - o.a, b - o.b, radicand}; }
    QuadExt operator-() const { return {-a, -b, radicand}; }
    QuadExt operator*(const QuadExt& o) const {
        return {a * o.a + b * o.b * radicand, a * o.b + b * o.a, radicand};
    }
    QuadExt operator*(const Rat& s) const { return {a * s, b * s, radicand}; }

    /// Exact sign of a + b*sqrt(radicand).
    int sign() const {
        if (radicand == 0 || b == 0) return sign_of(a);
        if (a == 0) return sign_of(b);
        int sa = sign_of(a);
        int sb = sign_of(b);
        if (sa == sb) return sa;
        // Opposite signs: compare a^2 with b^2 * radicand.
        Rat lhs = a * a;
        Rat rhs = b * b * radicand;
        if (lhs == rhs) return 0;
        bool abs_a_wins = lhs > rhs;
        return abs_a_wins ? sa : sb;
    }
};

inline std::string rat_to_string(const Rat& q) {
    std::string s = rat_num(q).str();
    if (rat_den(q) != 1) s += "/" + rat_den(q).str();
    return s;
}

/// Parses "p", "p/q", or a plain decimal like "-1.5" into an exact rational.
inline Rat rat_from_string(const std::string& text) {
    auto bad = [&] { return InvalidArgument("cannot parse rational: '" + text + "'"); };
    if (text.empty()) throw bad();
    auto slash = text.find('/');
    try {
        if (slash != std::string::npos) {
            Int num(text.substr(0, slash));
            Int den(text.substr(slash + 1));
            if (den == 0) throw bad();
            return Rat(num, den);
        }
        auto dot = text.find('.');
        if (dot != std::string::npos) {
            std::string head = text.substr(0, dot);
            std::string frac = text.substr(dot + 1);
            if (frac.empty()) throw bad();
            Int den = 1;
            for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
            bool neg = !head.empty() && head[0] == '-';
            Int whole = head.empty() || head == "-" || head == "+" ? Int(0) : Int(head);
            Int num = boost::multiprecision::abs(whole) * den + Int(frac);
            return Rat(neg ? -num : num, den);
        }
        return Rat(Int(text));
    } catch (const std::exception&) {
        throw bad();
    }
}

} // namespace ogwalls
