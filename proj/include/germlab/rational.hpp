#pragma once

// Exact rational arithmetic used throughout the library. Thin helpers on
// top of GMP's mpq_class: parsing ("3/4", "0.25", "2"), formatting, and
// a few numeric utilities the comparators and engines share.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace germlab {

using Rational = mpq_class;
using Integer = mpz_class;

/// Thrown on malformed numeric or distribution literals.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parse "p/q", an integer, or a decimal ("0.25" -> 1/4, exactly).
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational literal");
    const auto dot = text.find('.');
    if (dot == std::string::npos) {
        Rational q;
        if (q.set_str(text, 10) != 0)
            throw ParseError("bad rational literal '" + text + "'");
        q.canonicalize();
        if (q.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
        return q;
    }
    // exact decimal -> rational
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    const auto frac_len = text.size() - dot - 1;
    if (frac_len == 0 || digits.empty())
        throw ParseError("bad decimal literal '" + text + "'");
    bool neg = false;
    if (digits[0] == '+' || digits[0] == '-') {
        neg = digits[0] == '-';
        digits.erase(digits.begin());
    }
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("bad decimal literal '" + text + "'");
    Integer num(digits, 10);
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
    Rational q(num, den);
    q.canonicalize();
    return neg ? Rational(-q) : q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline double to_double(const Rational& q) { return q.get_d(); }

inline Rational rational_pow(const Rational& base, unsigned k) {
    Rational out(1);
    Rational acc = base;
    while (k > 0) {
        if (k & 1u) out *= acc;
        k >>= 1u;
        if (k) acc *= acc;
    }
    return out;
}

inline int sign(const Rational& q) { return sgn(q); }

/// Rational with the smallest denominator in [lo, hi] (Stern-Brocot walk).
/// Used to bias certified thresholds up to friendly certificate points.
inline Rational simplest_rational_in(const Rational& lo, const Rational& hi) {
    if (lo > hi) throw std::invalid_argument("simplest_rational_in: empty interval");
    if (lo == hi) return lo;
    if (lo <= 0 && hi >= 0) return Rational(0);
    if (hi < 0) return -simplest_rational_in(-hi, -lo);
    // 0 < lo < hi: continued-fraction style descent
    Integer a = lo.get_num(), b = lo.get_den();
    Integer c = hi.get_num(), d = hi.get_den();
    Integer p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    bool flipped = false;
    while (true) {
        Integer f = a / b;  // floor since a,b > 0
        Integer cd_floor = c / d;
        if (f < cd_floor || (f * d < c && Rational(f + 1, 1) <= Rational(c, d))) {
            // an integer f+1 <= hi lies in (lo, hi] iff f+1 > lo
            Integer cand = f + 1;
            Rational r(cand * p1 + p0, cand * q1 + q0);
            if (flipped) {
                // r accumulated as continued fraction; fall through below
            }
            Rational value(p1 * cand + p0, q1 * cand + q0);
            (void)r;
            return value;
        }
        // consume the common integer part
        Integer np = f * p1 + p0, nq = f * q1 + q0;
        p0 = p1; q0 = q1; p1 = np; q1 = nq;
        Integer na = d, nb = c - f * d;
        Integer nc = b, nd = a - f * b;
        a = na; b = nb; c = nc; d = nd;
        flipped = !flipped;
        if (b == 0 || d == 0) {
            // hit an endpoint exactly
            return flipped ? Rational(p1, q1) : Rational(p1, q1);
        }
    }
}

}  // namespace germlab
