#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "pab/errors.hpp"

namespace pab {

using BigInt = boost::multiprecision::cpp_int;

// The Ramsey threshold R(p,q) = (p+q)^(1/c) is exposed with 1/c restricted to
// a positive integer exponent so every formula stays exact integer
// arithmetic; c = 1 (exponent 1) is the worst-case-style default.  All
// desk-scale search results are independent of this knob: it only scales the
// reported thresholds.
struct BoundConfig {
    long long c_inverse = 1; // R(p,q) = (p+q)^c_inverse

    enum class DKind { Poly, Fixed } d_kind = DKind::Poly;
    // Poly: d(H, s) = s^(500 |V(H)|^2) with |V(P(a,a))| = 2a+3.
    // Fixed: d = d_fixed, for small-scale experiments.
    BigInt d_fixed = 0;
};

struct BoundSheet {
    int a = 0;
    int omega = 0;
    long long tau = 0;
    BoundConfig config;

    BigInt f;                 // a*(omega+1) + 2
    BigInt s;                 // R(omega, f)
    BigInt d_value;           // d(P(a,a), s)
    BigInt term_degeneracy;   // d(P(a,a), R(omega, f))
    BigInt term_dominating;   // (1+tau)(a+1)*omega
    BigInt term_cutset;       // R(omega,f)(f+1)^(a*omega) + omega^2 (f^(a+1)+2)
    BigInt b;                 // 1 + max of the three terms
    BigInt chi_strict_bound;  // largest chi consistent with chi < (3 + 1/16) b
    BigInt final_bound;       // the closed-form bound after the induction
};

namespace detail {

inline BigInt big_pow(const BigInt& base, long long exp) {
    BigInt result = 1, b = base;
    long long e = exp;
    while (e > 0) {
        if (e & 1) result *= b;
        b *= b;
        e >>= 1;
    }
    return result;
}

} // namespace detail

inline BigInt ramsey_threshold(long long p, long long q, const BoundConfig& cfg = {}) {
    if (cfg.c_inverse < 1) throw PreconditionError("ramsey_threshold: 1/c must be >= 1");
    return detail::big_pow(BigInt(p + q), cfg.c_inverse);
}

// Evaluates every bound exactly.  These numbers are astronomically large by
// design; callers report them, they do not allocate anything of that size.
inline BoundSheet compute_bounds(int a, int omega, long long tau, BoundConfig cfg = {}) {
    if (a < 2) throw PreconditionError("compute_bounds: a must be >= 2");
    if (omega < 1) throw PreconditionError("compute_bounds: omega must be >= 1");
    if (tau < 0) throw PreconditionError("compute_bounds: tau must be >= 0");
    if (cfg.c_inverse < 1) throw PreconditionError("compute_bounds: 1/c must be >= 1");
    if (cfg.d_kind == BoundConfig::DKind::Fixed && cfg.d_fixed < 1)
        throw PreconditionError("compute_bounds: fixed d must be >= 1");

    BoundSheet sheet;
    sheet.a = a;
    sheet.omega = omega;
    sheet.tau = tau;
    sheet.config = cfg;

    sheet.f = BigInt(a) * (omega + 1) + 2;
    long long f_ll = sheet.f.convert_to<long long>();
    sheet.s = ramsey_threshold(omega, f_ll, cfg);

    if (cfg.d_kind == BoundConfig::DKind::Poly) {
        long long pattern_vertices = 2LL * a + 3;
        sheet.d_value = detail::big_pow(sheet.s, 500 * pattern_vertices * pattern_vertices);
    } else {
        sheet.d_value = cfg.d_fixed;
    }

    sheet.term_degeneracy = sheet.d_value;
    sheet.term_dominating = BigInt(1 + tau) * (a + 1) * omega;
    sheet.term_cutset = sheet.s * detail::big_pow(sheet.f + 1, (long long)a * omega) +
                        BigInt(omega) * omega * (detail::big_pow(sheet.f, a + 1) + 2);
    sheet.b = 1 + std::max({sheet.term_degeneracy, sheet.term_dominating, sheet.term_cutset});

    // chi < (3 + 1/16) b = 49b/16, so the largest admissible integer is
    // ceil(49b/16) - 1
    sheet.chi_strict_bound = (49 * sheet.b + 15) / 16 - 1;

    // closed form after the induction on omega
    BigInt base = BigInt(a + 1) * (omega + 1);
    long long pattern_vertices = 2LL * a + 3;
    sheet.final_bound =
        (detail::big_pow(base, cfg.c_inverse * 500 * pattern_vertices * pattern_vertices) +
         detail::big_pow(base, cfg.c_inverse * a * omega)) *
        detail::big_pow(BigInt(8) * (a + 1) * omega, omega);
    return sheet;
}

} // namespace pab
