#pragma once

// Minimality certificate for a claimed fundamental solution of
// x^2 - D y^2 = +-4.
//
// Small y: every y' < y is tried directly. Large y: every y' <= kDirect is
// tried, so the true fundamental unit e0 has y0 > kDirect; if the claim e
// were not fundamental then e = e0^n with n >= 2 and e0 >= kDirect, which
// bounds n. For each such n, e0 would have trace near e^(1/n); all candidate
// traces are tested by exact exponentiation.

#include <cmath>
#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace oracle {

inline constexpr std::int64_t kPellDirect = 100000;

struct PellVerdict {
    bool ok = false;
    std::string why;
};

inline bool square_root_exact(const mpz_class& n, mpz_class& root) {
    if (n < 0 || mpz_perfect_square_p(n.get_mpz_t()) == 0) return false;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    return true;
}

inline bool is_square_i64(std::int64_t n) {
    if (n < 0) return false;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r * r == n;
}

/// ((x + y sqrt D)/2)^n as a pair (X, Y) with the same half-coordinate form.
inline void unit_power(const mpz_class& x, const mpz_class& y, long D, unsigned n, mpz_class& X, mpz_class& Y) {
    X = 2;
    Y = 0;
    for (unsigned i = 0; i < n; ++i) {
        const mpz_class nx = (X * x + D * Y * y) / 2;
        const mpz_class ny = (X * y + Y * x) / 2;
        X = nx;
        Y = ny;
    }
}

inline PellVerdict check_fundamental_unit(long D, const mpz_class& x, const mpz_class& y, int norm) {
    if (x <= 0 || y <= 0) return {false, "non-positive coordinates"};
    if (x * x - D * y * y != 4 * norm) return {false, "x^2 - D y^2 != 4 * norm"};
    const mpz_class limit = y - 1 < kPellDirect ? mpz_class(y - 1) : mpz_class(kPellDirect);
    const long lim = limit.get_si();
    // D y^2 + 4 < 2^62 throughout this window for D below 10^8.
    for (std::int64_t yy = 1; yy <= lim; ++yy) {
        const std::int64_t base = static_cast<std::int64_t>(D) * yy * yy;
        if (is_square_i64(base + 4) || is_square_i64(base - 4)) {
            return {false, "smaller solution at y = " + std::to_string(yy)};
        }
    }
    if (y <= kPellDirect) return {true, "direct"};

    // e0 > y0 sqrt(D) / 2 > kDirect, so n < log(e) / log(kDirect).
    const double log_e = std::log(x.get_d());
    const auto n_max = static_cast<unsigned>(log_e / std::log(static_cast<double>(kPellDirect))) + 1;
    for (unsigned n = 2; n <= n_max; ++n) {
        mpz_class r;
        mpz_root(r.get_mpz_t(), x.get_mpz_t(), n);
        for (long delta = -1; delta <= 2; ++delta) {
            const mpz_class t = r + delta;
            if (t <= 0) continue;
            for (int nm : {1, -1}) {
                mpz_class y0;
                const mpz_class rad = t * t - 4 * nm;
                if (rad % D != 0 || !square_root_exact(rad / D, y0) || y0 == 0) continue;
                mpz_class X, Y;
                unit_power(t, y0, D, n, X, Y);
                if (X == x && Y == y) return {false, "claimed unit is a " + std::to_string(n) + "-th power"};
            }
        }
    }
    return {true, "power certificate"};
}

}  // namespace oracle
