#pragma once

// Motzkin-type construction for an ideal C = cZ of R = Z.
//
// The fractional ideals containing Z are I = (1/n)Z. For x in IC \ C and
// y in C, x + y = (c/n)(a + n t) with a != 0 (mod n), so
// (x + y)^{-1} I C = (1/|a + n t|) Z. Hence (1/n)Z enters A_i exactly when
// every nonzero coset a (mod n) has a representative z with (1/|z|)Z in
// A_{i-1}. Levels are computed over n <= n_max.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "quartic/arith.hpp"

namespace quartic {

/// The fractional ideal (1/n)Z.
struct FracIdealZ {
    std::int64_t n = 1;
    friend bool operator==(const FracIdealZ&, const FracIdealZ&) = default;
};

/// (x + y)^{-1} I C for I = (1/n)Z, C = cZ, x = c a / n, y = c t; computed
/// with exact rationals rather than from the closed form.
inline FracIdealZ shifted_ideal(std::int64_t c, std::int64_t n, std::int64_t a, std::int64_t t) {
    const Rational ic(BigInt(static_cast<long>(c)), BigInt(static_cast<long>(n)));  // generator of IC
    Rational x(BigInt(static_cast<long>(c)) * a, BigInt(static_cast<long>(n)));
    x.canonicalize();
    const Rational y(BigInt(static_cast<long>(c)) * t);
    const Rational shift = x + y;
    if (sgn(shift) == 0) throw std::invalid_argument("shifted_ideal: x + y = 0");
    Rational g = ic / shift;
    g = abs(g);
    g.canonicalize();
    if (g.get_num() != 1) {
        throw std::logic_error("shifted ideal does not contain Z: generator " + g.get_str());
    }
    return {to_int64(BigInt(g.get_den()))};
}

enum class LadderVerdict { Assigned, AboveLevelCap, Unexplored };

inline const char* to_string(LadderVerdict v) {
    switch (v) {
        case LadderVerdict::Assigned: return "assigned";
        case LadderVerdict::AboveLevelCap: return "above-level-cap";
        case LadderVerdict::Unexplored: return "unexplored";
    }
    return "?";
}

struct Ladder {
    std::int64_t c = 1;
    std::int64_t n_max = 1;
    int level_cap = 0;
    std::int64_t window = 0;  // representative window; 0 means |z| <= n
    std::vector<int> level;   // index n; -1 when not assigned
    std::vector<LadderVerdict> verdict;
};

namespace detail {

inline std::int64_t window_for(const Ladder& L, std::int64_t n) { return std::max(n, L.window); }

/// Representatives z = a + n t of the coset a (mod n) with 0 < |z| <= w,
/// in order of increasing |z|, positive first.
inline std::vector<std::int64_t> coset_representatives(std::int64_t a, std::int64_t n, std::int64_t w) {
    std::vector<std::int64_t> out;
    const std::int64_t base = ((a % n) + n) % n;
    for (std::int64_t z = base; z <= w; z += n) {
        if (z != 0) out.push_back(z);
    }
    for (std::int64_t z = base - n; -z <= w; z -= n) {
        if (z != 0) out.push_back(z);
    }
    std::sort(out.begin(), out.end(), [](std::int64_t x, std::int64_t y) {
        const std::int64_t ax = x < 0 ? -x : x, ay = y < 0 ? -y : y;
        return ax != ay ? ax < ay : x > y;
    });
    return out;
}

}  // namespace detail

/// Builds the ladder. With the default window (audit_window <= n) every
/// representative is smaller than n, so levels are final in increasing n.
/// A wider audit window reruns the construction level by level over the
/// explored range; representatives beyond n_max are never used.
inline Ladder build_ladder(std::int64_t c, std::int64_t n_max, int level_cap, std::int64_t audit_window = 0) {
    if (c < 1 || n_max < 1 || level_cap < 0) {
        throw std::invalid_argument("build_ladder: need c >= 1, n_max >= 1, level_cap >= 0");
    }
    Ladder L;
    L.c = c;
    L.n_max = n_max;
    L.level_cap = level_cap;
    L.window = audit_window;
    const auto N = static_cast<std::size_t>(n_max);
    L.level.assign(N + 1, -1);
    L.verdict.assign(N + 1, LadderVerdict::AboveLevelCap);
    L.level[1] = 0;
    L.verdict[1] = LadderVerdict::Assigned;

    if (audit_window <= 0) {
        for (std::int64_t n = 2; n <= n_max; ++n) {
            int worst = -1;
            bool ok = true;
            for (std::int64_t a = 1; a < n && ok; ++a) {
                int best = -1;
                for (std::int64_t z : detail::coset_representatives(a, n, n)) {
                    const std::int64_t m = shifted_ideal(c, n, a, (z - a) / n).n;
                    const int lv = L.level[static_cast<std::size_t>(m)];
                    if (lv >= 0 && (best < 0 || lv < best)) best = lv;
                }
                if (best < 0) ok = false;
                worst = std::max(worst, best);
            }
            if (ok && worst + 1 <= level_cap) {
                L.level[static_cast<std::size_t>(n)] = worst + 1;
                L.verdict[static_cast<std::size_t>(n)] = LadderVerdict::Assigned;
            }
        }
        return L;
    }

    std::vector<bool> touched_boundary(N + 1, false);
    for (int i = 1; i <= level_cap; ++i) {
        const std::vector<int> prev = L.level;
        bool changed = false;
        for (std::int64_t n = 2; n <= n_max; ++n) {
            if (prev[static_cast<std::size_t>(n)] >= 0) continue;
            bool all = true;
            for (std::int64_t a = 1; a < n && all; ++a) {
                bool found = false;
                for (std::int64_t z : detail::coset_representatives(a, n, detail::window_for(L, n))) {
                    const std::int64_t az = z < 0 ? -z : z;
                    if (az > n_max) {
                        touched_boundary[static_cast<std::size_t>(n)] = true;
                        continue;
                    }
                    const std::int64_t m = shifted_ideal(c, n, a, (z - a) / n).n;
                    const int lv = prev[static_cast<std::size_t>(m)];
                    if (lv >= 0 && lv <= i - 1) {
                        found = true;
                        break;
                    }
                }
                all = found;
            }
            if (all) {
                L.level[static_cast<std::size_t>(n)] = i;
                L.verdict[static_cast<std::size_t>(n)] = LadderVerdict::Assigned;
                changed = true;
            }
        }
        if (!changed) break;
    }
    for (std::size_t n = 2; n <= N; ++n) {
        if (L.level[n] < 0 && touched_boundary[n]) L.verdict[n] = LadderVerdict::Unexplored;
    }
    return L;
}

struct PsiValue {
    LadderVerdict verdict = LadderVerdict::Unexplored;
    std::optional<int> level;
};

inline PsiValue psi(const Ladder& L, std::int64_t n) {
    if (n < 1 || n > L.n_max) {
        throw std::out_of_range("psi: n = " + std::to_string(n) + " outside 1.." + std::to_string(L.n_max));
    }
    const auto idx = static_cast<std::size_t>(n);
    PsiValue v;
    v.verdict = L.verdict[idx];
    if (L.level[idx] >= 0) v.level = L.level[idx];
    return v;
}

/// A representative z of the coset a (mod n) with psi(|z|) < psi(n), if any.
inline std::optional<std::int64_t> euclidean_step(const Ladder& L, std::int64_t n, std::int64_t a) {
    const auto pn = psi(L, n);
    if (!pn.level) return std::nullopt;
    for (std::int64_t z : detail::coset_representatives(a, n, detail::window_for(L, n))) {
        const std::int64_t az = z < 0 ? -z : z;
        if (az > L.n_max) continue;
        const auto pz = psi(L, shifted_ideal(L.c, n, a, (z - a) / n).n);
        if (pz.level && *pz.level < *pn.level) return z;
    }
    return std::nullopt;
}

struct EuclideanCheckReport {
    std::int64_t samples = 0;
    std::int64_t violations = 0;
    std::vector<std::pair<std::int64_t, std::int64_t>> failing;  // (n, a), first few
};

/// Samples random pairs (n, a) with psi(n) assigned and a != 0 (mod n), and
/// checks that some representative strictly lowers psi. Seeded, so repeatable.
inline EuclideanCheckReport euclidean_property_check(const Ladder& L, std::int64_t samples,
                                                     std::uint64_t seed = 0x5eed) {
    EuclideanCheckReport rep;
    std::vector<std::int64_t> pool;
    for (std::int64_t n = 2; n <= L.n_max; ++n) {
        if (L.level[static_cast<std::size_t>(n)] >= 0) pool.push_back(n);
    }
    if (pool.empty()) return rep;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (std::int64_t i = 0; i < samples; ++i) {
        const std::int64_t n = pool[pick(rng)];
        std::uniform_int_distribution<std::int64_t> coset(1, n - 1);
        const std::int64_t a = coset(rng);
        ++rep.samples;
        if (!euclidean_step(L, n, a)) {
            ++rep.violations;
            if (rep.failing.size() < 16) rep.failing.emplace_back(n, a);
        }
    }
    return rep;
}

}  // namespace quartic
