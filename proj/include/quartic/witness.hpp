#pragma once

// Witness pair (s, u): s is the smallest prime that splits in K but not in H,
// is distinct from 2 and the conductor primes, and is not 1 modulo any of
// them; u = s if s != 1 (mod 4), otherwise u = s + 2 * conductor.
// Conditions with ell = lcm(16, conductor) = 16 * conductor:
//   (1) gcd(u, ell) = 1
//   (2) gcd((u - 1)/2, ell) = 1
//   (3) u mod conductor lies in the class of primes split in K, inert in H/K.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "quartic/arith.hpp"
#include "quartic/errors.hpp"
#include "quartic/fields.hpp"
#include "quartic/splitting.hpp"

namespace quartic {

inline constexpr std::int64_t kDefaultSearchBound = 1'000'000;

struct ConditionReport {
    BigInt ell;
    std::array<bool, 3> passed{};
    std::array<std::string, 3> detail;

    bool all() const { return passed[0] && passed[1] && passed[2]; }
};

struct WitnessPair {
    std::int64_t s = 0;
    BigInt u;
    BigInt ell;
    std::array<bool, 3> conditions_verified{};
};

namespace detail {

inline std::vector<std::int64_t> spec_primes(const BiquadraticSpec& s) { return {s.q, s.k, s.r}; }
inline std::vector<std::int64_t> spec_primes(const CyclicSpec& s) { return {s.q, s.k}; }

inline BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

}  // namespace detail

template <class Spec>
std::int64_t find_s(const Spec& spec, std::int64_t bound = kDefaultSearchBound) {
    const auto avoid = detail::spec_primes(spec);
    for (std::int64_t p = 3; p <= bound; p += 2) {
        if (!is_prime(p)) continue;
        bool skip = false;
        for (std::int64_t t : avoid) {
            if (p == t || p % t == 1) {
                skip = true;
                break;
            }
        }
        if (skip) continue;
        if (in_TK_minus_TH(pattern_of_residue(BigInt(static_cast<long>(p)), spec))) return p;
    }
    throw SearchExhausted("no admissible witness prime s <= " + std::to_string(bound));
}

template <class Spec>
BigInt derive_u(std::int64_t s, const Spec& spec) {
    if (s % 4 != 1) return BigInt(static_cast<long>(s));
    return BigInt(static_cast<long>(s)) + 2 * conductor(spec);
}

template <class Spec>
BigInt witness_modulus(const Spec& spec) {
    return 16 * conductor(spec);
}

/// Evaluates all three conditions without throwing.
template <class Spec>
ConditionReport audit_conditions(const BigInt& u, const Spec& spec) {
    if (sgn(u) <= 0 || mpz_even_p(u.get_mpz_t())) {
        throw std::invalid_argument("witness u must be a positive odd integer, got " + u.get_str());
    }
    ConditionReport rep;
    rep.ell = witness_modulus(spec);
    const BigInt g1 = detail::gcd(u, rep.ell);
    rep.passed[0] = g1 == 1;
    rep.detail[0] = "gcd(u, ell) = " + g1.get_str();

    const BigInt half = (u - 1) / 2;
    const BigInt g2 = detail::gcd(half, rep.ell);
    rep.passed[1] = g2 == 1;
    rep.detail[1] = "gcd((u-1)/2, ell) = " + g2.get_str();

    const BigInt f = conductor(spec);
    BigInt residue;
    mpz_fdiv_r(residue.get_mpz_t(), u.get_mpz_t(), f.get_mpz_t());
    if (detail::gcd(residue, f) != 1) {
        rep.passed[2] = false;
        rep.detail[2] = "u mod conductor = " + residue.get_str() + " is not a unit";
    } else {
        const auto pat = pattern_of_residue(residue, spec);
        rep.passed[2] = in_TK_minus_TH(pat);
        rep.detail[2] = "u mod conductor = " + residue.get_str() +
                        (rep.passed[2] ? " splits in K and not in H" : " is not in T_K \\ T_H");
    }
    return rep;
}

/// Throws ConditionFailure naming the first failed condition.
template <class Spec>
ConditionReport check_conditions(const BigInt& u, const Spec& spec) {
    ConditionReport rep = audit_conditions(u, spec);
    for (std::size_t i = 0; i < 3; ++i) {
        if (!rep.passed[i]) throw ConditionFailure("(" + std::to_string(i + 1) + ")", rep.detail[i]);
    }
    return rep;
}

/// find_s, derive_u, and a mandatory re-check of the conditions.
template <class Spec>
WitnessPair compute_witness(const Spec& spec, std::int64_t bound = kDefaultSearchBound) {
    WitnessPair w;
    w.s = find_s(spec, bound);
    w.u = derive_u(w.s, spec);
    const ConditionReport rep = audit_conditions(w.u, spec);
    if (!rep.all()) {
        throw InternalError("constructed witness u = " + w.u.get_str() + " fails a condition: " + rep.detail[0] +
                            "; " + rep.detail[1] + "; " + rep.detail[2]);
    }
    w.ell = rep.ell;
    w.conditions_verified = rep.passed;
    return w;
}

}  // namespace quartic
