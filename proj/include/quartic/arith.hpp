#pragma once

// Exact integer number theory shared by every other module: primality,
// Legendre/Jacobi symbols, the quartic residue class at a prime k = 1 (mod 4),
// perfect squares, and the GMP-backed integer/rational aliases.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace quartic {

using BigInt = mpz_class;
using Rational = mpq_class;

inline std::int64_t to_int64(const BigInt& v) {
    if (!v.fits_slong_p()) {
        throw std::overflow_error("integer does not fit in 64 bits: " + v.get_str());
    }
    return v.get_si();
}

inline bool fits_uint64(const BigInt& v) {
    return sgn(v) >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64;
}

inline std::uint64_t to_uint64(const BigInt& v) {
    if (!fits_uint64(v)) {
        throw std::overflow_error("integer does not fit in unsigned 64 bits: " + v.get_str());
    }
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, v.get_mpz_t());
    return out;
}

inline BigInt from_uint64(std::uint64_t v) {
    BigInt out;
    mpz_import(out.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
    return out;
}

namespace detail {
__extension__ using u128 = unsigned __int128;
__extension__ using i128 = __int128;
}  // namespace detail

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<detail::u128>(a) * b % m);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    if (m == 1) return 0;
    std::uint64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1U) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1U;
    }
    return result;
}

/// Non-negative residue of a (possibly negative) integer.
inline std::uint64_t mod_u64(std::int64_t a, std::uint64_t m) {
    const auto sm = static_cast<detail::i128>(m);
    detail::i128 r = static_cast<detail::i128>(a) % sm;
    if (r < 0) r += sm;
    return static_cast<std::uint64_t>(r);
}

inline std::uint64_t mod_u64(const BigInt& a, std::uint64_t m) {
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), from_uint64(m).get_mpz_t());
    return to_uint64(r);
}

namespace detail {

inline bool miller_rabin_round(std::uint64_t n, std::uint64_t d, int s, std::uint64_t a) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

}  // namespace detail

/// Deterministic for every 64-bit input: the first twelve primes as
/// Miller-Rabin bases are a proven witness set below 3.3e24.
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    static constexpr std::uint64_t kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (std::uint64_t p : kBases) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    for (std::uint64_t a : kBases) {
        if (!detail::miller_rabin_round(n, d, s, a)) return false;
    }
    return true;
}

inline bool is_prime(std::int64_t n) {
    return n >= 2 && is_prime(static_cast<std::uint64_t>(n));
}

inline bool is_prime(int n) { return is_prime(static_cast<std::int64_t>(n)); }

/// Inputs beyond 64 bits are rejected rather than answered probabilistically.
inline bool is_prime(const BigInt& n) {
    if (sgn(n) <= 0) return false;
    if (!fits_uint64(n)) {
        throw std::invalid_argument("is_prime: input exceeds the exact 64-bit range: " + n.get_str());
    }
    return is_prime(to_uint64(n));
}

/// Primes in [lo, hi] by a segmented-free sieve of Eratosthenes (hi is small
/// in every caller).
inline std::vector<std::int64_t> primes_in_range(std::int64_t lo, std::int64_t hi) {
    std::vector<std::int64_t> out;
    if (hi < 2 || hi < lo) return out;
    std::vector<bool> composite(static_cast<std::size_t>(hi) + 1, false);
    for (std::int64_t i = 2; i * i <= hi; ++i) {
        if (composite[static_cast<std::size_t>(i)]) continue;
        for (std::int64_t j = i * i; j <= hi; j += i) composite[static_cast<std::size_t>(j)] = true;
    }
    for (std::int64_t i = std::max<std::int64_t>(lo, 2); i <= hi; ++i) {
        if (!composite[static_cast<std::size_t>(i)]) out.push_back(i);
    }
    return out;
}

/// Jacobi symbol (a/n) for odd n >= 1, via quadratic reciprocity.
inline int jacobi(std::int64_t a, std::int64_t n) {
    if (n <= 0 || (n & 1) == 0) {
        throw std::invalid_argument("jacobi: modulus must be odd and positive, got " + std::to_string(n));
    }
    std::uint64_t m = static_cast<std::uint64_t>(n);
    std::uint64_t x = mod_u64(a, m);
    int t = 1;
    while (x != 0) {
        while ((x & 1U) == 0) {
            x >>= 1U;
            const std::uint64_t r = m & 7U;
            if (r == 3 || r == 5) t = -t;
        }
        std::swap(x, m);
        if ((x & 3U) == 3 && (m & 3U) == 3) t = -t;
        x %= m;
    }
    return m == 1 ? t : 0;
}

inline int jacobi(const BigInt& a, std::int64_t n) {
    if (n <= 0 || (n & 1) == 0) {
        throw std::invalid_argument("jacobi: modulus must be odd and positive, got " + std::to_string(n));
    }
    return jacobi(static_cast<std::int64_t>(mod_u64(a, static_cast<std::uint64_t>(n))), n);
}

/// Class of a quartic residue character value at a point: +1, -1, or one of
/// the two primitive fourth roots of unity (not distinguished).
enum class QuarticCharValue { PlusOne, MinusOne, Imaginary };

inline const char* to_string(QuarticCharValue v) {
    switch (v) {
        case QuarticCharValue::PlusOne: return "+1";
        case QuarticCharValue::MinusOne: return "-1";
        case QuarticCharValue::Imaginary: return "i";
    }
    return "?";
}

/// Value class of p^((k-1)/4) mod k. Independent of which quartic character
/// mod k is chosen, since both send a quadratic residue to the same sign.
inline QuarticCharValue quartic_character(std::int64_t p, std::int64_t k) {
    if (k < 5 || k % 4 != 1 || !is_prime(k)) {
        throw std::invalid_argument("quartic_character: modulus must be a prime = 1 (mod 4), got " +
                                    std::to_string(k));
    }
    const auto km = static_cast<std::uint64_t>(k);
    const std::uint64_t residue = mod_u64(p, km);
    if (residue == 0) {
        throw std::invalid_argument("quartic_character: " + std::to_string(p) + " is divisible by " +
                                    std::to_string(k));
    }
    const std::uint64_t v = pow_mod(residue, (km - 1) / 4, km);
    if (v == 1) return QuarticCharValue::PlusOne;
    if (v == km - 1) return QuarticCharValue::MinusOne;
    return QuarticCharValue::Imaginary;
}

inline std::optional<BigInt> is_perfect_square(const BigInt& n) {
    if (sgn(n) < 0) return std::nullopt;
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
    BigInt root;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    return root;
}

inline std::optional<std::int64_t> is_perfect_square(std::int64_t n) {
    auto r = is_perfect_square(BigInt(static_cast<long>(n)));
    if (!r) return std::nullopt;
    return r->get_si();
}

/// Exact square root of a rational, if it has one.
inline std::optional<Rational> rational_sqrt(const Rational& x) {
    if (sgn(x) < 0) return std::nullopt;
    auto num = is_perfect_square(BigInt(x.get_num()));
    if (!num) return std::nullopt;
    auto den = is_perfect_square(BigInt(x.get_den()));
    if (!den) return std::nullopt;
    Rational out(*num, *den);
    out.canonicalize();
    return out;
}

inline std::int64_t isqrt(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("isqrt of a negative number");
    BigInt r;
    BigInt bn(static_cast<long>(n));
    mpz_sqrt(r.get_mpz_t(), bn.get_mpz_t());
    return r.get_si();
}

inline bool is_squarefree(std::int64_t n) {
    if (n == 0) return false;
    if (n < 0) n = -n;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return false;
    }
    return true;
}

/// Distinct odd prime divisors by trial division (inputs are conductors of
/// a few small primes).
inline std::vector<std::int64_t> odd_prime_divisors(std::int64_t n) {
    std::vector<std::int64_t> out;
    if (n < 0) n = -n;
    while (n % 2 == 0 && n > 0) n /= 2;
    for (std::int64_t p = 3; p * p <= n; p += 2) {
        if (n % p != 0) continue;
        out.push_back(p);
        while (n % p == 0) n /= p;
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace quartic
