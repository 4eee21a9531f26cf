#pragma once

// Splitting of unramified primes in K and H, decided by Dirichlet characters
// modulo the conductor.
//
// Biquadratic: K is cut out by the characters chi_q and chi_k chi_r, H by
// chi_q, chi_k, chi_r. Cyclic: K is cut out by the order-4 character
// chi_q * psi with psi quartic mod k, and H = K(sqrt q).
//
// root_count_mod_p is the polynomial-side cross-check: the number of distinct
// roots of g mod p, valid whenever g is separable mod p.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "quartic/arith.hpp"
#include "quartic/fields.hpp"
#include "quartic/poly.hpp"

namespace quartic {

struct BiquadraticPattern {
    int chi_q = 0, chi_k = 0, chi_r = 0;
    friend bool operator==(const BiquadraticPattern&, const BiquadraticPattern&) = default;
};

struct CyclicPattern {
    int chi_q = 0;
    QuarticCharValue quartic = QuarticCharValue::PlusOne;
    friend bool operator==(const CyclicPattern&, const CyclicPattern&) = default;
};

namespace detail {

inline void require_unramified(std::int64_t n, const BigInt& cond) {
    BigInt g;
    const BigInt bn(static_cast<long>(n));
    mpz_gcd(g.get_mpz_t(), bn.get_mpz_t(), cond.get_mpz_t());
    if (g != 1) {
        throw std::invalid_argument(std::to_string(n) + " is ramified (shares a factor with the conductor " +
                                    cond.get_str() + ")");
    }
}

inline void require_odd_prime(std::int64_t p) {
    if (p == 2 || !is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not an odd prime");
}

}  // namespace detail

// The *_residue variants evaluate the characters on any integer coprime to
// the conductor; the Artin symbol of p depends only on p mod the conductor.

inline BiquadraticPattern pattern_of_residue(const BigInt& n, const BiquadraticSpec& s) {
    return {jacobi(n, s.q), jacobi(n, s.k), jacobi(n, s.r)};
}

inline CyclicPattern pattern_of_residue(const BigInt& n, const CyclicSpec& s) {
    const auto residue = static_cast<std::int64_t>(mod_u64(n, static_cast<std::uint64_t>(s.k)));
    return {jacobi(n, s.q), quartic_character(residue, s.k)};
}

inline bool splits_in_K(const BiquadraticPattern& p) { return p.chi_q == 1 && p.chi_k * p.chi_r == 1; }

inline bool splits_in_K(const CyclicPattern& p) {
    if (p.quartic == QuarticCharValue::Imaginary) return false;
    const int psi = p.quartic == QuarticCharValue::PlusOne ? 1 : -1;
    return p.chi_q == psi;
}

inline bool splits_in_H(const BiquadraticPattern& p) { return p.chi_q == 1 && p.chi_k == 1 && p.chi_r == 1; }

inline bool splits_in_H(const CyclicPattern& p) {
    return p.chi_q == 1 && p.quartic == QuarticCharValue::PlusOne;
}

/// Split in K but not in H: pattern (+1, -1, -1), resp. (-1, MinusOne).
inline bool in_TK_minus_TH(const BiquadraticPattern& p) { return p.chi_q == 1 && p.chi_k == -1 && p.chi_r == -1; }

inline bool in_TK_minus_TH(const CyclicPattern& p) {
    return p.chi_q == -1 && p.quartic == QuarticCharValue::MinusOne;
}

template <class Spec>
auto frobenius_pattern(std::int64_t p, const Spec& s) {
    detail::require_odd_prime(p);
    detail::require_unramified(p, conductor(s));
    return pattern_of_residue(BigInt(static_cast<long>(p)), s);
}

template <class Spec>
bool splits_completely_in_K(std::int64_t p, const Spec& s) {
    return splits_in_K(frobenius_pattern(p, s));
}

template <class Spec>
bool in_TK_minus_TH(std::int64_t p, const Spec& s) {
    return in_TK_minus_TH(frobenius_pattern(p, s));
}

/// Polynomial over F_p, constant term first, trimmed.
class FpPoly {
public:
    FpPoly(std::vector<std::uint64_t> c, std::uint64_t p) : c_(std::move(c)), p_(p) { trim(); }

    static FpPoly reduce(const IntPoly& f, std::uint64_t p) {
        std::vector<std::uint64_t> c;
        c.reserve(f.coefficients().size());
        for (const auto& v : f.coefficients()) c.push_back(mod_u64(v, p));
        return {std::move(c), p};
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<std::uint64_t>& coefficients() const { return c_; }

    FpPoly sub(const FpPoly& o) const {
        std::vector<std::uint64_t> out(std::max(c_.size(), o.c_.size()), 0);
        for (std::size_t i = 0; i < out.size(); ++i) {
            const std::uint64_t a = i < c_.size() ? c_[i] : 0;
            const std::uint64_t b = i < o.c_.size() ? o.c_[i] : 0;
            out[i] = (a + p_ - b) % p_;
        }
        return {std::move(out), p_};
    }

    FpPoly mul(const FpPoly& o) const {
        if (is_zero() || o.is_zero()) return {{}, p_};
        std::vector<std::uint64_t> out(c_.size() + o.c_.size() - 1, 0);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            for (std::size_t j = 0; j < o.c_.size(); ++j) {
                out[i + j] = (out[i + j] + mul_mod(c_[i], o.c_[j], p_)) % p_;
            }
        }
        return {std::move(out), p_};
    }

    FpPoly mod(const FpPoly& m) const {
        if (m.is_zero()) throw std::domain_error("polynomial division by zero");
        std::vector<std::uint64_t> r = c_;
        const std::uint64_t lead_inv = pow_mod(m.c_.back(), p_ - 2, p_);
        const std::size_t dm = m.c_.size() - 1;
        while (r.size() > dm) {
            const std::uint64_t factor = mul_mod(r.back(), lead_inv, p_);
            const std::size_t shift = r.size() - 1 - dm;
            for (std::size_t i = 0; i <= dm; ++i) {
                r[shift + i] = (r[shift + i] + p_ - mul_mod(factor, m.c_[i], p_)) % p_;
            }
            while (!r.empty() && r.back() == 0) r.pop_back();
        }
        return {std::move(r), p_};
    }

    FpPoly derivative() const {
        if (c_.size() <= 1) return {{}, p_};
        std::vector<std::uint64_t> out(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = mul_mod(c_[i], i % p_, p_);
        return {std::move(out), p_};
    }

    static FpPoly gcd(FpPoly a, FpPoly b) {
        while (!b.is_zero()) {
            FpPoly r = a.mod(b);
            a = std::move(b);
            b = std::move(r);
        }
        return a;
    }

    /// x^e mod m by repeated squaring.
    static FpPoly x_pow_mod(std::uint64_t e, const FpPoly& m) {
        const std::uint64_t p = m.p_;
        FpPoly result({1}, p);
        FpPoly base = FpPoly({0, 1}, p).mod(m);
        result = result.mod(m);
        while (e > 0) {
            if (e & 1U) result = result.mul(base).mod(m);
            base = base.mul(base).mod(m);
            e >>= 1U;
        }
        return result;
    }

private:
    void trim() {
        for (auto& v : c_) v %= p_;
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<std::uint64_t> c_;
    std::uint64_t p_;
};

struct RootCount {
    int roots = 0;       // distinct roots of g in F_p
    bool separable = false;
};

/// deg gcd(x^p - x, g) over F_p, plus whether gcd(g, g') is constant.
inline RootCount root_count_mod_p(const IntPoly& g, std::int64_t p) {
    detail::require_odd_prime(p);
    const auto up = static_cast<std::uint64_t>(p);
    const FpPoly gp = FpPoly::reduce(g, up);
    if (gp.degree() < 1) throw std::invalid_argument("root_count_mod_p: polynomial is constant mod " + std::to_string(p));
    RootCount out;
    const FpPoly xp = FpPoly::x_pow_mod(up, gp);
    const FpPoly h = FpPoly::gcd(gp, xp.sub(FpPoly({0, 1}, up)));
    out.roots = h.degree();
    out.separable = FpPoly::gcd(gp, gp.derivative()).degree() == 0;
    return out;
}

}  // namespace quartic
