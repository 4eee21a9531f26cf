#pragma once

// Real quadratic fields Q(sqrt m): fundamental discriminant, narrow and wide
// class numbers from cycles of reduced indefinite forms, and the fundamental
// unit from the continued fraction of the standard integral generator.

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "quartic/arith.hpp"

namespace quartic {

struct QuadraticFieldData {
    std::int64_t m = 0;        // squarefree radicand
    std::int64_t D = 0;        // fundamental discriminant
    std::int64_t h = 0;        // wide class number
    std::int64_t h_narrow = 0;
    BigInt x, y;               // eps = (x + y sqrt D) / 2
    int eps_norm = 0;          // +1 or -1
};

/// Binary quadratic form a x^2 + b x y + c y^2.
struct Form {
    std::int64_t a = 0, b = 0, c = 0;
    friend auto operator<=>(const Form&, const Form&) = default;
};

inline bool is_fundamental_discriminant(std::int64_t D) {
    if (D <= 1) return false;
    if (D % 4 == 1) return is_squarefree(D);
    if (D % 4 != 0) return false;
    const std::int64_t m = D / 4;
    return (m % 4 == 2 || m % 4 == 3) && is_squarefree(m);
}

inline std::int64_t fundamental_discriminant(std::int64_t m) {
    if (m <= 1 || !is_squarefree(m)) {
        throw std::invalid_argument("fundamental_discriminant: " + std::to_string(m) +
                                    " is not a squarefree integer > 1");
    }
    return m % 4 == 1 ? m : 4 * m;
}

namespace detail {

inline void require_fundamental(std::int64_t D, const char* who) {
    if (!is_fundamental_discriminant(D)) {
        throw std::invalid_argument(std::string(who) + ": " + std::to_string(D) +
                                    " is not a positive fundamental discriminant");
    }
}

}  // namespace detail

/// All reduced forms of discriminant D, i.e. |sqrt D - 2|a|| < b < sqrt D,
/// including those with negative a. Sorted.
inline std::vector<Form> reduced_forms(std::int64_t D) {
    const std::int64_t s = isqrt(D);
    std::vector<Form> out;
    for (std::int64_t b = (D & 1) ? 1 : 2; b * b < D; b += 2) {
        const std::int64_t n = (D - b * b) / 4;  // a*c = -n
        // sqrt D - b < 2|a| < sqrt D + b, decided in integers
        for (std::int64_t a = 1; a <= s; ++a) {
            if (n % a != 0) continue;
            const std::int64_t lo = 2 * a + b;
            const std::int64_t hi = 2 * a - b;
            if (lo * lo <= D) continue;
            if (hi > 0 && hi * hi >= D) break;
            out.push_back({a, b, -n / a});
            out.push_back({-a, b, n / a});
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// One reduction step: (a,b,c) -> (c, r, (r^2 - D)/4c) with r = -b (mod 2c)
/// normalised against |c|. A permutation of the reduced forms.
inline Form rho(const Form& f, std::int64_t D) {
    const std::int64_t s = isqrt(D);
    const std::int64_t c = f.c;
    const std::int64_t ac = c < 0 ? -c : c;
    const std::int64_t m = 2 * ac;
    std::int64_t r = 0;
    if (ac * ac < D) {
        // largest r < sqrt D in the class of -b
        r = s - static_cast<std::int64_t>(mod_u64(s + f.b, static_cast<std::uint64_t>(m)));
    } else {
        r = static_cast<std::int64_t>(mod_u64(-f.b, static_cast<std::uint64_t>(m)));
        if (r > ac) r -= m;
    }
    return {c, r, (r * r - D) / (4 * c)};
}

/// Minimal (x, y) > 0 with x^2 - D y^2 = +-4, from the continued fraction of
/// (1 + sqrt D)/2 or sqrt(D)/2. Exact and arbitrary precision.
struct FundamentalUnit {
    BigInt x, y;
    int norm = 0;
};

inline FundamentalUnit fundamental_unit(std::int64_t D) {
    detail::require_fundamental(D, "fundamental_unit");
    const bool odd = (D & 1) != 0;
    const std::int64_t s = isqrt(D);
    // complete quotient (P + sqrt D) / Q
    std::int64_t P = odd ? 1 : 0;
    std::int64_t Q = 2;
    // convergents: (p, q) = (p_{i-1}, q_{i-1}), starting from (1, 0), (0, 1)
    BigInt p = 1, p_prev = 0;
    BigInt q = 0, q_prev = 1;
    const BigInt bigD = BigInt(static_cast<long>(D));
    for (;;) {
        const std::int64_t a = (P + s) / Q;
        BigInt pn = a * p + p_prev;
        BigInt qn = a * q + q_prev;
        p_prev = std::move(p);
        q_prev = std::move(q);
        p = std::move(pn);
        q = std::move(qn);
        P = a * Q - P;
        Q = (D - P * P) / Q;
        if (Q != 2) continue;
        // p - q * conj(omega) is a unit exactly when the next denominator
        // returns to 2.
        BigInt x = odd ? BigInt(2 * p - q) : BigInt(2 * p);
        const BigInt& y = q;
        BigInt n = x * x - bigD * y * y;
        if (n == 4 || n == -4) return {x, y, n > 0 ? 1 : -1};
    }
}

struct ClassNumbers {
    std::int64_t h = 0;
    std::int64_t h_narrow = 0;
};

/// Number of rho-cycles on reduced forms of discriminant D (the narrow class
/// number).
inline std::int64_t count_form_cycles(std::int64_t D) {
    const auto forms = reduced_forms(D);
    std::vector<bool> seen(forms.size(), false);
    std::int64_t cycles = 0;
    for (std::size_t i = 0; i < forms.size(); ++i) {
        if (seen[i]) continue;
        ++cycles;
        Form g = forms[i];
        for (;;) {
            auto it = std::lower_bound(forms.begin(), forms.end(), g);
            if (it == forms.end() || *it != g) {
                throw std::logic_error("rho left the set of reduced forms for D = " + std::to_string(D));
            }
            const auto idx = static_cast<std::size_t>(it - forms.begin());
            if (seen[idx]) break;
            seen[idx] = true;
            g = rho(g, D);
        }
    }
    return cycles;
}

inline ClassNumbers class_number(std::int64_t D) {
    detail::require_fundamental(D, "class_number");
    ClassNumbers out;
    out.h_narrow = count_form_cycles(D);
    const auto eps = fundamental_unit(D);
    out.h = eps.norm == -1 ? out.h_narrow : out.h_narrow / 2;
    return out;
}

namespace detail {

class QuadraticCache {
public:
    QuadraticFieldData get(std::int64_t D) {
        {
            std::shared_lock lock(mu_);
            auto it = map_.find(D);
            if (it != map_.end()) return it->second;
        }
        QuadraticFieldData data = compute(D);
        std::unique_lock lock(mu_);
        // emplace keeps the first value; every writer computes the same one
        return map_.emplace(D, std::move(data)).first->second;
    }

    std::size_t size() const {
        std::shared_lock lock(mu_);
        return map_.size();
    }

private:
    static QuadraticFieldData compute(std::int64_t D) {
        QuadraticFieldData d;
        d.D = D;
        d.m = (D % 4 == 1) ? D : D / 4;
        const auto eps = fundamental_unit(D);
        d.x = eps.x;
        d.y = eps.y;
        d.eps_norm = eps.norm;
        d.h_narrow = count_form_cycles(D);
        d.h = eps.norm == -1 ? d.h_narrow : d.h_narrow / 2;
        return d;
    }

    mutable std::shared_mutex mu_;
    std::map<std::int64_t, QuadraticFieldData> map_;
};

inline QuadraticCache& quadratic_cache() {
    static QuadraticCache cache;
    return cache;
}

}  // namespace detail

/// Memoised full data for the field of discriminant D. Thread-safe.
inline QuadraticFieldData quadratic_field_data(std::int64_t D) {
    detail::require_fundamental(D, "quadratic_field_data");
    return detail::quadratic_cache().get(D);
}

}  // namespace quartic
