#pragma once

// The two quartic families:
//   biquadratic  K = Q(sqrt q, sqrt(k r)),     H = Q(sqrt q, sqrt k, sqrt r)
//   cyclic       K = Q(sqrt(q (k + b sqrt k))), H = Q(sqrt q, sqrt(k + b sqrt k))
// with parameter validation, conductor, discriminant, and the defining
// polynomials g (of K) and f (of H).

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "quartic/arith.hpp"
#include "quartic/errors.hpp"
#include "quartic/poly.hpp"

namespace quartic {

struct BiquadraticSpec {
    std::int64_t q = 0, k = 0, r = 0;
    friend auto operator<=>(const BiquadraticSpec&, const BiquadraticSpec&) = default;
};

struct CyclicSpec {
    std::int64_t q = 0, k = 0, b = 0;
    std::int64_t root = 0;  // root^2 = k - b^2
    friend auto operator<=>(const CyclicSpec&, const CyclicSpec&) = default;
};

using FieldSpec = std::variant<BiquadraticSpec, CyclicSpec>;

inline constexpr std::int64_t kBiquadraticMinPrime = 29;
inline constexpr std::int64_t kCyclicMinPrime = 17;

namespace detail {

inline void check_family_prime(std::vector<std::string>& fails, const char* name, std::int64_t v,
                               std::int64_t min) {
    const std::string tag = std::string(name) + " = " + std::to_string(v);
    if (!is_prime(v)) fails.push_back(tag + " is not prime");
    if (((v % 4) + 4) % 4 != 1) fails.push_back(tag + " is not 1 mod 4");
    if (v < min) fails.push_back(tag + " is below " + std::to_string(min));
}

}  // namespace detail

/// Every violated hypothesis is reported, not just the first.
inline BiquadraticSpec validate_biquadratic(std::int64_t q, std::int64_t k, std::int64_t r) {
    std::vector<std::string> fails;
    detail::check_family_prime(fails, "q", q, kBiquadraticMinPrime);
    detail::check_family_prime(fails, "k", k, kBiquadraticMinPrime);
    detail::check_family_prime(fails, "r", r, kBiquadraticMinPrime);
    if (q == k || q == r || k == r) fails.push_back("q, k, r are not distinct");
    if (!fails.empty()) throw HypothesisViolation(std::move(fails));
    return {q, k, r};
}

inline CyclicSpec validate_cyclic(std::int64_t q, std::int64_t k, std::int64_t b) {
    std::vector<std::string> fails;
    detail::check_family_prime(fails, "q", q, kCyclicMinPrime);
    detail::check_family_prime(fails, "k", k, kCyclicMinPrime);
    if (q == k) fails.push_back("q and k are not distinct");
    if (b <= 0) fails.push_back("b = " + std::to_string(b) + " is not positive");
    if (b % 4 != 0) fails.push_back("b = " + std::to_string(b) + " is not 0 mod 4");
    std::int64_t root = 0;
    const BigInt rest = BigInt(static_cast<long>(k)) - BigInt(static_cast<long>(b)) * b;
    if (sgn(rest) <= 0) {
        fails.push_back("k - b^2 = " + rest.get_str() + " is not positive");
    } else if (auto sq = is_perfect_square(rest)) {
        root = sq->get_si();
    } else {
        fails.push_back("k - b^2 = " + rest.get_str() + " is not a perfect square");
    }
    if (!fails.empty()) throw HypothesisViolation(std::move(fails));
    return {q, k, b, root};
}

inline BigInt big(std::int64_t v) { return BigInt(static_cast<long>(v)); }

inline BigInt conductor(const BiquadraticSpec& s) { return big(s.q) * s.k * s.r; }
inline BigInt conductor(const CyclicSpec& s) { return big(s.q) * s.k; }
inline BigInt conductor(const FieldSpec& s) {
    return std::visit([](const auto& v) { return conductor(v); }, s);
}

/// Conductor-discriminant formula over the character group: conductors
/// 1, q, kr, qkr (biquadratic) and 1, k, qk, qk (cyclic).
inline BigInt discriminant(const BiquadraticSpec& s) {
    const BigInt f = conductor(s);
    return f * f;
}
inline BigInt discriminant(const CyclicSpec& s) {
    return big(s.q) * s.q * s.k * s.k * s.k;
}
inline BigInt discriminant(const FieldSpec& s) {
    return std::visit([](const auto& v) { return discriminant(v); }, s);
}

/// g(x) = [x^2 - (q + kr)]^2 - 4qkr, the minimal polynomial of sqrt q + sqrt(kr).
inline IntPoly min_poly_K(const BiquadraticSpec& s) {
    const BigInt kr = big(s.k) * s.r;
    const BigInt diff = big(s.q) - kr;
    return IntPoly(std::vector<BigInt>{diff * diff, 0, -2 * (big(s.q) + kr), 0, 1});
}

/// g(x) = x^4 - 2qk x^2 + q^2 k (k - b^2), the minimal polynomial of
/// sqrt(q (k + b sqrt k)).
inline IntPoly min_poly_K(const CyclicSpec& s) {
    const BigInt q = big(s.q), k = big(s.k), b = big(s.b);
    return IntPoly(std::vector<BigInt>{q * q * k * (k - b * b), 0, -2 * q * k, 0, 1});
}

inline IntPoly min_poly_K(const FieldSpec& s) {
    return std::visit([](const auto& v) { return min_poly_K(v); }, s);
}

/// f(y) = [(y^2 - S1)^2 - 4 S2]^2 - 64 S3 y^2 for S1, S2, S3 the elementary
/// symmetric polynomials in q, k, r: the minimal polynomial of
/// sqrt q + sqrt k + sqrt r.
inline IntPoly min_poly_H(const BiquadraticSpec& s) {
    const BigInt q = big(s.q), k = big(s.k), r = big(s.r);
    const BigInt s1 = q + k + r;
    const BigInt s2 = q * k + q * r + k * r;
    const BigInt s3 = q * k * r;
    const IntPoly y2 = IntPoly::monomial(2);
    const IntPoly t = y2 - IntPoly::constant(s1);
    const IntPoly inner = t * t - IntPoly::constant(4 * s2);
    return inner * inner - IntPoly::monomial(2, 64 * s3);
}

/// Minimal polynomial of sqrt q + sqrt(k + b sqrt k): the product over the
/// conjugates a+- = k +- b sqrt k of (y^2 - q - a)^2 - 4 q a. Writing each
/// factor as a^2 + B a + A with A = (y^2 - q)^2 and B = -2(y^2 + q), the
/// product is symmetric in a+- and only needs
///   s = a+ + a- = 2k,   p = a+ a- = k^2 - b^2 k.
inline IntPoly min_poly_H(const CyclicSpec& s) {
    const BigInt q = big(s.q), k = big(s.k), b = big(s.b);
    const BigInt sum = 2 * k;
    const BigInt prod = k * k - b * b * k;
    const IntPoly y2 = IntPoly::monomial(2);
    const IntPoly t = y2 - IntPoly::constant(q);
    const IntPoly A = t * t;
    const IntPoly B = (y2 + IntPoly::constant(q)) * BigInt(-2);
    // (a+^2 + B a+ + A)(a-^2 + B a- + A)
    //   = A^2 + A B s + A (s^2 - 2p) + B^2 p + B p s + p^2
    IntPoly out = A * A;
    out += A * B * sum;
    out += A * (sum * sum - 2 * prod);
    out += B * B * prod;
    out += B * (prod * sum);
    out += IntPoly::constant(prod * prod);
    return out;
}

inline IntPoly min_poly_H(const FieldSpec& s) {
    return std::visit([](const auto& v) { return min_poly_H(v); }, s);
}

/// Description of the Hilbert class field H of K, with [H : K] = 2.
struct HilbertClassField {
    std::vector<std::string> generators;  // H = Q(generators...)
    std::string primitive_element;        // alpha with H = Q(alpha)
    IntPoly min_poly;                     // f, minimal polynomial of alpha
    std::string galois_group;
    int degree_over_K = 2;
};

inline HilbertClassField hcf_descriptor(const BiquadraticSpec& s) {
    const auto rt = [](std::int64_t v) { return "sqrt(" + std::to_string(v) + ")"; };
    HilbertClassField h;
    h.generators = {rt(s.q), rt(s.k), rt(s.r)};
    h.primitive_element = rt(s.q) + " + " + rt(s.k) + " + " + rt(s.r);
    h.min_poly = min_poly_H(s);
    h.galois_group = "Z/2 x Z/2 x Z/2";
    return h;
}

inline HilbertClassField hcf_descriptor(const CyclicSpec& s) {
    const std::string inner =
        "sqrt(" + std::to_string(s.k) + " + " + std::to_string(s.b) + "*sqrt(" + std::to_string(s.k) + "))";
    HilbertClassField h;
    h.generators = {"sqrt(" + std::to_string(s.q) + ")", inner};
    h.primitive_element = h.generators[0] + " + " + inner;
    h.min_poly = min_poly_H(s);
    h.galois_group = "Z/2 x Z/4";
    return h;
}

inline HilbertClassField hcf_descriptor(const FieldSpec& s) {
    return std::visit([](const auto& v) { return hcf_descriptor(v); }, s);
}

/// Exact irreducibility over Z of a monic even quartic x^4 + A x^2 + B.
/// Any factorisation is (x^2 + u)(x^2 + v), which needs A^2 - 4B square, or
/// (x^2 + a x + c)(x^2 - a x + c) with c^2 = B and a^2 = 2c - A; a linear
/// factor forces the first shape, since roots come in +- pairs.
inline bool is_irreducible_quartic(const IntPoly& g) {
    if (g.degree() != 4 || !g.is_monic() || g.coeff(1) != 0 || g.coeff(3) != 0) {
        throw std::invalid_argument("is_irreducible_quartic: expected x^4 + A x^2 + B, got " + g.to_string());
    }
    const BigInt A = g.coeff(2);
    const BigInt B = g.coeff(0);
    if (is_perfect_square(BigInt(A * A - 4 * B))) return false;
    if (auto c = is_perfect_square(B)) {
        for (const BigInt& cc : {BigInt(*c), BigInt(-*c)}) {
            if (is_perfect_square(BigInt(2 * cc - A))) return false;
        }
    }
    return true;
}

}  // namespace quartic
