#pragma once

#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "quartic/arith.hpp"

namespace quartic {

/// Dense integer polynomial, constant term first. The zero polynomial has no
/// coefficients.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }
    IntPoly(std::initializer_list<long> coeffs) {
        for (long v : coeffs) c_.emplace_back(v);
        trim();
    }

    static IntPoly constant(const BigInt& v) { return IntPoly(std::vector<BigInt>{v}); }

    /// x^n
    static IntPoly monomial(std::size_t n, const BigInt& coeff = 1) {
        std::vector<BigInt> c(n + 1, BigInt(0));
        c[n] = coeff;
        return IntPoly(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    const std::vector<BigInt>& coefficients() const { return c_; }

    BigInt coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }

    BigInt operator()(const BigInt& x) const {
        BigInt acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    IntPoly& operator+=(const IntPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), BigInt(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }

    IntPoly& operator-=(const IntPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), BigInt(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }

    IntPoly& operator*=(const BigInt& s) {
        for (auto& v : c_) v *= s;
        trim();
        return *this;
    }

    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(IntPoly a, const BigInt& s) { return a *= s; }
    friend IntPoly operator*(const BigInt& s, IntPoly a) { return a *= s; }

    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<BigInt> out(a.c_.size() + b.c_.size() - 1, BigInt(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        }
        return IntPoly(std::move(out));
    }

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

    IntPoly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<BigInt> out(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * static_cast<unsigned long>(i);
        return IntPoly(std::move(out));
    }

    /// `2214144;0;-3092;0;1` -- constant term first.
    std::string coeff_list() const {
        std::string out;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i) out += ';';
            out += c_[i].get_str();
        }
        return out;
    }

    static IntPoly parse_coeff_list(const std::string& text) {
        std::vector<BigInt> out;
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ';')) {
            BigInt v;
            if (item.empty() || v.set_str(item, 10) != 0) {
                throw std::invalid_argument("bad coefficient '" + item + "' in '" + text + "'");
            }
            out.push_back(v);
        }
        return IntPoly(std::move(out));
    }

    /// Conventional rendering, highest degree first: `x^4 - 3092x^2 + 2214144`.
    std::string to_string(const std::string& var = "x") const {
        if (c_.empty()) return "0";
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            const BigInt& v = c_[static_cast<std::size_t>(i)];
            if (v == 0) continue;
            BigInt mag = abs(v);
            if (out.empty()) {
                if (v < 0) out += "-";
            } else {
                out += v < 0 ? " - " : " + ";
            }
            if (mag != 1 || i == 0) out += mag.get_str();
            if (i >= 1) out += var;
            if (i >= 2) out += "^" + std::to_string(i);
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<BigInt> c_;
};

}  // namespace quartic
