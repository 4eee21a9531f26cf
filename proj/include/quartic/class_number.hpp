#pragma once

// Class numbers of the quartic fields.
//
// Biquadratic K = Q(sqrt q, sqrt(kr)): h_K = Q h1 h2 h3 / 4 over the quadratic
// subfields Q(sqrt q), Q(sqrt kr), Q(sqrt qkr), where the unit index
// Q = [E_K : <-1, e1, e2, e3>] is the number of sign/exponent patterns for
// which +-e1^a e2^b e3^c is a square in K.
//
// Cyclic K: h_K is read from an external fixture.

#include <array>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "quartic/arith.hpp"
#include "quartic/errors.hpp"
#include "quartic/fields.hpp"
#include "quartic/quadratic.hpp"

namespace quartic {

/// a + b sqrt(m) with rational a, b.
struct QuadElement {
    Rational a, b;

    bool is_zero() const { return sgn(a) == 0 && sgn(b) == 0; }
    friend bool operator==(const QuadElement& x, const QuadElement& y) { return x.a == y.a && x.b == y.b; }
};

/// Arithmetic in Q(sqrt m), m a non-square integer.
class QuadField {
public:
    explicit QuadField(std::int64_t m) : m_(static_cast<long>(m)) {}

    const BigInt& radicand() const { return m_; }

    QuadElement add(const QuadElement& x, const QuadElement& y) const { return {x.a + y.a, x.b + y.b}; }
    QuadElement sub(const QuadElement& x, const QuadElement& y) const { return {x.a - y.a, x.b - y.b}; }
    QuadElement neg(const QuadElement& x) const { return {-x.a, -x.b}; }
    QuadElement scale(const QuadElement& x, const Rational& s) const { return {x.a * s, x.b * s}; }

    QuadElement mul(const QuadElement& x, const QuadElement& y) const {
        return {x.a * y.a + Rational(m_) * x.b * y.b, x.a * y.b + x.b * y.a};
    }

    Rational norm(const QuadElement& x) const { return x.a * x.a - Rational(m_) * x.b * x.b; }

    QuadElement inv(const QuadElement& x) const {
        const Rational n = norm(x);
        return {x.a / n, -x.b / n};
    }

    QuadElement div(const QuadElement& x, const QuadElement& y) const { return mul(x, inv(y)); }

    /// A square root in Q(sqrt m), if one exists. Writing x = u + v sqrt m,
    /// u^2 = (a + N(x))/2 with N(x)^2 = N(delta).
    std::optional<QuadElement> sqrt(const QuadElement& d) const {
        if (d.is_zero()) return QuadElement{};
        auto n = rational_sqrt(norm(d));
        if (!n) return std::nullopt;
        for (const Rational& nx : {*n, Rational(-*n)}) {
            auto u = rational_sqrt((d.a + nx) / 2);
            if (!u) continue;
            QuadElement x;
            if (sgn(*u) != 0) {
                x = {*u, d.b / (2 * *u)};
            } else {
                auto v = rational_sqrt((d.a - nx) / (2 * Rational(m_)));
                if (!v) continue;
                x = {0, *v};
            }
            if (mul(x, x) == d) return x;
        }
        return std::nullopt;
    }

private:
    BigInt m_;
};

/// Element c0 + c1 sqrt q + c2 sqrt(kr) + c3 sqrt(qkr) of the biquadratic
/// field K = Q(sqrt q, sqrt(kr)).
class KElement {
public:
    KElement(const BiquadraticSpec& spec, std::array<Rational, 4> coords) : spec_(spec), c_(std::move(coords)) {
        for (auto& v : c_) v.canonicalize();
    }

    static KElement from_integer(const BiquadraticSpec& spec, long v) {
        return KElement(spec, {Rational(v), Rational(0), Rational(0), Rational(0)});
    }

    const BiquadraticSpec& spec() const { return spec_; }
    const std::array<Rational, 4>& coords() const { return c_; }

    bool is_zero() const {
        for (const auto& v : c_) {
            if (sgn(v) != 0) return false;
        }
        return true;
    }

    friend bool operator==(const KElement& x, const KElement& y) {
        return x.spec_ == y.spec_ && x.c_ == y.c_;
    }

    KElement operator-() const {
        return KElement(spec_, {-c_[0], -c_[1], -c_[2], -c_[3]});
    }

    friend KElement operator*(const KElement& x, const KElement& y) {
        const QuadField F(x.spec_.q);
        const BigInt d = big(x.spec_.k) * x.spec_.r;
        const QuadElement a = F.add(F.mul(x.alpha(), y.alpha()),
                                    F.scale(F.mul(x.beta(), y.beta()), Rational(d)));
        const QuadElement b = F.add(F.mul(x.alpha(), y.beta()), F.mul(x.beta(), y.alpha()));
        return from_parts(x.spec_, a, b);
    }

    friend KElement operator+(const KElement& x, const KElement& y) {
        return KElement(x.spec_, {x.c_[0] + y.c_[0], x.c_[1] + y.c_[1], x.c_[2] + y.c_[2], x.c_[3] + y.c_[3]});
    }

    /// Numeric value under the embedding sqrt q -> sq, sqrt(kr) -> sd
    /// (sq, sd in {+1, -1}). Double precision; diagnostics only.
    double embed(int sq, int sd) const {
        const double rq = std::sqrt(static_cast<double>(spec_.q));
        const double rd = std::sqrt(static_cast<double>(spec_.k) * static_cast<double>(spec_.r));
        return c_[0].get_d() + sq * c_[1].get_d() * rq + sd * c_[2].get_d() * rd +
               sq * sd * c_[3].get_d() * rq * rd;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << "(" << c_[0].get_str() << ", " << c_[1].get_str() << ", " << c_[2].get_str() << ", "
           << c_[3].get_str() << ")";
        return os.str();
    }

    // K = F(sqrt d) with F = Q(sqrt q): this element is alpha + beta sqrt d.
    QuadElement alpha() const { return {c_[0], c_[1]}; }
    QuadElement beta() const { return {c_[2], c_[3]}; }

    static KElement from_parts(const BiquadraticSpec& spec, const QuadElement& alpha, const QuadElement& beta) {
        return KElement(spec, {alpha.a, alpha.b, beta.a, beta.b});
    }

private:
    BiquadraticSpec spec_;
    std::array<Rational, 4> c_;
};

/// Exact square root in K by descent through F = Q(sqrt q): for
/// x = U + V sqrt d we need N_{K/F}(x) = +-sqrt(N_{K/F}(delta)) and
/// U^2 = (alpha + N(x))/2 in F. Every candidate is verified by squaring, and
/// a miss at every branch certifies that delta is not a square.
inline std::optional<KElement> is_square_in_K(const KElement& delta) {
    const auto& spec = delta.spec();
    if (delta.is_zero()) return delta;
    const QuadField F(spec.q);
    const Rational d(big(spec.k) * spec.r);
    const QuadElement al = delta.alpha();
    const QuadElement be = delta.beta();
    const QuadElement rel_norm = F.sub(F.mul(al, al), F.scale(F.mul(be, be), d));
    auto n = F.sqrt(rel_norm);
    if (!n) return std::nullopt;
    for (const QuadElement& nx : {*n, F.neg(*n)}) {
        auto u = F.sqrt(F.scale(F.add(al, nx), Rational(1, 2)));
        if (!u) continue;
        QuadElement v;
        if (!u->is_zero()) {
            v = F.div(be, F.scale(*u, Rational(2)));
        } else {
            auto vv = F.sqrt(F.scale(F.sub(al, nx), Rational(1) / (2 * d)));
            if (!vv) continue;
            v = *vv;
        }
        KElement x = KElement::from_parts(spec, *u, v);
        if (x * x == delta) return x;
    }
    return std::nullopt;
}

/// Fundamental units of the three quadratic subfields embedded in K.
inline std::array<KElement, 3> subfield_units(const BiquadraticSpec& spec,
                                              const std::array<QuadraticFieldData, 3>& data) {
    const Rational half(1, 2);
    const auto h = [&](const BigInt& v) -> Rational { return Rational(v) * half; };
    return {
        KElement(spec, {h(data[0].x), h(data[0].y), 0, 0}),
        KElement(spec, {h(data[1].x), 0, h(data[1].y), 0}),
        KElement(spec, {h(data[2].x), 0, 0, h(data[2].y)}),
    };
}

/// Quadratic data for the subfields of discriminant q, kr, qkr (all 1 mod 4,
/// hence fundamental).
inline std::array<QuadraticFieldData, 3> subfield_data(const BiquadraticSpec& spec) {
    const std::int64_t kr = spec.k * spec.r;
    return {quadratic_field_data(spec.q), quadratic_field_data(kr), quadratic_field_data(spec.q * kr)};
}

struct UnitIndexResult {
    int Q = 1;
    struct Entry {
        std::array<int, 3> exponents{};  // (a, b, c) in F_2^3, nonzero
        int sign = 1;                    // which of +-e1^a e2^b e3^c is the square
    };
    std::vector<Entry> square_set;
    int rank = 0;
};

inline UnitIndexResult unit_index(const BiquadraticSpec& spec) {
    const auto data = subfield_data(spec);
    const auto eps = subfield_units(spec, data);
    UnitIndexResult out;
    std::vector<int> witnessed(8, 0);
    witnessed[0] = 1;
    for (int mask = 1; mask < 8; ++mask) {
        KElement prod = KElement::from_integer(spec, 1);
        for (int i = 0; i < 3; ++i) {
            if (mask & (1 << i)) prod = prod * eps[static_cast<std::size_t>(i)];
        }
        for (int sign : {1, -1}) {
            const KElement cand = sign > 0 ? prod : -prod;
            if (is_square_in_K(cand)) {
                out.square_set.push_back({{mask & 1, (mask >> 1) & 1, (mask >> 2) & 1}, sign});
                witnessed[static_cast<std::size_t>(mask)] = 1;
                break;
            }
        }
    }
    const int count = static_cast<int>(out.square_set.size()) + 1;
    for (int m1 = 0; m1 < 8; ++m1) {
        for (int m2 = 0; m2 < 8; ++m2) {
            if (witnessed[static_cast<std::size_t>(m1)] && witnessed[static_cast<std::size_t>(m2)] &&
                !witnessed[static_cast<std::size_t>(m1 ^ m2)]) {
                throw InternalError("unit index: square set is not closed under products");
            }
        }
    }
    out.Q = count;
    while ((1 << out.rank) < count) ++out.rank;
    if ((1 << out.rank) != count) throw InternalError("unit index: square set size is not a power of two");
    return out;
}

struct BiquadraticClassNumber {
    std::int64_t h = 0;
    int Q = 1;
    std::array<std::int64_t, 3> subfield_h{};
};

inline BiquadraticClassNumber class_number_biquadratic_detail(const BiquadraticSpec& spec) {
    const auto data = subfield_data(spec);
    const auto ui = unit_index(spec);
    BiquadraticClassNumber out;
    out.Q = ui.Q;
    out.subfield_h = {data[0].h, data[1].h, data[2].h};
    const std::int64_t num = ui.Q * data[0].h * data[1].h * data[2].h;
    if (num % 4 != 0 || num == 0) {
        throw InternalError("Kuroda formula gave a non-integral class number: " + std::to_string(num) + "/4");
    }
    out.h = num / 4;
    return out;
}

inline std::int64_t class_number_biquadratic(const BiquadraticSpec& spec) {
    return class_number_biquadratic_detail(spec).h;
}

/// Externally sourced class numbers for the cyclic family, keyed by (q, k, b).
/// Text format, one record per line: `family,q,k,b_or_r,h` with family
/// `cyclic`; `#` starts a comment.
class ClassNumberFixture {
public:
    using Key = std::tuple<std::int64_t, std::int64_t, std::int64_t>;

    static ClassNumberFixture parse(std::istream& in, const std::string& source = "<fixture>") {
        ClassNumberFixture fx;
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
            std::vector<std::string> fields;
            std::stringstream ss(line);
            std::string f;
            while (std::getline(ss, f, ',')) fields.push_back(trim(f));
            if (fields.empty() || (fields.size() == 1 && fields[0].empty())) continue;
            const auto where = source + ":" + std::to_string(lineno);
            if (fields.size() != 5) throw std::invalid_argument(where + ": expected 5 fields");
            if (fields[0] == "family") continue;  // header
            if (fields[0] != "cyclic") throw std::invalid_argument(where + ": unsupported family '" + fields[0] + "'");
            const Key key{to_i64(fields[1], where), to_i64(fields[2], where), to_i64(fields[3], where)};
            const std::int64_t h = to_i64(fields[4], where);
            if (h <= 0) throw std::invalid_argument(where + ": class number must be positive");
            auto [it, inserted] = fx.entries_.emplace(key, h);
            if (!inserted && it->second != h) throw std::invalid_argument(where + ": conflicting duplicate entry");
        }
        return fx;
    }

    static ClassNumberFixture load(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("cannot open class-number fixture " + path);
        return parse(in, path);
    }

    std::optional<std::int64_t> lookup(const CyclicSpec& s) const {
        auto it = entries_.find({s.q, s.k, s.b});
        if (it == entries_.end()) return std::nullopt;
        return it->second;
    }

    std::size_t size() const { return entries_.size(); }

private:
    static std::string trim(const std::string& s) {
        const auto b = s.find_first_not_of(" \t\r\n");
        if (b == std::string::npos) return {};
        const auto e = s.find_last_not_of(" \t\r\n");
        return s.substr(b, e - b + 1);
    }

    static std::int64_t to_i64(const std::string& s, const std::string& where) {
        try {
            std::size_t pos = 0;
            const long long v = std::stoll(s, &pos);
            if (pos != s.size()) throw std::invalid_argument(s);
            return v;
        } catch (const std::exception&) {
            throw std::invalid_argument(where + ": not an integer: '" + s + "'");
        }
    }

    std::map<Key, std::int64_t> entries_;
};

inline std::int64_t class_number_cyclic(const CyclicSpec& spec, const ClassNumberFixture& fixture) {
    if (auto h = fixture.lookup(spec)) return *h;
    throw UnknownClassNumber("no class number on record for cyclic (q,k,b) = (" + std::to_string(spec.q) + "," +
                             std::to_string(spec.k) + "," + std::to_string(spec.b) + ")");
}

}  // namespace quartic
