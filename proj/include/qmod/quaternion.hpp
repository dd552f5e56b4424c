// Exact quaternion arithmetic over the rationals, plus the Lipschitz and
// Hurwitz integer rings and their unit groups.
#pragma once

#include <gmpxx.h>

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qmod {

// Rationals are GMP mpq_class values, always canonical (lowest terms,
// positive denominator).
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational rat_parse(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rational& r) { return r.get_str(); }

struct Quaternion {
    Rational x0, x1, x2, x3;  // coefficients of 1, i, j, k

    Quaternion() : x0(0), x1(0), x2(0), x3(0) {}
    Quaternion(Rational a, Rational b, Rational c, Rational d)
        : x0(std::move(a)), x1(std::move(b)), x2(std::move(c)), x3(std::move(d)) {}
    explicit Quaternion(long n) : x0(n), x1(0), x2(0), x3(0) {}

    static Quaternion one() { return Quaternion(1); }
    static Quaternion i() { return Quaternion(rat(0), rat(1), rat(0), rat(0)); }
    static Quaternion j() { return Quaternion(rat(0), rat(0), rat(1), rat(0)); }
    static Quaternion k() { return Quaternion(rat(0), rat(0), rat(0), rat(1)); }

    bool operator==(const Quaternion& o) const {
        return x0 == o.x0 && x1 == o.x1 && x2 == o.x2 && x3 == o.x3;
    }
    bool operator!=(const Quaternion& o) const { return !(*this == o); }

    Quaternion operator+(const Quaternion& o) const {
        return {x0 + o.x0, x1 + o.x1, x2 + o.x2, x3 + o.x3};
    }
    Quaternion operator-(const Quaternion& o) const {
        return {x0 - o.x0, x1 - o.x1, x2 - o.x2, x3 - o.x3};
    }
    Quaternion operator-() const { return {-x0, -x1, -x2, -x3}; }

    // i^2 = j^2 = k^2 = -1, ij = k.
    Quaternion operator*(const Quaternion& o) const {
        return {x0 * o.x0 - x1 * o.x1 - x2 * o.x2 - x3 * o.x3,
                x0 * o.x1 + x1 * o.x0 + x2 * o.x3 - x3 * o.x2,
                x0 * o.x2 - x1 * o.x3 + x2 * o.x0 + x3 * o.x1,
                x0 * o.x3 + x1 * o.x2 - x2 * o.x1 + x3 * o.x0};
    }
    Quaternion operator*(const Rational& s) const { return {x0 * s, x1 * s, x2 * s, x3 * s}; }

    Quaternion conj() const { return {x0, -x1, -x2, -x3}; }
    Rational norm_sq() const { return x0 * x0 + x1 * x1 + x2 * x2 + x3 * x3; }
    Rational re() const { return x0; }
    Quaternion im() const { return {rat(0), x1, x2, x3}; }
    bool is_zero() const {
        return sgn(x0) == 0 && sgn(x1) == 0 && sgn(x2) == 0 && sgn(x3) == 0;
    }
    bool is_real() const { return sgn(x1) == 0 && sgn(x2) == 0 && sgn(x3) == 0; }

    std::optional<Quaternion> inverse() const {
        if (is_zero()) return std::nullopt;
        Rational n = norm_sq();
        Quaternion c = conj();
        return Quaternion{c.x0 / n, c.x1 / n, c.x2 / n, c.x3 / n};
    }
    // Inverse that throws on zero; most call sites know the divisor is nonzero.
    Quaternion inv() const {
        auto r = inverse();
        if (!r) throw std::domain_error("inverse of zero quaternion");
        return *r;
    }

    const Rational& coeff(int n) const {
        switch (n) {
            case 0: return x0;
            case 1: return x1;
            case 2: return x2;
            default: return x3;
        }
    }
};

inline Quaternion operator*(const Rational& s, const Quaternion& q) { return q * s; }

// ---- ring membership -------------------------------------------------------

// q is a Lipschitz integer iff all coefficients are integers; a Hurwitz
// integer iff all are integers or all are half-odd-integers.
inline bool is_lipschitz(const Quaternion& q) {
    for (int n = 0; n < 4; ++n)
        if (q.coeff(n).get_den() != 1) return false;
    return true;
}

inline bool is_hurwitz(const Quaternion& q) {
    if (is_lipschitz(q)) return true;
    for (int n = 0; n < 4; ++n)
        if (q.coeff(n).get_den() != 2) return false;
    return true;
}

// Integer quaternion in doubled coordinates: the value is (d0+d1 i+d2 j+d3 k)/2
// with d0 = d1 = d2 = d3 (mod 2).  Lipschitz iff all even.
struct HurwitzQuaternion {
    std::array<long, 4> d;

    HurwitzQuaternion(long d0, long d1, long d2, long d3) : d{d0, d1, d2, d3} {
        long parity = ((d0 % 2) + 2) % 2;
        for (long v : d)
            if ((((v % 2) + 2) % 2) != parity)
                throw std::invalid_argument("doubled coordinates have mixed parity");
    }
    static std::optional<HurwitzQuaternion> from_quaternion(const Quaternion& q) {
        if (!is_hurwitz(q)) return std::nullopt;
        std::array<long, 4> dd{};
        for (int n = 0; n < 4; ++n) {
            Rational twice = q.coeff(n) * 2;
            dd[n] = static_cast<long>(twice.get_num().get_si());
        }
        return HurwitzQuaternion(dd[0], dd[1], dd[2], dd[3]);
    }
    bool is_lipschitz() const { return d[0] % 2 == 0; }
    Quaternion value() const {
        return Quaternion(rat(d[0], 2), rat(d[1], 2), rat(d[2], 2), rat(d[3], 2));
    }
    HurwitzQuaternion operator*(const HurwitzQuaternion& o) const {
        return *from_quaternion(value() * o.value());
    }
    bool operator==(const HurwitzQuaternion& o) const { return d == o.d; }
};

// ---- unit groups ------------------------------------------------------------

inline const std::vector<Quaternion>& lipschitz_units() {
    static const std::vector<Quaternion> u = [] {
        std::vector<Quaternion> v;
        for (int n = 0; n < 4; ++n)
            for (int s : {1, -1}) {
                Quaternion q;
                switch (n) {
                    case 0: q = Quaternion(s); break;
                    case 1: q = Quaternion::i() * rat(s); break;
                    case 2: q = Quaternion::j() * rat(s); break;
                    default: q = Quaternion::k() * rat(s); break;
                }
                v.push_back(q);
            }
        return v;
    }();
    return u;
}

inline const std::vector<Quaternion>& hurwitz_units() {
    static const std::vector<Quaternion> u = [] {
        std::vector<Quaternion> v = lipschitz_units();
        for (int s0 : {1, -1})
            for (int s1 : {1, -1})
                for (int s2 : {1, -1})
                    for (int s3 : {1, -1})
                        v.emplace_back(rat(s0, 2), rat(s1, 2), rat(s2, 2), rat(s3, 2));
        return v;
    }();
    return u;
}

inline bool is_hurwitz_unit(const Quaternion& q) {
    return is_hurwitz(q) && q.norm_sq() == 1;
}

// The four order-3 rotations used as generators of the Hurwitz unitary group.
inline Quaternion omega_1() { return {rat(1, 2), rat(1, 2), rat(1, 2), rat(1, 2)}; }
inline Quaternion omega_i() { return {rat(1, 2), rat(1, 2), rat(-1, 2), rat(-1, 2)}; }
inline Quaternion omega_j() { return {rat(1, 2), rat(-1, 2), rat(1, 2), rat(-1, 2)}; }
inline Quaternion omega_k() { return {rat(1, 2), rat(-1, 2), rat(-1, 2), rat(1, 2)}; }

// ---- floating point mirror --------------------------------------------------

struct QuaternionF {
    double x0 = 0, x1 = 0, x2 = 0, x3 = 0;

    QuaternionF() = default;
    QuaternionF(double a, double b, double c, double d) : x0(a), x1(b), x2(c), x3(d) {}
    explicit QuaternionF(const Quaternion& q)
        : x0(q.x0.get_d()), x1(q.x1.get_d()), x2(q.x2.get_d()), x3(q.x3.get_d()) {}

    QuaternionF operator+(const QuaternionF& o) const {
        return {x0 + o.x0, x1 + o.x1, x2 + o.x2, x3 + o.x3};
    }
    QuaternionF operator-(const QuaternionF& o) const {
        return {x0 - o.x0, x1 - o.x1, x2 - o.x2, x3 - o.x3};
    }
    QuaternionF operator*(const QuaternionF& o) const {
        return {x0 * o.x0 - x1 * o.x1 - x2 * o.x2 - x3 * o.x3,
                x0 * o.x1 + x1 * o.x0 + x2 * o.x3 - x3 * o.x2,
                x0 * o.x2 - x1 * o.x3 + x2 * o.x0 + x3 * o.x1,
                x0 * o.x3 + x1 * o.x2 - x2 * o.x1 + x3 * o.x0};
    }
    QuaternionF operator*(double s) const { return {x0 * s, x1 * s, x2 * s, x3 * s}; }
    QuaternionF conj() const { return {x0, -x1, -x2, -x3}; }
    double norm_sq() const { return x0 * x0 + x1 * x1 + x2 * x2 + x3 * x3; }
    double norm() const { return std::sqrt(norm_sq()); }
    QuaternionF inv() const {
        double n = norm_sq();
        return {x0 / n, -x1 / n, -x2 / n, -x3 / n};
    }
};

inline double dist_sup(const QuaternionF& a, const QuaternionF& b) {
    return std::max(std::max(std::fabs(a.x0 - b.x0), std::fabs(a.x1 - b.x1)),
                    std::max(std::fabs(a.x2 - b.x2), std::fabs(a.x3 - b.x3)));
}

// ---- text format ------------------------------------------------------------
// "a+b*i+c*j+d*k" with rational coefficients "p/q"; any subset of terms.

std::string to_string(const Quaternion& q);
Quaternion parse_quaternion(const std::string& text);

inline std::string to_string(const Quaternion& q) {
    static const char* basis[4] = {"", "i", "j", "k"};
    std::string out;
    for (int n = 0; n < 4; ++n) {
        const Rational& c = q.coeff(n);
        if (sgn(c) == 0) continue;
        std::string term = rat_str(abs(c));
        if (n > 0) {
            if (term == "1") term = basis[n];
            else term += std::string("*") + basis[n];
        }
        if (out.empty()) out = (sgn(c) < 0 ? "-" : "") + term;
        else out += (sgn(c) < 0 ? "-" : "+") + term;
    }
    return out.empty() ? "0" : out;
}

inline Quaternion parse_quaternion(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("empty quaternion");
    Quaternion q;
    size_t pos = 0;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            if (s[pos] == '-') sign = -1;
            ++pos;
        }
        size_t end = pos;
        while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
        std::string term = s.substr(pos, end - pos);
        if (term.empty()) throw std::invalid_argument("bad quaternion: " + text);
        int axis = 0;
        char last = term.back();
        if (last == 'i' || last == 'j' || last == 'k') {
            axis = last == 'i' ? 1 : (last == 'j' ? 2 : 3);
            term.pop_back();
            if (!term.empty() && term.back() == '*') term.pop_back();
            if (term.empty()) term = "1";
        }
        Rational c = rat_parse(term) * sign;
        switch (axis) {
            case 0: q.x0 += c; break;
            case 1: q.x1 += c; break;
            case 2: q.x2 += c; break;
            default: q.x3 += c; break;
        }
        pos = end;
    }
    return q;
}

}  // namespace qmod
