// Fundamental-domain membership, the reduction algorithm, Coxeter simplex
// angle data, Euler characteristic of P, and polytope vertex data.
#pragma once

#include "qmod/words.hpp"

#include <array>
#include <cmath>
#include <string>
#include <vector>

namespace qmod {

enum class DomainTag { Chimney, P, PL, PH };

inline std::string domain_name(DomainTag t) {
    switch (t) {
        case DomainTag::Chimney: return "Chimney";
        case DomainTag::P: return "P";
        case DomainTag::PL: return "PL";
        default: return "PH";
    }
}
inline DomainTag parse_domain(const std::string& s) {
    if (s == "Chimney") return DomainTag::Chimney;
    if (s == "P") return DomainTag::P;
    if (s == "PL") return DomainTag::PL;
    if (s == "PH") return DomainTag::PH;
    throw std::invalid_argument("unknown domain: " + s);
}

// Signs are uniform if no two nonzero imaginary coordinates differ in sign.
inline bool signs_uniform(int s1, int s2, int s3) {
    bool pos = s1 > 0 || s2 > 0 || s3 > 0;
    bool neg = s1 < 0 || s2 < 0 || s3 < 0;
    return !(pos && neg);
}

inline bool contains(DomainTag tag, const Quaternion& q) {
    if (sgn(q.re()) <= 0) throw std::domain_error("needs Re(q) > 0");
    Rational half = rat(1, 2);
    if (abs(q.x1) > half || abs(q.x2) > half || abs(q.x3) > half) return false;
    if (tag == DomainTag::Chimney) return true;
    if (q.norm_sq() < 1) return false;
    if (tag == DomainTag::P) return true;
    if (!signs_uniform(sgn(q.x1), sgn(q.x2), sgn(q.x3))) return false;
    if (tag == DomainTag::PL) return true;
    return abs(q.x1) <= abs(q.x3) && abs(q.x2) <= abs(q.x3);
}

// Float variant, used by the Monte Carlo sampler; boundary fuzz is
// measure-zero and irrelevant there.
inline bool contains_f(DomainTag tag, double x0, double x1, double x2, double x3) {
    if (x0 <= 0) return false;
    if (std::fabs(x1) > 0.5 || std::fabs(x2) > 0.5 || std::fabs(x3) > 0.5) return false;
    if (tag == DomainTag::Chimney) return true;
    if (x0 * x0 + x1 * x1 + x2 * x2 + x3 * x3 < 1.0) return false;
    if (tag == DomainTag::P) return true;
    auto sg = [](double v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); };
    if (!signs_uniform(sg(x1), sg(x2), sg(x3))) return false;
    if (tag == DomainTag::PL) return true;
    return std::fabs(x1) <= std::fabs(x3) && std::fabs(x2) <= std::fabs(x3);
}

struct ReductionResult {
    Word word;
    Quaternion reduced;
    int iterations = 0;
};

namespace detail {
// Nearest integer; exact halves round toward zero so the reduced coordinate
// keeps its sign (matches the documented tie rule).
inline mpz_class nearest_int(const Rational& x) {
    Rational shifted = x + rat(1, 2);
    mpz_class m = shifted.get_num() / shifted.get_den();  // floor for pos, trunc for neg
    if (shifted < 0 && shifted.get_den() != 1) m -= 1;    // true floor
    if (Rational(m) == shifted && sgn(x) > 0) m -= 1;     // tie: x>0 keeps +1/2
    return m;
}
inline void push_translation(Word& w, int axis, const mpz_class& count) {
    using GL = GeneratorLabel;
    GL::Kind pos[3] = {GL::Ti, GL::Tj, GL::Tk};
    GL::Kind neg[3] = {GL::Ti_inv, GL::Tj_inv, GL::Tk_inv};
    mpz_class n = abs(count);
    for (mpz_class t = 0; t < n; ++t)
        w.insert(w.begin(), GL{count > 0 ? pos[axis] : neg[axis]});
}
}  // namespace detail

inline ReductionResult reduce(const Quaternion& q0, GroupTag group, int max_iter = 64) {
    if (sgn(q0.re()) <= 0) throw std::domain_error("needs Re(q) > 0");
    using GL = GeneratorLabel;
    Quaternion q = q0;
    Word w;
    int iter = 0;
    for (;;) {
        if (++iter > max_iter)
            throw std::runtime_error("reduction did not terminate in " +
                                     std::to_string(max_iter) + " iterations at " +
                                     to_string(q));
        // translate the imaginary part into [-1/2, 1/2]^3
        mpz_class m1 = detail::nearest_int(q.x1);
        mpz_class m2 = detail::nearest_int(q.x2);
        mpz_class m3 = detail::nearest_int(q.x3);
        q.x1 -= Rational(m1);
        q.x2 -= Rational(m2);
        q.x3 -= Rational(m3);
        detail::push_translation(w, 0, -m1);
        detail::push_translation(w, 1, -m2);
        detail::push_translation(w, 2, -m3);
        if (q.norm_sq() >= 1) break;
        q = q.inv();  // T; Re strictly increases since |q| < 1
        w.insert(w.begin(), GL{GL::T});
    }
    // sign fix by one of I, D_i, D_j, D_k (each flips the other two axes)
    static const Quaternion units[3] = {Quaternion::i(), Quaternion::j(), Quaternion::k()};
    if (!signs_uniform(sgn(q.x1), sgn(q.x2), sgn(q.x3))) {
        for (int u = 0; u < 3; ++u) {
            Quaternion cand = units[u] * q * units[u].inv();
            if (signs_uniform(sgn(cand.x1), sgn(cand.x2), sgn(cand.x3))) {
                q = cand;
                w.insert(w.begin(), GL::du(units[u]));
                break;
            }
        }
    }
    if (group == GroupTag::H) {
        // D_w1 cycles (x1,x2,x3) -> (x3,x1,x2); pick the power putting the
        // largest |coordinate| into slot 3, preferring fewer applications.
        Quaternion o = omega_1();
        Quaternion best = q;
        int best_m = 0;
        Quaternion cur = q;
        for (int m = 1; m <= 2; ++m) {
            cur = o * cur * o.inv();
            if (abs(cur.x3) > abs(best.x3)) {
                best = cur;
                best_m = m;
            }
        }
        q = best;
        for (int t = 0; t < best_m; ++t) w.insert(w.begin(), GL::du(o));
    }
    return {w, q, iter};
}

// ---- Euler characteristic of the polytope P ----------------------------------

struct FaceCounts {
    std::array<int, 5> c;  // cells by dimension 0..4
    int chi() const { return c[0] - c[1] + c[2] - c[3] + c[4]; }
};
inline FaceCounts face_counts_P() { return {{8, 20, 20, 7, 1}}; }
inline int euler_characteristic_P() { return face_counts_P().chi(); }

// ---- Coxeter simplex ----------------------------------------------------------

// A facet of the simplex is either a vertical hyperplane x.n = h (n has no
// Re-component) or the unit hemisphere around the origin.
struct Facet {
    bool sphere;
    std::array<double, 3> n;  // unit normal in the (x1,x2,x3) coordinates
    double h;
    double radius;  // sphere only
};

struct LabeledAngle {
    std::string label;
    double angle;
};

// Dihedral angle along the 2-face where both facets meet, from the Euclidean
// normal data; folded into [0, pi/2] since the tables list interior angles.
inline double facet_angle(const Facet& f1, const Facet& f2) {
    double c;
    if (!f1.sphere && !f2.sphere) {
        c = f1.n[0] * f2.n[0] + f1.n[1] * f2.n[1] + f1.n[2] * f2.n[2];
    } else {
        const Facet& pl = f1.sphere ? f2 : f1;
        // sphere centered at the origin: cos = (c.n - h)/r with c = 0
        c = (0.0 - pl.h) / (f1.sphere ? f1.radius : f2.radius);
    }
    return std::acos(std::fabs(c));
}

inline std::vector<LabeledAngle> dihedral_angles() {
    double s2 = std::sqrt(0.5);
    // facet opposite each vertex of Delta_L = {A, B, C, D, inf}
    Facet fA{false, {1, 0, 0}, 0.5, 0};         // x1 = 1/2
    Facet fB{false, {s2, -s2, 0}, 0.0, 0};      // x1 = x2
    Facet fC{false, {0, s2, -s2}, 0.0, 0};      // x2 = x3
    Facet fD{false, {0, 0, 1}, 0.0, 0};         // x3 = 0
    Facet fI{true, {0, 0, 0}, 0.0, 1.0};        // unit hemisphere
    struct Row {
        const char* label;
        const Facet *f1, *f2;
    };
    // the 2-face XYZ lies on the two facets opposite the omitted vertices
    std::vector<Row> rows = {
        {"BCD", &fA, &fI}, {"ACinf", &fB, &fD}, {"BCinf", &fA, &fD},
        {"ABinf", &fC, &fD}, {"BDinf", &fA, &fC}, {"ABC", &fD, &fI},
        {"ADinf", &fB, &fC}, {"ABD", &fC, &fI}, {"ACD", &fB, &fI},
        {"CDinf", &fA, &fB},
    };
    std::vector<LabeledAngle> out;
    for (const auto& r : rows) out.push_back({r.label, facet_angle(*r.f1, *r.f2)});
    return out;
}

inline std::vector<double> dihedral_angles_expected() {
    double p = std::acos(-1.0);
    return {p / 3, p / 2, p / 2, p / 4, p / 2, p / 2, p / 3, p / 2, p / 2, p / 4};
}

// ---- polytope vertex data -----------------------------------------------------

inline std::vector<ExtendedPoint> polytope_data(const std::string& name) {
    std::vector<ExtendedPoint> v;
    auto q = [](int a, int b, int c, int d, int den) {
        return Quaternion(rat(a, den), rat(b, den), rat(c, den), rat(d, den));
    };
    if (name == "cube_C") {
        for (int s1 : {1, -1})
            for (int s2 : {1, -1})
                for (int s3 : {1, -1}) v.push_back(q(1, s1, s2, s3, 2));
    } else if (name == "cell24") {
        v.push_back(ExtendedPoint(Quaternion(0)));
        v.push_back(ExtendedPoint::infinity());
        for (int ax = 1; ax <= 3; ++ax)
            for (int s : {1, -1})
                v.push_back(q(0, ax == 1 ? s : 0, ax == 2 ? s : 0, ax == 3 ? s : 0, 1));
        for (int den : {1, 2})
            for (int s1 : {1, -1})
                for (int s2 : {1, -1})
                    for (int s3 : {1, -1}) v.push_back(q(0, s1, s2, s3, den));
    } else if (name == "rhombic") {
        // V_C1
        v.push_back(ExtendedPoint(Quaternion(0)));
        v.push_back(q(0, 1, 0, 0, 2));
        v.push_back(q(0, 0, 1, 0, 2));
        v.push_back(q(0, 0, 0, 1, 2));
        v.push_back(q(0, 1, 1, 0, 2));
        v.push_back(q(0, 0, 1, 1, 2));
        v.push_back(q(0, 1, 0, 1, 2));
        v.push_back(q(0, 1, 1, 1, 2));
        // V_O
        v.push_back(q(0, -1, 1, 1, 4));
        v.push_back(q(0, 1, -1, 1, 4));
        v.push_back(q(0, 1, 1, -1, 4));
        v.push_back(q(0, 3, 1, 1, 4));
        v.push_back(q(0, 1, 3, 1, 4));
        v.push_back(q(0, 1, 1, 3, 4));
    } else {
        throw std::invalid_argument("unknown polytope: " + name);
    }
    return v;
}

}  // namespace qmod
