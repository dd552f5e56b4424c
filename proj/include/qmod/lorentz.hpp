// The SO_+(4,1) hyperboloid model: Lorentz matrices, Cayley transforms,
// generator images of the modular groups, Lorentz Iwasawa decomposition, and
// the order-24 group U(H,Lor).
//
// Entries are doubles.  Every matrix the modular groups produce has integer
// or half-integer entries, which doubles represent exactly, so the integer
// congruence checks are exact; only D(r) and decompositions are approximate.
#pragma once

#include "qmod/words.hpp"

#include <array>
#include <cmath>
#include <map>
#include <vector>

namespace qmod {

using Mat4 = std::array<std::array<double, 4>, 4>;

struct LorentzMatrix {
    std::array<std::array<double, 5>, 5> m{};

    static LorentzMatrix identity() {
        LorentzMatrix r;
        for (int n = 0; n < 5; ++n) r.m[n][n] = 1;
        return r;
    }
    LorentzMatrix operator*(const LorentzMatrix& o) const {
        LorentzMatrix r;
        for (int a = 0; a < 5; ++a)
            for (int c = 0; c < 5; ++c) {
                double s = 0;
                for (int b = 0; b < 5; ++b) s += m[a][b] * o.m[b][c];
                r.m[a][c] = s;
            }
        return r;
    }
    std::array<double, 5> operator*(const std::array<double, 5>& v) const {
        std::array<double, 5> r{};
        for (int a = 0; a < 5; ++a)
            for (int b = 0; b < 5; ++b) r[a] += m[a][b] * v[b];
        return r;
    }
    // max |M^t J M - J| deviation; 0 for the exact rational matrices
    double lorentz_defect() const {
        double worst = 0;
        for (int a = 0; a < 5; ++a)
            for (int c = 0; c < 5; ++c) {
                double s = 0;
                for (int b = 0; b < 5; ++b) s += m[b][a] * (b == 0 ? -1 : 1) * m[b][c];
                double target = (a == c) ? (a == 0 ? -1 : 1) : 0;
                worst = std::max(worst, std::fabs(s - target));
            }
        return worst;
    }
    bool is_lorentz(double tol = 1e-12) const { return lorentz_defect() <= tol; }
    bool all_integer() const {
        for (auto& row : m)
            for (double e : row)
                if (e != std::floor(e)) return false;
        return true;
    }
    double max_diff(const LorentzMatrix& o) const {
        double d = 0;
        for (int a = 0; a < 5; ++a)
            for (int b = 0; b < 5; ++b) d = std::max(d, std::fabs(m[a][b] - o.m[a][b]));
        return d;
    }
};

inline LorentzMatrix lorentz_J() {
    LorentzMatrix r = LorentzMatrix::identity();
    r.m[0][0] = -1;
    return r;
}
inline LorentzMatrix lorentz_minus_J() {
    LorentzMatrix r = lorentz_J();
    for (int a = 0; a < 5; ++a) r.m[a][a] = -r.m[a][a];
    return r;
}

inline LorentzMatrix lorentz_translation(double x, double y, double z) {
    double s = (x * x + y * y + z * z) / 2.0;
    LorentzMatrix r = LorentzMatrix::identity();
    r.m[0][0] = 1 + s;
    r.m[0][1] = x; r.m[0][2] = y; r.m[0][3] = z; r.m[0][4] = s;
    r.m[1][0] = x; r.m[1][4] = x;
    r.m[2][0] = y; r.m[2][4] = y;
    r.m[3][0] = z; r.m[3][4] = z;
    r.m[4][0] = -s;
    r.m[4][1] = -x; r.m[4][2] = -y; r.m[4][3] = -z; r.m[4][4] = 1 - s;
    return r;
}

inline LorentzMatrix lorentz_dilation(double r) {
    if (r <= 0) throw std::invalid_argument("dilation needs r > 0");
    LorentzMatrix d = LorentzMatrix::identity();
    d.m[0][0] = (1 + r * r) / (2 * r);
    d.m[0][4] = (1 - r * r) / (2 * r);
    d.m[4][0] = d.m[0][4];
    d.m[4][4] = d.m[0][0];
    return d;
}

inline LorentzMatrix bhat(const Mat4& b) {
    LorentzMatrix r;
    r.m[0][0] = 1;
    for (int a = 0; a < 4; ++a)
        for (int c = 0; c < 4; ++c) r.m[a + 1][c + 1] = b[a][c];
    return r;
}

// 4x4 block of q -> u q u^{-1} in the half-space coordinates
// (y1,y2,y3,y4) <-> (i, j, k, Re) parts of q.
inline Mat4 conjugation_block(const Quaternion& u) {
    if (!is_hurwitz_unit(u)) throw std::invalid_argument("u must be a Hurwitz unit");
    Quaternion basis[4] = {Quaternion::i(), Quaternion::j(), Quaternion::k(),
                           Quaternion::one()};
    Mat4 b{};
    for (int c = 0; c < 4; ++c) {
        Quaternion img = u * basis[c] * u.inv();
        b[0][c] = img.x1.get_d();
        b[1][c] = img.x2.get_d();
        b[2][c] = img.x3.get_d();
        b[3][c] = img.x0.get_d();
    }
    return b;
}

inline LorentzMatrix generator_matrix(const GeneratorLabel& l) {
    using GL = GeneratorLabel;
    switch (l.kind) {
        case GL::T: return lorentz_minus_J();
        case GL::Ti: return lorentz_translation(1, 0, 0);
        case GL::Tj: return lorentz_translation(0, 1, 0);
        case GL::Tk: return lorentz_translation(0, 0, 1);
        case GL::Ti_inv: return lorentz_translation(-1, 0, 0);
        case GL::Tj_inv: return lorentz_translation(0, -1, 0);
        case GL::Tk_inv: return lorentz_translation(0, 0, -1);
        default: return bhat(conjugation_block(l.u));
    }
}

inline LorentzMatrix lorentz_rep(const Word& w) {
    LorentzMatrix r = LorentzMatrix::identity();
    for (const auto& l : w) r = r * generator_matrix(l);
    return r;
}

// ---- Cayley transforms ---------------------------------------------------------

struct HyperboloidPoint {
    std::array<double, 5> x;
    double defect() const {
        return std::fabs(x[1] * x[1] + x[2] * x[2] + x[3] * x[3] + x[4] * x[4] -
                         (x[0] * x[0] - 1));
    }
    bool valid(double tol = 1e-9) const { return x[0] > 0 && defect() <= tol; }
};

// half-space coordinates (y1,y2,y3,y4), y4 > 0; q = y4 + y1 i + y2 j + y3 k
inline std::array<double, 4> cayley_to_half(const HyperboloidPoint& p) {
    double den = p.x[0] + p.x[4];
    if (den <= 0) throw std::domain_error("x0 + x4 must be positive");
    return {p.x[1] / den, p.x[2] / den, p.x[3] / den, 1.0 / den};
}
inline HyperboloidPoint cayley_from_half(const std::array<double, 4>& y) {
    if (y[3] <= 0) throw std::domain_error("y4 must be positive");
    double n = y[0] * y[0] + y[1] * y[1] + y[2] * y[2] + y[3] * y[3];
    return {{(1 + n) / (2 * y[3]), y[0] / y[3], y[1] / y[3], y[2] / y[3],
             (1 - n) / (2 * y[3])}};
}
inline QuaternionF half_to_quat(const std::array<double, 4>& y) {
    return {y[3], y[0], y[1], y[2]};
}
inline std::array<double, 4> quat_to_half(const QuaternionF& q) {
    return {q.x1, q.x2, q.x3, q.x0};
}

// ---- Iwasawa ---------------------------------------------------------------------

struct LorentzIwasawa {
    double r;
    std::array<double, 3> xyz;
    Mat4 b;
};

inline LorentzIwasawa lorentz_iwasawa(const LorentzMatrix& m, double tol = 1e-9) {
    if (!m.is_lorentz(tol)) throw std::invalid_argument("not a Lorentz matrix");
    // image of the basepoint determines the D(r) T(x,y,z) part
    HyperboloidPoint p{m * std::array<double, 5>{1, 0, 0, 0, 0}};
    auto y = cayley_to_half(p);
    LorentzIwasawa f;
    f.r = y[3];
    f.xyz = {y[0] / y[3], y[1] / y[3], y[2] / y[3]};
    LorentzMatrix rest = lorentz_translation(-f.xyz[0], -f.xyz[1], -f.xyz[2]) *
                         lorentz_dilation(1.0 / f.r) * m;
    for (int a = 0; a < 4; ++a)
        for (int c = 0; c < 4; ++c) f.b[a][c] = rest.m[a + 1][c + 1];
    return f;
}

inline LorentzMatrix lorentz_iwasawa_recompose(const LorentzIwasawa& f) {
    return lorentz_dilation(f.r) *
           lorentz_translation(f.xyz[0], f.xyz[1], f.xyz[2]) * bhat(f.b);
}

// T(x,y,z) has integer entries iff x+y+z is even (x^2+y^2+z^2 = x+y+z mod 2).
inline bool congruence_integrality(long x, long y, long z) {
    return ((x + y + z) % 2) == 0;
}

// ---- U(H, Lor) --------------------------------------------------------------------

inline Mat4 s_matrix(int axis) {  // left multiplication by i/j/k in basis (1,i,j,k)
    Quaternion u = axis == 1 ? Quaternion::i() : (axis == 2 ? Quaternion::j()
                                                            : Quaternion::k());
    Quaternion basis[4] = {Quaternion::one(), Quaternion::i(), Quaternion::j(),
                           Quaternion::k()};
    Mat4 b{};
    for (int c = 0; c < 4; ++c) {
        Quaternion img = u * basis[c];
        for (int r = 0; r < 4; ++r) b[r][c] = img.coeff(r).get_d();
    }
    return b;
}

// the 24 matrices ±I, ±S_i, ±S_j, ±S_k, (±I ±S_i ±S_j ±S_k)/2, hatted
inline std::vector<LorentzMatrix> hurwitz_lorentz_group() {
    Mat4 id{};
    for (int n = 0; n < 4; ++n) id[n][n] = 1;
    Mat4 si = s_matrix(1), sj = s_matrix(2), sk = s_matrix(3);
    auto lin = [&](double c0, double c1, double c2, double c3) {
        Mat4 r{};
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                r[a][b] = c0 * id[a][b] + c1 * si[a][b] + c2 * sj[a][b] + c3 * sk[a][b];
        return r;
    };
    std::vector<LorentzMatrix> out;
    for (int s : {1, -1}) {
        out.push_back(bhat(lin(s, 0, 0, 0)));
        out.push_back(bhat(lin(0, s, 0, 0)));
        out.push_back(bhat(lin(0, 0, s, 0)));
        out.push_back(bhat(lin(0, 0, 0, s)));
    }
    for (int s0 : {1, -1})
        for (int s1 : {1, -1})
            for (int s2 : {1, -1})
                for (int s3 : {1, -1})
                    out.push_back(bhat(lin(s0 * 0.5, s1 * 0.5, s2 * 0.5, s3 * 0.5)));
    return out;
}

// entries are multiples of 1/2 and exact in doubles, so keys are exact
inline std::string lorentz_key(const LorentzMatrix& m) {
    std::string k;
    for (auto& row : m.m)
        for (double e : row) {
            k += std::to_string((long long)std::llround(e * 2));
            k += ',';
        }
    return k;
}

}  // namespace qmod
