// 2x2 quaternionic matrices, the BG conditions, the Moebius action on the
// half-space H^1_H and on the ball, Iwasawa factors, Dieudonne determinant.
#pragma once

#include "qmod/quaternion.hpp"

#include <cmath>
#include <functional>
#include <optional>
#include <string>

namespace qmod {

struct QMatrix {
    Quaternion a, b, c, d;

    QMatrix() : a(1), b(0), c(0), d(1) {}
    QMatrix(Quaternion a_, Quaternion b_, Quaternion c_, Quaternion d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

    static QMatrix identity() { return QMatrix(); }

    QMatrix operator*(const QMatrix& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
    }
    QMatrix operator-() const { return {-a, -b, -c, -d}; }
    bool operator==(const QMatrix& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d;
    }

    const Quaternion& entry(int n) const {
        switch (n) {
            case 0: return a;
            case 1: return b;
            case 2: return c;
            default: return d;
        }
    }
};

// The three equivalent BG conditions; check_bg uses the second form, the
// others exist so tests can confirm agreement.
inline bool check_bg_form2(const QMatrix& m) {
    return (m.a * m.c.conj()).re() == 0 && (m.b * m.d.conj()).re() == 0 &&
           m.b.conj() * m.c + m.d.conj() * m.a == Quaternion::one();
}
inline bool check_bg_form3(const QMatrix& m) {
    return (m.c * m.d.conj()).re() == 0 && (m.a * m.b.conj()).re() == 0 &&
           m.a * m.d.conj() + m.b * m.c.conj() == Quaternion::one();
}
// Form 1: conj(M)^t K M = K with K = [[0,1],[1,0]].
inline bool check_bg_form1(const QMatrix& m) {
    Quaternion k00 = m.a.conj() * m.c + m.c.conj() * m.a;
    Quaternion k01 = m.a.conj() * m.d + m.c.conj() * m.b;
    Quaternion k10 = m.b.conj() * m.c + m.d.conj() * m.a;
    Quaternion k11 = m.b.conj() * m.d + m.d.conj() * m.b;
    return k00.is_zero() && k01 == Quaternion::one() && k10 == Quaternion::one() &&
           k11.is_zero();
}
inline bool check_bg(const QMatrix& m) { return check_bg_form2(m); }

// An element of PSL: a BG matrix canonicalized so the first nonzero
// coefficient in the scan a.x0, a.x1, ..., d.x3 is positive.
struct GroupElement {
    QMatrix m;

    GroupElement() : m(QMatrix::identity()) {}
    explicit GroupElement(const QMatrix& raw, bool require_bg = true) : m(raw) {
        if (require_bg && !check_bg(raw))
            throw std::invalid_argument("matrix fails BG conditions");
        canonicalize();
    }
    void canonicalize() {
        for (int e = 0; e < 4; ++e)
            for (int n = 0; n < 4; ++n) {
                int s = sgn(m.entry(e).coeff(n));
                if (s == 0) continue;
                if (s < 0) m = -m;
                return;
            }
    }
    bool is_identity() const { return m == QMatrix::identity(); }
    bool operator==(const GroupElement& o) const { return m == o.m; }

    GroupElement inverse() const {
        // For BG matrices the inverse is [[d̄, -b̄],[-c̄, ā]]... verified via
        // form 1: M^{-1} = K conj(M)^t K = [[d̄, b̄],[c̄, ā]].
        QMatrix inv(m.d.conj(), m.b.conj(), m.c.conj(), m.a.conj());
        return GroupElement(inv);
    }
    std::string key() const {
        std::string s;
        for (int e = 0; e < 4; ++e)
            for (int n = 0; n < 4; ++n) {
                s += m.entry(e).coeff(n).get_str();
                s += ',';
            }
        return s;
    }
};

inline GroupElement compose(const GroupElement& g, const GroupElement& h) {
    GroupElement r;
    r.m = g.m * h.m;
    r.canonicalize();
    return r;
}

// A point of the extended space: a finite quaternion or infinity.
struct ExtendedPoint {
    std::optional<Quaternion> q;  // nullopt = infinity

    ExtendedPoint() : q(Quaternion()) {}
    ExtendedPoint(Quaternion v) : q(std::move(v)) {}
    static ExtendedPoint infinity() {
        ExtendedPoint p;
        p.q.reset();
        return p;
    }
    bool is_infinity() const { return !q.has_value(); }
    bool operator==(const ExtendedPoint& o) const {
        if (is_infinity() || o.is_infinity()) return is_infinity() == o.is_infinity();
        return *q == *o.q;
    }
};

// F(q) = (aq+b)(cq+d)^{-1}, with the three infinity clauses.
inline ExtendedPoint apply(const GroupElement& g, const ExtendedPoint& p) {
    const QMatrix& m = g.m;
    if (p.is_infinity()) {
        if (m.c.is_zero()) return ExtendedPoint::infinity();
        return ExtendedPoint(m.a * m.c.inv());
    }
    Quaternion den = m.c * *p.q + m.d;
    if (den.is_zero()) return ExtendedPoint::infinity();
    return ExtendedPoint((m.a * *p.q + m.b) * den.inv());
}

inline Quaternion apply_finite(const GroupElement& g, const Quaternion& q) {
    ExtendedPoint r = apply(g, ExtendedPoint(q));
    if (r.is_infinity()) throw std::domain_error("image is infinity");
    return *r.q;
}

// Float version for radical points.
inline QuaternionF apply_f(const GroupElement& g, const QuaternionF& q) {
    QuaternionF a(g.m.a), b(g.m.b), c(g.m.c), d(g.m.d);
    return (a * q + b) * (c * q + d).inv();
}

// Lemma: Re(F(q)) = Re(q) / |cq+d|^2 for BG matrices.
inline Rational real_part_after(const GroupElement& g, const Quaternion& q) {
    if (sgn(q.re()) <= 0) throw std::domain_error("needs Re(q) > 0");
    return q.re() / (g.m.c * q + g.m.d).norm_sq();
}

// det_sq = |a|^2|d|^2 + |c|^2|b|^2 - 2 Re(c a_bar b d_bar)
inline Rational dieudonne_sq(const QMatrix& m) {
    return m.a.norm_sq() * m.d.norm_sq() + m.c.norm_sq() * m.b.norm_sq() -
           rat(2) * (m.c * m.a.conj() * m.b * m.d.conj()).re();
}
inline double dieudonne(const QMatrix& m) {
    return std::sqrt(dieudonne_sq(m).get_d());
}

struct IwasawaFactors {
    double lambda;
    QuaternionF omega;  // pure imaginary
    QuaternionF alpha, beta;
};

inline IwasawaFactors iwasawa(const GroupElement& g) {
    QuaternionF a(g.m.a), b(g.m.b), c(g.m.c), d(g.m.d);
    double lam = 1.0 / std::sqrt(c.norm_sq() + d.norm_sq());
    IwasawaFactors f;
    f.lambda = lam;
    f.omega = a * c.conj() + b * d.conj();
    f.alpha = d * lam;
    f.beta = c * lam;
    return f;
}

// diag(lambda, 1/lambda) * [[1, omega],[0,1]] * [[alpha, beta],[beta, alpha]]
struct QMatrixF {
    QuaternionF a, b, c, d;
};
inline QMatrixF iwasawa_recompose(const IwasawaFactors& f) {
    double l = f.lambda;
    QuaternionF a = (f.alpha + f.omega * f.beta) * l;
    QuaternionF b = (f.beta + f.omega * f.alpha) * l;
    QuaternionF c = f.beta * (1.0 / l);
    QuaternionF d = f.alpha * (1.0 / l);
    return {a, b, c, d};
}

// Cayley transform Psi(q) = (1+q)(1-q)^{-1} : ball -> half-space.
inline QuaternionF cayley_ball_to_half(const QuaternionF& q) {
    if (q.norm_sq() >= 1.0) throw std::domain_error("needs |q| < 1");
    QuaternionF one{1, 0, 0, 0};
    return (one + q) * (one - q).inv();
}
inline QuaternionF cayley_half_to_ball(const QuaternionF& p) {
    if (p.x0 <= 0) throw std::domain_error("needs Re > 0");
    QuaternionF one{1, 0, 0, 0};
    return (p - one) * (p + one).inv();
}
// Exact version; Psi(1) = infinity.
inline ExtendedPoint cayley_ball_exact(const Quaternion& q) {
    Quaternion den = Quaternion::one() - q;
    if (den.is_zero()) return ExtendedPoint::infinity();
    return ExtendedPoint((Quaternion::one() + q) * den.inv());
}

inline std::optional<int> element_order(const GroupElement& g, int cap) {
    GroupElement p = g;
    for (int n = 1; n <= cap; ++n) {
        if (p.is_identity()) return n;
        p = compose(p, g);
    }
    return std::nullopt;
}

// Fixed point of L_omega = tau_omega T (resp. R_omega) for omega in {±i,±j,±k}.
inline QuaternionF fixed_point_L(const Quaternion& omega, bool right_version = false) {
    if (!(omega.re() == 0 && omega.norm_sq() == 1 && is_lipschitz(omega)))
        throw std::invalid_argument("omega must be one of ±i, ±j, ±k");
    double h = std::sqrt(3.0) / 2.0;
    double s = right_version ? -0.5 : 0.5;
    QuaternionF w(omega);
    return QuaternionF{h, 0, 0, 0} + w * s;
}

inline bool is_in_isotropy_K(const GroupElement& g) {
    return g.m.a == g.m.d && g.m.b == g.m.c;
}

// P_u = (1/2) [[u+1, u-1],[u-1, u+1]] for a Hurwitz unit u; fixes 1.
inline GroupElement hurwitz_rotation(const Quaternion& u) {
    if (!is_hurwitz_unit(u)) throw std::invalid_argument("u must be a Hurwitz unit");
    Quaternion p = (u + Quaternion::one()) * rat(1, 2);
    Quaternion m = (u - Quaternion::one()) * rat(1, 2);
    return GroupElement(QMatrix(p, m, m, p));
}

// Standard generators.
inline GroupElement elem_T() {
    return GroupElement(QMatrix(Quaternion(0), Quaternion(1), Quaternion(1), Quaternion(0)));
}
inline GroupElement elem_tau(const Quaternion& u) {
    return GroupElement(QMatrix(Quaternion(1), u, Quaternion(0), Quaternion(1)));
}
inline GroupElement elem_D(const Quaternion& u) {
    return GroupElement(QMatrix(u, Quaternion(0), Quaternion(0), u));
}

}  // namespace qmod
