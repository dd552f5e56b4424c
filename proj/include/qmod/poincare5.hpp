// Poincare extension of the BG Moebius transformations to hyperbolic
// 5-space, with the hyperbolic metric and the 5-dimensional chimney.
#pragma once

#include "qmod/moebius.hpp"

#include <cmath>

namespace qmod {

struct Point5 {
    Quaternion q;
    Rational t;
    Point5(Quaternion q_, Rational t_) : q(std::move(q_)), t(std::move(t_)) {
        if (sgn(t) <= 0) throw std::domain_error("needs t > 0");
    }
};

struct Point5F {
    QuaternionF q;
    double t;
};

// gamma_bar(q,t) = ( ((aq+b)(conj(q)conj(c)+conj(d)) + a conj(c) t^2) / N,
//                    det(gamma) t / N ),  N = |cq+d|^2 + |c|^2 t^2.
// Exact on rationals when det_sq = 1, which holds for every group element.
inline Point5 extend(const GroupElement& g, const Point5& p) {
    Rational det_sq = dieudonne_sq(g.m);
    if (det_sq != 1)
        throw std::domain_error("exact extension requires det_sq = 1");
    const Quaternion &a = g.m.a, &b = g.m.b, &c = g.m.c, &d = g.m.d;
    Rational t2 = p.t * p.t;
    Rational den = (c * p.q + d).norm_sq() + c.norm_sq() * t2;
    if (sgn(den) == 0) throw std::domain_error("degenerate denominator");
    Quaternion num = (a * p.q + b) * (p.q.conj() * c.conj() + d.conj()) +
                     a * c.conj() * t2;
    return Point5(num * (rat(1) / den), p.t / den);
}

// Float version accepting any invertible BG matrix.
inline Point5F extend_f(const GroupElement& g, const Point5F& p) {
    QuaternionF a(g.m.a), b(g.m.b), c(g.m.c), d(g.m.d);
    double t2 = p.t * p.t;
    double den = (c * p.q + d).norm_sq() + c.norm_sq() * t2;
    QuaternionF num = (a * p.q + b) * (p.q.conj() * c.conj() + d.conj()) + a * c.conj() * t2;
    return {num * (1.0 / den), dieudonne(g.m) * p.t / den};
}

// The t=0 slice of the extension formula; exact, must equal apply(g, q).
inline ExtendedPoint boundary_restriction(const GroupElement& g, const Quaternion& q) {
    const Quaternion &a = g.m.a, &b = g.m.b, &c = g.m.c, &d = g.m.d;
    Rational den = (c * q + d).norm_sq();
    if (sgn(den) == 0) return ExtendedPoint::infinity();
    return ExtendedPoint(((a * q + b) * (q.conj() * c.conj() + d.conj())) *
                         (rat(1) / den));
}
inline bool boundary_restriction_check(const GroupElement& g, const Quaternion& q) {
    return boundary_restriction(g, q) == apply(g, ExtendedPoint(q));
}

// cosh d = 1 + (|q1-q2|^2 + (t1-t2)^2) / (2 t1 t2)
inline double h5_distance(const Point5F& p1, const Point5F& p2) {
    double dq = (p1.q - p2.q).norm_sq();
    double dt = (p1.t - p2.t) * (p1.t - p2.t);
    double ch = 1.0 + (dq + dt) / (2.0 * p1.t * p2.t);
    return std::acosh(ch);
}

// P^5: all four quaternion coordinates in [-1/2, 1/2] and |q|^2 + t^2 >= 1.
inline bool chimney5_contains(const Point5& p) {
    Rational half = rat(1, 2);
    for (int n = 0; n < 4; ++n)
        if (abs(p.q.coeff(n)) > half) return false;
    return p.q.norm_sq() + p.t * p.t >= 1;
}

// chi^orb of the 5-orbifolds (stored constants: the negatives of the
// 4-dimensional values).
inline Rational chi_orb_5_L() { return rat(-1, 96); }
inline Rational chi_orb_5_H() { return rat(-1, 288); }

}  // namespace qmod
