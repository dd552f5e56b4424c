// Stratification tables of the singular loci, isotropy verification by
// finite closure, orbifold Euler characteristics, cusp-section torus
// automorphisms, and the stored volume constants.
#pragma once

#include "qmod/words.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace qmod {

struct Stratum {
    std::string id;
    int dimension;       // 0..2 (dimension of the stratum cell)
    int cell_count;
    int isotropy_order;
    std::vector<Word> generators;
    QuaternionF representative;
    std::string local_model;
    bool compact;
    // signature_check: assert the closure is Z/p (+ Z/q) for the plain
    // cyclic/bicyclic tags O(2), O(3), O(2,2); the compound tags name
    // products that are semidirect in the actual groups.
    bool signature_check;
    bool implementer_chosen_words = false;
};

namespace strata_detail {
using GL = GeneratorLabel;
inline Word W(std::initializer_list<GL> ls) { return Word(ls); }
inline GL T() { return GL{GL::T}; }
inline GL Ti() { return GL{GL::Ti}; }
inline GL Tj() { return GL{GL::Tj}; }
inline GL Tk() { return GL{GL::Tk}; }
inline GL Di() { return GL::du(Quaternion::i()); }
inline GL Dj() { return GL::du(Quaternion::j()); }
inline GL Dk() { return GL::du(Quaternion::k()); }
inline GL Dw() { return GL::du(omega_1()); }
}  // namespace strata_detail

inline std::vector<Stratum> strata_L() {
    using namespace strata_detail;
    double s2 = std::sqrt(0.5), s3 = std::sqrt(3.0) / 2;
    double c15 = std::cos(std::acos(-1.0) / 12), s15 = std::sin(std::acos(-1.0) / 12);
    std::vector<Stratum> v;
    v.push_back({"G1", 1, 8, 4, {W({Di()}), W({Dj()})}, {2, 0, 0, 0}, "O(2,2)", false, true});
    v.push_back({"G2", 2, 12, 2, {W({Ti(), Dj()})}, {2, 0.5, 0.25, 0}, "O(2)", false, true});
    v.push_back({"G3", 0, 1, 8, {W({T()}), W({Di()}), W({Dj()})}, {1, 0, 0, 0},
                 "O(2,(2,2))", true, false});
    v.push_back({"G4", 0, 3, 12, {W({Ti(), T()}), W({T(), Dj()})}, {s3, 0.5, 0, 0},
                 "O(2,6)", true, false});
    // the source also lists T D_v as a generator here, but it does not fix
    // the vertex; the remaining three generate the full order-24 stabilizer
    v.push_back({"G5", 0, 3, 24,
                 {W({Ti(), Tj(), T()}), W({Ti(), T(), Ti(), T()}), W({Tj(), T(), Tj(), T()})},
                 {s2, 0.5, 0.5, 0}, "O(4,6)", true, false});
    v.push_back({"G6", 0, 1, 96,
                 {W({Ti(), Tj(), Tk(), T()}),
                  W({Ti(), Tj(), T(), Ti(), Tj(), T()}),
                  W({Ti(), Tk(), T(), Ti(), Tk(), T()}),
                  W({Tj(), Tk(), T(), Tj(), Tk(), T()}),
                  W({Ti(), T(), Ti(), T()}), W({Tj(), T(), Tj(), T()}),
                  W({Tk(), T(), Tk(), T()})},
                 {0.5, 0.5, 0.5, 0.5}, "O((2,2),<2,3,3>)", true, false});
    v.push_back({"G7", 1, 3, 4, {W({Di()}), W({T(), Dj()})}, {c15, s15, 0, 0},
                 "O(2,2)", true, true});
    v.push_back({"G8", 1, 3, 6, {W({Ti(), T(), Ti(), T()}), W({T(), Dk()})},
                 {std::sqrt(11.0) / 4, 0.5, 0.25, 0}, "O(2,3)", true, false});
    v.push_back({"G9", 1, 6, 12, {W({Tj(), T(), Tj(), T()}), W({Tk(), T(), Tk(), T()})},
                 {std::sqrt(7.0) / 4, 0.25, 0.5, 0.5}, "O(2,6)", true, false});
    v.push_back({"G10", 2, 3, 2, {W({T(), Dk()})},
                 {std::sqrt(59.0 / 64), 0.125, 0.25, 0}, "O(2)", true, true});
    v.push_back({"G11", 2, 3, 3, {W({Ti(), T(), Ti(), T()})},
                 {std::sqrt(43.0 / 64), 0.5, 0.25, 0.125}, "O(3)", true, true});
    return v;
}

inline std::vector<Stratum> strata_H() {
    using namespace strata_detail;
    double s2 = std::sqrt(0.5), s3 = std::sqrt(3.0) / 2;
    double c15 = std::cos(std::acos(-1.0) / 12), s15 = std::sin(std::acos(-1.0) / 12);
    std::vector<Stratum> v;
    v.push_back({"L1", 1, 3, 4, {W({Dk()}), W({Tk(), Di()})}, {2, 0, 0, 0.5},
                 "O(2,2)", false, true});
    // stated as the order-8 group U(H) in the strata list, but U(H) has
    // order 12 (tetrahedral) and the exact stabilizer closure is 12
    v.push_back({"L2", 1, 2, 12, {W({Di()}), W({Dj()}), W({Dw()})}, {2, 0, 0, 0},
                 "O(2,(2,2))", false, false});
    v.push_back({"L3", 2, 5, 2, {W({Tk(), Di()})}, {2, 0.25, 0, 0.5}, "O(2)", false, true});
    v.push_back({"L4", 2, 1, 3, {W({Dw()})}, {2, 0.25, 0.25, 0.25}, "O(3)", false, true});
    v.push_back({"L5", 0, 1, 24, {W({T()}), W({Di()}), W({Dj()}), W({Dw()})},
                 {1, 0, 0, 0}, "O(2,<2,3,3>)", true, false});
    v.push_back({"L6", 0, 1, 12, {W({Tk(), T()}), W({T(), Di()})}, {s3, 0, 0, 0.5},
                 "O(2,6)", true, false});
    v.push_back({"L7", 0, 1, 24,
                 {W({Tj(), Tk(), T()}), W({Tj(), T(), Tj(), T()}), W({Tk(), T(), Tk(), T()})},
                 {s2, 0, 0.5, 0.5}, "O(4,6)", true, false});
    v.push_back({"L8", 0, 1, 288,
                 {W({Dw()}), W({Ti(), Tj(), Tk(), T()}),
                  W({Ti(), Tj(), T(), Ti(), Tj(), T()}),
                  W({Ti(), Tk(), T(), Ti(), Tk(), T()}),
                  W({Tj(), Tk(), T(), Tj(), Tk(), T()}),
                  W({Ti(), T(), Ti(), T()}), W({Tj(), T(), Tj(), T()}),
                  W({Tk(), T(), Tk(), T()})},
                 {0.5, 0.5, 0.5, 0.5}, "O((2,6),<2,3,3>)", true, false});
    v.push_back({"L9", 1, 1, 4, {W({T(), Di()}), W({T(), Dj()})}, {c15, 0, 0, s15},
                 "O(2,2)", true, true});
    v.push_back({"L10", 1, 2, 2, {W({T(), Di()})}, {std::sqrt(7.0 / 8), 0, 0.25, 0.25},
                 "O(2)", true, true});
    v.push_back({"L11", 1, 1, 3, {W({Dw()})},
                 {std::sqrt(13.0) / 4, 0.25, 0.25, 0.25}, "O(3)", true, true, true});
    v.push_back({"L12", 1, 2, 6, {W({Tk(), T(), Tk(), T()}), W({T(), Di()})},
                 {std::sqrt(11.0) / 4, 0, 0.25, 0.5}, "O(2,3)", true, false});
    v.push_back({"L13", 1, 1, 12, {W({Tj(), T(), Tj(), T()}), W({Tk(), T(), Tk(), T()})},
                 {std::sqrt(7.0) / 4, 0.25, 0.5, 0.5}, "O(2,6)", true, false});
    v.push_back({"L14", 2, 1, 3, {W({Tk(), T(), Tk(), T()})},
                 {std::sqrt(43.0 / 64), 0.125, 0.25, 0.5}, "O(3)", true, true});
    v.push_back({"L15", 2, 2, 2, {W({T(), Dj()})},
                 {std::sqrt(54.0 / 64), 0.125, 0, 0.375}, "O(2)", true, true});
    return v;
}

// ---- verification --------------------------------------------------------------

struct StratumReport {
    std::string id;
    size_t closure_order = 0;
    bool order_ok = false;
    bool fixation_ok = false;
    bool membership_ok = false;   // every generator is in the right group
    bool signature_ok = true;     // only meaningful when checked
    bool signature_checked = false;
    bool abelian = false;
    std::map<int, int> element_orders;
    bool pass() const { return order_ok && fixation_ok && membership_ok && signature_ok; }
};

inline StratumReport verify_stratum(const Stratum& s, GroupTag group,
                                    double tol = 1e-9, size_t cap = 2048) {
    StratumReport r;
    r.id = s.id;
    std::vector<GroupElement> gens;
    r.fixation_ok = true;
    r.membership_ok = true;
    for (const auto& w : s.generators) {
        GroupElement g = evaluate(w);
        if (dist_sup(apply_f(g, s.representative), s.representative) > tol)
            r.fixation_ok = false;
        if (!membership(g.m, group)) r.membership_ok = false;
        gens.push_back(g);
    }
    auto cl = group_closure(gens, cap);
    r.closure_order = cl.size();
    r.order_ok = (int)cl.size() == s.isotropy_order;
    for (const auto& e : cl) r.element_orders[*element_order(e, 64)]++;
    r.abelian = true;
    for (size_t a = 0; a < cl.size() && r.abelian; ++a)
        for (size_t b = a + 1; b < cl.size() && r.abelian; ++b)
            if (!(compose(cl[a], cl[b]) == compose(cl[b], cl[a]))) r.abelian = false;
    if (s.signature_check) {
        r.signature_checked = true;
        std::map<int, int> want;
        if (s.local_model == "O(2)") want = {{1, 1}, {2, 1}};
        else if (s.local_model == "O(3)") want = {{1, 1}, {3, 2}};
        else if (s.local_model == "O(2,2)") want = {{1, 1}, {2, 3}};
        r.signature_ok = !want.empty() && r.element_orders == want && r.abelian;
    }
    return r;
}

// ---- Euler characteristics -------------------------------------------------------

struct ChiCell {
    int dimension;
    int count;
    int order;
};

// Cell lists of the CW decompositions used for the chi computation (the
// strata tables above group some cells differently).
inline std::vector<ChiCell> chi_cells_L() {
    return {{0, 1, 8},  {0, 1, 96}, {0, 3, 12}, {0, 3, 24},
            {1, 3, 4},  {1, 6, 6},  {1, 3, 12}, {1, 8, 4},
            {2, 3, 2},  {2, 3, 3},  {2, 12, 2},
            {3, 6, 1},  {4, 1, 1}};
}
inline std::vector<ChiCell> chi_cells_H() {
    return {{0, 1, 12}, {0, 1, 288}, {0, 2, 24},
            {1, 1, 2},  {1, 1, 3},   {1, 3, 4}, {1, 2, 6}, {1, 3, 12},
            {2, 2, 1},  {2, 6, 2},   {2, 3, 3},
            {3, 5, 1},  {4, 1, 1}};
}
// Cusp sections (Euclidean 3-orbifolds at the cusp), chi = 0.
inline std::vector<ChiCell> chi_cells_cusp_L() {
    return {{0, 8, 4}, {1, 12, 2}, {2, 6, 1}, {3, 2, 1}};
}
inline std::vector<ChiCell> chi_cells_cusp_H() {
    return {{0, 2, 12}, {0, 2, 4}, {1, 1, 1}, {1, 2, 3}, {1, 4, 2}, {2, 5, 1}, {3, 2, 1}};
}

inline Rational chi_orb(const std::vector<ChiCell>& cells) {
    Rational x = 0;
    for (const auto& c : cells) {
        Rational term = rat(c.count, c.order);
        x += (c.dimension % 2 == 0) ? term : -term;
    }
    return x;
}

// ---- torus automorphisms ----------------------------------------------------------

// Signed coordinate action on (z1,z2,z3): out[n] = conj^{c[n]} z[p[n]].
struct TorusAutomorphism {
    std::array<int, 3> p;
    std::array<bool, 3> c;
    bool operator==(const TorusAutomorphism& o) const { return p == o.p && c == o.c; }
    bool operator<(const TorusAutomorphism& o) const {
        return p != o.p ? p < o.p : c < o.c;
    }
};
inline TorusAutomorphism torus_identity() { return {{0, 1, 2}, {false, false, false}}; }
inline TorusAutomorphism torus_F_T() { return {{0, 1, 2}, {true, true, true}}; }
inline TorusAutomorphism torus_F_omega() { return {{1, 2, 0}, {false, false, false}}; }
inline TorusAutomorphism torus_F_i() { return {{0, 1, 2}, {false, true, true}}; }
inline TorusAutomorphism torus_F_j() { return {{0, 1, 2}, {true, false, true}}; }
inline TorusAutomorphism torus_F_k() { return {{0, 1, 2}, {true, true, false}}; }

inline TorusAutomorphism torus_compose(const TorusAutomorphism& a,
                                       const TorusAutomorphism& b) {
    // (a o b): first b, then a
    TorusAutomorphism r;
    for (int n = 0; n < 3; ++n) {
        r.p[n] = b.p[a.p[n]];
        r.c[n] = a.c[n] != b.c[a.p[n]];
    }
    return r;
}

inline std::vector<TorusAutomorphism> torus_group(
    const std::vector<TorusAutomorphism>& gens) {
    std::vector<TorusAutomorphism> elems = {torus_identity()};
    bool grew = true;
    while (grew) {
        grew = false;
        for (size_t v = 0; v < elems.size(); ++v)
            for (const auto& g : gens) {
                TorusAutomorphism h = torus_compose(elems[v], g);
                bool found = false;
                for (const auto& e : elems)
                    if (e == h) {
                        found = true;
                        break;
                    }
                if (!found) {
                    elems.push_back(h);
                    grew = true;
                }
            }
    }
    return elems;
}

// ---- constants ---------------------------------------------------------------------

struct Constants {
    double vol_simplex;    // Vol(Delta_L) = pi^2/864
    double vol_PL;         // pi^2/72
    double vol_PH;         // pi^2/216
    double vol_24cell;     // 4 pi^2/3
    int index_coxeter_L;   // [Gamma_{3,4,3,4} : PSL(2,L)] = 12
    int index_simplices_L; // P_L = 12 simplices
    int index_L_H;         // [PSL(2,H) : PSL(2,L)]
    std::array<int, 2> selberg_orders;  // (96, 288)
};

inline Constants constants() {
    double pi = std::acos(-1.0);
    Constants c;
    c.vol_simplex = pi * pi / 864;
    c.vol_PL = pi * pi / 72;
    c.vol_PH = pi * pi / 216;
    c.vol_24cell = 4 * pi * pi / 3;
    c.index_coxeter_L = 12;
    c.index_simplices_L = 12;
    c.index_L_H = 3;
    c.selberg_orders = {96, 288};
    return c;
}

}  // namespace qmod
