// Generator labels, words, the two finite presentations, Cayley-ball BFS,
// coset counting, and membership tests for the modular groups.
#pragma once

#include "qmod/moebius.hpp"

#include <deque>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace qmod {

struct GeneratorLabel {
    enum Kind { T, Ti, Tj, Tk, Ti_inv, Tj_inv, Tk_inv, Du } kind;
    Quaternion u;  // the unit, for Du only

    GeneratorLabel(Kind k = T) : kind(k) {
        if (k == Du) throw std::invalid_argument("Du needs a unit");
    }
    GeneratorLabel(Kind k, Quaternion unit) : kind(k), u(std::move(unit)) {
        if (k != Du || !is_hurwitz_unit(u)) throw std::invalid_argument("bad Du label");
    }
    static GeneratorLabel du(const Quaternion& unit) { return {Du, unit}; }

    bool operator==(const GeneratorLabel& o) const {
        return kind == o.kind && (kind != Du || u == o.u);
    }

    GroupElement element() const {
        switch (kind) {
            case T: return elem_T();
            case Ti: return elem_tau(Quaternion::i());
            case Tj: return elem_tau(Quaternion::j());
            case Tk: return elem_tau(Quaternion::k());
            case Ti_inv: return elem_tau(-Quaternion::i());
            case Tj_inv: return elem_tau(-Quaternion::j());
            case Tk_inv: return elem_tau(-Quaternion::k());
            default: return elem_D(u);
        }
    }
    GeneratorLabel inverse() const {
        switch (kind) {
            case Ti: return {Ti_inv};
            case Tj: return {Tj_inv};
            case Tk: return {Tk_inv};
            case Ti_inv: return {Ti};
            case Tj_inv: return {Tj};
            case Tk_inv: return {Tk};
            case Du: return du(u.conj());  // unit => inverse = conjugate
            default: return {T};
        }
    }
    std::string name() const {
        switch (kind) {
            case T: return "T";
            case Ti: return "Ti";
            case Tj: return "Tj";
            case Tk: return "Tk";
            case Ti_inv: return "Ti^-1";
            case Tj_inv: return "Tj^-1";
            case Tk_inv: return "Tk^-1";
            default: return "Du(" + to_string(u) + ")";
        }
    }
    static GeneratorLabel parse(const std::string& s) {
        if (s == "T") return {T};
        if (s == "Ti") return {Ti};
        if (s == "Tj") return {Tj};
        if (s == "Tk") return {Tk};
        if (s == "Ti^-1") return {Ti_inv};
        if (s == "Tj^-1") return {Tj_inv};
        if (s == "Tk^-1") return {Tk_inv};
        if (s.rfind("Du(", 0) == 0 && s.back() == ')')
            return du(parse_quaternion(s.substr(3, s.size() - 4)));
        throw std::invalid_argument("unknown generator label: " + s);
    }
};

using Word = std::vector<GeneratorLabel>;

// Left-to-right matrix product; leftmost label is applied last as a map.
inline GroupElement evaluate(const Word& w) {
    GroupElement g;
    for (const auto& l : w) g = compose(g, l.element());
    return g;
}

inline Word word_inverse(const Word& w) {
    Word r;
    for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(it->inverse());
    return r;
}
inline Word operator+(Word a, const Word& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}
inline Word word_pow(const Word& w, int n) {
    Word r;
    for (int t = 0; t < n; ++t) r = r + w;
    return r;
}
inline Word commutator(const Word& a, const Word& b) {
    return a + b + word_inverse(a) + word_inverse(b);
}

// ---- presentations ----------------------------------------------------------

struct Presentation {
    std::string name;
    std::vector<GeneratorLabel> generators;
    std::vector<Word> relators;
    std::vector<std::string> relator_names;
};

namespace detail {
inline Word wl(std::initializer_list<GeneratorLabel> ls) { return Word(ls); }
}

// The 19 relators shared by both presentations.
inline Presentation presentation_common() {
    using GL = GeneratorLabel;
    GL t{GL::T}, ti{GL::Ti}, tj{GL::Tj}, tk{GL::Tk};
    Word wt{t}, wi{ti}, wj{tj}, wk{tk};
    std::array<Word, 3> tau = {wi, wj, wk};
    std::array<std::string, 3> un = {"i", "j", "k"};
    Presentation p;
    p.generators = {t, ti, tj, tk};
    auto add = [&](const std::string& n, const Word& w) {
        p.relator_names.push_back(n);
        p.relators.push_back(w);
    };
    add("T^2", wt + wt);
    add("[Ti:Tj]", commutator(wi, wj));
    add("[Ti:Tk]", commutator(wi, wk));
    add("[Tk:Tj]", commutator(wk, wj));
    for (int n = 0; n < 3; ++n) add("(T" + un[n] + " T)^6", word_pow(tau[n] + wt, 6));
    add("(Ti Tj T)^4", word_pow(wi + wj + wt, 4));
    add("(Ti Tk T)^4", word_pow(wi + wk + wt, 4));
    add("(Tj Tk T)^4", word_pow(wj + wk + wt, 4));
    add("(Ti Tj Tk T)^6", word_pow(wi + wj + wk + wt, 6));
    add("(Ti T)^3 (Tj T)^3 (Tk T)^3",
        word_pow(wi + wt, 3) + word_pow(wj + wt, 3) + word_pow(wk + wt, 3));
    add("(Ti T)^3 (Tk T)^3 (Tj T)^3",
        word_pow(wi + wt, 3) + word_pow(wk + wt, 3) + word_pow(wj + wt, 3));
    for (int n = 0; n < 3; ++n)
        add("[(T" + un[n] + " T)^3:T]", commutator(word_pow(tau[n] + wt, 3), wt));
    for (int n = 0; n < 3; ++n)
        add("[(T" + un[n] + " T)^3:T" + un[n] + "]",
            commutator(word_pow(tau[n] + wt, 3), tau[n]));
    return p;
}

inline Presentation presentation_L() {
    Presentation p = presentation_common();
    p.name = "PSL(2,L)";
    using GL = GeneratorLabel;
    std::array<Word, 3> tau = {Word{GL{GL::Ti}}, Word{GL{GL::Tj}}, Word{GL{GL::Tk}}};
    std::array<std::string, 3> un = {"i", "j", "k"};
    Word wt{GL{GL::T}};
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            if (a == b) continue;
            Word cube = word_pow(tau[a] + wt, 3);
            p.relator_names.push_back("(T" + un[a] + " T)^3 T" + un[b] + " (T" + un[a] +
                                      " T)^3 T" + un[b]);
            p.relators.push_back(cube + tau[b] + cube + tau[b]);
        }
    return p;
}

inline Presentation presentation_H() {
    using GL = GeneratorLabel;
    Presentation p = presentation_common();
    p.name = "PSL(2,H)";
    GL dw1 = GL::du(omega_1()), dwi = GL::du(omega_i());
    GL dwj = GL::du(omega_j()), dwk = GL::du(omega_k());
    GL di = GL::du(Quaternion::i()), dj = GL::du(Quaternion::j());
    GL dk = GL::du(Quaternion::k());
    p.generators = {GL{GL::T}, GL{GL::Ti}, GL{GL::Tj}, GL{GL::Tk}, dw1, dwi, dwj, dwk};
    auto add = [&](const std::string& n, const Word& w) {
        p.relator_names.push_back(n);
        p.relators.push_back(w);
    };
    Word wt{GL{GL::T}};
    std::array<GL, 3> dd = {di, dj, dk};
    std::array<Word, 3> tau = {Word{GL{GL::Ti}}, Word{GL{GL::Tj}}, Word{GL{GL::Tk}}};
    std::array<std::string, 3> un = {"i", "j", "k"};
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            if (a == b) continue;
            add("D" + un[a] + " T" + un[b] + " D" + un[a] + " T" + un[b],
                Word{dd[a]} + tau[b] + Word{dd[a]} + tau[b]);
        }
    std::array<GL, 4> dw = {dw1, dwi, dwj, dwk};
    std::array<std::string, 4> wn = {"w1", "wi", "wj", "wk"};
    for (int n = 0; n < 4; ++n) add("[D" + wn[n] + ":T]", commutator(Word{dw[n]}, wt));
    for (int n = 0; n < 4; ++n) add("(D" + wn[n] + ")^3", word_pow(Word{dw[n]}, 3));
    add("Dw1 Di Dwi Dj Dwk Dk",
        detail::wl({dw1, di, dwi, dj, dwk, dk}));
    // The source lists Dwj^-1 in the next two hexagons, but the product then
    // equals diag(w1,w1) != ±I; with Dwj both products are exactly the
    // identity matrix, so the inverse sign is treated as a typo.
    add("Dk Dwk Di Dwj Dj Dw1",
        detail::wl({dk, dwk, di, dwj, dj, dw1}));
    add("Di Dwk Dj Dwi Dk Dwj",
        detail::wl({di, dwk, dj, dwi, dk, dwj}));
    add("Dj Dwj Dk Dwi Di Dw1",
        detail::wl({dj, dwj, dk, dwi, di, dw1}));
    return p;
}

struct RelatorCheck {
    std::string relator;
    bool holds;
};
struct PresentationReport {
    std::string name;
    std::vector<RelatorCheck> checks;
    bool non_relator_ok;  // (Ti T)^3 != identity in PSL
    bool all_pass() const {
        if (!non_relator_ok) return false;
        for (const auto& c : checks)
            if (!c.holds) return false;
        return true;
    }
};

inline PresentationReport verify_presentation(const Presentation& p) {
    PresentationReport r;
    r.name = p.name;
    for (size_t n = 0; n < p.relators.size(); ++n)
        r.checks.push_back({p.relator_names[n], evaluate(p.relators[n]).is_identity()});
    Word li = {GeneratorLabel{GeneratorLabel::Ti}, GeneratorLabel{GeneratorLabel::T}};
    r.non_relator_ok = !evaluate(word_pow(li, 3)).is_identity();
    return r;
}

// ---- membership --------------------------------------------------------------

enum class GroupTag { L, H };

inline bool membership(const QMatrix& m, GroupTag g) {
    for (int n = 0; n < 4; ++n) {
        const Quaternion& e = m.entry(n);
        if (g == GroupTag::L ? !is_lipschitz(e) : !is_hurwitz(e)) return false;
    }
    return check_bg(m);
}

// ---- Cayley ball ---------------------------------------------------------------

inline std::vector<GeneratorLabel> standard_generators(GroupTag g) {
    using GL = GeneratorLabel;
    std::vector<GL> v = {GL{GL::T},     GL{GL::Ti},     GL{GL::Tj},     GL{GL::Tk},
                         GL{GL::Ti_inv}, GL{GL::Tj_inv}, GL{GL::Tk_inv}};
    if (g == GroupTag::H) {
        v.push_back(GL::du(omega_1()));
        v.push_back(GL::du(omega_1().conj()));
    }
    return v;
}

struct CayleyBall {
    std::vector<GroupElement> vertices;  // BFS order; vertices[0] = identity
    std::vector<int> depth;
    // edges: (from vertex index, generator index, to vertex index)
    struct Edge {
        int from, label, to;
    };
    std::vector<Edge> edges;
    std::vector<GeneratorLabel> generators;
    int radius = 0;
};

inline CayleyBall bfs_ball(const std::vector<GeneratorLabel>& gens, int radius,
                           int radius_cap = 5) {
    if (radius < 0 || radius > radius_cap) throw std::invalid_argument("radius out of range");
    CayleyBall ball;
    ball.generators = gens;
    ball.radius = radius;
    std::unordered_map<std::string, int> index;
    GroupElement id;
    ball.vertices.push_back(id);
    ball.depth.push_back(0);
    index[id.key()] = 0;
    std::deque<int> frontier{0};
    while (!frontier.empty()) {
        int v = frontier.front();
        frontier.pop_front();
        if (ball.depth[v] >= radius) continue;
        for (int ln = 0; ln < (int)gens.size(); ++ln) {
            GroupElement h = compose(gens[ln].element(), ball.vertices[v]);
            std::string k = h.key();
            auto it = index.find(k);
            int to;
            if (it == index.end()) {
                to = (int)ball.vertices.size();
                index[k] = to;
                ball.vertices.push_back(h);
                ball.depth.push_back(ball.depth[v] + 1);
                frontier.push_back(to);
            } else {
                to = it->second;
            }
            ball.edges.push_back({v, ln, to});
        }
    }
    return ball;
}

// Right cosets: g ~ h iff g h^{-1} in the subgroup.
inline int coset_count(const CayleyBall& ball,
                       const std::function<bool(const GroupElement&)>& in_subgroup) {
    std::vector<GroupElement> reps;
    for (const auto& v : ball.vertices) {
        bool found = false;
        for (const auto& r : reps)
            if (in_subgroup(compose(v, r.inverse()))) {
                found = true;
                break;
            }
        if (!found) reps.push_back(v);
    }
    return (int)reps.size();
}

// Generators of the congruence subgroup Gamma(2,L): T plus the 12 translations
// tau_{u+v}, u != v in {±i,±j,±k}.
inline std::vector<GroupElement> congruence2_generators() {
    std::vector<GroupElement> out = {elem_T()};
    std::vector<Quaternion> axes = {Quaternion::i(), Quaternion::j(), Quaternion::k()};
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b)
            for (int sa : {1, -1})
                for (int sb : {1, -1})
                    out.push_back(elem_tau(axes[a] * rat(sa) + axes[b] * rat(sb)));
    return out;
}

// Elements of the affine group A(H) = {[[u, ub],[0,u]]} with u a unit, Re(b)=0.
inline GroupElement affine_element(const Quaternion& u, const Quaternion& b) {
    if (!is_hurwitz_unit(u)) throw std::invalid_argument("u must be a Hurwitz unit");
    if (sgn(b.re()) != 0) throw std::invalid_argument("b must be purely imaginary");
    return GroupElement(QMatrix(u, u * b, Quaternion(0), u));
}

// Finite closure of a set of elements; throws if the group exceeds cap.
inline std::vector<GroupElement> group_closure(const std::vector<GroupElement>& gens,
                                               size_t cap = 2048) {
    std::unordered_map<std::string, int> index;
    std::vector<GroupElement> elems;
    GroupElement id;
    elems.push_back(id);
    index[id.key()] = 0;
    std::deque<int> frontier{0};
    while (!frontier.empty()) {
        int v = frontier.front();
        frontier.pop_front();
        for (const auto& g : gens) {
            GroupElement h = compose(elems[v], g);
            if (index.emplace(h.key(), (int)elems.size()).second) {
                elems.push_back(h);
                if (elems.size() > cap) throw std::runtime_error("closure exceeds cap");
                frontier.push_back((int)elems.size() - 1);
            }
        }
    }
    return elems;
}

}  // namespace qmod
