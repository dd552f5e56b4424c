// Acceptance suite: eleven end-to-end checks, one pass/fail line each.
#include "qmod/domains.hpp"
#include "qmod/lorentz.hpp"
#include "qmod/orbifold.hpp"
#include "qmod/poincare5.hpp"
#include "qmod/volume.hpp"
#include "qmod/words.hpp"

#include <chrono>
#include <cstdio>
#include <random>
#include <set>

using namespace qmod;

static int failures = 0;

static void report(int n, bool ok, const std::string& what, double secs) {
    std::printf("%s  criterion %2d: %s  (%.2fs)\n", ok ? "PASS" : "FAIL", n,
                what.c_str(), secs);
    if (!ok) ++failures;
}

template <typename F>
static void criterion(int n, const std::string& what, F body) {
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note = what;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note += std::string(" [exception: ") + e.what() + "]";
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                start).count();
    report(n, ok, note, secs);
}

static Word rand_word(std::mt19937_64& rng, int len, GroupTag g) {
    auto gens = standard_generators(g);
    std::uniform_int_distribution<int> pick(0, (int)gens.size() - 1);
    Word w;
    for (int t = 0; t < len; ++t) w.push_back(gens[pick(rng)]);
    return w;
}

static Quaternion rand_rational_point(std::mt19937_64& rng, long bound) {
    std::uniform_int_distribution<long> num(-bound, bound), den(1, bound);
    Quaternion q(rat(num(rng), den(rng)), rat(num(rng), den(rng)),
                 rat(num(rng), den(rng)), rat(num(rng), den(rng)));
    q.x0 = abs(q.x0) + rat(1, den(rng));
    return q;
}

// classical PSL(2,Z) reduction of z = x + y i, exact
static void classical_reduce(Rational& x, Rational& y) {
    for (int iter = 0; iter < 64; ++iter) {
        Rational sh = x + rat(1, 2);
        mpz_class m = sh.get_num() / sh.get_den();
        if (sh < 0 && sh.get_den() != 1) m -= 1;
        x -= Rational(m);
        Rational n = x * x + y * y;
        if (n >= 1) return;
        x = -x / n;
        y = y / n;
    }
}

int main() {
    criterion(1, "presentation relator suites (25 + 37) and the non-relator", [] {
        for (const auto& p : {presentation_L(), presentation_H()})
            if (!verify_presentation(p).all_pass()) return false;
        // (tau_i T)^3 = diag(i, i) != ±I
        using GL = GeneratorLabel;
        GroupElement cube = evaluate(word_pow({GL{GL::Ti}, GL{GL::T}}, 3));
        return cube == elem_D(Quaternion::i()) && !cube.is_identity();
    });

    criterion(2, "torsion order table: 6 / 4 / 6 for |w|^2 = 1, 2, 3", [] {
        std::vector<Quaternion> ax = {Quaternion::i(), Quaternion::j(), Quaternion::k()};
        auto ord = [](const Quaternion& w) {
            return element_order(compose(elem_tau(w), elem_T()), 24).value_or(-1);
        };
        for (const auto& w : ax)
            for (int s : {1, -1})
                if (ord(w * rat(s)) != 6) return false;
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b)
                for (int s : {1, -1})
                    if (ord(ax[a] + ax[b] * rat(s)) != 4) return false;
        for (int s1 : {1, -1})
            for (int s2 : {1, -1})
                if (ord(ax[0] + ax[1] * rat(s1) + ax[2] * rat(s2)) != 6) return false;
        return true;
    });

    criterion(3, "index [PSL(2,H) : PSL(2,L)] = 3 at radius 3, stable at 4", [] {
        auto in_L = [](const GroupElement& g) { return membership(g.m, GroupTag::L); };
        auto b3 = bfs_ball(standard_generators(GroupTag::H), 3);
        auto b4 = bfs_ball(standard_generators(GroupTag::H), 4);
        return coset_count(b3, in_L) == 3 && coset_count(b4, in_L) == 3;
    });

    criterion(4, "10^3 exact reductions per group + classical oracle on S_i", [] {
        std::mt19937_64 rng(4001);
        for (int t = 0; t < 1000; ++t) {
            Quaternion q = rand_rational_point(rng, 1000);
            for (GroupTag g : {GroupTag::L, GroupTag::H}) {
                ReductionResult r = reduce(q, g);
                if (r.iterations > 64) return false;
                if (!contains(g == GroupTag::L ? DomainTag::PL : DomainTag::PH,
                              r.reduced))
                    return false;
                if (!(apply_finite(evaluate(r.word), q) == r.reduced)) return false;
            }
        }
        std::uniform_int_distribution<long> num(-1000, 1000), den(1, 1000);
        for (int t = 0; t < 1000; ++t) {
            Rational y = abs(rat(num(rng), den(rng))) + rat(1, den(rng));
            Rational x = rat(num(rng), den(rng));
            ReductionResult r = reduce(Quaternion(y, x, rat(0), rat(0)), GroupTag::L);
            Rational cx = x, cy = y;
            classical_reduce(cx, cy);
            if (r.reduced.x0 != cy || abs(r.reduced.x1) != abs(cx)) return false;
            if (sgn(r.reduced.x2) != 0 || sgn(r.reduced.x3) != 0) return false;
        }
        return true;
    });

    criterion(5, "both Iwasawa round-trips < 1e-10 on 10^3 words", [] {
        std::mt19937_64 rng(5001);
        for (int t = 0; t < 1000; ++t) {
            GroupTag tag = t % 2 ? GroupTag::H : GroupTag::L;
            Word w = rand_word(rng, 1 + (int)(rng() % 8), tag);
            GroupElement g = evaluate(w);
            QMatrixF r = iwasawa_recompose(iwasawa(g));
            QuaternionF orig[4] = {QuaternionF(g.m.a), QuaternionF(g.m.b),
                                   QuaternionF(g.m.c), QuaternionF(g.m.d)};
            QuaternionF rec[4] = {r.a, r.b, r.c, r.d};
            for (int e = 0; e < 4; ++e)
                if (dist_sup(orig[e], rec[e]) > 1e-10) return false;
            LorentzMatrix M = lorentz_rep(w);
            if (lorentz_iwasawa_recompose(lorentz_iwasawa(M)).max_diff(M) > 1e-10)
                return false;
        }
        return true;
    });

    criterion(6, "Lorentz equivariance on 10^3 samples + integer congruence images", [] {
        std::mt19937_64 rng(6001);
        std::uniform_real_distribution<double> u(-2, 2), up(0.1, 3);
        for (int t = 0; t < 1000; ++t) {
            Word w = rand_word(rng, 6, t % 2 ? GroupTag::H : GroupTag::L);
            std::array<double, 4> y{u(rng), u(rng), u(rng), up(rng)};
            HyperboloidPoint img{lorentz_rep(w) * cayley_from_half(y).x};
            QuaternionF lhs = half_to_quat(cayley_to_half(img));
            QuaternionF rhs = apply_f(evaluate(w), half_to_quat(y));
            if (dist_sup(lhs, rhs) > 1e-10) return false;
        }
        using GL = GeneratorLabel;
        std::vector<Word> words = {{GL{GL::T}}};
        std::array<GL::Kind, 3> pos = {GL::Ti, GL::Tj, GL::Tk};
        std::array<GL::Kind, 3> neg = {GL::Ti_inv, GL::Tj_inv, GL::Tk_inv};
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b)
                for (int sa : {0, 1})
                    for (int sb : {0, 1})
                        words.push_back(
                            {GL{sa ? pos[a] : neg[a]}, GL{sb ? pos[b] : neg[b]}});
        for (const auto& w : words)
            if (!lorentz_rep(w).all_integer()) return false;
        return true;
    });

    criterion(7, "ten dihedral angles of the Coxeter simplex within 1e-9", [] {
        auto angles = dihedral_angles();
        auto expect = dihedral_angles_expected();
        for (size_t n = 0; n < angles.size(); ++n)
            if (std::fabs(angles[n].angle - expect[n]) > 1e-9) return false;
        return angles.size() == 10;
    });

    criterion(8, "Monte Carlo volumes at 10^7 samples within 2%, ratio within 3%", [] {
        double pi = std::acos(-1.0);
        VolumeEstimate pl = volume_mc(DomainTag::PL, 10'000'000, 8001);
        VolumeEstimate ph = volume_mc(DomainTag::PH, 10'000'000, 8001);
        double target_pl = pi * pi / 72, target_ph = pi * pi / 216;
        std::printf("      vol(PL) = %.6f +- %.6f (target %.6f), vol(PH) = %.6f +- %.6f"
                    " (target %.6f)\n",
                    pl.estimate, pl.stderr_, target_pl, ph.estimate, ph.stderr_,
                    target_ph);
        if (std::fabs(pl.estimate - target_pl) / target_pl > 0.02) return false;
        if (std::fabs(ph.estimate - target_ph) / target_ph > 0.02) return false;
        return std::fabs(pl.estimate / ph.estimate - 3.0) / 3.0 <= 0.03;
    });

    criterion(9, "exact Euler characteristics: 1/96, 1/288, cusps 0, chi(P)=2", [] {
        return chi_orb(chi_cells_L()) == rat(1, 96) &&
               chi_orb(chi_cells_H()) == rat(1, 288) &&
               chi_orb(chi_cells_cusp_L()) == 0 && chi_orb(chi_cells_cusp_H()) == 0 &&
               euler_characteristic_P() == 2 && chi_orb_5_L() == rat(-1, 96) &&
               chi_orb_5_H() == rat(-1, 288);
    });

    criterion(10, "all 26 strata verify; U(H,Lor) has order 24 with SiSj=Sk", [] {
        for (GroupTag tag : {GroupTag::L, GroupTag::H}) {
            auto strata = tag == GroupTag::L ? strata_L() : strata_H();
            std::vector<StratumReport> reports(strata.size());
#pragma omp parallel for schedule(dynamic)
            for (int n = 0; n < (int)strata.size(); ++n)
                reports[n] = verify_stratum(strata[n], tag);
            for (const auto& r : reports)
                if (!r.pass()) return false;
        }
        auto g = hurwitz_lorentz_group();
        std::set<std::string> keys;
        for (const auto& m : g) {
            if (!m.is_lorentz()) return false;
            keys.insert(lorentz_key(m));
        }
        if (keys.size() != 24) return false;
        for (const auto& a : g)
            for (const auto& b : g)
                if (!keys.count(lorentz_key(a * b))) return false;
        return lorentz_key(bhat(s_matrix(1)) * bhat(s_matrix(2))) ==
               lorentz_key(bhat(s_matrix(3)));
    });

    criterion(11, "Poincare extension: distance invariance + exact boundary slice", [] {
        std::mt19937_64 rng(11001);
        std::uniform_real_distribution<double> u(-2, 2), up(0.1, 3);
        for (int t = 0; t < 1000; ++t) {
            GroupElement g = evaluate(rand_word(rng, 6, GroupTag::H));
            Point5F p1{{u(rng), u(rng), u(rng), u(rng)}, up(rng)};
            Point5F p2{{u(rng), u(rng), u(rng), u(rng)}, up(rng)};
            if (std::fabs(h5_distance(p1, p2) -
                          h5_distance(extend_f(g, p1), extend_f(g, p2))) > 1e-10)
                return false;
        }
        std::uniform_int_distribution<long> num(-40, 40), den(1, 40);
        for (int t = 0; t < 1000; ++t) {
            GroupElement g = evaluate(rand_word(rng, 6, GroupTag::H));
            Quaternion q(rat(num(rng), den(rng)), rat(num(rng), den(rng)),
                         rat(num(rng), den(rng)), rat(num(rng), den(rng)));
            if (!boundary_restriction_check(g, q)) return false;
        }
        return true;
    });

    std::printf("%s: %d of 11 criteria passed\n", failures ? "FAIL" : "OK",
                11 - failures);
    return failures ? 1 : 0;
}
