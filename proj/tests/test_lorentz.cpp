#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qmod/lorentz.hpp"

#include <random>
#include <set>

using namespace qmod;

static Word rand_word(std::mt19937_64& rng, int len, GroupTag g) {
    auto gens = standard_generators(g);
    std::uniform_int_distribution<int> pick(0, (int)gens.size() - 1);
    Word w;
    for (int n = 0; n < len; ++n) w.push_back(gens[pick(rng)]);
    return w;
}

TEST_CASE("basic matrices satisfy the Lorentz condition") {
    CHECK(lorentz_J().is_lorentz());
    CHECK(lorentz_minus_J().is_lorentz());
    CHECK(lorentz_translation(3, -2, 7).is_lorentz());
    CHECK(lorentz_dilation(0.37).is_lorentz(1e-12));
    CHECK(bhat(conjugation_block(omega_1())).is_lorentz());
    CHECK_THROWS(lorentz_dilation(-1));
    CHECK_THROWS(conjugation_block(Quaternion(3)));
}

TEST_CASE("translations form a homomorphic family") {
    LorentzMatrix a = lorentz_translation(1, 2, 3), b = lorentz_translation(-4, 0, 5);
    CHECK((a * b).max_diff(lorentz_translation(-3, 2, 8)) < 1e-12);
    CHECK((a * lorentz_translation(-1, -2, -3)).max_diff(LorentzMatrix::identity()) <
          1e-12);
}

TEST_CASE("dilation corner entries") {
    double r = 0.25;
    LorentzMatrix d = lorentz_dilation(r);
    CHECK(d.m[0][0] == doctest::Approx((1 + r * r) / (2 * r)).epsilon(1e-14));
    CHECK(d.m[0][4] == doctest::Approx((1 - r * r) / (2 * r)).epsilon(1e-14));
    CHECK(d.m[4][0] == d.m[0][4]);
    CHECK(d.m[4][4] == d.m[0][0]);
}

TEST_CASE("relator words map to the identity Lorentz matrix") {
    for (const auto& p : {presentation_L(), presentation_H()})
        for (size_t n = 0; n < p.relators.size(); ++n) {
            INFO(p.name, " relator ", p.relator_names[n]);
            CHECK(lorentz_rep(p.relators[n]).max_diff(LorentzMatrix::identity()) < 1e-12);
        }
}

TEST_CASE("Cayley transform pair") {
    HyperboloidPoint base{{1, 0, 0, 0, 0}};
    auto y = cayley_to_half(base);
    CHECK(y == std::array<double, 4>{0, 0, 0, 1});
    HyperboloidPoint p = cayley_from_half({0, 0, 0, 2});
    CHECK(p.x == std::array<double, 5>{1.25, 0, 0, 0, -0.75});
    CHECK(p.valid());
    std::mt19937_64 rng(53);
    std::uniform_real_distribution<double> u(-3, 3), up(0.05, 4);
    for (int t = 0; t < 1000; ++t) {
        std::array<double, 4> v{u(rng), u(rng), u(rng), up(rng)};
        HyperboloidPoint h = cayley_from_half(v);
        CHECK(h.defect() < 1e-9);
        auto back = cayley_to_half(h);
        for (int n = 0; n < 4; ++n) CHECK(std::fabs(back[n] - v[n]) < 1e-12);
    }
    CHECK_THROWS(cayley_from_half({0, 0, 0, -1}));
}

TEST_CASE("equivariance of the Lorentz representation") {
    std::mt19937_64 rng(59);
    std::uniform_real_distribution<double> u(-2, 2), up(0.1, 3);
    for (int t = 0; t < 300; ++t) {
        Word w = rand_word(rng, 6, t % 2 ? GroupTag::H : GroupTag::L);
        LorentzMatrix M = lorentz_rep(w);
        CHECK(M.is_lorentz(1e-10));
        std::array<double, 4> y{u(rng), u(rng), u(rng), up(rng)};
        HyperboloidPoint x = cayley_from_half(y);
        HyperboloidPoint img{M * x.x};
        QuaternionF via_lorentz = half_to_quat(cayley_to_half(img));
        QuaternionF via_moebius = apply_f(evaluate(w), half_to_quat(y));
        CHECK(dist_sup(via_lorentz, via_moebius) < 1e-10);
    }
}

TEST_CASE("integrality of translation images") {
    CHECK(congruence_integrality(1, 1, 0));
    CHECK(!congruence_integrality(1, 0, 0));
    CHECK(!lorentz_translation(1, 0, 0).all_integer());
    CHECK(lorentz_translation(1, 1, 0).all_integer());
    // images of the congruence subgroup generators are integer matrices
    using GL = GeneratorLabel;
    std::vector<Word> words = {{GL{GL::T}}};
    std::array<GL::Kind, 3> pos = {GL::Ti, GL::Tj, GL::Tk};
    std::array<GL::Kind, 3> neg = {GL::Ti_inv, GL::Tj_inv, GL::Tk_inv};
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b)
            for (int sa : {0, 1})
                for (int sb : {0, 1})
                    words.push_back({GL{sa ? pos[a] : neg[a]}, GL{sb ? pos[b] : neg[b]}});
    CHECK(words.size() == 13);
    for (const auto& w : words) CHECK(lorentz_rep(w).all_integer());
}

TEST_CASE("Lorentz Iwasawa decomposition") {
    std::mt19937_64 rng(61);
    for (int t = 0; t < 200; ++t) {
        Word w = rand_word(rng, 8, GroupTag::H);
        LorentzMatrix M = lorentz_rep(w);
        LorentzIwasawa f = lorentz_iwasawa(M);
        CHECK(f.r > 0);
        CHECK(lorentz_iwasawa_recompose(f).max_diff(M) < 1e-10);
        CHECK(bhat(f.b).is_lorentz(1e-9));  // rotation part is orthogonal
    }
    LorentzMatrix junk;
    junk.m[0][0] = 2;
    CHECK_THROWS(lorentz_iwasawa(junk));
}

TEST_CASE("the 24-element Lorentz unit group") {
    auto g = hurwitz_lorentz_group();
    REQUIRE(g.size() == 24);
    std::set<std::string> keys;
    for (const auto& m : g) {
        CHECK(m.is_lorentz());
        keys.insert(lorentz_key(m));
    }
    CHECK(keys.size() == 24);  // all distinct
    // closed under multiplication
    for (const auto& a : g)
        for (const auto& b : g) CHECK(keys.count(lorentz_key(a * b)) == 1);
    // S_i S_j = S_k
    CHECK(lorentz_key(bhat(s_matrix(1)) * bhat(s_matrix(2))) ==
          lorentz_key(bhat(s_matrix(3))));
}
