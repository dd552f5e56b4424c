#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qmod/poincare5.hpp"
#include "qmod/words.hpp"

#include <random>

using namespace qmod;

static Word rand_word(std::mt19937_64& rng, int len, GroupTag g) {
    auto gens = standard_generators(g);
    std::uniform_int_distribution<int> pick(0, (int)gens.size() - 1);
    Word w;
    for (int n = 0; n < len; ++n) w.push_back(gens[pick(rng)]);
    return w;
}

static Point5 rand_point5(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-30, 30), den(1, 30);
    Quaternion q(rat(num(rng), den(rng)), rat(num(rng), den(rng)),
                 rat(num(rng), den(rng)), rat(num(rng), den(rng)));
    return Point5(q, abs(rat(num(rng), den(rng))) + rat(1, den(rng)));
}

TEST_CASE("point validity") {
    CHECK_THROWS(Point5(Quaternion(0), rat(0)));
    CHECK_THROWS(Point5(Quaternion(0), rat(-1)));
}

TEST_CASE("identity and vertical preservation") {
    std::mt19937_64 rng(67);
    for (int t = 0; t < 50; ++t) {
        Point5 p = rand_point5(rng);
        Point5 img = extend(GroupElement(), p);
        CHECK(img.q == p.q);
        CHECK(img.t == p.t);
        // translations keep t
        Point5 tr = extend(elem_tau(Quaternion::i()), p);
        CHECK(tr.t == p.t);
        CHECK(tr.q == p.q + Quaternion::i());
    }
}

TEST_CASE("T extends to inversion in the unit sphere of H^5") {
    Point5 p(parse_quaternion("1/2+1/2*i"), rat(1, 2));
    Point5 img = extend(elem_T(), p);
    // |p|^2 = 3/4; image = (conj(q), t)/|p|^2
    CHECK(img.q == parse_quaternion("2/3-2/3*i"));
    CHECK(img.t == rat(2, 3));
}

TEST_CASE("extension is a homomorphism, exactly") {
    std::mt19937_64 rng(71);
    for (int t = 0; t < 150; ++t) {
        GroupTag tag = t % 2 ? GroupTag::H : GroupTag::L;
        GroupElement g1 = evaluate(rand_word(rng, 5, tag));
        GroupElement g2 = evaluate(rand_word(rng, 5, tag));
        Point5 p = rand_point5(rng);
        Point5 lhs = extend(g1, extend(g2, p));
        Point5 rhs = extend(compose(g1, g2), p);
        CHECK(lhs.q == rhs.q);
        CHECK(lhs.t == rhs.t);
    }
}

TEST_CASE("the t=0 boundary slice equals the 4-dimensional action") {
    std::mt19937_64 rng(73);
    std::uniform_int_distribution<long> num(-50, 50), den(1, 50);
    for (int t = 0; t < 300; ++t) {
        GroupElement g = evaluate(rand_word(rng, 7, GroupTag::H));
        Quaternion q(rat(num(rng), den(rng)), rat(num(rng), den(rng)),
                     rat(num(rng), den(rng)), rat(num(rng), den(rng)));
        CHECK(boundary_restriction_check(g, q));
    }
    CHECK(boundary_restriction(elem_T(), Quaternion(0)).is_infinity());
}

TEST_CASE("hyperbolic distance is invariant under extension") {
    std::mt19937_64 rng(79);
    std::uniform_real_distribution<double> u(-2, 2), up(0.1, 3);
    for (int t = 0; t < 300; ++t) {
        GroupElement g = evaluate(rand_word(rng, 6, GroupTag::H));
        Point5F p1{{u(rng), u(rng), u(rng), u(rng)}, up(rng)};
        Point5F p2{{u(rng), u(rng), u(rng), u(rng)}, up(rng)};
        double before = h5_distance(p1, p2);
        double after = h5_distance(extend_f(g, p1), extend_f(g, p2));
        CHECK(std::fabs(before - after) < 1e-10);
    }
    // sanity: vertical segment has length log(t2/t1)
    CHECK(h5_distance({{0, 0, 0, 0}, 1}, {{0, 0, 0, 0}, std::exp(1.0)}) ==
          doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("five-dimensional chimney membership") {
    CHECK(chimney5_contains(Point5(parse_quaternion("1/2+1/2*i"), rat(2))));
    CHECK(chimney5_contains(Point5(Quaternion(0), rat(1))));
    CHECK(!chimney5_contains(Point5(Quaternion(0), rat(1, 2))));    // below the sphere
    CHECK(!chimney5_contains(Point5(parse_quaternion("3/4*i"), rat(2))));  // outside box
}

TEST_CASE("five-dimensional orbifold Euler characteristics") {
    CHECK(chi_orb_5_L() == rat(-1, 96));
    CHECK(chi_orb_5_H() == rat(-1, 288));
}
