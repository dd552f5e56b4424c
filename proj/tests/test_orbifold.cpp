#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qmod/json_io.hpp"
#include "qmod/orbifold.hpp"

#include <fstream>
#include <sstream>

using namespace qmod;

TEST_CASE("strata table shape") {
    auto gl = strata_L();
    auto hl = strata_H();
    CHECK(gl.size() == 11);
    CHECK(hl.size() == 15);
    // the two deepest isotropy groups
    CHECK(gl[5].id == "G6");
    CHECK(gl[5].isotropy_order == 96);
    CHECK(hl[7].id == "L8");
    CHECK(hl[7].isotropy_order == 288);
}

TEST_CASE("every stratum passes closure and fixation checks") {
    for (GroupTag tag : {GroupTag::L, GroupTag::H}) {
        auto strata = tag == GroupTag::L ? strata_L() : strata_H();
        std::vector<StratumReport> reports(strata.size());
#pragma omp parallel for schedule(dynamic)
        for (int n = 0; n < (int)strata.size(); ++n)
            reports[n] = verify_stratum(strata[n], tag);
        for (const auto& r : reports) {
            INFO("stratum ", r.id);
            CHECK(r.order_ok);
            CHECK(r.fixation_ok);
            CHECK(r.membership_ok);
            CHECK(r.signature_ok);
        }
    }
}

TEST_CASE("element-order profiles of the notable vertex groups") {
    auto check_orders = [](const Stratum& s, GroupTag tag, std::map<int, int> expect) {
        StratumReport r = verify_stratum(s, tag);
        INFO("stratum ", s.id);
        CHECK(r.element_orders == expect);
    };
    auto gl = strata_L();
    auto hl = strata_H();
    check_orders(gl[3], GroupTag::L, {{1, 1}, {2, 7}, {3, 2}, {6, 2}});   // G4: D6
    check_orders(gl[7], GroupTag::L, {{1, 1}, {2, 3}, {3, 2}});           // G8: S3
    check_orders(gl[8], GroupTag::L, {{1, 1}, {2, 3}, {3, 8}});           // G9: A4
    check_orders(gl[5], GroupTag::L, {{1, 1}, {2, 19}, {3, 32}, {4, 12}, {6, 32}});
    check_orders(hl[7], GroupTag::H,
                 {{1, 1}, {2, 19}, {3, 80}, {4, 12}, {6, 80}, {12, 96}});
}

TEST_CASE("orbifold Euler characteristics are exact") {
    CHECK(chi_orb(chi_cells_L()) == rat(1, 96));
    CHECK(chi_orb(chi_cells_H()) == rat(1, 288));
    CHECK(chi_orb(chi_cells_cusp_L()) == 0);
    CHECK(chi_orb(chi_cells_cusp_H()) == 0);
}

TEST_CASE("torus automorphism group at the cusp") {
    CHECK(torus_compose(torus_F_j(), torus_F_i()) == torus_F_k());
    CHECK(torus_group({torus_F_i(), torus_F_j()}).size() == 4);
    CHECK(torus_group({torus_F_T(), torus_F_omega(), torus_F_i(), torus_F_j()}).size() ==
          24);
    // F_omega has order 3, F_T order 2, and they commute... F_T is central
    auto w3 = torus_compose(torus_F_omega(),
                            torus_compose(torus_F_omega(), torus_F_omega()));
    CHECK(w3 == torus_identity());
    CHECK(torus_compose(torus_F_T(), torus_F_omega()) ==
          torus_compose(torus_F_omega(), torus_F_T()));
}

TEST_CASE("volume constants are mutually consistent") {
    Constants c = constants();
    CHECK(c.vol_PL == doctest::Approx(12 * c.vol_simplex).epsilon(1e-14));
    CHECK(c.vol_PH == doctest::Approx(4 * c.vol_simplex).epsilon(1e-14));
    CHECK(c.vol_24cell == doctest::Approx(1152 * c.vol_simplex).epsilon(1e-14));
    CHECK(c.vol_PL / c.vol_PH == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(c.index_L_H == 3);
    CHECK(c.selberg_orders == std::array<int, 2>{96, 288});
}

TEST_CASE("shipped strata data file matches the in-code table") {
    std::ifstream in(std::string(QMOD_SOURCE_DIR) + "/data/strata.json");
    REQUIRE(in.good());
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == strata_json().dump(2) + "\n");
}
