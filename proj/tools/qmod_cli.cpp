// qmodcli: batch front end.  Every subcommand prints JSON (or DOT for
// `orbit --output dot`) on stdout.  Exit codes: 0 ok, 1 domain error,
// 2 usage error.
#include "qmod/domains.hpp"
#include "qmod/json_io.hpp"
#include "qmod/lorentz.hpp"
#include "qmod/orbifold.hpp"
#include "qmod/poincare5.hpp"
#include "qmod/volume.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

using namespace qmod;

static GroupTag parse_group(const std::string& s) {
    if (s == "L") return GroupTag::L;
    if (s == "H") return GroupTag::H;
    throw CLI::ValidationError("--group", "must be L or H");
}

static Word parse_word(const std::string& s) {
    Word w;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) w.push_back(GeneratorLabel::parse(tok));
    return w;
}

static QMatrix parse_matrix(const std::string& s) {
    return qmatrix_from_json(json::parse(s));
}

static ExtendedPoint parse_point(const std::string& s) {
    if (s == "inf") return ExtendedPoint::infinity();
    return ExtendedPoint(parse_quaternion(s));
}

static void emit(const json& out) { std::cout << out.dump(2) << "\n"; }

int main(int argc, char** argv) {
    CLI::App app{"quaternionic modular groups PSL(2,L) and PSL(2,H)"};
    app.require_subcommand(1);

    std::string group = "L", point, matrix, word, domain = "PL", output = "json", tval;
    int radius = 2;
    long long samples = 0;
    std::uint64_t seed = 0;
    double tolerance = 1e-9;

    auto* c_reduce = app.add_subcommand("reduce", "reduce a point into the fundamental domain");
    c_reduce->add_option("--group", group)->required();
    c_reduce->add_option("--point", point)->required();

    auto* c_iwasawa = app.add_subcommand("iwasawa", "Iwasawa factors of a BG matrix");
    c_iwasawa->add_option("--matrix", matrix)->required();

    auto* c_det = app.add_subcommand("det", "Dieudonne determinant and BG check");
    c_det->add_option("--matrix", matrix)->required();

    auto* c_apply = app.add_subcommand("apply", "apply a BG matrix to a point");
    c_apply->add_option("--matrix", matrix)->required();
    c_apply->add_option("--point", point)->required();

    auto* c_order = app.add_subcommand("order", "order of a group element (cap 64)");
    c_order->add_option("--matrix", matrix)->required();

    auto* c_verify = app.add_subcommand("verify-presentation", "check every relator");
    c_verify->add_option("--group", group)->required();

    auto* c_orbit = app.add_subcommand("orbit", "orbit of a point over a Cayley ball");
    c_orbit->add_option("--group", group)->required();
    c_orbit->add_option("--point", point)->required();
    c_orbit->add_option("--radius", radius);
    c_orbit->add_option("--output", output)->check(CLI::IsMember({"json", "dot"}));

    auto* c_cosets = app.add_subcommand("cosets", "cosets of PSL(2,L) in a PSL(2,H) ball");
    c_cosets->add_option("--radius", radius);

    auto* c_lrep = app.add_subcommand("lorentz-rep", "SO+(4,1) image of a word");
    c_lrep->add_option("--word", word)->required();

    auto* c_liwa = app.add_subcommand("lorentz-iwasawa", "Lorentz Iwasawa factors of a word");
    c_liwa->add_option("--word", word)->required();

    auto* c_ext = app.add_subcommand("extend5", "Poincare extension applied to (q, t)");
    c_ext->add_option("--matrix", matrix)->required();
    c_ext->add_option("--point", point)->required();
    c_ext->add_option("--t", tval)->required();

    app.add_subcommand("angles", "dihedral angles of the Coxeter simplex");
    app.add_subcommand("euler", "Euler characteristic of the polytope P");

    auto* c_chi = app.add_subcommand("chi-orb", "orbifold Euler characteristics");
    c_chi->add_option("--group", group)->required();

    auto* c_strata = app.add_subcommand("verify-strata", "verify all strata isotropy data");
    c_strata->add_option("--group", group)->required();
    c_strata->add_option("--tolerance", tolerance);

    auto* c_vol = app.add_subcommand("volume", "Monte Carlo hyperbolic volume");
    c_vol->add_option("--domain", domain)->required()
        ->check(CLI::IsMember({"Chimney", "P", "PL", "PH"}));
    c_vol->add_option("--samples", samples)->required();
    c_vol->add_option("--seed", seed)->required();  // no silent default

    app.add_subcommand("constants", "stored volume and index constants");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(c_reduce)) {
            Quaternion q = parse_quaternion(point);
            ReductionResult r = reduce(q, parse_group(group));
            emit({{"point", to_json(q)},
                  {"group", group},
                  {"word", to_json(r.word)},
                  {"reduced", to_json(r.reduced)},
                  {"iterations", r.iterations}});
        } else if (app.got_subcommand(c_iwasawa)) {
            GroupElement g(parse_matrix(matrix));
            IwasawaFactors f = iwasawa(g);
            QMatrixF r = iwasawa_recompose(f);
            double err = std::max(
                std::max(dist_sup(r.a, QuaternionF(g.m.a)), dist_sup(r.b, QuaternionF(g.m.b))),
                std::max(dist_sup(r.c, QuaternionF(g.m.c)), dist_sup(r.d, QuaternionF(g.m.d))));
            emit({{"lambda", f.lambda},
                  {"omega", to_json(f.omega)},
                  {"alpha", to_json(f.alpha)},
                  {"beta", to_json(f.beta)},
                  {"recompose_error", err}});
        } else if (app.got_subcommand(c_det)) {
            QMatrix m = parse_matrix(matrix);
            emit({{"det_sq", rat_str(dieudonne_sq(m))},
                  {"det", dieudonne(m)},
                  {"bg", check_bg(m)}});
        } else if (app.got_subcommand(c_apply)) {
            GroupElement g(parse_matrix(matrix));
            emit({{"image", to_json(apply(g, parse_point(point)))}});
        } else if (app.got_subcommand(c_order)) {
            GroupElement g(parse_matrix(matrix));
            auto n = element_order(g, 64);
            emit({{"order", n ? json(*n) : json(nullptr)}});
        } else if (app.got_subcommand(c_verify)) {
            Presentation p = parse_group(group) == GroupTag::L ? presentation_L()
                                                               : presentation_H();
            PresentationReport r = verify_presentation(p);
            json checks = json::array();
            for (const auto& c : r.checks)
                checks.push_back({{"relator", c.relator}, {"holds", c.holds}});
            emit({{"name", r.name},
                  {"relators", checks},
                  {"non_relator_ok", r.non_relator_ok},
                  {"all_pass", r.all_pass()}});
        } else if (app.got_subcommand(c_orbit)) {
            ExtendedPoint p = parse_point(point);
            CayleyBall ball = bfs_ball(standard_generators(parse_group(group)), radius);
            std::vector<std::string> labels;
            for (const auto& v : ball.vertices) {
                ExtendedPoint img = apply(v, p);
                labels.push_back(img.is_infinity() ? "inf" : to_string(*img.q));
            }
            if (output == "dot") {
                std::cout << "digraph orbit {\n";
                for (size_t n = 0; n < labels.size(); ++n)
                    std::cout << "  v" << n << " [label=\"" << labels[n] << "\"];\n";
                for (const auto& e : ball.edges)
                    std::cout << "  v" << e.from << " -> v" << e.to << " [label=\""
                              << ball.generators[e.label].name() << "\"];\n";
                std::cout << "}\n";
            } else {
                json edges = json::array();
                for (const auto& e : ball.edges)
                    edges.push_back({{"from", e.from},
                                     {"label", ball.generators[e.label].name()},
                                     {"to", e.to}});
                emit({{"group", group},
                      {"radius", radius},
                      {"points", labels},
                      {"edges", edges}});
            }
        } else if (app.got_subcommand(c_cosets)) {
            CayleyBall ball = bfs_ball(standard_generators(GroupTag::H), radius);
            int n = coset_count(ball, [](const GroupElement& g) {
                return membership(g.m, GroupTag::L);
            });
            emit({{"radius", radius},
                  {"ball_size", ball.vertices.size()},
                  {"cosets", n}});
        } else if (app.got_subcommand(c_lrep)) {
            Word w = parse_word(word);
            LorentzMatrix m = lorentz_rep(w);
            emit({{"word", to_json(w)},
                  {"matrix", to_json(m)},
                  {"is_lorentz", m.is_lorentz(1e-10)},
                  {"all_integer", m.all_integer()}});
        } else if (app.got_subcommand(c_liwa)) {
            LorentzMatrix m = lorentz_rep(parse_word(word));
            LorentzIwasawa f = lorentz_iwasawa(m);
            json b = json::array();
            for (int a = 0; a < 4; ++a) {
                json row = json::array();
                for (int c = 0; c < 4; ++c) row.push_back(f.b[a][c]);
                b.push_back(row);
            }
            emit({{"r", f.r},
                  {"xyz", json::array({f.xyz[0], f.xyz[1], f.xyz[2]})},
                  {"rotation", b},
                  {"recompose_error", lorentz_iwasawa_recompose(f).max_diff(m)}});
        } else if (app.got_subcommand(c_ext)) {
            GroupElement g(parse_matrix(matrix));
            Point5 p(parse_quaternion(point), rat_parse(tval));
            Point5 img = extend(g, p);
            emit({{"q", to_json(img.q)}, {"t", rat_str(img.t)}});
        } else if (app.got_subcommand("angles")) {
            auto angles = dihedral_angles();
            auto expect = dihedral_angles_expected();
            json rows = json::array();
            for (size_t n = 0; n < angles.size(); ++n)
                rows.push_back({{"face", angles[n].label},
                                {"angle", angles[n].angle},
                                {"expected", expect[n]}});
            emit({{"angles", rows}});
        } else if (app.got_subcommand("euler")) {
            FaceCounts f = face_counts_P();
            emit({{"faces", json::array({f.c[0], f.c[1], f.c[2], f.c[3], f.c[4]})},
                  {"chi", f.chi()}});
        } else if (app.got_subcommand(c_chi)) {
            bool L = parse_group(group) == GroupTag::L;
            emit({{"group", group},
                  {"chi_orb", rat_str(chi_orb(L ? chi_cells_L() : chi_cells_H()))},
                  {"chi_cusp",
                   rat_str(chi_orb(L ? chi_cells_cusp_L() : chi_cells_cusp_H()))},
                  {"chi_orb_5", rat_str(L ? chi_orb_5_L() : chi_orb_5_H())}});
        } else if (app.got_subcommand(c_strata)) {
            GroupTag tag = parse_group(group);
            auto strata = tag == GroupTag::L ? strata_L() : strata_H();
            std::vector<StratumReport> reports(strata.size());
#pragma omp parallel for schedule(dynamic)
            for (int n = 0; n < (int)strata.size(); ++n)
                reports[n] = verify_stratum(strata[n], tag, tolerance);
            json rows = json::array();
            bool all = true;
            for (const auto& r : reports) {
                json orders;
                for (const auto& [o, c] : r.element_orders)
                    orders[std::to_string(o)] = c;
                rows.push_back({{"id", r.id},
                                {"closure_order", r.closure_order},
                                {"order_ok", r.order_ok},
                                {"fixation_ok", r.fixation_ok},
                                {"membership_ok", r.membership_ok},
                                {"signature_checked", r.signature_checked},
                                {"signature_ok", r.signature_ok},
                                {"element_orders", orders}});
                all = all && r.pass();
            }
            emit({{"group", group}, {"strata", rows}, {"all_pass", all}});
        } else if (app.got_subcommand(c_vol)) {
            VolumeEstimate v = volume_mc(parse_domain(domain), samples, seed);
            emit({{"domain", domain},
                  {"samples", v.samples},
                  {"seed", v.seed},
                  {"estimate", v.estimate},
                  {"stderr", v.stderr_}});
        } else if (app.got_subcommand("constants")) {
            Constants c = constants();
            emit({{"vol_simplex", c.vol_simplex},
                  {"vol_PL", c.vol_PL},
                  {"vol_PH", c.vol_PH},
                  {"vol_24cell", c.vol_24cell},
                  {"index_coxeter_L", c.index_coxeter_L},
                  {"simplices_in_PL", c.index_simplices_L},
                  {"index_L_in_H", c.index_L_H},
                  {"selberg_orders", json::array({c.selberg_orders[0],
                                                  c.selberg_orders[1]})}});
        }
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;  // malformed JSON input is a usage error
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
