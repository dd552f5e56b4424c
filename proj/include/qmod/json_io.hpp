// JSON (de)serialization for the CLI: quaternions as rational-string
// coefficient objects, matrices as 2x2 nested arrays, "inf" for the point at
// infinity.  Uses ordered_json so output key order is stable.
#pragma once

#include "qmod/lorentz.hpp"
#include "qmod/moebius.hpp"
#include "qmod/orbifold.hpp"
#include "qmod/words.hpp"

#include <json.hpp>

#include <cstdio>
#include <string>

namespace qmod {

using json = nlohmann::ordered_json;

inline json to_json(const Quaternion& q) {
    return {{"x0", rat_str(q.x0)}, {"x1", rat_str(q.x1)},
            {"x2", rat_str(q.x2)}, {"x3", rat_str(q.x3)}};
}

inline Quaternion quaternion_from_json(const json& v) {
    if (v.is_string()) return parse_quaternion(v.get<std::string>());
    return Quaternion(rat_parse(v.at("x0").get<std::string>()),
                      rat_parse(v.at("x1").get<std::string>()),
                      rat_parse(v.at("x2").get<std::string>()),
                      rat_parse(v.at("x3").get<std::string>()));
}

inline json to_json(const ExtendedPoint& p) {
    if (p.is_infinity()) return "inf";
    return to_json(*p.q);
}

// shortest round-trip double formatting, stable across runs
inline std::string fstr(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline json to_json(const QuaternionF& q) {
    return {{"x0", q.x0}, {"x1", q.x1}, {"x2", q.x2}, {"x3", q.x3}};
}

inline json to_json(const QMatrix& m) {
    return json::array({json::array({to_json(m.a), to_json(m.b)}),
                        json::array({to_json(m.c), to_json(m.d)})});
}

inline QMatrix qmatrix_from_json(const json& v) {
    return QMatrix(quaternion_from_json(v.at(0).at(0)),
                   quaternion_from_json(v.at(0).at(1)),
                   quaternion_from_json(v.at(1).at(0)),
                   quaternion_from_json(v.at(1).at(1)));
}

inline json to_json(const Word& w) {
    json a = json::array();
    for (const auto& l : w) a.push_back(l.name());
    return a;
}

inline Word word_from_json(const json& v) {
    Word w;
    for (const auto& s : v) w.push_back(GeneratorLabel::parse(s.get<std::string>()));
    return w;
}

inline json to_json(const LorentzMatrix& m) {
    json rows = json::array();
    for (int a = 0; a < 5; ++a) {
        json row = json::array();
        for (int b = 0; b < 5; ++b) row.push_back(m.m[a][b]);
        rows.push_back(row);
    }
    return rows;
}

inline json to_json(const Stratum& s) {
    json gens = json::array();
    for (const auto& w : s.generators) gens.push_back(to_json(w));
    return {{"id", s.id},
            {"dimension", s.dimension},
            {"cell_count", s.cell_count},
            {"isotropy_order", s.isotropy_order},
            {"generators", gens},
            {"representative",
             json::array({s.representative.x0, s.representative.x1,
                          s.representative.x2, s.representative.x3})},
            {"local_model", s.local_model},
            {"compact", s.compact}};
}

inline json strata_json() {
    json out;
    out["version"] = 1;
    json gl = json::array(), hl = json::array();
    for (const auto& s : strata_L()) gl.push_back(to_json(s));
    for (const auto& s : strata_H()) hl.push_back(to_json(s));
    out["L"] = gl;
    out["H"] = hl;
    return out;
}

}  // namespace qmod
