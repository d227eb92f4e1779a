#pragma once

#include "json.hpp"
#include "orbivertex/report.hpp"
#include "orbivertex/series.hpp"
#include "orbivertex/wreath_char.hpp"

namespace orbivertex {

using nlohmann::ordered_json;

// exponents and precision are rationals in grade units; precision null for exact series
inline ordered_json to_json(const PuiseuxSeries& s) {
    const auto& vs = *s.vars();
    ordered_json j;
    j["vars"] = vs.names;
    j["precision"] = s.exact() ? ordered_json(nullptr) : ordered_json(rat_str(frac(s.precision(), vs.D)));
    ordered_json terms = ordered_json::array();
    for (const auto& t : s.terms()) {
        if (t.g >= s.precision()) continue;
        ordered_json e = ordered_json::array();
        for (int i = 0; i < vs.size(); ++i) e.push_back(rat_str(frac(t.e[i], vs.D)));
        terms.push_back({{"exp", e}, {"coeff", t.c.str()}});
    }
    j["terms"] = terms;
    return j;
}

inline ordered_json to_json(const CheckReport& r) {
    ordered_json j;
    j["name"] = r.name;
    j["pass"] = r.pass;
    j["cases"] = r.cases;
    j["coefficients"] = r.coefficients;
    if (r.first)
        j["first_mismatch"] = {{"label", r.first->label},
                               {"monomial", r.first->monomial},
                               {"lhs", r.first->lhs},
                               {"rhs", r.first->rhs}};
    else
        j["first_mismatch"] = nullptr;
    j["notes"] = r.notes;
    return j;
}

inline ordered_json to_json(const CharTable& t) {
    ordered_json j;
    j["n"] = t.n;
    j["d"] = t.d;
    ordered_json irreps = ordered_json::array(), classes = ordered_json::array(), chi = ordered_json::array();
    for (const auto& l : t.irreps) irreps.push_back(l.str());
    for (const auto& c : t.classes) classes.push_back(c.str());
    for (const auto& row : t.chi) {
        ordered_json r = ordered_json::array();
        for (const auto& v : row) r.push_back(v.str());
        chi.push_back(r);
    }
    j["irreps"] = irreps;
    j["classes"] = classes;
    j["z"] = t.z;
    j["chi"] = chi;
    return j;
}

}  // namespace orbivertex
