#pragma once

#include <qshuf/lincomb.hpp>
#include <qshuf/ncsf.hpp>

#include <json.hpp>

#include <string>
#include <vector>

namespace qshuf {

using json = nlohmann::ordered_json;

// Coefficients serialize as a monomial list sorted by (a, b); numerator and
// denominator travel as decimal strings so consumers never overflow.
inline json coeff_to_json(const ParamCoeff& c) {
    json arr = json::array();
    for (const auto& [k, q] : c.monomials()) {
        json m;
        m["a"] = k.first;
        m["b"] = k.second;
        m["num"] = numerator(q).str();
        m["den"] = denominator(q).str();
        arr.push_back(std::move(m));
    }
    return arr;
}

inline ParamCoeff coeff_from_json(const json& arr) {
    ParamCoeff c;
    for (const auto& m : arr) {
        Integer num(m.at("num").get<std::string>());
        Integer den(m.at("den").get<std::string>());
        c += ParamCoeff::monomial(m.at("a").get<int>(), m.at("b").get<int>(),
                                  Rational(num, den));
    }
    return c;
}

template <class Cmp>
json combo_to_json(const LinComb<std::vector<int>, Cmp>& combo) {
    json arr = json::array();
    for (const auto& [k, c] : combo.terms()) {
        json t;
        t["key"] = k;
        t["coeff"] = coeff_to_json(c);
        arr.push_back(std::move(t));
    }
    return arr;
}

template <class Cmp = std::less<std::vector<int>>>
LinComb<std::vector<int>, Cmp> combo_from_json(const json& arr) {
    LinComb<std::vector<int>, Cmp> combo;
    for (const auto& t : arr)
        combo.add(t.at("key").get<std::vector<int>>(), coeff_from_json(t.at("coeff")));
    return combo;
}

inline json transition_to_json(const Transition& t) {
    json out;
    out["degree"] = t.degree;
    auto rows = [](const std::map<Composition, CompCombo>& m) {
        json arr = json::array();
        for (const auto& [k, row] : m) {
            json r;
            r["key"] = k;
            r["row"] = combo_to_json(row);
            arr.push_back(std::move(r));
        }
        return arr;
    };
    out["y_to_s"] = rows(t.y_to_s);
    out["s_to_y"] = rows(t.s_to_y);
    out["x_to_m"] = rows(t.x_to_m);
    return out;
}

inline Transition transition_from_json(const json& in) {
    Transition t;
    t.degree = in.at("degree").get<int>();
    t.order = compositions(t.degree);
    std::stable_sort(t.order.begin(), t.order.end(),
                     [](const Composition& a, const Composition& b) { return a.size() < b.size(); });
    auto rows = [](const json& arr, std::map<Composition, CompCombo>& m) {
        for (const auto& r : arr)
            m[r.at("key").get<std::vector<int>>()] = combo_from_json(r.at("row"));
    };
    rows(in.at("y_to_s"), t.y_to_s);
    rows(in.at("s_to_y"), t.s_to_y);
    rows(in.at("x_to_m"), t.x_to_m);
    return t;
}

} // namespace qshuf
