#pragma once

#include <qshuf/json_io.hpp>
#include <qshuf/ncsf.hpp>
#include <qshuf/qsym.hpp>
#include <qshuf/wqsym.hpp>

#include <algorithm>
#include <cctype>
#include <string>

namespace qshuf {

enum class OutFormat { text, latex, json };

inline OutFormat parse_format(const std::string& s) {
    if (s == "text") return OutFormat::text;
    if (s == "latex") return OutFormat::latex;
    if (s == "json") return OutFormat::json;
    throw std::invalid_argument("unknown format: " + s);
}

// ---------------------------------------------------------------------------
// Coefficient rendering. A single monomial can donate its sign to the term
// separator; anything longer is kept in parentheses.

namespace detail {

inline std::string rational_text(const Rational& q) { return rational_str(q); }

inline std::string rational_latex(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    Integer num = numerator(q);
    std::string s;
    if (num < 0) {
        s = "-";
        num = -num;
    }
    return s + "\\frac{" + num.str() + "}{" + denominator(q).str() + "}";
}

inline std::string vars_text(int a, int b) {
    std::string s;
    if (a > 0) s += a == 1 ? "α" : "α^" + std::to_string(a);
    if (b > 0) {
        if (!s.empty()) s += "·";
        s += b == 1 ? "β" : "β^" + std::to_string(b);
    }
    return s;
}

inline std::string vars_latex(int a, int b) {
    std::string s;
    if (a > 0) s += a == 1 ? "\\alpha" : "\\alpha^{" + std::to_string(a) + "}";
    if (b > 0) s += b == 1 ? "\\beta" : "\\beta^{" + std::to_string(b) + "}";
    return s;
}

struct RenderedCoeff {
    bool negative = false;    // sign pulled out (single monomials only)
    std::string body;         // magnitude, possibly parenthesized; empty means 1
};

inline RenderedCoeff render_coeff(const ParamCoeff& c, bool latex) {
    RenderedCoeff out;
    const auto& mono = c.monomials();
    if (mono.size() == 1) {
        const auto& [key, q] = *mono.begin();
        out.negative = q < 0;
        const Rational mag = out.negative ? Rational(-q) : q;
        std::string vars = latex ? vars_latex(key.first, key.second)
                                 : vars_text(key.first, key.second);
        if (vars.empty()) {
            if (mag != 1) out.body = latex ? rational_latex(mag) : rational_text(mag);
        } else if (mag == 1) {
            out.body = vars;
        } else {
            out.body = latex ? rational_latex(mag) + vars : rational_text(mag) + "·" + vars;
        }
        return out;
    }
    // polynomial coefficient: keep every sign inside the parentheses
    std::string body;
    bool first = true;
    for (const auto& [key, q] : mono) {
        const bool neg = q < 0;
        const Rational mag = neg ? Rational(-q) : q;
        std::string vars = latex ? vars_latex(key.first, key.second)
                                 : vars_text(key.first, key.second);
        std::string piece;
        if (vars.empty())
            piece = latex ? rational_latex(mag) : rational_text(mag);
        else if (mag == 1)
            piece = vars;
        else
            piece = latex ? rational_latex(mag) + vars : rational_text(mag) + "·" + vars;
        if (first)
            body += (neg ? "-" : "") + piece;
        else
            body += (neg ? " - " : " + ") + piece;
        first = false;
    }
    out.body = latex ? "\\left(" + body + "\\right)" : "(" + body + ")";
    return out;
}

inline std::string key_text(const std::vector<int>& k, const std::string& prefix) {
    std::string s = prefix + "[";
    for (size_t i = 0; i < k.size(); ++i) s += (i ? "," : "") + std::to_string(k[i]);
    return s + "]";
}

inline std::string key_latex(const std::vector<int>& k, const std::string& letter,
                             bool digit_run) {
    if (k.empty()) return letter + "_{}";
    std::string sub;
    bool all_digits = std::all_of(k.begin(), k.end(), [](int x) { return x <= 9; });
    for (size_t i = 0; i < k.size(); ++i) {
        if (i && !(digit_run && all_digits)) sub += " ";
        sub += std::to_string(k[i]);
    }
    return letter + "_{" + sub + "}";
}

template <class Cmp>
std::string render_combo(const LinComb<std::vector<int>, Cmp>& combo, bool latex,
                         const std::string& label, bool digit_run) {
    if (combo.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : combo.terms()) {
        RenderedCoeff rc = render_coeff(c, latex);
        std::string key = latex ? key_latex(k, label, digit_run) : key_text(k, label);
        // a space keeps control words like \alpha from running into the key
        std::string term = rc.body.empty() ? key
                          : latex          ? rc.body + " " + key
                                           : rc.body + "·" + key;
        if (first)
            out += (rc.negative ? "-" : "") + term;
        else
            out += (rc.negative ? " - " : " + ") + term;
        first = false;
    }
    return out;
}

} // namespace detail

inline std::string coeff_text(const ParamCoeff& c) {
    if (c.is_zero()) return "0";
    auto rc = detail::render_coeff(c, false);
    std::string body = rc.body.empty() ? "1" : rc.body;
    return rc.negative ? "-" + body : body;
}

// ---------------------------------------------------------------------------
// Element emitters. Text keys look like X[1,2]; LaTeX keys follow the
// classical subscript style R_{1 1}, with packed words as digit runs
// (XX_{11211}) whenever every letter is a single digit.

inline std::string basis_label(NBasis b) { return b == NBasis::S ? "S" : "R"; }
inline std::string basis_label(QBasis b) { return b == QBasis::M ? "M" : "X"; }
inline std::string basis_label(WBasis b) { return b == WBasis::M ? "M" : "XX"; }

inline std::string to_text(const NcsfElem& e) {
    return detail::render_combo(e.terms, false, basis_label(e.basis), false);
}
inline std::string to_latex(const NcsfElem& e) {
    return detail::render_combo(e.terms, true, basis_label(e.basis), false);
}
inline std::string to_text(const QsymElem& e) {
    return detail::render_combo(e.terms, false, basis_label(e.basis), false);
}
inline std::string to_latex(const QsymElem& e) {
    return detail::render_combo(e.terms, true, basis_label(e.basis), false);
}
inline std::string to_text(const WqsymElem& e) {
    return detail::render_combo(e.terms, false, basis_label(e.basis), false);
}
inline std::string to_latex(const WqsymElem& e) {
    return detail::render_combo(e.terms, true, basis_label(e.basis), true);
}
inline std::string to_text(const WordCombo& combo) {
    return detail::render_combo(combo, false, "", false);
}
inline std::string to_latex(const WordCombo& combo) {
    return detail::render_combo(combo, true, "w", false);
}

// JSON schema shared by every element kind:
// {"basis": str, "terms": [{"key": [...], "coeff": [{"a","b","num","den"}]}]}
template <class Cmp>
json element_json(const std::string& basis, const LinComb<std::vector<int>, Cmp>& combo) {
    json out;
    out["basis"] = basis;
    out["terms"] = combo_to_json(combo);
    return out;
}

inline json to_json(const NcsfElem& e) { return element_json(basis_label(e.basis), e.terms); }
inline json to_json(const QsymElem& e) { return element_json(basis_label(e.basis), e.terms); }
inline json to_json(const WqsymElem& e) { return element_json(basis_label(e.basis), e.terms); }
inline json to_json(const WordCombo& combo) { return element_json("word", combo); }

inline NcsfElem ncsf_from_json(const json& j) {
    const std::string b = j.at("basis").get<std::string>();
    if (b != "S" && b != "R") throw std::invalid_argument("ncsf_from_json: bad basis tag");
    return {b == "S" ? NBasis::S : NBasis::R, combo_from_json(j.at("terms"))};
}
inline QsymElem qsym_from_json(const json& j) {
    const std::string b = j.at("basis").get<std::string>();
    if (b != "M" && b != "X") throw std::invalid_argument("qsym_from_json: bad basis tag");
    return {b == "M" ? QBasis::M : QBasis::X, combo_from_json(j.at("terms"))};
}
inline WqsymElem wqsym_from_json(const json& j) {
    const std::string b = j.at("basis").get<std::string>();
    if (b != "M" && b != "XX") throw std::invalid_argument("wqsym_from_json: bad basis tag");
    return {b == "M" ? WBasis::M : WBasis::XX, combo_from_json<PackedWordLess>(j.at("terms"))};
}
inline WordCombo word_combo_from_json(const json& j) {
    if (j.at("basis").get<std::string>() != "word")
        throw std::invalid_argument("word_combo_from_json: bad basis tag");
    return combo_from_json(j.at("terms"));
}

// ---------------------------------------------------------------------------
// CLI operand syntax: comma-separated integers in square brackets, [1,2,1];
// [] is the empty word/composition.

inline std::vector<int> parse_int_list(const std::string& s) {
    size_t i = 0;
    auto fail = [&]() -> std::vector<int> {
        throw std::invalid_argument("expected [i,j,...] but got: " + s);
    };
    while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
    if (i >= s.size() || s[i] != '[') return fail();
    ++i;
    std::vector<int> out;
    while (true) {
        while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
        if (i < s.size() && s[i] == ']') {
            ++i;
            break;
        }
        size_t j = i;
        while (j < s.size() && (std::isdigit((unsigned char)s[j]) || s[j] == '-')) ++j;
        if (j == i) return fail();
        try {
            out.push_back(std::stoi(s.substr(i, j - i)));
        } catch (const std::exception&) {
            return fail();
        }
        i = j;
        while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
        if (i < s.size() && s[i] == ',') {
            ++i;
        } else if (i < s.size() && s[i] == ']') {
            ++i;
            break;
        } else {
            return fail();
        }
    }
    while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
    if (i != s.size()) return fail();
    return out;
}

} // namespace qshuf
