#include <qshuf/serialize.hpp>
#include <qshuf/shuffle.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace qshuf;

namespace {
const ParamCoeff A = ParamCoeff::alpha();
const ParamCoeff B = ParamCoeff::beta();
} // namespace

TEST_CASE("text rendering") {
    CHECK(to_text(star({1}, {1})) == "2·[1,1] + α·[2]");

    CompCombo xc;
    xc.add({1, 2}, ParamCoeff(1));
    xc.add({2, 1}, ParamCoeff(1));
    xc.add({3}, A);
    CHECK(to_text(QsymElem{QBasis::X, xc}) == "X[1,2] + X[2,1] + α·X[3]");

    PackedCombo wc;
    wc.add({1, 2}, ParamCoeff(1));
    wc.add({2, 1}, ParamCoeff(1));
    wc.add({1, 1}, A);
    CHECK(to_text(WqsymElem{WBasis::XX, wc}) == "XX[1,2] + XX[2,1] + α·XX[1,1]");

    // polynomial coefficients go in parentheses; zero prints as 0
    CompCombo mixed;
    mixed.add({2}, (ParamCoeff(1) - A) * Rational(1, 2));
    CHECK(to_text(QsymElem{QBasis::M, mixed}) == "(1/2 - 1/2·α)·M[2]");
    CHECK(to_text(QsymElem{QBasis::M, {}}) == "0");

    CHECK(coeff_text(A * A * Rational(-2)) == "-2·α^2");
    CHECK(coeff_text(B.pow(3)) == "β^3");
    CHECK(coeff_text(ParamCoeff()) == "0");
}

TEST_CASE("latex rendering matches the classical display style") {
    const GradedNcsf y = build_Y(coeff_mode_tanh(4), 4);
    CHECK(to_latex(NcsfElem{NBasis::R, s_to_r(y.at(2))}) ==
          "-\\frac{1}{2} R_{1 1} + \\frac{1}{2} R_{2}");
    CHECK(to_latex(NcsfElem{NBasis::R, s_to_r(y.at(4))}) ==
          "\\frac{1}{4} R_{1 1 1 1} + \\frac{1}{4} R_{1 1 2} + \\frac{1}{4} R_{1 2 1} - "
          "\\frac{1}{4} R_{1 3} + \\frac{1}{4} R_{2 1 1} - \\frac{1}{4} R_{2 2} - "
          "\\frac{1}{4} R_{3 1} - \\frac{1}{4} R_{4}");

    // packed words become digit runs when every letter is a single digit
    PackedCombo wc;
    wc.add({1, 1, 2, 1, 1}, B);
    CHECK(to_latex(WqsymElem{WBasis::XX, wc}) == "\\beta XX_{11211}");

    CompCombo sym;
    sym.add({2}, A * Rational(1, 2));
    CHECK(to_latex(QsymElem{QBasis::X, sym}) == "\\frac{1}{2}\\alpha X_{2}");
}

TEST_CASE("json round trips") {
    // word combos
    const WordCombo w = star({1}, {1, 2});
    CHECK(word_combo_from_json(to_json(w)) == w);

    // qsym / ncsf / wqsym elements with symbolic coefficients
    CompCombo xc;
    xc.add({1, 1}, (ParamCoeff(1) - A) * Rational(1, 2));
    xc.add({2}, B * Rational(-7, 3));
    const QsymElem q{QBasis::X, xc};
    CHECK(qsym_from_json(to_json(q)) == q);

    const NcsfElem n{NBasis::R, xc};
    CHECK(ncsf_from_json(to_json(n)) == n);

    PackedCombo pc;
    pc.add({2, 1, 2}, A * B);
    pc.add({1, 1, 2}, ParamCoeff(Rational(-1, 2)));
    const WqsymElem e{WBasis::XX, pc};
    CHECK(wqsym_from_json(to_json(e)) == e);

    // schema fields
    const json j = to_json(q);
    CHECK(j.at("basis") == "X");
    for (const auto& t : j.at("terms"))
        for (const auto& m : t.at("coeff")) {
            CHECK(m.at("num").is_string());
            CHECK(m.at("den").is_string());
            CHECK(m.at("a").is_number_integer());
        }

    CHECK_THROWS_AS(qsym_from_json(to_json(n)), std::invalid_argument);
}

TEST_CASE("operand parsing") {
    CHECK(parse_int_list("[1,2,1]") == std::vector<int>{1, 2, 1});
    CHECK(parse_int_list("[]") == std::vector<int>{});
    CHECK(parse_int_list(" [ 3 , 4 ] ") == std::vector<int>{3, 4});
    CHECK_THROWS_AS(parse_int_list("1,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_int_list("[1,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_int_list("[1,,2]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_int_list("[a]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_int_list("[1] trailing"), std::invalid_argument);
}
