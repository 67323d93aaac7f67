// Expands the X basis in monomials for a few compositions and checks the
// duality rule X_I X_J = X(I star J) on one example pair.

#include <qshuf/qshuf.hpp>

#include <iostream>

using namespace qshuf;

int main() {
    DualityCache cache; // in-memory
    const CoeffList c = coeff_mode_fgl(6);

    for (const Composition& I : {Composition{1, 1}, Composition{1, 2}, Composition{2, 2}})
        std::cout << "X" << to_text(QsymElem{QBasis::X, CompCombo::single(I)}).substr(1)
                  << " = " << to_text(QsymElem{QBasis::M, x_expansion(I, cache, c)}) << "\n";

    const Composition I{1, 1}, J{2};
    std::cout << "\nX[1,1] * X[2]    = " << to_text(x_product(I, J, cache, c)) << "\n";
    std::cout << "[1,1] star [2]   = " << to_text(star(I, J)) << "\n";

    std::cout << "\nXX products lift the same rule to packed words:\n";
    std::cout << "XX[1]*XX[1]      = " << to_text(xx_product({1}, {1}, cache, c)) << "\n";
    std::cout << "shifted star     = "
              << to_text(WqsymElem{WBasis::XX, shifted_word_star({1}, {1})}) << "\n";
    return 0;
}
