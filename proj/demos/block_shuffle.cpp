// Walks through the specializations of the star product on two small words
// and prints the block-shuffle expansion of the Y basis.

#include <qshuf/qshuf.hpp>

#include <iostream>

using namespace qshuf;

int main() {
    const Word u{1}, v{1, 2};
    StarProduct<int> ctx;

    std::cout << "star([1], [1,2]) with symbolic parameters:\n  "
              << to_text(ctx.symbolic(u, v)) << "\n\n";

    for (auto special : {StarSpecial::shuffle, StarSpecial::quasi_shuffle, StarSpecial::block}) {
        const auto [a, b] = specialize(special);
        const char* name = special == StarSpecial::shuffle        ? "shuffle       "
                           : special == StarSpecial::quasi_shuffle ? "quasi-shuffle "
                                                                    : "block shuffle ";
        std::cout << name << " " << to_text(ctx.at(u, v, a, b)) << "\n";
    }

    std::cout << "\nY_n in the ribbon basis, tanh mode:\n";
    const int N = 5;
    const GradedNcsf y = build_Y(coeff_mode_tanh(N), N);
    for (int n = 2; n <= N; ++n)
        std::cout << "  Y_" << n << " = " << to_text(NcsfElem{NBasis::R, s_to_r(y.at(n))}) << "\n";
    return 0;
}
