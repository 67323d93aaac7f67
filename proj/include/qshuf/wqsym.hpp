#pragma once

#include <qshuf/combinat.hpp>
#include <qshuf/qsym.hpp>
#include <qshuf/shuffle.hpp>

#include <bit>
#include <cstdlib>
#include <vector>

namespace qshuf {

// Word quasi-symmetric functions over packed words, in the monomial basis
// and in the lifted XX basis.
enum class WBasis { M, XX };

struct WqsymElem {
    WBasis basis = WBasis::M;
    PackedCombo terms;

    friend bool operator==(const WqsymElem& a, const WqsymElem& b) {
        return a.basis == b.basis && a.terms == b.terms;
    }
};

inline WqsymElem wqsym_unit(WBasis b = WBasis::M) {
    return {b, PackedCombo::single(PackedWord{})};
}

// Convolution product of monomial elements: all packed words w of length
// |u|+|v| whose prefix packs to u and suffix packs to v. Constructed
// directly: w = phi(u) . psi(v) for strictly increasing value maps phi, psi
// with jointly surjective images.
inline PackedCombo m_convolution(const PackedWord& u, const PackedWord& v) {
    const int p = u.empty() ? 0 : *std::max_element(u.begin(), u.end());
    const int q = v.empty() ? 0 : *std::max_element(v.begin(), v.end());
    if (!is_packed(u) || !is_packed(v))
        throw std::invalid_argument("m_convolution: operands must be packed words");
    PackedCombo out;
    for (int m = std::max(p, q); m <= p + q; ++m) {
        const unsigned full = (m == 0) ? 0u : ((1u << m) - 1);
        for (unsigned A = 0; A <= full; ++A) {
            if (std::popcount(A) != p) continue;
            const unsigned required = full & ~A;
            const int extras = q - std::popcount(required);
            if (extras < 0) continue;
            // value map phi: value i -> i-th smallest element of A
            std::vector<int> phi;
            for (int bit = 0; bit < m; ++bit)
                if (A & (1u << bit)) phi.push_back(bit + 1);
            for (unsigned E = A;; E = (E - 1) & A) {
                if (std::popcount(E) == extras) {
                    const unsigned B = required | E;
                    std::vector<int> psi;
                    for (int bit = 0; bit < m; ++bit)
                        if (B & (1u << bit)) psi.push_back(bit + 1);
                    PackedWord w;
                    w.reserve(u.size() + v.size());
                    for (int x : u) w.push_back(phi[x - 1]);
                    for (int x : v) w.push_back(psi[x - 1]);
                    out.add(w, ParamCoeff(1));
                }
                if (E == 0) break;
            }
        }
    }
    return out;
}

// XX_u in the monomial basis: sum over the value-merge coarsenings v of u,
// with the QSym X -> M coefficient indexed by the evaluation pair.
inline PackedCombo xx_expansion(const PackedWord& u, DualityCache& cache, const CoeffList& c) {
    PackedCombo out;
    if (u.empty()) {
        out.add(u, ParamCoeff(1));
        return out;
    }
    const CompCombo xrow = x_expansion(eval_composition(u), cache, c);
    for (const auto& cw : coarse_words(u)) out.add(cw.word, xrow.coeff(cw.to_ev));
    return out;
}

inline WqsymElem xx_to_m(const WqsymElem& e, DualityCache& cache, const CoeffList& c) {
    if (e.basis == WBasis::M) return e;
    PackedCombo out;
    for (const auto& [u, coeff] : e.terms.terms()) out += xx_expansion(u, cache, c) * coeff;
    return {WBasis::M, out};
}

// Unitriangular elimination along the value-merge order: the frozen packed
// word order lists the finest words (largest maximal value) first, and
// xx_expansion(w) only touches strictly coarser words below w.
inline WqsymElem m_to_xx(const WqsymElem& e, DualityCache& cache, const CoeffList& c) {
    if (e.basis == WBasis::XX) return e;
    PackedCombo rem = e.terms, out;
    while (!rem.is_zero()) {
        const PackedWord w = rem.terms().begin()->first;
        const ParamCoeff coeff = rem.terms().begin()->second;
        out.add(w, coeff);
        rem -= xx_expansion(w, cache, c) * coeff;
    }
    return {WBasis::XX, out};
}

// Ground-truth product of the lifted basis: expand to the monomial basis,
// convolve, convert back. The shifted matrix star and the closed
// coefficient formula are independently testable alternates and must agree
// with this route.
inline WqsymElem xx_product(const PackedWord& u, const PackedWord& v, DualityCache& cache,
                            const CoeffList& c) {
    const PackedCombo mu = xx_expansion(u, cache, c);
    const PackedCombo mv = xx_expansion(v, cache, c);
    PackedCombo prod;
    for (const auto& [a, ca] : mu.terms())
        for (const auto& [b, cb] : mv.terms()) prod += m_convolution(a, b) * (ca * cb);
    return m_to_xx({WBasis::M, prod}, cache, c);
}

// Two candidate readings of the per-value counts in the closed coefficient
// formula: the number of distinct u-values merged into a result value
// (equivalently, of matrix rows), or the raw number of positions. The
// triple-agreement harness certifies distinct_values; positions is kept as
// the rejected alternative for the record.
enum class FCoeffReading { distinct_values, positions };

// Closed formula for the coefficient of XX_w in XX_u XX_v. Zero unless w is
// compatible with (u, v): positions sharing a u-value (or v-value) must
// share a w-value, and the induced value maps must be nondecreasing (rows
// keep their relative order under shuffling). Each result value i merging
// a_i u-values with b_i v-values contributes
//   alpha beta^{a_i - 1}  if a_i = b_i,
//   beta^{min(a_i, b_i)}  if |a_i - b_i| = 1,
//   0                     otherwise.
inline ParamCoeff f_coeff(const PackedWord& u, const PackedWord& v, const PackedWord& w,
                          FCoeffReading reading = FCoeffReading::distinct_values) {
    if (w.size() != u.size() + v.size())
        throw std::invalid_argument("f_coeff: |w| must equal |u| + |v|");
    if (!is_packed(w)) return {};
    const int mw = w.empty() ? 0 : *std::max_element(w.begin(), w.end());

    auto value_map = [&](const PackedWord& word, size_t offset, std::vector<int>& theta) {
        const int mx = word.empty() ? 0 : *std::max_element(word.begin(), word.end());
        theta.assign(mx + 1, 0);
        for (size_t j = 0; j < word.size(); ++j) {
            int& slot = theta[word[j]];
            const int target = w[offset + j];
            if (slot == 0)
                slot = target;
            else if (slot != target)
                return false; // equal letters sent to different values
        }
        for (int val = 2; val <= mx; ++val)
            if (theta[val] < theta[val - 1]) return false; // order of rows broken
        return true;
    };

    std::vector<int> theta_u, theta_v;
    if (!value_map(u, 0, theta_u) || !value_map(v, u.size(), theta_v)) return {};

    std::vector<int> a(mw + 1, 0), b(mw + 1, 0);
    if (reading == FCoeffReading::distinct_values) {
        for (size_t val = 1; val < theta_u.size(); ++val) a[theta_u[val]]++;
        for (size_t val = 1; val < theta_v.size(); ++val) b[theta_v[val]]++;
    } else {
        for (size_t j = 0; j < u.size(); ++j) a[w[j]]++;
        for (size_t j = 0; j < v.size(); ++j) b[w[u.size() + j]]++;
    }

    ParamCoeff f(1);
    for (int i = 1; i <= mw; ++i) {
        const int ai = a[i], bi = b[i];
        if (std::abs(ai - bi) > 1) return {};
        if (ai == bi)
            f *= ParamCoeff::monomial(1, ai - 1, 1);
        else
            f *= ParamCoeff::monomial(0, std::min(ai, bi), 1);
    }
    return f;
}

// The product assembled from the closed formula over all packed words of
// the right length; used by the triple-agreement harness.
inline WqsymElem xx_product_formula(const PackedWord& u, const PackedWord& v,
                                    FCoeffReading reading = FCoeffReading::distinct_values) {
    WqsymElem out{WBasis::XX, {}};
    for (const auto& w : packed_words((int)(u.size() + v.size())))
        out.terms.add(w, f_coeff(u, v, w, reading));
    return out;
}

// Projection to QSym: positions collapse to letter multiplicities, XX_w to
// X_{ev(w)} and M_w to M_{ev(w)}.
inline QsymElem project_to_qsym(const WqsymElem& e) {
    QsymElem out{e.basis == WBasis::M ? QBasis::M : QBasis::X, {}};
    for (const auto& [w, c] : e.terms.terms()) out.terms.add(eval_composition(w), c);
    return out;
}

} // namespace qshuf
