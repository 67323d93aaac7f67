#pragma once

#include <qshuf/combinat.hpp>
#include <qshuf/lincomb.hpp>

#include <map>
#include <utility>
#include <vector>

namespace qshuf {

// Letters form an additive semigroup: positive integers, or integer row
// vectors of a common width (rows of a block matrix).
inline int add_letters(int a, int b) { return a + b; }
inline std::vector<int> add_letters(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("add_letters: row width mismatch");
    std::vector<int> r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

// zeta_x adds x to the first letter of a word and annihilates the empty
// word: zeta_x(a w) = (x + a) w, zeta_x(eps) = 0.
template <class L>
LinComb<std::vector<L>> zeta(const L& x, const std::vector<L>& w) {
    if (w.empty()) return {};
    std::vector<L> out = w;
    out[0] = add_letters(x, w[0]);
    return LinComb<std::vector<L>>::single(std::move(out));
}

template <class L>
LinComb<std::vector<L>> zeta(const L& x, const LinComb<std::vector<L>>& combo) {
    LinComb<std::vector<L>> r;
    for (const auto& [w, c] : combo.terms()) {
        if (w.empty()) continue;
        std::vector<L> out = w;
        out[0] = add_letters(x, w[0]);
        r.add(out, c);
    }
    return r;
}

// The two-parameter deformation of the quasi-shuffle:
//
//   a u * b v = a (u * b v) + b (a u * v)
//             + alpha [a+b] (u * v) + beta zeta_{a+b}(u * v),
//   eps * w = w * eps = w,
//
// with alpha, beta kept symbolic in the coefficients. The recursion shares
// massive sub-structure, so results are memoized per product context keyed
// by suffix pairs; specializations substitute into the symbolic result, so
// one memo table serves every parameter choice.
template <class L>
class StarProduct {
public:
    using W = std::vector<L>;
    using Combo = LinComb<W>;

    const Combo& symbolic(const W& u, const W& v) {
        auto key = std::make_pair(u, v);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;

        Combo r;
        if (u.empty()) {
            r = Combo::single(v);
        } else if (v.empty()) {
            r = Combo::single(u);
        } else {
            const L a = u.front(), b = v.front();
            const W ut(u.begin() + 1, u.end());
            const W vt(v.begin() + 1, v.end());
            r += prefixed(a, symbolic(ut, v));
            r += prefixed(b, symbolic(u, vt));
            const Combo& tails = symbolic(ut, vt);
            const L ab = add_letters(a, b);
            r += prefixed(ab, tails) * ParamCoeff::alpha();
            r += zeta(ab, tails) * ParamCoeff::beta();
        }
        return memo_.emplace(std::move(key), std::move(r)).first->second;
    }

    Combo at(const W& u, const W& v, const ParamCoeff& aval, const ParamCoeff& bval) {
        return symbolic(u, v).substituted(aval, bval);
    }

    // Bilinear extension to linear combinations (still symbolic).
    Combo product(const Combo& x, const Combo& y) {
        Combo r;
        for (const auto& [u, cu] : x.terms())
            for (const auto& [v, cv] : y.terms())
                r += symbolic(u, v) * (cu * cv);
        return r;
    }

private:
    static Combo prefixed(const L& a, const Combo& combo) {
        Combo r;
        for (const auto& [w, c] : combo.terms()) {
            W out;
            out.reserve(w.size() + 1);
            out.push_back(a);
            out.insert(out.end(), w.begin(), w.end());
            r.add(out, c);
        }
        return r;
    }

    std::map<std::pair<W, W>, Combo> memo_;
};

// One-shot conveniences over a fresh context.
inline WordCombo star(const Word& u, const Word& v) {
    StarProduct<int> ctx;
    return ctx.symbolic(u, v);
}
inline WordCombo star(const Word& u, const Word& v, const ParamCoeff& a, const ParamCoeff& b) {
    StarProduct<int> ctx;
    return ctx.at(u, v, a, b);
}
inline RowCombo row_star(const RowWord& top, const RowWord& bottom) {
    StarProduct<std::vector<int>> ctx;
    return ctx.symbolic(top, bottom);
}

// Named specializations of the parameter pair.
enum class StarSpecial { shuffle, quasi_shuffle, q_quasi, block };

inline std::pair<ParamCoeff, ParamCoeff> specialize(StarSpecial s) {
    switch (s) {
    case StarSpecial::shuffle: return {ParamCoeff(0), ParamCoeff(0)};
    case StarSpecial::quasi_shuffle: return {ParamCoeff(1), ParamCoeff(0)};
    case StarSpecial::q_quasi: return {ParamCoeff::alpha(), ParamCoeff(0)};
    case StarSpecial::block: return {ParamCoeff(0), ParamCoeff(-1)};
    }
    throw std::invalid_argument("specialize: unknown product");
}

// Shifted star of two packed words through their matrix encodings: form the
// block matrix [[P,0],[0,Q]], shuffle the top row word against the bottom
// one, and decode every resulting matrix back to a packed word. Every term
// decodes: a contraction adds rows with disjoint column supports, so the
// one-1-per-column invariant survives. The outcome is multiplicity-free in
// the sense that each packed word carries a single monomial alpha^i beta^j.
inline PackedCombo shifted_word_star(const PackedWord& u, const PackedWord& v) {
    const BlockShift b = block_shift(word_matrix(u), word_matrix(v));
    const RowCombo rows = row_star(b.top, b.bottom);
    PackedCombo out;
    for (const auto& [rw, c] : rows.terms()) {
        PackedMatrix m{rw, b.width};
        out.add(decode_matrix(m), c);
    }
    return out;
}

inline PackedCombo shifted_word_star(const PackedWord& u, const PackedWord& v,
                                     const ParamCoeff& aval, const ParamCoeff& bval) {
    return shifted_word_star(u, v).substituted(aval, bval);
}

} // namespace qshuf
