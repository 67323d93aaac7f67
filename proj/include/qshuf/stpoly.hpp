#pragma once

#include <qshuf/numeric.hpp>
#include <qshuf/param_coeff.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

namespace qshuf {

// Sparse polynomial in the auxiliary parameters s, t with rational
// coefficients. Only the kernel oracles see s and t; everything downstream
// works in the (alpha, beta) ring via reduce_sym, with alpha = s+t and
// beta = st.
class STPoly {
public:
    using Key = std::pair<int, int>; // (s exponent, t exponent)
    using Map = std::map<Key, Rational>;

    STPoly() = default;
    STPoly(int n) { if (n != 0) mono_[{0, 0}] = n; } // NOLINT(google-explicit-constructor)
    static STPoly monomial(int a, int b, const Rational& q) {
        STPoly p;
        if (q != 0) p.mono_[{a, b}] = q;
        return p;
    }

    const Map& monomials() const { return mono_; }
    bool is_zero() const { return mono_.empty(); }

    STPoly& operator+=(const STPoly& o) {
        for (const auto& [k, q] : o.mono_) add_term(k, q);
        return *this;
    }
    STPoly& operator-=(const STPoly& o) {
        for (const auto& [k, q] : o.mono_) add_term(k, -q);
        return *this;
    }
    friend STPoly operator+(STPoly a, const STPoly& b) { a += b; return a; }
    friend STPoly operator-(STPoly a, const STPoly& b) { a -= b; return a; }
    friend STPoly operator*(const STPoly& a, const STPoly& b) {
        STPoly r;
        for (const auto& [ka, qa] : a.mono_)
            for (const auto& [kb, qb] : b.mono_)
                r.add_term({ka.first + kb.first, ka.second + kb.second}, qa * qb);
        return r;
    }
    friend bool operator==(const STPoly& a, const STPoly& b) { return a.mono_ == b.mono_; }
    friend bool operator!=(const STPoly& a, const STPoly& b) { return !(a == b); }

    bool is_symmetric() const {
        for (const auto& [k, q] : mono_) {
            auto it = mono_.find({k.second, k.first});
            if (it == mono_.end() || it->second != q) return false;
        }
        return true;
    }

    Rational eval(const Rational& s, const Rational& t) const {
        Rational r = 0;
        for (const auto& [k, q] : mono_) {
            Rational m = q;
            for (int i = 0; i < k.first; ++i) m *= s;
            for (int i = 0; i < k.second; ++i) m *= t;
            r += m;
        }
        return r;
    }

private:
    void add_term(const Key& k, const Rational& q) {
        auto it = mono_.find(k);
        if (it == mono_.end()) {
            if (q != 0) mono_[k] = q;
        } else {
            it->second += q;
            if (it->second == 0) mono_.erase(it);
        }
    }

    Map mono_;
};

// Complete homogeneous polynomial h_k(s,t) = s^k + s^{k-1}t + ... + t^k.
inline STPoly st_complete_homogeneous(int k) {
    STPoly h;
    for (int i = 0; i <= k; ++i) h += STPoly::monomial(i, k - i, 1);
    return h;
}

// Rewrites a symmetric polynomial in s, t as a polynomial in the elementary
// symmetric functions alpha = s+t and beta = st. Standard leading-term
// elimination: the lex-leading monomial always has s-degree >= t-degree.
inline ParamCoeff reduce_sym(STPoly p) {
    if (!p.is_symmetric())
        throw std::domain_error("reduce_sym: polynomial is not symmetric in s, t");
    const STPoly e1 = st_complete_homogeneous(1);      // s + t
    const STPoly e2 = STPoly::monomial(1, 1, 1);       // s t
    ParamCoeff out;
    while (!p.is_zero()) {
        auto lead = *p.monomials().rbegin(); // lex max: s-degree, then t-degree
        const auto [a, b] = lead.first;
        const Rational q = lead.second;
        STPoly sub = STPoly::monomial(0, 0, q);
        for (int i = 0; i < a - b; ++i) sub = sub * e1;
        for (int i = 0; i < b; ++i) sub = sub * e2;
        p -= sub;
        out += ParamCoeff::monomial(a - b, b, q);
    }
    return out;
}

// Inverse direction, alpha -> s+t and beta -> st; used to round-trip
// reduce_sym in the tests.
inline STPoly expand_st(const ParamCoeff& c) {
    const STPoly e1 = st_complete_homogeneous(1);
    const STPoly e2 = STPoly::monomial(1, 1, 1);
    STPoly out;
    for (const auto& [k, q] : c.monomials()) {
        STPoly m = STPoly::monomial(0, 0, q);
        for (int i = 0; i < k.first; ++i) m = m * e1;
        for (int i = 0; i < k.second; ++i) m = m * e2;
        out += m;
    }
    return out;
}

// Homogeneous Eulerian polynomial: sum over all permutations of n letters of
// s^{rises} t^{descents}. Pure enumeration, intended as the independent
// oracle for the series route; n! permutations, so a guard cap applies.
inline STPoly eulerian_poly(int n, int guard = 9) {
    if (n < 1) throw std::invalid_argument("eulerian_poly: n must be >= 1");
    if (n > guard)
        throw cap_error("eulerian_poly: n exceeds the enumeration guard (" +
                        std::to_string(guard) + "); use the series-reversion route");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    STPoly e;
    do {
        int rises = 0, descents = 0;
        for (int i = 0; i + 1 < n; ++i) (perm[i] < perm[i + 1] ? rises : descents)++;
        e += STPoly::monomial(rises, descents, 1);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return e;
}

} // namespace qshuf
