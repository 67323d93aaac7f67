#pragma once

#include <qshuf/numeric.hpp>

#include <map>
#include <utility>

namespace qshuf {

// Sparse polynomial in the two deformation parameters with rational
// coefficients: the universal coefficient ring of the library. Keys are
// exponent pairs (a, b) for alpha^a beta^b; zero coefficients are never
// stored, so equality is structural.
class ParamCoeff {
public:
    using Key = std::pair<int, int>; // (alpha exponent, beta exponent)
    using Map = std::map<Key, Rational>;

    ParamCoeff() = default;
    ParamCoeff(int n) { if (n != 0) mono_[{0, 0}] = n; }                    // NOLINT(google-explicit-constructor)
    ParamCoeff(const Rational& q) { if (q != 0) mono_[{0, 0}] = q; }        // NOLINT(google-explicit-constructor)

    static ParamCoeff alpha() { return monomial(1, 0, 1); }
    static ParamCoeff beta() { return monomial(0, 1, 1); }
    static ParamCoeff monomial(int a, int b, const Rational& q) {
        ParamCoeff p;
        if (q != 0) p.mono_[{a, b}] = q;
        return p;
    }

    const Map& monomials() const { return mono_; }
    bool is_zero() const { return mono_.empty(); }
    bool is_rational() const {
        return mono_.empty() || (mono_.size() == 1 && mono_.begin()->first == Key{0, 0});
    }
    // Constant (degree-0) part; the whole value when is_rational().
    Rational rational_part() const {
        auto it = mono_.find({0, 0});
        return it == mono_.end() ? Rational(0) : it->second;
    }

    ParamCoeff& operator+=(const ParamCoeff& o) {
        for (const auto& [k, q] : o.mono_) add_term(k, q);
        return *this;
    }
    ParamCoeff& operator-=(const ParamCoeff& o) {
        for (const auto& [k, q] : o.mono_) add_term(k, -q);
        return *this;
    }
    ParamCoeff operator-() const {
        ParamCoeff r;
        for (const auto& [k, q] : mono_) r.mono_[k] = -q;
        return r;
    }
    ParamCoeff& operator*=(const ParamCoeff& o) { *this = *this * o; return *this; }

    friend ParamCoeff operator+(ParamCoeff a, const ParamCoeff& b) { a += b; return a; }
    friend ParamCoeff operator-(ParamCoeff a, const ParamCoeff& b) { a -= b; return a; }
    friend ParamCoeff operator*(const ParamCoeff& a, const ParamCoeff& b) {
        ParamCoeff r;
        for (const auto& [ka, qa] : a.mono_)
            for (const auto& [kb, qb] : b.mono_)
                r.add_term({ka.first + kb.first, ka.second + kb.second}, qa * qb);
        return r;
    }
    friend ParamCoeff operator*(ParamCoeff a, const Rational& q) {
        if (q == 0) return {};
        for (auto& [k, c] : a.mono_) c *= q;
        return a;
    }
    friend ParamCoeff operator*(const Rational& q, const ParamCoeff& a) { return a * q; }
    friend ParamCoeff operator/(ParamCoeff a, const Rational& q) {
        if (q == 0) throw std::domain_error("ParamCoeff: division by zero");
        for (auto& [k, c] : a.mono_) c /= q;
        return a;
    }

    friend bool operator==(const ParamCoeff& a, const ParamCoeff& b) { return a.mono_ == b.mono_; }
    friend bool operator!=(const ParamCoeff& a, const ParamCoeff& b) { return !(a == b); }
    // Arbitrary strict order, used only for map keys and canonical sorting.
    friend bool operator<(const ParamCoeff& a, const ParamCoeff& b) { return a.mono_ < b.mono_; }

    ParamCoeff pow(int e) const {
        ParamCoeff r(1);
        for (int i = 0; i < e; ++i) r *= *this;
        return r;
    }

    // Ring homomorphism sending alpha -> aval, beta -> bval; covers both the
    // numeric specializations and the q-deformation (q as alpha with beta=0).
    ParamCoeff substituted(const ParamCoeff& aval, const ParamCoeff& bval) const {
        ParamCoeff r;
        for (const auto& [k, q] : mono_)
            r += ParamCoeff(q) * aval.pow(k.first) * bval.pow(k.second);
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

} // namespace qshuf
