#pragma once

#include <qshuf/param_coeff.hpp>

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

namespace qshuf {

// Index sets. Compositions, words over the positive integers and packed
// words all share the same carrier; the semantics live in the functions
// that consume them.
using Composition = std::vector<int>;
using Word = std::vector<int>;
using PackedWord = std::vector<int>;
using RowWord = std::vector<std::vector<int>>; // word whose letters are matrix rows

// Frozen serialization order for packed words: finest first (largest
// maximal value), then lexicographic. This is also the elimination order
// of the XX -> M transition.
struct PackedWordLess {
    bool operator()(const PackedWord& a, const PackedWord& b) const {
        int ma = a.empty() ? 0 : *std::max_element(a.begin(), a.end());
        int mb = b.empty() ? 0 : *std::max_element(b.begin(), b.end());
        if (ma != mb) return ma > mb;
        return a < b;
    }
};

// Finitely supported map from basis keys to ParamCoeff. Zero coefficients
// are erased eagerly, so operator== is exact equality of elements.
template <class Key, class Cmp = std::less<Key>>
class LinComb {
public:
    using Map = std::map<Key, ParamCoeff, Cmp>;

    LinComb() = default;
    static LinComb single(Key k, ParamCoeff c = ParamCoeff(1)) {
        LinComb r;
        r.add(std::move(k), std::move(c));
        return r;
    }

    void add(const Key& k, const ParamCoeff& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    const Map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    ParamCoeff coeff(const Key& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? ParamCoeff() : it->second;
    }

    LinComb& operator+=(const LinComb& o) {
        for (const auto& [k, c] : o.terms_) add(k, c);
        return *this;
    }
    LinComb& operator-=(const LinComb& o) {
        for (const auto& [k, c] : o.terms_) add(k, -c);
        return *this;
    }
    friend LinComb operator+(LinComb a, const LinComb& b) { a += b; return a; }
    friend LinComb operator-(LinComb a, const LinComb& b) { a -= b; return a; }
    friend LinComb operator*(const LinComb& a, const ParamCoeff& c) {
        LinComb r;
        for (const auto& [k, v] : a.terms_) r.add(k, v * c);
        return r;
    }
    friend LinComb operator*(const ParamCoeff& c, const LinComb& a) { return a * c; }
    friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LinComb& a, const LinComb& b) { return !(a == b); }

    LinComb substituted(const ParamCoeff& aval, const ParamCoeff& bval) const {
        LinComb r;
        for (const auto& [k, c] : terms_) r.add(k, c.substituted(aval, bval));
        return r;
    }

    template <class F>
    auto map_keys(F&& f) const {
        using Key2 = std::decay_t<decltype(f(std::declval<const Key&>()))>;
        LinComb<Key2> r;
        for (const auto& [k, c] : terms_) r.add(f(k), c);
        return r;
    }

private:
    Map terms_;
};

using CompCombo = LinComb<Composition>;                 // lexicographic key order
using WordCombo = LinComb<Word>;
using PackedCombo = LinComb<PackedWord, PackedWordLess>;
using RowCombo = LinComb<RowWord>;
using TensorCombo = LinComb<std::pair<Composition, Composition>>;

} // namespace qshuf
