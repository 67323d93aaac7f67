#pragma once

#include <qshuf/numeric.hpp>

namespace qshuf {

// Exact Gaussian integer arithmetic; no rounding ever happens here.
struct GaussInt {
    Integer re = 0;
    Integer im = 0;

    friend GaussInt operator+(const GaussInt& a, const GaussInt& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussInt operator*(const GaussInt& a, const GaussInt& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const GaussInt& a, const GaussInt& b) {
        return a.re == b.re && a.im == b.im;
    }

    GaussInt pow(int e) const {
        GaussInt r{1, 0}, base = *this;
        while (e > 0) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }
};

inline GaussInt gauss_i() { return {0, 1}; }

} // namespace qshuf
