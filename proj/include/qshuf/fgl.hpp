#pragma once

#include <qshuf/gauss_int.hpp>
#include <qshuf/param_coeff.hpp>
#include <qshuf/series.hpp>

#include <cstdio>
#include <string>
#include <vector>

namespace qshuf {

// Coefficients c_1..c_N of the series f(x) = x + c_2 x^2 + ... attached to
// the formal group law F(x,y) = (x + y + alpha x y) / (1 - beta x y):
// f is the compositional inverse of the group logarithm
//   g(x) = integral dx / (1 + alpha x + beta x^2),
// computed here by exact series reversion. Entry [0] is zero so that c[n]
// is the degree-n coefficient. The Eulerian enumeration provides the
// independent oracle: c_n = reduce_sym(E_n(s,t)) / n!.
inline std::vector<ParamCoeff> fgl_coefficients(int N) {
    if (N < 1) throw std::invalid_argument("fgl_coefficients: N must be >= 1");
    TruncSeries<ParamCoeff> den(N);
    den[0] = ParamCoeff(1);
    if (N >= 1) den[1] = ParamCoeff::alpha();
    if (N >= 2) den[2] = ParamCoeff::beta();
    TruncSeries<ParamCoeff> g = integrate(inverse(den, 1));
    TruncSeries<ParamCoeff> f = revert(g);
    std::vector<ParamCoeff> c(N + 1);
    for (int n = 1; n <= N; ++n) c[n] = f[n];
    return c;
}

// A coefficient list c_1..c_N (index 0 unused) plus a stable tag; the tag
// and the coefficients together form the fingerprint that keys transition
// caches.
struct CoeffList {
    std::vector<ParamCoeff> c; // size N+1, c[0] = 0
    std::string tag;

    int max_degree() const { return (int)c.size() - 1; }
    const ParamCoeff& at(int k) const {
        if (k < 1 || k >= (int)c.size())
            throw std::invalid_argument("CoeffList: degree out of range");
        return c[k];
    }

    std::string fingerprint() const {
        // FNV-1a over a canonical rendering; collisions are irrelevant at
        // the handful of modes in play but the full text keeps it honest.
        std::string repr = tag + "|";
        for (size_t k = 1; k < c.size(); ++k) {
            for (const auto& [e, q] : c[k].monomials())
                repr += std::to_string(e.first) + "," + std::to_string(e.second) + ":" +
                        rational_str(q) + ";";
            repr += "|";
        }
        unsigned long long h = 1469598103934665603ull;
        for (unsigned char ch : repr) {
            h ^= ch;
            h *= 1099511628211ull;
        }
        char buf[17];
        snprintf(buf, sizeof buf, "%016llx", h);
        return buf;
    }
};

inline CoeffList coeff_mode_fgl(int N) {
    return {fgl_coefficients(N), "fgl"};
}

inline CoeffList substituted_mode(const CoeffList& base, const ParamCoeff& a,
                                  const ParamCoeff& b, std::string tag) {
    CoeffList out;
    out.tag = std::move(tag);
    out.c.resize(base.c.size());
    for (size_t k = 1; k < base.c.size(); ++k) out.c[k] = base.c[k].substituted(a, b);
    return out;
}

// tanh: (alpha, beta) = (0, -1); block-shuffle coefficients.
inline CoeffList coeff_mode_tanh(int N) {
    return substituted_mode(coeff_mode_fgl(N), 0, -1, "tanh");
}

// exp - 1: (alpha, beta) = (1, 0); plain quasi-shuffle, c_n = 1/n!.
inline CoeffList coeff_mode_exp(int N) {
    return substituted_mode(coeff_mode_fgl(N), 1, 0, "exp");
}

// (e^{qx} - 1)/q with q kept symbolic as alpha: (alpha, beta) = (alpha, 0).
inline CoeffList coeff_mode_qexp(int N) {
    return substituted_mode(coeff_mode_fgl(N), ParamCoeff::alpha(), 0, "qexp");
}

// The identity series x: c_1 = 1, the rest zero. Its dual basis is the
// phi-dual basis itself.
inline CoeffList coeff_mode_identity(int N) {
    CoeffList out;
    out.tag = "identity";
    out.c.resize(N + 1);
    out.c[1] = ParamCoeff(1);
    return out;
}

inline CoeffList coeff_mode(const std::string& name, int N) {
    if (name == "fgl") return coeff_mode_fgl(N);
    if (name == "tanh") return coeff_mode_tanh(N);
    if (name == "exp") return coeff_mode_exp(N);
    if (name == "qexp") return coeff_mode_qexp(N);
    if (name == "identity") return coeff_mode_identity(N);
    throw std::invalid_argument("unknown coefficient mode: " + name);
}

// Series composition f(g(x)) of two coefficient lists (both with c_0 = 0).
inline CoeffList composed(const CoeffList& f, const CoeffList& g) {
    const int N = std::min(f.max_degree(), g.max_degree());
    TruncSeries<ParamCoeff> fs(N), gs(N);
    for (int k = 1; k <= N; ++k) {
        fs[k] = f.c[k];
        gs[k] = g.c[k];
    }
    TruncSeries<ParamCoeff> h = compose(fs, gs);
    CoeffList out;
    out.tag = f.tag + "." + g.tag;
    out.c.resize(N + 1);
    for (int k = 1; k <= N; ++k) out.c[k] = h[k];
    return out;
}

// Closed-form ribbon coefficient of Y_n in tanh mode: the coefficient of
// any ribbon R_J with l(J) = r is
//     -2^{-n} Re( i^r (1+i)^{n+1} ),
// computed exactly with Gaussian integers. The sign in front is normative:
// the variant with a leading +2^{-n} is inconsistent with the series route
// (the suites certify this at (n,r) = (2,1)).
inline Rational ribbon_closed_coefficient(int n, int r) {
    if (r < 1 || r > n) throw std::invalid_argument("ribbon_closed_coefficient: need 1 <= r <= n");
    GaussInt z = gauss_i().pow(r) * GaussInt{1, 1}.pow(n + 1);
    return Rational(-z.re) / int_pow(2, n);
}

// The bivariate addition law f(x+y) = F_alpha_beta(f(x), f(y)) checked as an
// exact identity of truncated series in two variables.
inline bool fgl_addition_law_holds(const std::vector<ParamCoeff>& c, int order) {
    TruncSeries<ParamCoeff> f(order);
    for (int k = 1; k <= order && k < (int)c.size(); ++k) f[k] = c[k];
    using B = BivarSeries<ParamCoeff>;
    B lhs = B::from_x_plus_y(f, order);
    B fx = B::from_x(f, order), fy = B::from_y(f, order);
    B prod = fx * fy;
    // (fx + fy + alpha fx fy) * sum_k beta^k (fx fy)^k; the product has
    // valuation 2, so the geometric tail stops at k = order/2.
    B num = fx + fy + prod.scaled_by(ParamCoeff::alpha());
    B geo(order);
    geo.at(0, 0) = ParamCoeff(1);
    B pw(order);
    pw.at(0, 0) = ParamCoeff(1);
    for (int k = 1; 2 * k <= order; ++k) {
        pw = pw * prod;
        geo += pw.scaled_by(ParamCoeff::beta().pow(k));
    }
    return lhs == num * geo;
}

} // namespace qshuf
