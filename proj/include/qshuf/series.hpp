#pragma once

#include <qshuf/numeric.hpp>
#include <qshuf/tables.hpp>

#include <vector>

namespace qshuf {

// Truncated power series over a commutative ring R containing the
// rationals (R must support +, -, *, == and division by Rational).
// The truncation order is explicit at every call site: a series of order N
// carries coefficients c_0..c_N and no operation ever reads or writes
// beyond N.
template <class R>
class TruncSeries {
public:
    explicit TruncSeries(int order) : c_(order + 1) {
        if (order < 0) throw std::invalid_argument("TruncSeries: negative order");
    }

    static TruncSeries x(int order) {
        TruncSeries s(order);
        if (order >= 1) s.c_[1] = R(1);
        return s;
    }

    int order() const { return (int)c_.size() - 1; }
    const R& operator[](int k) const { return c_.at(k); }
    R& operator[](int k) { return c_.at(k); }

    TruncSeries& operator+=(const TruncSeries& o) {
        check_order(o);
        for (int k = 0; k <= order(); ++k) c_[k] = c_[k] + o.c_[k];
        return *this;
    }
    TruncSeries& operator-=(const TruncSeries& o) {
        check_order(o);
        for (int k = 0; k <= order(); ++k) c_[k] = c_[k] - o.c_[k];
        return *this;
    }
    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { a += b; return a; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { a -= b; return a; }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        a.check_order(b);
        TruncSeries r(a.order());
        for (int i = 0; i <= a.order(); ++i) {
            if (a.c_[i] == R()) continue;
            for (int j = 0; i + j <= a.order(); ++j) r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
        }
        return r;
    }
    friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.c_ == b.c_; }

    TruncSeries scaled(const Rational& q) const {
        TruncSeries r(order());
        for (int k = 0; k <= order(); ++k) r.c_[k] = c_[k] * q;
        return r;
    }

private:
    void check_order(const TruncSeries& o) const {
        if (o.order() != order())
            throw std::invalid_argument("TruncSeries: mixed truncation orders");
    }
    std::vector<R> c_;
};

template <class R>
TruncSeries<R> derivative(const TruncSeries<R>& a) {
    TruncSeries<R> r(a.order());
    for (int k = 1; k <= a.order(); ++k) r[k - 1] = a[k] * Rational(k);
    return r;
}

// Antiderivative with zero constant term; the order-N coefficient of the
// input is discarded (it would land at order N+1).
template <class R>
TruncSeries<R> integrate(const TruncSeries<R>& a) {
    TruncSeries<R> r(a.order());
    for (int k = 1; k <= a.order(); ++k) r[k] = a[k - 1] / Rational(k);
    return r;
}

// exp of a series with zero constant term.
template <class R>
TruncSeries<R> exp_series(const TruncSeries<R>& u) {
    if (!(u[0] == R())) throw std::domain_error("exp_series: nonzero constant term");
    TruncSeries<R> r(u.order()), pw(u.order());
    r[0] = R(1);
    pw[0] = R(1);
    for (int k = 1; k <= u.order(); ++k) {
        pw = pw * u;
        r += pw.scaled(Rational(1) / factorial(k));
    }
    return r;
}

// log(1 + u) for u with zero constant term.
template <class R>
TruncSeries<R> log1p_series(const TruncSeries<R>& u) {
    if (!(u[0] == R())) throw std::domain_error("log1p_series: nonzero constant term");
    TruncSeries<R> r(u.order()), pw(u.order());
    pw[0] = R(1);
    for (int k = 1; k <= u.order(); ++k) {
        pw = pw * u;
        r += pw.scaled(Rational(k % 2 == 1 ? 1 : -1, k));
    }
    return r;
}

// Composition f(g) for g with zero constant term (Horner form).
template <class R>
TruncSeries<R> compose(const TruncSeries<R>& f, const TruncSeries<R>& g) {
    if (!(g[0] == R())) throw std::domain_error("compose: inner series has constant term");
    TruncSeries<R> r(f.order());
    for (int k = f.order(); k >= 0; --k) {
        r = r * g;
        r[0] = r[0] + f[k];
    }
    return r;
}

// Multiplicative inverse 1/a for a with invertible rational constant term.
template <class R>
TruncSeries<R> inverse(const TruncSeries<R>& a, const Rational& a0) {
    if (a0 == 0) throw std::domain_error("inverse: constant term not invertible");
    TruncSeries<R> b(a.order());
    b[0] = R(1) / a0;
    for (int n = 1; n <= a.order(); ++n) {
        R acc{};
        for (int k = 1; k <= n; ++k) acc = acc + a[k] * b[n - k];
        b[n] = -(acc / a0);
    }
    return b;
}

// Compositional inverse: returns f with g(f(x)) = x to the shared order.
// Requires g_0 = 0 and g_1 = 1 (all uses in this library are normalized);
// coefficients are solved degree by degree.
template <class R>
TruncSeries<R> revert(const TruncSeries<R>& g) {
    if (!(g[0] == R())) throw std::domain_error("revert: nonzero constant term");
    if (!(g[1] == R(1))) throw std::domain_error("revert: leading coefficient must be 1");
    const int N = g.order();
    TruncSeries<R> f(N);
    if (N >= 1) f[1] = R(1);
    for (int n = 2; n <= N; ++n) {
        // [x^n] g(f) = f_n + (contribution of g_k f^k for k >= 2, which only
        // involves f_1..f_{n-1}); force the total to zero.
        TruncSeries<R> comp = compose(g, f);
        f[n] = f[n] - comp[n];
    }
    return f;
}

// Truncated series in two variables x, y, cut at total degree N. Carrier for
// the bivariate addition-law checks.
template <class R>
class BivarSeries {
public:
    explicit BivarSeries(int order) : order_(order), c_((order + 1) * (order + 2) / 2) {}

    int order() const { return order_; }
    const R& at(int i, int j) const { return c_.at(idx(i, j)); }
    R& at(int i, int j) { return c_.at(idx(i, j)); }

    static BivarSeries from_x(const TruncSeries<R>& f, int order) {
        BivarSeries b(order);
        for (int k = 0; k <= std::min(order, f.order()); ++k) b.at(k, 0) = f[k];
        return b;
    }
    static BivarSeries from_y(const TruncSeries<R>& f, int order) {
        BivarSeries b(order);
        for (int k = 0; k <= std::min(order, f.order()); ++k) b.at(0, k) = f[k];
        return b;
    }
    // f(x + y): expands each power of (x+y) by binomials.
    static BivarSeries from_x_plus_y(const TruncSeries<R>& f, int order) {
        BivarSeries b(order);
        for (int k = 0; k <= std::min(order, f.order()); ++k)
            for (int i = 0; i <= k; ++i)
                b.at(i, k - i) = b.at(i, k - i) + f[k] * Rational(binomial(k, i));
        return b;
    }

    BivarSeries& operator+=(const BivarSeries& o) {
        check_order(o);
        for (size_t k = 0; k < c_.size(); ++k) c_[k] = c_[k] + o.c_[k];
        return *this;
    }
    friend BivarSeries operator+(BivarSeries a, const BivarSeries& b) { a += b; return a; }
    friend BivarSeries operator*(const BivarSeries& a, const BivarSeries& b) {
        a.check_order(b);
        BivarSeries r(a.order_);
        for (int d1 = 0; d1 <= a.order_; ++d1)
            for (int i1 = 0; i1 <= d1; ++i1) {
                const R& ca = a.at(i1, d1 - i1);
                if (ca == R()) continue;
                for (int d2 = 0; d1 + d2 <= a.order_; ++d2)
                    for (int i2 = 0; i2 <= d2; ++i2) {
                        const R& cb = b.at(i2, d2 - i2);
                        if (cb == R()) continue;
                        r.at(i1 + i2, d1 + d2 - i1 - i2) =
                            r.at(i1 + i2, d1 + d2 - i1 - i2) + ca * cb;
                    }
            }
        return r;
    }
    friend bool operator==(const BivarSeries& a, const BivarSeries& b) { return a.c_ == b.c_; }

    BivarSeries scaled_by(const R& c) const {
        BivarSeries r(order_);
        for (size_t k = 0; k < c_.size(); ++k) r.c_[k] = c_[k] * c;
        return r;
    }

private:
    size_t idx(int i, int j) const {
        if (i < 0 || j < 0 || i + j > order_)
            throw std::out_of_range("BivarSeries: index outside truncation");
        int d = i + j;
        return (size_t)d * (d + 1) / 2 + i;
    }
    void check_order(const BivarSeries& o) const {
        if (o.order_ != order_)
            throw std::invalid_argument("BivarSeries: mixed truncation orders");
    }

    int order_;
    std::vector<R> c_;
};

} // namespace qshuf
