#pragma once

#include <qshuf/combinat.hpp>
#include <qshuf/fgl.hpp>
#include <qshuf/lincomb.hpp>

#include <map>
#include <vector>

namespace qshuf {

// Noncommutative symmetric functions, held as linear combinations of
// compositions in either the complete (S) or ribbon (R) basis.
enum class NBasis { S, R };

struct NcsfElem {
    NBasis basis = NBasis::S;
    CompCombo terms;

    friend bool operator==(const NcsfElem& a, const NcsfElem& b) {
        return a.basis == b.basis && a.terms == b.terms;
    }
};

inline NcsfElem ncsf_unit(NBasis b = NBasis::S) {
    return {b, CompCombo::single(Composition{})};
}

// Free-algebra product: S^I S^J = S^{I.J} by concatenation of indices.
inline CompCombo concat_product(const CompCombo& a, const CompCombo& b) {
    CompCombo r;
    for (const auto& [I, ci] : a.terms())
        for (const auto& [J, cj] : b.terms()) {
            Composition K = I;
            K.insert(K.end(), J.begin(), J.end());
            r.add(K, ci * cj);
        }
    return r;
}

// Basis changes, with the frozen coarsening convention: S^I is the sum of
// ribbons over the coarsenings of I, and the inverse is the alternating sum
// over coarsenings.
inline CompCombo s_to_r(const CompCombo& a) {
    CompCombo r;
    for (const auto& [I, c] : a.terms())
        for (const auto& J : coarsenings(I)) r.add(J, c);
    return r;
}

inline CompCombo r_to_s(const CompCombo& a) {
    CompCombo r;
    for (const auto& [J, c] : a.terms())
        for (const auto& I : coarsenings(J)) {
            int sign = ((length(J) - length(I)) % 2 == 0) ? 1 : -1;
            r.add(I, c * Rational(sign));
        }
    return r;
}

inline NcsfElem basis_convert(const NcsfElem& e, NBasis target) {
    if (e.basis == target) return e;
    if (target == NBasis::R) return {NBasis::R, s_to_r(e.terms)};
    return {NBasis::S, r_to_s(e.terms)};
}

inline NcsfElem ncsf_product(const NcsfElem& a, const NcsfElem& b) {
    NBasis out = (a.basis == b.basis) ? a.basis : NBasis::S;
    CompCombo p = concat_product(basis_convert(a, NBasis::S).terms,
                                 basis_convert(b, NBasis::S).terms);
    if (out == NBasis::R) return {NBasis::R, s_to_r(p)};
    return {NBasis::S, p};
}

// Sum of all S^I (resp. R_I) with |I| = n and l(I) = k.
inline NcsfElem length_graded_sum(NBasis basis, int n, int k) {
    if (k < 1 || k > n) throw std::invalid_argument("length_graded_sum: need 1 <= k <= n");
    NcsfElem e{basis, {}};
    for (const auto& I : compositions(n))
        if (length(I) == k) e.terms.add(I, ParamCoeff(1));
    return e;
}

// Tensor-square arithmetic in S (x) S coordinates.
inline TensorCombo algebra_mul(const TensorCombo& a, const TensorCombo& b) {
    TensorCombo r;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            Composition L = ka.first, R = ka.second;
            L.insert(L.end(), kb.first.begin(), kb.first.end());
            R.insert(R.end(), kb.second.begin(), kb.second.end());
            r.add({std::move(L), std::move(R)}, ca * cb);
        }
    return r;
}

inline CompCombo algebra_mul(const CompCombo& a, const CompCombo& b) {
    return concat_product(a, b);
}

// Coproduct on the S basis: Delta S_n = sum_{i+j=n} S_i (x) S_j extended as
// an algebra morphism (S_0 acts as the unit on its side).
inline TensorCombo coproduct_S(const CompCombo& a) {
    TensorCombo out;
    for (const auto& [I, c] : a.terms()) {
        TensorCombo acc = TensorCombo::single({Composition{}, Composition{}}, c);
        for (int part : I) {
            TensorCombo split;
            for (int i = 0; i <= part; ++i) {
                Composition L, R;
                if (i > 0) L.push_back(i);
                if (part - i > 0) R.push_back(part - i);
                split.add({std::move(L), std::move(R)}, ParamCoeff(1));
            }
            acc = algebra_mul(acc, split);
        }
        out += acc;
    }
    return out;
}

inline TensorCombo coproduct(const NcsfElem& e) {
    return coproduct_S(basis_convert(e, NBasis::S).terms);
}

// Series sum_{n>=0} of homogeneous elements with a rational constant term;
// component n is homogeneous of degree n. This is the completed algebra in
// which sigma_1 is inverted and tanh-like quotients are formed.
template <class E>
class GradedSeries {
public:
    explicit GradedSeries(int order, Rational c0 = 0) : order_(order), c0_(std::move(c0)), comp_(order + 1) {
        if (order < 0) throw std::invalid_argument("GradedSeries: negative order");
    }

    int order() const { return order_; }
    const Rational& constant() const { return c0_; }
    Rational& constant() { return c0_; }
    const E& at(int n) const { return comp_.at(n); }
    E& at(int n) { return comp_.at(n); }

    GradedSeries& operator+=(const GradedSeries& o) {
        check(o);
        c0_ += o.c0_;
        for (int n = 1; n <= order_; ++n) comp_[n] += o.comp_[n];
        return *this;
    }
    GradedSeries& operator-=(const GradedSeries& o) {
        check(o);
        c0_ -= o.c0_;
        for (int n = 1; n <= order_; ++n) comp_[n] -= o.comp_[n];
        return *this;
    }
    friend GradedSeries operator+(GradedSeries a, const GradedSeries& b) { a += b; return a; }
    friend GradedSeries operator-(GradedSeries a, const GradedSeries& b) { a -= b; return a; }

    friend GradedSeries operator*(const GradedSeries& a, const GradedSeries& b) {
        a.check(b);
        GradedSeries r(a.order_, a.c0_ * b.c0_);
        for (int n = 1; n <= a.order_; ++n) {
            E acc = b.comp_[n] * ParamCoeff(a.c0_);
            acc += a.comp_[n] * ParamCoeff(b.c0_);
            for (int i = 1; i < n; ++i) acc += algebra_mul(a.comp_[i], b.comp_[n - i]);
            r.comp_[n] = std::move(acc);
        }
        return r;
    }

    GradedSeries scaled(const ParamCoeff& c) const {
        if (c0_ != 0 && !c.is_rational())
            throw std::domain_error("GradedSeries: constant term requires rational scalar");
        GradedSeries r(order_, c0_ * c.rational_part());
        for (int n = 1; n <= order_; ++n) r.comp_[n] = comp_[n] * c;
        return r;
    }

    // Multiplicative inverse; needs an invertible rational constant term.
    GradedSeries inverse() const {
        if (c0_ == 0) throw std::domain_error("GradedSeries: inverse of series with zero constant");
        GradedSeries b(order_, Rational(1) / c0_);
        for (int n = 1; n <= order_; ++n) {
            E acc = comp_[n] * ParamCoeff(b.c0_);
            for (int k = 1; k < n; ++k) acc += algebra_mul(comp_[k], b.comp_[n - k]);
            b.comp_[n] = acc * ParamCoeff(Rational(-1) / c0_);
        }
        return b;
    }

    friend bool operator==(const GradedSeries& a, const GradedSeries& b) {
        return a.order_ == b.order_ && a.c0_ == b.c0_ && a.comp_ == b.comp_;
    }

private:
    void check(const GradedSeries& o) const {
        if (o.order_ != order_) throw std::invalid_argument("GradedSeries: mixed orders");
    }

    int order_;
    Rational c0_;
    std::vector<E> comp_;
};

using GradedNcsf = GradedSeries<CompCombo>;
using GradedTensor = GradedSeries<TensorCombo>;

// sigma_1 = 1 + S_1 + S_2 + ...
inline GradedNcsf sigma1(int N) {
    GradedNcsf s(N, 1);
    for (int n = 1; n <= N; ++n) s.at(n) = CompCombo::single(Composition{n});
    return s;
}

// phi = log sigma_1, degree by degree. The coefficient of S^I in phi_n is
// (-1)^{l(I)-1} / l(I), but it is computed here through the generic series
// log to keep one code path for the completed-algebra calculus.
inline GradedNcsf phi_series(int N) {
    GradedNcsf u = sigma1(N);
    u.constant() = 0; // u = sigma_1 - 1
    GradedNcsf acc(N), pw(N, 1);
    for (int k = 1; k <= N; ++k) {
        pw = pw * u;
        acc += pw.scaled(ParamCoeff(Rational(k % 2 == 1 ? 1 : -1, k)));
    }
    return acc;
}

// Y = sum_k c_k phi^k for a coefficient list with c_1 = 1; each component
// lands in the S basis. With the formal-group coefficients this is the
// deformed basis; with tanh coefficients the block-shuffle one.
inline GradedNcsf build_Y(const CoeffList& c, int N) {
    if (c.max_degree() < N)
        throw std::invalid_argument("build_Y: coefficient list shorter than requested order");
    if (!(c.at(1) == ParamCoeff(1)))
        throw std::domain_error("build_Y: normalization requires c_1 = 1");
    const GradedNcsf phi = phi_series(N);
    GradedNcsf acc(N), pw(N, 1);
    for (int k = 1; k <= N; ++k) {
        pw = pw * phi;
        acc += pw.scaled(c.at(k));
    }
    return acc;
}

// Matrix of the products Y^J on the S^I basis in one degree, stored as
// sparse rows, together with its inverse. Rows and columns are indexed by
// compositions sorted by length and then by the canonical enumeration
// order, which makes the matrix block-unitriangular: Y^J = S^J + terms of
// strictly greater length.
struct Transition {
    int degree = 0;
    std::vector<Composition> order;               // length asc, canonical within
    std::map<Composition, CompCombo> y_to_s;      // J -> Y^J expanded in S
    std::map<Composition, CompCombo> s_to_y;      // J -> S^J expanded in Y coordinates
    std::map<Composition, CompCombo> x_to_m;      // I -> X_I expanded in M (transposed inverse)
};

inline Transition y_transition(int n, const CoeffList& c) {
    Transition t;
    t.degree = n;
    t.order = compositions(n);
    std::stable_sort(t.order.begin(), t.order.end(),
                     [](const Composition& a, const Composition& b) { return a.size() < b.size(); });

    const GradedNcsf y = build_Y(c, n);
    for (const auto& J : t.order) {
        CompCombo prod = CompCombo::single(Composition{});
        for (int part : J) prod = algebra_mul(prod, y.at(part));
        t.y_to_s[J] = std::move(prod);
    }
    // Back substitution from the finest compositions down: every
    // off-diagonal entry of a row points to a strictly longer composition.
    for (auto it = t.order.rbegin(); it != t.order.rend(); ++it) {
        const Composition& J = *it;
        CompCombo row = CompCombo::single(J);
        for (const auto& [I, coeff] : t.y_to_s.at(J).terms()) {
            if (I == J) continue;
            row -= t.s_to_y.at(I) * coeff;
        }
        t.s_to_y[J] = std::move(row);
    }
    for (const auto& [J, row] : t.s_to_y)
        for (const auto& [I, coeff] : row.terms()) t.x_to_m[I].add(J, coeff);
    return t;
}

// Tensor product of two graded series: degree-d component of a (x) b.
inline GradedTensor tensor_series(const GradedNcsf& a, const GradedNcsf& b) {
    if (a.order() != b.order()) throw std::invalid_argument("tensor_series: mixed orders");
    const int N = a.order();
    GradedTensor r(N, a.constant() * b.constant());
    auto left = [](const Composition& I) { return std::make_pair(I, Composition{}); };
    auto right = [](const Composition& J) { return std::make_pair(Composition{}, J); };
    for (int d = 1; d <= N; ++d) {
        TensorCombo acc;
        for (const auto& [I, c] : a.at(d).terms()) acc.add(left(I), c * b.constant());
        for (const auto& [J, c] : b.at(d).terms()) acc.add(right(J), c * a.constant());
        for (int i = 1; i < d; ++i)
            for (const auto& [I, ci] : a.at(i).terms())
                for (const auto& [J, cj] : b.at(d - i).terms())
                    acc.add({I, J}, ci * cj);
        r.at(d) = std::move(acc);
    }
    return r;
}

} // namespace qshuf
