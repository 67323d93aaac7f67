#pragma once

#include <qshuf/numeric.hpp>

#include <span>
#include <vector>

namespace qshuf {

// Combinatorial number tables. The binomial uses the combinatorial
// convention throughout: zero outside 0 <= k <= n (in particular for
// negative arguments), which is the reading under which the alternating
// sums below collapse to their closed forms.
inline Integer binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Integer r = 1;
    for (long long i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1; // exact: r is C(n, i+1) * (product of later factors)
    }
    return r;
}

inline Integer multinomial(int n, std::span<const int> parts) {
    long long sum = 0;
    for (int p : parts) {
        if (p < 0) throw std::invalid_argument("multinomial: negative part");
        sum += p;
    }
    if (sum != n) throw std::invalid_argument("multinomial: parts do not sum to n");
    Integer r = 1;
    long long acc = 0;
    for (int p : parts) {
        acc += p;
        r *= binomial(acc, p);
    }
    return r;
}

// Signed Stirling numbers of the first kind: coefficients of the falling
// factorial, s(n,k) = s(n-1,k-1) - (n-1) s(n-1,k).
inline Integer stirling1_signed(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    std::vector<Integer> row{1}; // s(0,0)
    for (int m = 1; m <= n; ++m) {
        std::vector<Integer> next(m + 1, 0);
        for (int j = 0; j <= m; ++j) {
            Integer a = (j >= 1) ? row[j - 1] : Integer(0);
            Integer b = (j < (int)row.size()) ? row[j] : Integer(0);
            next[j] = a - Integer(m - 1) * b;
        }
        row = std::move(next);
    }
    return row[k];
}

// b-nomial coefficient: coefficient of x^p in (1 + x + ... + x^{b-1})^n.
inline Integer bnomial(int b, int n, int p) {
    if (b < 1) throw std::invalid_argument("bnomial: base must be >= 1");
    if (n < 0) throw std::invalid_argument("bnomial: negative exponent");
    if (p < 0 || p > (b - 1) * n) return 0;
    std::vector<Integer> c{1};
    for (int i = 0; i < n; ++i) {
        std::vector<Integer> next(std::min<size_t>(c.size() + b - 1, p + 1), 0);
        for (size_t j = 0; j < c.size(); ++j) {
            if (c[j] == 0) continue;
            for (int d = 0; d < b && j + d < next.size(); ++d) next[j + d] += c[j];
        }
        c = std::move(next);
    }
    return p < (int)c.size() ? c[p] : Integer(0);
}

// The alternating sum F_b(n,k,r) = sum_i (-1)^i C(n+1,i) C(n+bk-bi-r, n),
// evaluated literally. C(n+j, n) vanishes for j < 0 under the combinatorial
// convention, which is what makes the closed forms below exact:
//   b = 2: F_2(n,k,r) = C(n+1, 2k-r)
//   general b: F_b(n,k,r) = bnomial(b, n+1, bk-r)   (the "amazing matrix")
inline Integer eulerian_sum_F(int b, int n, int k, int r) {
    if (b < 1) throw std::invalid_argument("eulerian_sum_F: b must be >= 1");
    Integer total = 0;
    for (int i = 0; i <= k; ++i) {
        long long j = (long long)b * k - (long long)b * i - r;
        if (j < 0) continue;
        Integer term = binomial(n + 1, i) * binomial(n + j, n);
        total += (i % 2 == 0) ? term : -term;
    }
    return total;
}

enum class CountKind { binomial, multinomial, stirling1_signed, bnomial };

// Uniform front end over the tables; arity is checked per kind.
inline Integer count(CountKind kind, std::span<const long long> args) {
    switch (kind) {
    case CountKind::binomial:
        if (args.size() != 2) throw std::invalid_argument("count(binomial): expected 2 arguments");
        if (args[0] < 0) throw std::invalid_argument("count(binomial): n must be >= 0");
        return binomial(args[0], args[1]);
    case CountKind::multinomial: {
        if (args.empty()) throw std::invalid_argument("count(multinomial): expected n, parts...");
        std::vector<int> parts(args.begin() + 1, args.end());
        return multinomial((int)args[0], parts);
    }
    case CountKind::stirling1_signed:
        if (args.size() != 2) throw std::invalid_argument("count(stirling1_signed): expected 2 arguments");
        return stirling1_signed((int)args[0], (int)args[1]);
    case CountKind::bnomial:
        if (args.size() != 3) throw std::invalid_argument("count(bnomial): expected 3 arguments");
        if (args[1] < 0) throw std::invalid_argument("count(bnomial): n must be >= 0");
        return bnomial((int)args[0], (int)args[1], (int)args[2]);
    }
    throw std::invalid_argument("count: unknown kind");
}

} // namespace qshuf
