#pragma once

#include <qshuf/lincomb.hpp>
#include <qshuf/numeric.hpp>

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

namespace qshuf {

inline int weight(const Composition& I) { return std::accumulate(I.begin(), I.end(), 0); }
inline int length(const Composition& I) { return (int)I.size(); }

// All compositions of n in the canonical enumeration order: first part
// largest first, recursively. For n = 3 this is (3), (2,1), (1,2), (1,1,1).
inline std::vector<Composition> compositions(int n) {
    if (n < 0) throw std::invalid_argument("compositions: negative weight");
    if (n == 0) return {Composition{}};
    std::vector<Composition> out;
    Composition cur;
    auto rec = [&](auto&& self, int rest) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int a = rest; a >= 1; --a) {
            cur.push_back(a);
            self(self, rest - a);
            cur.pop_back();
        }
    };
    rec(rec, n);
    return out;
}

// Descent set {i_1, i_1+i_2, ...} without the final weight; a bijection
// between compositions of n and subsets of {1..n-1}.
inline std::vector<int> descent_set(const Composition& I) {
    std::vector<int> d;
    int acc = 0;
    for (size_t k = 0; k + 1 < I.size(); ++k) {
        acc += I[k];
        d.push_back(acc);
    }
    return d;
}

inline Composition composition_from_descents(int n, const std::vector<int>& descents) {
    Composition I;
    int prev = 0;
    for (int d : descents) {
        if (d <= prev || d >= n) throw std::invalid_argument("composition_from_descents: bad set");
        I.push_back(d - prev);
        prev = d;
    }
    if (n > 0) I.push_back(n - prev);
    return I;
}

// All compositions coarser than I (including I): sums of consecutive
// blocks, i.e. the 2^{l(I)-1} subsets of the descent set.
//
// Order convention, frozen for the whole library: "J coarser than I" means
// descent_set(J) is a subset of descent_set(I); "finer" is the reverse.
inline std::vector<Composition> coarsenings(const Composition& I) {
    std::vector<Composition> out;
    const int l = length(I);
    if (l == 0) return {Composition{}};
    for (unsigned mask = 0; mask < (1u << (l - 1)); ++mask) {
        Composition J;
        int acc = I[0];
        for (int k = 1; k < l; ++k) {
            if (mask & (1u << (k - 1))) {
                acc += I[k]; // merge with previous block
            } else {
                J.push_back(acc);
                acc = I[k];
            }
        }
        J.push_back(acc);
        out.push_back(std::move(J));
    }
    return out;
}

struct CompStats {
    int length = 0;
    int even_parts = 0;
    int odd_parts = 0;
    int weight = 0;
};

inline CompStats comp_stats(const Composition& I) {
    CompStats s;
    s.length = (int)I.size();
    for (int p : I) {
        s.weight += p;
        (p % 2 == 0 ? s.even_parts : s.odd_parts)++;
    }
    return s;
}

inline bool is_packed(const PackedWord& u) {
    if (u.empty()) return true;
    int m = *std::max_element(u.begin(), u.end());
    std::vector<char> seen(m + 1, 0);
    for (int x : u) {
        if (x < 1) return false;
        seen[x] = 1;
    }
    for (int v = 1; v <= m; ++v)
        if (!seen[v]) return false;
    return true;
}

// Order-preserving relabelling of the occurring values onto {1..m}.
inline PackedWord pack(const Word& w) {
    std::vector<int> values = w;
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    PackedWord out(w.size());
    for (size_t j = 0; j < w.size(); ++j) {
        if (w[j] < 1) throw std::invalid_argument("pack: letters must be >= 1");
        out[j] = 1 + (int)(std::lower_bound(values.begin(), values.end(), w[j]) - values.begin());
    }
    return out;
}

// Occurrence composition of a packed word: part i counts the letters equal
// to i.
inline Composition eval_composition(const PackedWord& u) {
    int m = u.empty() ? 0 : *std::max_element(u.begin(), u.end());
    Composition ev(m, 0);
    for (int x : u) {
        if (x < 1 || x > m) throw std::invalid_argument("eval_composition: word is not packed");
        ev[x - 1]++;
    }
    for (int p : ev)
        if (p == 0) throw std::invalid_argument("eval_composition: word is not packed");
    return ev;
}

// A word coarser than u together with the evaluation pair (ev(u), ev(v)).
struct CoarseWord {
    PackedWord word;
    Composition from_ev; // ev(u)
    Composition to_ev;   // ev(v)
};

// All v = theta(u) for nondecreasing surjections theta on values; this is
// the value-merge order on packed words, the unique one projecting onto
// composition coarsening under ev. There are 2^{max(u)-1} of them.
inline std::vector<CoarseWord> coarse_words(const PackedWord& u) {
    const Composition ev = eval_composition(u);
    const int m = (int)ev.size();
    if (m == 0) return {{u, {}, {}}};
    std::vector<CoarseWord> out;
    for (unsigned mask = 0; mask < (1u << (m - 1)); ++mask) {
        // theta(v) = number of block starts at values <= v
        std::vector<int> theta(m + 1, 0);
        int blocks = 0;
        Composition to_ev;
        for (int v = 1; v <= m; ++v) {
            bool starts_block = (v == 1) || !(mask & (1u << (v - 2)));
            if (starts_block) {
                blocks++;
                to_ev.push_back(ev[v - 1]);
            } else {
                to_ev.back() += ev[v - 1];
            }
            theta[v] = blocks;
        }
        PackedWord w(u.size());
        for (size_t j = 0; j < u.size(); ++j) w[j] = theta[u[j]];
        out.push_back({std::move(w), ev, std::move(to_ev)});
    }
    return out;
}

// All packed words of a given length (ordered Bell many), in the frozen
// packed-word order. A letter may exceed everything seen so far (21 is
// packed), so this enumerates {1..n}^n and keeps the surjective words;
// lengths stay small enough that the slack does not matter.
inline std::vector<PackedWord> packed_words(int n) {
    std::vector<PackedWord> out;
    PackedWord cur;
    auto rec = [&](auto&& self) -> void {
        if ((int)cur.size() == n) {
            if (is_packed(cur)) out.push_back(cur);
            return;
        }
        for (int v = 1; v <= n; ++v) {
            cur.push_back(v);
            self(self);
            cur.pop_back();
        }
    };
    rec(rec);
    std::sort(out.begin(), out.end(), PackedWordLess{});
    return out;
}

// 0-1 column encoding of packed words: row i has a 1 in column j iff the
// j-th letter equals i.
struct PackedMatrix {
    std::vector<std::vector<int>> rows;
    int width = 0;
};

inline PackedMatrix word_matrix(const PackedWord& u) {
    const Composition ev = eval_composition(u); // validates packedness
    PackedMatrix m;
    m.width = (int)u.size();
    m.rows.assign(ev.size(), std::vector<int>(u.size(), 0));
    for (size_t j = 0; j < u.size(); ++j) m.rows[u[j] - 1][j] = 1;
    return m;
}

// Inverse of word_matrix; rejects anything that is not a packed one-1-per-
// column matrix.
inline PackedWord decode_matrix(const PackedMatrix& m) {
    for (const auto& row : m.rows) {
        if ((int)row.size() != m.width)
            throw std::invalid_argument("decode_matrix: ragged rows");
        if (std::all_of(row.begin(), row.end(), [](int x) { return x == 0; }))
            throw std::invalid_argument("decode_matrix: zero row");
    }
    PackedWord w(m.width);
    for (int j = 0; j < m.width; ++j) {
        int ones = 0, at = -1;
        for (size_t i = 0; i < m.rows.size(); ++i) {
            int x = m.rows[i][j];
            if (x == 0) continue;
            if (x != 1) throw std::invalid_argument("decode_matrix: entry exceeds 1");
            ones++;
            at = (int)i;
        }
        if (ones != 1) throw std::invalid_argument("decode_matrix: column must contain exactly one 1");
        w[j] = at + 1;
    }
    return w;
}

// Block matrix [[P, 0], [0, Q]] split into its top and bottom row words,
// ready to be shuffled against each other.
struct BlockShift {
    std::vector<std::vector<int>> top;
    std::vector<std::vector<int>> bottom;
    int width = 0;
};

inline BlockShift block_shift(const PackedMatrix& p, const PackedMatrix& q) {
    BlockShift b;
    b.width = p.width + q.width;
    for (const auto& row : p.rows) {
        std::vector<int> r = row;
        r.resize(b.width, 0);
        b.top.push_back(std::move(r));
    }
    for (const auto& row : q.rows) {
        std::vector<int> r(p.width, 0);
        r.insert(r.end(), row.begin(), row.end());
        b.bottom.push_back(std::move(r));
    }
    return b;
}

} // namespace qshuf
