#pragma once

#include <qshuf/json_io.hpp>
#include <qshuf/ncsf.hpp>
#include <qshuf/shuffle.hpp>
#include <qshuf/stpoly.hpp>
#include <qshuf/tables.hpp>

#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <string>

namespace qshuf {

// Quasi-symmetric functions in the monomial basis and in the X basis dual
// to the multiplicative Y basis.
enum class QBasis { M, X };

struct QsymElem {
    QBasis basis = QBasis::M;
    CompCombo terms;

    friend bool operator==(const QsymElem& a, const QsymElem& b) {
        return a.basis == b.basis && a.terms == b.terms;
    }
};

inline QsymElem qsym_unit(QBasis b = QBasis::M) {
    return {b, CompCombo::single(Composition{})};
}

// Monomial product: the quasi-shuffle, i.e. the star product at (1, 0).
inline QsymElem m_product(const QsymElem& a, const QsymElem& b) {
    if (a.basis != QBasis::M || b.basis != QBasis::M)
        throw std::invalid_argument("m_product: operands must be in the M basis");
    StarProduct<int> ctx;
    const auto [qa, qb] = specialize(StarSpecial::quasi_shuffle);
    CompCombo r;
    for (const auto& [I, ci] : a.terms.terms())
        for (const auto& [J, cj] : b.terms.terms())
            r += ctx.at(I, J, qa, qb) * (ci * cj);
    return {QBasis::M, r};
}

// Per-degree transition tables, cached in memory and optionally on disk
// (one JSON file per degree and coefficient-list fingerprint, written
// atomically via a temp file + rename). Readers share immutable tables.
class DualityCache {
public:
    DualityCache() = default;
    explicit DualityCache(std::filesystem::path dir) : dir_(std::move(dir)), use_disk_(true) {}

    std::shared_ptr<const Transition> degree(int n, const CoeffList& c) {
        const std::string fp = c.fingerprint();
        std::lock_guard<std::mutex> lock(mu_);
        auto it = mem_.find({n, fp});
        if (it != mem_.end()) return it->second;
        std::shared_ptr<const Transition> t;
        if (use_disk_) t = load(n, fp);
        if (!t) {
            t = std::make_shared<Transition>(y_transition(n, c));
            if (use_disk_) store(*t, fp, c.tag);
        }
        mem_[{n, fp}] = t;
        return t;
    }

    const std::filesystem::path& directory() const { return dir_; }
    bool disk_backed() const { return use_disk_; }

private:
    std::shared_ptr<const Transition> load(int n, const std::string& fp) const {
        std::filesystem::path file = dir_ / file_name(n, fp);
        std::ifstream in(file);
        if (!in) return nullptr;
        try {
            json j = json::parse(in);
            if (j.at("fingerprint").get<std::string>() != fp) return nullptr;
            return std::make_shared<Transition>(transition_from_json(j));
        } catch (const std::exception&) {
            return nullptr; // treat unreadable cache entries as misses
        }
    }

    void store(const Transition& t, const std::string& fp, const std::string& tag) const {
        std::error_code ec;
        std::filesystem::create_directories(dir_, ec);
        if (ec) return; // caching is best-effort
        json j = transition_to_json(t);
        j["fingerprint"] = fp;
        j["mode"] = tag;
        std::filesystem::path file = dir_ / file_name(t.degree, fp);
        std::filesystem::path tmp = file;
        tmp += ".tmp";
        {
            std::ofstream out(tmp);
            if (!out) return;
            out << j.dump();
        }
        std::filesystem::rename(tmp, file, ec);
    }

    static std::string file_name(int n, const std::string& fp) {
        return "deg" + std::to_string(n) + "-" + fp + ".json";
    }

    std::filesystem::path dir_;
    bool use_disk_ = false;
    mutable std::mutex mu_;
    std::map<std::pair<int, std::string>, std::shared_ptr<const Transition>> mem_;
};

// X_I expanded in the monomial basis: row I of the transposed inverse
// transition. In particular X_n = M_n for every n.
inline CompCombo x_expansion(const Composition& I, DualityCache& cache, const CoeffList& c) {
    const int n = weight(I);
    if (n == 0) return CompCombo::single(Composition{});
    return cache.degree(n, c)->x_to_m.at(I);
}

// Basis changes on (possibly inhomogeneous) elements, degree by degree.
inline QsymElem to_m(const QsymElem& e, DualityCache& cache, const CoeffList& c) {
    if (e.basis == QBasis::M) return e;
    CompCombo out;
    for (const auto& [I, coeff] : e.terms.terms()) out += x_expansion(I, cache, c) * coeff;
    return {QBasis::M, out};
}

inline QsymElem to_x(const QsymElem& e, DualityCache& cache, const CoeffList& c) {
    if (e.basis == QBasis::X) return e;
    // x-coordinates are y_to_s rows applied to m-coordinates:
    // x_I = sum_J <S^J in Y^I> m_J.
    std::map<int, CompCombo> by_degree;
    for (const auto& [J, coeff] : e.terms.terms()) by_degree[weight(J)].add(J, coeff);
    CompCombo out;
    for (const auto& [n, part] : by_degree) {
        if (n == 0) {
            out += part;
            continue;
        }
        auto t = cache.degree(n, c);
        for (const auto& [I, row] : t->y_to_s) {
            ParamCoeff x;
            for (const auto& [J, tij] : row.terms()) x += tij * part.coeff(J);
            out.add(I, x);
        }
    }
    return {QBasis::X, out};
}

// Product in the X basis, through the monomial route. The duality theorem
// says the result is star(I, J) read as an X-combination; the suites verify
// that exactly.
inline QsymElem x_product(const Composition& I, const Composition& J, DualityCache& cache,
                          const CoeffList& c) {
    QsymElem xi{QBasis::X, CompCombo::single(I)};
    QsymElem xj{QBasis::X, CompCombo::single(J)};
    QsymElem prod = m_product(to_m(xi, cache, c), to_m(xj, cache, c));
    return to_x(prod, cache, c);
}

// Duality pairing: <M_I, S^J> = delta_IJ extended bilinearly; X pairs with
// Y^J as <X_I, Y^J> = delta_IJ by construction.
inline ParamCoeff pairing(const QsymElem& q, const NcsfElem& f, DualityCache& cache,
                          const CoeffList& c) {
    const QsymElem qm = to_m(q, cache, c);
    const NcsfElem fs = basis_convert(f, NBasis::S);
    ParamCoeff acc;
    for (const auto& [I, ci] : qm.terms.terms()) acc += ci * fs.terms.coeff(I);
    return acc;
}

// The coalgebra morphism attached to a coefficient list: phi_I -> X_I
// extended linearly, computed in monomial coordinates. Composition law:
// psi(f) after psi(g) equals psi(f composed with g).
inline QsymElem psi_morphism(const CoeffList& c, const QsymElem& e, DualityCache& cache) {
    const CoeffList id = coeff_mode_identity(std::max(1, c.max_degree()));
    // Coordinates in the phi-dual basis are X coordinates for the identity
    // list; reinterpreting them as X indices for c lands back in M.
    QsymElem phi_coords = to_x(to_m(e, cache, id), cache, id);
    return to_m({QBasis::X, phi_coords.terms}, cache, c);
}

// The composition law of the coalgebra morphisms: applying psi_f and then
// psi_g realizes the composed series f.g, i.e. psi_g(psi_f(e)) equals
// psi_{f o g}(e). (With maps composed right-to-left this reads
// Psi_f o Psi_g = Psi_{g o f}; the two orders first differ at degree 4.)
inline bool psi_composition_holds(const CoeffList& f, const CoeffList& g, int max_degree,
                                  DualityCache& cache) {
    const CoeffList fg = composed(f, g);
    for (int n = 1; n <= max_degree; ++n)
        for (const auto& I : compositions(n)) {
            QsymElem e{QBasis::M, CompCombo::single(I)};
            QsymElem lhs = psi_morphism(g, psi_morphism(f, e, cache), cache);
            QsymElem rhs = psi_morphism(fg, e, cache);
            if (!(lhs == rhs)) return false;
        }
    return true;
}

// Closed formula for the powers of X_1 = M_1 in the generic mode:
// X_1^n = sum over compositions of multinomial(n; I) * prod_k E_{i_k} X_I
// with the Eulerian polynomials reduced to the (alpha, beta) ring.
inline QsymElem x1_power(int n) {
    if (n < 1) throw std::invalid_argument("x1_power: n must be >= 1");
    std::vector<ParamCoeff> eul(n + 1);
    for (int k = 1; k <= n; ++k) eul[k] = reduce_sym(eulerian_poly(k));
    QsymElem out{QBasis::X, {}};
    for (const auto& I : compositions(n)) {
        ParamCoeff c(Rational(multinomial(n, I)));
        for (int part : I) c *= eul[part];
        out.terms.add(I, c);
    }
    return out;
}

// Closed formula for X_{1^p} X_{1^q}. The beta exponent is
// (p+q-l1(I))/2 - l0(I): each even part i contributes alpha beta^{i/2-1}
// and each odd part beta^{(i-1)/2}, which the suites certify against the
// direct product (the variant without the -l0 term already fails at
// p = q = 1).
inline QsymElem x1p_x1q(int p, int q) {
    if (p < 1 || q < 1) throw std::invalid_argument("x1p_x1q: p, q must be >= 1");
    QsymElem out{QBasis::X, {}};
    for (const auto& I : compositions(p + q)) {
        const CompStats st = comp_stats(I);
        const int half = (p + q - st.odd_parts) / 2; // p+q and l1 always share parity
        const Integer bin = binomial(st.odd_parts, p - half);
        if (bin == 0) continue;
        out.terms.add(I, ParamCoeff::monomial(st.even_parts, half - st.even_parts, Rational(bin)));
    }
    return out;
}

// d_n = <X_{1^n}, S_n> via the generating series
// ((1+sy)/(1+ty))^{1/(s-t)} = exp( sum_k (-1)^{k-1} h_{k-1}(s,t) y^k / k ),
// with the complete homogeneous h reduced to the (alpha, beta) ring.
inline ParamCoeff d_coeff(int n) {
    if (n < 1) throw std::invalid_argument("d_coeff: n must be >= 1");
    TruncSeries<ParamCoeff> u(n);
    for (int k = 1; k <= n; ++k)
        u[k] = reduce_sym(st_complete_homogeneous(k - 1)) * Rational(k % 2 == 1 ? 1 : -1, k);
    return exp_series(u)[n];
}

// Degree-by-degree verification of the Cauchy identity
//   sum_I lambda^{l(I)} phi_I = exp(lambda sum_k X_k):
// both sides are polynomials in a central parameter lambda with QSym
// coefficients; the lambda^r slice of the right side is (sum X_k)^r / r!.
struct CauchyReport {
    bool ok = true;
    std::vector<std::string> failures;
};

inline CauchyReport cauchy_exp_check(int N, const CoeffList& c, DualityCache& cache) {
    if (!(c.at(1) == ParamCoeff(1)))
        throw std::domain_error("cauchy_exp_check: normalization requires c_1 = 1");
    CauchyReport rep;
    const CoeffList id = coeff_mode_identity(N);
    // right side: powers of sum_k X_k in monomial coordinates
    QsymElem xsum{QBasis::M, {}};
    for (int k = 1; k <= N; ++k) xsum.terms += x_expansion(Composition{k}, cache, c);
    std::vector<CompCombo> power(N + 1);
    power[0] = CompCombo::single(Composition{});
    for (int r = 1; r <= N; ++r)
        power[r] = m_product({QBasis::M, power[r - 1]}, xsum).terms;
    for (int n = 1; n <= N; ++n) {
        // left side slices: sum of phi_I over l(I) = r, in monomial coordinates
        auto t = cache.degree(n, id);
        std::map<int, CompCombo> lhs;
        for (const auto& [I, row] : t->x_to_m) lhs[length(I)] += row;
        for (int r = 1; r <= n; ++r) {
            CompCombo rhs;
            for (const auto& [J, cj] : power[r].terms())
                if (weight(J) == n) rhs.add(J, cj / Rational(factorial(r)));
            if (!(lhs[r] == rhs)) {
                rep.ok = false;
                rep.failures.push_back("degree " + std::to_string(n) + ", lambda^" +
                                       std::to_string(r));
            }
        }
    }
    return rep;
}

} // namespace qshuf
