// qshuf: products, expansions, tables and verification suites for the
// two-parameter quasi-shuffle family and its NCSF / QSym / WQSym bases.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 resource cap exceeded.

#include <qshuf/qshuf.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace qshuf;

constexpr int kDefaultDegreeCap = 8; // compositions (NCSF / QSym)
constexpr int kDefaultWordCap = 6;   // total packed-word length (WQSym)

struct CommonOpts {
    std::string format = "text";
    std::string cache_dir;
    bool no_cache = false;
    bool unsafe_degree = false;
    int degree_cap = kDefaultDegreeCap;
    int word_cap = kDefaultWordCap;
};

std::string default_cache_dir() {
    if (const char* env = std::getenv("QSHUF_CACHE_DIR")) return env;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME")) return std::string(xdg) + "/qshuf";
    if (const char* home = std::getenv("HOME")) return std::string(home) + "/.cache/qshuf";
    return ".qshuf-cache";
}

DualityCache make_cache(const CommonOpts& o) {
    if (o.no_cache) return DualityCache{};
    return DualityCache{o.cache_dir.empty() ? default_cache_dir() : o.cache_dir};
}

void check_cap(int degree, int cap, const CommonOpts& o, const std::string& what) {
    if (o.unsafe_degree) return;
    if (degree > cap)
        throw cap_error(what + " " + std::to_string(degree) + " exceeds the cap " +
                        std::to_string(cap) + " (pass --unsafe-degree to override)");
}

Rational parse_rational(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        return Rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw std::invalid_argument("expected a rational p or p/q, got: " + s);
    }
}

ParamCoeff parse_param(const std::string& s, const ParamCoeff& symbolic) {
    if (s == "symbolic") return symbolic;
    return ParamCoeff(parse_rational(s));
}

void add_common(CLI::App* cmd, CommonOpts& o, bool with_format = true) {
    if (with_format)
        cmd->add_option("--format", o.format, "output format: text, latex or json")
            ->check(CLI::IsMember({"text", "latex", "json"}));
    cmd->add_option("--cache-dir", o.cache_dir,
                    "transition cache directory (default: QSHUF_CACHE_DIR or the user cache dir)");
    cmd->add_flag("--no-cache", o.no_cache, "bypass the disk cache");
    cmd->add_flag("--unsafe-degree", o.unsafe_degree, "lift the degree / word-length caps");
    cmd->add_option("--degree-cap", o.degree_cap, "composition degree cap (default 8)");
    cmd->add_option("--word-cap", o.word_cap, "total packed-word length cap (default 6)");
}

template <class Elem>
void emit(const Elem& e, const CommonOpts& o) {
    switch (parse_format(o.format)) {
    case OutFormat::text: std::cout << to_text(e) << "\n"; break;
    case OutFormat::latex: std::cout << to_latex(e) << "\n"; break;
    case OutFormat::json: std::cout << to_json(e).dump() << "\n"; break;
    }
}

void require_positive_letters(const std::vector<int>& w, const std::string& what) {
    for (int x : w)
        if (x < 1) throw std::invalid_argument(what + ": letters must be positive integers");
}

// ---------------------------------------------------------------------------

int cmd_product(const std::string& kind, const std::string& xs, const std::string& ys,
                const std::string& alpha, const std::string& beta, const std::string& mode,
                const CommonOpts& o) {
    const Word x = parse_int_list(xs), y = parse_int_list(ys);
    require_positive_letters(x, "operand");
    require_positive_letters(y, "operand");
    const bool substitute = alpha != "symbolic" || beta != "symbolic";
    const ParamCoeff aval = parse_param(alpha, ParamCoeff::alpha());
    const ParamCoeff bval = parse_param(beta, ParamCoeff::beta());

    if (kind == "star") {
        check_cap(weight(x) + weight(y), o.degree_cap, o, "total weight");
        emit(star(x, y, aval, bval), o);
        return 0;
    }
    if (kind == "wqsym_xx") {
        if (!is_packed(x) || !is_packed(y))
            throw std::invalid_argument("wqsym_xx: operands must be packed words");
        check_cap((int)(x.size() + y.size()), o.word_cap, o, "total word length");
        DualityCache cache = make_cache(o);
        WqsymElem p = xx_product(x, y, cache, coeff_mode(mode, (int)(x.size() + y.size())));
        if (substitute) p.terms = p.terms.substituted(aval, bval);
        emit(p, o);
        return 0;
    }
    const int deg = weight(x) + weight(y);
    check_cap(deg, o.degree_cap, o, "total degree");
    if (kind == "m") {
        QsymElem p = m_product({QBasis::M, CompCombo::single(x)}, {QBasis::M, CompCombo::single(y)});
        emit(p, o);
        return 0;
    }
    if (kind == "qsym_x") {
        DualityCache cache = make_cache(o);
        QsymElem p = x_product(x, y, cache, coeff_mode(mode, std::max(1, deg)));
        if (substitute) p.terms = p.terms.substituted(aval, bval);
        emit(p, o);
        return 0;
    }
    if (kind == "ncsf") {
        NcsfElem p = ncsf_product({NBasis::S, CompCombo::single(x)}, {NBasis::S, CompCombo::single(y)});
        emit(p, o);
        return 0;
    }
    throw std::invalid_argument("unknown product kind: " + kind);
}

int cmd_expand(const std::string& target, const std::string& arg, const std::string& mode,
               const std::string& basis, const CommonOpts& o) {
    if (target == "Y" || target == "phi") {
        int n = 0;
        try {
            n = std::stoi(arg);
        } catch (const std::exception&) {
            throw std::invalid_argument("expand " + target + ": expected a degree, got " + arg);
        }
        if (n < 1) throw std::invalid_argument("expand: degree must be >= 1");
        check_cap(n, o.degree_cap, o, "degree");
        CompCombo comp = (target == "phi") ? phi_series(n).at(n)
                                           : build_Y(coeff_mode(mode, n), n).at(n);
        NcsfElem e{NBasis::S, std::move(comp)};
        if (basis == "R") e = basis_convert(e, NBasis::R);
        else if (basis != "S") throw std::invalid_argument("expand " + target + ": basis must be S or R");
        emit(e, o);
        return 0;
    }
    if (target == "X") {
        const Composition I = parse_int_list(arg);
        require_positive_letters(I, "composition");
        check_cap(weight(I), o.degree_cap, o, "degree");
        DualityCache cache = make_cache(o);
        emit(QsymElem{QBasis::M, x_expansion(I, cache, coeff_mode(mode, std::max(1, weight(I))))}, o);
        return 0;
    }
    if (target == "XX") {
        const PackedWord u = parse_int_list(arg);
        if (!is_packed(u)) throw std::invalid_argument("expand XX: operand must be a packed word");
        check_cap((int)u.size(), o.word_cap, o, "word length");
        DualityCache cache = make_cache(o);
        emit(WqsymElem{WBasis::M,
                       xx_expansion(u, cache, coeff_mode(mode, std::max<int>(1, (int)u.size())))},
             o);
        return 0;
    }
    throw std::invalid_argument("unknown expand target: " + target);
}

int cmd_verify(const std::string& suite, int max_degree, int jobs, bool list, const CommonOpts& o) {
    if (list) {
        json out = json::array();
        for (const auto& s : verify_suites()) {
            json j;
            j["suite"] = s.name;
            j["description"] = s.description;
            out.push_back(std::move(j));
        }
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    DualityCache cache = make_cache(o);
    VerifyOptions opt;
    opt.max_degree = max_degree;
    opt.jobs = jobs;
    opt.cache = &cache;
    const VerifyReport rep = run_suite(suite, opt);
    std::cout << rep.to_json().dump(2) << "\n";
    return rep.ok() ? 0 : 1;
}

int cmd_table(const std::string& kind, int b, int n, const std::string& mode, const CommonOpts& o) {
    const OutFormat fmt = parse_format(o.format);
    if (kind == "amazing") {
        check_cap(n, 24, o, "n");
        json rows = json::array();
        for (int k = 1; k <= n; ++k) {
            json row = json::array();
            for (int r = 1; r <= b * n; ++r) row.push_back(eulerian_sum_F(b, n, k, r).str());
            rows.push_back(std::move(row));
        }
        if (fmt == OutFormat::json) {
            json out;
            out["kind"] = "amazing";
            out["b"] = b;
            out["n"] = n;
            out["rows"] = rows;
            std::cout << out.dump() << "\n";
        } else {
            for (const auto& row : rows) {
                for (size_t i = 0; i < row.size(); ++i)
                    std::cout << (i ? " " : "") << row[i].get<std::string>();
                std::cout << "\n";
            }
        }
        return 0;
    }
    if (kind == "eulerian") {
        check_cap(n, 9, o, "n");
        const STPoly e = eulerian_poly(n);
        if (fmt == OutFormat::json) {
            json arr = json::array();
            for (const auto& [k, q] : e.monomials()) {
                json m;
                m["s"] = k.first;
                m["t"] = k.second;
                m["num"] = numerator(q).str();
                m["den"] = denominator(q).str();
                arr.push_back(std::move(m));
            }
            json out;
            out["kind"] = "eulerian";
            out["n"] = n;
            out["terms"] = arr;
            std::cout << out.dump() << "\n";
        } else {
            std::string s;
            for (const auto& [k, q] : e.monomials()) {
                if (!s.empty()) s += " + ";
                if (q != 1 || (k.first == 0 && k.second == 0)) s += rational_str(q);
                if (k.first > 0) s += "s" + (k.first > 1 ? "^" + std::to_string(k.first) : "");
                if (k.second > 0) s += "t" + (k.second > 1 ? "^" + std::to_string(k.second) : "");
            }
            std::cout << (s.empty() ? "0" : s) << "\n";
        }
        return 0;
    }
    if (kind == "transition") {
        check_cap(n, o.degree_cap, o, "degree");
        DualityCache cache = make_cache(o);
        auto t = cache.degree(n, coeff_mode(mode, n));
        if (fmt == OutFormat::json) {
            json out = transition_to_json(*t);
            out["mode"] = mode;
            std::cout << out.dump() << "\n";
        } else {
            for (const auto& J : t->order) {
                std::cout << detail::word_str(J) << " :";
                for (const auto& I : t->order)
                    std::cout << " " << coeff_text(t->y_to_s.at(J).coeff(I));
                std::cout << "\n";
            }
        }
        return 0;
    }
    if (kind == "ribbon-coeff") {
        check_cap(n, 30, o, "n");
        if (fmt == OutFormat::json) {
            json arr = json::array();
            for (int r = 1; r <= n; ++r) arr.push_back(rational_str(ribbon_closed_coefficient(n, r)));
            json out;
            out["kind"] = "ribbon-coeff";
            out["n"] = n;
            out["coefficients"] = arr;
            std::cout << out.dump() << "\n";
        } else {
            for (int r = 1; r <= n; ++r)
                std::cout << (r > 1 ? " " : "") << rational_str(ribbon_closed_coefficient(n, r));
            std::cout << "\n";
        }
        return 0;
    }
    throw std::invalid_argument("unknown table kind: " + kind);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact products, basis expansions and verification suites for the "
                 "two-parameter quasi-shuffle family"};
    app.require_subcommand(1);

    // product
    auto* product = app.add_subcommand("product", "multiply two basis elements");
    std::string p_kind, p_x, p_y, p_alpha = "symbolic", p_beta = "symbolic", p_mode = "fgl";
    CommonOpts p_opts;
    product->add_option("kind", p_kind, "star, m, qsym_x, wqsym_xx or ncsf")->required();
    product->add_option("x", p_x, "left operand, e.g. [1,2]")->required();
    product->add_option("y", p_y, "right operand")->required();
    product->add_option("--alpha", p_alpha, "alpha: symbolic or a rational");
    product->add_option("--beta", p_beta, "beta: symbolic or a rational");
    product->add_option("--mode", p_mode, "coefficient mode: fgl, tanh, exp, qexp, identity");
    add_common(product, p_opts);

    // expand
    auto* expand = app.add_subcommand("expand", "expand a basis element");
    std::string e_target, e_arg, e_mode = "fgl", e_basis = "S";
    CommonOpts e_opts;
    expand->add_option("target", e_target, "Y, phi, X or XX")->required();
    expand->add_option("arg", e_arg, "degree (Y, phi) or index like [1,2] (X, XX)")->required();
    expand->add_option("--mode", e_mode, "coefficient mode: fgl, tanh, exp, qexp, identity");
    expand->add_option("--basis", e_basis, "output basis for Y/phi: S or R");
    add_common(expand, e_opts);

    // verify
    auto* verify = app.add_subcommand("verify", "run a named verification suite");
    std::string v_suite;
    int v_max = -1, v_jobs = 0;
    bool v_list = false;
    CommonOpts v_opts;
    verify->add_option("suite", v_suite, "suite name (see --list)");
    verify->add_option("--max-degree,--max", v_max, "degree / size bound (suite default if omitted)");
    verify->add_option("--jobs", v_jobs, "worker threads (default: hardware concurrency)");
    verify->add_flag("--list", v_list, "list available suites");
    add_common(verify, v_opts, false);

    // table
    auto* table = app.add_subcommand("table", "print a coefficient table");
    std::string t_kind, t_mode = "fgl";
    int t_b = 2, t_n = 0;
    CommonOpts t_opts;
    table->add_option("kind", t_kind, "amazing, eulerian, transition or ribbon-coeff")->required();
    table->add_option("--b", t_b, "base for the amazing table (default 2)");
    table->add_option("--n", t_n, "size parameter")->required();
    table->add_option("--mode", t_mode, "coefficient mode for transition tables");
    add_common(table, t_opts);

    try {
        app.parse(argc, argv);
        if (product->parsed())
            return cmd_product(p_kind, p_x, p_y, p_alpha, p_beta, p_mode, p_opts);
        if (expand->parsed()) return cmd_expand(e_target, e_arg, e_mode, e_basis, e_opts);
        if (verify->parsed()) {
            if (!v_list && v_suite.empty())
                throw std::invalid_argument("verify: give a suite name or --list");
            return cmd_verify(v_suite, v_max, v_jobs, v_list, v_opts);
        }
        if (table->parsed()) return cmd_table(t_kind, t_b, t_n, t_mode, t_opts);
        return 2;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const cap_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
