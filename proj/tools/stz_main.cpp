// Command line front end: parse a symbol document, dispatch to the library,
// emit JSON on stdout. Exit codes: 0 success, 2 input error, 3 math error.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "stz/io.hpp"
#include "stz/oracle.hpp"
#include "stz/parallel.hpp"
#include "stz/roots.hpp"
#include "stz/schur.hpp"
#include "stz/toeplitz.hpp"

using nlohmann::json;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

json read_json_input(const std::string& path) {
    try {
        if (path == "-") return json::parse(std::cin);
        std::ifstream in(path);
        if (!in) throw stz::ParseError("cannot open '" + path + "'");
        return json::parse(in);
    } catch (const json::exception& e) {
        throw stz::ParseError(std::string("invalid JSON: ") + e.what());
    }
}

stz::SymbolDocument load_symbol(const std::string& path) {
    return stz::SymbolDocument::from_json(read_json_input(path));
}

// exact backend when every scalar in sight is a rational literal; --backend
// overrides. Demoting exact input to float silently is never done.
bool pick_exact(const std::string& backend, const stz::SymbolDocument& doc,
                const std::vector<std::string>& extra_scalars) {
    bool rational = doc.all_rational();
    for (const auto& s : extra_scalars) rational = rational && stz::is_rational_literal(s);
    if (backend == "exact") {
        if (!rational)
            throw stz::ParseError("--backend=exact requires all scalars to be exact rationals");
        return true;
    }
    if (backend == "float") return false;
    if (backend == "auto") return rational;
    throw stz::ParseError("unknown backend '" + backend + "'");
}

template <class F>
int dispatch_backend(bool exact, F&& f) {
    if (exact) return f(std::type_identity<stz::Rational>{});
    return f(std::type_identity<stz::ScaledComplex>{});
}

// Attach numerically found roots when a float-path operation needs them.
template <class K>
stz::LaurentSpec<K> ensure_roots(const stz::LaurentSpec<K>& a) {
    if constexpr (std::is_same_v<K, stz::ScaledComplex>) {
        if (!a.root_list() && !a.series_mode()) return a.with_roots(stz::find_roots(a));
    }
    return a;
}

stz::DetMethod parse_det_method(const std::string& m) {
    if (m == "schur") return stz::DetMethod::schur;
    if (m == "baxter_schmidt") return stz::DetMethod::baxter_schmidt;
    if (m == "trench") return stz::DetMethod::trench;
    if (m == "dense") return stz::DetMethod::dense;
    throw stz::ParseError("unknown determinant method '" + m + "'");
}

stz::AdjMethod parse_adj_method(const std::string& m) {
    if (m == "skew") return stz::AdjMethod::skew;
    if (m == "skew_flipped") return stz::AdjMethod::skew_flipped;
    if (m == "schur_sum") return stz::AdjMethod::schur_sum;
    if (m == "trench") return stz::AdjMethod::trench;
    throw stz::ParseError("unknown adjugate method '" + m + "'");
}

template <class K>
json scalar_list_json(const std::vector<K>& vs) {
    json arr = json::array();
    for (const auto& v : vs) arr.push_back(stz::format_scalar(v));
    return arr;
}

// ---------------------------------------------------------------- det

int cmd_det(const std::string& symbol_path, long long n, const std::string& method,
            const std::string& backend) {
    stz::SymbolDocument doc = load_symbol(symbol_path);
    return dispatch_backend(pick_exact(backend, doc, {}), [&]<class K>(std::type_identity<K>) {
        stz::LaurentSpec<K> a = doc.build<K>();
        json out;
        out["n"] = n;
        if (method == "all") {
            const std::pair<const char*, stz::DetMethod> methods[] = {
                {"schur", stz::DetMethod::schur},
                {"baxter_schmidt", stz::DetMethod::baxter_schmidt},
                {"trench", stz::DetMethod::trench},
                {"dense", stz::DetMethod::dense},
            };
            json rows = json::array();
            std::vector<K> values;
            for (auto [name, m] : methods) {
                json row;
                row["method"] = name;
                try {
                    stz::LaurentSpec<K> sym = (m == stz::DetMethod::trench) ? ensure_roots(a) : a;
                    auto t0 = std::chrono::steady_clock::now();
                    K v = stz::determinant(sym, n, m);
                    row["time_ms"] = ms_since(t0);
                    row["value"] = stz::format_scalar(v);
                    values.push_back(v);
                } catch (const stz::MathError& e) {
                    row["unavailable"] = e.what();
                }
                rows.push_back(row);
            }
            bool agree = true;
            for (const auto& v : values) {
                if constexpr (stz::scalar_traits<K>::is_exact) {
                    agree = agree && (v == values.front());
                } else {
                    K d = v - values.front();
                    agree = agree && (stz::is_zero(d) ||
                                      stz::abs_log2(d) <= stz::abs_log2(values.front()) - 20.0);
                }
            }
            out["methods"] = rows;
            out["agreement"] = agree;
        } else {
            stz::DetMethod m = parse_det_method(method);
            stz::LaurentSpec<K> sym = (m == stz::DetMethod::trench) ? ensure_roots(a) : a;
            auto t0 = std::chrono::steady_clock::now();
            K v = stz::determinant(sym, n, m);
            out["timings"] = {{"compute_ms", ms_since(t0)}};
            out["method"] = method;
            out["value"] = stz::format_scalar(v);
        }
        std::cout << out.dump() << "\n";
        return 0;
    });
}

// ---------------------------------------------------------------- minor

int cmd_minor(const std::string& symbol_path, long long n, const std::string& rows,
              const std::string& cols, const std::string& variant, const std::string& backend) {
    stz::SymbolDocument doc = load_symbol(symbol_path);
    std::vector<long long> xi = stz::parse_int_list(rows);
    std::vector<long long> eta = stz::parse_int_list(cols);
    if (xi.size() != eta.size())
        throw stz::ParseError("--strike-rows and --strike-cols must have equal lengths");
    stz::MinorVariant var;
    if (variant == "expanded")
        var = stz::MinorVariant::expanded;
    else if (variant == "flipped")
        var = stz::MinorVariant::flipped;
    else
        throw stz::ParseError("unknown variant '" + variant + "'");

    return dispatch_backend(pick_exact(backend, doc, {}), [&]<class K>(std::type_identity<K>) {
        stz::LaurentSpec<K> a = doc.build<K>();
        stz::MinorRequest req(n, stz::IndexSet(n, xi), stz::IndexSet(n, eta));
        K v = stz::minor(a, req, var);
        json out;
        out["n"] = n;
        out["value"] = stz::format_scalar(v);
        out["variant"] = variant;
        long long par = a.p() * req.m() + req.struck_rows.index_sum() + req.struck_cols.index_sum();
        out["sign"] = (par % 2 == 0) ? 1 : -1;
        if (req.d() < n) {
            auto shapes = stz::minor_shapes(n, a.p(), req.struck_rows, req.struck_cols);
            out["shapes"] = {{"lambda_mu", stz::skew_to_json(shapes.first)},
                             {"alpha_beta", stz::skew_to_json(shapes.second)}};
        }
        std::cout << out.dump() << "\n";
        return 0;
    });
}

// ---------------------------------------------------------------- adj / inv

int cmd_adj_inv(bool inverse, const std::string& symbol_path, long long n, long long r, long long s,
                bool full, const std::string& method, const std::string& backend) {
    stz::SymbolDocument doc = load_symbol(symbol_path);
    stz::AdjMethod m = parse_adj_method(method);
    return dispatch_backend(pick_exact(backend, doc, {}), [&]<class K>(std::type_identity<K>) {
        stz::LaurentSpec<K> a = doc.build<K>();
        const char* op = inverse ? "inv" : "adj";
        if (!full) {
            K v = inverse ? K(stz::inverse_entry(a, n, r, s, m)) : K(stz::adjugate_entry(a, n, r, s, m));
            json out = {{"op", op}, {"n", n}, {"r", r}, {"s", s}, {"method", method},
                        {"value", stz::format_scalar(v)}};
            std::cout << out.dump() << "\n";
            return 0;
        }
        // Row-major JSON Lines stream; entries are computed independently by
        // a worker pool and printed in order afterwards.
        K d(0);
        if (inverse) {
            d = stz::determinant(a, n, stz::DetMethod::baxter_schmidt);
            stz::check_invertible(a, n, d);
        }
        std::vector<K> entries(std::size_t(n * n), K(0));
        stz::HomSeq<K> shared_h = a.hom();  // exercised concurrently by the pool
        stz::parallel_for(n * n, [&](long long i) {
            long long rr = i / n + 1, ss = i % n + 1;
            K v = stz::adjugate_entry(a, n, rr, ss, m);
            entries[std::size_t(i)] = inverse ? K(v / d) : v;
        });
        json meta = {{"op", op}, {"n", n}, {"method", method}, {"entries", n * n}};
        std::cout << meta.dump() << "\n";
        for (long long i = 0; i < n * n; ++i) {
            json line = {{"r", i / n + 1}, {"s", i % n + 1},
                         {"value", stz::format_scalar(entries[std::size_t(i)])}};
            std::cout << line.dump() << "\n";
        }
        return 0;
    });
}

// ---------------------------------------------------------------- eig

int cmd_eig(const std::string& symbol_path, long long n, const std::string& x_str,
            const std::string& backend) {
    stz::SymbolDocument doc = load_symbol(symbol_path);
    return dispatch_backend(pick_exact(backend, doc, {x_str}), [&]<class K>(std::type_identity<K>) {
        stz::LaurentSpec<K> a = doc.build<K>();
        K x = stz::parse_scalar<K>(x_str);
        if (a.p() < 1) throw stz::RequiresPositiveP("eig: requires p >= 1");

        std::optional<stz::RootList<K>> shifted_roots;
        stz::LaurentSpec<K> shifted = a.shifted_by_eigenvalue(x);
        if constexpr (std::is_same_v<K, stz::ScaledComplex>) {
            if (!shifted.series_mode()) shifted_roots = stz::find_roots(shifted);
        } else {
            if (shifted.root_list()) shifted_roots = *shifted.root_list();
        }

        stz::EigenRequest<K> req(n, x, shifted_roots);
        std::vector<K> v = stz::eigenvector(a, req);

        bool zero = true;
        for (const auto& c : v) zero = zero && stz::is_zero(c);

        // Residual T v - x v in the infinity norm.
        stz::DenseMatrix<K> T = stz::toeplitz_matrix(a, n);
        std::vector<K> res = T.apply(v);
        K rnorm(0);
        for (long long i = 0; i < n; ++i) {
            K ri = stz::scalar_abs(res[std::size_t(i)] - x * v[std::size_t(i)]);
            if (stz::abs_log2(ri) > stz::abs_log2(rnorm)) rnorm = ri;
        }

        json out;
        out["n"] = n;
        out["x"] = x_str;
        out["v"] = scalar_list_json(v);
        out["zero_vector"] = zero;
        if (zero)
            out["warning"] =
                "constructed eigenvector is identically zero; the null space needs a different generator";
        out["residual_norm"] = stz::format_scalar(rnorm);
        if (shifted_roots && a.p() <= shifted_roots->w()) {
            stz::GeometricForm<K> g = stz::geometric_form(a, req);
            out["geometric"] = {{"C", scalar_list_json(g.coefficients)}, {"confluent", g.confluent}};
        } else {
            out["geometric"] = nullptr;
        }
        std::cout << out.dump() << "\n";
        return 0;
    });
}

// ---------------------------------------------------------------- schur / expand

int cmd_schur(const std::string& outer, const std::string& inner, const std::string& roots,
              const std::string& eseq, const std::string& backend) {
    if (roots.empty() == eseq.empty())
        throw stz::ParseError("exactly one of --roots / --eseq is required");
    stz::Partition lam(stz::parse_int_list(outer));
    stz::Partition mu(stz::parse_int_list(inner));
    stz::SkewPartition sp(lam, mu);
    std::vector<std::string> scalars = stz::split_list(roots.empty() ? eseq : roots);

    stz::SymbolDocument fake;  // only for the backend decision
    fake.values = scalars;
    fake.a_p = "1";
    return dispatch_backend(pick_exact(backend, fake, {}), [&]<class K>(std::type_identity<K>) {
        std::vector<K> vals;
        for (const auto& s : scalars) vals.push_back(stz::parse_scalar<K>(s));
        K value(0);
        if (!roots.empty()) {
            stz::RootList<K> rl(std::move(vals));
            stz::HomSeq<K> h = stz::h_from_roots(rl);
            value = stz::skew_schur(sp, h);
        } else {
            stz::HomSeq<K> h = stz::HomSeq<K>::from_elem_series(stz::ElemSeq<K>(std::move(vals)));
            value = stz::skew_schur(sp, h);
        }
        json out = {{"shape", stz::skew_to_json(sp)}, {"value", stz::format_scalar(value)}};
        std::cout << out.dump() << "\n";
        return 0;
    });
}

int cmd_expand(const std::string& outer, long long strip) {
    stz::Partition lam(stz::parse_int_list(outer));
    std::vector<stz::Partition> terms = stz::skew_pieri(lam, strip);
    json arr = json::array();
    for (const auto& nu : terms) arr.push_back(stz::partition_to_json(nu));
    json out = {{"outer", stz::partition_to_json(lam)}, {"strip", strip}, {"terms", arr}};
    std::cout << out.dump() << "\n";
    return 0;
}

// ---------------------------------------------------------------- bench

// Random float symbol with equal-modulus, angle-jittered roots. Equal moduli
// keep the closed-form h-determinant graded the same way at every order, so
// the n = 2000 cross-check stays meaningful.
stz::SymbolDocument bench_symbol(long long p, long long w, unsigned long long seed, double radius) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> jitter(-0.1, 0.1);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * M_PI);
    stz::SymbolDocument doc;
    doc.payload = stz::SymbolDocument::Payload::roots;
    doc.p = p;
    double ph = phase(rng);
    doc.a_p = stz::format_scalar(stz::ScaledComplex(std::cos(ph), std::sin(ph)));
    for (long long j = 0; j < w; ++j) {
        double ang = 2.0 * M_PI * (double(j) + jitter(rng)) / double(w);
        doc.values.push_back(
            stz::format_scalar(stz::ScaledComplex(radius * std::cos(ang), radius * std::sin(ang))));
    }
    return doc;
}

int cmd_bench(const std::string& n_list, long long p, long long w, unsigned long long seed,
              long long cutoff) {
    stz::SymbolDocument doc = bench_symbol(p, w, seed, 1.0);
    stz::LaurentSpec<stz::ScaledComplex> a = doc.build<stz::ScaledComplex>();

    json out;
    out["seed"] = seed;
    out["p"] = p;
    out["w"] = w;
    out["cutoff"] = cutoff;
    out["symbol"] = doc.to_json();
    json rows = json::array();
    for (long long n : stz::parse_int_list(n_list)) {
        json row;
        row["n"] = n;
        auto t0 = std::chrono::steady_clock::now();
        stz::ScaledComplex closed = stz::determinant(a, n, stz::DetMethod::baxter_schmidt);
        double first_ms = ms_since(t0);
        // Average over enough repetitions for a stable per-call figure.
        int reps = first_ms < 1.0 ? 200 : 1;
        t0 = std::chrono::steady_clock::now();
        for (int i = 0; i < reps; ++i) (void)stz::determinant(a, n, stz::DetMethod::baxter_schmidt);
        row["closed_form_ms"] = ms_since(t0) / reps;
        row["value_closed"] = stz::format_scalar(closed);
        if (n <= cutoff) {
            t0 = std::chrono::steady_clock::now();
            stz::ScaledComplex elim = stz::det_banded(a, n);
            row["elimination_ms"] = ms_since(t0);
            row["value_elimination"] = stz::format_scalar(elim);
            stz::ScaledComplex dev = closed - elim;
            double rel = stz::is_zero(dev)
                             ? 0.0
                             : std::exp2(stz::abs_log2(dev) - stz::abs_log2(elim));
            row["relative_deviation"] = rel;
        } else {
            row["elimination_ms"] = "skipped";
        }
        rows.push_back(row);
    }
    out["rows"] = rows;
    std::cout << out.dump() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"closed-form minors, determinants, inverses and eigenvectors of banded Toeplitz matrices"};
    app.require_subcommand(1);

    std::string symbol_path = "-";
    std::string backend = "auto";
    std::string method_det = "baxter_schmidt";
    std::string method_adj = "skew";
    std::string variant = "expanded";
    std::string rows_list, cols_list, x_str;
    std::string outer, inner, roots_arg, eseq_arg;
    std::string n_list = "2000,1000000";
    long long n = 1, r = 1, s = 1, strip = 1;
    long long bench_p = 4, bench_w = 8, bench_cutoff = 20000;
    unsigned long long seed = 20260811;
    bool full = false;

    std::function<int()> action;

    auto add_symbol = [&](CLI::App* cmd) {
        cmd->add_option("symbol", symbol_path, "symbol document path or - for stdin");
        cmd->add_option("--backend", backend, "auto|exact|float");
    };

    CLI::App* det = app.add_subcommand("det", "determinant of T_n(a)");
    add_symbol(det);
    det->add_option("--n", n, "matrix order")->required();
    det->add_option("--method", method_det, "schur|baxter_schmidt|trench|dense|all");
    det->callback([&] { action = [&] { return cmd_det(symbol_path, n, method_det, backend); }; });

    CLI::App* minor_cmd = app.add_subcommand("minor", "minor with struck rows and columns");
    add_symbol(minor_cmd);
    minor_cmd->add_option("--n", n, "matrix order")->required();
    minor_cmd->add_option("--strike-rows", rows_list, "struck row indices, e.g. 3,6");
    minor_cmd->add_option("--strike-cols", cols_list, "struck column indices");
    minor_cmd->add_option("--variant", variant, "expanded|flipped");
    minor_cmd->callback(
        [&] { action = [&] { return cmd_minor(symbol_path, n, rows_list, cols_list, variant, backend); }; });

    CLI::App* adj = app.add_subcommand("adj", "adjugate entry or full matrix");
    CLI::App* inv = app.add_subcommand("inv", "inverse entry or full matrix");
    for (CLI::App* cmd : {adj, inv}) {
        add_symbol(cmd);
        cmd->add_option("--n", n, "matrix order")->required();
        cmd->add_option("--r", r, "row index (1-based)");
        cmd->add_option("--s", s, "column index (1-based)");
        cmd->add_flag("--full", full, "emit the whole matrix as JSON lines");
        cmd->add_option("--method", method_adj, "skew|skew_flipped|schur_sum|trench");
    }
    adj->callback([&] {
        action = [&] { return cmd_adj_inv(false, symbol_path, n, r, s, full, method_adj, backend); };
    });
    inv->callback([&] {
        action = [&] { return cmd_adj_inv(true, symbol_path, n, r, s, full, method_adj, backend); };
    });

    CLI::App* eig = app.add_subcommand("eig", "eigenvector for a known eigenvalue");
    add_symbol(eig);
    eig->add_option("--n", n, "matrix order")->required();
    eig->add_option("--x", x_str, "eigenvalue")->required();
    eig->callback([&] { action = [&] { return cmd_eig(symbol_path, n, x_str, backend); }; });

    CLI::App* schur = app.add_subcommand("schur", "evaluate a skew Schur polynomial");
    schur->add_option("--outer", outer, "outer partition, e.g. 5,4,2")->required();
    schur->add_option("--inner", inner, "inner partition");
    schur->add_option("--roots", roots_arg, "variables as a comma separated list");
    schur->add_option("--eseq", eseq_arg, "elementary symmetric prefix e_0,e_1,...");
    schur->add_option("--backend", backend, "auto|exact|float");
    schur->callback([&] { action = [&] { return cmd_schur(outer, inner, roots_arg, eseq_arg, backend); }; });

    CLI::App* expand = app.add_subcommand("expand", "horizontal strip expansion of s_{lambda/(r)}");
    expand->add_option("--outer", outer, "partition, e.g. 8,8,8,5")->required();
    expand->add_option("--strip", strip, "strip size r")->required();
    expand->callback([&] { action = [&] { return cmd_expand(outer, strip); }; });

    CLI::App* bench = app.add_subcommand("bench", "closed form vs banded elimination timings");
    bench->add_option("--n-list", n_list, "orders to benchmark");
    bench->add_option("--p", bench_p, "symbol p");
    bench->add_option("--w", bench_w, "symbol w");
    bench->add_option("--seed", seed, "rng seed");
    bench->add_option("--cutoff", bench_cutoff, "largest n for the elimination pass");
    bench->callback(
        [&] { action = [&] { return cmd_bench(n_list, bench_p, bench_w, seed, bench_cutoff); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        return action ? action() : 2;
    } catch (const stz::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const stz::MathError& e) {
        std::cerr << "math error: " << e.what() << "\n";
        return 3;
    } catch (const stz::Error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    }
}
