// Python bindings for the main operations: symbols, determinants, minors,
// adjugate/inverse entries, eigenvectors, and skew Schur evaluation.
// Exact-backend values cross the boundary as strings ("n/d"); float-backend
// values as python complex numbers.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <string>
#include <variant>
#include <vector>

#include "stz/io.hpp"
#include "stz/oracle.hpp"
#include "stz/roots.hpp"
#include "stz/schur.hpp"
#include "stz/toeplitz.hpp"

namespace py = pybind11;

namespace {

std::string scalar_to_string(const py::handle& v) {
    if (py::isinstance<py::str>(v)) return v.cast<std::string>();
    if (py::isinstance<py::bool_>(v)) throw stz::ParseError("scalar: bool is not a scalar");
    if (py::isinstance<py::int_>(v)) return py::str(v).cast<std::string>();
    if (py::isinstance<py::float_>(v)) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17g", v.cast<double>());
        return buf;
    }
    if (py::isinstance(v, py::module_::import("builtins").attr("complex"))) {
        auto z = v.cast<std::complex<double>>();
        return stz::format_scalar(stz::ScaledComplex(z));
    }
    throw stz::ParseError("scalar: expected str, int, float, or complex");
}

std::vector<std::string> scalar_list(const py::iterable& vs) {
    std::vector<std::string> out;
    for (const auto& v : vs) out.push_back(scalar_to_string(v));
    return out;
}

bool decide_exact(const std::string& backend, const std::vector<std::string>& scalars) {
    bool rational = true;
    for (const auto& s : scalars) rational = rational && stz::is_rational_literal(s);
    if (backend == "exact") {
        if (!rational) throw stz::ParseError("exact backend requires rational scalars");
        return true;
    }
    if (backend == "float") return false;
    if (backend == "auto") return rational;
    throw stz::ParseError("unknown backend '" + backend + "'");
}

struct Symbol {
    std::variant<stz::LaurentSpec<stz::Rational>, stz::LaurentSpec<stz::ScaledComplex>> spec;

    explicit Symbol(stz::LaurentSpec<stz::Rational> s) : spec(std::move(s)) {}
    explicit Symbol(stz::LaurentSpec<stz::ScaledComplex> s) : spec(std::move(s)) {}

    bool exact() const { return spec.index() == 0; }
    const stz::LaurentSpec<stz::Rational>& ex() const { return std::get<0>(spec); }
    const stz::LaurentSpec<stz::ScaledComplex>& fl() const { return std::get<1>(spec); }
};

py::object value_out(const stz::Rational& v) { return py::str(stz::format_scalar(v)); }
py::object value_out(const stz::ScaledComplex& v) { return py::cast(v.to_complex()); }

template <class K>
py::list values_out(const std::vector<K>& vs) {
    py::list out;
    for (const auto& v : vs) out.append(value_out(v));
    return out;
}

// Applies f to the backend-typed spec and adapts the scalar results.
template <class F>
py::object with_symbol(const Symbol& sym, F&& f) {
    if (sym.exact()) return f(sym.ex());
    return f(sym.fl());
}

Symbol make_symbol(const std::string& kind, long long p, const py::object& a_p, const py::iterable& values,
                   const std::string& backend) {
    stz::SymbolDocument doc;
    doc.p = p;
    doc.values = scalar_list(values);
    std::vector<std::string> all = doc.values;
    if (kind == "coeffs") {
        doc.payload = stz::SymbolDocument::Payload::coeffs;
    } else {
        doc.payload = (kind == "roots") ? stz::SymbolDocument::Payload::roots
                                        : stz::SymbolDocument::Payload::eseq;
        doc.a_p = scalar_to_string(a_p);
        all.push_back(doc.a_p);
    }
    if (decide_exact(backend, all)) return Symbol(doc.build<stz::Rational>());
    return Symbol(doc.build<stz::ScaledComplex>());
}

stz::MinorVariant variant_from(const std::string& v) {
    if (v == "expanded") return stz::MinorVariant::expanded;
    if (v == "flipped") return stz::MinorVariant::flipped;
    throw stz::ParseError("unknown variant '" + v + "'");
}

stz::DetMethod det_method_from(const std::string& m) {
    if (m == "schur") return stz::DetMethod::schur;
    if (m == "baxter_schmidt") return stz::DetMethod::baxter_schmidt;
    if (m == "trench") return stz::DetMethod::trench;
    if (m == "dense") return stz::DetMethod::dense;
    throw stz::ParseError("unknown determinant method '" + m + "'");
}

stz::AdjMethod adj_method_from(const std::string& m) {
    if (m == "skew") return stz::AdjMethod::skew;
    if (m == "skew_flipped") return stz::AdjMethod::skew_flipped;
    if (m == "schur_sum") return stz::AdjMethod::schur_sum;
    if (m == "trench") return stz::AdjMethod::trench;
    throw stz::ParseError("unknown adjugate method '" + m + "'");
}

template <class K>
stz::LaurentSpec<K> with_found_roots(const stz::LaurentSpec<K>& a) {
    if constexpr (std::is_same_v<K, stz::ScaledComplex>) {
        if (!a.root_list() && !a.series_mode()) return a.with_roots(stz::find_roots(a));
    }
    return a;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "closed-form banded Toeplitz minors, determinants, inverses, and eigenvectors";

    py::register_exception<stz::ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<stz::MathError>(m, "MathError", PyExc_ArithmeticError);

    py::class_<Symbol>(m, "Symbol")
        .def_static(
            "from_coeffs",
            [](long long p, const py::iterable& values, const std::string& backend) {
                return make_symbol("coeffs", p, py::none(), values, backend);
            },
            py::arg("p"), py::arg("values"), py::arg("backend") = "auto",
            "Symbol from the band coefficients a_{p-w}..a_p.")
        .def_static(
            "from_roots",
            [](long long p, const py::object& a_p, const py::iterable& z, const std::string& backend) {
                return make_symbol("roots", p, a_p, z, backend);
            },
            py::arg("p"), py::arg("a_p"), py::arg("z"), py::arg("backend") = "auto",
            "Symbol from the leading coefficient and the roots z_1..z_w.")
        .def_static(
            "from_eseq",
            [](long long p, const py::object& a_p, const py::iterable& e, const std::string& backend) {
                return make_symbol("eseq", p, a_p, e, backend);
            },
            py::arg("p"), py::arg("a_p"), py::arg("e"), py::arg("backend") = "auto",
            "Series-mode symbol from a prefix e_0..e_L of the e-sequence.")
        .def_property_readonly("p",
                               [](const Symbol& s) { return s.exact() ? s.ex().p() : s.fl().p(); })
        .def_property_readonly("backend", [](const Symbol& s) { return s.exact() ? "exact" : "float"; })
        .def_property_readonly("series_mode", [](const Symbol& s) {
            return s.exact() ? s.ex().series_mode() : s.fl().series_mode();
        });

    m.def(
        "det",
        [](const Symbol& sym, long long n, const std::string& method) {
            return with_symbol(sym, [&]<class K>(const stz::LaurentSpec<K>& a) {
                stz::DetMethod dm = det_method_from(method);
                const stz::LaurentSpec<K> sp = (dm == stz::DetMethod::trench) ? with_found_roots(a) : a;
                return value_out(stz::determinant(sp, n, dm));
            });
        },
        py::arg("symbol"), py::arg("n"), py::arg("method") = "baxter_schmidt");

    m.def(
        "minor",
        [](const Symbol& sym, long long n, const std::vector<long long>& strike_rows,
           const std::vector<long long>& strike_cols, const std::string& variant) {
            return with_symbol(sym, [&]<class K>(const stz::LaurentSpec<K>& a) {
                stz::MinorRequest req(n, stz::IndexSet(n, strike_rows), stz::IndexSet(n, strike_cols));
                return value_out(stz::minor(a, req, variant_from(variant)));
            });
        },
        py::arg("symbol"), py::arg("n"), py::arg("strike_rows"), py::arg("strike_cols"),
        py::arg("variant") = "expanded");

    m.def(
        "adjugate_entry",
        [](const Symbol& sym, long long n, long long r, long long s, const std::string& method) {
            return with_symbol(sym, [&]<class K>(const stz::LaurentSpec<K>& a) {
                return value_out(stz::adjugate_entry(a, n, r, s, adj_method_from(method)));
            });
        },
        py::arg("symbol"), py::arg("n"), py::arg("r"), py::arg("s"), py::arg("method") = "skew");

    m.def(
        "inverse_entry",
        [](const Symbol& sym, long long n, long long r, long long s, const std::string& method) {
            return with_symbol(sym, [&]<class K>(const stz::LaurentSpec<K>& a) {
                return value_out(stz::inverse_entry(a, n, r, s, adj_method_from(method)));
            });
        },
        py::arg("symbol"), py::arg("n"), py::arg("r"), py::arg("s"), py::arg("method") = "skew");

    m.def(
        "adj_first_column",
        [](const Symbol& sym, long long n) {
            return with_symbol(sym, [&]<class K>(const stz::LaurentSpec<K>& a) -> py::object {
                return values_out(stz::adj_first_column(a, n));
            });
        },
        py::arg("symbol"), py::arg("n"));

    m.def(
        "eigenvector",
        [](const Symbol& sym, long long n, const py::object& x) {
            std::string xs = scalar_to_string(x);
            return with_symbol(sym, [&]<class K>(const stz::LaurentSpec<K>& a) -> py::object {
                K xv = stz::parse_scalar<K>(xs);
                std::optional<stz::RootList<K>> roots;
                stz::LaurentSpec<K> shifted = a.shifted_by_eigenvalue(xv);
                if constexpr (std::is_same_v<K, stz::ScaledComplex>) {
                    if (!shifted.series_mode()) roots = stz::find_roots(shifted);
                } else {
                    if (shifted.root_list()) roots = *shifted.root_list();
                }
                stz::EigenRequest<K> req(n, xv, roots);
                std::vector<K> v = stz::eigenvector(a, req);
                bool zero = true;
                for (const auto& c : v) zero = zero && stz::is_zero(c);
                py::dict out;
                out["v"] = values_out(v);
                out["zero_vector"] = zero;
                if (roots && a.p() >= 1 && a.p() <= roots->w()) {
                    stz::GeometricForm<K> g = stz::geometric_form(a, req);
                    py::dict geo;
                    geo["C"] = values_out(g.coefficients);
                    geo["confluent"] = g.confluent;
                    out["geometric"] = geo;
                } else {
                    out["geometric"] = py::none();
                }
                return out;
            });
        },
        py::arg("symbol"), py::arg("n"), py::arg("x"));

    m.def(
        "skew_schur",
        [](const std::vector<long long>& outer, const std::vector<long long>& inner,
           const py::object& roots, const py::object& eseq, const std::string& backend) {
            if (roots.is_none() == eseq.is_none())
                throw stz::ParseError("exactly one of roots / eseq is required");
            stz::SkewPartition sp((stz::Partition(outer)), stz::Partition(inner));
            std::vector<std::string> scalars =
                scalar_list((roots.is_none() ? eseq : roots).cast<py::iterable>());
            bool exact = decide_exact(backend, scalars);
            auto eval = [&]<class K>() -> py::object {
                std::vector<K> vals;
                for (const auto& s : scalars) vals.push_back(stz::parse_scalar<K>(s));
                if (!roots.is_none()) {
                    stz::RootList<K> rl(std::move(vals));
                    stz::HomSeq<K> h = stz::h_from_roots(rl);
                    return value_out(stz::skew_schur(sp, h));
                }
                stz::HomSeq<K> h = stz::HomSeq<K>::from_elem_series(stz::ElemSeq<K>(std::move(vals)));
                return value_out(stz::skew_schur(sp, h));
            };
            return exact ? eval.operator()<stz::Rational>() : eval.operator()<stz::ScaledComplex>();
        },
        py::arg("outer"), py::arg("inner") = std::vector<long long>{}, py::arg("roots") = py::none(),
        py::arg("eseq") = py::none(), py::arg("backend") = "auto");

    m.def(
        "pieri_expand",
        [](const std::vector<long long>& outer, long long r) {
            py::list out;
            for (const auto& nu : stz::skew_pieri(stz::Partition(outer), r)) out.append(nu.parts());
            return out;
        },
        py::arg("outer"), py::arg("r"), "Horizontal-strip expansion of s_{lambda/(r)}.");

    m.def(
        "find_roots",
        [](const Symbol& sym) {
            if (sym.exact()) throw stz::MathError("find_roots: float backend only");
            py::list out;
            for (const auto& z : stz::find_roots(sym.fl()).flat()) out.append(z.to_complex());
            return out;
        },
        py::arg("symbol"));

    m.def(
        "toeplitz_dense",
        [](const Symbol& sym, long long n) {
            return with_symbol(sym, [&]<class K>(const stz::LaurentSpec<K>& a) -> py::object {
                stz::DenseMatrix<K> t = stz::toeplitz_matrix(a, n);
                py::list rows;
                for (long long i = 0; i < n; ++i) {
                    py::list row;
                    for (long long j = 0; j < n; ++j) row.append(value_out(t.at(i, j)));
                    rows.append(row);
                }
                return rows;
            });
        },
        py::arg("symbol"), py::arg("n"));
}
