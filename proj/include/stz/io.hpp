#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "stz/partitions.hpp"
#include "stz/scalar.hpp"
#include "stz/toeplitz.hpp"

namespace stz {

// Scalar text forms: exact rationals "n" / "n/d", decimal floats with
// arbitrary decimal exponents, and complex "x+yi". Exact values round-trip
// with no precision loss.
bool is_rational_literal(const std::string& s);

Rational parse_rational(const std::string& s);
ScaledComplex parse_scaled(const std::string& s);

std::string format_scalar(const Rational& v);
std::string format_scalar(const ScaledComplex& v);

template <class K>
K parse_scalar(const std::string& s);

template <>
inline Rational parse_scalar<Rational>(const std::string& s) {
    return parse_rational(s);
}

template <>
inline ScaledComplex parse_scalar<ScaledComplex>(const std::string& s) {
    return parse_scaled(s);
}

// Comma-separated scalar list, e.g. "1,3/2,-4".
std::vector<std::string> split_list(const std::string& s);

// Comma-separated integers, e.g. "5,4,2"; empty string -> empty list.
std::vector<long long> parse_int_list(const std::string& s);

Partition partition_from_json(const nlohmann::json& j);
nlohmann::json partition_to_json(const Partition& p);
nlohmann::json skew_to_json(const SkewPartition& sp);

// One-payload symbol document:
//   {"coeffs": {"p": int, "values": [a_{p-w} .. a_p]}}
//   {"roots":  {"p": int, "a_p": scalar, "z": [z_1 .. z_w]}}
//   {"eseq":   {"p": int, "a_p": scalar, "e": [e_0 .. e_L]}}
struct SymbolDocument {
    enum class Payload { coeffs, roots, eseq };

    Payload payload = Payload::coeffs;
    long long p = 0;
    std::string a_p;                  // unused for coeffs (leading value is a_p)
    std::vector<std::string> values;  // coefficients, roots, or e-sequence

    static SymbolDocument from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;

    // True when every scalar literal is an exact rational.
    bool all_rational() const;

    template <class K>
    LaurentSpec<K> build() const {
        std::vector<K> vals;
        vals.reserve(values.size());
        for (const auto& s : values) vals.push_back(parse_scalar<K>(s));
        switch (payload) {
            case Payload::coeffs:
                return LaurentSpec<K>::from_coeffs(p, std::move(vals));
            case Payload::roots:
                return LaurentSpec<K>::from_roots(p, parse_scalar<K>(a_p), RootList<K>(std::move(vals)));
            case Payload::eseq:
                return LaurentSpec<K>::from_series(p, parse_scalar<K>(a_p), std::move(vals));
        }
        throw ParseError("symbol document: unknown payload");
    }
};

}  // namespace stz
