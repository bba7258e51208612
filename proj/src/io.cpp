#include "stz/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace stz {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit((unsigned char)c)) return false;
    return true;
}

struct RealParse {
    ScaledComplex value;
    std::size_t consumed = 0;
};

// Parses [sign] digits [. digits] [e [sign] digits] starting at pos.
// The decimal exponent may exceed the double range; the value is assembled
// as mantissa * 10^E in scaled arithmetic.
RealParse parse_real(const std::string& s, std::size_t pos) {
    std::size_t i = pos;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        neg = (s[i] == '-');
        ++i;
    }
    double mant = 0.0;
    long long frac_digits = 0;
    bool any = false;
    bool in_frac = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (std::isdigit((unsigned char)c)) {
            mant = mant * 10.0 + double(c - '0');
            if (in_frac) ++frac_digits;
            any = true;
        } else if (c == '.' && !in_frac) {
            in_frac = true;
        } else {
            break;
        }
    }
    if (!any) throw ParseError("scalar: expected digits in '" + s + "'");
    long long exp10 = -frac_digits;
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        std::size_t j = i + 1;
        bool eneg = false;
        if (j < s.size() && (s[j] == '+' || s[j] == '-')) {
            eneg = (s[j] == '-');
            ++j;
        }
        if (j >= s.size() || !std::isdigit((unsigned char)s[j]))
            throw ParseError("scalar: malformed exponent in '" + s + "'");
        long long e = 0;
        for (; j < s.size() && std::isdigit((unsigned char)s[j]); ++j) {
            e = e * 10 + (s[j] - '0');
            if (e > (1LL << 50)) throw ParseError("scalar: exponent out of range");
        }
        exp10 += eneg ? -e : e;
        i = j;
    }
    ScaledComplex v(neg ? -mant : mant);
    if (exp10 > 0)
        v = v * pow_uint(ScaledComplex(10), exp10);
    else if (exp10 < 0)
        v = v / pow_uint(ScaledComplex(10), -exp10);
    return {v, i - pos};
}

std::string format_scaled_real(const ScaledComplex& comp) {
    double l2 = comp.abs_log2();
    if (comp.is_zero()) return "0";
    double l10 = l2 * 0.30102999566398120;
    char buf[64];
    if (std::fabs(l10) < 280.0) {
        std::snprintf(buf, sizeof buf, "%.17g", comp.to_complex().real());
        return buf;
    }
    long long d10 = (long long)std::floor(l10);
    ScaledComplex t = (d10 >= 0) ? comp / pow_uint(ScaledComplex(10), d10)
                                 : comp * pow_uint(ScaledComplex(10), -d10);
    std::snprintf(buf, sizeof buf, "%.17ge%+lld", t.to_complex().real(), d10);
    return buf;
}

}  // namespace

bool is_rational_literal(const std::string& s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    std::size_t slash = s.find('/', i);
    if (slash == std::string::npos) return all_digits(s.substr(i));
    return all_digits(s.substr(i, slash - i)) && all_digits(s.substr(slash + 1));
}

Rational parse_rational(const std::string& s) {
    if (!is_rational_literal(s)) throw ParseError("not an exact rational literal: '" + s + "'");
    std::size_t slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            Rational q(s);
            q.canonicalize();
            return q;
        }
        mpz_class num(s.substr(0, slash));
        mpz_class den(s.substr(slash + 1));
        if (sgn(den) == 0) throw ParseError("rational with zero denominator: '" + s + "'");
        Rational q(num, den);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw ParseError("malformed rational: '" + s + "'");
    }
}

ScaledComplex parse_scaled(const std::string& s) {
    if (s.empty()) throw ParseError("empty scalar");
    if (is_rational_literal(s)) {
        Rational q = parse_rational(s);
        // Convert num/den separately so huge integers survive.
        signed long int en = 0, ed = 0;
        double mn = mpz_get_d_2exp(&en, q.get_num().get_mpz_t());
        double md = mpz_get_d_2exp(&ed, q.get_den().get_mpz_t());
        if (mn == 0.0) return ScaledComplex();
        return ScaledComplex(std::complex<double>(mn, 0.0), en) /
               ScaledComplex(std::complex<double>(md, 0.0), ed);
    }

    // [real][+/- imag]i forms, including bare "i", "-i", "2.5i".
    std::size_t i = 0;
    auto parse_term = [&](bool& is_imag) -> ScaledComplex {
        bool neg = false;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            neg = (s[i] == '-');
            ++i;
        }
        ScaledComplex mag;
        if (i < s.size() && (s[i] == 'i' || s[i] == 'I')) {
            mag = ScaledComplex(1);
        } else {
            RealParse r = parse_real(s, i);
            i += r.consumed;
            mag = r.value;
        }
        is_imag = false;
        if (i < s.size() && (s[i] == 'i' || s[i] == 'I')) {
            is_imag = true;
            ++i;
        }
        return neg ? -mag : mag;
    };

    ScaledComplex re, im;
    bool first_imag = false;
    ScaledComplex first = parse_term(first_imag);
    (first_imag ? im : re) = first;
    if (i < s.size()) {
        if (s[i] != '+' && s[i] != '-') throw ParseError("malformed scalar: '" + s + "'");
        bool second_imag = false;
        ScaledComplex second = parse_term(second_imag);
        if (first_imag == second_imag) throw ParseError("malformed complex scalar: '" + s + "'");
        (second_imag ? im : re) = second;
    }
    if (i != s.size()) throw ParseError("trailing characters in scalar: '" + s + "'");
    return re + im * ScaledComplex(0.0, 1.0);
}

std::string format_scalar(const Rational& v) { return v.get_str(); }

std::string format_scalar(const ScaledComplex& v) {
    ScaledComplex re(std::complex<double>(v.mantissa().real(), 0.0), v.exponent());
    ScaledComplex im(std::complex<double>(v.mantissa().imag(), 0.0), v.exponent());
    if (im.is_zero()) return format_scaled_real(re);
    std::string imag = format_scaled_real(im) + "i";
    if (re.is_zero()) return imag;
    return format_scaled_real(re) + (imag[0] == '-' ? "" : "+") + imag;
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (!std::isspace((unsigned char)c)) {
            cur += c;
        }
    }
    if (!cur.empty() || !out.empty()) out.push_back(cur);
    return out;
}

std::vector<long long> parse_int_list(const std::string& s) {
    std::vector<long long> out;
    for (const auto& tok : split_list(s)) {
        if (tok.empty()) throw ParseError("empty entry in integer list '" + s + "'");
        try {
            std::size_t used = 0;
            long long v = std::stoll(tok, &used);
            if (used != tok.size()) throw ParseError("malformed integer '" + tok + "'");
            out.push_back(v);
        } catch (const std::logic_error&) {
            throw ParseError("malformed integer '" + tok + "'");
        }
    }
    return out;
}

Partition partition_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw ParseError("partition: expected a JSON array of integers");
    std::vector<long long> parts;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw ParseError("partition: expected integers");
        parts.push_back(v.get<long long>());
    }
    try {
        return Partition(std::move(parts));
    } catch (const Error& e) {
        throw ParseError(std::string("partition: ") + e.what());
    }
}

nlohmann::json partition_to_json(const Partition& p) {
    nlohmann::json j = nlohmann::json::array();
    for (long long v : p.parts()) j.push_back(v);
    return j;
}

nlohmann::json skew_to_json(const SkewPartition& sp) {
    return nlohmann::json{{"outer", partition_to_json(sp.outer)}, {"inner", partition_to_json(sp.inner)}};
}

SymbolDocument SymbolDocument::from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ParseError("symbol document: expected a JSON object");
    int payloads = int(j.contains("coeffs")) + int(j.contains("roots")) + int(j.contains("eseq"));
    if (payloads != 1)
        throw ParseError("symbol document: exactly one of \"coeffs\", \"roots\", \"eseq\" required");

    SymbolDocument doc;
    const char* list_key = nullptr;
    nlohmann::json body;
    if (j.contains("coeffs")) {
        doc.payload = Payload::coeffs;
        body = j.at("coeffs");
        list_key = "values";
    } else if (j.contains("roots")) {
        doc.payload = Payload::roots;
        body = j.at("roots");
        list_key = "z";
    } else {
        doc.payload = Payload::eseq;
        body = j.at("eseq");
        list_key = "e";
    }
    if (!body.is_object() || !body.contains("p") || !body.contains(list_key))
        throw ParseError("symbol document: malformed payload");
    if (!body.at("p").is_number_integer()) throw ParseError("symbol document: p must be an integer");
    doc.p = body.at("p").get<long long>();
    if (doc.payload != Payload::coeffs) {
        if (!body.contains("a_p")) throw ParseError("symbol document: missing a_p");
        if (body.at("a_p").is_string())
            doc.a_p = body.at("a_p").get<std::string>();
        else
            doc.a_p = body.at("a_p").dump();
    }
    if (!body.at(list_key).is_array()) throw ParseError("symbol document: scalar list expected");
    for (const auto& v : body.at(list_key)) {
        if (v.is_string())
            doc.values.push_back(v.get<std::string>());
        else if (v.is_number())
            doc.values.push_back(v.dump());
        else
            throw ParseError("symbol document: scalars must be strings or numbers");
    }
    if (doc.values.empty()) throw ParseError("symbol document: empty scalar list");
    return doc;
}

nlohmann::json SymbolDocument::to_json() const {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& v : values) list.push_back(v);
    switch (payload) {
        case Payload::coeffs:
            return {{"coeffs", {{"p", p}, {"values", list}}}};
        case Payload::roots:
            return {{"roots", {{"p", p}, {"a_p", a_p}, {"z", list}}}};
        case Payload::eseq:
            return {{"eseq", {{"p", p}, {"a_p", a_p}, {"e", list}}}};
    }
    throw ParseError("symbol document: unknown payload");
}

bool SymbolDocument::all_rational() const {
    for (const auto& v : values)
        if (!is_rational_literal(v)) return false;
    if (payload != Payload::coeffs && !is_rational_literal(a_p)) return false;
    return true;
}

}  // namespace stz
