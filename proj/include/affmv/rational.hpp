// Exact rational arithmetic used throughout the library.
// Thin alias over boost::multiprecision plus parse/format helpers for the
// "p/q" string encoding of the JSON schemas. No floating point anywhere.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace affmv {

using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return rat_den(r) == 1; }

// Largest integer <= r.
inline Int rat_floor(const Rat& r) {
    Int n = rat_num(r), d = rat_den(r);
    Int q = n / d;
    if (n < 0 && q * d != n) --q;
    return q;
}

inline Int rat_ceil(const Rat& r) { return -rat_floor(-r); }

inline std::string rat_to_string(const Rat& r) {
    std::string s = rat_num(r).str();
    if (rat_den(r) != 1) s += "/" + rat_den(r).str();
    return s;
}

// Accepts "p" or "p/q" with optional leading minus; rejects anything else
// (in particular decimal points, per the exactness contract).
inline std::optional<Rat> rat_from_string(const std::string& s) {
    if (s.empty()) return std::nullopt;
    auto digits = [](const std::string& t) {
        if (t.empty()) return false;
        size_t k = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (k == t.size()) return false;
        for (; k < t.size(); ++k)
            if (t[k] < '0' || t[k] > '9') return false;
        return true;
    };
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            if (!digits(s)) return std::nullopt;
            return Rat(Int(s));
        }
        std::string p = s.substr(0, slash), q = s.substr(slash + 1);
        if (!digits(p) || !digits(q)) return std::nullopt;
        Int qi(q);
        if (qi == 0) return std::nullopt;
        return Rat(Int(p), qi);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

inline Rat rat_parse(const std::string& s) {
    auto r = rat_from_string(s);
    if (!r) throw std::invalid_argument("not a rational literal: " + s);
    return *r;
}

}  // namespace affmv
