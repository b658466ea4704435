#pragma once

// Exact arithmetic base: arbitrary-precision integers and rationals.
// Every geometric predicate in this library runs on these types; there are
// no epsilon comparisons anywhere.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace latshift {

// Expression templates are off: arithmetic yields concrete values, which
// keeps mixed std::min/max and brace-init code mundane.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

enum class Errc {
    TooFewVertices,
    DegenerateArea,
    NotConvex,
    NotUnimodular,
    ZeroVector,
    ShiftNotInteger,
    MethodMismatch,
    ToleranceNotMet,
    ParseError,
};

inline const char* errc_name(Errc c) {
    switch (c) {
    case Errc::TooFewVertices: return "TooFewVertices";
    case Errc::DegenerateArea: return "DegenerateArea";
    case Errc::NotConvex: return "NotConvex";
    case Errc::NotUnimodular: return "NotUnimodular";
    case Errc::ZeroVector: return "ZeroVector";
    case Errc::ShiftNotInteger: return "ShiftNotInteger";
    case Errc::MethodMismatch: return "MethodMismatch";
    case Errc::ToleranceNotMet: return "ToleranceNotMet";
    case Errc::ParseError: return "ParseError";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
    throw Error(code, std::string(errc_name(code)) + ": " + what);
}

// Exact fraction with any-sign denominator (the underlying constructor
// insists on a positive one).
inline Rat make_rat(Int num, Int den) {
    if (den == 0) fail(Errc::ParseError, "zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rat(num, den);
}

// Floor division with arbitrary-sign numerator, positive denominator.
inline Int floor_div(const Int& num, const Int& den) {
    Int q = num / den;
    if (num % den != 0 && ((num < 0) != (den < 0))) --q;
    return q;
}

inline Int rat_floor(const Rat& r) {
    return floor_div(numerator(r), denominator(r));
}

inline Int rat_ceil(const Rat& r) {
    return -rat_floor(-r);
}

inline int rat_sign(const Rat& r) { return r.sign(); }

// Lowest terms, positive denominator; "p" when the denominator is 1.
inline std::string rat_str(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

// Accepts "p", "p/q", or decimal-free signed integers; exact.
inline Rat rat_parse(std::string_view text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) return Rat(Int(std::string(text)));
        Int num{std::string(text.substr(0, slash))};
        Int den{std::string(text.substr(slash + 1))};
        if (den == 0) fail(Errc::ParseError, "zero denominator in '" + std::string(text) + "'");
        return make_rat(num, den);
    } catch (const std::runtime_error&) {
        fail(Errc::ParseError, "not a rational: '" + std::string(text) + "'");
    }
}

inline double rat_double(const Rat& r) { return r.convert_to<double>(); }

inline std::int64_t to_i64(const Int& v) {
    return v.convert_to<std::int64_t>();
}

} // namespace latshift
