#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "conley/error.hpp"

namespace conley {

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

/// num/den in lowest terms. The two-argument mpq_class constructor does not
/// reduce, and unreduced values break comparison.
inline Rational ratio(const Integer& num, const Integer& den) {
    if (den == 0) fail(ErrorCode::domain, "zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Parses "p/q" or "p" (optional leading '-', decimal digits only).
inline Rational parse_rational(std::string_view text) {
    auto bad = [&]() -> Rational {
        fail(ErrorCode::format, "malformed rational '" + std::string(text) + "'");
    };
    if (text.empty()) return bad();
    std::size_t slash = text.find('/');
    auto digits_ok = [](std::string_view s, bool allow_sign) {
        if (allow_sign && !s.empty() && s.front() == '-') s.remove_prefix(1);
        if (s.empty()) return false;
        for (char ch : s)
            if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
        return true;
    };
    std::string_view num = text.substr(0, slash);
    if (!digits_ok(num, true)) return bad();
    Rational q;
    if (slash == std::string_view::npos) {
        q = Rational(Integer(std::string(num)));
        return q;
    }
    std::string_view den = text.substr(slash + 1);
    if (!digits_ok(den, false)) return bad();
    Integer d(std::string{den});
    if (d == 0) fail(ErrorCode::format, "zero denominator in '" + std::string(text) + "'");
    q = Rational(Integer(std::string(num)), d);
    q.canonicalize();
    return q;
}

/// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline int sign(const Rational& q) { return sgn(q); }

} // namespace conley
