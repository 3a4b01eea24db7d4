#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>

namespace lg3 {

/// Exact rational scalar. GMP-backed; always stored in canonical reduced
/// form with positive denominator, so == is value equality.
using Rat = boost::multiprecision::mpq_rational;

using BigInt = boost::multiprecision::mpz_int;

[[nodiscard]] inline Rat rat_of(long n, long d = 1) {
    if (d == 0) throw std::invalid_argument("rat_of: zero denominator");
    return Rat(n, d);
}

/// Parse "p", "p/q", or a plain integer literal with optional sign. Goes
/// through integer parsing plus an exact division rather than mpq_set_str,
/// which would accept a zero denominator and skip canonicalization.
[[nodiscard]] inline Rat parse_rat(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("parse_rat: empty string");
    try {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rat(BigInt(s));
        BigInt n(s.substr(0, slash)), d(s.substr(slash + 1));
        if (d == 0) throw std::domain_error("zero denominator");
        Rat r(n);
        r /= Rat(d);
        return r;
    } catch (const std::exception&) {
        throw std::invalid_argument("parse_rat: bad rational '" + s + "'");
    }
}

/// Canonical text form: "p" when the denominator is 1, else "p/q".
[[nodiscard]] inline std::string rat_str(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace lg3
