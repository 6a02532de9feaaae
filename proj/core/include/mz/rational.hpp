#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <string>
#include <string_view>

#include "mz/errors.hpp"

namespace mz {

/// Exact arbitrary-precision rational scalar. boost::multiprecision keeps the
/// value canonical (gcd(|num|, den) = 1, den > 0) after every operation.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

using Complex = std::complex<double>;

inline BigInt num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline Rational rational_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

/// q^k for any integer k (k < 0 requires q != 0).
inline Rational rational_pow(const Rational& q, long long k) {
    if (k < 0) {
        if (q == 0) throw InvalidRatio("rational_pow: 0 cannot be raised to a negative power");
        return rational_pow(Rational(1) / q, -k);
    }
    Rational out(1), base(q);
    unsigned long long e = static_cast<unsigned long long>(k);
    while (e > 0) {
        if (e & 1ULL) out *= base;
        base *= base;
        e >>= 1ULL;
    }
    return out;
}

/// Parses "num/den" or "num" (optionally signed). Throws ParseError.
inline Rational parse_rational(std::string_view s) {
    try {
        auto slash = s.find('/');
        if (slash == std::string_view::npos) {
            return Rational(BigInt(std::string(s)));
        }
        BigInt n(std::string(s.substr(0, slash)));
        BigInt d(std::string(s.substr(slash + 1)));
        if (d == 0) throw ParseError("zero denominator in rational: " + std::string(s));
        return Rational(n, d);
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("malformed rational: " + std::string(s));
    }
}

/// Formats as "num/den", or just "num" when den == 1.
inline std::string format_rational(const Rational& r) {
    if (den(r) == 1) return num(r).str();
    return num(r).str() + "/" + den(r).str();
}

} // namespace mz
