#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wbsdp {

// Exact arbitrary-precision rational, used for every coefficient in the
// pipeline. Floating point would break idempotency and orthogonality checks.
using Rat = mpq_class;
using Int = mpz_class;

// mpq_class arithmetic keeps values canonical, but the two-argument
// constructor does not canonicalize. Every rational entering the library
// must be canonical; build them with makeRat / parseRat, never Rat(a, b).
inline Rat makeRat(long num, long den) {
    Rat r{num, den};
    r.canonicalize();
    return r;
}

// Base 10 is forced: GMP's default auto-base would read leading zeros as
// octal.
inline Rat ratFromParts(const std::string& num, const std::string& den) {
    Rat r{Int(num, 10), Int(den, 10)};
    r.canonicalize();
    return r;
}

// Parses "a", "-a", "a/b". Throws on malformed input or zero denominator.
inline Rat parseRat(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            Rat r{Int(s, 10)};
            return r;
        }
        Int num(s.substr(0, slash), 10);
        Int den(s.substr(slash + 1), 10);
        if (den == 0) throw std::invalid_argument("zero denominator");
        Rat r(num, den);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not a rational: '" + s + "'");
    }
}

inline std::string ratToString(const Rat& r) {
    return r.get_str();
}

inline Rat ratPow(const Rat& base, unsigned long e) {
    Rat out = 1;
    Rat b = base;
    while (e > 0) {
        if (e & 1UL) out *= b;
        b *= b;
        e >>= 1UL;
    }
    return out;
}

inline Rat intPow(long base, unsigned long e) {
    return ratPow(Rat(base), e);
}

}  // namespace wbsdp
