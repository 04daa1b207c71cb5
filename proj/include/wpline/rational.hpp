#pragma once
// Exact rational scalars. GMP keeps values canonical (reduced, positive
// denominator); the helpers below exist so construction sites cannot bypass
// canonicalization and so (de)serialization has one home.

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace wpline {

using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "n", "-n", "n/d"; used by the JSON reader.
inline Rat rat_parse(const std::string& s) {
    auto slash = s.find('/');
    Rat r;
    if (slash == std::string::npos)
        r = Rat(Int(s));
    else
        r = Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    r.canonicalize();
    return r;
}

inline std::string num_str(const Rat& r) { return r.get_num().get_str(); }
inline std::string den_str(const Rat& r) { return r.get_den().get_str(); }

inline std::string rat_str(const Rat& r) {
    if (r.get_den() == 1) return num_str(r);
    return num_str(r) + "/" + den_str(r);
}

inline Int int_factorial(unsigned n) {
    Int f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

inline Rat rat_factorial(unsigned n) { return Rat(int_factorial(n)); }

// Binomial with integer (possibly negative) upper index: C(a, k) = a(a-1)...(a-k+1)/k!.
inline Rat rat_binom(long a, unsigned k) {
    Rat num = 1;
    for (unsigned i = 0; i < k; ++i) num *= rat(a - long(i));
    return num / rat_factorial(k);
}

inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    if (base == 0 && e < 0) throw std::domain_error("0 to a negative power");
    Rat acc = 1;
    Rat b = e > 0 ? base : Rat(1) / base;
    for (long i = 0; i < (e > 0 ? e : -e); ++i) acc *= b;
    return acc;
}

} // namespace wpline
