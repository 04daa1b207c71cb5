#pragma once
// Classical expansions the engine leans on: Bernoulli numbers/polynomials,
// the odd exponential-difference series zeta(w) = e^{w/2} - e^{-w/2} and its
// relatives, and the asymptotic expansion of ln Gamma. Everything exact.

#include "wpline/rational.hpp"
#include "wpline/series.hpp"

#include <vector>

namespace wpline {

// Convention z/(e^z - 1): bernoulli(1) = -1/2.
Rat bernoulli(unsigned n);
Rat bernoulli_poly(unsigned n, const Rat& a);

// Taylor coefficients through degree N inclusive (index = degree).
std::vector<Rat> zeta_coeffs(int N);    // zeta(w) = w + w^3/24 + w^5/1920 + ...
std::vector<Rat> s_coeffs(int N);       // S(w) = zeta(w)/w
std::vector<Rat> inv_s_coeffs(int N);   // 1/S(w) = 1 - w^2/24 + 7 w^4/5760 - ...
std::vector<Rat> exp_coeffs(int N);     // e^w

// The same as univariate series in a named variable, window [floor, N].
TruncSeries zeta_z(int N, const std::string& var = "z");
TruncSeries sz_z(int N, const std::string& var = "z");
TruncSeries inv_zeta_z(int N, const std::string& var = "z");  // floor -1

// ln Gamma(X + a) for large X:
//   X ln X - X + (a - 1/2) ln X + (1/2) ln 2pi + sum_{n>=1} tail[n-1] X^{-n},
//   tail[n-1] = (-1)^{n+1} B_{n+1}(a) / (n (n+1)).
struct LogGammaExpansion {
    Rat a;
    Rat coeff_x_ln_x;
    Rat coeff_x;
    Rat coeff_ln_x;
    Rat log2pi_halves;      // multiple of (1/2) ln 2pi
    std::vector<Rat> tail;  // coefficient of X^{-n} at index n-1
};

LogGammaExpansion log_gamma_asymp(const Rat& a, int N);

// Series with the two admissible transcendental directions x*ln x and ln x on
// top of a plain Laurent part, plus a rational multiple of (1/2) ln 2pi.
// Transcendental coefficient series must be x-free. Products of two series
// that both carry transcendental content are rejected.
struct SpecialSeries {
    TruncSeries laurent;
    TruncSeries x_ln_x;
    TruncSeries ln_x;
    Rat log2pi_halves = 0;

    bool is_zero() const {
        return laurent.is_zero() && x_ln_x.is_zero() && ln_x.is_zero() && log2pi_halves == 0;
    }
    bool has_transcendental() const {
        return !x_ln_x.is_zero() || !ln_x.is_zero() || log2pi_halves != 0;
    }

    SpecialSeries operator-() const;
    friend SpecialSeries operator+(const SpecialSeries& a, const SpecialSeries& b);
    friend SpecialSeries operator-(const SpecialSeries& a, const SpecialSeries& b);
    friend SpecialSeries operator*(const SpecialSeries& a, const SpecialSeries& b);
    SpecialSeries scaled(const Rat& c) const;
};

} // namespace wpline
