#include "wpline/classical.hpp"

#include <mutex>
#include <stdexcept>

namespace wpline {

Rat bernoulli(unsigned n) {
    static std::vector<Rat> cache{Rat(1)};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (cache.size() <= n) {
        unsigned m = unsigned(cache.size());
        // sum_{j=0}^{m} C(m+1, j) B_j = 0
        Rat s = 0;
        for (unsigned j = 0; j < m; ++j) s += rat_binom(long(m) + 1, j) * cache[j];
        cache.push_back(-s / Rat(long(m) + 1));
    }
    return cache[n];
}

Rat bernoulli_poly(unsigned n, const Rat& a) {
    Rat s = 0;
    for (unsigned k = 0; k <= n; ++k)
        s += rat_binom(long(n), k) * bernoulli(k) * rat_pow(a, long(n) - long(k));
    return s;
}

std::vector<Rat> zeta_coeffs(int N) {
    std::vector<Rat> c(size_t(N) + 1, Rat(0));
    for (int k = 1; k <= N; k += 2) c[size_t(k)] = rat(2) / (rat_pow(rat(2), k) * rat_factorial(unsigned(k)));
    return c;
}

std::vector<Rat> s_coeffs(int N) {
    std::vector<Rat> c(size_t(N) + 1, Rat(0));
    for (int k = 0; k <= N; k += 2)
        c[size_t(k)] = rat(2) / (rat_pow(rat(2), k + 1) * rat_factorial(unsigned(k) + 1));
    return c;
}

std::vector<Rat> inv_s_coeffs(int N) {
    TruncSeries w = TruncSeries::monomial(Rat(1), {VarSpec{"w", 0, N}}, {1});
    TruncSeries s = compose_univariate(s_coeffs(N), w);
    TruncSeries inv = s.inverse();
    std::vector<Rat> c(size_t(N) + 1, Rat(0));
    for (int k = 0; k <= N; ++k) c[size_t(k)] = inv.coeff({k});
    return c;
}

std::vector<Rat> exp_coeffs(int N) {
    std::vector<Rat> c(size_t(N) + 1);
    Rat f = 1;
    c[0] = 1;
    for (int k = 1; k <= N; ++k) {
        f *= k;
        c[size_t(k)] = Rat(1) / f;
    }
    return c;
}

TruncSeries zeta_z(int N, const std::string& var) {
    return compose_univariate(zeta_coeffs(N),
                              TruncSeries::monomial(Rat(1), {VarSpec{var, 0, N}}, {1}));
}

TruncSeries sz_z(int N, const std::string& var) {
    return compose_univariate(s_coeffs(N),
                              TruncSeries::monomial(Rat(1), {VarSpec{var, 0, N}}, {1}));
}

TruncSeries inv_zeta_z(int N, const std::string& var) {
    TruncSeries w = TruncSeries::monomial(Rat(1), {VarSpec{var, -1, N + 1}}, {1});
    TruncSeries invs = compose_univariate(inv_s_coeffs(N + 1), w);
    return invs.mul_monomial(Rat(1), {{var, -1}});
}

LogGammaExpansion log_gamma_asymp(const Rat& a, int N) {
    if (N < 0) throw std::invalid_argument("log_gamma_asymp: negative order");
    LogGammaExpansion e;
    e.a = a;
    e.coeff_x_ln_x = 1;
    e.coeff_x = -1;
    e.coeff_ln_x = a - rat(1, 2);
    e.log2pi_halves = 1;
    e.tail.resize(size_t(N));
    for (int n = 1; n <= N; ++n) {
        Rat t = bernoulli_poly(unsigned(n) + 1, a) / (Rat(n) * Rat(n + 1));
        e.tail[size_t(n) - 1] = (n % 2 == 1) ? t : -t;
    }
    return e;
}

SpecialSeries SpecialSeries::operator-() const {
    return SpecialSeries{-laurent, -x_ln_x, -ln_x, -log2pi_halves};
}

SpecialSeries operator+(const SpecialSeries& a, const SpecialSeries& b) {
    return SpecialSeries{a.laurent + b.laurent, a.x_ln_x + b.x_ln_x, a.ln_x + b.ln_x,
                         a.log2pi_halves + b.log2pi_halves};
}

SpecialSeries operator-(const SpecialSeries& a, const SpecialSeries& b) { return a + (-b); }

SpecialSeries operator*(const SpecialSeries& a, const SpecialSeries& b) {
    if (a.has_transcendental() && b.has_transcendental())
        throw std::domain_error("product of two transcendental-bearing series");
    const SpecialSeries& t = a.has_transcendental() ? a : b;
    const SpecialSeries& p = a.has_transcendental() ? b : a;
    SpecialSeries out;
    out.laurent = t.laurent * p.laurent;
    out.x_ln_x = t.x_ln_x * p.laurent;
    out.ln_x = t.ln_x * p.laurent;
    if (t.log2pi_halves != 0) {
        // (1/2) ln 2pi can only be rescaled, not multiplied into a series.
        Rat scalar = p.laurent.coeff(std::vector<int>(p.laurent.vars().size(), 0));
        if (p.laurent.terms().size() > (scalar != 0 ? 1u : 0u))
            throw std::domain_error("log-constant times non-scalar series");
        out.log2pi_halves = t.log2pi_halves * scalar;
    }
    return out;
}

SpecialSeries SpecialSeries::scaled(const Rat& c) const {
    return SpecialSeries{laurent.scaled(c), x_ln_x.scaled(c), ln_x.scaled(c), log2pi_halves * c};
}

} // namespace wpline
