#pragma once
// Truncated multivariate Laurent series with exact rational coefficients.
//
// Every series carries a per-variable window [floor, order] of exponents it
// may store. Floors are structural bounds (nothing exists below them; for
// variables used with truncation-from-below, keeping computations aligned on
// one declared floor is the caller's job). Orders are knowledge bounds: terms
// above them were truncated away. Arithmetic never pretends to know more than
// the operands: sums keep the weakest order, products use the sharp rule
//   order(ab) = min(order(a) + low(b), order(b) + low(a))
// with low(.) the least exponent actually present, so multiplying by a series
// that starts at positive degree does not lose precision. Within a window,
// absence of a term means the coefficient is exactly zero.

#include "wpline/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace wpline {

struct VarSpec {
    std::string name;
    int floor = 0;
    int order = 0;
    friend bool operator==(const VarSpec& a, const VarSpec& b) {
        return a.name == b.name && a.floor == b.floor && a.order == b.order;
    }
};

class TruncSeries {
  public:
    // Sentinel for "exact in this variable": no unknown terms above.
    static constexpr int kExactOrder = 1 << 24;

    TruncSeries() = default;
    explicit TruncSeries(std::vector<VarSpec> vars);

    static TruncSeries constant(const Rat& c, std::vector<VarSpec> vars = {});
    static TruncSeries monomial(const Rat& c, std::vector<VarSpec> vars,
                                const std::vector<int>& exps);

    const std::vector<VarSpec>& vars() const { return vars_; }
    const std::map<std::vector<int>, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    int var_index(const std::string& name) const;  // -1 if absent
    const VarSpec* var_spec(const std::string& name) const;

    void set_coeff(const std::vector<int>& exps, const Rat& c);
    void add_coeff(const std::vector<int>& exps, const Rat& c);
    Rat coeff(const std::vector<int>& exps) const;
    // Coefficient by variable name; unnamed variables take exponent 0.
    Rat coeff_named(const std::map<std::string, int>& exps) const;

    // Least exponent of `name` present, or kExactOrder when no term involves it.
    int low_exponent(const std::string& name) const;

    // Embeds into the union variable set, keeping this series' windows for its
    // own variables and adopting the given windows for new ones.
    TruncSeries with_vars(const std::vector<VarSpec>& extra) const;

    TruncSeries operator-() const;
    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
    TruncSeries& operator+=(const TruncSeries& o) { return *this = *this + o; }
    TruncSeries& operator-=(const TruncSeries& o) { return *this = *this - o; }
    TruncSeries& operator*=(const TruncSeries& o) { return *this = *this * o; }

    TruncSeries scaled(const Rat& c) const;
    // Multiply by c * prod_v v^{shift_v}; windows shift exactly. Variables not
    // yet present are added.
    TruncSeries mul_monomial(const Rat& c, const std::map<std::string, int>& shift) const;

    // Inversion around the lexicographically least exponent vector present.
    // Requires the residual a/corner - 1 to have no constant term.
    TruncSeries inverse() const;
    TruncSeries exp() const;  // requires zero constant term
    TruncSeries log() const;  // requires constant term exactly 1
    TruncSeries pow(unsigned k) const;

    // Tighten a window; drops out-of-window terms deliberately.
    TruncSeries restricted(const std::string& name, int floor, int order) const;

    // Coefficient of name^k as a series in the remaining variables.
    TruncSeries coeff_of(const std::string& name, int k) const;

    TruncSeries renamed(const std::string& from, const std::string& to) const;

    // x -> x + s*hbar, exact for series with finitely many terms above any
    // exponent (the asymptotic-tail regime this code uses throughout).
    TruncSeries shifted_x(const Rat& s, const std::string& xname = "x",
                          const std::string& hname = "hbar") const;

    bool operator==(const TruncSeries& o) const {
        return vars_ == o.vars_ && terms_ == o.terms_;
    }

  private:
    std::vector<VarSpec> vars_;  // kept sorted by name
    std::map<std::vector<int>, Rat> terms_;

    bool in_window(const std::vector<int>& exps) const;
    static TruncSeries unify(const TruncSeries& a, const TruncSeries& b,
                             TruncSeries* bout);
};

// sum_k coeffs[k] * arg^k for an argument with no constant term.
TruncSeries compose_univariate(const std::vector<Rat>& coeffs, const TruncSeries& arg);

} // namespace wpline
