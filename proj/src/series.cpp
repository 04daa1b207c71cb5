#include "wpline/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace wpline {

namespace {

int sat_add(int a, int b) {
    long s = long(a) + long(b);
    if (s > TruncSeries::kExactOrder) return TruncSeries::kExactOrder;
    if (s < -TruncSeries::kExactOrder) return -TruncSeries::kExactOrder;
    return int(s);
}

std::vector<VarSpec> sorted_vars(std::vector<VarSpec> vars) {
    std::sort(vars.begin(), vars.end(),
              [](const VarSpec& a, const VarSpec& b) { return a.name < b.name; });
    for (size_t i = 1; i < vars.size(); ++i)
        if (vars[i].name == vars[i - 1].name)
            throw std::invalid_argument("duplicate variable " + vars[i].name);
    for (const auto& v : vars)
        if (v.floor > v.order)
            throw std::invalid_argument("empty window for variable " + v.name);
    return vars;
}

// Truncation bounds that stay valid under repeated multiplication by m.
// Dropping a term above a window order is only safe when no exponent of m is
// negative in that variable (nothing ever descends back into the window);
// floors are the mirror case. Unsafe directions stay open.
struct MulClamp {
    std::vector<std::string> names;
    std::vector<int> floor, order;
};

MulClamp make_clamp(const TruncSeries& m) {
    MulClamp c;
    for (const auto& v : m.vars()) {
        bool rises = false, falls = false;
        int i = m.var_index(v.name);
        for (const auto& [e, co] : m.terms()) {
            if (e[size_t(i)] > 0) rises = true;
            if (e[size_t(i)] < 0) falls = true;
        }
        c.names.push_back(v.name);
        c.floor.push_back(rises ? -TruncSeries::kExactOrder : v.floor);
        c.order.push_back(falls ? TruncSeries::kExactOrder : v.order);
    }
    return c;
}

TruncSeries clamp_power(TruncSeries s, const MulClamp& c) {
    for (size_t i = 0; i < c.names.size(); ++i) {
        const VarSpec* v = s.var_spec(c.names[i]);
        if (!v) continue;
        int lo = std::max(v->floor, c.floor[i]);
        int hi = std::min(v->order, c.order[i]);
        if (lo > v->floor || hi < v->order) s = s.restricted(c.names[i], lo, hi);
    }
    return s;
}

} // namespace

TruncSeries::TruncSeries(std::vector<VarSpec> vars) : vars_(sorted_vars(std::move(vars))) {}

TruncSeries TruncSeries::constant(const Rat& c, std::vector<VarSpec> vars) {
    TruncSeries s(std::move(vars));
    if (c != 0) s.set_coeff(std::vector<int>(s.vars_.size(), 0), c);
    return s;
}

TruncSeries TruncSeries::monomial(const Rat& c, std::vector<VarSpec> vars,
                                  const std::vector<int>& exps) {
    TruncSeries s(std::move(vars));
    if (exps.size() != s.vars_.size())
        throw std::invalid_argument("monomial exponent arity mismatch");
    if (c != 0) s.set_coeff(exps, c);
    return s;
}

int TruncSeries::var_index(const std::string& name) const {
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i].name == name) return int(i);
    return -1;
}

const VarSpec* TruncSeries::var_spec(const std::string& name) const {
    int i = var_index(name);
    return i < 0 ? nullptr : &vars_[i];
}

bool TruncSeries::in_window(const std::vector<int>& exps) const {
    for (size_t i = 0; i < vars_.size(); ++i)
        if (exps[i] > vars_[i].order) return false;
    return true;
}

void TruncSeries::set_coeff(const std::vector<int>& exps, const Rat& c) {
    if (exps.size() != vars_.size())
        throw std::invalid_argument("exponent arity mismatch");
    for (size_t i = 0; i < vars_.size(); ++i)
        if (exps[i] < vars_[i].floor)
            throw std::invalid_argument("exponent below declared floor of " + vars_[i].name);
    if (!in_window(exps) || c == 0)
        terms_.erase(exps);
    else
        terms_[exps] = c;
}

void TruncSeries::add_coeff(const std::vector<int>& exps, const Rat& c) {
    if (exps.size() != vars_.size())
        throw std::invalid_argument("exponent arity mismatch");
    for (size_t i = 0; i < vars_.size(); ++i)
        if (exps[i] < vars_[i].floor)
            throw std::invalid_argument("exponent below declared floor of " + vars_[i].name);
    if (!in_window(exps)) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(exps, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

Rat TruncSeries::coeff(const std::vector<int>& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? Rat(0) : it->second;
}

Rat TruncSeries::coeff_named(const std::map<std::string, int>& exps) const {
    std::vector<int> e(vars_.size(), 0);
    for (const auto& [name, k] : exps) {
        int i = var_index(name);
        if (i < 0) {
            if (k != 0) return Rat(0);
            continue;
        }
        e[i] = k;
    }
    return coeff(e);
}

int TruncSeries::low_exponent(const std::string& name) const {
    int i = var_index(name);
    int low = kExactOrder;
    if (i < 0) return terms_.empty() ? kExactOrder : 0;
    for (const auto& [e, c] : terms_) low = std::min(low, e[i]);
    return low;
}

TruncSeries TruncSeries::with_vars(const std::vector<VarSpec>& extra) const {
    std::vector<VarSpec> merged = vars_;
    for (const auto& v : extra)
        if (var_index(v.name) < 0) merged.push_back(v);
    TruncSeries out(std::move(merged));
    std::vector<int> idx(vars_.size());
    for (size_t i = 0; i < vars_.size(); ++i) idx[i] = out.var_index(vars_[i].name);
    for (const auto& [e, c] : terms_) {
        std::vector<int> ne(out.vars_.size(), 0);
        for (size_t i = 0; i < vars_.size(); ++i) ne[idx[i]] = e[i];
        out.set_coeff(ne, c);
    }
    return out;
}

// Remaps a and b onto their union variable set. Variables absent from one
// operand get the implicit window [0, kExactOrder] on that side: a series not
// mentioning v is constant in v, hence exact there.
TruncSeries TruncSeries::unify(const TruncSeries& a, const TruncSeries& b, TruncSeries* bout) {
    std::vector<VarSpec> ua = a.vars_;
    for (const auto& v : b.vars_)
        if (a.var_index(v.name) < 0) ua.push_back(VarSpec{v.name, 0, kExactOrder});
    std::vector<VarSpec> ub = b.vars_;
    for (const auto& v : a.vars_)
        if (b.var_index(v.name) < 0) ub.push_back(VarSpec{v.name, 0, kExactOrder});
    TruncSeries ra = a.with_vars(ua);
    *bout = b.with_vars(ub);
    return ra;
}

TruncSeries TruncSeries::operator-() const {
    TruncSeries out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries rb;
    TruncSeries ra = TruncSeries::unify(a, b, &rb);
    std::vector<VarSpec> vars = ra.vars_;
    for (auto& v : vars) {
        const VarSpec* w = rb.var_spec(v.name);
        v.floor = std::min(v.floor, w->floor);
        v.order = std::min(v.order, w->order);
    }
    TruncSeries out(vars);
    for (const auto& [e, c] : ra.terms_) out.add_coeff(e, c);
    for (const auto& [e, c] : rb.terms_) out.add_coeff(e, c);
    return out;
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return a + (-b); }

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries rb;
    TruncSeries ra = TruncSeries::unify(a, b, &rb);
    std::vector<VarSpec> vars = ra.vars_;
    for (auto& v : vars) {
        const VarSpec* w = rb.var_spec(v.name);
        int la = ra.low_exponent(v.name), lb = rb.low_exponent(v.name);
        v.floor = sat_add(v.floor, w->floor);
        v.order = std::min(sat_add(v.order, lb), sat_add(w->order, la));
        if (v.floor > v.order) v.floor = v.order;  // empty operand; result is zero anyway
    }
    TruncSeries out(vars);
    if (ra.terms_.empty() || rb.terms_.empty()) return out;
    std::vector<int> e(vars.size());
    for (const auto& [ea, ca] : ra.terms_)
        for (const auto& [eb, cb] : rb.terms_) {
            bool keep = true;
            for (size_t i = 0; i < e.size(); ++i) {
                e[i] = ea[i] + eb[i];
                if (e[i] > out.vars_[i].order) { keep = false; break; }
            }
            if (keep) out.add_coeff(e, ca * cb);
        }
    return out;
}

TruncSeries TruncSeries::scaled(const Rat& c) const {
    TruncSeries out(vars_);
    if (c == 0) return out;
    out.terms_ = terms_;
    for (auto& [e, v] : out.terms_) v *= c;
    return out;
}

TruncSeries TruncSeries::mul_monomial(const Rat& c, const std::map<std::string, int>& shift) const {
    std::vector<VarSpec> vars = vars_;
    for (const auto& [name, k] : shift)
        if (var_index(name) < 0) vars.push_back(VarSpec{name, std::min(k, 0), kExactOrder});
    TruncSeries out(vars);
    std::vector<int> delta(out.vars_.size(), 0);
    for (const auto& [name, k] : shift) delta[out.var_index(name)] = k;
    for (auto& v : out.vars_) {
        auto it = shift.find(v.name);
        int d = it == shift.end() ? 0 : it->second;
        if (var_index(v.name) >= 0) {
            const VarSpec& old = *var_spec(v.name);
            v.floor = sat_add(old.floor, d);
            v.order = sat_add(old.order, d);
        }
    }
    if (c == 0) return out;
    std::vector<int> idx(vars_.size());
    for (size_t i = 0; i < vars_.size(); ++i) idx[i] = out.var_index(vars_[i].name);
    for (const auto& [e, v] : terms_) {
        std::vector<int> ne = delta;
        for (size_t i = 0; i < vars_.size(); ++i) ne[idx[i]] += e[i];
        out.set_coeff(ne, v * c);
    }
    return out;
}

TruncSeries TruncSeries::inverse() const {
    if (terms_.empty()) throw std::domain_error("inverse of zero series");
    const auto& [corner_e, corner_c] = *terms_.begin();
    std::map<std::string, int> down;
    for (size_t i = 0; i < vars_.size(); ++i)
        if (corner_e[i] != 0) down[vars_[i].name] = -corner_e[i];
    TruncSeries shifted = mul_monomial(Rat(1) / corner_c, down);
    TruncSeries resid = shifted - constant(Rat(1), shifted.vars_);
    MulClamp cl = make_clamp(resid);
    TruncSeries acc = constant(Rat(1), shifted.vars_);
    TruncSeries pw = acc;
    for (int k = 1; !resid.is_zero(); ++k) {
        if (k > 4096) throw std::runtime_error("series inverse does not terminate");
        pw = clamp_power(pw * resid, cl);
        if (pw.is_zero()) break;
        acc = (k % 2) ? acc - pw : acc + pw;
    }
    return acc.mul_monomial(Rat(1) / corner_c, down);
}

TruncSeries TruncSeries::exp() const {
    if (coeff(std::vector<int>(vars_.size(), 0)) != 0)
        throw std::domain_error("exp of series with constant term");
    MulClamp cl = make_clamp(*this);
    TruncSeries acc = constant(Rat(1), vars_);
    TruncSeries pw = acc;
    Rat fact = 1;
    for (int k = 1;; ++k) {
        if (k > 4096) throw std::runtime_error("series exp does not terminate");
        pw = clamp_power(pw * *this, cl);
        if (pw.is_zero()) break;
        fact *= k;
        acc += pw.scaled(Rat(1) / fact);
    }
    return acc;
}

TruncSeries TruncSeries::log() const {
    if (coeff(std::vector<int>(vars_.size(), 0)) != 1)
        throw std::domain_error("log of series with constant term != 1");
    TruncSeries u = *this - constant(Rat(1), vars_);
    TruncSeries acc(u.vars_);
    TruncSeries pw = constant(Rat(1), u.vars_);
    for (int k = 1;; ++k) {
        if (k > 4096) throw std::runtime_error("series log does not terminate");
        pw = pw * u;
        if (pw.is_zero()) break;
        acc = (k % 2) ? acc + pw.scaled(rat(1, k)) : acc - pw.scaled(rat(1, k));
    }
    return acc;
}

TruncSeries TruncSeries::pow(unsigned k) const {
    TruncSeries acc = constant(Rat(1), vars_);
    for (unsigned i = 0; i < k; ++i) acc = acc * *this;
    return acc;
}

TruncSeries TruncSeries::restricted(const std::string& name, int floor, int order) const {
    int i = var_index(name);
    if (i < 0) throw std::invalid_argument("restricted: unknown variable " + name);
    TruncSeries out(vars_);
    out.vars_[i].floor = floor;
    out.vars_[i].order = order;
    for (const auto& [e, c] : terms_)
        if (e[i] >= floor && e[i] <= order) out.terms_.emplace(e, c);
    return out;
}

TruncSeries TruncSeries::coeff_of(const std::string& name, int k) const {
    int i = var_index(name);
    if (i < 0) {
        if (k == 0) return *this;
        return TruncSeries(vars_);
    }
    if (k > vars_[i].order)
        throw std::out_of_range("coefficient of " + name + " above truncation order");
    std::vector<VarSpec> rest;
    for (size_t j = 0; j < vars_.size(); ++j)
        if (int(j) != i) rest.push_back(vars_[j]);
    TruncSeries out(rest);
    for (const auto& [e, c] : terms_) {
        if (e[i] != k) continue;
        std::vector<int> ne;
        ne.reserve(e.size() - 1);
        for (size_t j = 0; j < e.size(); ++j)
            if (int(j) != i) ne.push_back(e[j]);
        out.set_coeff(ne, c);
    }
    return out;
}

TruncSeries TruncSeries::renamed(const std::string& from, const std::string& to) const {
    int i = var_index(from);
    if (i < 0) throw std::invalid_argument("renamed: unknown variable " + from);
    if (var_index(to) >= 0) throw std::invalid_argument("renamed: " + to + " already present");
    std::vector<VarSpec> vars = vars_;
    vars[size_t(i)].name = to;
    TruncSeries out(vars);  // re-sorts
    std::vector<int> idx(vars.size());
    for (size_t j = 0; j < vars.size(); ++j) idx[j] = out.var_index(vars[j].name);
    for (const auto& [e, c] : terms_) {
        std::vector<int> ne(e.size());
        for (size_t j = 0; j < e.size(); ++j) ne[idx[j]] = e[j];
        out.set_coeff(ne, c);
    }
    return out;
}

TruncSeries TruncSeries::shifted_x(const Rat& s, const std::string& xname,
                                   const std::string& hname) const {
    int xi = var_index(xname);
    if (xi < 0 || s == 0) return *this;
    TruncSeries base = *this;
    if (base.var_index(hname) < 0)
        base = base.with_vars({VarSpec{hname, 0, kExactOrder}});
    int xj = base.var_index(xname), hj = base.var_index(hname);
    const int xfloor = base.vars_[size_t(xj)].floor;
    const int horder = base.vars_[size_t(hj)].order;
    TruncSeries out(base.vars_);
    for (const auto& [e, c] : base.terms_) {
        int k = e[size_t(xj)];
        int jmax = k >= 0 ? k : k - xfloor;
        Rat spow = 1;
        for (int j = 0; j <= jmax; ++j) {
            if (e[size_t(hj)] + j > horder) break;
            std::vector<int> ne = e;
            ne[size_t(xj)] = k - j;
            ne[size_t(hj)] += j;
            out.add_coeff(ne, c * rat_binom(k, unsigned(j)) * spow);
            spow *= s;
        }
    }
    return out;
}

TruncSeries compose_univariate(const std::vector<Rat>& coeffs, const TruncSeries& arg) {
    if (arg.coeff(std::vector<int>(arg.vars().size(), 0)) != 0)
        throw std::domain_error("compose_univariate: argument has a constant term");
    TruncSeries acc = TruncSeries::constant(coeffs.empty() ? Rat(0) : coeffs[0], arg.vars());
    TruncSeries pw = TruncSeries::constant(Rat(1), arg.vars());
    for (size_t k = 1; k < coeffs.size(); ++k) {
        pw = pw * arg;
        if (pw.is_zero()) break;
        if (coeffs[k] != 0) acc += pw.scaled(coeffs[k]);
    }
    return acc;
}

} // namespace wpline
