#include "wpline/partitions.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace wpline {

namespace {

void gen(int n, int maxpart, Partition& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(n, maxpart); p >= 1; --p) {
        cur.push_back(p);
        gen(n - p, p, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw std::invalid_argument("negative partition weight");
    std::vector<Partition> out;
    Partition cur;
    gen(n, n, cur, out);
    if (n == 0) out = {Partition{}};
    return out;
}

int partition_weight(const Partition& p) {
    int w = 0;
    for (int x : p) w += x;
    return w;
}

namespace {

// Beta-set of lambda padded to length L: {lambda_i + L - i : i = 1..L},
// strictly decreasing. Removing a border strip of size t = replacing some
// beta by beta - t (>= 0, not yet present); the sign counts crossed beads.
Partition from_beta(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<int>());
    Partition lam;
    int L = int(beta.size());
    for (int i = 0; i < L; ++i) {
        int part = beta[size_t(i)] - (L - 1 - i);
        if (part > 0) lam.push_back(part);
    }
    return lam;
}

long long mn_rec(const Partition& lambda, const Partition& mu, size_t mu_pos,
                 std::map<std::pair<Partition, size_t>, long long>& memo);

long long mn_rec(const Partition& lambda, const Partition& mu, size_t mu_pos,
                 std::map<std::pair<Partition, size_t>, long long>& memo) {
    if (mu_pos == mu.size()) return lambda.empty() ? 1 : 0;
    auto key = std::make_pair(lambda, mu_pos);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    int t = mu[mu_pos];
    int L = std::max<int>(int(lambda.size()), 1);
    std::vector<int> beta(size_t(L), 0);
    std::set<int> present;
    for (int i = 1; i <= L; ++i) {
        int part = i <= int(lambda.size()) ? lambda[size_t(i) - 1] : 0;
        beta[size_t(i) - 1] = part + L - i;
        present.insert(beta[size_t(i) - 1]);
    }
    long long total = 0;
    for (int b : beta) {
        int nb = b - t;
        if (nb < 0 || present.count(nb)) continue;
        int crossed = 0;
        for (int c : beta)
            if (c > nb && c < b) ++crossed;
        std::vector<int> nbeta;
        for (int c : beta) nbeta.push_back(c == b ? nb : c);
        long long sub = mn_rec(from_beta(nbeta), mu, mu_pos + 1, memo);
        total += (crossed % 2 ? -sub : sub);
    }
    memo.emplace(key, total);
    return total;
}

std::map<Partition, std::map<std::pair<Partition, size_t>, long long>>& memo_by_mu() {
    static std::map<Partition, std::map<std::pair<Partition, size_t>, long long>> m;
    return m;
}

} // namespace

long long mn_character(const Partition& lambda, const Partition& mu) {
    if (partition_weight(lambda) != partition_weight(mu))
        throw std::invalid_argument("character arguments of different weight");
    static std::mutex mu_lock;
    std::lock_guard<std::mutex> lock(mu_lock);
    return mn_rec(lambda, mu, 0, memo_by_mu()[mu]);
}

long long dim_partition(const Partition& lambda) {
    int n = partition_weight(lambda);
    // Hook lengths.
    std::vector<int> conj(lambda.empty() ? 0 : size_t(lambda[0]), 0);
    for (size_t i = 0; i < lambda.size(); ++i)
        for (int j = 0; j < lambda[i]; ++j) ++conj[size_t(j)];
    Int prod = 1;
    for (size_t i = 0; i < lambda.size(); ++i)
        for (int j = 1; j <= lambda[i]; ++j)
            prod *= (lambda[i] - j) + (conj[size_t(j) - 1] - int(i) - 1) + 1;
    Int hook = int_factorial(unsigned(n)) / prod;
    Partition ones(size_t(n), 1);
    long long strip = mn_character(lambda, ones);
    if (Int(long(strip)) != hook) throw std::logic_error("tableau count mismatch between formulas");
    return strip;
}

Rat shifted_power_sum(const Partition& lambda, int s) {
    Rat total = 0;
    for (size_t i = 1; i <= lambda.size(); ++i) {
        Rat a = rat(2 * lambda[i - 1] - 2 * long(i) + 1, 2);
        Rat b = rat(-2 * long(i) + 1, 2);
        total += rat_pow(a, s) - rat_pow(b, s);
    }
    return total;
}

TruncSeries content_product_eigen(const Partition& lambda, int N) {
    std::vector<VarSpec> vars{VarSpec{"hbar", 0, N}, VarSpec{"x", -N, 0}};
    TruncSeries acc = TruncSeries::constant(Rat(1), vars);
    for (size_t i = 1; i <= lambda.size(); ++i) {
        long a = long(i) - lambda[i - 1];
        // (x + a h)/(x + i h) = (1 + a u)(1 - i u + i^2 u^2 - ...), u = h/x,
        // so [u^j] = (-i)^j + a (-i)^{j-1}.
        TruncSeries factor(vars);
        Rat prev = 0, cur = 1;
        for (int j = 0; j <= N; ++j) {
            factor.set_coeff({j, -j}, cur + Rat(a) * prev);
            prev = cur;
            cur *= rat(-long(i));
        }
        acc = acc * factor;
    }
    return acc;
}

std::vector<Rat> newton_to_elementary(const std::vector<Rat>& p, int n) {
    if (int(p.size()) < n) throw std::invalid_argument("need power sums up to degree n");
    std::vector<Rat> e(size_t(n) + 1, Rat(0));
    e[0] = 1;
    for (int m = 1; m <= n; ++m) {
        Rat total = 0;
        for (const Partition& mu : enumerate_partitions(m)) {
            Rat term = 1;
            // multiplicities of mu
            std::map<int, int> mult;
            for (int part : mu) ++mult[part];
            for (const auto& [k, mk] : mult)
                term *= rat_pow(-p[size_t(k) - 1], mk) /
                        (rat_factorial(unsigned(mk)) * rat_pow(rat(k), mk));
            total += term;
        }
        e[size_t(m)] = (m % 2 ? -total : total);
    }
    return e;
}

} // namespace wpline
