#pragma once
// Integer partitions, symmetric-group characters via the border-strip
// recursion, and the shifted power sums / content products that feed the
// operator eigenvalue formulas.
//
// Canonical partition order everywhere: reverse lexicographic, (n) first,
// (1,...,1) last. Matrix and table indexing relies on it.

#include "wpline/rational.hpp"
#include "wpline/series.hpp"

#include <vector>

namespace wpline {

using Partition = std::vector<int>;  // weakly decreasing, positive parts

std::vector<Partition> enumerate_partitions(int n);
int partition_weight(const Partition& p);

// Character of the symmetric group S_|lambda| at the conjugacy class mu.
// Memoized internally; |lambda| == |mu| required.
long long mn_character(const Partition& lambda, const Partition& mu);

// Number of standard tableaux; hook-length formula cross-checked against the
// border-strip recursion, mismatch throws.
long long dim_partition(const Partition& lambda);

// sum_{i>=1} ((lambda_i - i + 1/2)^s - (-i + 1/2)^s); terms vanish beyond len.
Rat shifted_power_sum(const Partition& lambda, int s);

// prod_{i=1}^{len} (x + (i - lambda_i) h) / (x + i h), expanded in 1/x through
// x^{-N}. Series in {x, hbar}; exponents satisfy (x-exp) + (hbar-exp) = 0.
TruncSeries content_product_eigen(const Partition& lambda, int N);

// Elementary from power sums: input p[k-1] = p_k for k = 1..n, output
// e[0..n]. Signed multiplicity formula over partitions of each degree.
std::vector<Rat> newton_to_elementary(const std::vector<Rat>& p, int n);

} // namespace wpline
