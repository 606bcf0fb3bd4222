#pragma once

/*
 * enumeration.hpp
 * ---------------
 * Exact counting of rooted-tree classes by weight and of r-branch trees
 * (fertility bounded by r), with brute-force oracles over generate_trees.
 *
 * a(n+1) = sum over 1*k1 + 2*k2 + ... + n*kn = n of
 *          prod_i multichoose(a(i), ki),      a(1) = 1.
 *
 * The r-branch recurrence ships in two modes.  `corrected` constrains the
 * root fertility (sum of multiplicities <= r); `paper_literal` constrains
 * the number of distinct child weights instead.  The two disagree, and the
 * oracle adjudicates; see branch_divergence_scan.
 */

#include <gmpxx.h>

#include <map>
#include <optional>
#include <vector>

namespace rthopf {

using BigCount = mpz_class;

// part size -> multiplicity, finite support, all entries positive
struct MultiPartition {
    std::map<int, int> parts;

    int total() const {
        int s = 0;
        for (auto [i, k] : parts) s += i * k;
        return s;
    }
};

// multisets of size k from a types: binomial(a + k - 1, k)
BigCount multichoose(const BigCount& a, unsigned long k);

// All solutions of 1*k1 + ... + n*kn = n, largest part descending;
// partitions(0) = { {} }.
std::vector<MultiPartition> partitions(int n);

enum class BranchMode { corrected, paper_literal };

BigCount count_trees(int n);
BigCount count_branch_trees(int r, int n, BranchMode mode);

// Brute-force cardinalities; guarded at desk scale.
BigCount oracle_count(int n, int bound = 14);
BigCount oracle_count_branch(int r, int n, int bound = 14);

struct BranchDivergence {
    int r = 0;
    int n = 0;
    BigCount literal;
    BigCount oracle;
};

// First (r, n), scanned lexicographically, where the paper-literal mode
// disagrees with the oracle.
std::optional<BranchDivergence> branch_divergence_scan(int rmax = 3, int nmax = 10);

} // namespace rthopf
