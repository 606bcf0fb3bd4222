#include "rthopf/enumeration.hpp"

#include "rthopf/errors.hpp"
#include "rthopf/tree.hpp"

#include <mutex>
#include <stdexcept>

namespace rthopf {

BigCount multichoose(const BigCount& a, unsigned long k) {
    if (k == 0) return 1;
    if (sgn(a) == 0) return 0;
    BigCount top = a + static_cast<long>(k) - 1;
    BigCount out;
    mpz_bin_ui(out.get_mpz_t(), top.get_mpz_t(), k);
    return out;
}

namespace {

void partitions_rec(int remaining, int max_part, MultiPartition& acc,
                    std::vector<MultiPartition>& out) {
    if (remaining == 0) {
        out.push_back(acc);
        return;
    }
    for (int part = std::min(max_part, remaining); part >= 1; --part) {
        for (int mult = remaining / part; mult >= 1; --mult) {
            acc.parts[part] = mult;
            partitions_rec(remaining - part * mult, part - 1, acc, out);
            acc.parts.erase(part);
        }
    }
}

} // namespace

std::vector<MultiPartition> partitions(int n) {
    if (n < 0) throw std::invalid_argument("partitions: negative n");
    std::vector<MultiPartition> out;
    MultiPartition acc;
    partitions_rec(n, n, acc, out);
    return out;
}

namespace {

std::mutex count_mutex;

const BigCount& count_trees_locked(int n, std::vector<BigCount>& memo) {
    // memo[i] = a(i+1)
    while (static_cast<int>(memo.size()) < n) {
        const int m = static_cast<int>(memo.size()); // computing a(m+1)
        BigCount total = 0;
        for (const MultiPartition& p : partitions(m)) {
            BigCount prod = 1;
            for (auto [i, k] : p.parts) {
                prod *= multichoose(memo[static_cast<std::size_t>(i - 1)],
                                    static_cast<unsigned long>(k));
            }
            total += prod;
        }
        memo.push_back(total);
    }
    return memo[static_cast<std::size_t>(n - 1)];
}

} // namespace

BigCount count_trees(int n) {
    if (n < 1) throw std::domain_error("count_trees: weight must be positive");
    static std::vector<BigCount> memo = {BigCount(1)}; // a(1) = 1
    std::lock_guard<std::mutex> lock(count_mutex);
    return count_trees_locked(n, memo);
}

BigCount count_branch_trees(int r, int n, BranchMode mode) {
    if (r < 1) throw std::domain_error("count_branch_trees: r must be positive");
    if (n < 1) throw std::domain_error("count_branch_trees: weight must be positive");
    static std::map<std::pair<int, BranchMode>, std::vector<BigCount>> memos;
    std::lock_guard<std::mutex> lock(count_mutex);
    std::vector<BigCount>& memo = memos[{r, mode}];
    if (memo.empty()) memo.push_back(BigCount(1)); // a_r(1) = 1
    while (static_cast<int>(memo.size()) < n) {
        const int m = static_cast<int>(memo.size()); // computing a_r(m+1)
        BigCount total = 0;
        for (const MultiPartition& p : partitions(m)) {
            if (mode == BranchMode::corrected) {
                int fertility = 0;
                for (auto [i, k] : p.parts) fertility += k;
                if (fertility > r) continue;
            } else {
                if (static_cast<int>(p.parts.size()) > r) continue;
            }
            BigCount prod = 1;
            for (auto [i, k] : p.parts) {
                prod *= multichoose(memo[static_cast<std::size_t>(i - 1)],
                                    static_cast<unsigned long>(k));
            }
            total += prod;
        }
        memo.push_back(total);
    }
    return memo[static_cast<std::size_t>(n - 1)];
}

BigCount oracle_count(int n, int bound) {
    if (n < 1) throw std::domain_error("oracle_count: weight must be positive");
    if (n > bound)
        throw BoundError("oracle_count: n exceeds desk bound " + std::to_string(bound));
    return BigCount(static_cast<unsigned long>(generate_trees(n).size()));
}

BigCount oracle_count_branch(int r, int n, int bound) {
    if (r < 1) throw std::domain_error("oracle_count_branch: r must be positive");
    if (n < 1) throw std::domain_error("oracle_count_branch: weight must be positive");
    if (n > bound)
        throw BoundError("oracle_count_branch: n exceeds desk bound " + std::to_string(bound));
    unsigned long cnt = 0;
    for (const Tree& t : generate_trees(n)) {
        if (t.max_fertility() <= r) ++cnt;
    }
    return BigCount(cnt);
}

std::optional<BranchDivergence> branch_divergence_scan(int rmax, int nmax) {
    for (int r = 1; r <= rmax; ++r) {
        for (int n = 1; n <= nmax; ++n) {
            BigCount lit = count_branch_trees(r, n, BranchMode::paper_literal);
            BigCount orc = oracle_count_branch(r, n);
            if (lit != orc) return BranchDivergence{r, n, lit, orc};
        }
    }
    return std::nullopt;
}

} // namespace rthopf
