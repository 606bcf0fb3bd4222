#include "rthopf/enumeration.hpp"
#include "rthopf/errors.hpp"
#include "rthopf/tree.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace rthopf;

TEST_CASE("multichoose") {
    REQUIRE(multichoose(1, 3) == 1);
    REQUIRE(multichoose(2, 2) == 3);
    REQUIRE(multichoose(0, 5) == 0);
    REQUIRE(multichoose(0, 0) == 1);
    REQUIRE(multichoose(7, 0) == 1);

    // exhaustive multiset listing for 2 picks from 9 types
    long count = 0;
    for (int i = 0; i < 9; ++i)
        for (int j = i; j < 9; ++j) ++count;
    REQUIRE(multichoose(9, 2) == count);
    REQUIRE(multichoose(9, 2) == 45);
}

TEST_CASE("partitions") {
    REQUIRE(partitions(0).size() == 1);
    REQUIRE(partitions(0)[0].parts.empty());

    auto p2 = partitions(2);
    REQUIRE(p2.size() == 2);
    // iteration order: largest part descending
    REQUIRE(p2[0].parts == std::map<int, int>{{2, 1}});
    REQUIRE(p2[1].parts == std::map<int, int>{{1, 2}});

    REQUIRE(partitions(4).size() == 5);
    for (int n = 0; n <= 10; ++n) {
        for (const MultiPartition& p : partitions(n)) {
            REQUIRE(p.total() == n);
            for (auto [part, mult] : p.parts) {
                REQUIRE(part >= 1);
                REQUIRE(mult >= 1);
            }
        }
    }
}

TEST_CASE("count_trees matches the recurrence hand expansion") {
    REQUIRE_THROWS_AS(count_trees(0), std::domain_error);
    REQUIRE(count_trees(1) == 1);
    REQUIRE(count_trees(2) == 1);
    REQUIRE(count_trees(3) == 2);
    // a(4) = multichoose(a(1),3) + multichoose(a(1),1)*multichoose(a(2),1)
    //        + multichoose(a(3),1) = 1 + 1 + 2
    REQUIRE(count_trees(4) == 4);
}

TEST_CASE("count_trees equals the brute-force oracle") {
    for (int n = 1; n <= 12; ++n) REQUIRE(count_trees(n) == oracle_count(n));
}

TEST_CASE("counts beyond the oracle range match the classical tables") {
    REQUIRE(count_trees(16) == 235381);
    REQUIRE(count_trees(20) == 12826228);
    // fertility bound 2 gives the Wedderburn-Etherington numbers
    const std::vector<long> we{1, 1, 2, 3, 6, 11, 23, 46, 98, 207};
    for (int n = 1; n <= 10; ++n) {
        REQUIRE(count_branch_trees(2, n, BranchMode::corrected) ==
                we[static_cast<std::size_t>(n - 1)]);
    }
}

TEST_CASE("branch counts") {
    REQUIRE_THROWS_AS(count_branch_trees(0, 3, BranchMode::corrected), std::domain_error);
    REQUIRE_THROWS_AS(count_branch_trees(2, 0, BranchMode::corrected), std::domain_error);

    REQUIRE(count_branch_trees(1, 5, BranchMode::corrected) == 1);
    REQUIRE(count_branch_trees(1, 3, BranchMode::paper_literal) == 2);
    REQUIRE(count_branch_trees(2, 4, BranchMode::corrected) == 3);

    for (int r = 1; r <= 3; ++r) {
        for (int n = 1; n <= 10; ++n) {
            REQUIRE(count_branch_trees(r, n, BranchMode::corrected) == oracle_count_branch(r, n));
        }
    }

    // fertility bound inactive once r >= n - 1
    for (int n = 2; n <= 8; ++n) {
        for (int r = n - 1; r <= n + 1; ++r) {
            REQUIRE(count_branch_trees(r, n, BranchMode::corrected) == count_trees(n));
            REQUIRE(count_branch_trees(r, n, BranchMode::paper_literal) == count_trees(n));
        }
    }

    // monotonicity in r
    for (int r = 1; r <= 3; ++r) {
        for (int n = 1; n <= 8; ++n) {
            REQUIRE(count_branch_trees(r, n, BranchMode::corrected) <=
                    count_branch_trees(r + 1, n, BranchMode::corrected));
            REQUIRE(count_branch_trees(r + 1, n, BranchMode::corrected) <= count_trees(n));
        }
    }
}

TEST_CASE("paper-literal divergence ledger") {
    auto d = branch_divergence_scan(3, 10);
    REQUIRE(d.has_value());
    REQUIRE(d->r == 1);
    REQUIRE(d->n == 3);
    REQUIRE(d->literal == 2);
    REQUIRE(d->oracle == 1);
}

TEST_CASE("oracle guards") {
    REQUIRE(oracle_count(1) == 1);
    REQUIRE(oracle_count(3) == 2);
    REQUIRE(oracle_count_branch(1, 6) == 1);
    REQUIRE_THROWS_AS(oracle_count(15), BoundError);
    REQUIRE_THROWS_AS(oracle_count_branch(2, 15), BoundError);
}
