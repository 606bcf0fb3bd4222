#include "rthopf/linalg.hpp"
#include "rthopf/rational.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace rthopf;

namespace {

QMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
    QMatrix m(static_cast<Eigen::Index>(rows.size()),
              static_cast<Eigen::Index>(rows.begin()->size()));
    Eigen::Index i = 0;
    for (const auto& row : rows) {
        Eigen::Index j = 0;
        for (long v : row) m(i, j++) = Rat(v);
        ++i;
    }
    return m;
}

QVector vec(std::initializer_list<long> entries) {
    QVector v(static_cast<Eigen::Index>(entries.size()));
    Eigen::Index i = 0;
    for (long e : entries) v(i++) = Rat(e);
    return v;
}

} // namespace

TEST_CASE("Rat is always canonical") {
    REQUIRE(Rat(4, -6).str() == "-2/3");
    REQUIRE(Rat(4, -6) == Rat(-2, 3));
    REQUIRE(Rat::parse("7/21").str() == "1/3");
    REQUIRE(Rat::parse("-4/2").str() == "-2");
    REQUIRE((Rat(1, 2) + Rat(1, 3)).str() == "5/6");
    REQUIRE((Rat(1, 2) * Rat(2, 3)).str() == "1/3");
    REQUIRE((Rat(1) / Rat(3)).den() == 3);
    REQUIRE(Rat(0).is_zero());
    REQUIRE_THROWS_AS(Rat(1, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(Rat(1) / Rat(0), std::invalid_argument);
    REQUIRE_THROWS_AS(Rat::parse("x"), std::invalid_argument);
}

TEST_CASE("Eigen matrix products over Rat are exact") {
    QMatrix a(2, 2);
    a << Rat(1, 2), Rat(1, 3), Rat(1), Rat(0);
    QMatrix b = a * a;
    REQUIRE(b(0, 0) == Rat(7, 12));
    REQUIRE(b(0, 1) == Rat(1, 6));
}

TEST_CASE("rank examples") {
    REQUIRE(rank(QMatrix(QMatrix::Identity(3, 3))) == 3);
    REQUIRE(rank(QMatrix(QMatrix::Zero(2, 4))) == 0);
    REQUIRE(rank(mat({{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("kernel bases are normalized and exact") {
    REQUIRE(kernel_basis(QMatrix(QMatrix::Identity(3, 3))).empty());

    auto k1 = kernel_basis(mat({{1, 1}}));
    REQUIRE(k1.size() == 1);
    REQUIRE(k1[0](0) == Rat(1));
    REQUIRE(k1[0](1) == Rat(-1));

    auto k2 = kernel_basis(mat({{1, 2}, {2, 4}}));
    REQUIRE(k2.size() == 1);
    // proportional to (2, -1), leading coordinate scaled to 1
    REQUIRE(k2[0](0) == Rat(1));
    REQUIRE(k2[0](1) == Rat(-1, 2));
}

TEST_CASE("in_span returns witness coordinates") {
    auto zero = in_span(vec({0, 0}), {vec({1, 2}), vec({3, 4})});
    REQUIRE(zero.has_value());
    REQUIRE((*zero)(0).is_zero());
    REQUIRE((*zero)(1).is_zero());

    REQUIRE_FALSE(in_span(vec({1, 0}), {vec({0, 1})}).has_value());

    auto both = in_span(vec({1, 1}), {vec({1, 0}), vec({0, 1})});
    REQUIRE(both.has_value());
    REQUIRE((*both)(0) == Rat(1));
    REQUIRE((*both)(1) == Rat(1));

    REQUIRE_THROWS_AS(in_span(vec({1}), {vec({1, 0})}), std::invalid_argument);
}

TEST_CASE("dual_basis satisfies f_j(e_i) = delta_ij") {
    std::vector<QVector> std_basis{vec({1, 0}), vec({0, 1})};
    auto d0 = dual_basis(std_basis);
    REQUIRE(d0[0] == vec({1, 0}));
    REQUIRE(d0[1] == vec({0, 1}));

    std::vector<QVector> b{vec({1, 1}), vec({0, 1})};
    auto d = dual_basis(b);
    for (std::size_t j = 0; j < b.size(); ++j) {
        for (std::size_t i = 0; i < b.size(); ++i) {
            Rat pairing = (d[j].transpose() * b[i])(0);
            REQUIRE(pairing == (i == j ? Rat(1) : Rat(0)));
        }
    }
    REQUIRE(d[0] == vec({1, 0}));
    REQUIRE(d[1] == vec({-1, 1}));

    auto one_dim = dual_basis({QVector(vec({2}))});
    REQUIRE(one_dim[0](0) == Rat(1, 2));

    try {
        dual_basis({vec({1, 0}), vec({2, 0})});
        FAIL("expected SingularBasisError");
    } catch (const SingularBasisError& e) {
        REQUIRE(e.column() == 1);
    }
}

TEST_CASE("rank-nullity and kernel exactness on random matrices") {
    std::mt19937_64 rng(20240811);
    std::uniform_int_distribution<long> entry(-4, 4);
    std::uniform_int_distribution<int> dim(1, 6);
    for (int trial = 0; trial < 60; ++trial) {
        const Eigen::Index rows = dim(rng), cols = dim(rng);
        QMatrix m(rows, cols);
        for (Eigen::Index i = 0; i < rows; ++i)
            for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = Rat(entry(rng), 1 + (trial % 3));
        const auto kernel = kernel_basis(m);
        REQUIRE(rank(m) + static_cast<Eigen::Index>(kernel.size()) == cols);
        for (const QVector& v : kernel) {
            QVector image = m * v;
            for (Eigen::Index i = 0; i < rows; ++i) REQUIRE(image(i).is_zero());
        }
        auto sol = solve(m, QVector(m.col(0)));
        REQUIRE(sol.has_value());
        QVector check = m * *sol;
        for (Eigen::Index i = 0; i < rows; ++i) REQUIRE(check(i) == m(i, 0));
    }
}
