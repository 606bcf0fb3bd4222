#include "rthopf/representation.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace rthopf;

namespace {

QMatrix mat2(long a, long b, long c, long d) {
    QMatrix m(2, 2);
    m << Rat(a), Rat(b), Rat(c), Rat(d);
    return m;
}

QVector vec2(long a, long b) {
    QVector v(2);
    v << Rat(a), Rat(b);
    return v;
}

EndoFamily unitriangular_family() {
    EndoFamily f;
    f.dim = 2;
    f.gens.emplace(ladder(1), mat2(1, 2, 0, 1));
    f.gens.emplace(ladder(2), mat2(1, 1, 0, 1));
    return f;
}

// commuting by construction: polynomials in one fixed matrix
EndoFamily random_commuting_family(std::mt19937_64& rng, int gens) {
    std::uniform_int_distribution<long> entry(-3, 3);
    QMatrix u = mat2(entry(rng), entry(rng), entry(rng), entry(rng));
    EndoFamily f;
    f.dim = 2;
    for (int i = 0; i < gens; ++i) {
        QMatrix m = QMatrix::Identity(2, 2) * Rat(entry(rng)) + u * Rat(entry(rng)) +
                    u * u * Rat(entry(rng));
        f.gens.emplace(generate_trees(i + 1)[0], m);
    }
    return f;
}

} // namespace

TEST_CASE("check_commuting") {
    REQUIRE(check_commuting(unitriangular_family()).commuting);

    EndoFamily bad;
    bad.dim = 2;
    bad.gens.emplace(ladder(1), mat2(1, 0, 0, 2));
    bad.gens.emplace(ladder(2), mat2(0, 1, 1, 0));
    const CommutingCheck c = check_commuting(bad);
    REQUIRE_FALSE(c.commuting);
    REQUIRE(c.pair.has_value());
    bool nonzero = false;
    for (Eigen::Index i = 0; i < 2; ++i)
        for (Eigen::Index j = 0; j < 2; ++j) nonzero = nonzero || !c.commutator(i, j).is_zero();
    REQUIRE(nonzero);

    EndoFamily single;
    single.dim = 2;
    single.gens.emplace(ladder(1), mat2(0, 1, 1, 0));
    REQUIRE(check_commuting(single).commuting);

    EndoFamily ragged;
    ragged.dim = 2;
    ragged.gens.emplace(ladder(1), QMatrix(QMatrix::Identity(3, 3)));
    REQUIRE_THROWS_AS(check_commuting(ragged), std::invalid_argument);
}

TEST_CASE("act_polynomial") {
    const EndoFamily f = unitriangular_family();
    const QVector v = vec2(1, 0);

    REQUIRE(act_polynomial(f, HElem::unit(), v) == v);

    // l1 * l2 acts by the matrix product [[1,3],[0,1]]
    const HElem x = product(HElem::from(ladder(1)), HElem::from(ladder(2)));
    REQUIRE(act_polynomial(f, x, v) == vec2(1, 0));
    REQUIRE(act_polynomial(f, x, vec2(0, 1)) == vec2(3, 1));

    // unlisted trees act as zero
    REQUIRE(act_polynomial(f, HElem::from(ladder(3)), v) == vec2(0, 0));

    EndoFamily bad;
    bad.dim = 2;
    bad.gens.emplace(ladder(1), mat2(1, 0, 0, 2));
    bad.gens.emplace(ladder(2), mat2(0, 1, 1, 0));
    REQUIRE_THROWS_AS(act_polynomial(bad, x, v), std::invalid_argument);
    REQUIRE_THROWS_AS(act_polynomial(f, x, QVector(QVector::Zero(3))), std::invalid_argument);
}

TEST_CASE("polynomial action is multiplicative and order independent") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        const EndoFamily f = random_commuting_family(rng, 3);
        REQUIRE(check_commuting(f).commuting);
        const HElem x = HElem::from(generate_trees(1)[0]);
        const HElem y = HElem::from(generate_trees(2)[0]);
        const QVector v = vec2(1, 2);
        const QVector lhs = act_polynomial(f, product(x, y), v);
        REQUIRE(lhs == act_polynomial(f, x, act_polynomial(f, y, v)));
        REQUIRE(lhs == act_polynomial(f, y, act_polynomial(f, x, v)));
    }
}

TEST_CASE("act_word composes without commutativity") {
    WordFamily w;
    w.dim = 2;
    w.gens.emplace("a", mat2(1, 0, 0, 2));
    w.gens.emplace("b", mat2(0, 1, 1, 0));
    const QVector v = vec2(1, 0);

    const std::vector<std::string> empty;
    REQUIRE(act_word(w, empty, v) == v);

    const std::vector<std::string> ab{"a", "b"};
    const std::vector<std::string> ba{"b", "a"};
    // f_a f_b (v) vs f_b f_a (v): order matters
    REQUIRE(act_word(w, ab, v) == vec2(0, 2));
    REQUIRE(act_word(w, ba, v) == vec2(0, 1));

    const std::vector<std::string> single{"a"};
    REQUIRE(act_word(w, single, v) == vec2(1, 0));

    const std::vector<std::string> unknown{"zzz"};
    REQUIRE(act_word(w, unknown, v) == vec2(0, 0));

    // concatenation = composition
    const std::vector<std::string> abba{"a", "b", "b", "a"};
    const std::vector<std::string> bb{"b", "b"};
    REQUIRE(act_word(w, abba, v) == act_word(w, ab, act_word(w, ba, v)));
    REQUIRE(act_word(w, bb, v) == v);
}

TEST_CASE("module morphisms") {
    const EndoFamily f = unitriangular_family();
    REQUIRE(is_module_morphism(f, f, QMatrix(QMatrix::Identity(2, 2))));
    REQUIRE(is_module_morphism(f, f, QMatrix(QMatrix::Zero(2, 2))));

    EndoFamily g = f;
    g.gens.at(ladder(1)) = mat2(1, 3, 0, 1);
    REQUIRE_FALSE(is_module_morphism(f, g, QMatrix(QMatrix::Identity(2, 2))));

    // morphisms compose
    const QMatrix h1 = mat2(2, 5, 0, 2); // commutes with unitriangular generators
    REQUIRE(is_module_morphism(f, f, h1));
    REQUIRE(is_module_morphism(f, f, QMatrix(h1 * h1)));

    REQUIRE_THROWS_AS(is_module_morphism(f, f, QMatrix(QMatrix::Identity(3, 3))),
                      std::invalid_argument);
}

TEST_CASE("families parse from JSON") {
    const EndoFamily f = EndoFamily::from_json(R"json({
      "dim": 2,
      "gens": {
        "()":   [["1", "2"], ["0", "1"]],
        "(())": [[1, 1], [0, 1]]
      }
    })json");
    REQUIRE(f.dim == 2);
    REQUIRE(f.gens.size() == 2);
    REQUIRE(f.gens.at(ladder(1)) == mat2(1, 2, 0, 1));
    REQUIRE(check_commuting(f).commuting);

    const WordFamily w = WordFamily::from_json(R"json({
      "dim": 1,
      "gens": { "x": [["1/2"]] }
    })json");
    REQUIRE(w.gens.at("x")(0, 0) == Rat(1, 2));

    REQUIRE_THROWS(EndoFamily::from_json(R"json({"dim": 2, "gens": {"()": [[1], [0, 1]]}})json"));
}
