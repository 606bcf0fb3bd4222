#pragma once

/*
 * representation.hpp
 * ------------------
 * Finite-dimensional modules given as finitely supported generator ->
 * matrix families.  A commuting EndoFamily (one exact matrix per tree
 * class, unlisted trees acting as zero) yields a module over the
 * polynomial algebra; a WordFamily (one matrix per free generator label,
 * no commutation imposed) yields a module over the free word algebra.
 */

#include "rthopf/hopf.hpp"
#include "rthopf/linalg.hpp"
#include "rthopf/tree.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>

namespace rthopf {

struct EndoFamily {
    Eigen::Index dim = 0;
    std::map<Tree, QMatrix> gens; // unlisted trees act as zero

    // JSON shape: {"dim": d, "gens": {"<tree>": [[rat, ...], ...]}}
    static EndoFamily from_json(const std::string& text);
};

struct WordFamily {
    Eigen::Index dim = 0;
    std::map<std::string, QMatrix> gens;

    static WordFamily from_json(const std::string& text);
};

struct CommutingCheck {
    bool commuting = true;
    // witness when not: the pair and their nonzero commutator
    std::optional<std::pair<Tree, Tree>> pair;
    QMatrix commutator;
};

CommutingCheck check_commuting(const EndoFamily& f);

// Action of x on v; forests act by products of the generator matrices,
// scalars by scaling.  Requires a commuting family.
QVector act_polynomial(const EndoFamily& f, const HElem& x, const QVector& v);

// Composition f_{w1} ... f_{wk} (v); unlisted labels act as zero.
QVector act_word(const WordFamily& w, std::span<const std::string> word, const QVector& v);

// h f_t = f'_t h for every generator in the union of the supports.
bool is_module_morphism(const EndoFamily& f, const EndoFamily& fprime, const QMatrix& h);

} // namespace rthopf
