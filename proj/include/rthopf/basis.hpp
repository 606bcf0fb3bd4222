#pragma once

// Coordinates of graded pieces against the canonical forest basis.
// forest_basis(n) is generate_forests(n); the ladder sub-basis keeps only
// forests whose trees are all ladders (monomials in l_1..l_n).

#include "rthopf/hopf.hpp"
#include "rthopf/linalg.hpp"
#include "rthopf/tree.hpp"

#include <vector>

namespace rthopf {

inline const std::vector<Forest>& forest_basis(int n) { return generate_forests(n); }

// index of f within forest_basis(weight f); throws if absent
int forest_index(const Forest& f);

bool is_ladder(const Tree& t);
bool is_ladder_forest(const Forest& f);

const std::vector<Forest>& ladder_basis(int n);

// coordinates of the degree-n component of x
QVector helem_coords(const HElem& x, int n);
QVector helem_coords(const HElem& x, int n, const std::vector<Forest>& basis);
HElem helem_from_coords(int n, const QVector& v);

} // namespace rthopf
