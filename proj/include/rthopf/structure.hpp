#pragma once

/*
 * structure.hpp
 * -------------
 * Graded structural analysis: primitive bases by exact kernel computation,
 * grafting-word bases, subalgebra spans and generated-by-primitives defect
 * tables, strict gradedness, the multiply-by-l1 injectivity certificate for
 * integrals, and power independence of primitives.
 *
 * Primitives are never taken from closed formulas: per degree they are the
 * exact kernel of the reduced coproduct restricted to the graded piece
 * (optionally intersected with the ladder subalgebra), each kernel vector
 * normalized so its first nonzero coordinate in forest order is 1.
 */

#include "rthopf/basis.hpp"
#include "rthopf/hopf.hpp"
#include "rthopf/linalg.hpp"

#include <optional>
#include <span>
#include <vector>

namespace rthopf {

struct GradedBasis {
    int degree = 0;
    std::vector<HElem> elems;
    QMatrix coords;        // dim H_(degree) rows, one column per element
    bool is_basis = false; // independent and spanning the intended space
};

enum class Variant { full, ladder };
enum class Nesting { right, left };

GradedBasis primitive_basis(int n, Variant variant = Variant::full);

// All grafting words p_{i1} T p_{i2} T ... T p_{is} over the primitive
// bases, letter degrees composing n; flagged a basis iff they are
// independent and span H_(n).
GradedBasis top_monomial_basis(int n, Nesting nesting = Nesting::right);

// Span of all products of the generators with degrees summing to n.
// Generators must be homogeneous of positive degree.
GradedBasis subalgebra_degree_span(std::span<const HElem> generators, int n);

struct DefectRow {
    int degree = 0;
    int dim_total = 0;
    int dim_generated = 0;
    int defect = 0;
};

std::vector<DefectRow> primitively_generated_report(Variant variant, int nmax);

struct StrictlyGradedResult {
    bool strictly_graded = false;
    std::optional<HElem> witness; // a primitive of degree >= 2 when false
};

StrictlyGradedResult strictly_graded_check(int nmax, Variant variant = Variant::full);

// True iff multiplication by l_1 : H_(n) -> H_(n+1) has zero kernel.
bool integral_injectivity(int n);

// True iff x, x^2, ..., x^kmax are linearly independent; x must be a
// nonzero primitive.
bool power_independence(const HElem& x, int kmax);

} // namespace rthopf
