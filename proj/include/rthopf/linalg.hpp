#pragma once

/*
 * linalg.hpp
 * ----------
 * Exact dense linear algebra over Rat: reduced row echelon form with
 * first-nonzero pivoting, rank, right kernel, span membership with witness
 * coordinates, and dual-basis extraction.
 *
 * Everything is exact; there is no tolerance parameter anywhere.  Pivoting
 * is deterministic (first nonzero entry in column order), so echelon forms,
 * kernel bases and witness coordinates are reproducible bit for bit.
 */

#include "rthopf/rational.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace rthopf {

struct Rref {
    QMatrix mat;
    std::vector<Eigen::Index> pivot_cols;

    Eigen::Index rank() const { return static_cast<Eigen::Index>(pivot_cols.size()); }
};

// Gauss-Jordan elimination; pivot = first row with a nonzero entry in the
// current column.  Entries stay reduced because Rat canonicalizes.
Rref rref(QMatrix m);

template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& m) {
    return rref(QMatrix(m)).rank();
}

// Basis of { v : M v = 0 }, one vector per free column, ordered by free
// column index, each scaled so its first nonzero coordinate is 1.
std::vector<QVector> kernel_basis(const QMatrix& m);

// Any exact solution of A x = b (free coordinates set to 0), or nullopt if
// the system is inconsistent.
std::optional<QVector> solve(const QMatrix& a, const QVector& b);

// Coordinates of v in span(S) when they exist.
std::optional<QVector> in_span(const QVector& v, const std::vector<QVector>& s);

class SingularBasisError : public std::runtime_error {
public:
    SingularBasisError(Eigen::Index column)
        : std::runtime_error("dual_basis: column " + std::to_string(column) +
                             " depends on earlier columns"),
          column_(column) {}

    Eigen::Index column() const { return column_; }

private:
    Eigen::Index column_;
};

// For a basis B = {e_1..e_n} given as coordinate vectors in a reference
// basis, returns functionals f_1..f_n (coefficient vectors against the
// reference dual basis) with f_j(e_i) = delta_ij.
std::vector<QVector> dual_basis(const std::vector<QVector>& b);

} // namespace rthopf
