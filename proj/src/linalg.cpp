#include "rthopf/linalg.hpp"

namespace rthopf {

Rref rref(QMatrix m) {
    const Eigen::Index rows = m.rows(), cols = m.cols();
    std::vector<Eigen::Index> pivots;
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index p = -1;
        for (Eigen::Index i = r; i < rows; ++i) {
            if (!m(i, c).is_zero()) { p = i; break; }
        }
        if (p < 0) continue;
        if (p != r) m.row(p).swap(m.row(r));
        const Rat inv = Rat(1) / m(r, c);
        for (Eigen::Index j = c; j < cols; ++j) m(r, j) *= inv;
        for (Eigen::Index i = 0; i < rows; ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            const Rat f = m(i, c);
            for (Eigen::Index j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return Rref{std::move(m), std::move(pivots)};
}

std::vector<QVector> kernel_basis(const QMatrix& m) {
    const Eigen::Index cols = m.cols();
    Rref e = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (Eigen::Index c : e.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;

    std::vector<QVector> basis;
    for (Eigen::Index f = 0; f < cols; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        QVector v = QVector::Zero(cols);
        v(f) = Rat(1);
        for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) {
            v(e.pivot_cols[i]) = -e.mat(static_cast<Eigen::Index>(i), f);
        }
        // scale so the first nonzero coordinate is 1
        for (Eigen::Index j = 0; j < cols; ++j) {
            if (!v(j).is_zero()) {
                const Rat inv = Rat(1) / v(j);
                for (Eigen::Index k = j; k < cols; ++k) v(k) *= inv;
                break;
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<QVector> solve(const QMatrix& a, const QVector& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve: dimension mismatch");
    QMatrix aug(a.rows(), a.cols() + 1);
    aug.leftCols(a.cols()) = a;
    aug.col(a.cols()) = b;
    Rref e = rref(std::move(aug));
    // inconsistent iff the augmented column is a pivot
    if (!e.pivot_cols.empty() && e.pivot_cols.back() == a.cols()) return std::nullopt;
    QVector x = QVector::Zero(a.cols());
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) {
        x(e.pivot_cols[i]) = e.mat(static_cast<Eigen::Index>(i), a.cols());
    }
    return x;
}

std::optional<QVector> in_span(const QVector& v, const std::vector<QVector>& s) {
    const Eigen::Index dim = v.rows();
    for (const QVector& u : s) {
        if (u.rows() != dim) throw std::invalid_argument("in_span: dimension mismatch");
    }
    QMatrix m(dim, static_cast<Eigen::Index>(s.size()));
    for (std::size_t j = 0; j < s.size(); ++j) m.col(static_cast<Eigen::Index>(j)) = s[j];
    return solve(m, v);
}

std::vector<QVector> dual_basis(const std::vector<QVector>& b) {
    if (b.empty()) return {};
    const Eigen::Index n = b[0].rows();
    if (static_cast<Eigen::Index>(b.size()) != n)
        throw std::invalid_argument("dual_basis: need exactly dim-many vectors");
    QMatrix m(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        if (b[static_cast<std::size_t>(j)].rows() != n)
            throw std::invalid_argument("dual_basis: dimension mismatch");
        m.col(j) = b[static_cast<std::size_t>(j)];
    }
    // invert by eliminating [M | I]; a missing pivot names the offending column
    QMatrix aug(n, 2 * n);
    aug.leftCols(n) = m;
    aug.rightCols(n) = QMatrix::Identity(n, n);
    Rref e = rref(std::move(aug));
    for (Eigen::Index j = 0; j < n; ++j) {
        if (static_cast<std::size_t>(j) >= e.pivot_cols.size() || e.pivot_cols[static_cast<std::size_t>(j)] != j)
            throw SingularBasisError(j);
    }
    // rows of M^{-1} are the dual functionals: f_j = row j of M^{-1}
    std::vector<QVector> duals;
    duals.reserve(static_cast<std::size_t>(n));
    for (Eigen::Index j = 0; j < n; ++j) {
        duals.push_back(e.mat.row(j).tail(n).transpose());
    }
    return duals;
}

} // namespace rthopf
