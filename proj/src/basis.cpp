#include "rthopf/basis.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace rthopf {

int forest_index(const Forest& f) {
    const auto& basis = forest_basis(f.weight());
    auto it = std::lower_bound(basis.begin(), basis.end(), f);
    if (it == basis.end() || *it != f)
        throw std::logic_error("forest_index: forest not in basis");
    return static_cast<int>(it - basis.begin());
}

bool is_ladder(const Tree& t) { return t.max_fertility() <= 1; }

bool is_ladder_forest(const Forest& f) {
    for (const Tree& t : f.trees()) {
        if (!is_ladder(t)) return false;
    }
    return true;
}

const std::vector<Forest>& ladder_basis(int n) {
    static std::map<int, std::vector<Forest>> cache;
    static std::mutex m;
    std::lock_guard<std::mutex> lock(m);
    auto it = cache.find(n);
    if (it == cache.end()) {
        std::vector<Forest> out;
        for (const Forest& f : forest_basis(n)) {
            if (is_ladder_forest(f)) out.push_back(f);
        }
        it = cache.emplace(n, std::move(out)).first;
    }
    return it->second;
}

QVector helem_coords(const HElem& x, int n) {
    return helem_coords(x, n, forest_basis(n));
}

QVector helem_coords(const HElem& x, int n, const std::vector<Forest>& basis) {
    QVector v = QVector::Zero(static_cast<Eigen::Index>(basis.size()));
    for (const auto& [f, c] : x.terms()) {
        if (f.weight() != n) continue;
        auto it = std::lower_bound(basis.begin(), basis.end(), f);
        if (it == basis.end() || *it != f)
            throw std::logic_error("helem_coords: term outside basis");
        v(static_cast<Eigen::Index>(it - basis.begin())) = c;
    }
    return v;
}

HElem helem_from_coords(int n, const QVector& v) {
    const auto& basis = forest_basis(n);
    if (v.rows() != static_cast<Eigen::Index>(basis.size()))
        throw std::invalid_argument("helem_from_coords: dimension mismatch");
    HElem x;
    for (Eigen::Index i = 0; i < v.rows(); ++i) {
        x.add_term(basis[static_cast<std::size_t>(i)], v(i));
    }
    return x;
}

} // namespace rthopf
