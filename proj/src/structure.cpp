#include "rthopf/structure.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace rthopf {

namespace {

QMatrix column_matrix(const std::vector<HElem>& elems, int n) {
    const auto& basis = forest_basis(n);
    QMatrix m = QMatrix::Zero(static_cast<Eigen::Index>(basis.size()),
                              static_cast<Eigen::Index>(elems.size()));
    for (std::size_t j = 0; j < elems.size(); ++j) {
        m.col(static_cast<Eigen::Index>(j)) = helem_coords(elems[j], n, basis);
    }
    return m;
}

GradedBasis compute_primitive_basis(int n, Variant variant) {
    const std::vector<Forest>& domain =
        variant == Variant::full ? forest_basis(n) : ladder_basis(n);

    // rows indexed by the tensor terms appearing in any reduced coproduct
    std::vector<TensorElem> images;
    images.reserve(domain.size());
    std::map<TensorElem::Key, int, TensorKeyLess> rows;
    for (const Forest& f : domain) {
        TensorElem d = reduced_coproduct(HElem::from(f));
        for (const auto& [k, c] : d.terms()) rows.emplace(k, 0);
        images.push_back(std::move(d));
    }
    int r = 0;
    for (auto& [k, idx] : rows) idx = r++;

    QMatrix m = QMatrix::Zero(r, static_cast<Eigen::Index>(domain.size()));
    for (std::size_t j = 0; j < domain.size(); ++j) {
        for (const auto& [k, c] : images[j].terms()) {
            m(rows.at(k), static_cast<Eigen::Index>(j)) = c;
        }
    }

    GradedBasis out;
    out.degree = n;
    for (const QVector& v : kernel_basis(m)) {
        HElem p;
        for (Eigen::Index i = 0; i < v.rows(); ++i) {
            p.add_term(domain[static_cast<std::size_t>(i)], v(i));
        }
        out.elems.push_back(std::move(p));
    }
    out.coords = column_matrix(out.elems, n);
    out.is_basis = true; // kernel vectors are independent by construction
    return out;
}

} // namespace

GradedBasis primitive_basis(int n, Variant variant) {
    if (n < 1) throw std::domain_error("primitive_basis: degree must be positive");
    static std::map<std::pair<int, int>, GradedBasis> memo;
    static std::mutex m;
    std::lock_guard<std::mutex> lock(m);
    auto key = std::make_pair(n, static_cast<int>(variant));
    auto it = memo.find(key);
    if (it == memo.end()) it = memo.emplace(key, compute_primitive_basis(n, variant)).first;
    return it->second;
}

namespace {

void compositions_rec(int n, std::vector<int>& acc, std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(acc);
        return;
    }
    for (int first = 1; first <= n; ++first) {
        acc.push_back(first);
        compositions_rec(n - first, acc, out);
        acc.pop_back();
    }
}

std::vector<std::vector<int>> compositions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> acc;
    compositions_rec(n, acc, out);
    return out;
}

} // namespace

GradedBasis top_monomial_basis(int n, Nesting nesting) {
    if (n < 1) throw std::domain_error("top_monomial_basis: degree must be positive");
    std::vector<GradedBasis> prim;
    for (int m = 1; m <= n; ++m) prim.push_back(primitive_basis(m, Variant::full));

    GradedBasis out;
    out.degree = n;
    for (const std::vector<int>& comp : compositions(n)) {
        const std::size_t s = comp.size();
        bool feasible = true;
        for (int c : comp) {
            if (prim[static_cast<std::size_t>(c - 1)].elems.empty()) feasible = false;
        }
        if (!feasible) continue;
        std::vector<std::size_t> idx(s, 0);
        bool more = true;
        while (more) {
            std::vector<const HElem*> letters(s);
            for (std::size_t j = 0; j < s; ++j) {
                letters[j] = &prim[static_cast<std::size_t>(comp[j] - 1)].elems[idx[j]];
            }
            HElem word;
            if (nesting == Nesting::right) {
                word = *letters[s - 1];
                for (std::size_t j = s - 1; j-- > 0;) word = graft_top(*letters[j], word);
            } else {
                word = *letters[0];
                for (std::size_t j = 1; j < s; ++j) word = graft_top(word, *letters[j]);
            }
            out.elems.push_back(std::move(word));
            // odometer over index tuples
            more = false;
            for (std::size_t pos = s; pos-- > 0;) {
                if (++idx[pos] < prim[static_cast<std::size_t>(comp[pos] - 1)].elems.size()) {
                    more = true;
                    break;
                }
                idx[pos] = 0;
            }
        }
    }
    out.coords = column_matrix(out.elems, n);
    const auto dim = static_cast<Eigen::Index>(forest_basis(n).size());
    out.is_basis = static_cast<Eigen::Index>(out.elems.size()) == dim && rank(out.coords) == dim;
    return out;
}

GradedBasis subalgebra_degree_span(std::span<const HElem> generators, int n) {
    if (n < 1) throw std::domain_error("subalgebra_degree_span: degree must be positive");
    std::vector<int> degs;
    for (const HElem& g : generators) {
        const int d = degree(g);
        if (d < 1 || graded_component(g, d) != g)
            throw std::invalid_argument(
                "subalgebra_degree_span: generators must be homogeneous of positive degree");
        degs.push_back(d);
    }

    // all products of generators (repetition allowed, order irrelevant)
    // with degrees summing to n
    std::vector<HElem> products;
    HElem acc = HElem::unit();
    auto rec = [&](auto&& self, std::size_t start, int remaining) -> void {
        if (remaining == 0) {
            products.push_back(acc);
            return;
        }
        for (std::size_t i = start; i < generators.size(); ++i) {
            if (degs[i] > remaining) continue;
            HElem saved = acc;
            acc = product(acc, generators[i]);
            self(self, i, remaining - degs[i]);
            acc = std::move(saved);
        }
    };
    rec(rec, 0, n);

    QMatrix m = column_matrix(products, n);
    Rref e = rref(m);
    GradedBasis out;
    out.degree = n;
    for (Eigen::Index c : e.pivot_cols) out.elems.push_back(products[static_cast<std::size_t>(c)]);
    out.coords = column_matrix(out.elems, n);
    out.is_basis = true; // of the span
    return out;
}

std::vector<DefectRow> primitively_generated_report(Variant variant, int nmax) {
    std::vector<HElem> gens;
    for (int m = 1; m <= nmax; ++m) {
        const GradedBasis pb = primitive_basis(m, variant);
        for (const HElem& p : pb.elems) gens.push_back(p);
    }
    std::vector<DefectRow> rows;
    for (int n = 1; n <= nmax; ++n) {
        const int total = static_cast<int>(
            (variant == Variant::full ? forest_basis(n) : ladder_basis(n)).size());
        const int generated =
            static_cast<int>(subalgebra_degree_span(gens, n).elems.size());
        rows.push_back(DefectRow{n, total, generated, total - generated});
    }
    return rows;
}

StrictlyGradedResult strictly_graded_check(int nmax, Variant variant) {
    for (int n = 2; n <= nmax; ++n) {
        GradedBasis p = primitive_basis(n, variant);
        if (!p.elems.empty()) return StrictlyGradedResult{false, p.elems.front()};
    }
    return StrictlyGradedResult{true, std::nullopt};
}

bool integral_injectivity(int n) {
    if (n < 0) throw std::domain_error("integral_injectivity: negative degree");
    const auto& dom = forest_basis(n);
    const Forest l1((Tree()));
    QMatrix m = QMatrix::Zero(static_cast<Eigen::Index>(forest_basis(n + 1).size()),
                              static_cast<Eigen::Index>(dom.size()));
    for (std::size_t j = 0; j < dom.size(); ++j) {
        m(forest_index(dom[j].merged(l1)), static_cast<Eigen::Index>(j)) = Rat(1);
    }
    return rank(m) == static_cast<Eigen::Index>(dom.size());
}

bool power_independence(const HElem& x, int kmax) {
    if (kmax < 1) throw std::domain_error("power_independence: kmax must be positive");
    if (x.is_zero()) throw std::invalid_argument("power_independence: zero element");
    if (!counit(x).is_zero())
        throw std::invalid_argument("power_independence: nonzero counit part");
    if (!reduced_coproduct(x).is_zero())
        throw std::invalid_argument("power_independence: element is not primitive");

    std::vector<HElem> powers;
    HElem p = x;
    for (int k = 1; k <= kmax; ++k) {
        powers.push_back(p);
        if (k < kmax) p = product(p, x);
    }
    std::map<Forest, int> rows;
    for (const HElem& q : powers) {
        for (const auto& [f, c] : q.terms()) rows.emplace(f, 0);
    }
    int r = 0;
    for (auto& [f, idx] : rows) idx = r++;
    QMatrix m = QMatrix::Zero(r, kmax);
    for (int k = 0; k < kmax; ++k) {
        for (const auto& [f, c] : powers[static_cast<std::size_t>(k)].terms()) {
            m(rows.at(f), k) = c;
        }
    }
    return rank(m) == kmax;
}

} // namespace rthopf
