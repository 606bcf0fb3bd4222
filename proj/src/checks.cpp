#include "rthopf/checks.hpp"

#include "rthopf/pairing.hpp"
#include "rthopf/tree.hpp"

#include <random>
#include <sstream>

namespace rthopf {

namespace {

Tensor3Elem comul_right(const TensorElem& t) {
    Tensor3Elem out;
    for (const auto& [k, c] : t.terms()) {
        const TensorElem d = coproduct_cuts(k.second);
        for (const auto& [k2, c2] : d.terms()) {
            out.add_term({k.first, k2.first, k2.second}, c * c2);
        }
    }
    return out;
}

Tensor3Elem comul_left(const TensorElem& t) {
    Tensor3Elem out;
    for (const auto& [k, c] : t.terms()) {
        const TensorElem d = coproduct_cuts(k.first);
        for (const auto& [k2, c2] : d.terms()) {
            out.add_term({k2.first, k2.second, k.second}, c * c2);
        }
    }
    return out;
}

HElem eps_left(const TensorElem& t) {
    HElem out;
    for (const auto& [k, c] : t.terms()) {
        if (k.first.empty()) out.add_term(k.second, c);
    }
    return out;
}

HElem eps_right(const TensorElem& t) {
    HElem out;
    for (const auto& [k, c] : t.terms()) {
        if (k.second.empty()) out.add_term(k.first, c);
    }
    return out;
}

HElem convolve_antipode_left(const TensorElem& t) {
    HElem out;
    for (const auto& [k, c] : t.terms()) {
        out += product(antipode(k.first), HElem::from(k.second)) * c;
    }
    return out;
}

HElem convolve_antipode_right(const TensorElem& t) {
    HElem out;
    for (const auto& [k, c] : t.terms()) {
        out += product(HElem::from(k.first), antipode(k.second)) * c;
    }
    return out;
}

} // namespace

SweepReport check_hopf_axioms(int wmax) {
    for (int n = 0; n <= wmax; ++n) {
        for (const Forest& f : generate_forests(n)) {
            const HElem x = HElem::from(f);
            const TensorElem d = coproduct_cuts(x);
            if (comul_left(d) != comul_right(d))
                return {false, "coassociativity", f.str()};
            if (eps_left(d) != x || eps_right(d) != x)
                return {false, "counit law", f.str()};
            const HElem expected = HElem::scalar(counit(x));
            if (convolve_antipode_left(d) != expected)
                return {false, "antipode law m(S x id)Delta", f.str()};
            if (convolve_antipode_right(d) != expected)
                return {false, "antipode law m(id x S)Delta", f.str()};
        }
    }
    // Delta(xy) = Delta(x) Delta(y) over basis pairs
    for (int n = 0; n <= wmax; ++n) {
        for (int p = 0; p <= n; ++p) {
            for (const Forest& f : generate_forests(p)) {
                for (const Forest& g : generate_forests(n - p)) {
                    const HElem xy = product(HElem::from(f), HElem::from(g));
                    if (coproduct_cuts(xy) !=
                        coproduct_cuts(HElem::from(f)) * coproduct_cuts(HElem::from(g)))
                        return {false, "coproduct multiplicativity", f.str() + " , " + g.str()};
                }
            }
        }
    }
    return {};
}

SweepReport check_coproduct_oracles(int wmax) {
    for (int n = 1; n <= wmax; ++n) {
        for (const Tree& t : generate_trees(n)) {
            if (coproduct_cuts(t) != coproduct_bplus(t)) return {false, "coproduct oracles", t.str()};
        }
    }
    return {};
}

SweepReport check_pairing_recursion(int wmax) {
    for (int n = 0; n <= wmax; ++n) {
        for (int m1 = 0; m1 <= n; ++m1) {
            for (const ZWord& w1 : all_words(m1)) {
                for (const ZWord& w2 : all_words(n - m1)) {
                    const ZWord w = w1.concat(w2);
                    for (const Forest& h : generate_forests(n)) {
                        Rat lhs = pair_word(w, HElem::from(h));
                        Rat rhs(0);
                        const TensorElem d = coproduct_cuts(h);
                        for (const auto& [k, c] : d.terms()) {
                            rhs += c * pair_word(w1, HElem::from(k.first)) *
                                   pair_word(w2, HElem::from(k.second));
                        }
                        if (lhs != rhs)
                            return {false, "pairing recursion",
                                    w1.str() + " , " + w2.str() + " , " + h.str()};
                    }
                }
            }
        }
    }
    return {};
}

SweepReport check_grading(int wmax) {
    for (int n = 0; n <= wmax; ++n) {
        for (int p = 0; p <= n; ++p) {
            for (const Forest& f : generate_forests(p)) {
                for (const Forest& g : generate_forests(n - p)) {
                    const HElem prod = product(HElem::from(f), HElem::from(g));
                    if (graded_component(prod, n) != prod)
                        return {false, "product grading", f.str() + " , " + g.str()};
                    const HElem top = graft_top(HElem::from(f), HElem::from(g));
                    if (!top.is_zero() && graded_component(top, n) != top)
                        return {false, "graft grading", f.str() + " , " + g.str()};
                }
            }
        }
        for (const Forest& f : generate_forests(n)) {
            const TensorElem d = coproduct_cuts(Forest(f));
            for (const auto& [k, c] : d.terms()) {
                if (k.first.weight() + k.second.weight() != n)
                    return {false, "coproduct grading", f.str()};
            }
            const HElem s = antipode(HElem::from(f));
            if (graded_component(s, n) != s) return {false, "antipode grading", f.str()};
        }
    }
    return {};
}

namespace {

RawTree random_raw_tree(int weight, std::mt19937_64& rng) {
    // attach each new vertex to a uniformly random existing one
    std::vector<RawTree> pool(1);
    std::vector<int> parent{-1};
    for (int v = 1; v < weight; ++v) {
        std::uniform_int_distribution<int> dist(0, v - 1);
        parent.push_back(dist(rng));
        pool.emplace_back();
    }
    // assemble bottom-up (children have larger indices than parents)
    for (int v = weight - 1; v >= 1; --v) {
        pool[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])]
            .children.push_back(std::move(pool[static_cast<std::size_t>(v)]));
    }
    return std::move(pool[0]);
}

void shuffle_children(RawTree& t, std::mt19937_64& rng) {
    std::shuffle(t.children.begin(), t.children.end(), rng);
    for (RawTree& c : t.children) shuffle_children(c, rng);
}

} // namespace

SweepReport check_tree_canonicalization(int weight, int samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int s = 0; s < samples; ++s) {
        std::uniform_int_distribution<int> wdist(1, weight);
        const int w = wdist(rng);
        RawTree raw = random_raw_tree(w, rng);
        const Tree canon = canonicalize(raw);
        if (canon.weight() != w) return {false, "canonical weight", canon.str()};
        RawTree shuffled = raw;
        shuffle_children(shuffled, rng);
        if (canonicalize(shuffled) != canon)
            return {false, "permutation invariance", canon.str()};
        if (Tree::parse(canon.str()) != canon)
            return {false, "parse round-trip", canon.str()};
        if (canonicalize(RawTree{}) != Tree())
            return {false, "single vertex", "()"};
    }
    return {};
}

std::vector<CountRow> verify_counts(int nmax, std::optional<int> r, BranchMode mode,
                                    bool inject_fault) {
    std::vector<CountRow> rows;
    for (int n = 1; n <= nmax; ++n) {
        CountRow row;
        row.n = n;
        row.computed = r ? count_branch_trees(*r, n, mode) : count_trees(n);
        if (inject_fault && n == nmax) row.computed += 1;
        row.oracle = r ? oracle_count_branch(*r, n) : oracle_count(n);
        row.match = row.computed == row.oracle;
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace rthopf
