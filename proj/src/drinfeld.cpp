#include "rthopf/drinfeld.hpp"

#include "rthopf/linalg.hpp"

#include <mutex>
#include <stdexcept>

namespace rthopf {

// ---- DoubleElem / DoubleTensor / DoubleTriple ----

DoubleElem DoubleElem::from(const Forest& a, const Forest& h, const Rat& c) {
    DoubleElem d;
    d.add_term(a, h, c);
    return d;
}

Rat DoubleElem::coeff(const Forest& a, const Forest& h) const {
    auto it = terms_.find({a, h});
    return it == terms_.end() ? Rat(0) : it->second;
}

void DoubleElem::add_term(const Forest& a, const Forest& h, const Rat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(Key{a, h}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

DoubleElem& DoubleElem::operator+=(const DoubleElem& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
}

DoubleElem& DoubleElem::operator-=(const DoubleElem& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
    return *this;
}

DoubleElem& DoubleElem::operator*=(const Rat& c) {
    if (c.is_zero()) { terms_.clear(); return *this; }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

void DoubleTensor::add_term(const Key& k, const Rat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms.emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

DoubleTensor& DoubleTensor::operator+=(const DoubleTensor& o) {
    for (const auto& [k, c] : o.terms) add_term(k, c);
    return *this;
}

DoubleTensor& DoubleTensor::operator-=(const DoubleTensor& o) {
    for (const auto& [k, c] : o.terms) add_term(k, -c);
    return *this;
}

void DoubleTriple::add_term(const Key& k, const Rat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms.emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

DoubleTriple& DoubleTriple::operator-=(const DoubleTriple& o) {
    for (const auto& [k, c] : o.terms) add_term(k, -c);
    return *this;
}

// ---- per-model structure tables ----

namespace {

// legs of Delta_{H^g}(delta_L): (F1, F2, coeff of L in mul(F1, F2))
template <class Model>
struct HgSplit {
    Forest f1, f2;
    Rat c;
};

template <class Model>
const std::vector<HgSplit<Model>>& hg_pairs(const Forest& l) {
    static std::map<std::string, std::vector<HgSplit<Model>>> cache;
    static std::mutex m;
    std::lock_guard<std::mutex> lock(m);
    auto it = cache.find(l.str());
    if (it == cache.end()) {
        std::vector<HgSplit<Model>> out;
        const int n = l.weight();
        for (int p = 0; p <= n; ++p) {
            for (const Forest& f1 : forest_basis(p)) {
                for (const Forest& f2 : forest_basis(n - p)) {
                    Rat c = Model::mul(HElem::from(f1), HElem::from(f2)).coeff(l);
                    if (!c.is_zero()) out.push_back(HgSplit<Model>{f1, f2, c});
                }
            }
        }
        it = cache.emplace(l.str(), std::move(out)).first;
    }
    return it->second;
}

template <class Model>
struct HgSplit3 {
    Forest f1, f2, f3;
    Rat c;
};

template <class Model>
const std::vector<HgSplit3<Model>>& hg_triples(const Forest& l) {
    static std::map<std::string, std::vector<HgSplit3<Model>>> cache;
    static std::mutex m;
    std::lock_guard<std::mutex> lock(m);
    auto it = cache.find(l.str());
    if (it == cache.end()) {
        std::vector<HgSplit3<Model>> out;
        const int n = l.weight();
        for (int p = 0; p <= n; ++p) {
            for (int q = 0; p + q <= n; ++q) {
                for (const Forest& f1 : forest_basis(p)) {
                    for (const Forest& f2 : forest_basis(q)) {
                        for (const Forest& f3 : forest_basis(n - p - q)) {
                            Rat c = Model::mul(HElem::from(f1),
                                               Model::mul(HElem::from(f2), HElem::from(f3)))
                                        .coeff(l);
                            if (!c.is_zero()) out.push_back(HgSplit3<Model>{f1, f2, f3, c});
                        }
                    }
                }
            }
        }
        it = cache.emplace(l.str(), std::move(out)).first;
    }
    return it->second;
}

// (Model::comul (x) id) Model::comul on a forest
template <class Model>
const Tensor3Elem& model_comul2(const Forest& g) {
    static std::map<std::string, Tensor3Elem> cache;
    static std::mutex m;
    std::lock_guard<std::mutex> lock(m);
    auto it = cache.find(g.str());
    if (it == cache.end()) {
        Tensor3Elem out;
        const TensorElem outer = Model::comul(HElem::from(g));
        for (const auto& [k, c] : outer.terms()) {
            const TensorElem left = Model::comul(HElem::from(k.first));
            for (const auto& [k2, c2] : left.terms()) {
                out.add_term({k2.first, k2.second, k.second}, c * c2);
            }
        }
        it = cache.emplace(g.str(), std::move(out)).first;
    }
    return it->second;
}

// convolution structure constants at target degree n:
// bucket[(F1,F2)] -> list of (K, coeff of F1 (x) F2 in comul K)
template <class Model>
using ModelConvTable =
    std::map<std::pair<Forest, Forest>, std::vector<std::pair<Forest, Rat>>, TensorKeyLess>;

template <class Model>
const ModelConvTable<Model>& model_conv_table(int n) {
    static std::map<int, ModelConvTable<Model>> cache;
    static std::mutex m;
    std::lock_guard<std::mutex> lock(m);
    auto it = cache.find(n);
    if (it == cache.end()) {
        ModelConvTable<Model> table;
        for (const Forest& k : forest_basis(n)) {
            const TensorElem d = Model::comul(HElem::from(k));
            for (const auto& [key, c] : d.terms()) {
                table[key].emplace_back(k, c);
            }
        }
        it = cache.emplace(n, std::move(table)).first;
    }
    return it->second;
}

} // namespace

template <class Model>
DualElem a_convolution(const DualElem& f, const DualElem& g) {
    DualElem out;
    for (const auto& [ff, cf] : f.terms()) {
        for (const auto& [fg, cg] : g.terms()) {
            const auto& table = model_conv_table<Model>(ff.weight() + fg.weight());
            auto it = table.find({ff, fg});
            if (it == table.end()) continue;
            for (const auto& [k, c] : it->second) out.add_term(k, cf * cg * c);
        }
    }
    return out;
}

template <class Model>
HElem beta_action(const HElem& h, const DualElem& a, LegsMode mode) {
    HElem out;
    for (const auto& [g, cg] : h.terms()) {
        const Tensor3Elem& t3 = model_comul2<Model>(g);
        for (const auto& [l, cl] : a.terms()) {
            for (const HgSplit<Model>& sp : hg_pairs<Model>(l)) {
                // Delta_A = flip of Delta_{H^g}
                const Forest& a1 = mode == LegsMode::hg_order ? sp.f1 : sp.f2;
                const Forest& a2 = mode == LegsMode::hg_order ? sp.f2 : sp.f1;
                for (const auto& [legs, c3] : t3.terms()) {
                    if (legs[0] != a1) continue;
                    const Rat s = Model::antipode_of(HElem::from(legs[2])).coeff(a2);
                    if (s.is_zero()) continue;
                    out.add_term(legs[1], cg * cl * sp.c * c3 * s);
                }
            }
        }
    }
    return out;
}

template <class Model>
DualElem alpha_action(const HElem& h, const DualElem& a, LegsMode mode) {
    DualElem out;
    for (const auto& [g, cg] : h.terms()) {
        const TensorElem dg = Model::comul(HElem::from(g));
        for (const auto& [l, cl] : a.terms()) {
            for (const HgSplit3<Model>& sp : hg_triples<Model>(l)) {
                // iterated co-opposite coproduct reverses the legs
                const Forest& a1 = mode == LegsMode::hg_order ? sp.f1 : sp.f3;
                const Forest& a2 = sp.f2;
                const Forest& a3 = mode == LegsMode::hg_order ? sp.f3 : sp.f1;
                for (const auto& [legs, c2] : dg.terms()) {
                    if (legs.first != a1) continue;
                    const Rat s = Model::antipode_of(HElem::from(legs.second)).coeff(a3);
                    if (s.is_zero()) continue;
                    out.add_term(a2, cg * cl * sp.c * c2 * s);
                }
            }
        }
    }
    return out;
}

template <class Model>
DoubleElem double_mul(const DoubleElem& u, const DoubleElem& v, LegsMode mode) {
    DoubleElem out;
    for (const auto& [ku, cu] : u.terms()) {
        for (const auto& [kv, cv] : v.terms()) {
            const Forest& af = ku.first;
            const Forest& hf = ku.second;
            const Forest& bf = kv.first;
            const Forest& gf = kv.second;
            if constexpr (Model::uses_beta) {
                // (a |> h)(b |> g) = sum a b_1 |> beta(h, b_2) g
                for (const HgSplit<Model>& sp : hg_pairs<Model>(bf)) {
                    const Forest& b1 = mode == LegsMode::hg_order ? sp.f1 : sp.f2;
                    const Forest& b2 = mode == LegsMode::hg_order ? sp.f2 : sp.f1;
                    DualElem aleg =
                        a_convolution<Model>(DualElem::delta(af), DualElem::delta(b1));
                    if (aleg.is_zero()) continue;
                    HElem act = beta_action<Model>(HElem::from(hf), DualElem::delta(b2), mode);
                    if (act.is_zero()) continue;
                    HElem hleg = Model::mul(act, HElem::from(gf));
                    for (const auto& [la, ca] : aleg.terms()) {
                        for (const auto& [lh, ch] : hleg.terms()) {
                            out.add_term(la, lh, cu * cv * sp.c * ca * ch);
                        }
                    }
                }
            } else {
                // (a |> h)(b |> g) = sum a alpha(h_1, b) |> h_2 g
                const TensorElem dh = Model::comul(HElem::from(hf));
                for (const auto& [legs, c2] : dh.terms()) {
                    DualElem act = alpha_action<Model>(HElem::from(legs.first),
                                                       DualElem::delta(bf), mode);
                    if (act.is_zero()) continue;
                    DualElem aleg = a_convolution<Model>(DualElem::delta(af), act);
                    if (aleg.is_zero()) continue;
                    HElem hleg = Model::mul(HElem::from(legs.second), HElem::from(gf));
                    for (const auto& [la, ca] : aleg.terms()) {
                        for (const auto& [lh, ch] : hleg.terms()) {
                            out.add_term(la, lh, cu * cv * c2 * ca * ch);
                        }
                    }
                }
            }
        }
    }
    return out;
}

template <class Model>
DoubleTensor double_comul(const DoubleElem& u) {
    DoubleTensor out;
    for (const auto& [k, c] : u.terms()) {
        const TensorElem dh = Model::comul(HElem::from(k.second));
        for (const HgSplit<Model>& sp : hg_pairs<Model>(k.first)) {
            // A legs in co-opposite order
            for (const auto& [legs, c2] : dh.terms()) {
                out.add_term({sp.f2, legs.first, sp.f1, legs.second}, c * sp.c * c2);
            }
        }
    }
    return out;
}

Rat double_counit(const DoubleElem& u) {
    return u.coeff(Forest(), Forest());
}

DoubleElem double_product(const DoubleElem& u, const DoubleElem& v, LegsMode mode) {
    return double_mul<TreeModel>(u, v, mode);
}

DoubleTensor double_coproduct(const DoubleElem& u) {
    return double_comul<TreeModel>(u);
}

// ---- coevaluation and R matrices ----

CoEv coevaluation(int n, BasisMode mode) {
    if (n < 0) throw std::domain_error("coevaluation: negative level");
    CoEv out;
    out.level = n;
    out.mode = mode;
    out.pairs.resize(static_cast<std::size_t>(n) + 1);
    for (int m = 0; m <= n; ++m) {
        const auto dim = static_cast<Eigen::Index>(forest_basis(m).size());
        auto& pairs = out.pairs[static_cast<std::size_t>(m)];
        if (mode == BasisMode::forest || m == 0) {
            for (Eigen::Index i = 0; i < dim; ++i) {
                QVector e = QVector::Zero(dim);
                e(i) = Rat(1);
                pairs.emplace_back(e, e);
            }
        } else {
            GradedBasis b = top_monomial_basis(m, Nesting::right);
            if (!b.is_basis)
                throw std::runtime_error("coevaluation: grafting words fail to form a basis");
            std::vector<QVector> cols;
            for (Eigen::Index i = 0; i < b.coords.cols(); ++i) cols.push_back(b.coords.col(i));
            std::vector<QVector> duals = dual_basis(cols);
            for (std::size_t i = 0; i < cols.size(); ++i) pairs.emplace_back(cols[i], duals[i]);
        }
    }
    return out;
}

bool coev_is_canonical(const CoEv& p) {
    for (std::size_t m = 0; m < p.pairs.size(); ++m) {
        const auto dim = static_cast<Eigen::Index>(forest_basis(static_cast<int>(m)).size());
        QMatrix sum = QMatrix::Zero(dim, dim);
        for (const auto& [e, f] : p.pairs[m]) sum += e * f.transpose();
        for (Eigen::Index i = 0; i < dim; ++i) {
            for (Eigen::Index j = 0; j < dim; ++j) {
                if (sum(i, j) != (i == j ? Rat(1) : Rat(0))) return false;
            }
        }
    }
    return true;
}

RMatrix r_matrix(int n, BasisMode mode) {
    const CoEv p = coevaluation(n, mode);
    RMatrix out;
    out.level = n;
    for (int m = 0; m <= n; ++m) {
        const auto& basis = forest_basis(m);
        for (const auto& [e, f] : p.pairs[static_cast<std::size_t>(m)]) {
            for (Eigen::Index i = 0; i < e.rows(); ++i) {
                if (e(i).is_zero()) continue;
                for (Eigen::Index j = 0; j < f.rows(); ++j) {
                    if (f(j).is_zero()) continue;
                    out.elem.add_term({Forest(), basis[static_cast<std::size_t>(i)],
                                       basis[static_cast<std::size_t>(j)], Forest()},
                                      e(i) * f(j));
                }
            }
        }
    }
    return out;
}

bool check_r_locality(int n, int m) {
    if (m > n) throw std::invalid_argument("check_r_locality: m must not exceed n");
    const RMatrix rn = r_matrix(n, BasisMode::forest);
    const RMatrix rm = r_matrix(m, BasisMode::forest);
    DoubleTensor projected;
    for (const auto& [k, c] : rn.elem.terms) {
        const int s1 = k[0].weight() + k[1].weight();
        const int s2 = k[2].weight() + k[3].weight();
        if (s1 <= m && s2 <= m) projected.add_term(k, c);
    }
    return projected == rm.elem;
}

// ---- check sweeps ----

namespace {

std::vector<DoubleElem::Key> double_basis_keys(int size_max) {
    std::vector<DoubleElem::Key> out;
    for (int s = 0; s <= size_max; ++s) {
        for (int p = 0; p <= s; ++p) {
            for (const Forest& a : forest_basis(p)) {
                for (const Forest& h : forest_basis(s - p)) {
                    out.emplace_back(a, h);
                }
            }
        }
    }
    return out;
}

template <class Model>
DoubleTensor dt_mul(const DoubleTensor& x, const DoubleTensor& y, LegsMode mode) {
    DoubleTensor out;
    for (const auto& [kx, cx] : x.terms) {
        for (const auto& [ky, cy] : y.terms) {
            DoubleElem left = double_mul<Model>(DoubleElem::from(kx[0], kx[1]),
                                                DoubleElem::from(ky[0], ky[1]), mode);
            if (left.is_zero()) continue;
            DoubleElem right = double_mul<Model>(DoubleElem::from(kx[2], kx[3]),
                                                 DoubleElem::from(ky[2], ky[3]), mode);
            for (const auto& [kl, cl] : left.terms()) {
                for (const auto& [kr, cr] : right.terms()) {
                    out.add_term({kl.first, kl.second, kr.first, kr.second},
                                 cx * cy * cl * cr);
                }
            }
        }
    }
    return out;
}

DoubleTensor dt_flip(const DoubleTensor& x) {
    DoubleTensor out;
    for (const auto& [k, c] : x.terms) out.add_term({k[2], k[3], k[0], k[1]}, c);
    return out;
}

DoubleTensor dt_project(const DoubleTensor& x, int bound) {
    DoubleTensor out;
    for (const auto& [k, c] : x.terms) {
        if (k[0].weight() + k[1].weight() <= bound && k[2].weight() + k[3].weight() <= bound)
            out.add_term(k, c);
    }
    return out;
}

} // namespace

template <class Model>
AssocReport check_double_associativity(int size_sum_max, LegsMode mode) {
    AssocReport report;
    report.mode = mode;
    const std::vector<DoubleElem::Key> keys = double_basis_keys(size_sum_max);
    for (const auto& kx : keys) {
        for (const auto& ky : keys) {
            for (const auto& kz : keys) {
                if (key_size(kx) + key_size(ky) + key_size(kz) > size_sum_max) continue;
                const DoubleElem x = DoubleElem::from(kx.first, kx.second);
                const DoubleElem y = DoubleElem::from(ky.first, ky.second);
                const DoubleElem z = DoubleElem::from(kz.first, kz.second);
                const DoubleElem lhs = double_mul<Model>(double_mul<Model>(x, y, mode), z, mode);
                const DoubleElem rhs = double_mul<Model>(x, double_mul<Model>(y, z, mode), mode);
                if (lhs != rhs) {
                    report.pass = false;
                    report.witness = AssocWitness{kx, ky, kz};
                    return report;
                }
            }
        }
    }
    return report;
}

template <class Model>
LegsModeSelection select_legs_mode(int size_sum_max) {
    LegsModeSelection sel;
    sel.a_order = check_double_associativity<Model>(size_sum_max, LegsMode::a_order);
    sel.hg_order = check_double_associativity<Model>(size_sum_max, LegsMode::hg_order);
    if (sel.a_order.pass) sel.selected = LegsMode::a_order;
    else if (sel.hg_order.pass) sel.selected = LegsMode::hg_order;
    return sel;
}

template <class Model>
EmbedReport check_double_unit_laws(int size_max, LegsMode mode) {
    const DoubleElem unit = DoubleElem::unit();
    for (const auto& k : double_basis_keys(size_max)) {
        const DoubleElem x = DoubleElem::from(k.first, k.second);
        if (double_mul<Model>(unit, x, mode) != x)
            return {false, "unit * (" + k.first.str() + " |> " + k.second.str() + ")"};
        if (double_mul<Model>(x, unit, mode) != x)
            return {false, "(" + k.first.str() + " |> " + k.second.str() + ") * unit"};
    }
    return {};
}

template <class Model>
EmbedReport check_double_embeddings(int size_max, LegsMode mode) {
    for (int p = 0; p <= size_max; ++p) {
        for (int q = 0; p + q <= size_max; ++q) {
            for (const Forest& a : forest_basis(p)) {
                for (const Forest& b : forest_basis(q)) {
                    // A embeds: (a |> 1)(b |> 1) = ab |> 1
                    const DoubleElem lhs =
                        double_mul<Model>(DoubleElem::from(a, Forest()),
                                          DoubleElem::from(b, Forest()), mode);
                    DoubleElem rhs;
                    const DualElem ab = a_convolution<Model>(DualElem::delta(a), DualElem::delta(b));
                    for (const auto& [l, c] : ab.terms()) {
                        rhs.add_term(l, Forest(), c);
                    }
                    if (lhs != rhs)
                        return {false, "A embedding at " + a.str() + " , " + b.str()};
                    // H embeds: (1 |> h)(1 |> g) = 1 |> hg
                    const DoubleElem lhs2 =
                        double_mul<Model>(DoubleElem::from(Forest(), a),
                                          DoubleElem::from(Forest(), b), mode);
                    DoubleElem rhs2;
                    const HElem hg = Model::mul(HElem::from(a), HElem::from(b));
                    for (const auto& [l, c] : hg.terms()) {
                        rhs2.add_term(Forest(), l, c);
                    }
                    if (lhs2 != rhs2)
                        return {false, "H embedding at " + a.str() + " , " + b.str()};
                }
            }
        }
    }
    return {};
}

IntertwineReport check_intertwine(int n, int mmax, LegsMode mode) {
    if (mmax > n) throw std::invalid_argument("check_intertwine: mmax must not exceed n");
    IntertwineReport report;
    report.level = n;
    report.mmax = mmax;
    const RMatrix rn = r_matrix(n, BasisMode::forest);
    const int bound = n - mmax;
    for (const auto& kx : double_basis_keys(mmax)) {
        const DoubleElem x = DoubleElem::from(kx.first, kx.second);
        const DoubleTensor dx = double_comul<TreeModel>(x);
        const DoubleTensor lhs = dt_project(dt_mul<TreeModel>(rn.elem, dx, mode), bound);
        const DoubleTensor rhs = dt_project(dt_mul<TreeModel>(dt_flip(dx), rn.elem, mode), bound);
        if (lhs != rhs) {
            report.pass = false;
            DoubleTensor diff = lhs;
            diff -= rhs;
            const auto& [k, c] = *diff.terms.begin();
            Rat l(0), r(0);
            if (auto it = lhs.terms.find(k); it != lhs.terms.end()) l = it->second;
            if (auto it = rhs.terms.find(k); it != rhs.terms.end()) r = it->second;
            report.witness = IntertwineWitness{kx, k, l, r};
            return report;
        }
    }
    return report;
}

namespace {

DoubleTriple embed_r(const RMatrix& r, int leg_a, int leg_b) {
    DoubleTriple out;
    const Forest unit;
    for (const auto& [k, c] : r.elem.terms) {
        DoubleTriple::Key key{unit, unit, unit, unit, unit, unit};
        key[static_cast<std::size_t>(2 * leg_a)] = k[0];
        key[static_cast<std::size_t>(2 * leg_a + 1)] = k[1];
        key[static_cast<std::size_t>(2 * leg_b)] = k[2];
        key[static_cast<std::size_t>(2 * leg_b + 1)] = k[3];
        out.add_term(key, c);
    }
    return out;
}

template <class Model>
DoubleTriple t3_mul(const DoubleTriple& x, const DoubleTriple& y, LegsMode mode) {
    DoubleTriple out;
    for (const auto& [kx, cx] : x.terms) {
        for (const auto& [ky, cy] : y.terms) {
            std::array<DoubleElem, 3> legs;
            bool zero = false;
            for (int l = 0; l < 3 && !zero; ++l) {
                legs[static_cast<std::size_t>(l)] = double_mul<Model>(
                    DoubleElem::from(kx[static_cast<std::size_t>(2 * l)],
                                     kx[static_cast<std::size_t>(2 * l + 1)]),
                    DoubleElem::from(ky[static_cast<std::size_t>(2 * l)],
                                     ky[static_cast<std::size_t>(2 * l + 1)]),
                    mode);
                if (legs[static_cast<std::size_t>(l)].is_zero()) zero = true;
            }
            if (zero) continue;
            for (const auto& [k0, c0] : legs[0].terms()) {
                for (const auto& [k1, c1] : legs[1].terms()) {
                    for (const auto& [k2, c2] : legs[2].terms()) {
                        out.add_term({k0.first, k0.second, k1.first, k1.second,
                                      k2.first, k2.second},
                                     cx * cy * c0 * c1 * c2);
                    }
                }
            }
        }
    }
    return out;
}

} // namespace

QybeReport check_qybe(int n, LegsMode mode) {
    QybeReport report;
    report.level = n;
    const RMatrix r = r_matrix(n, BasisMode::forest);
    const DoubleTriple r12 = embed_r(r, 0, 1);
    const DoubleTriple r13 = embed_r(r, 0, 2);
    const DoubleTriple r23 = embed_r(r, 1, 2);
    DoubleTriple lhs = t3_mul<TreeModel>(t3_mul<TreeModel>(r12, r13, mode), r23, mode);
    DoubleTriple rhs = t3_mul<TreeModel>(t3_mul<TreeModel>(r23, r13, mode), r12, mode);
    lhs -= rhs;
    const int bound = n / 2;
    for (const auto& [k, c] : lhs.terms) {
        bool visible = true;
        for (int l = 0; l < 3; ++l) {
            if (k[static_cast<std::size_t>(2 * l)].weight() +
                    k[static_cast<std::size_t>(2 * l + 1)].weight() >
                bound)
                visible = false;
        }
        if (visible) {
            report.pass = false;
            report.witness = std::make_pair(k, c);
            return report;
        }
    }
    return report;
}

// ---- explicit instantiations ----

template DualElem a_convolution<TreeModel>(const DualElem&, const DualElem&);
template DualElem a_convolution<GraftModel>(const DualElem&, const DualElem&);
template HElem beta_action<TreeModel>(const HElem&, const DualElem&, LegsMode);
template HElem beta_action<GraftModel>(const HElem&, const DualElem&, LegsMode);
template DualElem alpha_action<TreeModel>(const HElem&, const DualElem&, LegsMode);
template DualElem alpha_action<GraftModel>(const HElem&, const DualElem&, LegsMode);
template DoubleElem double_mul<TreeModel>(const DoubleElem&, const DoubleElem&, LegsMode);
template DoubleElem double_mul<GraftModel>(const DoubleElem&, const DoubleElem&, LegsMode);
template DoubleTensor double_comul<TreeModel>(const DoubleElem&);
template DoubleTensor double_comul<GraftModel>(const DoubleElem&);
template EmbedReport check_double_unit_laws<TreeModel>(int, LegsMode);
template EmbedReport check_double_unit_laws<GraftModel>(int, LegsMode);
template EmbedReport check_double_embeddings<TreeModel>(int, LegsMode);
template EmbedReport check_double_embeddings<GraftModel>(int, LegsMode);
template AssocReport check_double_associativity<TreeModel>(int, LegsMode);
template AssocReport check_double_associativity<GraftModel>(int, LegsMode);
template LegsModeSelection select_legs_mode<TreeModel>(int);
template LegsModeSelection select_legs_mode<GraftModel>(int);

} // namespace rthopf
