#include "rthopf/pairing.hpp"

#include "rthopf/basis.hpp"
#include "rthopf/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <mutex>
#include <set>
#include <sstream>

namespace rthopf {

// ---- ZWord ----

ZWord::ZWord(std::vector<Tree> letters) : letters_(std::move(letters)) {
    for (const Tree& t : letters_) weight_ += t.weight();
}

ZWord ZWord::concat(const ZWord& o) const {
    std::vector<Tree> letters = letters_;
    letters.insert(letters.end(), o.letters_.begin(), o.letters_.end());
    return ZWord(std::move(letters));
}

std::string ZWord::str() const {
    if (letters_.empty()) return "1";
    std::ostringstream os;
    for (const Tree& t : letters_) os << "Z" << t.str();
    return os.str();
}

bool operator<(const ZWord& a, const ZWord& b) {
    return std::lexicographical_compare(a.letters_.begin(), a.letters_.end(),
                                        b.letters_.begin(), b.letters_.end());
}

std::vector<ZWord> all_words(int weight) {
    if (weight < 0) throw std::invalid_argument("all_words: negative weight");
    if (weight == 0) return {ZWord()};
    std::vector<ZWord> out;
    for (int w = 1; w <= weight; ++w) {
        for (const Tree& first : generate_trees(w)) {
            for (const ZWord& rest : all_words(weight - w)) {
                out.push_back(ZWord::single(first).concat(rest));
            }
        }
    }
    return out;
}

WordTensor word_coproduct(const ZWord& w) {
    const std::size_t k = w.size();
    if (k > 20) throw BoundError("word_coproduct: word length beyond desk scale");
    WordTensor out;
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
        std::vector<Tree> left, right;
        for (std::size_t i = 0; i < k; ++i) {
            if (mask & (1u << i)) left.push_back(w.letters()[i]);
            else right.push_back(w.letters()[i]);
        }
        auto key = std::make_pair(ZWord(std::move(left)), ZWord(std::move(right)));
        auto [it, inserted] = out.emplace(std::move(key), Rat(1));
        if (!inserted) it->second += Rat(1);
    }
    return out;
}

// ---- pairing ----

Rat coeff_extract(const Tree& t, const HElem& h) {
    return h.coeff(Forest(t));
}

Rat pair_word(const ZWord& w, const HElem& h) {
    if (w.empty()) return counit(h);
    if (w.size() == 1) return coeff_extract(w.letters()[0], h);
    const Tree& head = w.letters()[0];
    const ZWord tail(std::vector<Tree>(w.letters().begin() + 1, w.letters().end()));
    Rat out(0);
    for (const auto& [f, c] : h.terms()) {
        const TensorElem d = coproduct(f);
        for (const auto& [k, dc] : d.terms()) {
            if (k.first.size() != 1 || k.first.trees()[0] != head) continue;
            out += c * dc * pair_word(tail, HElem::from(k.second));
        }
    }
    return out;
}

// ---- DualElem ----

DualElem DualElem::delta(const Forest& f, const Rat& c) {
    DualElem d;
    d.add_term(f, c);
    return d;
}

Rat DualElem::coeff(const Forest& f) const {
    auto it = terms_.find(f);
    return it == terms_.end() ? Rat(0) : it->second;
}

void DualElem::add_term(const Forest& f, const Rat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(f, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Rat DualElem::apply(const HElem& h) const {
    Rat out(0);
    for (const auto& [f, c] : terms_) out += c * h.coeff(f);
    return out;
}

QVector DualElem::coords(int n) const {
    const auto& basis = forest_basis(n);
    QVector v = QVector::Zero(static_cast<Eigen::Index>(basis.size()));
    for (const auto& [f, c] : terms_) {
        if (f.weight() != n) continue;
        v(forest_index(f)) = c;
    }
    return v;
}

DualElem& DualElem::operator+=(const DualElem& o) {
    for (const auto& [f, c] : o.terms_) add_term(f, c);
    return *this;
}

DualElem& DualElem::operator-=(const DualElem& o) {
    for (const auto& [f, c] : o.terms_) add_term(f, -c);
    return *this;
}

DualElem& DualElem::operator*=(const Rat& c) {
    if (c.is_zero()) { terms_.clear(); return *this; }
    for (auto& [f, v] : terms_) v *= c;
    return *this;
}

void DualTensor::add_term(const Forest& a, const Forest& b, const Rat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms.emplace(std::make_pair(a, b), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

DualTensor& DualTensor::operator+=(const DualTensor& o) {
    for (const auto& [k, c] : o.terms) add_term(k.first, k.second, c);
    return *this;
}

// structure constants of convolution at target degree n:
// bucket[(F1,F2)] = list of (K, coefficient of F1 (x) F2 in Delta K)
namespace {

using ConvTable = std::map<std::pair<Forest, Forest>, std::vector<std::pair<Forest, Rat>>,
                           TensorKeyLess>;

const ConvTable& convolution_table(int n) {
    static std::map<int, ConvTable> cache;
    static std::mutex m;
    std::lock_guard<std::mutex> lock(m);
    auto it = cache.find(n);
    if (it == cache.end()) {
        ConvTable table;
        for (const Forest& k : forest_basis(n)) {
            const TensorElem d = coproduct(k);
            for (const auto& [key, c] : d.terms()) {
                table[key].emplace_back(k, c);
            }
        }
        it = cache.emplace(n, std::move(table)).first;
    }
    return it->second;
}

} // namespace

DualElem dual_product(const DualElem& f, const DualElem& g) {
    DualElem out;
    for (const auto& [ff, cf] : f.terms()) {
        for (const auto& [fg, cg] : g.terms()) {
            const ConvTable& table = convolution_table(ff.weight() + fg.weight());
            auto it = table.find({ff, fg});
            if (it == table.end()) continue;
            for (const auto& [k, c] : it->second) out.add_term(k, cf * cg * c);
        }
    }
    return out;
}

namespace {

// unique trees of f with multiplicities
std::vector<std::pair<Tree, int>> tree_multiplicities(const Forest& f) {
    std::vector<std::pair<Tree, int>> out;
    for (const Tree& t : f.trees()) {
        if (!out.empty() && out.back().first == t) ++out.back().second;
        else out.emplace_back(t, 1);
    }
    return out;
}

} // namespace

DualTensor dual_coproduct(const DualElem& f, int n) {
    DualTensor out;
    for (const auto& [ff, c] : f.terms()) {
        if (ff.weight() != n) continue;
        const auto mult = tree_multiplicities(ff);
        std::vector<int> take(mult.size(), 0);
        bool more = true;
        while (more) {
            std::vector<Tree> left, right;
            for (std::size_t i = 0; i < mult.size(); ++i) {
                for (int k = 0; k < take[i]; ++k) left.push_back(mult[i].first);
                for (int k = take[i]; k < mult[i].second; ++k) right.push_back(mult[i].first);
            }
            out.add_term(Forest::of(std::move(left)), Forest::of(std::move(right)), c);
            more = false;
            for (std::size_t i = 0; i < take.size(); ++i) {
                if (take[i] < mult[i].second) {
                    ++take[i];
                    std::fill(take.begin(), take.begin() + static_cast<std::ptrdiff_t>(i), 0);
                    more = true;
                    break;
                }
            }
        }
    }
    return out;
}

DualTensor dual_tensor(const DualElem& f, const DualElem& g) {
    DualTensor out;
    for (const auto& [ff, cf] : f.terms()) {
        for (const auto& [fg, cg] : g.terms()) out.add_term(ff, fg, cf * cg);
    }
    return out;
}

DualElem psi(const ZWord& w, int bound) {
    if (w.weight() > bound)
        throw BoundError("psi: word weight exceeds desk bound " + std::to_string(bound));
    DualElem out;
    for (const Forest& f : forest_basis(w.weight())) {
        out.add_term(f, pair_word(w, HElem::from(f)));
    }
    return out;
}

std::string to_json_string(const DualElem& f) {
    std::set<int> degrees;
    for (const auto& [forest, c] : f.terms()) degrees.insert(forest.weight());
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (int n : degrees) {
        nlohmann::ordered_json coords = nlohmann::ordered_json::array();
        const QVector v = f.coords(n);
        for (Eigen::Index i = 0; i < v.rows(); ++i) coords.push_back(v(i).str());
        out.push_back(nlohmann::ordered_json{{"degree", n}, {"coords", std::move(coords)}});
    }
    return out.dump();
}

PsiMultResult check_psi_multiplicative(int dmax) {
    for (int total = 0; total <= dmax; ++total) {
        for (int m1 = 0; m1 <= total; ++m1) {
            for (const ZWord& w1 : all_words(m1)) {
                for (const ZWord& w2 : all_words(total - m1)) {
                    DualElem lhs = psi(w1.concat(w2), dmax);
                    DualElem rhs = dual_product(psi(w1, dmax), psi(w2, dmax));
                    if (lhs != rhs) {
                        DualElem diff = lhs - rhs;
                        const Forest& h = diff.terms().begin()->first;
                        return PsiMultResult{
                            false, PsiMultWitness{w1, w2, h, lhs.coeff(h), rhs.coeff(h)}};
                    }
                }
            }
        }
    }
    return PsiMultResult{};
}

std::optional<PhiWitness> witness_phi_not_algebraic(int dmax) {
    for (int total = 0; total <= dmax; ++total) {
        std::vector<ZWord> words = all_words(total);
        for (int p = 0; p <= total; ++p) {
            for (const Forest& x : forest_basis(p)) {
                for (const Forest& y : forest_basis(total - p)) {
                    const HElem xy = product(HElem::from(x), HElem::from(y));
                    for (const ZWord& w : words) {
                        Rat lhs = pair_word(w, xy);
                        Rat rhs(0);
                        for (const auto& [split, c] : word_coproduct(w)) {
                            rhs += c * pair_word(split.first, HElem::from(x)) *
                                   pair_word(split.second, HElem::from(y));
                        }
                        if (lhs != rhs) return PhiWitness{x, y, w, lhs, rhs};
                    }
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<PsiCoalgWitness> witness_psi_not_coalgebraic(int dmax) {
    for (int m = 0; m <= dmax; ++m) {
        for (const ZWord& w : all_words(m)) {
            DualTensor lhs = dual_coproduct(psi(w, dmax), m);
            DualTensor rhs;
            for (const auto& [split, c] : word_coproduct(w)) {
                DualTensor part = dual_tensor(psi(split.first, dmax), psi(split.second, dmax));
                for (auto& [k, v] : part.terms) rhs.add_term(k.first, k.second, v * c);
            }
            if (lhs != rhs) {
                // first differing key
                for (const auto& [k, v] : lhs.terms) {
                    auto it = rhs.terms.find(k);
                    if (it == rhs.terms.end() || it->second != v) {
                        return PsiCoalgWitness{w, k.first, k.second, v,
                                               it == rhs.terms.end() ? Rat(0) : it->second};
                    }
                }
                for (const auto& [k, v] : rhs.terms) {
                    if (lhs.terms.find(k) == lhs.terms.end()) {
                        return PsiCoalgWitness{w, k.first, k.second, Rat(0), v};
                    }
                }
            }
        }
    }
    return std::nullopt;
}

// ---- node-grafting realization ----

namespace {

Tree attach_multi_tree(const Tree& t, int base,
                       const std::map<int, std::vector<Tree>>& additions) {
    std::vector<Tree> children;
    int p = base + 1;
    for (const Tree& c : t.children()) {
        children.push_back(attach_multi_tree(c, p, additions));
        p += c.weight();
    }
    auto it = additions.find(base);
    if (it != additions.end()) {
        children.insert(children.end(), it->second.begin(), it->second.end());
    }
    return Tree::make(std::move(children));
}

// attach several trees at once, addressed by preorder node index
Forest attach_multi(const Forest& host, const std::map<int, std::vector<Tree>>& additions) {
    std::vector<Tree> trees;
    int base = 0;
    for (const Tree& t : host.trees()) {
        std::map<int, std::vector<Tree>> local;
        for (const auto& [node, add] : additions) {
            if (node >= base && node < base + t.weight()) local.emplace(node - base, add);
        }
        trees.push_back(local.empty() ? t : attach_multi_tree(t, 0, local));
        base += t.weight();
    }
    return Forest::of(std::move(trees));
}

HElem gl_product_forests(const Forest& f, const Forest& g) {
    if (f.empty()) return HElem::from(g);
    const int targets = g.weight() + 1; // node indices, plus "stay at the root level"
    const std::size_t k = f.size();
    HElem out;
    std::vector<int> assign(k, 0);
    bool more = true;
    while (more) {
        // node indices address g before any grafting, so graft into g
        // first and only then union in the trees that stay at root level
        std::map<int, std::vector<Tree>> additions;
        std::vector<Tree> stay;
        for (std::size_t i = 0; i < k; ++i) {
            if (assign[i] == g.weight()) stay.push_back(f.trees()[i]);
            else additions[assign[i]].push_back(f.trees()[i]);
        }
        Forest grafted = additions.empty() ? g : attach_multi(g, additions);
        Forest result = stay.empty() ? grafted : grafted.merged(Forest::of(std::move(stay)));
        out.add_term(result, Rat(1));
        more = false;
        for (std::size_t i = 0; i < k; ++i) {
            if (assign[i] + 1 < targets) {
                ++assign[i];
                std::fill(assign.begin(), assign.begin() + static_cast<std::ptrdiff_t>(i), 0);
                more = true;
                break;
            }
        }
    }
    return out;
}

} // namespace

HElem gl_product(const HElem& x, const HElem& y) {
    HElem out;
    for (const auto& [fx, cx] : x.terms()) {
        for (const auto& [fy, cy] : y.terms()) {
            out += gl_product_forests(fx, fy) * (cx * cy);
        }
    }
    return out;
}

TensorElem gl_coproduct(const HElem& x) {
    TensorElem out;
    for (const auto& [f, c] : x.terms()) {
        const std::size_t k = f.size();
        if (k > 20) throw BoundError("gl_coproduct: forest beyond desk scale");
        for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
            std::vector<Tree> left, right;
            for (std::size_t i = 0; i < k; ++i) {
                if (mask & (1u << i)) left.push_back(f.trees()[i]);
                else right.push_back(f.trees()[i]);
            }
            out.add_term(Forest::of(std::move(left)), Forest::of(std::move(right)), c);
        }
    }
    return out;
}

namespace {

HElem gl_antipode_forest(const Forest& f) {
    static std::map<std::string, HElem> memo;
    static std::mutex m;
    if (f.empty()) return HElem::unit();
    {
        std::lock_guard<std::mutex> lock(m);
        auto it = memo.find(f.str());
        if (it != memo.end()) return it->second;
    }
    HElem out = HElem::from(f, Rat(-1));
    const TensorElem d = gl_coproduct(HElem::from(f));
    for (const auto& [k, c] : d.terms()) {
        if (k.first.empty() || k.first == f) continue;
        out -= gl_product(gl_antipode_forest(k.first), HElem::from(k.second)) * c;
    }
    {
        std::lock_guard<std::mutex> lock(m);
        memo.emplace(f.str(), out);
    }
    return out;
}

} // namespace

HElem gl_antipode(const HElem& x) {
    HElem out;
    for (const auto& [f, c] : x.terms()) out += gl_antipode_forest(f) * c;
    return out;
}

GlPairingResult check_gl_matches_pairing(int dmax) {
    auto theta = [&](const Forest& f) {
        return psi(ZWord(std::vector<Tree>(f.trees().begin(), f.trees().end())), dmax);
    };
    for (int total = 0; total <= dmax; ++total) {
        for (int p = 0; p <= total; ++p) {
            for (const Forest& f : forest_basis(p)) {
                for (const Forest& g : forest_basis(total - p)) {
                    DualElem lhs;
                    const HElem fg = gl_product_forests(f, g);
                    for (const auto& [l, c] : fg.terms()) {
                        lhs += theta(l) * c;
                    }
                    DualElem rhs = dual_product(theta(f), theta(g));
                    if (lhs != rhs) {
                        DualElem diff = lhs - rhs;
                        const Forest& h = diff.terms().begin()->first;
                        return GlPairingResult{
                            false, GlPairingWitness{f, g, h, lhs.coeff(h), rhs.coeff(h)}};
                    }
                }
            }
        }
    }
    return GlPairingResult{};
}

bool check_double_dual(int n) {
    const auto& basis = forest_basis(n);
    const auto dim = static_cast<Eigen::Index>(basis.size());
    QMatrix e(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = 0; j < dim; ++j) {
            e(i, j) = DualElem::delta(basis[static_cast<std::size_t>(j)])
                          .apply(HElem::from(basis[static_cast<std::size_t>(i)]));
        }
    }
    return rank(e) == dim;
}

} // namespace rthopf
