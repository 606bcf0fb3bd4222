#include "rthopf/hopf.hpp"

#include "rthopf/errors.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <vector>

namespace rthopf {

// ---- HElem ----

HElem HElem::scalar(const Rat& c) {
    HElem x;
    x.add_term(Forest(), c);
    return x;
}

HElem HElem::from(const Forest& f, const Rat& c) {
    HElem x;
    x.add_term(f, c);
    return x;
}

HElem HElem::from(const Tree& t, const Rat& c) {
    return from(Forest(t), c);
}

Rat HElem::coeff(const Forest& f) const {
    auto it = terms_.find(f);
    return it == terms_.end() ? Rat(0) : it->second;
}

void HElem::add_term(const Forest& f, const Rat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(f, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

HElem& HElem::operator+=(const HElem& o) {
    for (const auto& [f, c] : o.terms_) add_term(f, c);
    return *this;
}

HElem& HElem::operator-=(const HElem& o) {
    for (const auto& [f, c] : o.terms_) add_term(f, -c);
    return *this;
}

HElem& HElem::operator*=(const Rat& c) {
    if (c.is_zero()) { terms_.clear(); return *this; }
    for (auto& [f, v] : terms_) v *= c;
    return *this;
}

// ---- TensorElem ----

TensorElem TensorElem::from(const Forest& left, const Forest& right, const Rat& c) {
    TensorElem t;
    t.add_term(left, right, c);
    return t;
}

Rat TensorElem::coeff(const Forest& left, const Forest& right) const {
    auto it = terms_.find({left, right});
    return it == terms_.end() ? Rat(0) : it->second;
}

void TensorElem::add_term(const Forest& left, const Forest& right, const Rat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(Key{left, right}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TensorElem& TensorElem::operator+=(const TensorElem& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
}

TensorElem& TensorElem::operator-=(const TensorElem& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
    return *this;
}

TensorElem& TensorElem::operator*=(const Rat& c) {
    if (c.is_zero()) { terms_.clear(); return *this; }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

TensorElem operator*(const TensorElem& a, const TensorElem& b) {
    TensorElem out;
    for (const auto& [ka, ca] : a.terms_) {
        for (const auto& [kb, cb] : b.terms_) {
            out.add_term(ka.first.merged(kb.first), ka.second.merged(kb.second), ca * cb);
        }
    }
    return out;
}

// ---- Tensor3Elem ----

bool Tensor3KeyLess::operator()(const Key& a, const Key& b) const {
    const int wa = a[0].weight() + a[1].weight() + a[2].weight();
    const int wb = b[0].weight() + b[1].weight() + b[2].weight();
    if (wa != wb) return wa < wb;
    for (int i = 0; i < 3; ++i) {
        if (a[static_cast<std::size_t>(i)].str() != b[static_cast<std::size_t>(i)].str())
            return a[static_cast<std::size_t>(i)].str() < b[static_cast<std::size_t>(i)].str();
    }
    return false;
}

void Tensor3Elem::add_term(const Key& k, const Rat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Tensor3Elem& Tensor3Elem::operator+=(const Tensor3Elem& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

Tensor3Elem& Tensor3Elem::operator-=(const Tensor3Elem& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

// ---- algebra ----

HElem product(const HElem& x, const HElem& y) {
    HElem out;
    for (const auto& [fx, cx] : x.terms()) {
        for (const auto& [fy, cy] : y.terms()) {
            out.add_term(fx.merged(fy), cx * cy);
        }
    }
    return out;
}

Rat counit(const HElem& x) { return x.coeff(Forest()); }

HElem graded_component(const HElem& x, int n) {
    HElem out;
    for (const auto& [f, c] : x.terms()) {
        if (f.weight() == n) out.add_term(f, c);
    }
    return out;
}

int degree(const HElem& x) {
    int d = -1;
    for (const auto& [f, c] : x.terms()) d = std::max(d, f.weight());
    return d;
}

// ---- admissible cuts ----

namespace {

struct CutData {
    Forest pruned;
    Forest trunk; // single-tree forest
};

void subtree_table(const Tree& t, int base, std::vector<Tree>& out) {
    out[static_cast<std::size_t>(base)] = t;
    int p = base + 1;
    for (const Tree& c : t.children()) {
        subtree_table(c, p, out);
        p += c.weight();
    }
}

Tree trunk_skipping(const Tree& t, int base, const std::vector<char>& cut) {
    std::vector<Tree> kept;
    int p = base + 1;
    for (const Tree& c : t.children()) {
        if (!cut[static_cast<std::size_t>(p)]) kept.push_back(trunk_skipping(c, p, cut));
        p += c.weight();
    }
    return Tree::make(std::move(kept));
}

// Every admissible cutset of t, the empty one included as (1, t).
// Admissible: no cut vertex is an ancestor of another.
std::vector<CutData> enumerate_cuts(const Tree& t) {
    const int w = t.weight();
    if (w - 1 > 20) throw BoundError("coproduct: tree weight beyond desk scale");
    std::vector<Tree> sub(static_cast<std::size_t>(w));
    subtree_table(t, 0, sub);

    std::vector<CutData> out;
    const std::uint32_t subsets = 1u << (w - 1);
    std::vector<char> cut(static_cast<std::size_t>(w), 0);
    for (std::uint32_t mask = 0; mask < subsets; ++mask) {
        std::vector<int> verts;
        for (int v = 1; v < w; ++v) {
            if (mask & (1u << (v - 1))) verts.push_back(v);
        }
        bool ok = true;
        for (std::size_t i = 0; i < verts.size() && ok; ++i) {
            for (std::size_t j = i + 1; j < verts.size() && ok; ++j) {
                // verts sorted ascending: j nested under i iff inside i's interval
                if (verts[j] < verts[i] + sub[static_cast<std::size_t>(verts[i])].weight()) ok = false;
            }
        }
        if (!ok) continue;
        std::fill(cut.begin(), cut.end(), 0);
        std::vector<Tree> pruned;
        for (int v : verts) {
            cut[static_cast<std::size_t>(v)] = 1;
            pruned.push_back(sub[static_cast<std::size_t>(v)]);
        }
        out.push_back(CutData{Forest::of(std::move(pruned)),
                              Forest(trunk_skipping(t, 0, cut))});
    }
    return out;
}

std::mutex cut_mutex;

const std::vector<CutData>& admissible_cuts(const Tree& t) {
    static std::map<std::string, std::vector<CutData>> memo;
    std::lock_guard<std::mutex> lock(cut_mutex);
    auto it = memo.find(t.str());
    if (it == memo.end()) it = memo.emplace(t.str(), enumerate_cuts(t)).first;
    return it->second;
}

} // namespace

TensorElem coproduct_cuts(const Tree& t) {
    TensorElem out;
    for (const CutData& c : admissible_cuts(t)) {
        out.add_term(c.pruned, c.trunk, Rat(1));
    }
    out.add_term(Forest(t), Forest(), Rat(1));
    return out;
}

TensorElem coproduct_cuts(const Forest& f) {
    static std::map<std::string, TensorElem> memo;
    static std::mutex m;
    {
        std::lock_guard<std::mutex> lock(m);
        auto it = memo.find(f.str());
        if (it != memo.end()) return it->second;
    }
    TensorElem out = TensorElem::from(Forest(), Forest(), Rat(1));
    for (const Tree& t : f.trees()) out = out * coproduct_cuts(t);
    {
        std::lock_guard<std::mutex> lock(m);
        memo.emplace(f.str(), out);
    }
    return out;
}

TensorElem coproduct_cuts(const HElem& x) {
    TensorElem out;
    for (const auto& [f, c] : x.terms()) out += coproduct_cuts(f) * c;
    return out;
}

// ---- root-grafting recursion; shares nothing with the cut enumeration ----

TensorElem coproduct_bplus(const Forest& f) {
    TensorElem out = TensorElem::from(Forest(), Forest(), Rat(1));
    for (const Tree& t : f.trees()) out = out * coproduct_bplus(t);
    return out;
}

TensorElem coproduct_bplus(const Tree& t) {
    static std::map<std::string, TensorElem> memo;
    static std::mutex m;
    {
        std::lock_guard<std::mutex> lock(m);
        auto it = memo.find(t.str());
        if (it != memo.end()) return it->second;
    }
    std::vector<Tree> children(t.children().begin(), t.children().end());
    const Forest f = Forest::of(std::move(children));
    TensorElem out = TensorElem::from(Forest(t), Forest(), Rat(1));
    const TensorElem inner = coproduct_bplus(f);
    for (const auto& [k, c] : inner.terms()) {
        out.add_term(k.first, Forest(b_plus(k.second)), c);
    }
    {
        std::lock_guard<std::mutex> lock(m);
        memo.emplace(t.str(), out);
    }
    return out;
}

namespace {

const Tensor3Elem& coproduct2_cached(const Forest& f) {
    static std::map<std::string, Tensor3Elem> memo;
    static std::mutex m;
    {
        std::lock_guard<std::mutex> lock(m);
        auto it = memo.find(f.str());
        if (it != memo.end()) return it->second;
    }
    Tensor3Elem out;
    const TensorElem outer = coproduct_cuts(f);
    for (const auto& [k, c] : outer.terms()) {
        const TensorElem left = coproduct_cuts(k.first);
        for (const auto& [k2, c2] : left.terms()) {
            out.add_term({k2.first, k2.second, k.second}, c * c2);
        }
    }
    std::lock_guard<std::mutex> lock(m);
    return memo.emplace(f.str(), std::move(out)).first->second;
}

} // namespace

Tensor3Elem coproduct2(const Forest& f) { return coproduct2_cached(f); }

Tensor3Elem coproduct2(const HElem& x) {
    Tensor3Elem out;
    for (const auto& [f, c] : x.terms()) {
        const Tensor3Elem& t3 = coproduct2_cached(f);
        for (const auto& [k, d] : t3.terms()) out.add_term(k, c * d);
    }
    return out;
}

TensorElem reduced_coproduct(const HElem& x) {
    if (!counit(x).is_zero())
        throw std::invalid_argument("reduced_coproduct: nonzero counit part");
    TensorElem out = coproduct_cuts(x);
    for (const auto& [f, c] : x.terms()) {
        out.add_term(f, Forest(), -c);
        out.add_term(Forest(), f, -c);
    }
    return out;
}

// ---- Hopf structure ----

Tree b_plus(const Forest& f) {
    std::vector<Tree> children(f.trees().begin(), f.trees().end());
    return Tree::make(std::move(children));
}

HElem antipode(const Tree& t) {
    static std::map<std::string, HElem> memo;
    static std::mutex m;
    {
        std::lock_guard<std::mutex> lock(m);
        auto it = memo.find(t.str());
        if (it != memo.end()) return it->second;
    }
    HElem out = HElem::from(t, Rat(-1));
    for (const CutData& c : admissible_cuts(t)) {
        if (c.pruned.empty()) continue;
        out -= product(antipode(c.pruned), HElem::from(c.trunk));
    }
    {
        std::lock_guard<std::mutex> lock(m);
        memo.emplace(t.str(), out);
    }
    return out;
}

HElem antipode(const Forest& f) {
    HElem out = HElem::unit();
    for (const Tree& t : f.trees()) out = product(out, antipode(t));
    return out;
}

HElem antipode(const HElem& x) {
    HElem out;
    for (const auto& [f, c] : x.terms()) out += antipode(f) * c;
    return out;
}

HElem graft_top(const HElem& m, const HElem& n) {
    HElem out;
    for (const auto& [fn, cn] : n.terms()) {
        if (fn.empty()) continue; // M T 1 = 0
        for (const auto& [fm, cm] : m.terms()) {
            const Rat c = cm * cn / Rat(fn.weight());
            for (int v = 0; v < fn.weight(); ++v) {
                out.add_term(attach(fn, v, fm), c);
            }
        }
    }
    return out;
}

// ---- rendering ----

std::string to_string(const HElem& x) {
    if (x.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [f, c] : x.terms()) {
        if (!first) os << " + ";
        os << c.str() << "*" << f.str();
        first = false;
    }
    return os.str();
}

std::string to_string(const TensorElem& x) {
    if (x.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : x.terms()) {
        if (!first) os << " + ";
        os << c.str() << "*" << k.first.str() << "\xE2\x8A\x97" << k.second.str();
        first = false;
    }
    return os.str();
}

} // namespace rthopf
