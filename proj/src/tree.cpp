#include "rthopf/tree.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <sstream>

namespace rthopf {

Tree::Tree() {
    static const std::shared_ptr<const Node> leaf =
        std::make_shared<Node>(Node{{}, 1, "()"});
    node_ = leaf;
}

Tree Tree::make(std::vector<Tree> children) {
    std::sort(children.begin(), children.end());
    int w = 1;
    std::string repr = "(";
    for (const Tree& c : children) {
        w += c.weight();
        repr += c.str();
    }
    repr += ")";
    return Tree(std::make_shared<Node>(Node{std::move(children), w, std::move(repr)}));
}

namespace {

Tree parse_tree_at(std::string_view s, std::size_t& pos) {
    if (pos >= s.size() || s[pos] != '(')
        throw ParseError("expected '('", pos);
    ++pos;
    std::vector<Tree> children;
    while (pos < s.size() && s[pos] == '(') {
        children.push_back(parse_tree_at(s, pos));
    }
    if (pos >= s.size())
        throw ParseError("unbalanced parentheses: missing ')'", pos);
    if (s[pos] != ')')
        throw ParseError("stray character in tree literal", pos);
    ++pos;
    return Tree::make(std::move(children));
}

} // namespace

Tree Tree::parse(std::string_view s) {
    std::size_t pos = 0;
    Tree t = parse_tree_at(s, pos);
    if (pos != s.size())
        throw ParseError("trailing characters after tree", pos);
    return t;
}

int Tree::max_fertility() const {
    int m = static_cast<int>(node_->children.size());
    for (const Tree& c : node_->children) m = std::max(m, c.max_fertility());
    return m;
}

Forest::Forest(Tree t) : weight_(t.weight()), repr_(t.str()) {
    trees_.push_back(std::move(t));
}

Forest Forest::of(std::vector<Tree> trees) {
    Forest f;
    f.trees_ = std::move(trees);
    std::sort(f.trees_.begin(), f.trees_.end());
    f.weight_ = 0;
    if (f.trees_.empty()) {
        f.repr_ = "1";
        return f;
    }
    std::string repr;
    for (std::size_t i = 0; i < f.trees_.size(); ++i) {
        if (i) repr += '.';
        repr += f.trees_[i].str();
        f.weight_ += f.trees_[i].weight();
    }
    f.repr_ = std::move(repr);
    return f;
}

Forest Forest::parse(std::string_view s) {
    if (s == "1") return Forest();
    std::size_t pos = 0;
    std::vector<Tree> trees;
    while (true) {
        trees.push_back(parse_tree_at(s, pos));
        if (pos == s.size()) break;
        if (s[pos] != '.')
            throw ParseError("expected '.' between forest trees", pos);
        ++pos;
    }
    return Forest::of(std::move(trees));
}

Forest Forest::merged(const Forest& o) const {
    std::vector<Tree> all(trees_.begin(), trees_.end());
    all.insert(all.end(), o.trees_.begin(), o.trees_.end());
    return Forest::of(std::move(all));
}

Tree canonicalize(const RawTree& raw) {
    std::vector<Tree> children;
    children.reserve(raw.children.size());
    for (const RawTree& c : raw.children) children.push_back(canonicalize(c));
    return Tree::make(std::move(children));
}

bool equivalent(const Tree& a, const Tree& b) { return a == b; }

bool equivalent(const RawTree& a, const RawTree& b) {
    return canonicalize(a) == canonicalize(b);
}

Tree parse_tree(std::string_view s) { return Tree::parse(s); }

Tree ladder(int i) {
    if (i < 1) throw std::domain_error("ladder: weight must be positive");
    Tree t;
    for (int k = 1; k < i; ++k) t = Tree::make({t});
    return t;
}

int max_fertility(const Tree& t) { return t.max_fertility(); }

namespace {

std::mutex gen_mutex;
// deques so that handed-out references stay valid while the caches grow
std::deque<std::vector<Tree>> tree_cache;     // [n-1] -> trees of weight n
std::deque<std::vector<Forest>> forest_cache; // [n] -> forests of weight n

// trees of weight 1..n in the global total order (weight-major)
std::vector<Tree> trees_up_to_locked(int n) {
    std::vector<Tree> pool;
    for (int w = 1; w <= n; ++w) {
        const auto& tw = tree_cache[static_cast<std::size_t>(w - 1)];
        pool.insert(pool.end(), tw.begin(), tw.end());
    }
    return pool;
}

std::vector<Forest> build_forests_locked(int m) {
    // non-decreasing multisets over trees of weight <= m, total weight m
    std::vector<Tree> pool = trees_up_to_locked(m);
    std::vector<Forest> out;
    std::vector<Tree> current;
    auto rec = [&](auto&& self, std::size_t start, int remaining) -> void {
        if (remaining == 0) {
            out.push_back(Forest::of(current));
            return;
        }
        for (std::size_t i = start; i < pool.size(); ++i) {
            if (pool[i].weight() > remaining) break;
            current.push_back(pool[i]);
            self(self, i, remaining - pool[i].weight());
            current.pop_back();
        }
    };
    rec(rec, 0, m);
    std::sort(out.begin(), out.end());
    return out;
}

// Guarantees trees of weights 1..n and forests of weights 0..n-1.
// trees(k+1) are the roots over forests(k); forests(k) need trees(<= k).
void ensure_locked(int n) {
    if (tree_cache.empty()) tree_cache.push_back({Tree()});
    if (forest_cache.empty()) forest_cache.push_back({Forest()});
    while (static_cast<int>(tree_cache.size()) < n) {
        const int k = static_cast<int>(tree_cache.size()); // trees known up to weight k
        if (static_cast<int>(forest_cache.size()) <= k) {
            forest_cache.push_back(build_forests_locked(k));
        }
        std::vector<Tree> out;
        for (const Forest& f : forest_cache[static_cast<std::size_t>(k)]) {
            std::vector<Tree> children(f.trees().begin(), f.trees().end());
            out.push_back(Tree::make(std::move(children)));
        }
        std::sort(out.begin(), out.end());
        tree_cache.push_back(std::move(out));
    }
}

} // namespace

const std::vector<Tree>& generate_trees(int n) {
    if (n < 1) throw std::domain_error("generate_trees: weight must be positive");
    std::lock_guard<std::mutex> lock(gen_mutex);
    ensure_locked(n);
    return tree_cache[static_cast<std::size_t>(n - 1)];
}

const std::vector<Forest>& generate_forests(int n) {
    if (n < 0) throw std::invalid_argument("generate_forests: negative weight");
    std::lock_guard<std::mutex> lock(gen_mutex);
    ensure_locked(n + 1); // forests(n) are built on the way to trees(n+1)
    return forest_cache[static_cast<std::size_t>(n)];
}

namespace {

Tree attach_in_tree(const Tree& host, NodeId v, const Forest& graft) {
    std::vector<Tree> children(host.children().begin(), host.children().end());
    if (v == 0) {
        children.insert(children.end(), graft.trees().begin(), graft.trees().end());
        return Tree::make(std::move(children));
    }
    int offset = 1;
    for (Tree& c : children) {
        if (v - offset < c.weight()) {
            c = attach_in_tree(c, v - offset, graft);
            return Tree::make(std::move(children));
        }
        offset += c.weight();
    }
    throw std::out_of_range("attach: node index out of range");
}

} // namespace

Tree attach(const Tree& host, NodeId v, const Forest& graft) {
    if (v < 0 || v >= host.weight())
        throw std::out_of_range("attach: node index out of range");
    if (graft.empty()) return host;
    return attach_in_tree(host, v, graft);
}

Forest attach(const Forest& host, NodeId v, const Forest& graft) {
    if (host.empty()) throw std::invalid_argument("attach: empty host forest");
    if (v < 0 || v >= host.weight())
        throw std::out_of_range("attach: node index out of range");
    if (graft.empty()) return host;
    std::vector<Tree> trees(host.trees().begin(), host.trees().end());
    int offset = 0;
    for (Tree& t : trees) {
        if (v - offset < t.weight()) {
            t = attach_in_tree(t, v - offset, graft);
            return Forest::of(std::move(trees));
        }
        offset += t.weight();
    }
    throw std::out_of_range("attach: node index out of range");
}

namespace {

void dot_edges(const Tree& t, int base, int& next, std::ostringstream& os) {
    const int self = base;
    for (const Tree& c : t.children()) {
        const int child = next;
        next += c.weight();
        os << "  " << self << " -> " << child << ";\n";
        dot_edges(c, child, next, os);
    }
}

void dot_tree_body(const Tree& t, int base, std::ostringstream& os) {
    for (int i = 0; i < t.weight(); ++i)
        os << "  " << base + i << " [label=\"" << base + i << "\"];\n";
    int next = base + 1;
    dot_edges(t, base, next, os);
}

} // namespace

std::string to_dot(const Tree& t, const std::string& name) {
    std::ostringstream os;
    os << "digraph " << name << " {\n";
    dot_tree_body(t, 0, os);
    os << "}\n";
    return os.str();
}

std::string to_dot(const Forest& f, const std::string& name) {
    std::ostringstream os;
    os << "digraph " << name << " {\n";
    int base = 0;
    for (const Tree& t : f.trees()) {
        dot_tree_body(t, base, os);
        base += t.weight();
    }
    os << "}\n";
    return os.str();
}

} // namespace rthopf
