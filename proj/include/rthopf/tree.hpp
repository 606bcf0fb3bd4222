#pragma once

/*
 * tree.hpp
 * --------
 * Canonical rooted trees and forests.
 *
 * A Tree is an equivalence class of finite unordered rooted trees; two
 * trees related by permuting sibling subtrees are the same Tree.  The
 * canonical form keeps children sorted ascending by (weight, canonical
 * string), and the canonical string is "(" + children + ")", which is
 * injective on classes and trivially parseable.
 *
 * A Forest is a sorted multiset of Trees; the empty forest is the unit
 * monomial.  Forest strings join trees with '.', or are "1" when empty.
 *
 * Values are immutable after construction and safe to share across
 * threads.  Node addressing (NodeId) is by preorder index over the
 * canonical form, tree by tree for forests.
 */

#include "rthopf/errors.hpp"

#include <compare>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rthopf {

using NodeId = int;

class Tree {
public:
    // single vertex
    Tree();

    // canonicalizes: children get sorted by (weight, string)
    static Tree make(std::vector<Tree> children);

    // canonical grammar: tree := "(" tree* ")"; arbitrary child order is
    // accepted and re-sorted
    static Tree parse(std::string_view s);

    int weight() const { return node_->weight; }
    const std::string& str() const { return node_->repr; }
    std::span<const Tree> children() const { return node_->children; }
    bool is_leaf() const { return node_->children.empty(); }

    int max_fertility() const;

    friend bool operator==(const Tree& a, const Tree& b) { return a.str() == b.str(); }
    friend bool operator!=(const Tree& a, const Tree& b) { return !(a == b); }
    // total order: weight, then canonical string bytewise
    friend bool operator<(const Tree& a, const Tree& b) {
        if (a.weight() != b.weight()) return a.weight() < b.weight();
        return a.str() < b.str();
    }

private:
    struct Node {
        std::vector<Tree> children;
        int weight;
        std::string repr;
    };
    explicit Tree(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

class Forest {
public:
    Forest() : weight_(0), repr_("1") {}
    explicit Forest(Tree t);

    // sorts into canonical multiset order
    static Forest of(std::vector<Tree> trees);

    // forest := tree ("." tree)* | "1"
    static Forest parse(std::string_view s);

    int weight() const { return weight_; }
    std::size_t size() const { return trees_.size(); }
    bool empty() const { return trees_.empty(); }
    std::span<const Tree> trees() const { return trees_; }
    const std::string& str() const { return repr_; }

    // multiset union (the monomial product)
    Forest merged(const Forest& o) const;

    friend bool operator==(const Forest& a, const Forest& b) { return a.repr_ == b.repr_; }
    friend bool operator!=(const Forest& a, const Forest& b) { return !(a == b); }
    friend bool operator<(const Forest& a, const Forest& b) {
        if (a.weight_ != b.weight_) return a.weight_ < b.weight_;
        return a.repr_ < b.repr_;
    }

private:
    std::vector<Tree> trees_;
    int weight_;
    std::string repr_;
};

// Unordered input tree for canonicalize(); child order is arbitrary.
struct RawTree {
    std::vector<RawTree> children;
};

Tree canonicalize(const RawTree& raw);

bool equivalent(const Tree& a, const Tree& b);
bool equivalent(const RawTree& a, const RawTree& b);

Tree parse_tree(std::string_view s);

// chain of i vertices
Tree ladder(int i);

int max_fertility(const Tree& t);

// All tree classes of weight exactly n, each once, sorted; memoized.
const std::vector<Tree>& generate_trees(int n);

// All forests of total weight n, sorted; generate_forests(0) = { 1 }.
const std::vector<Forest>& generate_forests(int n);

// Attach every tree of `graft` by a new edge from node v of `host`.
Tree attach(const Tree& host, NodeId v, const Forest& graft);
Forest attach(const Forest& host, NodeId v, const Forest& graft);

// Graphviz rendering, node labels = preorder indices.
std::string to_dot(const Tree& t, const std::string& name = "t");
std::string to_dot(const Forest& f, const std::string& name = "f");

} // namespace rthopf
