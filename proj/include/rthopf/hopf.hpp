#pragma once

/*
 * hopf.hpp
 * --------
 * The graded Hopf algebra of rooted trees: the commutative polynomial
 * algebra on tree classes, with
 *
 *   - product        = multiset union of forests, extended bilinearly,
 *   - coproduct      = sum over admissible cuts, pruned part on the left
 *                      leg and the trunk on the right, multiplicative on
 *                      forests (coproduct_cuts),
 *   - an independent coproduct built from the root-grafting recursion
 *     Delta(B+(F)) = B+(F) (x) 1 + (id (x) B+) Delta(F)  (coproduct_bplus);
 *     the two are cross-asserted and never share code,
 *   - counit         = coefficient of the empty forest,
 *   - antipode       = cut recursion S(t) = -t - sum S(pruned) * trunk,
 *   - the grafting operation M T N = (1/weight N) * sum over nodes of N of
 *     attach(N, v, M), zero when N is the unit.
 *
 * HElem is a finitely supported map Forest -> Rat with no stored zeros;
 * term iteration order is (degree, forest string), which is also the
 * rendered term order.
 */

#include "rthopf/rational.hpp"
#include "rthopf/tree.hpp"

#include <map>
#include <string>
#include <utility>

namespace rthopf {

class HElem {
public:
    using Terms = std::map<Forest, Rat>;

    HElem() = default;
    static HElem zero() { return HElem(); }
    static HElem unit() { return scalar(Rat(1)); }
    static HElem scalar(const Rat& c);
    static HElem from(const Forest& f, const Rat& c = Rat(1));
    static HElem from(const Tree& t, const Rat& c = Rat(1));

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rat coeff(const Forest& f) const;
    void add_term(const Forest& f, const Rat& c);

    HElem& operator+=(const HElem& o);
    HElem& operator-=(const HElem& o);
    HElem& operator*=(const Rat& c);
    friend HElem operator+(HElem a, const HElem& b) { a += b; return a; }
    friend HElem operator-(HElem a, const HElem& b) { a -= b; return a; }
    friend HElem operator*(HElem a, const Rat& c) { a *= c; return a; }
    friend HElem operator*(const Rat& c, HElem a) { a *= c; return a; }
    friend HElem operator-(const HElem& a) { return a * Rat(-1); }
    friend bool operator==(const HElem& a, const HElem& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const HElem& a, const HElem& b) { return !(a == b); }

private:
    Terms terms_;
};

struct TensorKeyLess {
    using Key = std::pair<Forest, Forest>;
    bool operator()(const Key& a, const Key& b) const {
        const int wa = a.first.weight() + a.second.weight();
        const int wb = b.first.weight() + b.second.weight();
        if (wa != wb) return wa < wb;
        if (a.first.str() != b.first.str()) return a.first.str() < b.first.str();
        return a.second.str() < b.second.str();
    }
};

class TensorElem {
public:
    using Key = std::pair<Forest, Forest>;
    using Terms = std::map<Key, Rat, TensorKeyLess>;

    TensorElem() = default;
    static TensorElem from(const Forest& left, const Forest& right, const Rat& c = Rat(1));

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rat coeff(const Forest& left, const Forest& right) const;
    void add_term(const Forest& left, const Forest& right, const Rat& c);

    TensorElem& operator+=(const TensorElem& o);
    TensorElem& operator-=(const TensorElem& o);
    TensorElem& operator*=(const Rat& c);
    friend TensorElem operator+(TensorElem a, const TensorElem& b) { a += b; return a; }
    friend TensorElem operator-(TensorElem a, const TensorElem& b) { a -= b; return a; }
    friend TensorElem operator*(TensorElem a, const Rat& c) { a *= c; return a; }
    friend TensorElem operator*(const Rat& c, TensorElem a) { a *= c; return a; }
    // componentwise algebra product on H (x) H
    friend TensorElem operator*(const TensorElem& a, const TensorElem& b);
    friend bool operator==(const TensorElem& a, const TensorElem& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const TensorElem& a, const TensorElem& b) { return !(a == b); }

private:
    Terms terms_;
};

struct Tensor3KeyLess {
    using Key = std::array<Forest, 3>;
    bool operator()(const Key& a, const Key& b) const;
};

class Tensor3Elem {
public:
    using Key = std::array<Forest, 3>;
    using Terms = std::map<Key, Rat, Tensor3KeyLess>;

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const Key& k, const Rat& c);

    Tensor3Elem& operator+=(const Tensor3Elem& o);
    Tensor3Elem& operator-=(const Tensor3Elem& o);
    friend Tensor3Elem operator-(Tensor3Elem a, const Tensor3Elem& b) { a -= b; return a; }
    friend bool operator==(const Tensor3Elem& a, const Tensor3Elem& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Tensor3Elem& a, const Tensor3Elem& b) { return !(a == b); }

private:
    Terms terms_;
};

// ---- algebra structure ----

HElem product(const HElem& x, const HElem& y);
inline HElem operator*(const HElem& x, const HElem& y) { return product(x, y); }

Rat counit(const HElem& x);
HElem graded_component(const HElem& x, int n);
// max term weight; -1 for the zero element
int degree(const HElem& x);

// ---- coproducts ----

// admissible-cut coproduct (the default coproduct everywhere downstream)
TensorElem coproduct_cuts(const Tree& t);
TensorElem coproduct_cuts(const Forest& f);
TensorElem coproduct_cuts(const HElem& x);
inline TensorElem coproduct(const HElem& x) { return coproduct_cuts(x); }
inline TensorElem coproduct(const Forest& f) { return coproduct_cuts(f); }

// root-grafting recursion; independent implementation kept as an oracle
TensorElem coproduct_bplus(const Tree& t);
TensorElem coproduct_bplus(const Forest& f);

// (Delta (x) id) Delta
Tensor3Elem coproduct2(const HElem& x);
Tensor3Elem coproduct2(const Forest& f);

// Delta(x) - x (x) 1 - 1 (x) x; requires counit(x) = 0
TensorElem reduced_coproduct(const HElem& x);

// ---- Hopf structure ----

Tree b_plus(const Forest& f);

HElem antipode(const HElem& x);
HElem antipode(const Forest& f);
HElem antipode(const Tree& t);

// M T N, bilinear; M T 1 = 0
HElem graft_top(const HElem& m, const HElem& n);

// ---- rendering ----

// "c*forest" terms joined by " + ", term order (degree, forest string);
// "0" for zero
std::string to_string(const HElem& x);
// "c*left(x)right" with a UTF-8 tensor sign, order (total degree, left
// string, right string)
std::string to_string(const TensorElem& x);

} // namespace rthopf
