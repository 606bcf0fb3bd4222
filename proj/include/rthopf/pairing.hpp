#pragma once

/*
 * pairing.hpp
 * -----------
 * The graded dual of the tree Hopf algebra and its pairing with words over
 * the tree letters Z_t.
 *
 *   <1, h>       = counit(h)
 *   <Z_t, h>     = coefficient of the single-tree forest t in h
 *   <Z_t w, h>   = sum over Delta(h) of <Z_t, h_1> <w, h_2>
 *
 * Words live in the free algebra on the letters (no PBW straightening);
 * the word coalgebra makes every letter primitive, so the coproduct of a
 * word is the sum of its ordered subsequence splits.
 *
 * DualElem is a graded functional stored against the dual forest basis;
 * dual_product is convolution, dual_coproduct is dual to the forest
 * product (multiset splitting with unit coefficients).
 *
 * gl_product is the node-grafting product on forests (each tree of the
 * left factor lands on a node of the right factor or stays at the root
 * level); with the position-splitting coproduct and its antipode it is a
 * concrete cocommutative graded Hopf model of the word side.
 */

#include "rthopf/hopf.hpp"
#include "rthopf/linalg.hpp"
#include "rthopf/tree.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rthopf {

class ZWord {
public:
    ZWord() = default;
    explicit ZWord(std::vector<Tree> letters);
    static ZWord single(const Tree& t) { return ZWord({t}); }

    const std::vector<Tree>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    int weight() const { return weight_; }

    ZWord concat(const ZWord& o) const;

    // "1" for the empty word, else the letters as "Z(t)" concatenated
    std::string str() const;

    friend bool operator==(const ZWord& a, const ZWord& b) { return a.letters_ == b.letters_; }
    friend bool operator!=(const ZWord& a, const ZWord& b) { return !(a == b); }
    friend bool operator<(const ZWord& a, const ZWord& b);

private:
    std::vector<Tree> letters_;
    int weight_ = 0;
};

// All words of the given total weight, deterministic order.
std::vector<ZWord> all_words(int weight);

using WordTensor = std::map<std::pair<ZWord, ZWord>, Rat>;

// Ordered subsequence splitting (letters primitive, coproduct
// multiplicative).
WordTensor word_coproduct(const ZWord& w);

Rat coeff_extract(const Tree& t, const HElem& h);
Rat pair_word(const ZWord& w, const HElem& h);

class DualElem {
public:
    using Terms = std::map<Forest, Rat>;

    DualElem() = default;
    static DualElem delta(const Forest& f, const Rat& c = Rat(1));
    // the counit functional, unit of the convolution algebra
    static DualElem unit() { return delta(Forest()); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rat coeff(const Forest& f) const;
    void add_term(const Forest& f, const Rat& c);

    Rat apply(const HElem& h) const;

    // coordinates of the degree-n part against the dual forest basis
    QVector coords(int n) const;

    DualElem& operator+=(const DualElem& o);
    DualElem& operator-=(const DualElem& o);
    DualElem& operator*=(const Rat& c);
    friend DualElem operator+(DualElem a, const DualElem& b) { a += b; return a; }
    friend DualElem operator-(DualElem a, const DualElem& b) { a -= b; return a; }
    friend DualElem operator*(DualElem a, const Rat& c) { a *= c; return a; }
    friend bool operator==(const DualElem& a, const DualElem& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const DualElem& a, const DualElem& b) { return !(a == b); }

private:
    Terms terms_;
};

struct DualTensor {
    std::map<std::pair<Forest, Forest>, Rat, TensorKeyLess> terms;

    void add_term(const Forest& a, const Forest& b, const Rat& c);
    DualTensor& operator+=(const DualTensor& o);
    friend bool operator==(const DualTensor& a, const DualTensor& b) { return a.terms == b.terms; }
    friend bool operator!=(const DualTensor& a, const DualTensor& b) { return !(a == b); }
};

// convolution: (f * g)(x) = (f (x) g)(Delta x)
DualElem dual_product(const DualElem& f, const DualElem& g);

// coproduct of the degree-n part, dual to the forest product
DualTensor dual_coproduct(const DualElem& f, int n);

DualTensor dual_tensor(const DualElem& f, const DualElem& g);

// the functional pair_word(w, .) in dual-forest coordinates
DualElem psi(const ZWord& w, int bound = 8);

// serialized as a JSON array, one {"degree": n, "coords": [...]} object per
// supported degree, coordinates as rational strings against the forest order
std::string to_json_string(const DualElem& f);

struct PsiMultWitness {
    ZWord w1, w2;
    Forest h;
    Rat lhs, rhs;
};

struct PsiMultResult {
    bool pass = true;
    std::optional<PsiMultWitness> witness;
};

// Psi(w w') = Psi(w) * Psi(w') for all word pairs of total weight <= dmax.
PsiMultResult check_psi_multiplicative(int dmax);

struct PhiWitness {
    Forest x, y;
    ZWord w;
    Rat lhs, rhs;
};

// Search for Phi(xy) != Phi(x) * Phi(y) evaluated on words, where
// Phi(h) = pair_word(., h) and * is convolution against the word
// coalgebra.  Returns the first witness in scan order, if any.
std::optional<PhiWitness> witness_phi_not_algebraic(int dmax);

struct PsiCoalgWitness {
    ZWord w;
    Forest h1, h2;
    Rat lhs, rhs;
};

// Search for dual_coproduct(Psi(w)) != (Psi (x) Psi)(word_coproduct(w)).
std::optional<PsiCoalgWitness> witness_psi_not_coalgebraic(int dmax);

// ---- node-grafting (Grossman-Larson) realization ----

HElem gl_product(const HElem& x, const HElem& y);
TensorElem gl_coproduct(const HElem& x);
HElem gl_antipode(const HElem& x);

struct GlPairingWitness {
    Forest f, g, h;
    Rat lhs, rhs;
};

struct GlPairingResult {
    bool pass = true;
    std::optional<GlPairingWitness> witness;
};

// Does t -> Z_t extend linearly over forests to an algebra map from the
// grafting realization into the convolution algebra?  Checked by pairing
// both sides against every forest up to total degree dmax.
GlPairingResult check_gl_matches_pairing(int dmax);

// Full rank of the degree-n evaluation pairing between the graded piece
// and its dual basis.
bool check_double_dual(int n);

} // namespace rthopf
