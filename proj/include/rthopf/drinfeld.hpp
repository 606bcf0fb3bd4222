#pragma once

/*
 * drinfeld.hpp
 * ------------
 * The degree-truncated graded Drinfeld double D(H) = A |><| H for a locally
 * finite graded Hopf algebra H, with A the co-opposite of the graded dual,
 * together with the coevaluation family P_n and the R_n matrices.
 *
 * Two concrete models of H are provided:
 *
 *   TreeModel : the commutative tree Hopf algebra (cut coproduct); the
 *               double multiplies by the rule
 *               (a |> h)(b |> g) = sum a b_1 |> beta(h, b_2) g,
 *               beta(h, a) = sum <a_1, h_1> <a_2, S(h_3)> h_2.
 *
 *   GraftModel: the cocommutative node-grafting realization; the double is
 *               the smash product
 *               (a |> h)(b |> g) = sum a alpha(h_1, b) |> h_2 g,
 *               alpha(h, a) = sum <a_1, h_1> <a_3, S(h_2)> a_2.
 *
 * The Sweedler legs of the A side are ambiguous between the co-opposite
 * order and the plain graded-dual order; both readings are implemented
 * behind LegsMode and select_legs_mode picks the one whose associativity
 * sweep passes.  (For TreeModel the two coincide: the dual of a commutative
 * product is cocommutative.)
 *
 * Degrees: an A-leg of weight p and an H-leg of weight q give a basis
 * element of size p + q and signed degree q - p.  Products add the signed
 * degree; desk-scale bounds and truncation projections use the size.
 */

#include "rthopf/basis.hpp"
#include "rthopf/hopf.hpp"
#include "rthopf/pairing.hpp"
#include "rthopf/structure.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rthopf {

enum class LegsMode { a_order, hg_order };
enum class BasisMode { forest, top_monomial };

struct TreeModel {
    static constexpr bool uses_beta = true;
    static const char* name() { return "tree"; }
    static HElem mul(const HElem& x, const HElem& y) { return product(x, y); }
    static TensorElem comul(const HElem& x) { return coproduct(x); }
    static HElem antipode_of(const HElem& x) { return antipode(x); }
};

struct GraftModel {
    static constexpr bool uses_beta = false;
    static const char* name() { return "graft"; }
    static HElem mul(const HElem& x, const HElem& y) { return gl_product(x, y); }
    static TensorElem comul(const HElem& x) { return gl_coproduct(x); }
    static HElem antipode_of(const HElem& x) { return gl_antipode(x); }
};

// element of D(H): A-leg in dual-forest coordinates, H-leg a forest
class DoubleElem {
public:
    using Key = std::pair<Forest, Forest>; // (dual label, forest)
    using Terms = std::map<Key, Rat>;

    DoubleElem() = default;
    static DoubleElem from(const Forest& a, const Forest& h, const Rat& c = Rat(1));
    static DoubleElem unit() { return from(Forest(), Forest()); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rat coeff(const Forest& a, const Forest& h) const;
    void add_term(const Forest& a, const Forest& h, const Rat& c);

    DoubleElem& operator+=(const DoubleElem& o);
    DoubleElem& operator-=(const DoubleElem& o);
    DoubleElem& operator*=(const Rat& c);
    friend DoubleElem operator+(DoubleElem a, const DoubleElem& b) { a += b; return a; }
    friend DoubleElem operator-(DoubleElem a, const DoubleElem& b) { a -= b; return a; }
    friend DoubleElem operator*(DoubleElem a, const Rat& c) { a *= c; return a; }
    friend bool operator==(const DoubleElem& a, const DoubleElem& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const DoubleElem& a, const DoubleElem& b) { return !(a == b); }

private:
    Terms terms_;
};

inline int key_size(const DoubleElem::Key& k) { return k.first.weight() + k.second.weight(); }
inline int key_signed_degree(const DoubleElem::Key& k) { return k.second.weight() - k.first.weight(); }

// element of D(H) (x) D(H)
struct DoubleTensor {
    using Key = std::array<Forest, 4>; // (a1, h1, a2, h2)
    std::map<Key, Rat> terms;

    void add_term(const Key& k, const Rat& c);
    DoubleTensor& operator+=(const DoubleTensor& o);
    DoubleTensor& operator-=(const DoubleTensor& o);
    friend DoubleTensor operator-(DoubleTensor a, const DoubleTensor& b) { a -= b; return a; }
    friend bool operator==(const DoubleTensor& a, const DoubleTensor& b) { return a.terms == b.terms; }
    friend bool operator!=(const DoubleTensor& a, const DoubleTensor& b) { return !(a == b); }
};

// element of D(H) (x) D(H) (x) D(H)
struct DoubleTriple {
    using Key = std::array<Forest, 6>;
    std::map<Key, Rat> terms;

    void add_term(const Key& k, const Rat& c);
    DoubleTriple& operator-=(const DoubleTriple& o);
    bool is_zero() const { return terms.empty(); }
};

// ---- actions and products ----

// beta(h, a) = sum <a_1, h_1> <a_2, S(h_3)> h_2  (value in H)
template <class Model>
HElem beta_action(const HElem& h, const DualElem& a, LegsMode mode);

// alpha(h, a) = sum <a_1, h_1> <a_3, S(h_2)> a_2  (value in A)
template <class Model>
DualElem alpha_action(const HElem& h, const DualElem& a, LegsMode mode);

// convolution product of A = (H^g)^cop for the model's coproduct
template <class Model>
DualElem a_convolution(const DualElem& f, const DualElem& g);

template <class Model>
DoubleElem double_mul(const DoubleElem& u, const DoubleElem& v, LegsMode mode);

template <class Model>
DoubleTensor double_comul(const DoubleElem& u);

Rat double_counit(const DoubleElem& u);

// tree-model conveniences
DoubleElem double_product(const DoubleElem& u, const DoubleElem& v,
                          LegsMode mode = LegsMode::a_order);
DoubleTensor double_coproduct(const DoubleElem& u);

// ---- coevaluation and R matrices ----

struct CoEv {
    int level = 0;
    BasisMode mode = BasisMode::forest;
    // pairs[m] = (element coords, dual functional coords) at degree m
    std::vector<std::vector<std::pair<QVector, QVector>>> pairs;
};

CoEv coevaluation(int n, BasisMode mode);

// sum_i e_i (x) f_i equals the canonical element degree by degree
bool coev_is_canonical(const CoEv& p);

struct RMatrix {
    int level = 0;
    DoubleTensor elem; // terms (1_A |> e) (x) (f |> 1)
};

// R_n = 1 (x) P_n (x) 1; basis independent, so both modes agree
RMatrix r_matrix(int n, BasisMode mode = BasisMode::forest);

bool check_r_locality(int n, int m);

// ---- check sweeps ----

struct AssocWitness {
    DoubleElem::Key x, y, z;
};

struct AssocReport {
    LegsMode mode = LegsMode::a_order;
    bool pass = true;
    std::optional<AssocWitness> witness;
};

template <class Model>
AssocReport check_double_associativity(int size_sum_max, LegsMode mode);

struct LegsModeSelection {
    AssocReport a_order;
    AssocReport hg_order;
    std::optional<LegsMode> selected; // mode whose sweep passes
};

template <class Model>
LegsModeSelection select_legs_mode(int size_sum_max = 3);

struct EmbedReport {
    bool pass = true;
    std::string witness;
};

// unit * x = x = x * unit over basis elements of size <= size_max
template <class Model>
EmbedReport check_double_unit_laws(int size_max, LegsMode mode);

// (a |> 1)(b |> 1) = ab |> 1 and (1 |> h)(1 |> g) = 1 |> hg
template <class Model>
EmbedReport check_double_embeddings(int size_max, LegsMode mode);

struct IntertwineWitness {
    DoubleElem::Key x;
    DoubleTensor::Key at;
    Rat lhs, rhs;
};

struct IntertwineReport {
    int level = 0;
    int mmax = 0;
    bool pass = true;
    std::optional<IntertwineWitness> witness;
};

// For every basis x of size <= mmax compare the projections of
// R_n Delta(x) and Delta^cop(x) R_n keeping tensor legs of size
// <= n - mmax.
IntertwineReport check_intertwine(int n, int mmax, LegsMode mode = LegsMode::a_order);

struct QybeReport {
    int level = 0;
    bool pass = true;
    std::optional<std::pair<DoubleTriple::Key, Rat>> witness;
};

// R12 R13 R23 - R23 R13 R12 with every leg projected to size <= n/2.
QybeReport check_qybe(int n, LegsMode mode = LegsMode::a_order);

} // namespace rthopf
