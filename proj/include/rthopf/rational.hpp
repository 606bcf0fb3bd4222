#pragma once

/*
 * rational.hpp
 * ------------
 * Exact rational scalar over GMP, usable as an Eigen matrix scalar.
 *
 * Rat is always canonical: gcd(|num|, den) = 1 and den > 0, enforced at
 * every construction boundary.  Arithmetic on canonical operands stays
 * canonical, so the invariant holds globally.
 */

#include <gmpxx.h>

#include <Eigen/Core>
#include <iosfwd>
#include <string>
#include <string_view>

namespace rthopf {

class Rat {
public:
    Rat() : q_(0) {}
    Rat(int n) : q_(n) {}
    Rat(long n) : q_(static_cast<signed long>(n)) {}
    Rat(long num, long den);
    explicit Rat(const mpz_class& n) : q_(n) {}
    explicit Rat(mpz_class num, mpz_class den);

    // Accepts "p" or "p/q" with optional leading '-'.
    static Rat parse(std::string_view s);

    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }
    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    std::string str() const;

    Rat operator-() const;
    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

    friend bool operator==(const Rat& a, const Rat& b) { return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) < 0; }
    friend bool operator<=(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) <= 0; }
    friend bool operator>(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) > 0; }
    friend bool operator>=(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) >= 0; }

private:
    mpq_class q_;
};

inline Rat abs(const Rat& a) { return a.sign() < 0 ? -a : a; }

std::ostream& operator<<(std::ostream& os, const Rat& r);

using QMatrix = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using QVector = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

} // namespace rthopf

namespace Eigen {

template <>
struct NumTraits<rthopf::Rat> : GenericNumTraits<rthopf::Rat> {
    typedef rthopf::Rat Real;
    typedef rthopf::Rat NonInteger;
    typedef rthopf::Rat Nested;
    typedef rthopf::Rat Literal;

    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 60,
        MulCost = 60,
    };

    static inline Real epsilon() { return rthopf::Rat(0); }
    static inline Real dummy_precision() { return rthopf::Rat(0); }
    static inline int digits10() { return 0; }
};

} // namespace Eigen
