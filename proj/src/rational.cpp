#include "rthopf/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace rthopf {

Rat::Rat(long num, long den) {
    if (den == 0) throw std::invalid_argument("Rat: zero denominator");
    q_ = mpq_class(mpz_class(num), mpz_class(den));
    q_.canonicalize();
}

Rat::Rat(mpz_class num, mpz_class den) {
    if (den == 0) throw std::invalid_argument("Rat: zero denominator");
    q_ = mpq_class(std::move(num), std::move(den));
    q_.canonicalize();
}

Rat Rat::parse(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("Rat::parse: empty string");
    mpq_class q;
    if (q.set_str(std::string(s), 10) != 0)
        throw std::invalid_argument("Rat::parse: bad rational literal '" + std::string(s) + "'");
    if (q.get_den() == 0) throw std::invalid_argument("Rat::parse: zero denominator");
    q.canonicalize();
    Rat r;
    r.q_ = q;
    return r;
}

std::string Rat::str() const {
    return q_.get_str();
}

Rat Rat::operator-() const {
    Rat r;
    r.q_ = -q_;
    return r;
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw std::invalid_argument("Rat: division by zero");
    q_ /= o.q_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.str();
}

} // namespace rthopf
