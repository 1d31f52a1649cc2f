#ifndef SEGRE_RATIONAL_HPP
#define SEGRE_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "segre/errors.hpp"

namespace segre {

/// Arbitrary-precision integer and rational scalars. cpp_rational keeps
/// gcd(num, den) = 1 and den > 0, which is exactly the invariant we need.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

/// Floor toward negative infinity.
inline Int rat_floor(const Rat& r) {
    Int n = rat_num(r), d = rat_den(r);
    Int q = n / d;
    if (n < 0 && q * d != n) --q;
    return q;
}

/// Fractional part (t-1)/t of a reduced fraction s/t; integers map to 0.
inline Rat coefficient_fractional_part(const Rat& r) {
    Int t = rat_den(r);
    return Rat(t - 1, t);
}

/// Parses "a" or "a/b" with optional sign; rejects zero denominators.
Rat parse_rational(const std::string& text);

std::string rational_to_string(const Rat& r);

/// Field object for generic linear algebra over Q.
struct RatField {
    using Elem = Rat;
    Elem zero() const { return Rat(0); }
    Elem one() const { return Rat(1); }
    Elem from_int(std::int64_t n) const { return Rat(n); }
    bool is_zero(const Elem& e) const { return e == 0; }
};

}  // namespace segre

#endif
