#ifndef SEGRE_FP_HPP
#define SEGRE_FP_HPP

#include <cstdint>
#include <string>

#include "segre/errors.hpp"

namespace segre {

/// Trial division; intended for moduli below 2^16.
bool is_prime_u32(std::uint32_t n);

/// Element of the prime field F_p, stored fully reduced in [0, p).
///
/// The modulus travels with the value; operations on mismatched moduli
/// throw. Moduli are restricted to primes below 2^16 so that products fit
/// in 64-bit intermediates.
class Fp {
public:
    Fp(std::int64_t value, std::uint32_t p);

    std::uint32_t value() const { return v_; }
    std::uint32_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    Fp operator+(Fp o) const;
    Fp operator-(Fp o) const;
    Fp operator-() const;
    Fp operator*(Fp o) const;
    Fp operator/(Fp o) const { return *this * o.inverse(); }
    Fp inverse() const;
    Fp pow(std::uint64_t e) const;

    bool operator==(Fp o) const { return p_ == o.p_ && v_ == o.v_; }
    bool operator!=(Fp o) const { return !(*this == o); }

    std::string to_string() const { return std::to_string(v_); }

private:
    std::uint32_t v_;
    std::uint32_t p_;

    void check_same(Fp o) const;
};

/// Field object for generic linear algebra over F_p.
struct FpField {
    using Elem = Fp;
    std::uint32_t p;

    explicit FpField(std::uint32_t prime) : p(prime) {}
    Elem zero() const { return Fp(0, p); }
    Elem one() const { return Fp(1, p); }
    Elem from_int(std::int64_t n) const { return Fp(n, p); }
    bool is_zero(const Elem& e) const { return e.is_zero(); }
};

}  // namespace segre

#endif
