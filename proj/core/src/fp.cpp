#include "segre/fp.hpp"

#include <atomic>

namespace segre {

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint32_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

namespace {
// Element construction sits in inner loops; remember the last modulus that
// passed the primality check so repeated constructions stay O(1).
std::atomic<std::uint32_t> g_last_good_modulus{0};

void validate_modulus(std::uint32_t p) {
    if (p == g_last_good_modulus.load(std::memory_order_relaxed)) return;
    if (p >= (1u << 16))
        throw precondition_error("prime field modulus must be below 2^16, got " + std::to_string(p));
    if (!is_prime_u32(p))
        throw precondition_error("modulus " + std::to_string(p) + " is not prime");
    g_last_good_modulus.store(p, std::memory_order_relaxed);
}
}  // namespace

Fp::Fp(std::int64_t value, std::uint32_t p) : p_(p) {
    validate_modulus(p);
    std::int64_t r = value % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    v_ = static_cast<std::uint32_t>(r);
}

void Fp::check_same(Fp o) const {
    if (p_ != o.p_)
        throw precondition_error("prime field modulus mismatch: " + std::to_string(p_) + " vs " +
                                 std::to_string(o.p_));
}

Fp Fp::operator+(Fp o) const {
    check_same(o);
    std::uint32_t s = v_ + o.v_;
    if (s >= p_) s -= p_;
    Fp r = *this;
    r.v_ = s;
    return r;
}

Fp Fp::operator-(Fp o) const {
    check_same(o);
    std::uint32_t s = v_ + p_ - o.v_;
    if (s >= p_) s -= p_;
    Fp r = *this;
    r.v_ = s;
    return r;
}

Fp Fp::operator-() const {
    Fp r = *this;
    r.v_ = v_ == 0 ? 0 : p_ - v_;
    return r;
}

Fp Fp::operator*(Fp o) const {
    check_same(o);
    Fp r = *this;
    r.v_ = static_cast<std::uint32_t>((static_cast<std::uint64_t>(v_) * o.v_) % p_);
    return r;
}

Fp Fp::inverse() const {
    if (v_ == 0) throw precondition_error("zero is not invertible in F_" + std::to_string(p_));
    // extended Euclid on (v, p)
    std::int64_t a = v_, b = p_, x0 = 1, x1 = 0;
    while (b != 0) {
        std::int64_t q = a / b;
        std::int64_t t = a - q * b;
        a = b;
        b = t;
        t = x0 - q * x1;
        x0 = x1;
        x1 = t;
    }
    return Fp(x0, p_);
}

Fp Fp::pow(std::uint64_t e) const {
    Fp base = *this;
    Fp acc(1, p_);
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

}  // namespace segre
