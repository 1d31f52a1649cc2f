#include "segre/monomial.hpp"

#include <algorithm>

#include "segre/errors.hpp"

namespace segre {

long weighted_degree(const Exp& e, const std::vector<long>& weights) {
    long d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * weights[i];
    return d;
}

bool monomial_divides(const Exp& divisor, const Exp& dividend) {
    for (std::size_t i = 0; i < divisor.size(); ++i)
        if (divisor[i] > dividend[i]) return false;
    return true;
}

Exp monomial_mul(const Exp& a, const Exp& b) {
    Exp r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Exp monomial_div(const Exp& a, const Exp& b) {
    Exp r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Exp monomial_lcm(const Exp& a, const Exp& b) {
    Exp r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

bool monomials_coprime(const Exp& a, const Exp& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

namespace {
void enumerate(const std::vector<long>& w, std::size_t i, long remaining, Exp& cur,
               std::vector<Exp>& out) {
    if (i + 1 == w.size()) {
        if (remaining % w[i] == 0) {
            cur[i] = static_cast<int>(remaining / w[i]);
            out.push_back(cur);
            cur[i] = 0;
        }
        return;
    }
    for (long e = remaining / w[i]; e >= 0; --e) {
        cur[i] = static_cast<int>(e);
        enumerate(w, i + 1, remaining - e * w[i], cur, out);
    }
    cur[i] = 0;
}
}  // namespace

std::vector<Exp> weighted_monomials(const std::vector<long>& weights, long degree) {
    for (long w : weights)
        if (w < 1) throw precondition_error("monomial weights must be positive");
    std::vector<Exp> out;
    if (degree < 0) return out;
    if (weights.empty()) {
        if (degree == 0) out.push_back({});
        return out;
    }
    Exp cur(weights.size(), 0);
    enumerate(weights, 0, degree, cur, out);
    return out;
}

}  // namespace segre
