#ifndef SEGRE_MONOMIAL_HPP
#define SEGRE_MONOMIAL_HPP

#include <cstdint>
#include <vector>

namespace segre {

/// Exponent vector of a monomial; length equals the number of variables.
using Exp = std::vector<int>;

long weighted_degree(const Exp& e, const std::vector<long>& weights);

bool monomial_divides(const Exp& divisor, const Exp& dividend);
Exp monomial_mul(const Exp& a, const Exp& b);
/// Componentwise a - b; caller guarantees divisibility.
Exp monomial_div(const Exp& a, const Exp& b);
Exp monomial_lcm(const Exp& a, const Exp& b);
bool monomials_coprime(const Exp& a, const Exp& b);

/// All exponent vectors e with sum(e_i * w_i) = degree, in descending
/// lexicographic order. Weights must be >= 1.
std::vector<Exp> weighted_monomials(const std::vector<long>& weights, long degree);

}  // namespace segre

#endif
