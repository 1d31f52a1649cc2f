#ifndef SEGRE_HILBERT_HPP
#define SEGRE_HILBERT_HPP

#include <vector>

#include "segre/ring.hpp"

namespace segre {

/// Hilbert series in closed rational form: an integer numerator polynomial
/// over a product of factors (1 - t^d). Expansion happens lazily on
/// explicit windows.
struct HilbertSeries {
    std::vector<long long> numerator;  // coefficient of t^i
    std::vector<long> denominator;     // each entry d stands for (1 - t^d)
};

/// Closed form for a graded complete intersection:
/// prod_j (1 - t^{deg f_j}) / prod_i (1 - t^{w_i}).
HilbertSeries hilbert_series(const RingSpec& ring);

/// Power-series coefficients on [0, N]. Throws when a negative coefficient
/// appears; every series passed here is a ring series.
std::vector<long long> series_coefficients(const HilbertSeries& hs, long n_max);

/// Degreewise coefficient products: the Hilbert function of a Segre product.
std::vector<long long> hadamard(const HilbertSeries& a, const HilbertSeries& b, long n_max);

/// Degrees divisible by r, reindexed: entry m is coeff_{rm}.
std::vector<long long> veronese(const HilbertSeries& hs, long r, long m_max);

long a_invariant_ci(const RingSpec& ring);

/// Hilbert function on [0, N] via Groebner normal-form monomial counting;
/// works for any presentation and is the oracle for the closed form.
std::vector<long long> ring_dims(const RingSpec& ring, long n_max);

/// Series of a tensor product: numerators multiply, denominators union.
HilbertSeries hs_product(const HilbertSeries& a, const HilbertSeries& b);

/// (1/q)-graded Hilbert function of the Frobenius pushforward R^{1/q}:
/// dims[n] is dim (R^{1/q})_{n/q} = dim R_n, for n in [0, numerator_max].
struct QSeries {
    long q;
    std::vector<long long> dims;
};
QSeries frobenius_pushforward_series(const RingSpec& ring, long q, long numerator_max);

}  // namespace segre

#endif
