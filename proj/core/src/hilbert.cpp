#include "segre/hilbert.hpp"

#include <algorithm>

#include "segre/errors.hpp"

namespace segre {

HilbertSeries hilbert_series(const RingSpec& ring) {
    if (!ring.is_complete_intersection())
        throw precondition_error(
            "hilbert_series requires the complete-intersection flag; "
            "use ring_dims for general presentations");
    HilbertSeries hs;
    hs.numerator = {1};
    for (const auto& f : ring.relations()) {
        long d = *f.weighted_degree();
        // multiply numerator by (1 - t^d)
        std::vector<long long> next(hs.numerator.size() + static_cast<std::size_t>(d), 0);
        for (std::size_t i = 0; i < hs.numerator.size(); ++i) {
            next[i] += hs.numerator[i];
            next[i + static_cast<std::size_t>(d)] -= hs.numerator[i];
        }
        hs.numerator = std::move(next);
    }
    hs.denominator = ring.weights();
    std::sort(hs.denominator.begin(), hs.denominator.end());
    return hs;
}

std::vector<long long> series_coefficients(const HilbertSeries& hs, long n_max) {
    if (n_max < 0) throw precondition_error("series window bound must be >= 0");
    std::vector<long long> c(static_cast<std::size_t>(n_max) + 1, 0);
    for (std::size_t i = 0; i < hs.numerator.size() && i <= static_cast<std::size_t>(n_max); ++i)
        c[i] = hs.numerator[i];
    for (long d : hs.denominator) {
        // divide by (1 - t^d): running sums with stride d
        for (long i = d; i <= n_max; ++i) c[i] += c[i - d];
    }
    for (long long v : c)
        if (v < 0)
            throw precondition_error("series expansion produced a negative coefficient; "
                                     "the input is not a ring series");
    return c;
}

std::vector<long long> hadamard(const HilbertSeries& a, const HilbertSeries& b, long n_max) {
    auto ca = series_coefficients(a, n_max);
    auto cb = series_coefficients(b, n_max);
    std::vector<long long> out(ca.size());
    for (std::size_t i = 0; i < ca.size(); ++i) out[i] = ca[i] * cb[i];
    return out;
}

std::vector<long long> veronese(const HilbertSeries& hs, long r, long m_max) {
    if (r < 1) throw precondition_error("veronese index must be >= 1");
    auto c = series_coefficients(hs, r * m_max);
    std::vector<long long> out(static_cast<std::size_t>(m_max) + 1);
    for (long m = 0; m <= m_max; ++m) out[m] = c[r * m];
    return out;
}

long a_invariant_ci(const RingSpec& ring) { return ring.a_invariant(); }

std::vector<long long> ring_dims(const RingSpec& ring, long n_max) {
    std::vector<long long> out(static_cast<std::size_t>(n_max) + 1);
    for (long n = 0; n <= n_max; ++n) out[n] = ring.dim_at(n);
    return out;
}

HilbertSeries hs_product(const HilbertSeries& a, const HilbertSeries& b) {
    HilbertSeries hs;
    hs.numerator.assign(a.numerator.size() + b.numerator.size() - 1, 0);
    for (std::size_t i = 0; i < a.numerator.size(); ++i)
        for (std::size_t j = 0; j < b.numerator.size(); ++j)
            hs.numerator[i + j] += a.numerator[i] * b.numerator[j];
    hs.denominator = a.denominator;
    hs.denominator.insert(hs.denominator.end(), b.denominator.begin(), b.denominator.end());
    std::sort(hs.denominator.begin(), hs.denominator.end());
    return hs;
}

QSeries frobenius_pushforward_series(const RingSpec& ring, long q, long numerator_max) {
    std::uint32_t p = ring.characteristic();
    long t = q;
    while (t > 1) {
        if (t % p != 0)
            throw precondition_error("pushforward index " + std::to_string(q) +
                                     " is not a power of the characteristic");
        t /= p;
    }
    if (t != 1) throw precondition_error("pushforward index must be a positive power of p");
    QSeries out;
    out.q = q;
    out.dims = ring.is_complete_intersection()
                   ? series_coefficients(hilbert_series(ring), numerator_max)
                   : ring_dims(ring, numerator_max);
    return out;
}

}  // namespace segre
