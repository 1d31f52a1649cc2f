#include "segre/semigroup.hpp"

#include <algorithm>
#include <numeric>

#include "segre/errors.hpp"

namespace segre {

NumericalSemigroup::NumericalSemigroup(const std::vector<long>& generators) {
    if (generators.empty()) throw precondition_error("semigroup needs at least one generator");
    for (long w : generators)
        if (w < 1) throw precondition_error("semigroup generators must be positive");

    g_ = 0;
    for (long w : generators) g_ = std::gcd(g_, w);
    std::vector<long> norm;
    norm.reserve(generators.size());
    for (long w : generators) norm.push_back(w / g_);
    long wmin = *std::min_element(norm.begin(), norm.end());

    // Grow the attainability table until a run of wmin consecutive
    // attainable values appears; everything beyond such a run is
    // attainable by adding multiples of wmin.
    long bound = 64;
    while (true) {
        attain_.assign(static_cast<std::size_t>(bound) + 1, false);
        attain_[0] = true;
        for (long w : norm)
            for (long v = w; v <= bound; ++v)
                if (attain_[v - w]) attain_[v] = true;

        long run = 0;
        conductor_ = -1;
        for (long v = 0; v <= bound; ++v) {
            run = attain_[v] ? run + 1 : 0;
            if (run == wmin) {
                conductor_ = v - wmin + 1;
                break;
            }
        }
        if (conductor_ >= 0) {
            // tighten: the conductor is the least c with c-1 unattainable
            while (conductor_ > 0 && attain_[conductor_ - 1]) --conductor_;
            break;
        }
        bound *= 2;
    }
}

bool NumericalSemigroup::contains(long n) const {
    if (n < 0) return false;
    if (n % g_ != 0) return false;
    long v = n / g_;
    if (v >= conductor_) return true;
    return attain_[v];
}

}  // namespace segre
