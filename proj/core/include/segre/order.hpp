#ifndef SEGRE_ORDER_HPP
#define SEGRE_ORDER_HPP

#include <vector>

#include "segre/monomial.hpp"

namespace segre {

/// Weighted-degree reverse-lexicographic order, with an optional leading
/// elimination block: monomials are compared first by total degree in the
/// first `elim_front` variables, then by weighted degree, then revlex
/// (last differing exponent decides, smaller-in-last wins).
struct MonomialOrder {
    std::vector<long> weights;
    int elim_front = 0;

    bool less(const Exp& a, const Exp& b) const {
        if (elim_front > 0) {
            long da = 0, db = 0;
            for (int i = 0; i < elim_front; ++i) {
                da += a[i];
                db += b[i];
            }
            if (da != db) return da < db;
        }
        long wa = weighted_degree(a, weights);
        long wb = weighted_degree(b, weights);
        if (wa != wb) return wa < wb;
        for (std::size_t i = a.size(); i-- > 0;) {
            if (a[i] != b[i]) return a[i] > b[i];
        }
        return false;
    }

    bool greater(const Exp& a, const Exp& b) const { return less(b, a); }
    bool equal(const Exp& a, const Exp& b) const { return a == b; }
};

}  // namespace segre

#endif
