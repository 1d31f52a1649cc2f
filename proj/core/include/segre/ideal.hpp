#ifndef SEGRE_IDEAL_HPP
#define SEGRE_IDEAL_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "segre/poly.hpp"

namespace segre {

/// Full normal form of f against a set of reducers: no term of the result
/// is divisible by any reducer head.
Poly normal_form(const Poly& f, const std::vector<Poly>& basis, const MonomialOrder& ord);

/// Reduced Groebner basis (monic heads, no head divides another, tails
/// reduced) via Buchberger with the product and chain criteria.
std::vector<Poly> buchberger(const std::vector<Poly>& gens, const MonomialOrder& ord);

/// Exact division f / h; throws when the division leaves a remainder.
Poly poly_divexact(const Poly& f, const Poly& h, const MonomialOrder& ord);

/// Homogeneous ideal presentation with a write-once Groebner cache shared
/// across copies. Readers may race to fill the cache; both compute the
/// same reduced basis.
class Ideal {
public:
    Ideal() = default;
    explicit Ideal(std::vector<Poly> gens);

    const std::vector<Poly>& generators() const { return gens_; }
    const CtxPtr& context() const { return ctx_; }
    bool empty() const { return gens_.empty(); }

    /// Reduced basis under the context's weighted-degrevlex order.
    const std::vector<Poly>& groebner() const;

private:
    CtxPtr ctx_;
    std::vector<Poly> gens_;

    struct Cache {
        std::once_flag flag;
        std::vector<Poly> basis;
    };
    std::shared_ptr<Cache> cache_;
};

bool ideal_member(const Poly& f, const Ideal& ideal);

/// Generators raised to the q-th power, q = p^e.
Ideal bracket_power(const Ideal& ideal, std::uint64_t q);

/// Ideal intersection via a tag variable and elimination.
Ideal ideal_intersect(const Ideal& a, const Ideal& b);

/// Colon ideal I : J, as the intersection of the single-generator colons
/// I : (h) = (I  ∩ (h)) / h.
Ideal ideal_colon(const Ideal& i, const Ideal& j);

}  // namespace segre

#endif
