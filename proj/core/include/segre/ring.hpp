#ifndef SEGRE_RING_HPP
#define SEGRE_RING_HPP

#include <vector>

#include "segre/ideal.hpp"
#include "segre/poly.hpp"

namespace segre {

/// Presentation of a graded ring: characteristic, weighted variables, and
/// homogeneous relations. The complete-intersection flag is asserted by
/// the caller and cross-checked against the Hilbert series in the tests.
class RingSpec {
public:
    RingSpec(CtxPtr ctx, std::vector<Poly> relations, bool complete_intersection);

    const CtxPtr& context() const { return ctx_; }
    const std::vector<Poly>& relations() const { return relations_; }
    bool is_complete_intersection() const { return ci_; }
    std::uint32_t characteristic() const { return ctx_->p; }
    const std::vector<long>& weights() const { return ctx_->weights; }
    std::size_t nvars() const { return ctx_->nvars(); }

    /// Krull dimension of a complete intersection: #vars - #relations.
    int dimension() const;

    /// Reduced Groebner basis of the relation ideal (empty for a
    /// polynomial ring).
    const std::vector<Poly>& relation_groebner() const;

    /// Standard monomials of the given weighted degree: monomials not
    /// divisible by any relation-basis head. They are a vector-space basis
    /// of the degree piece.
    std::vector<Exp> std_monomials(long degree) const;
    long long dim_at(long degree) const;

    /// Normal form modulo the relation ideal.
    Poly nf(const Poly& f) const;

    long a_invariant() const;  // sum(deg relations) - sum(weights); CI only

private:
    CtxPtr ctx_;
    std::vector<Poly> relations_;
    bool ci_;
    Ideal rel_ideal_;
    bool has_relations_;
};

/// Presentation of R tensor S over F_p: disjoint variables side by side,
/// relations promoted. Variable names must not clash.
RingSpec tensor_ring(const RingSpec& a, const RingSpec& b);

}  // namespace segre

#endif
