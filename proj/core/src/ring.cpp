#include "segre/ring.hpp"

#include <algorithm>

#include "segre/errors.hpp"

namespace segre {

RingSpec::RingSpec(CtxPtr ctx, std::vector<Poly> relations, bool complete_intersection)
    : ctx_(std::move(ctx)), relations_(std::move(relations)), ci_(complete_intersection) {
    for (const auto& f : relations_) {
        if (f.is_zero()) throw precondition_error("zero relation in ring presentation");
        if (!f.is_homogeneous())
            throw precondition_error("relation '" + f.to_string() +
                                     "' is not homogeneous for the given weights");
    }
    has_relations_ = !relations_.empty();
    if (has_relations_) rel_ideal_ = Ideal(relations_);
    if (ci_ && relations_.size() > ctx_->nvars())
        throw precondition_error("more relations than variables cannot form a regular sequence");
}

int RingSpec::dimension() const {
    if (!ci_)
        throw precondition_error("dimension is only computed for complete intersections");
    return static_cast<int>(ctx_->nvars() - relations_.size());
}

const std::vector<Poly>& RingSpec::relation_groebner() const {
    static const std::vector<Poly> kEmpty;
    if (!has_relations_) return kEmpty;
    return rel_ideal_.groebner();
}

std::vector<Exp> RingSpec::std_monomials(long degree) const {
    std::vector<Exp> all = weighted_monomials(ctx_->weights, degree);
    if (!has_relations_) return all;
    const auto& basis = relation_groebner();
    MonomialOrder ord = ctx_->order();
    std::vector<Exp> heads;
    heads.reserve(basis.size());
    for (const auto& g : basis) heads.push_back(g.head(ord).first);

    std::vector<Exp> out;
    out.reserve(all.size());
    for (auto& m : all) {
        bool reducible = false;
        for (const auto& h : heads) {
            if (monomial_divides(h, m)) {
                reducible = true;
                break;
            }
        }
        if (!reducible) out.push_back(std::move(m));
    }
    return out;
}

long long RingSpec::dim_at(long degree) const {
    if (degree < 0) return 0;
    return static_cast<long long>(std_monomials(degree).size());
}

Poly RingSpec::nf(const Poly& f) const {
    if (!has_relations_) return f;
    return normal_form(f, relation_groebner(), ctx_->order());
}

long RingSpec::a_invariant() const {
    if (!ci_)
        throw precondition_error("a-invariant closed form requires the complete-intersection flag");
    long a = 0;
    for (const auto& f : relations_) a += *f.weighted_degree();
    for (long w : ctx_->weights) a -= w;
    return a;
}

RingSpec tensor_ring(const RingSpec& a, const RingSpec& b) {
    if (a.characteristic() != b.characteristic())
        throw precondition_error("tensor factors must share a characteristic");
    std::vector<std::string> names = a.context()->names;
    for (const auto& n : b.context()->names) {
        if (a.context()->index_of(n) >= 0)
            throw precondition_error("tensor factors share the variable name '" + n + "'");
        names.push_back(n);
    }
    std::vector<long> weights = a.context()->weights;
    weights.insert(weights.end(), b.context()->weights.begin(), b.context()->weights.end());
    CtxPtr ctx = PolyContext::make(a.characteristic(), std::move(names), std::move(weights));

    std::size_t na = a.nvars(), nb = b.nvars();
    std::vector<Poly> relations;
    for (const auto& f : a.relations()) {
        Poly g(ctx);
        for (const auto& [e, c] : f.terms()) {
            Exp e2(na + nb, 0);
            std::copy(e.begin(), e.end(), e2.begin());
            g.add_term(e2, Fp(c, ctx->p));
        }
        relations.push_back(std::move(g));
    }
    for (const auto& f : b.relations()) {
        Poly g(ctx);
        for (const auto& [e, c] : f.terms()) {
            Exp e2(na + nb, 0);
            std::copy(e.begin(), e.end(), e2.begin() + na);
            g.add_term(e2, Fp(c, ctx->p));
        }
        relations.push_back(std::move(g));
    }
    return RingSpec(ctx, std::move(relations),
                    a.is_complete_intersection() && b.is_complete_intersection());
}

}  // namespace segre
