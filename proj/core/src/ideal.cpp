#include "segre/ideal.hpp"

#include <algorithm>
#include <list>

#include "segre/errors.hpp"

namespace segre {

Poly normal_form(const Poly& f, const std::vector<Poly>& basis, const MonomialOrder& ord) {
    struct Head {
        Exp e;
        Fp c;
        const Poly* g;
    };
    std::vector<Head> heads;
    heads.reserve(basis.size());
    for (const auto& g : basis) {
        if (g.is_zero()) continue;
        auto [e, c] = g.head(ord);
        heads.push_back({e, c, &g});
    }

    Poly rem = Poly::zero(f.context());
    Poly work = f;
    while (!work.is_zero()) {
        auto [he, hc] = work.head(ord);
        bool reduced = false;
        for (const auto& h : heads) {
            if (!monomial_divides(h.e, he)) continue;
            Fp factor = hc / h.c;
            work = work - h.g->times_monomial(monomial_div(he, h.e), factor);
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.add_term(he, hc);
            // strip the head and keep reducing the tail
            Poly next(work.context());
            for (const auto& [e, c] : work.terms()) {
                if (e == he) continue;
                next.add_term(e, Fp(c, work.context()->p));
            }
            work = std::move(next);
        }
    }
    return rem;
}

namespace {

Poly s_polynomial(const Poly& f, const Poly& g, const MonomialOrder& ord) {
    auto [hf, cf] = f.head(ord);
    auto [hg, cg] = g.head(ord);
    Exp l = monomial_lcm(hf, hg);
    Poly a = f.times_monomial(monomial_div(l, hf), cf.inverse());
    Poly b = g.times_monomial(monomial_div(l, hg), cg.inverse());
    return a - b;
}

std::vector<Poly> interreduce(std::vector<Poly> basis, const MonomialOrder& ord) {
    // drop elements whose head is divisible by another head
    std::vector<Poly> kept;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (basis[i].is_zero()) continue;
        auto [hi, ci] = basis[i].head(ord);
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j || basis[j].is_zero()) continue;
            auto [hj, cj] = basis[j].head(ord);
            if (hi == hj && j < i) {
                redundant = true;
                break;
            }
            if (hi != hj && monomial_divides(hj, hi)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) kept.push_back(basis[i]);
    }
    // tail-reduce each against the others and normalize heads to 1
    std::vector<Poly> out;
    for (std::size_t i = 0; i < kept.size(); ++i) {
        std::vector<Poly> others;
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(kept[j]);
        Poly r = normal_form(kept[i], others, ord);
        if (r.is_zero()) continue;
        auto [h, c] = r.head(ord);
        out.push_back(r.scaled(c.inverse()));
    }
    std::sort(out.begin(), out.end(), [&](const Poly& a, const Poly& b) {
        return ord.less(a.head(ord).first, b.head(ord).first);
    });
    return out;
}

}  // namespace

std::vector<Poly> buchberger(const std::vector<Poly>& gens, const MonomialOrder& ord) {
    std::vector<Poly> basis;
    for (const auto& g : gens)
        if (!g.is_zero()) basis.push_back(g);
    if (basis.empty()) return basis;

    struct Pair {
        std::size_t i, j;
        Exp lcm;
        long deg;
    };
    auto make_pair = [&](std::size_t i, std::size_t j) {
        Exp l = monomial_lcm(basis[i].head(ord).first, basis[j].head(ord).first);
        long d = weighted_degree(l, ord.weights);
        return Pair{i, j, std::move(l), d};
    };

    std::list<Pair> pairs;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) pairs.push_back(make_pair(i, j));

    auto processed = [&](std::size_t i, std::size_t j, const std::list<Pair>& pending) {
        for (const auto& p : pending)
            if ((p.i == i && p.j == j) || (p.i == j && p.j == i)) return false;
        return true;
    };

    while (!pairs.empty()) {
        // normal strategy: lowest lcm degree first
        auto best = pairs.begin();
        for (auto it = pairs.begin(); it != pairs.end(); ++it)
            if (it->deg < best->deg) best = it;
        Pair p = *best;
        pairs.erase(best);

        Exp hi = basis[p.i].head(ord).first;
        Exp hj = basis[p.j].head(ord).first;
        if (monomials_coprime(hi, hj)) continue;  // product criterion
        bool chained = false;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (k == p.i || k == p.j) continue;
            if (!monomial_divides(basis[k].head(ord).first, p.lcm)) continue;
            if (processed(p.i, k, pairs) && processed(p.j, k, pairs)) {
                chained = true;  // chain criterion
                break;
            }
        }
        if (chained) continue;

        Poly r = normal_form(s_polynomial(basis[p.i], basis[p.j], ord), basis, ord);
        if (r.is_zero()) continue;
        basis.push_back(r);
        std::size_t n = basis.size() - 1;
        for (std::size_t i = 0; i < n; ++i) pairs.push_back(make_pair(i, n));
    }

    return interreduce(std::move(basis), ord);
}

Poly poly_divexact(const Poly& f, const Poly& h, const MonomialOrder& ord) {
    if (h.is_zero()) throw precondition_error("division by the zero polynomial");
    Poly quotient = Poly::zero(f.context());
    Poly work = f;
    auto [hh, hc] = h.head(ord);
    while (!work.is_zero()) {
        auto [we, wc] = work.head(ord);
        if (!monomial_divides(hh, we))
            throw precondition_error("inexact polynomial division");
        Exp m = monomial_div(we, hh);
        Fp factor = wc / hc;
        quotient.add_term(m, factor);
        work = work - h.times_monomial(m, factor);
    }
    return quotient;
}

Ideal::Ideal(std::vector<Poly> gens) : gens_(std::move(gens)), cache_(std::make_shared<Cache>()) {
    if (gens_.empty()) throw precondition_error("ideal needs at least one generator");
    ctx_ = gens_.front().context();
    for (const auto& g : gens_)
        if (g.context()->names != ctx_->names || g.context()->p != ctx_->p)
            throw precondition_error("ideal generators must share one context");
}

const std::vector<Poly>& Ideal::groebner() const {
    std::call_once(cache_->flag,
                   [this] { cache_->basis = buchberger(gens_, ctx_->order()); });
    return cache_->basis;
}

bool ideal_member(const Poly& f, const Ideal& ideal) {
    return normal_form(f, ideal.groebner(), ideal.context()->order()).is_zero();
}

Ideal bracket_power(const Ideal& ideal, std::uint64_t q) {
    std::uint32_t p = ideal.context()->p;
    std::uint64_t t = q;
    while (t > 1) {
        if (t % p != 0)
            throw precondition_error("bracket power exponent " + std::to_string(q) +
                                     " is not a power of the characteristic " + std::to_string(p));
        t /= p;
    }
    if (t != 1)
        throw precondition_error("bracket power exponent must be positive");
    std::vector<Poly> gens;
    gens.reserve(ideal.generators().size());
    for (const auto& g : ideal.generators()) gens.push_back(g.power_q(q));
    return Ideal(std::move(gens));
}

namespace {

// context with a fresh tag variable in front, used for elimination
struct TagRing {
    CtxPtr ext;
    CtxPtr base;

    explicit TagRing(const CtxPtr& ctx) : base(ctx) {
        std::vector<std::string> names;
        names.reserve(ctx->nvars() + 1);
        names.push_back("@tag");
        for (const auto& n : ctx->names) names.push_back(n);
        std::vector<long> weights;
        weights.reserve(ctx->nvars() + 1);
        weights.push_back(1);
        for (long w : ctx->weights) weights.push_back(w);
        ext = PolyContext::make(ctx->p, std::move(names), std::move(weights));
    }

    Poly promote(const Poly& f) const {
        Poly g(ext);
        for (const auto& [e, c] : f.terms()) {
            Exp e2(e.size() + 1, 0);
            std::copy(e.begin(), e.end(), e2.begin() + 1);
            g.add_term(e2, Fp(c, ext->p));
        }
        return g;
    }

    Poly restrict_to_base(const Poly& f) const {
        Poly g(base);
        for (const auto& [e, c] : f.terms()) {
            Exp e2(e.begin() + 1, e.end());
            g.add_term(e2, Fp(c, base->p));
        }
        return g;
    }

    MonomialOrder elim_order() const { return MonomialOrder{ext->weights, 1}; }
};

}  // namespace

Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
    TagRing ring(a.context());
    Poly tag = Poly::variable(ring.ext, 0);
    Poly one_minus_tag = Poly::constant(ring.ext, 1) - tag;

    std::vector<Poly> gens;
    for (const auto& g : a.generators()) gens.push_back(tag * ring.promote(g));
    for (const auto& g : b.generators()) gens.push_back(one_minus_tag * ring.promote(g));

    auto basis = buchberger(gens, ring.elim_order());
    std::vector<Poly> intersection;
    for (const auto& g : basis) {
        bool tag_free = true;
        for (const auto& [e, c] : g.terms())
            if (e[0] != 0) tag_free = false;
        if (tag_free) intersection.push_back(ring.restrict_to_base(g));
    }
    if (intersection.empty()) intersection.push_back(Poly::zero(a.context()));
    return Ideal(std::move(intersection));
}

namespace {

Ideal colon_single(const Ideal& i, const Poly& h) {
    if (h.is_zero()) throw precondition_error("colon by the zero polynomial");
    Ideal capped = ideal_intersect(i, Ideal({h}));
    MonomialOrder ord = i.context()->order();
    std::vector<Poly> gens;
    for (const auto& g : capped.generators()) {
        if (g.is_zero()) continue;
        gens.push_back(poly_divexact(g, h, ord));
    }
    if (gens.empty()) gens.push_back(Poly::zero(i.context()));
    return Ideal(std::move(gens));
}

}  // namespace

Ideal ideal_colon(const Ideal& i, const Ideal& j) {
    std::optional<Ideal> acc;
    for (const auto& h : j.generators()) {
        if (h.is_zero()) continue;
        Ideal single = colon_single(i, h);
        acc = acc ? ideal_intersect(*acc, single) : single;
    }
    if (!acc) throw precondition_error("colon by the zero ideal");
    return *acc;
}

}  // namespace segre
