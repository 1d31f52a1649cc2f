#ifndef SEGRE_POLY_HPP
#define SEGRE_POLY_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "segre/fp.hpp"
#include "segre/monomial.hpp"
#include "segre/order.hpp"

namespace segre {

/// Ambient polynomial ring data: characteristic, named variables, weights.
struct PolyContext {
    std::uint32_t p;
    std::vector<std::string> names;
    std::vector<long> weights;

    static std::shared_ptr<const PolyContext> make(std::uint32_t p, std::vector<std::string> names,
                                                   std::vector<long> weights);

    std::size_t nvars() const { return names.size(); }
    int index_of(const std::string& name) const;  // -1 when absent
    MonomialOrder order() const { return MonomialOrder{weights, 0}; }
};

using CtxPtr = std::shared_ptr<const PolyContext>;

/// Exact multivariate polynomial over F_p with a weighted grading.
/// Zero coefficients are never stored.
class Poly {
public:
    explicit Poly(CtxPtr ctx) : ctx_(std::move(ctx)) {}

    static Poly zero(CtxPtr ctx) { return Poly(std::move(ctx)); }
    static Poly constant(CtxPtr ctx, std::int64_t c);
    static Poly variable(CtxPtr ctx, std::size_t i);
    static Poly monomial(CtxPtr ctx, Exp e, std::int64_t c);

    const CtxPtr& context() const { return ctx_; }
    const std::map<Exp, std::uint32_t>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t nterms() const { return terms_.size(); }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly scaled(Fp c) const;
    Poly times_monomial(const Exp& m, Fp c) const;
    Poly pow(unsigned e) const;

    bool operator==(const Poly& o) const { return terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// Weighted degree of the highest term; nullopt for the zero polynomial.
    std::optional<long> weighted_degree() const;
    bool is_homogeneous() const;

    /// Head term under the given order.
    std::pair<Exp, Fp> head(const MonomialOrder& ord) const;

    void add_term(const Exp& e, Fp c);
    Fp coeff(const Exp& e) const;

    /// f^(p^e), via the characteristic-p term map: exponents scale by p^e,
    /// coefficients are fixed by Fermat.
    Poly frobenius_power(unsigned e) const;
    /// f^q for q an explicit power of p.
    Poly power_q(std::uint64_t q) const;

    std::string to_string() const;
    static Poly parse(const CtxPtr& ctx, const std::string& text);

private:
    CtxPtr ctx_;
    std::map<Exp, std::uint32_t> terms_;

    void check_ctx(const Poly& o) const;
};

}  // namespace segre

#endif
