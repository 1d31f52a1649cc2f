#include "segre/poly.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "segre/errors.hpp"

namespace segre {

std::shared_ptr<const PolyContext> PolyContext::make(std::uint32_t p,
                                                     std::vector<std::string> names,
                                                     std::vector<long> weights) {
    if (!is_prime_u32(p) || p >= (1u << 16))
        throw precondition_error("characteristic must be a prime below 2^16, got " +
                                 std::to_string(p));
    if (names.size() != weights.size())
        throw precondition_error("variable and weight counts differ");
    std::set<std::string> seen;
    for (const auto& n : names) {
        if (n.empty()) throw precondition_error("empty variable name");
        if (!seen.insert(n).second) throw precondition_error("duplicate variable name '" + n + "'");
    }
    for (long w : weights)
        if (w < 1) throw precondition_error("variable weights must be >= 1");
    auto ctx = std::make_shared<PolyContext>();
    ctx->p = p;
    ctx->names = std::move(names);
    ctx->weights = std::move(weights);
    return ctx;
}

int PolyContext::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return static_cast<int>(i);
    return -1;
}

Poly Poly::constant(CtxPtr ctx, std::int64_t c) {
    Poly f(ctx);
    f.add_term(Exp(ctx->nvars(), 0), Fp(c, ctx->p));
    return f;
}

Poly Poly::variable(CtxPtr ctx, std::size_t i) {
    Exp e(ctx->nvars(), 0);
    e[i] = 1;
    Poly f(ctx);
    f.add_term(e, Fp(1, ctx->p));
    return f;
}

Poly Poly::monomial(CtxPtr ctx, Exp e, std::int64_t c) {
    if (e.size() != ctx->nvars()) throw precondition_error("exponent vector length mismatch");
    Poly f(ctx);
    f.add_term(e, Fp(c, ctx->p));
    return f;
}

void Poly::check_ctx(const Poly& o) const {
    if (ctx_ != o.ctx_ &&
        (ctx_->p != o.ctx_->p || ctx_->names != o.ctx_->names || ctx_->weights != o.ctx_->weights))
        throw precondition_error("polynomial context mismatch");
}

void Poly::add_term(const Exp& e, Fp c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c.value());
        return;
    }
    Fp s = Fp(it->second, ctx_->p) + c;
    if (s.is_zero())
        terms_.erase(it);
    else
        it->second = s.value();
}

Fp Poly::coeff(const Exp& e) const {
    auto it = terms_.find(e);
    return Fp(it == terms_.end() ? 0 : it->second, ctx_->p);
}

Poly Poly::operator+(const Poly& o) const {
    check_ctx(o);
    Poly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, Fp(c, ctx_->p));
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    check_ctx(o);
    Poly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -Fp(c, ctx_->p));
    return r;
}

Poly Poly::operator-() const {
    Poly r(ctx_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, (-Fp(c, ctx_->p)).value());
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    check_ctx(o);
    Poly r(ctx_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_)
            r.add_term(monomial_mul(e1, e2), Fp(c1, ctx_->p) * Fp(c2, ctx_->p));
    return r;
}

Poly Poly::scaled(Fp c) const {
    Poly r(ctx_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, (Fp(v, ctx_->p) * c).value());
    return r;
}

Poly Poly::times_monomial(const Exp& m, Fp c) const {
    Poly r(ctx_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms_)
        r.terms_.emplace(monomial_mul(e, m), (Fp(v, ctx_->p) * c).value());
    return r;
}

Poly Poly::pow(unsigned e) const {
    Poly acc = Poly::constant(ctx_, 1);
    Poly base = *this;
    while (e) {
        if (e & 1u) acc = acc * base;
        base = base * base;
        e >>= 1u;
    }
    return acc;
}

std::optional<long> Poly::weighted_degree() const {
    if (terms_.empty()) return std::nullopt;
    long best = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        long d = segre::weighted_degree(e, ctx_->weights);
        if (first || d > best) best = d;
        first = false;
    }
    return best;
}

bool Poly::is_homogeneous() const {
    if (terms_.empty()) return true;
    long d = segre::weighted_degree(terms_.begin()->first, ctx_->weights);
    for (const auto& [e, c] : terms_)
        if (segre::weighted_degree(e, ctx_->weights) != d) return false;
    return true;
}

std::pair<Exp, Fp> Poly::head(const MonomialOrder& ord) const {
    if (terms_.empty()) throw precondition_error("zero polynomial has no head term");
    const Exp* best = &terms_.begin()->first;
    for (const auto& [e, c] : terms_)
        if (ord.less(*best, e)) best = &e;
    return {*best, Fp(terms_.at(*best), ctx_->p)};
}

Poly Poly::power_q(std::uint64_t q) const {
    Poly r(ctx_);
    for (const auto& [e, c] : terms_) {
        Exp eq(e.size());
        for (std::size_t i = 0; i < e.size(); ++i)
            eq[i] = static_cast<int>(e[i] * static_cast<long long>(q));
        r.terms_.emplace(std::move(eq), c);
    }
    return r;
}

Poly Poly::frobenius_power(unsigned e) const {
    std::uint64_t q = 1;
    for (unsigned i = 0; i < e; ++i) q *= ctx_->p;
    return power_q(q);
}

// ---------------------------------------------------------------------------
// text form: terms joined by +/-, '*' for products, '^' for powers

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    MonomialOrder ord = ctx_->order();
    std::vector<const Exp*> keys;
    keys.reserve(terms_.size());
    for (const auto& [e, c] : terms_) keys.push_back(&e);
    std::sort(keys.begin(), keys.end(),
              [&](const Exp* a, const Exp* b) { return ord.greater(*a, *b); });

    std::string out;
    bool first = true;
    for (const Exp* e : keys) {
        std::uint32_t c = terms_.at(*e);
        if (!first) out += " + ";
        first = false;
        bool is_const = true;
        for (int x : *e)
            if (x != 0) is_const = false;
        std::string mono;
        for (std::size_t i = 0; i < e->size(); ++i) {
            if ((*e)[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += ctx_->names[i];
            if ((*e)[i] > 1) mono += "^" + std::to_string((*e)[i]);
        }
        if (is_const) {
            out += std::to_string(c);
        } else if (c == 1) {
            out += mono;
        } else {
            out += std::to_string(c) + "*" + mono;
        }
    }
    return out;
}

namespace {

struct Lexer {
    const std::string& s;
    std::size_t i = 0;

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip();
        return i >= s.size();
    }
    char peek() {
        skip();
        return i < s.size() ? s[i] : '\0';
    }
    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
};

class Parser {
public:
    Parser(const CtxPtr& ctx, const std::string& text) : ctx_(ctx), lex_{text} {}

    Poly run() {
        Poly f = expression();
        if (!lex_.eof()) fail("unexpected trailing input");
        return f;
    }

private:
    CtxPtr ctx_;
    Lexer lex_;

    [[noreturn]] void fail(const std::string& msg) {
        throw parse_error("polynomial parse error at offset " + std::to_string(lex_.i) + ": " +
                          msg + " in '" + lex_.s + "'");
    }

    Poly expression() {
        bool neg = false;
        if (lex_.eat('-'))
            neg = true;
        else
            lex_.eat('+');
        Poly f = term();
        if (neg) f = -f;
        while (true) {
            if (lex_.eat('+'))
                f = f + term();
            else if (lex_.eat('-'))
                f = f - term();
            else
                break;
        }
        return f;
    }

    Poly term() {
        Poly f = factor();
        while (lex_.eat('*')) f = f * factor();
        return f;
    }

    Poly factor() {
        Poly base = atom();
        if (lex_.eat('^')) {
            long e = integer();
            if (e < 0) fail("negative exponent");
            base = base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    Poly atom() {
        char c = lex_.peek();
        if (c == '(') {
            lex_.eat('(');
            Poly f = expression();
            if (!lex_.eat(')')) fail("expected ')'");
            return f;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return Poly::constant(ctx_, integer());
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name = identifier();
            int idx = ctx_->index_of(name);
            if (idx < 0) fail("unknown variable '" + name + "'");
            return Poly::variable(ctx_, static_cast<std::size_t>(idx));
        }
        fail("expected a number, variable, or '('");
    }

    long integer() {
        lex_.skip();
        std::size_t start = lex_.i;
        while (lex_.i < lex_.s.size() && std::isdigit(static_cast<unsigned char>(lex_.s[lex_.i])))
            ++lex_.i;
        if (start == lex_.i) fail("expected an integer");
        return std::stol(lex_.s.substr(start, lex_.i - start));
    }

    std::string identifier() {
        lex_.skip();
        std::size_t start = lex_.i;
        while (lex_.i < lex_.s.size() &&
               (std::isalnum(static_cast<unsigned char>(lex_.s[lex_.i])) || lex_.s[lex_.i] == '_'))
            ++lex_.i;
        return lex_.s.substr(start, lex_.i - start);
    }
};

}  // namespace

Poly Poly::parse(const CtxPtr& ctx, const std::string& text) {
    return Parser(ctx, text).run();
}

}  // namespace segre
