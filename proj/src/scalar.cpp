#include "yanglab/scalar.hpp"

#include <cctype>

namespace yanglab {

namespace {

// --- strict scanner for the scalar grammar -------------------------------
// SCALAR  := RATIONAL [ ('+'|'-') RATIONAL '*sqrt(' RATIONAL ')' ]
// RATIONAL:= INT ['/' POSINT]
// INT     := ['-'] DIGITS
// No whitespace anywhere.

struct Scanner {
    std::string_view s;
    size_t pos = 0;

    bool done() const { return pos >= s.size(); }
    char peek() const { return pos < s.size() ? s[pos] : '\0'; }

    std::string digits() {
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw validation_error("scalar parse error: expected digits in '" + std::string(s) + "'");
        return std::string(s.substr(start, pos - start));
    }

    mpz_class integer() {
        bool neg = false;
        if (peek() == '-') { neg = true; ++pos; }
        mpz_class v(digits(), 10);
        return neg ? mpz_class(-v) : v;
    }

    Rational rational() {
        mpz_class n = integer();
        if (peek() == '/') {
            ++pos;
            mpz_class d(digits(), 10);
            if (sgn(d) <= 0) throw validation_error("scalar parse error: denominator must be positive");
            return Rational(std::move(n), std::move(d));
        }
        return Rational(std::move(n), mpz_class(1));
    }

    void expect(std::string_view lit) {
        if (s.substr(pos, lit.size()) != lit)
            throw validation_error("scalar parse error: expected '" + std::string(lit) + "' in '" + std::string(s) + "'");
        pos += lit.size();
    }
};

std::string signed_rational_suffix(const Rational& r) {
    // "+q" or "-|q|" as the grammar's quad-part prefix demands
    if (r.sign() < 0) return "-" + (-r).str();
    return "+" + r.str();
}

} // namespace

Rational Rational::parse(std::string_view s) {
    Scanner sc{s};
    Rational r = sc.rational();
    if (!sc.done()) throw validation_error("rational parse error: trailing input in '" + std::string(s) + "'");
    return r;
}

std::optional<Rational> rational_square_root(const Rational& r) {
    if (r.sign() < 0) return std::nullopt;
    const mpz_class& n = r.numerator();
    const mpz_class& d = r.denominator();
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(d.get_mpz_t()) == 0) return std::nullopt;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
    return Rational(std::move(sn), std::move(sd));
}

FieldContext::FieldContext(Rational radicand) {
    Data d;
    d.sqrt_rational = rational_square_root(radicand);
    d.radicand = std::move(radicand);
    data_ = std::make_shared<const Data>(std::move(d));
}

FieldContext FieldContext::rationals() {
    static const FieldContext ctx{Rational(0)};
    return ctx;
}

FieldContext merge_contexts(const FieldContext& a, const FieldContext& b) {
    if (a.degenerate()) return b.degenerate() ? a : b;
    if (b.degenerate()) return a;
    if (a.radicand() != b.radicand())
        throw validation_error("mixed field contexts: sqrt(" + a.radicand().str() +
                               ") vs sqrt(" + b.radicand().str() + ")");
    return a;
}

QuadScalar::QuadScalar(Rational rat, Rational quad, FieldContext ctx)
    : rat_(std::move(rat)), quad_(std::move(quad)), ctx_(std::move(ctx)) {
    if (ctx_.degenerate()) {
        // collapse q*sqrt(D) to its rational value
        rat_ += quad_ * ctx_.sqrt_value();
        quad_ = Rational(0);
    }
}

QuadScalar QuadScalar::operator-() const {
    QuadScalar r = *this;
    r.rat_ = -r.rat_;
    r.quad_ = -r.quad_;
    return r;
}

QuadScalar QuadScalar::operator+(const QuadScalar& o) const {
    return QuadScalar(rat_ + o.rat_, quad_ + o.quad_, merge_contexts(ctx_, o.ctx_));
}

QuadScalar QuadScalar::operator-(const QuadScalar& o) const {
    return QuadScalar(rat_ - o.rat_, quad_ - o.quad_, merge_contexts(ctx_, o.ctx_));
}

QuadScalar QuadScalar::operator*(const QuadScalar& o) const {
    FieldContext ctx = merge_contexts(ctx_, o.ctx_);
    // (a + b sqrt(D)) (c + e sqrt(D)) = (ac + beD) + (ae + bc) sqrt(D)
    return QuadScalar(rat_ * o.rat_ + quad_ * o.quad_ * ctx.radicand(),
                      rat_ * o.quad_ + quad_ * o.rat_, ctx);
}

QuadScalar QuadScalar::inverse() const {
    if (is_zero()) throw validation_error("division by zero");
    Rational norm = rat_ * rat_ - quad_ * quad_ * ctx_.radicand();
    // norm = 0 with (rat,quad) != 0 would force D to be a rational square,
    // which a non-degenerate context excludes
    if (norm.is_zero()) throw validation_error("singular element in quadratic field");
    return QuadScalar(rat_ / norm, -quad_ / norm, ctx_);
}

bool QuadScalar::operator==(const QuadScalar& o) const {
    merge_contexts(ctx_, o.ctx_);
    return rat_ == o.rat_ && quad_ == o.quad_;
}

std::strong_ordering QuadScalar::operator<=>(const QuadScalar& o) const {
    if (auto c = rat_ <=> o.rat_; c != std::strong_ordering::equal) return c;
    return quad_ <=> o.quad_;
}

std::string QuadScalar::str() const {
    if (quad_.is_zero()) return rat_.str();
    return rat_.str() + signed_rational_suffix(quad_) + "*sqrt(" + ctx_.radicand().str() + ")";
}

QuadScalar QuadScalar::parse(std::string_view s, std::optional<FieldContext> ctx) {
    Scanner sc{s};
    Rational rat = sc.rational();
    if (sc.done()) {
        return QuadScalar(std::move(rat), Rational(0),
                          ctx.value_or(FieldContext::rationals()));
    }
    char sign = sc.peek();
    if (sign != '+' && sign != '-')
        throw validation_error("scalar parse error: trailing input in '" + std::string(s) + "'");
    ++sc.pos;
    Rational quad = sc.rational();
    if (sign == '-') quad = -quad;
    sc.expect("*sqrt(");
    Rational radicand = sc.rational();
    sc.expect(")");
    if (!sc.done()) throw validation_error("scalar parse error: trailing input in '" + std::string(s) + "'");

    FieldContext named(radicand);
    if (ctx && !ctx->same_extension(named) && !named.degenerate())
        throw validation_error("scalar '" + std::string(s) + "' names sqrt(" + radicand.str() +
                               ") outside the working field Q(sqrt(" + ctx->radicand().str() + "))");
    FieldContext use = (ctx && !ctx->degenerate()) ? *ctx : named;
    if (named.degenerate()) {
        // fold the rational-valued sqrt into the rat part, keep caller's context
        return QuadScalar(rat + quad * named.sqrt_value(), Rational(0),
                          ctx.value_or(FieldContext::rationals()));
    }
    return QuadScalar(std::move(rat), std::move(quad), use);
}

std::optional<QuadScalar> sqrt_in_field(const QuadScalar& x) {
    const FieldContext& ctx = x.context();
    const Rational& p = x.rat();
    const Rational& q = x.quad();
    const Rational half(1, 2);

    if (q.is_zero()) {
        if (auto u = rational_square_root(p)) return QuadScalar(*u, Rational(0), ctx);
        if (!ctx.degenerate()) {
            // try u = 0: (v sqrt(D))^2 = v^2 D = p
            if (auto v = rational_square_root(p / ctx.radicand()))
                return QuadScalar(Rational(0), *v, ctx);
        }
        return std::nullopt;
    }

    // (u + v sqrt(D))^2 = p + q sqrt(D) with q != 0 forces u != 0,
    // v = q/(2u) and 4u^4 - 4pu^2 + q^2 D = 0, so u^2 = (p +- s)/2
    // where s^2 = p^2 - q^2 D (the norm of x) must be a rational square.
    auto s = rational_square_root(p * p - q * q * ctx.radicand());
    if (!s) return std::nullopt;
    for (const Rational& u2 : {(p + *s) * half, (p - *s) * half}) {
        if (auto u = rational_square_root(u2)) {
            if (u->is_zero()) continue;
            Rational v = q / (Rational(2) * *u);
            return QuadScalar(*u, std::move(v), ctx);
        }
    }
    return std::nullopt;
}

QuadScalar pow(const QuadScalar& base, unsigned exp) {
    QuadScalar r(1);
    for (unsigned i = 0; i < exp; ++i) r *= base;
    return r;
}

} // namespace yanglab
