#pragma once

#include <gmpxx.h>

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "yanglab/errors.hpp"

namespace yanglab {

/// Exact rational number. Always canonical: reduced, denominator > 0,
/// zero stored as 0/1. Backed by arbitrary-precision integers.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}                    // NOLINT: implicit by design
    Rational(long n, long d) { init(mpz_class(n), mpz_class(d)); }
    Rational(mpz_class n, mpz_class d) { init(std::move(n), std::move(d)); }

    const mpz_class& numerator() const { return q_.get_num(); }
    const mpz_class& denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(q_ + o.q_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(q_ - o.q_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(q_ * o.q_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw validation_error("division by zero");
        return Rational(mpq_class(q_ / o.q_));
    }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }

    bool operator==(const Rational& o) const { return q_ == o.q_; }
    std::strong_ordering operator<=>(const Rational& o) const {
        int c = cmp(q_, o.q_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// Canonical text form: "n" or "n/d" with d > 1.
    std::string str() const { return q_.get_str(); }

    /// Parses the strict grammar INT ['/' POSINT]; no whitespace, no '+'.
    static Rational parse(std::string_view s);

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) {}
    void init(mpz_class n, mpz_class d) {
        if (sgn(d) == 0) throw validation_error("zero denominator");
        q_ = mpq_class(std::move(n), std::move(d));
        q_.canonicalize();
    }
    mpq_class q_;
};

/// Exact square root of a rational, when one exists in Q. Returns the
/// non-negative root; absent for negatives and non-squares.
std::optional<Rational> rational_square_root(const Rational& r);

/// The coefficient field Q(sqrt(D)) for a fixed rational radicand D.
///
/// If D happens to be a square of a rational, the extension is degenerate:
/// the context collapses to Q and sqrt(D) is replaced by its rational value
/// at construction time, so every scalar in a degenerate context has zero
/// quad part. Contexts are cheap to copy (shared immutable state).
class FieldContext {
public:
    explicit FieldContext(Rational radicand);

    /// Plain Q, realized as the degenerate context with D = 0.
    static FieldContext rationals();

    const Rational& radicand() const { return data_->radicand; }
    bool degenerate() const { return data_->sqrt_rational.has_value(); }

    /// Rational value of sqrt(D); only in a degenerate context.
    const Rational& sqrt_value() const { return *data_->sqrt_rational; }

    bool same_extension(const FieldContext& o) const {
        return data_ == o.data_ ||
               (degenerate() && o.degenerate()) ||
               (!degenerate() && !o.degenerate() && radicand() == o.radicand());
    }

private:
    struct Data {
        Rational radicand;
        std::optional<Rational> sqrt_rational;
    };
    std::shared_ptr<const Data> data_;
};

/// Element rat + quad * sqrt(D) of the field Q(sqrt(D)).
///
/// Values from degenerate contexts and plain rationals embed into any
/// context; combining two distinct non-degenerate extensions is an error.
class QuadScalar {
public:
    QuadScalar() : ctx_(FieldContext::rationals()) {}
    QuadScalar(Rational r) : rat_(std::move(r)), ctx_(FieldContext::rationals()) {}  // NOLINT
    QuadScalar(long n) : rat_(n), ctx_(FieldContext::rationals()) {}                 // NOLINT
    QuadScalar(Rational rat, Rational quad, FieldContext ctx);

    static QuadScalar sqrt_radicand(const FieldContext& ctx) {
        return QuadScalar(Rational(0), Rational(1), ctx);
    }

    const Rational& rat() const { return rat_; }
    const Rational& quad() const { return quad_; }
    const FieldContext& context() const { return ctx_; }

    bool is_zero() const { return rat_.is_zero() && quad_.is_zero(); }
    bool is_rational() const { return quad_.is_zero(); }

    QuadScalar operator-() const;
    QuadScalar operator+(const QuadScalar& o) const;
    QuadScalar operator-(const QuadScalar& o) const;
    QuadScalar operator*(const QuadScalar& o) const;
    QuadScalar operator/(const QuadScalar& o) const { return *this * o.inverse(); }
    QuadScalar& operator+=(const QuadScalar& o) { return *this = *this + o; }
    QuadScalar& operator-=(const QuadScalar& o) { return *this = *this - o; }
    QuadScalar& operator*=(const QuadScalar& o) { return *this = *this * o; }

    /// Conjugate inverse (a + b sqrt(D))^-1 = (a - b sqrt(D)) / (a^2 - b^2 D).
    QuadScalar inverse() const;

    bool operator==(const QuadScalar& o) const;
    bool operator!=(const QuadScalar& o) const { return !(*this == o); }

    /// Arbitrary but deterministic total order, used only to stabilize output.
    std::strong_ordering operator<=>(const QuadScalar& o) const;

    /// Canonical text form per the scalar grammar, e.g. "-7/4" or
    /// "1/2+3*sqrt(2)".
    std::string str() const;

    /// Parses the scalar grammar. The radicand named inside sqrt(...) must be
    /// compatible with `ctx` when given, otherwise it fixes the context.
    static QuadScalar parse(std::string_view s, std::optional<FieldContext> ctx = {});

private:
    Rational rat_, quad_;
    FieldContext ctx_;
};

/// Square root inside Q(sqrt(D)) when one exists, absent otherwise.
/// The root y satisfies y*y == x exactly.
std::optional<QuadScalar> sqrt_in_field(const QuadScalar& x);

QuadScalar pow(const QuadScalar& base, unsigned exp);

/// Shared context of two operands; throws on incompatible extensions.
FieldContext merge_contexts(const FieldContext& a, const FieldContext& b);

} // namespace yanglab
