#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "yanglab/scalar.hpp"

namespace yanglab {

/// Label of a basis vector: a plain ladder slot, or a pair of underlying
/// labels for a tensor-product basis.
///
/// The total order is slot order on plain labels; pairs compare by right
/// component first, then left. That puts v_{k+1} (x) w_{-1} before
/// v_k (x) w_{+1} inside a tensor weight space, which is the canonical
/// listing used for matrices and serialized vectors.
class BasisIndex {
public:
    BasisIndex() = default;
    explicit BasisIndex(long slot) : slot_(slot) {}
    static BasisIndex pair(BasisIndex left, BasisIndex right) {
        BasisIndex b;
        b.parts_.reserve(2);
        b.parts_.push_back(std::move(left));
        b.parts_.push_back(std::move(right));
        return b;
    }

    bool is_pair() const { return !parts_.empty(); }
    long slot() const { return slot_; }
    const BasisIndex& left() const { return parts_[0]; }
    const BasisIndex& right() const { return parts_[1]; }

    bool operator==(const BasisIndex& o) const {
        return slot_ == o.slot_ && parts_ == o.parts_;
    }
    std::strong_ordering operator<=>(const BasisIndex& o) const {
        if (!is_pair() && !o.is_pair()) return slot_ <=> o.slot_;
        if (is_pair() != o.is_pair()) return is_pair() <=> o.is_pair();
        if (auto c = right() <=> o.right(); c != std::strong_ordering::equal) return c;
        return left() <=> o.left();
    }

    std::string str() const;

private:
    long slot_ = 0;
    std::vector<BasisIndex> parts_;  // empty for a plain label, size 2 for a pair
};

enum class GenKind { XPlus, XMinus, H };

/// Formal generator X_k^+, X_k^- or H_k.
struct GeneratorSymbol {
    GenKind kind = GenKind::H;
    unsigned level = 0;

    static GeneratorSymbol xplus(unsigned k) { return {GenKind::XPlus, k}; }
    static GeneratorSymbol xminus(unsigned k) { return {GenKind::XMinus, k}; }
    static GeneratorSymbol h(unsigned k) { return {GenKind::H, k}; }
    static GeneratorSymbol x(int sign, unsigned k) {
        return sign >= 0 ? xplus(k) : xminus(k);
    }

    /// Weight shift of the action: +2, -2 or 0.
    int weight_shift() const {
        switch (kind) {
            case GenKind::XPlus: return 2;
            case GenKind::XMinus: return -2;
            default: return 0;
        }
    }

    bool operator==(const GeneratorSymbol&) const = default;
    auto operator<=>(const GeneratorSymbol&) const = default;

    std::string str() const;

    /// Parses "X+2", "X-0", "H1".
    static GeneratorSymbol parse(std::string_view s);
};

/// Finite formal linear combination of basis vectors over Q(sqrt(D)).
/// Zero coefficients are never stored.
class WeightVector {
public:
    WeightVector() = default;
    static WeightVector unit(const BasisIndex& i, QuadScalar coeff = QuadScalar(1)) {
        WeightVector v;
        v.add_term(i, std::move(coeff));
        return v;
    }

    bool is_zero() const { return terms_.empty(); }
    size_t support_size() const { return terms_.size(); }
    const std::map<BasisIndex, QuadScalar>& terms() const { return terms_; }

    /// Coefficient of a basis vector (zero if absent).
    QuadScalar coeff(const BasisIndex& i) const;

    void add_term(const BasisIndex& i, QuadScalar c);

    WeightVector operator+(const WeightVector& o) const;
    WeightVector operator-(const WeightVector& o) const;
    WeightVector operator*(const QuadScalar& c) const;
    WeightVector& operator+=(const WeightVector& o);
    WeightVector& operator-=(const WeightVector& o);

    bool operator==(const WeightVector& o) const { return terms_ == o.terms_; }

    /// True when o == c * this for some scalar c (zero vectors excluded).
    bool proportional_to(const WeightVector& o) const;

    std::string str() const;

private:
    std::map<BasisIndex, QuadScalar> terms_;
};

} // namespace yanglab
