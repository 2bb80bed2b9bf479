#include "yanglab/weight_vector.hpp"

namespace yanglab {

std::string BasisIndex::str() const {
    if (!is_pair()) return std::to_string(slot_);
    return "(" + left().str() + "," + right().str() + ")";
}

std::string GeneratorSymbol::str() const {
    switch (kind) {
        case GenKind::XPlus: return "X+" + std::to_string(level);
        case GenKind::XMinus: return "X-" + std::to_string(level);
        default: return "H" + std::to_string(level);
    }
}

GeneratorSymbol GeneratorSymbol::parse(std::string_view s) {
    auto bad = [&] { return validation_error("bad generator '" + std::string(s) + "', expected X+k, X-k or Hk"); };
    if (s.size() < 2) throw bad();
    GenKind kind;
    size_t num = 1;
    if (s[0] == 'H') {
        kind = GenKind::H;
    } else if (s[0] == 'X' && (s[1] == '+' || s[1] == '-')) {
        kind = s[1] == '+' ? GenKind::XPlus : GenKind::XMinus;
        num = 2;
    } else {
        throw bad();
    }
    if (num >= s.size()) throw bad();
    unsigned level = 0;
    for (size_t i = num; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw bad();
        level = level * 10 + static_cast<unsigned>(s[i] - '0');
    }
    return {kind, level};
}

QuadScalar WeightVector::coeff(const BasisIndex& i) const {
    auto it = terms_.find(i);
    return it == terms_.end() ? QuadScalar(0) : it->second;
}

void WeightVector::add_term(const BasisIndex& i, QuadScalar c) {
    if (c.is_zero()) return;
    auto it = terms_.find(i);
    if (it == terms_.end()) {
        terms_.emplace(i, std::move(c));
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

WeightVector WeightVector::operator+(const WeightVector& o) const {
    WeightVector r = *this;
    r += o;
    return r;
}

WeightVector WeightVector::operator-(const WeightVector& o) const {
    WeightVector r = *this;
    r -= o;
    return r;
}

WeightVector& WeightVector::operator+=(const WeightVector& o) {
    for (const auto& [i, c] : o.terms_) add_term(i, c);
    return *this;
}

WeightVector& WeightVector::operator-=(const WeightVector& o) {
    for (const auto& [i, c] : o.terms_) add_term(i, -c);
    return *this;
}

WeightVector WeightVector::operator*(const QuadScalar& c) const {
    WeightVector r;
    if (c.is_zero()) return r;
    for (const auto& [i, x] : terms_) r.terms_.emplace(i, x * c);
    return r;
}

bool WeightVector::proportional_to(const WeightVector& o) const {
    if (is_zero() || o.is_zero()) return false;
    if (terms_.size() != o.terms_.size()) return false;
    QuadScalar ratio = o.terms_.begin()->second / terms_.begin()->second;
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt) {
        if (it->first != jt->first) return false;
        if (it->second * ratio != jt->second) return false;
    }
    return true;
}

std::string WeightVector::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (const auto& [i, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += "(" + c.str() + ")e" + i.str();
    }
    return out;
}

} // namespace yanglab
