#include "fpgraph/rational.hpp"

#include "fpgraph/errors.hpp"

namespace fpgraph {

Rational::Rational(long long num, long long den) : num_(num), den_(den) {
    normalize();
}

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

void Rational::normalize() {
    if (den_.is_zero()) throw domain_error("rational with zero denominator");
    if (den_.sign() < 0) {
        den_ = den_.negated();
        num_ = num_.negated();
    }
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    BigInt g = BigInt::gcd(num_, den_);
    if (g != BigInt(1)) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
}

Rational Rational::from_string(std::string_view text) {
    size_t slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(BigInt::from_decimal(text), BigInt(1));
    }
    std::string_view num_text = text.substr(0, slash);
    std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && den_text.front() == '-')
        throw structural_error("denominator must be positive in rational literal");
    return Rational(BigInt::from_decimal(num_text), BigInt::from_decimal(den_text));
}

Rational Rational::abs() const {
    Rational r = *this;
    r.num_ = r.num_.abs();
    return r;
}

Rational Rational::negated() const {
    Rational r = *this;
    r.num_ = r.num_.negated();
    return r;
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw domain_error("reciprocal of zero");
    return Rational(den_, num_);
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw domain_error("division by zero rational");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering Rational::operator<=>(const Rational& other) const {
    return (num_ * other.den_) <=> (other.num_ * den_);
}

std::string Rational::to_string() const {
    if (den_ == BigInt(1)) return num_.to_decimal();
    return num_.to_decimal() + "/" + den_.to_decimal();
}

const Rational& min(const Rational& a, const Rational& b) {
    return b < a ? b : a;
}

const Rational& max(const Rational& a, const Rational& b) {
    return a < b ? b : a;
}

} // namespace fpgraph
