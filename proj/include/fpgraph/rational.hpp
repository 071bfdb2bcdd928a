#pragma once

#include "fpgraph/bigint.hpp"

#include <compare>
#include <string>
#include <string_view>

namespace fpgraph {

// Exact rational number in canonical form: gcd(num, den) = 1, den > 0.
// Every distance, Hausdorff weight and gauge value in the workbench is one
// of these; there is no floating point anywhere on a certification path.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long value) : num_(value), den_(1) {}
    Rational(long long num, long long den);
    Rational(BigInt num, BigInt den);

    // Accepts "p" or "p/q" with an optional leading '-' on p.
    static Rational from_string(std::string_view text);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    int sign() const { return num_.sign(); }
    Rational abs() const;
    Rational negated() const;
    Rational reciprocal() const; // domain_error on zero

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b); // domain_error on zero divisor

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    std::strong_ordering operator<=>(const Rational& other) const;
    bool operator==(const Rational& other) const = default;

    // "p" when den == 1, else "p/q".
    std::string to_string() const;

private:
    BigInt num_;
    BigInt den_;
    void normalize();
};

const Rational& min(const Rational& a, const Rational& b);
const Rational& max(const Rational& a, const Rational& b);

} // namespace fpgraph
