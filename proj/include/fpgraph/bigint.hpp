#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fpgraph {

// Arbitrary-precision signed integer, sign/magnitude over 32-bit limbs.
// Small by design: only the operations the workbench needs (ring arithmetic,
// truncated division, gcd, decimal I/O, ordering).
class BigInt {
public:
    BigInt() = default;
    BigInt(long long value);

    // Parses an optional leading '-' followed by decimal digits.
    static BigInt from_decimal(std::string_view text);

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }

    BigInt negated() const;
    BigInt abs() const;

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);

    // Truncated division (quotient rounds toward zero, remainder follows the
    // dividend's sign). Division by zero raises domain_error.
    static void divmod(const BigInt& num, const BigInt& den, BigInt& quot, BigInt& rem);
    friend BigInt operator/(const BigInt& a, const BigInt& b);
    friend BigInt operator%(const BigInt& a, const BigInt& b);

    static BigInt gcd(BigInt a, BigInt b); // result >= 0, gcd(0,0) = 0

    std::strong_ordering operator<=>(const BigInt& other) const;
    bool operator==(const BigInt& other) const = default;

    std::string to_decimal() const;

    size_t bit_size() const { return bit_length(limbs_); }

private:
    int sign_ = 0;                  // -1, 0, +1
    std::vector<uint32_t> limbs_;   // little-endian magnitude, no leading zeros; empty iff zero

    static int compare_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static void divmod_mag(const std::vector<uint32_t>& num, const std::vector<uint32_t>& den,
                           std::vector<uint32_t>& quot, std::vector<uint32_t>& rem);
    static size_t bit_length(const std::vector<uint32_t>& mag);
    static bool bit_at(const std::vector<uint32_t>& mag, size_t i);
    static void set_bit(std::vector<uint32_t>& mag, size_t i);
    static void trim(std::vector<uint32_t>& mag);
    BigInt(int sign, std::vector<uint32_t> limbs);
};

} // namespace fpgraph
