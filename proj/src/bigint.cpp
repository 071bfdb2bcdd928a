#include "fpgraph/bigint.hpp"

#include "fpgraph/errors.hpp"

#include <algorithm>

namespace fpgraph {

BigInt::BigInt(long long value) {
    if (value == 0) return;
    sign_ = value < 0 ? -1 : 1;
    // Avoid overflow on LLONG_MIN by working in unsigned space.
    unsigned long long mag = value < 0 ? ~static_cast<unsigned long long>(value) + 1ULL
                                       : static_cast<unsigned long long>(value);
    while (mag != 0) {
        limbs_.push_back(static_cast<uint32_t>(mag & 0xffffffffULL));
        mag >>= 32;
    }
}

BigInt::BigInt(int sign, std::vector<uint32_t> limbs) : sign_(sign), limbs_(std::move(limbs)) {
    trim(limbs_);
    if (limbs_.empty()) sign_ = 0;
}

BigInt BigInt::from_decimal(std::string_view text) {
    bool negative = false;
    if (!text.empty() && text.front() == '-') {
        negative = true;
        text.remove_prefix(1);
    }
    if (text.empty()) throw structural_error("empty integer literal");
    BigInt result;
    size_t i = 0;
    while (i < text.size()) {
        size_t chunk_len = std::min<size_t>(9, text.size() - i);
        uint32_t chunk = 0;
        uint32_t scale = 1;
        for (size_t j = 0; j < chunk_len; ++j) {
            char c = text[i + j];
            if (c < '0' || c > '9') throw structural_error("invalid digit in integer literal");
            chunk = chunk * 10 + static_cast<uint32_t>(c - '0');
            scale *= 10;
        }
        result = result * BigInt(static_cast<long long>(scale)) + BigInt(static_cast<long long>(chunk));
        i += chunk_len;
    }
    if (negative) result = result.negated();
    return result;
}

BigInt BigInt::negated() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

void BigInt::trim(std::vector<uint32_t>& mag) {
    while (!mag.empty() && mag.back() == 0) mag.pop_back();
}

int BigInt::compare_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r;
    r.reserve(std::max(a.size(), b.size()) + 1);
    uint64_t carry = 0;
    for (size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
        uint64_t sum = carry;
        if (i < a.size()) sum += a[i];
        if (i < b.size()) sum += b[i];
        r.push_back(static_cast<uint32_t>(sum & 0xffffffffULL));
        carry = sum >> 32;
    }
    if (carry) r.push_back(static_cast<uint32_t>(carry));
    return r;
}

std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    // Requires |a| >= |b|.
    std::vector<uint32_t> r;
    r.reserve(a.size());
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        int64_t diff = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? static_cast<int64_t>(b[i]) : 0);
        if (diff < 0) {
            diff += (1LL << 32);
            borrow = 1;
        } else {
            borrow = 0;
        }
        r.push_back(static_cast<uint32_t>(diff));
    }
    trim(r);
    return r;
}

std::vector<uint32_t> BigInt::mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint32_t> r(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < b.size(); ++j) {
            uint64_t cur = static_cast<uint64_t>(a[i]) * b[j] + r[i + j] + carry;
            r[i + j] = static_cast<uint32_t>(cur & 0xffffffffULL);
            carry = cur >> 32;
        }
        size_t k = i + b.size();
        while (carry) {
            uint64_t cur = static_cast<uint64_t>(r[k]) + carry;
            r[k] = static_cast<uint32_t>(cur & 0xffffffffULL);
            carry = cur >> 32;
            ++k;
        }
    }
    trim(r);
    return r;
}

size_t BigInt::bit_length(const std::vector<uint32_t>& mag) {
    if (mag.empty()) return 0;
    uint32_t top = mag.back();
    size_t bits = (mag.size() - 1) * 32;
    while (top) {
        ++bits;
        top >>= 1;
    }
    return bits;
}

bool BigInt::bit_at(const std::vector<uint32_t>& mag, size_t i) {
    size_t limb = i / 32;
    if (limb >= mag.size()) return false;
    return (mag[limb] >> (i % 32)) & 1u;
}

void BigInt::set_bit(std::vector<uint32_t>& mag, size_t i) {
    size_t limb = i / 32;
    if (limb >= mag.size()) mag.resize(limb + 1, 0);
    mag[limb] |= (1u << (i % 32));
}

void BigInt::divmod_mag(const std::vector<uint32_t>& num, const std::vector<uint32_t>& den,
                        std::vector<uint32_t>& quot, std::vector<uint32_t>& rem) {
    quot.clear();
    rem.clear();
    if (compare_mag(num, den) < 0) {
        rem = num;
        return;
    }
    // Single-limb fast path.
    if (den.size() == 1) {
        uint64_t d = den[0];
        quot.assign(num.size(), 0);
        uint64_t r = 0;
        for (size_t i = num.size(); i-- > 0;) {
            uint64_t cur = (r << 32) | num[i];
            quot[i] = static_cast<uint32_t>(cur / d);
            r = cur % d;
        }
        trim(quot);
        if (r) rem.push_back(static_cast<uint32_t>(r));
        return;
    }
    // Binary long division: shift-subtract from the top bit down.
    size_t shift = bit_length(num) - bit_length(den);
    rem = num;
    for (size_t s = shift + 1; s-- > 0;) {
        // t = den << s, compare/subtract against rem without materializing t.
        // Materializing is simpler and still cheap at workbench scales.
        std::vector<uint32_t> t(s / 32, 0);
        size_t bit_off = s % 32;
        uint32_t carry = 0;
        for (uint32_t limb : den) {
            uint64_t v = (static_cast<uint64_t>(limb) << bit_off) | carry;
            t.push_back(static_cast<uint32_t>(v & 0xffffffffULL));
            carry = static_cast<uint32_t>(v >> 32);
        }
        if (carry) t.push_back(carry);
        trim(t);
        if (compare_mag(rem, t) >= 0) {
            rem = sub_mag(rem, t);
            set_bit(quot, s);
        }
    }
    trim(quot);
    trim(rem);
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    if (a.sign_ == b.sign_) return BigInt(a.sign_, BigInt::add_mag(a.limbs_, b.limbs_));
    int cmp = BigInt::compare_mag(a.limbs_, b.limbs_);
    if (cmp == 0) return BigInt();
    if (cmp > 0) return BigInt(a.sign_, BigInt::sub_mag(a.limbs_, b.limbs_));
    return BigInt(b.sign_, BigInt::sub_mag(b.limbs_, a.limbs_));
}

BigInt operator-(const BigInt& a, const BigInt& b) {
    return a + b.negated();
}

BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
    return BigInt(a.sign_ * b.sign_, BigInt::mul_mag(a.limbs_, b.limbs_));
}

void BigInt::divmod(const BigInt& num, const BigInt& den, BigInt& quot, BigInt& rem) {
    if (den.sign_ == 0) throw domain_error("division by zero");
    std::vector<uint32_t> q, r;
    divmod_mag(num.limbs_, den.limbs_, q, r);
    quot = BigInt(num.sign_ * den.sign_, std::move(q));
    rem = BigInt(num.sign_, std::move(r));
}

BigInt operator/(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return r;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
        BigInt q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::strong_ordering BigInt::operator<=>(const BigInt& other) const {
    if (sign_ != other.sign_) return sign_ <=> other.sign_;
    int cmp = compare_mag(limbs_, other.limbs_);
    if (sign_ < 0) cmp = -cmp;
    return cmp <=> 0;
}

std::string BigInt::to_decimal() const {
    if (is_zero()) return "0";
    std::vector<uint32_t> mag = limbs_;
    std::string digits;
    const std::vector<uint32_t> base{1000000000u};
    while (!mag.empty()) {
        std::vector<uint32_t> q, r;
        divmod_mag(mag, base, q, r);
        uint32_t chunk = r.empty() ? 0 : r[0];
        for (int i = 0; i < 9; ++i) {
            digits.push_back(static_cast<char>('0' + chunk % 10));
            chunk /= 10;
        }
        mag = std::move(q);
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (sign_ < 0) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

} // namespace fpgraph
