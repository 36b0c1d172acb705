// Minimal arbitrary-precision signed integer.
//
// Schubert structure constants are powers of two multiplied through long
// product chains; they must never overflow silently. Only the operations the
// rest of the library needs are provided: add, subtract, multiply, compare,
// construction from machine integers, and decimal conversion.

#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace grassq {

class BigInt {
public:
    BigInt() = default;
    BigInt(long long v) {  // NOLINT: implicit by design, coefficients read naturally
        if (v == 0) return;
        sign_ = v > 0 ? 1 : -1;
        unsigned long long a = v > 0 ? static_cast<unsigned long long>(v)
                                     : 0ULL - static_cast<unsigned long long>(v);
        while (a != 0) {
            mag_.push_back(static_cast<std::uint32_t>(a & 0xffffffffULL));
            a >>= 32;
        }
    }

    static BigInt pow2(int e) {
        if (e < 0) throw std::invalid_argument("BigInt::pow2: negative exponent");
        BigInt r;
        r.sign_ = 1;
        r.mag_.assign(static_cast<std::size_t>(e / 32) + 1, 0);
        r.mag_.back() = std::uint32_t{1} << (e % 32);
        return r;
    }

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }

    bool operator==(const BigInt& o) const { return sign_ == o.sign_ && mag_ == o.mag_; }
    bool operator!=(const BigInt& o) const { return !(*this == o); }

    bool operator<(const BigInt& o) const {
        if (sign_ != o.sign_) return sign_ < o.sign_;
        int c = cmp_mag(mag_, o.mag_);
        return sign_ >= 0 ? c < 0 : c > 0;
    }

    BigInt operator-() const {
        BigInt r = *this;
        r.sign_ = -r.sign_;
        return r;
    }

    BigInt& operator+=(const BigInt& o) {
        if (o.sign_ == 0) return *this;
        if (sign_ == 0) { *this = o; return *this; }
        if (sign_ == o.sign_) {
            add_mag(mag_, o.mag_);
            return *this;
        }
        int c = cmp_mag(mag_, o.mag_);
        if (c == 0) { *this = BigInt(); return *this; }
        if (c > 0) {
            sub_mag(mag_, o.mag_);
        } else {
            std::vector<std::uint32_t> t = o.mag_;
            sub_mag(t, mag_);
            mag_ = std::move(t);
            sign_ = o.sign_;
        }
        return *this;
    }

    BigInt& operator-=(const BigInt& o) { return *this += -o; }

    BigInt& operator*=(const BigInt& o) {
        if (sign_ == 0 || o.sign_ == 0) { *this = BigInt(); return *this; }
        std::vector<std::uint32_t> r(mag_.size() + o.mag_.size(), 0);
        for (std::size_t i = 0; i < mag_.size(); ++i) {
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < o.mag_.size(); ++j) {
                std::uint64_t cur = static_cast<std::uint64_t>(mag_[i]) * o.mag_[j] +
                                    r[i + j] + carry;
                r[i + j] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
            }
            r[i + o.mag_.size()] += static_cast<std::uint32_t>(carry);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        mag_ = std::move(r);
        sign_ *= o.sign_;
        return *this;
    }

    friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
    friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
    friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }

    // Quotient of an exactly divisible value; throws when the division leaves
    // a remainder. Enough for the unit-pivot solver and parity checks.
    BigInt divided_exactly_by(const BigInt& d) const {
        if (d.sign_ == 0) throw std::invalid_argument("BigInt: division by zero");
        if (sign_ == 0) return BigInt();
        if (d.mag_.size() == 1) {
            std::vector<std::uint32_t> q = mag_;
            std::uint32_t rem = divmod_small(q, d.mag_[0]);
            if (rem != 0) throw std::logic_error("BigInt: inexact division");
            BigInt r;
            r.mag_ = std::move(q);
            while (!r.mag_.empty() && r.mag_.back() == 0) r.mag_.pop_back();
            r.sign_ = r.mag_.empty() ? 0 : sign_ * d.sign_;
            return r;
        }
        // Magnitudes beyond one limb only occur through repeated doubling, so
        // fall back to binary long division.
        BigInt rem;
        BigInt quo = divmod_binary(*this, d, rem);
        if (!rem.is_zero()) throw std::logic_error("BigInt: inexact division");
        return quo;
    }

    long long to_long_long() const {
        unsigned long long a = 0;
        if (mag_.size() > 2) throw std::overflow_error("BigInt: does not fit in long long");
        for (std::size_t i = mag_.size(); i-- > 0;) a = (a << 32) | mag_[i];
        if (sign_ >= 0) {
            if (a > 0x7fffffffffffffffULL) throw std::overflow_error("BigInt: does not fit");
            return static_cast<long long>(a);
        }
        if (a > 0x8000000000000000ULL) throw std::overflow_error("BigInt: does not fit");
        return -static_cast<long long>(a - 1) - 1;
    }

    std::string to_string() const {
        if (sign_ == 0) return "0";
        std::vector<std::uint32_t> t = mag_;
        std::string digits;
        while (!t.empty()) {
            std::uint32_t rem = divmod_small(t, 1000000000u);
            while (!t.empty() && t.back() == 0) t.pop_back();
            std::string chunk = std::to_string(rem);
            if (t.empty()) {
                digits.insert(0, chunk);
            } else {
                digits.insert(0, std::string(9 - chunk.size(), '0') + chunk);
            }
        }
        return sign_ < 0 ? "-" + digits : digits;
    }

    static BigInt from_string(const std::string& s) {
        if (s.empty()) throw std::invalid_argument("BigInt: empty string");
        std::size_t i = 0;
        int sg = 1;
        if (s[0] == '-') { sg = -1; i = 1; }
        else if (s[0] == '+') { i = 1; }
        if (i == s.size()) throw std::invalid_argument("BigInt: no digits");
        BigInt r;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad digit");
            r *= BigInt(10);
            r += BigInt(s[i] - '0');
        }
        if (sg < 0) r.sign_ = -r.sign_;
        return r;
    }

private:
    int sign_ = 0;                     // -1, 0, +1
    std::vector<std::uint32_t> mag_;   // little-endian limbs, no trailing zeros

    static int cmp_mag(const std::vector<std::uint32_t>& a,
                       const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;) {
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        }
        return 0;
    }

    static void add_mag(std::vector<std::uint32_t>& a,
                        const std::vector<std::uint32_t>& b) {
        if (b.size() > a.size()) a.resize(b.size(), 0);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::uint64_t cur = carry + a[i] + (i < b.size() ? b[i] : 0);
            a[i] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) a.push_back(static_cast<std::uint32_t>(carry));
    }

    // a -= b, requires a >= b
    static void sub_mag(std::vector<std::uint32_t>& a,
                        const std::vector<std::uint32_t>& b) {
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::int64_t cur = static_cast<std::int64_t>(a[i]) - borrow -
                               (i < b.size() ? b[i] : 0);
            borrow = cur < 0 ? 1 : 0;
            a[i] = static_cast<std::uint32_t>(cur + (borrow << 32));
        }
        while (!a.empty() && a.back() == 0) a.pop_back();
    }

    static std::uint32_t divmod_small(std::vector<std::uint32_t>& a, std::uint32_t d) {
        std::uint64_t rem = 0;
        for (std::size_t i = a.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | a[i];
            a[i] = static_cast<std::uint32_t>(cur / d);
            rem = cur % d;
        }
        return static_cast<std::uint32_t>(rem);
    }

    static BigInt abs_of(const BigInt& v) {
        BigInt r = v;
        if (r.sign_ < 0) r.sign_ = 1;
        return r;
    }

    static BigInt divmod_binary(const BigInt& num, const BigInt& den, BigInt& rem_out) {
        BigInt n = abs_of(num), d = abs_of(den);
        BigInt quo, rem;
        int bits = static_cast<int>(n.mag_.size()) * 32;
        for (int i = bits - 1; i >= 0; --i) {
            rem *= BigInt(2);
            if (n.mag_[static_cast<std::size_t>(i / 32)] >> (i % 32) & 1u) rem += BigInt(1);
            if (!(rem < d)) {
                rem -= d;
                quo += pow2(i);
            }
        }
        int qs = num.sign_ * den.sign_;
        if (qs < 0) quo.sign_ = -quo.sign_;
        if (num.sign_ < 0) rem.sign_ = -rem.sign_;
        rem_out = rem;
        return quo;
    }
};

}  // namespace grassq
