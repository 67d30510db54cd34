#include "dpell/bigint.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <ostream>

#include "dpell/errors.hpp"

namespace dpell {

namespace {
constexpr std::uint64_t kBase = 1ull << 32;
}

Int::Int(long long v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    // avoid overflow on LLONG_MIN
    std::uint64_t u = v < 0 ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
    while (u != 0) {
        mag_.push_back(static_cast<std::uint32_t>(u & 0xffffffffu));
        u >>= 32;
    }
}

Int::Int(std::string_view s) {
    std::size_t i = 0;
    int sign = 1;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        if (s[i] == '-') sign = -1;
        ++i;
    }
    if (i == s.size()) throw InvalidInput("empty integer literal");
    Int acc;
    Int chunk_scale(1000000000ll);
    // consume in 9-digit chunks
    while (i < s.size()) {
        std::uint32_t chunk = 0;
        int ndig = 0;
        while (i < s.size() && ndig < 9) {
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                throw InvalidInput("bad digit in integer literal: '" + std::string(1, s[i]) + "'");
            chunk = chunk * 10 + static_cast<std::uint32_t>(s[i] - '0');
            ++i;
            ++ndig;
        }
        Int scale = 1;
        for (int k = 0; k < ndig; ++k) scale *= Int(10);
        acc = acc * scale + Int(static_cast<long long>(chunk));
    }
    *this = acc;
    if (sign < 0 && sign_ != 0) sign_ = -sign_;
}

void Int::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

int Int::cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

std::vector<std::uint32_t> Int::add_mag(const std::vector<std::uint32_t>& a,
                                        const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out;
    out.reserve(std::max(a.size(), b.size()) + 1);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
        std::uint64_t s = carry;
        if (i < a.size()) s += a[i];
        if (i < b.size()) s += b[i];
        out.push_back(static_cast<std::uint32_t>(s & 0xffffffffu));
        carry = s >> 32;
    }
    if (carry) out.push_back(static_cast<std::uint32_t>(carry));
    return out;
}

std::vector<std::uint32_t> Int::sub_mag(const std::vector<std::uint32_t>& a,
                                        const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out;
    out.reserve(a.size());
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t s = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
        if (s < 0) {
            s += static_cast<std::int64_t>(kBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        out.push_back(static_cast<std::uint32_t>(s));
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::vector<std::uint32_t> Int::mul_mag(const std::vector<std::uint32_t>& a,
                                        const std::vector<std::uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint32_t> out(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::uint64_t cur = static_cast<std::uint64_t>(a[i]) * b[j] + out[i + j] + carry;
            out[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        std::size_t k = i + b.size();
        while (carry) {
            std::uint64_t cur = out[k] + carry;
            out[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
            ++k;
        }
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

// shift-subtract long division on limbs; fine at the sizes this library sees
void Int::divmod_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                     std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r) {
    q.assign(a.size(), 0);
    r.clear();
    if (cmp_mag(a, b) < 0) {
        q.clear();
        r = a;
        return;
    }
    if (b.size() == 1) {
        std::uint64_t d = b[0], rem = 0;
        for (std::size_t i = a.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | a[i];
            q[i] = static_cast<std::uint32_t>(cur / d);
            rem = cur % d;
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        if (rem) r.push_back(static_cast<std::uint32_t>(rem));
        return;
    }
    std::vector<std::uint32_t> rem;
    for (std::size_t i = a.size(); i-- > 0;) {
        for (int bit = 31; bit >= 0; --bit) {
            // rem = rem*2 + next bit of a
            std::uint32_t carry = 0;
            for (std::size_t k = 0; k < rem.size(); ++k) {
                std::uint32_t nc = rem[k] >> 31;
                rem[k] = (rem[k] << 1) | carry;
                carry = nc;
            }
            if (carry) rem.push_back(carry);
            if ((a[i] >> bit) & 1u) {
                if (rem.empty())
                    rem.push_back(1);
                else {
                    std::size_t k = 0;
                    std::uint64_t c = 1;
                    while (c && k < rem.size()) {
                        std::uint64_t s = rem[k] + c;
                        rem[k] = static_cast<std::uint32_t>(s & 0xffffffffu);
                        c = s >> 32;
                        ++k;
                    }
                    if (c) rem.push_back(static_cast<std::uint32_t>(c));
                }
            }
            if (cmp_mag(rem, b) >= 0) {
                rem = sub_mag(rem, b);
                q[i] |= 1u << bit;
            }
        }
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    r = rem;
}

Int Int::operator-() const {
    Int out = *this;
    out.sign_ = -out.sign_;
    return out;
}

Int Int::abs() const {
    Int out = *this;
    if (out.sign_ < 0) out.sign_ = 1;
    return out;
}

Int& Int::operator+=(const Int& o) {
    if (o.sign_ == 0) return *this;
    if (sign_ == 0) return *this = o;
    if (sign_ == o.sign_) {
        mag_ = add_mag(mag_, o.mag_);
        return *this;
    }
    int c = cmp_mag(mag_, o.mag_);
    if (c == 0) return *this = Int();
    if (c > 0) {
        mag_ = sub_mag(mag_, o.mag_);
    } else {
        mag_ = sub_mag(o.mag_, mag_);
        sign_ = o.sign_;
    }
    return *this;
}

Int& Int::operator-=(const Int& o) { return *this += -o; }

Int operator*(const Int& a, const Int& b) {
    Int out;
    if (a.sign_ == 0 || b.sign_ == 0) return out;
    out.sign_ = a.sign_ * b.sign_;
    out.mag_ = Int::mul_mag(a.mag_, b.mag_);
    return out;
}

Int& Int::operator*=(const Int& o) { return *this = *this * o; }

void Int::divmod(const Int& a, const Int& b, Int& q, Int& r) {
    if (b.sign_ == 0) throw InvalidInput("integer division by zero");
    std::vector<std::uint32_t> qm, rm;
    divmod_mag(a.mag_, b.mag_, qm, rm);
    q = Int();
    r = Int();
    q.mag_ = std::move(qm);
    r.mag_ = std::move(rm);
    q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
    r.sign_ = r.mag_.empty() ? 0 : a.sign_;
}

void Int::fdivmod(const Int& a, const Int& b, Int& q, Int& r) {
    divmod(a, b, q, r);
    if (!r.is_zero() && (r.sign() != b.sign())) {
        q -= Int(1);
        r += b;
    }
}

Int& Int::operator/=(const Int& o) {
    Int q, r;
    divmod(*this, o, q, r);
    return *this = q;
}

Int& Int::operator%=(const Int& o) {
    Int q, r;
    divmod(*this, o, q, r);
    return *this = r;
}

int Int::cmp(const Int& a, const Int& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
    int c = cmp_mag(a.mag_, b.mag_);
    return a.sign_ >= 0 ? c : -c;
}

std::string Int::to_string() const {
    if (sign_ == 0) return "0";
    std::vector<std::uint32_t> cur = mag_;
    std::string digits;
    const std::vector<std::uint32_t> ten9 = {1000000000u};
    while (!cur.empty()) {
        std::vector<std::uint32_t> q, r;
        divmod_mag(cur, ten9, q, r);
        std::uint32_t chunk = r.empty() ? 0 : r[0];
        for (int k = 0; k < 9; ++k) {
            digits.push_back(static_cast<char>('0' + chunk % 10));
            chunk /= 10;
        }
        cur = q;
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (sign_ < 0) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

std::optional<long long> Int::to_int64() const {
    if (mag_.size() > 2) return std::nullopt;
    std::uint64_t u = 0;
    if (mag_.size() >= 1) u = mag_[0];
    if (mag_.size() == 2) u |= static_cast<std::uint64_t>(mag_[1]) << 32;
    if (sign_ >= 0) {
        if (u > 0x7fffffffffffffffull) return std::nullopt;
        return static_cast<long long>(u);
    }
    if (u > 0x8000000000000000ull) return std::nullopt;
    if (u == 0x8000000000000000ull) return std::numeric_limits<long long>::min();
    return -static_cast<long long>(u);
}

std::ostream& operator<<(std::ostream& os, const Int& v) { return os << v.to_string(); }

Int gcd(Int a, Int b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
        Int q, r;
        Int::divmod(a, b, q, r);
        a = b;
        b = r;
    }
    return a;
}

} // namespace dpell
