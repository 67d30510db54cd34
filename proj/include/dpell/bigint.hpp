#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dpell {

/// Arbitrary-precision signed integer, sign + base-2^32 magnitude.
/// Every lattice, cone and Smith-form computation in this library runs on
/// these; there is no floating point anywhere.
class Int {
public:
    Int() = default;
    Int(long long v);
    Int(int v) : Int(static_cast<long long>(v)) {}
    explicit Int(std::string_view decimal);

    int sign() const { return sign_; }
    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }

    Int operator-() const;
    Int abs() const;

    Int& operator+=(const Int& o);
    Int& operator-=(const Int& o);
    Int& operator*=(const Int& o);
    Int& operator/=(const Int& o);
    Int& operator%=(const Int& o);

    friend Int operator+(Int a, const Int& b) { return a += b; }
    friend Int operator-(Int a, const Int& b) { return a -= b; }
    friend Int operator*(const Int& a, const Int& b);
    friend Int operator/(Int a, const Int& b) { return a /= b; }
    friend Int operator%(Int a, const Int& b) { return a %= b; }

    /// Truncated division: q = trunc(a/b), r = a - q*b (sign of r follows a).
    static void divmod(const Int& a, const Int& b, Int& q, Int& r);
    /// Floor division: r has the sign of b, 0 <= |r| < |b|.
    static void fdivmod(const Int& a, const Int& b, Int& q, Int& r);

    /// Three-way comparison, negative/zero/positive like strcmp.
    static int cmp(const Int& a, const Int& b);

    friend bool operator==(const Int& a, const Int& b) { return cmp(a, b) == 0; }
    friend bool operator!=(const Int& a, const Int& b) { return cmp(a, b) != 0; }
    friend bool operator<(const Int& a, const Int& b) { return cmp(a, b) < 0; }
    friend bool operator>(const Int& a, const Int& b) { return cmp(a, b) > 0; }
    friend bool operator<=(const Int& a, const Int& b) { return cmp(a, b) <= 0; }
    friend bool operator>=(const Int& a, const Int& b) { return cmp(a, b) >= 0; }

    std::string to_string() const;
    /// Exact conversion when the value fits in int64, nullopt otherwise.
    std::optional<long long> to_int64() const;

    friend std::ostream& operator<<(std::ostream& os, const Int& v);

private:
    int sign_ = 0;                  // -1, 0, +1
    std::vector<std::uint32_t> mag_; // little-endian limbs, no trailing zeros

    void trim();
    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static void divmod_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                           std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r);
};

/// Non-negative gcd; gcd(0, 0) = 0.
Int gcd(Int a, Int b);

} // namespace dpell
