#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace dhwt {

// Signed arbitrary-precision integer, base 2^32 little-endian magnitude.
// Just enough arithmetic for exact polynomial coefficient work; not a
// general bignum library.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);

    BigInt operator-() const;
    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;
    BigInt operator*(long long s) const;

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    bool operator==(const BigInt& o) const;
    bool operator!=(const BigInt& o) const { return !(*this == o); }

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }

    // 2^n
    static BigInt pow2(int n);

    double to_double() const;
    std::string str() const;

private:
    int sign_ = 0;                   // -1, 0, +1
    std::vector<std::uint32_t> mag_; // empty iff sign_ == 0

    void trim();
    static int cmp_mag(const std::vector<std::uint32_t>& a,
                       const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
};

std::ostream& operator<<(std::ostream& os, const BigInt& v);

} // namespace dhwt
