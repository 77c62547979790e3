#ifndef LYM_BIGINT_HPP
#define LYM_BIGINT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace lym {

// Arbitrary-precision signed integer, sign + little-endian base 2^32 magnitude.
// Magnitude never has trailing zero limbs; zero has sign 0 and empty magnitude.
class BigInt {
public:
    BigInt() : sign_(0) {}
    BigInt(long long v);
    explicit BigInt(const std::string& decimal);

    static BigInt from_string(const std::string& decimal) { return BigInt(decimal); }

    bool is_zero() const { return sign_ == 0; }
    bool is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }
    bool is_neg_one() const { return sign_ == -1 && mag_.size() == 1 && mag_[0] == 1; }
    int sign() const { return sign_; }

    BigInt operator-() const;
    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;
    BigInt& operator+=(const BigInt& o) { *this = *this + o; return *this; }
    BigInt& operator-=(const BigInt& o) { *this = *this - o; return *this; }
    BigInt& operator*=(const BigInt& o) { *this = *this * o; return *this; }

    // Truncated division with remainder (sign of remainder follows dividend).
    static void divrem(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);

    // Quotient if b divides a exactly, nothing otherwise.
    bool divide_exact(const BigInt& b, BigInt& q) const;

    bool operator==(const BigInt& o) const { return sign_ == o.sign_ && mag_ == o.mag_; }
    bool operator!=(const BigInt& o) const { return !(*this == o); }
    bool operator<(const BigInt& o) const;
    bool operator<=(const BigInt& o) const { return *this < o || *this == o; }
    bool operator>(const BigInt& o) const { return o < *this; }

    // Fits in long long, asserts in debug if not (used for small specialised values).
    long long to_ll() const;
    bool fits_ll() const;

    std::string to_string() const;

    static BigInt pow(const BigInt& base, unsigned e);
    static BigInt binomial(unsigned n, unsigned k);
    static BigInt factorial(unsigned n);

    size_t hash() const;

private:
    int sign_;
    std::vector<uint32_t> mag_;

    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    void trim();
};

} // namespace lym

#endif
