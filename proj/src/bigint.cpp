#include "lym/bigint.hpp"

#include <cassert>
#include <stdexcept>

namespace lym {

BigInt::BigInt(long long v) {
    if (v == 0) { sign_ = 0; return; }
    sign_ = v > 0 ? 1 : -1;
    unsigned long long m = v > 0 ? (unsigned long long)v : ~(unsigned long long)v + 1ull;
    while (m) { mag_.push_back((uint32_t)(m & 0xffffffffull)); m >>= 32; }
}

BigInt::BigInt(const std::string& s) {
    sign_ = 0;
    size_t i = 0;
    int sgn = 1;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) { sgn = s[i] == '-' ? -1 : 1; ++i; }
    if (i >= s.size()) throw std::invalid_argument("BigInt: empty numeral");
    BigInt acc;
    const BigInt ten(10);
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad digit");
        acc = acc * ten + BigInt(s[i] - '0');
    }
    *this = acc;
    if (sgn < 0) sign_ = -sign_;
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    const std::vector<uint32_t>& x = a.size() >= b.size() ? a : b;
    const std::vector<uint32_t>& y = a.size() >= b.size() ? b : a;
    std::vector<uint32_t> r(x.size() + 1, 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        uint64_t s = carry + x[i] + (i < y.size() ? y[i] : 0);
        r[i] = (uint32_t)s;
        carry = s >> 32;
    }
    r[x.size()] = (uint32_t)carry;
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r(a.size(), 0);
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        int64_t s = (int64_t)a[i] - borrow - (i < b.size() ? b[i] : 0);
        if (s < 0) { s += (int64_t)1 << 32; borrow = 1; } else borrow = 0;
        r[i] = (uint32_t)s;
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<uint32_t> BigInt::mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint32_t> r(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < b.size(); ++j) {
            uint64_t s = (uint64_t)a[i] * b[j] + r[i + j] + carry;
            r[i + j] = (uint32_t)s;
            carry = s >> 32;
        }
        size_t k = i + b.size();
        while (carry) {
            uint64_t s = r[k] + carry;
            r[k] = (uint32_t)s;
            carry = s >> 32;
            ++k;
        }
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
    if (sign_ == 0) return o;
    if (o.sign_ == 0) return *this;
    BigInt r;
    if (sign_ == o.sign_) {
        r.sign_ = sign_;
        r.mag_ = add_mag(mag_, o.mag_);
    } else {
        int c = cmp_mag(mag_, o.mag_);
        if (c == 0) return BigInt();
        if (c > 0) { r.sign_ = sign_; r.mag_ = sub_mag(mag_, o.mag_); }
        else { r.sign_ = o.sign_; r.mag_ = sub_mag(o.mag_, mag_); }
    }
    r.trim();
    return r;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
    BigInt r;
    if (sign_ == 0 || o.sign_ == 0) return r;
    r.sign_ = sign_ * o.sign_;
    r.mag_ = mul_mag(mag_, o.mag_);
    r.trim();
    return r;
}

bool BigInt::operator<(const BigInt& o) const {
    if (sign_ != o.sign_) return sign_ < o.sign_;
    int c = cmp_mag(mag_, o.mag_);
    return sign_ >= 0 ? c < 0 : c > 0;
}

// Knuth-style long division on 32-bit limbs via 64-bit partials.
void BigInt::divrem(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
    int c = cmp_mag(a.mag_, b.mag_);
    if (a.sign_ == 0 || c < 0) { q = BigInt(); r = a; return; }
    if (b.mag_.size() == 1) {
        uint64_t d = b.mag_[0], rem = 0;
        std::vector<uint32_t> qm(a.mag_.size(), 0);
        for (size_t i = a.mag_.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | a.mag_[i];
            qm[i] = (uint32_t)(cur / d);
            rem = cur % d;
        }
        q.mag_ = qm; q.sign_ = a.sign_ * b.sign_; q.trim();
        r = BigInt((long long)rem); if (r.sign_ != 0) r.sign_ = a.sign_;
        return;
    }
    // schoolbook bit-shift division for the multi-limb case; operand sizes here
    // stay small so this is not a bottleneck
    BigInt ra; ra.sign_ = 1; ra.mag_ = a.mag_;
    BigInt rb; rb.sign_ = 1; rb.mag_ = b.mag_;
    size_t abits = ra.mag_.size() * 32;
    BigInt quo;
    BigInt rem;
    for (size_t i = abits; i-- > 0;) {
        // rem = rem*2 + bit i of |a|
        rem = rem + rem;
        if ((ra.mag_[i / 32] >> (i % 32)) & 1u) rem = rem + BigInt(1);
        quo = quo + quo;
        if (!(rem < rb)) { rem = rem - rb; quo = quo + BigInt(1); }
    }
    q = quo; if (q.sign_ != 0) q.sign_ = a.sign_ * b.sign_;
    r = rem; if (r.sign_ != 0) r.sign_ = a.sign_;
}

bool BigInt::divide_exact(const BigInt& b, BigInt& q) const {
    BigInt r;
    divrem(*this, b, q, r);
    return r.is_zero();
}

bool BigInt::fits_ll() const {
    if (mag_.size() > 2) return false;
    if (mag_.size() < 2) return true;
    uint64_t v = ((uint64_t)mag_[1] << 32) | mag_[0];
    if (sign_ > 0) return v <= 0x7fffffffffffffffull;
    return v <= 0x8000000000000000ull;
}

long long BigInt::to_ll() const {
    assert(fits_ll());
    uint64_t v = 0;
    if (mag_.size() > 0) v |= mag_[0];
    if (mag_.size() > 1) v |= (uint64_t)mag_[1] << 32;
    return sign_ < 0 ? -(long long)v : (long long)v;
}

std::string BigInt::to_string() const {
    if (sign_ == 0) return "0";
    BigInt t; t.sign_ = 1; t.mag_ = mag_;
    const BigInt chunk(1000000000);
    std::string out;
    std::vector<uint32_t> parts;
    while (!t.is_zero()) {
        BigInt q, r;
        divrem(t, chunk, q, r);
        parts.push_back(r.is_zero() ? 0u : (uint32_t)r.to_ll());
        t = q;
    }
    out = std::to_string(parts.back());
    for (size_t i = parts.size() - 1; i-- > 0;) {
        std::string p = std::to_string(parts[i]);
        out += std::string(9 - p.size(), '0') + p;
    }
    return sign_ < 0 ? "-" + out : out;
}

BigInt BigInt::pow(const BigInt& base, unsigned e) {
    BigInt r(1), b = base;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

BigInt BigInt::binomial(unsigned n, unsigned k) {
    if (k > n) return BigInt(0);
    if (k > n - k) k = n - k;
    BigInt r(1);
    for (unsigned i = 1; i <= k; ++i) {
        r = r * BigInt((long long)(n - k + i));
        BigInt q, rem;
        divrem(r, BigInt((long long)i), q, rem);
        r = q;  // always exact at this point
    }
    return r;
}

BigInt BigInt::factorial(unsigned n) {
    BigInt r(1);
    for (unsigned i = 2; i <= n; ++i) r = r * BigInt((long long)i);
    return r;
}

size_t BigInt::hash() const {
    size_t h = (size_t)(sign_ + 1) * 1099511628211ull;
    for (uint32_t w : mag_) h = (h ^ w) * 1099511628211ull;
    return h;
}

} // namespace lym
