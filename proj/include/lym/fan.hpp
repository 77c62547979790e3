#ifndef LYM_FAN_HPP
#define LYM_FAN_HPP

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

namespace lym {

// Exact rational with 64-bit numerator/denominator; intermediate products go
// through 128-bit. Values in the fan/polytope computations stay tiny.
struct Rat {
    long long n = 0, d = 1;

    Rat() = default;
    Rat(long long num) : n(num), d(1) {}
    Rat(long long num, long long den) : n(num), d(den) { normalize(); }

    void normalize() {
        if (d == 0) throw std::domain_error("Rat: zero denominator");
        if (d < 0) { n = -n; d = -d; }
        long long g = std::gcd(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        if (n == 0) d = 1;
    }
    static Rat make128(__int128 num, __int128 den) {
        if (den < 0) { num = -num; den = -den; }
        __int128 a = num < 0 ? -num : num, b = den;
        while (b) { __int128 t = a % b; a = b; b = t; }
        if (a > 1) { num /= a; den /= a; }
        if (num > INT64_MAX || num < INT64_MIN || den > INT64_MAX)
            throw std::overflow_error("Rat: overflow");
        Rat r; r.n = (long long)num; r.d = (long long)den;
        if (r.n == 0) r.d = 1;
        return r;
    }
    Rat operator+(const Rat& o) const { return make128((__int128)n * o.d + (__int128)o.n * d, (__int128)d * o.d); }
    Rat operator-(const Rat& o) const { return make128((__int128)n * o.d - (__int128)o.n * d, (__int128)d * o.d); }
    Rat operator*(const Rat& o) const { return make128((__int128)n * o.n, (__int128)d * o.d); }
    Rat operator/(const Rat& o) const { return make128((__int128)n * o.d, (__int128)d * o.n); }
    Rat operator-() const { Rat r; r.n = -n; r.d = d; return r; }
    bool operator==(const Rat& o) const { return n == o.n && d == o.d; }
    bool operator!=(const Rat& o) const { return !(*this == o); }
    bool operator<(const Rat& o) const { return (__int128)n * o.d < (__int128)o.n * d; }
    bool operator<=(const Rat& o) const { return (__int128)n * o.d <= (__int128)o.n * d; }
    bool operator>=(const Rat& o) const { return o <= *this; }
    bool operator>(const Rat& o) const { return o < *this; }
    bool is_integer() const { return d == 1; }
    bool is_zero() const { return n == 0; }
};

using Vec = std::vector<long long>;
using QVec = std::vector<Rat>;

inline long long dotll(const Vec& a, const Vec& b) {
    long long s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Vec cross3(const Vec& a, const Vec& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline Vec primitive(Vec v) {
    long long g = 0;
    for (long long c : v) g = std::gcd(g, c < 0 ? -c : c);
    if (g > 1)
        for (long long& c : v) c /= g;
    return v;
}

inline QVec to_q(const Vec& v) {
    QVec q;
    for (long long c : v) q.push_back(Rat(c));
    return q;
}

// Complete simplicial fan: labelled primitive rays plus maximal cones given by
// ray index lists (dim entries each).
struct Fan {
    int dim = 0;
    std::vector<Vec> rays;
    std::vector<std::vector<int>> cones;

    // Barycentric solve p = sum_i c_i ray_{cone[i]}; nullopt when some
    // coefficient is negative (p outside the closed cone).
    std::optional<QVec> cone_coords(int cone, const QVec& p) const;
    std::optional<int> find_cone(const QVec& p) const;
    std::vector<int> find_all_cones(const QVec& p) const;

    // Codimension-1 walls as sorted ray index pairs (3D) or single rays (2D),
    // each with its two adjacent maximal cones.
    struct WallAdj {
        std::vector<int> span;  // ray indices spanning the wall
        int cone_a = -1, cone_b = -1;
        int apex_a = -1, apex_b = -1;  // the ray of each cone not on the wall (3D)
    };
    std::vector<WallAdj> wall_adjacency() const;
};

// Exact solve of a dim x dim rational system by Cramer (dim 2 or 3).
std::optional<QVec> solve_linear(const std::vector<QVec>& cols, const QVec& rhs);

} // namespace lym

#endif
