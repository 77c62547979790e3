#ifndef LYM_PARAMPOLY_HPP
#define LYM_PARAMPOLY_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "lym/bigint.hpp"

namespace lym {

// Global parameter namespace. Coefficients of every Laurent polynomial live in
// Z[lambda, mu, y1..y8, x0]; exponents are >= 0 (parameters are polynomial).
enum Param : int {
    P_LAMBDA = 0,
    P_MU = 1,
    P_Y1 = 2,  // y1..y8 occupy slots 2..9
    P_X0 = 10,
    N_PARAMS = 11,
};

const char* param_name(int id);

using ParamExp = std::array<int16_t, N_PARAMS>;

// Sparse polynomial in the global parameters with BigInt coefficients.
// Invariants: no stored zero coefficients, all exponents >= 0.
class ParamPoly {
public:
    using Terms = std::map<ParamExp, BigInt>;

    ParamPoly() = default;
    ParamPoly(long long c);
    ParamPoly(const BigInt& c);

    static ParamPoly param(int id, int exp = 1);
    // c * prod params[i]^exps[i]
    static ParamPoly monomial(const BigInt& c, const ParamExp& e);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    // constant term (coefficient of the all-zero exponent)
    BigInt constant_term() const;

    ParamPoly operator-() const;
    ParamPoly operator+(const ParamPoly& o) const;
    ParamPoly operator-(const ParamPoly& o) const;
    ParamPoly operator*(const ParamPoly& o) const;
    ParamPoly& operator+=(const ParamPoly& o) { *this = *this + o; return *this; }
    ParamPoly& operator*=(const ParamPoly& o) { *this = *this * o; return *this; }

    bool operator==(const ParamPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const ParamPoly& o) const { return !(*this == o); }

    // Exact division over Z[params]; nullopt if not divisible.
    std::optional<ParamPoly> exact_div(const ParamPoly& d) const;

    bool uses_param(int id) const;
    // Substitute integers for parameters. Every parameter that occurs must be
    // assigned (assignment[i] valid iff assigned[i]); throws otherwise.
    ParamPoly eval(const std::array<long long, N_PARAMS>& assignment,
                   const std::array<bool, N_PARAMS>& assigned) const;

    const Terms& terms() const { return terms_; }
    std::string to_string() const;

    size_t hash() const;

private:
    Terms terms_;
    void insert(const ParamExp& e, const BigInt& c);
};

} // namespace lym

#endif
