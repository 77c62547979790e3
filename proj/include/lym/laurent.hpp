#ifndef LYM_LAURENT_HPP
#define LYM_LAURENT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lym/parampoly.hpp"

namespace lym {

class LaurentFraction;

using Exp = std::vector<int32_t>;

// Sparse Laurent polynomial in a fixed number of torus variables z1..zd with
// coefficients in Z[params]. Invariants: no zero coefficients stored, all
// exponent vectors have length dim. Terms are kept in lex order so that
// iteration, serialization and leading-term division are deterministic.
class LaurentPoly {
public:
    using Terms = std::map<Exp, ParamPoly>;

    LaurentPoly() : dim_(0) {}
    explicit LaurentPoly(int dim) : dim_(dim) {}
    LaurentPoly(int dim, long long c);

    static LaurentPoly constant(int dim, const ParamPoly& c);
    static LaurentPoly variable(int dim, int i, int exp = 1);
    static LaurentPoly monomial(int dim, const Exp& e, const ParamPoly& c);

    int dim() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_monomial() const { return terms_.size() == 1; }
    size_t term_count() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o) { *this = *this + o; return *this; }
    LaurentPoly& operator-=(const LaurentPoly& o) { *this = *this - o; return *this; }
    LaurentPoly& operator*=(const LaurentPoly& o) { *this = *this * o; return *this; }
    LaurentPoly scaled(const ParamPoly& c) const;
    LaurentPoly shifted(const Exp& e) const;  // multiply by z^e
    static LaurentPoly pow(const LaurentPoly& base, unsigned e);

    bool operator==(const LaurentPoly& o) const { return dim_ == o.dim_ && terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    // Exact division: returns q with q*den == *this if q exists as a Laurent
    // polynomial. Clears both operands to polynomial form by a monomial shift,
    // then eliminates leading terms under lex order; any failure along the way
    // certifies indivisibility. Monomial denominators always succeed.
    std::optional<LaurentPoly> exact_div(const LaurentPoly& den) const;

    // Evaluate at images[i] substituted for variable i. Negative exponents
    // invert the image, which requires a nonzero numerator.
    LaurentFraction substitute(const std::vector<LaurentFraction>& images) const;

    // Replace parameters by integers; zero terms dropped.
    LaurentPoly param_eval(const std::array<long long, N_PARAMS>& assignment,
                           const std::array<bool, N_PARAMS>& assigned) const;
    bool has_params() const;

    // coefficient of z^0
    ParamPoly constant_coefficient() const;
    Exp min_exponents() const;  // componentwise min over the support

    std::string to_string(const std::vector<std::string>& var_names = {}) const;

private:
    int dim_;
    Terms terms_;
    void insert(const Exp& e, const ParamPoly& c);
    void check_dim(const LaurentPoly& o) const;
};

// num / prod(factor_i ^ power_i), never reduced. Equality is decided by
// cross-multiplication, which is how every identity in the verification
// suites is checked.
class LaurentFraction {
public:
    LaurentFraction() = default;
    explicit LaurentFraction(const LaurentPoly& num) : num_(num) {}

    static LaurentFraction one(int dim) { return LaurentFraction(LaurentPoly(dim, 1)); }

    const LaurentPoly& num() const { return num_; }
    const std::vector<std::pair<LaurentPoly, int>>& den() const { return den_; }
    int dim() const { return num_.dim(); }
    bool is_zero() const { return num_.is_zero(); }

    void push_den(const LaurentPoly& f, int power);
    LaurentPoly den_product() const;

    LaurentFraction operator+(const LaurentFraction& o) const;
    LaurentFraction operator-(const LaurentFraction& o) const;
    LaurentFraction operator*(const LaurentFraction& o) const;
    LaurentFraction inverse() const;  // throws on zero numerator
    static LaurentFraction pow(const LaurentFraction& base, int e);

    // a/b == c/d  iff  a*d == c*b
    bool equals(const LaurentFraction& o) const;

    // Exact conversion to a Laurent polynomial by dividing out every
    // denominator factor; nullopt if some factor does not divide.
    std::optional<LaurentPoly> to_laurent() const;

    std::string to_string(const std::vector<std::string>& var_names = {}) const;

private:
    LaurentPoly num_;
    std::vector<std::pair<LaurentPoly, int>> den_;
};

} // namespace lym

#endif
