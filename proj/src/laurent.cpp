#include "lym/laurent.hpp"

#include <algorithm>
#include <stdexcept>

namespace lym {

LaurentPoly::LaurentPoly(int dim, long long c) : dim_(dim) {
    if (c != 0) terms_[Exp(dim, 0)] = ParamPoly(c);
}

LaurentPoly LaurentPoly::constant(int dim, const ParamPoly& c) {
    LaurentPoly p(dim);
    if (!c.is_zero()) p.terms_[Exp(dim, 0)] = c;
    return p;
}

LaurentPoly LaurentPoly::variable(int dim, int i, int exp) {
    LaurentPoly p(dim);
    Exp e(dim, 0);
    e[i] = exp;
    p.terms_[e] = ParamPoly(1);
    return p;
}

LaurentPoly LaurentPoly::monomial(int dim, const Exp& e, const ParamPoly& c) {
    LaurentPoly p(dim);
    if (!c.is_zero()) p.terms_[e] = c;
    return p;
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == Exp(dim_, 0) && terms_.begin()->second.is_one();
}

void LaurentPoly::check_dim(const LaurentPoly& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("LaurentPoly: dimension mismatch");
}

void LaurentPoly::insert(const Exp& e, const ParamPoly& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_[e] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(dim_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    check_dim(o);
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.insert(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    check_dim(o);
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.insert(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    check_dim(o);
    LaurentPoly r(dim_);
    Exp e(dim_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            for (int i = 0; i < dim_; ++i) e[i] = ea[i] + eb[i];
            r.insert(e, ca * cb);
        }
    return r;
}

LaurentPoly LaurentPoly::scaled(const ParamPoly& c) const {
    LaurentPoly r(dim_);
    if (c.is_zero()) return r;
    for (const auto& [e, t] : terms_) r.terms_[e] = t * c;
    return r;
}

LaurentPoly LaurentPoly::shifted(const Exp& s) const {
    LaurentPoly r(dim_);
    Exp e(dim_);
    for (const auto& [ea, c] : terms_) {
        for (int i = 0; i < dim_; ++i) e[i] = ea[i] + s[i];
        r.terms_[e] = c;
    }
    return r;
}

LaurentPoly LaurentPoly::pow(const LaurentPoly& base, unsigned e) {
    LaurentPoly r(base.dim(), 1), b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

Exp LaurentPoly::min_exponents() const {
    Exp m(dim_, 0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first) { m = e; first = false; continue; }
        for (int i = 0; i < dim_; ++i) m[i] = std::min(m[i], e[i]);
    }
    return m;
}

std::optional<LaurentPoly> LaurentPoly::exact_div(const LaurentPoly& den) const {
    check_dim(den);
    if (den.is_zero()) throw std::domain_error("LaurentPoly: division by zero polynomial");
    if (is_zero()) return LaurentPoly(dim_);

    // shift both operands so all exponents are >= 0
    Exp mn = min_exponents(), md = den.min_exponents();
    Exp neg_mn(dim_), neg_md(dim_);
    for (int i = 0; i < dim_; ++i) { neg_mn[i] = -mn[i]; neg_md[i] = -md[i]; }
    LaurentPoly num_s = shifted(neg_mn);
    LaurentPoly den_s = den.shifted(neg_md);

    LaurentPoly q(dim_), r = num_s;
    const auto lt_d = *den_s.terms_.rbegin();
    Exp e(dim_);
    while (!r.is_zero()) {
        const auto lt_r = *r.terms_.rbegin();
        for (int i = 0; i < dim_; ++i) {
            e[i] = lt_r.first[i] - lt_d.first[i];
            if (e[i] < 0) return std::nullopt;
        }
        auto c = lt_r.second.exact_div(lt_d.second);
        if (!c) return std::nullopt;
        LaurentPoly t = LaurentPoly::monomial(dim_, e, *c);
        q += t;
        r -= t * den_s;
    }
    // undo the shifts: this = z^mn num_s, den = z^md den_s
    Exp adj(dim_);
    for (int i = 0; i < dim_; ++i) adj[i] = mn[i] - md[i];
    return q.shifted(adj);
}

LaurentFraction LaurentPoly::substitute(const std::vector<LaurentFraction>& images) const {
    if ((int)images.size() != dim_)
        throw std::invalid_argument("substitute: need one image per variable");
    int out_dim = images.empty() ? 0 : images[0].dim();
    LaurentFraction acc{LaurentPoly(out_dim)};
    for (const auto& [e, c] : terms_) {
        LaurentFraction t(LaurentPoly::constant(out_dim, c));
        for (int i = 0; i < dim_; ++i) {
            if (e[i] == 0) continue;
            t = t * LaurentFraction::pow(images[i], e[i]);
        }
        acc = acc + t;
    }
    return acc;
}

LaurentPoly LaurentPoly::param_eval(const std::array<long long, N_PARAMS>& assignment,
                                    const std::array<bool, N_PARAMS>& assigned) const {
    LaurentPoly r(dim_);
    for (const auto& [e, c] : terms_) r.insert(e, c.eval(assignment, assigned));
    return r;
}

bool LaurentPoly::has_params() const {
    for (const auto& [e, c] : terms_)
        if (!c.is_constant()) return true;
    return false;
}

ParamPoly LaurentPoly::constant_coefficient() const {
    auto it = terms_.find(Exp(dim_, 0));
    return it == terms_.end() ? ParamPoly() : it->second;
}

std::string LaurentPoly::to_string(const std::vector<std::string>& var_names) const {
    if (terms_.empty()) return "0";
    auto var = [&](int i) {
        return i < (int)var_names.size() ? var_names[i] : "z" + std::to_string(i + 1);
    };
    std::string out;
    for (const auto& [e, c] : terms_) {
        std::string mono;
        for (int i = 0; i < dim_; ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += var(i);
            if (e[i] != 1) mono += "^" + std::to_string(e[i]);
        }
        std::string cs = c.to_string();
        bool wrap = c.terms().size() > 1 && !mono.empty();
        std::string body;
        if (mono.empty()) body = wrap ? "(" + cs + ")" : cs;
        else if (cs == "1") body = mono;
        else if (cs == "-1") body = "-" + mono;
        else body = (wrap ? "(" + cs + ")" : cs) + "*" + mono;
        if (out.empty()) out = body;
        else if (!body.empty() && body[0] == '-') out += " - " + body.substr(1);
        else out += " + " + body;
    }
    return out;
}

// ---- LaurentFraction ----

void LaurentFraction::push_den(const LaurentPoly& f, int power) {
    if (f.is_zero()) throw std::domain_error("LaurentFraction: zero denominator factor");
    if (power <= 0) throw std::invalid_argument("LaurentFraction: denominator power must be positive");
    if (f.is_one()) return;
    for (auto& [g, k] : den_)
        if (g == f) { k += power; return; }
    den_.push_back({f, power});
}

LaurentPoly LaurentFraction::den_product() const {
    LaurentPoly p(num_.dim(), 1);
    for (const auto& [f, k] : den_) p *= LaurentPoly::pow(f, (unsigned)k);
    return p;
}

LaurentFraction LaurentFraction::operator*(const LaurentFraction& o) const {
    LaurentFraction r(num_ * o.num_);
    for (const auto& [f, k] : den_) r.push_den(f, k);
    for (const auto& [f, k] : o.den_) r.push_den(f, k);
    return r;
}

LaurentFraction LaurentFraction::operator+(const LaurentFraction& o) const {
    // common denominator by union with max powers
    LaurentFraction r{LaurentPoly(num_.dim())};
    std::vector<std::pair<LaurentPoly, int>> common = den_;
    for (const auto& [f, k] : o.den_) {
        bool found = false;
        for (auto& [g, m] : common)
            if (g == f) { m = std::max(m, k); found = true; break; }
        if (!found) common.push_back({f, k});
    }
    auto lift = [&](const LaurentFraction& x) {
        LaurentPoly n = x.num_;
        for (const auto& [f, k] : common) {
            int have = 0;
            for (const auto& [g, m] : x.den_)
                if (g == f) { have = m; break; }
            if (k > have) n *= LaurentPoly::pow(f, (unsigned)(k - have));
        }
        return n;
    };
    r.num_ = lift(*this) + lift(o);
    r.den_ = common;
    return r;
}

LaurentFraction LaurentFraction::operator-(const LaurentFraction& o) const {
    LaurentFraction neg(-o.num_);
    neg.den_ = o.den_;
    return *this + neg;
}

LaurentFraction LaurentFraction::inverse() const {
    if (num_.is_zero()) throw std::domain_error("LaurentFraction: inverse of zero");
    LaurentFraction r(den_product());
    r.push_den(num_, 1);
    return r;
}

LaurentFraction LaurentFraction::pow(const LaurentFraction& base, int e) {
    if (e < 0) return pow(base.inverse(), -e);
    LaurentFraction r = LaurentFraction(LaurentPoly(base.dim(), 1));
    LaurentFraction b = base;
    unsigned u = (unsigned)e;
    while (u) {
        if (u & 1) r = r * b;
        b = b * b;
        u >>= 1;
    }
    return r;
}

bool LaurentFraction::equals(const LaurentFraction& o) const {
    return num_ * o.den_product() == o.num_ * den_product();
}

std::optional<LaurentPoly> LaurentFraction::to_laurent() const {
    LaurentPoly r = num_;
    for (const auto& [f, k] : den_)
        for (int i = 0; i < k; ++i) {
            auto q = r.exact_div(f);
            if (!q) return std::nullopt;
            r = *q;
        }
    return r;
}

std::string LaurentFraction::to_string(const std::vector<std::string>& var_names) const {
    std::string out = "(" + num_.to_string(var_names) + ")";
    for (const auto& [f, k] : den_) {
        out += " / (" + f.to_string(var_names) + ")";
        if (k != 1) out += "^" + std::to_string(k);
    }
    return out;
}

} // namespace lym
