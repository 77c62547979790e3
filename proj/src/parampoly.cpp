#include "lym/parampoly.hpp"

#include <stdexcept>

namespace lym {

const char* param_name(int id) {
    static const char* names[N_PARAMS] = {
        "lambda", "mu", "y1", "y2", "y3", "y4", "y5", "y6", "y7", "y8", "x0"};
    return names[id];
}

static ParamExp zero_exp() {
    ParamExp e{};
    e.fill(0);
    return e;
}

ParamPoly::ParamPoly(long long c) {
    if (c != 0) terms_[zero_exp()] = BigInt(c);
}

ParamPoly::ParamPoly(const BigInt& c) {
    if (!c.is_zero()) terms_[zero_exp()] = c;
}

ParamPoly ParamPoly::param(int id, int exp) {
    ParamPoly p;
    ParamExp e = zero_exp();
    e[id] = (int16_t)exp;
    p.terms_[e] = BigInt(1);
    return p;
}

ParamPoly ParamPoly::monomial(const BigInt& c, const ParamExp& e) {
    ParamPoly p;
    if (!c.is_zero()) p.terms_[e] = c;
    return p;
}

bool ParamPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == zero_exp() && terms_.begin()->second.is_one();
}

bool ParamPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == zero_exp());
}

BigInt ParamPoly::constant_term() const {
    auto it = terms_.find(zero_exp());
    return it == terms_.end() ? BigInt() : it->second;
}

void ParamPoly::insert(const ParamExp& e, const BigInt& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_[e] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

ParamPoly ParamPoly::operator+(const ParamPoly& o) const {
    ParamPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.insert(e, c);
    return r;
}

ParamPoly ParamPoly::operator-(const ParamPoly& o) const {
    ParamPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.insert(e, -c);
    return r;
}

ParamPoly ParamPoly::operator*(const ParamPoly& o) const {
    ParamPoly r;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            ParamExp e;
            for (int i = 0; i < N_PARAMS; ++i) e[i] = (int16_t)(ea[i] + eb[i]);
            r.insert(e, ca * cb);
        }
    return r;
}

// Leading-term elimination in the std::map (lex) order. Exact division over an
// integral domain succeeds iff every intermediate leading term divides.
std::optional<ParamPoly> ParamPoly::exact_div(const ParamPoly& d) const {
    if (d.is_zero()) throw std::domain_error("ParamPoly: division by zero");
    ParamPoly r = *this, q;
    auto lt_d = *d.terms_.rbegin();
    while (!r.is_zero()) {
        auto lt_r = *r.terms_.rbegin();
        ParamExp e;
        for (int i = 0; i < N_PARAMS; ++i) {
            e[i] = (int16_t)(lt_r.first[i] - lt_d.first[i]);
            if (e[i] < 0) return std::nullopt;
        }
        BigInt c;
        if (!lt_r.second.divide_exact(lt_d.second, c)) return std::nullopt;
        ParamPoly t = ParamPoly::monomial(c, e);
        q += t;
        r = r - t * d;
    }
    return q;
}

bool ParamPoly::uses_param(int id) const {
    for (const auto& [e, c] : terms_)
        if (e[id] != 0) return true;
    return false;
}

ParamPoly ParamPoly::eval(const std::array<long long, N_PARAMS>& assignment,
                          const std::array<bool, N_PARAMS>& assigned) const {
    ParamPoly r;
    for (const auto& [e, c] : terms_) {
        BigInt v = c;
        for (int i = 0; i < N_PARAMS; ++i) {
            if (e[i] == 0) continue;
            if (!assigned[i])
                throw std::invalid_argument(std::string("unassigned parameter ") + param_name(i));
            v = v * BigInt::pow(BigInt(assignment[i]), (unsigned)e[i]);
        }
        r.insert(zero_exp(), v);
    }
    return r;
}

std::string ParamPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    // print from the lex-largest term down, matching the division order
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        BigInt a = c.sign() < 0 ? -c : c;
        std::string t;
        for (int i = 0; i < N_PARAMS; ++i) {
            if (e[i] == 0) continue;
            if (!t.empty()) t += "*";
            t += param_name(i);
            if (e[i] != 1) t += "^" + std::to_string(e[i]);
        }
        std::string body;
        if (t.empty()) body = a.to_string();
        else if (a.is_one()) body = t;
        else body = a.to_string() + "*" + t;
        if (out.empty()) out = (c.sign() < 0 ? "-" : "") + body;
        else out += (c.sign() < 0 ? " - " : " + ") + body;
    }
    return out;
}

size_t ParamPoly::hash() const {
    size_t h = 14695981039346656037ull;
    for (const auto& [e, c] : terms_) {
        for (int i = 0; i < N_PARAMS; ++i) h = (h ^ (size_t)(uint16_t)e[i]) * 1099511628211ull;
        h = (h ^ c.hash()) * 1099511628211ull;
    }
    return h;
}

} // namespace lym
