#include "poly.hpp"

#include <algorithm>
#include <sstream>

namespace skein {

LaurentPoly LaurentPoly::zero(std::vector<std::string> variables) {
    return LaurentPoly(std::move(variables));
}

LaurentPoly LaurentPoly::constant(std::vector<std::string> variables, Int c) {
    LaurentPoly p(std::move(variables));
    p.insert_term(Exponents(p.variables_.size(), 0), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(std::vector<std::string> variables, Exponents exps, Int c) {
    LaurentPoly p(std::move(variables));
    if (exps.size() != p.variables_.size())
        throw std::invalid_argument("monomial: exponent vector length mismatch");
    p.insert_term(exps, c);
    return p;
}

LaurentPoly LaurentPoly::variable(const std::vector<std::string>& variables,
                                  const std::string& name) {
    auto it = std::find(variables.begin(), variables.end(), name);
    if (it == variables.end())
        throw std::invalid_argument("variable '" + name + "' not in variable list");
    Exponents e(variables.size(), 0);
    e[static_cast<size_t>(it - variables.begin())] = 1;
    return monomial(variables, e, 1);
}

LaurentPoly LaurentPoly::univariate(const std::string& name,
                                    const std::vector<std::pair<int, Int>>& terms) {
    LaurentPoly p(std::vector<std::string>{name});
    for (const auto& [e, c] : terms)
        p.insert_term(Exponents{e}, c);
    return p;
}

bool LaurentPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Int LaurentPoly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Int(0) : it->second;
}

void LaurentPoly::insert_term(const Exponents& e, const Int& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(variables_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

namespace {

// add/sub admit a zero polynomial with a foreign variable list
const LaurentPoly* align(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.variables() == b.variables()) return nullptr;
    if (a.is_zero() || b.is_zero()) return a.is_zero() ? &b : &a;
    throw std::invalid_argument("mismatched variable lists");
}

} // namespace

LaurentPoly LaurentPoly::operator+(const LaurentPoly& rhs) const {
    if (const LaurentPoly* nz = align(*this, rhs)) {
        if (nz == &rhs) return rhs;
        return *this;
    }
    LaurentPoly r = *this;
    for (const auto& [e, c] : rhs.terms_) r.insert_term(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& rhs) const {
    return *this + (-rhs);
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& rhs) const {
    if (variables_ != rhs.variables_) {
        if (is_zero()) return LaurentPoly::zero(rhs.variables_);
        if (rhs.is_zero()) return LaurentPoly::zero(variables_);
        throw std::invalid_argument("mismatched variable lists");
    }
    LaurentPoly r(variables_);
    Exponents e(variables_.size());
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.insert_term(e, ca * cb);
        }
    }
    return r;
}

LaurentPoly LaurentPoly::inverse() const {
    if (terms_.size() != 1)
        throw std::invalid_argument("inverse: not a monomial");
    const auto& [e, c] = *terms_.begin();
    if (c != 1 && c != -1)
        throw std::invalid_argument("inverse: coefficient is not a unit");
    Exponents inv(e.size());
    for (size_t i = 0; i < e.size(); ++i) inv[i] = -e[i];
    return monomial(variables_, inv, c);
}

LaurentPoly LaurentPoly::pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    LaurentPoly acc = constant(variables_, 1);
    LaurentPoly base = *this;
    for (long b = k; b > 0; b >>= 1) {
        if (b & 1) acc *= base;
        if (b > 1) base *= base;
    }
    return acc;
}

bool LaurentPoly::operator==(const LaurentPoly& rhs) const {
    if (terms_.empty() && rhs.terms_.empty()) return true;
    return variables_ == rhs.variables_ && terms_ == rhs.terms_;
}

bool LaurentPoly::operator<(const LaurentPoly& rhs) const {
    if (variables_ != rhs.variables_) return variables_ < rhs.variables_;
    return terms_ < rhs.terms_;
}

LaurentPoly LaurentPoly::substitute(const std::map<std::string, LaurentPoly>& bindings) const {
    if (variables_.empty() || terms_.empty()) {
        // target variables come from any binding, or stay empty
        std::vector<std::string> target =
            bindings.empty() ? variables_ : bindings.begin()->second.variables();
        LaurentPoly r(target);
        for (const auto& [e, c] : terms_) r.insert_term(Exponents(target.size(), 0), c);
        return r;
    }
    std::vector<const LaurentPoly*> values;
    values.reserve(variables_.size());
    for (const auto& v : variables_) {
        auto it = bindings.find(v);
        if (it == bindings.end())
            throw std::invalid_argument("substitute: unbound variable '" + v + "'");
        values.push_back(&it->second);
    }
    const std::vector<std::string>& target = values.front()->variables();
    for (const LaurentPoly* p : values)
        if (p->variables() != target)
            throw std::invalid_argument("substitute: bindings disagree on target variables");

    LaurentPoly r = LaurentPoly::zero(target);
    for (const auto& [e, c] : terms_) {
        LaurentPoly term = LaurentPoly::constant(target, c);
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (e[i] < 0 && !values[i]->is_monomial())
                throw std::invalid_argument(
                    "substitute: negative exponent applied to a non-monomial binding");
            term *= values[i]->pow(e[i]);
        }
        r += term;
    }
    return r;
}

LaurentPoly LaurentPoly::with_variables(const std::vector<std::string>& superset) const {
    std::vector<size_t> where(variables_.size());
    for (size_t i = 0; i < variables_.size(); ++i) {
        auto it = std::find(superset.begin(), superset.end(), variables_[i]);
        if (it == superset.end())
            throw std::invalid_argument("with_variables: missing '" + variables_[i] + "'");
        where[i] = static_cast<size_t>(it - superset.begin());
    }
    LaurentPoly r(superset);
    for (const auto& [e, c] : terms_) {
        Exponents ne(superset.size(), 0);
        for (size_t i = 0; i < e.size(); ++i) ne[where[i]] = e[i];
        r.insert_term(ne, c);
    }
    return r;
}

LaurentPoly LaurentPoly::map_coeffs(const std::function<Int(const Int&)>& f) const {
    LaurentPoly r(variables_);
    for (const auto& [e, c] : terms_) r.insert_term(e, f(c));
    return r;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Int a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        std::string factors;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!factors.empty()) factors += "*";
            factors += variables_[i];
            if (e[i] != 1) factors += "^" + std::to_string(e[i]);
        }
        if (factors.empty()) {
            os << a;
        } else {
            if (a != 1) os << a << "*";
            os << factors;
        }
    }
    return os.str();
}

LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw std::invalid_argument("divide_exact: zero divisor");
    if (num.is_zero()) return num;
    if (num.variables() != den.variables() || num.variables().size() != 1)
        throw std::invalid_argument("divide_exact: one-variable polynomials required");

    // shift both to ordinary polynomials
    int nmin = num.terms().begin()->first[0];
    int dmin = den.terms().begin()->first[0];
    int nmax = num.terms().rbegin()->first[0];
    int dmax = den.terms().rbegin()->first[0];

    std::vector<Int> n(static_cast<size_t>(nmax - nmin) + 1, Int(0));
    std::vector<Int> d(static_cast<size_t>(dmax - dmin) + 1, Int(0));
    for (const auto& [e, c] : num.terms()) n[static_cast<size_t>(e[0] - nmin)] = c;
    for (const auto& [e, c] : den.terms()) d[static_cast<size_t>(e[0] - dmin)] = c;

    if (n.size() < d.size()) throw std::invalid_argument("divide_exact: not divisible");
    std::vector<Int> q(n.size() - d.size() + 1, Int(0));
    for (size_t i = q.size(); i-- > 0;) {
        Int lead = n[i + d.size() - 1];
        if (lead == 0) continue;
        if (lead % d.back() != 0) throw std::invalid_argument("divide_exact: not divisible");
        q[i] = lead / d.back();
        for (size_t j = 0; j < d.size(); ++j) n[i + j] -= q[i] * d[j];
    }
    for (const Int& c : n)
        if (c != 0) throw std::invalid_argument("divide_exact: remainder is nonzero");

    LaurentPoly r(num.variables());
    int shift = nmin - dmin;
    for (size_t i = 0; i < q.size(); ++i)
        r.insert_term({static_cast<int>(i) + shift}, q[i]);
    return r;
}

LaurentPoly loop_value() {
    return LaurentPoly::univariate("A", {{2, -1}, {-2, -1}});
}

CyclotomicValue CyclotomicValue::zeta_pow(long e) {
    long m = ((e % 6) + 6) % 6;
    switch (m) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        case 2: return {-1, 1};  // zeta^2 = zeta - 1
        case 3: return {-1, 0};
        case 4: return {0, -1};
        default: return {1, -1}; // zeta^5 = 1 - zeta
    }
}

CyclotomicValue CyclotomicValue::operator+(const CyclotomicValue& rhs) const {
    return {u_ + rhs.u_, w_ + rhs.w_};
}

CyclotomicValue CyclotomicValue::operator-(const CyclotomicValue& rhs) const {
    return {u_ - rhs.u_, w_ - rhs.w_};
}

CyclotomicValue CyclotomicValue::operator*(const CyclotomicValue& rhs) const {
    // (u1 + w1 z)(u2 + w2 z) with z^2 = z - 1
    return {u_ * rhs.u_ - w_ * rhs.w_, u_ * rhs.w_ + w_ * rhs.u_ + w_ * rhs.w_};
}

CyclotomicValue CyclotomicValue::conjugate() const {
    return {u_ + w_, -w_};
}

Rational CyclotomicValue::norm() const {
    return u_ * u_ + u_ * w_ + w_ * w_;
}

CyclotomicValue eval_zeta6(const LaurentPoly& p) {
    if (p.variables().size() > 1)
        throw std::invalid_argument("eval_zeta6: one-variable polynomial required");
    CyclotomicValue acc;
    for (const auto& [e, c] : p.terms()) {
        CyclotomicValue coeff(Rational(c), Rational(0));
        acc = acc + coeff * CyclotomicValue::zeta_pow(e.empty() ? 0 : e[0]);
    }
    return acc;
}

} // namespace skein
