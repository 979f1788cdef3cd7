#ifndef SKEIN_POLY_HPP
#define SKEIN_POLY_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace skein {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Sparse Laurent polynomial with exact integer coefficients in a fixed,
// ordered list of named variables.  Terms are kept in lexicographic order
// on exponent vectors and never store a zero coefficient.
class LaurentPoly {
public:
    using Exponents = std::vector<int>;
    using TermMap = std::map<Exponents, Int>;

    LaurentPoly() = default;
    explicit LaurentPoly(std::vector<std::string> variables)
        : variables_(std::move(variables)) {}

    static LaurentPoly zero(std::vector<std::string> variables);
    static LaurentPoly constant(std::vector<std::string> variables, Int c);
    static LaurentPoly monomial(std::vector<std::string> variables, Exponents exps, Int c);
    static LaurentPoly variable(const std::vector<std::string>& variables,
                                const std::string& name);
    // Convenience for one-variable polynomials: pairs of (exponent, coefficient).
    static LaurentPoly univariate(const std::string& name,
                                  const std::vector<std::pair<int, Int>>& terms);

    const std::vector<std::string>& variables() const { return variables_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_constant() const;
    Int coeff(const Exponents& e) const;

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& rhs) const;
    LaurentPoly operator-(const LaurentPoly& rhs) const;
    LaurentPoly operator*(const LaurentPoly& rhs) const;
    LaurentPoly& operator+=(const LaurentPoly& rhs) { return *this = *this + rhs; }
    LaurentPoly& operator-=(const LaurentPoly& rhs) { return *this = *this - rhs; }
    LaurentPoly& operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }

    // Negative powers require an invertible (single term, coefficient +-1) base.
    LaurentPoly pow(long k) const;
    LaurentPoly inverse() const;

    bool operator==(const LaurentPoly& rhs) const;
    bool operator!=(const LaurentPoly& rhs) const { return !(*this == rhs); }
    // Total order usable as a map key (variables, then terms).
    bool operator<(const LaurentPoly& rhs) const;

    // Exact composition: every variable must be bound; all binding values share
    // one target variable list.  A negative exponent on a non-invertible
    // binding is an error.
    LaurentPoly substitute(const std::map<std::string, LaurentPoly>& bindings) const;

    // Reinterpret the polynomial over a superset of its variables.
    LaurentPoly with_variables(const std::vector<std::string>& superset) const;

    // Apply a function to every coefficient (dropping zeros); used for
    // reduction mod m in the universal-coefficient checks.
    LaurentPoly map_coeffs(const std::function<Int(const Int&)>& f) const;

    std::string to_string() const;

private:
    void insert_term(const Exponents& e, const Int& c);

    std::vector<std::string> variables_;
    TermMap terms_;

    friend LaurentPoly divide_exact(const LaurentPoly&, const LaurentPoly&);
};

// Exact division of one-variable Laurent polynomials; throws if the division
// leaves a remainder.
LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den);

// The loop value delta = -A^2 - A^{-2} of the Kauffman bracket relation.
LaurentPoly loop_value();

// Element of Z[zeta] (extended to rationals) where zeta = e^{i pi/3},
// reduced by zeta^2 = zeta - 1.  Stored as u + w*zeta.
class CyclotomicValue {
public:
    CyclotomicValue() = default;
    CyclotomicValue(Rational u, Rational w) : u_(std::move(u)), w_(std::move(w)) {}

    static CyclotomicValue zeta_pow(long e);

    const Rational& u() const { return u_; }
    const Rational& w() const { return w_; }

    CyclotomicValue operator+(const CyclotomicValue& rhs) const;
    CyclotomicValue operator-(const CyclotomicValue& rhs) const;
    CyclotomicValue operator*(const CyclotomicValue& rhs) const;

    CyclotomicValue conjugate() const;
    // |u + w zeta|^2 = u^2 + uw + w^2, exactly.
    Rational norm() const;

    bool operator==(const CyclotomicValue& rhs) const = default;

private:
    Rational u_ = 0;
    Rational w_ = 0;
};

// Exact evaluation of a one-variable Laurent polynomial at zeta = e^{i pi/3}.
CyclotomicValue eval_zeta6(const LaurentPoly& p);

} // namespace skein

#endif
