#pragma once

#include "graphpoly/rational.hpp"

#include <nlohmann/json_fwd.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace graphpoly {

// Orders exponent vectors graded-lexicographically, highest first. This is
// the canonical term order used for every serialisation of a polynomial.
struct GradedLexDescending {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

// Sparse multivariate polynomial with exact rational coefficients.
//
// Invariants: vars() is sorted and duplicate-free, every stored exponent
// vector has vars().size() entries, no stored coefficient is zero, and no
// variable is carried unless some term uses it. Two polynomials compare
// equal exactly when they are the same polynomial.
class MultiPoly {
public:
    using TermMap = std::map<std::vector<int>, Rational, GradedLexDescending>;

    MultiPoly() = default;
    explicit MultiPoly(const Rational& constant);

    static MultiPoly variable(const std::string& name);
    // coef * v1^e1 * ... over the given variables (unsorted input is fine).
    static MultiPoly monomial(const Rational& coef,
                              const std::vector<std::pair<std::string, int>>& powers);

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int total_degree() const; // -1 for the zero polynomial

    Rational coefficient(const std::vector<std::pair<std::string, int>>& powers) const;

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& rhs) const;
    MultiPoly operator-(const MultiPoly& rhs) const;
    MultiPoly operator*(const MultiPoly& rhs) const;
    MultiPoly& operator+=(const MultiPoly& rhs);
    MultiPoly& operator-=(const MultiPoly& rhs);
    MultiPoly& operator*=(const MultiPoly& rhs);
    MultiPoly operator*(const Rational& scalar) const;
    MultiPoly pow(int exponent) const;

    bool operator==(const MultiPoly& rhs) const;
    bool operator!=(const MultiPoly& rhs) const { return !(*this == rhs); }

    // Replaces a variable by a polynomial. Unknown variables are a no-op.
    MultiPoly substitute(const std::string& var, const MultiPoly& replacement) const;
    MultiPoly substitute(const std::string& var, const Rational& value) const;

    // Full evaluation; throws DomainError("unbound variable") if a used
    // variable has no binding. Extra bindings are ignored.
    Rational evaluate(const std::map<std::string, Rational>& bindings) const;

    // Canonical text form, e.g. "x^2 + x + y", "-48*p^3 + 18*p^2", "0".
    std::string str() const;
    static MultiPoly parse(const std::string& text);

    nlohmann::json to_json() const;
    static MultiPoly from_json(const nlohmann::json& j);

private:
    std::vector<std::string> vars_;
    TermMap terms_;

    void add_term(const std::vector<int>& exp, const Rational& coef);
    void normalise();
    MultiPoly reindexed(const std::vector<std::string>& new_vars) const;

    friend MultiPoly aligned_combine(const MultiPoly& a, const MultiPoly& b, bool subtract);
};

inline MultiPoly operator*(const Rational& scalar, const MultiPoly& p) { return p * scalar; }
inline MultiPoly operator+(const MultiPoly& p, const Rational& c) { return p + MultiPoly{c}; }
inline MultiPoly operator+(const Rational& c, const MultiPoly& p) { return MultiPoly{c} + p; }
inline MultiPoly operator-(const MultiPoly& p, const Rational& c) { return p - MultiPoly{c}; }
inline MultiPoly operator-(const Rational& c, const MultiPoly& p) { return MultiPoly{c} - p; }

// Unique interpolating polynomial in `var` through the given (abscissa,
// value) points. Throws DomainError on duplicate abscissae.
MultiPoly interpolate(const std::vector<std::pair<Rational, Rational>>& points,
                      const std::string& var);

} // namespace graphpoly
