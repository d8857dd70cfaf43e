#pragma once

#include "fano/exact/monomial.hpp"
#include "fano/exact/rational.hpp"

#include <climits>
#include <complex>
#include <span>
#include <string>
#include <vector>

namespace fano {

struct Term {
    Monomial mono;
    Rational coeff;
};

/// Sparse multivariate polynomial over Q. Terms are unique, nonzero and kept sorted
/// by descending degrevlex order, so equality is structural.
class MultiPoly {
  public:
    static constexpr int kZeroDegree = INT_MIN;

    MultiPoly() = default;
    explicit MultiPoly(int nvars);

    static MultiPoly constant(int nvars, const Rational& c);
    static MultiPoly variable(int nvars, int index);
    static MultiPoly monomial(const Monomial& m, const Rational& c = 1);
    /// Combines duplicate monomials and drops zeros.
    static MultiPoly from_terms(int nvars, std::vector<Term> terms);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
    std::size_t size() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    /// Total degree; kZeroDegree for the zero polynomial.
    int degree() const;
    int degree_in(int var) const;
    bool is_homogeneous() const;
    Rational coefficient(const Monomial& m) const;
    const Term& leading_term(MonomialOrder order) const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& q);
    MultiPoly& operator-=(const MultiPoly& q);
    MultiPoly& operator*=(const Rational& c);
    friend MultiPoly operator+(MultiPoly p, const MultiPoly& q) { return p += q; }
    friend MultiPoly operator-(MultiPoly p, const MultiPoly& q) { return p -= q; }
    friend MultiPoly operator*(const MultiPoly& p, const MultiPoly& q);
    friend MultiPoly operator*(MultiPoly p, const Rational& c) { return p *= c; }
    friend MultiPoly operator*(const Rational& c, MultiPoly p) { return p *= c; }
    MultiPoly pow(unsigned k) const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b);
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    MultiPoly derivative(int var) const;
    /// Simultaneous substitution x_i -> images[i]; the result lives in the images' ring.
    MultiPoly substitute(std::span<const MultiPoly> images) const;
    /// Multiplies by a nonzero rational so the leading coefficient (in `order`) is 1.
    MultiPoly monic(MonomialOrder order) const;
    /// Scales to integer coefficients with gcd 1 and positive leading coefficient.
    MultiPoly primitive(MonomialOrder order = MonomialOrder::DegRevLex) const;

    std::complex<double> evaluate(std::span<const std::complex<double>> point) const;
    /// Largest coefficient magnitude as a double (0 for the zero polynomial).
    double max_abs_coeff() const;

  private:
    void check_ring(const MultiPoly& q) const;

    int nvars_ = 0;
    std::vector<Term> terms_;
};

/// Variable naming lives only at the text boundary.
struct VarNames {
    std::vector<std::string> names;

    static VarNames xyzt() { return {{"x", "y", "z", "t"}}; }
    static VarNames xyz() { return {{"x", "y", "z"}}; }
    static VarNames xy() { return {{"x", "y"}}; }
    int size() const { return static_cast<int>(names.size()); }
    int index_of(const std::string& name) const;
};

std::string to_string(const Monomial& m, const VarNames& names);
/// Canonical text form, e.g. "x^8 + 14*x^4*y^4 + y^8". Parses back to the same polynomial.
std::string to_string(const MultiPoly& p, const VarNames& names);

}  // namespace fano
