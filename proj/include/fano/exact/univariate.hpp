#pragma once

#include "fano/exact/multipoly.hpp"
#include "fano/exact/rational.hpp"

#include <complex>
#include <vector>

namespace fano {

/// Dense univariate polynomial over Q, coefficients from the constant term upward.
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);

    static UniPoly from_multi(const MultiPoly& p, int var);
    MultiPoly to_multi(int nvars, int var) const;

    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    const Rational& leading() const { return c_.back(); }

    UniPoly derivative() const;
    UniPoly monic() const;
    UniPoly operator+(const UniPoly& q) const;
    UniPoly operator-(const UniPoly& q) const;
    UniPoly operator*(const UniPoly& q) const;
    /// Euclidean division; returns {quotient, remainder}.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& q) const;
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    Rational evaluate(const Rational& x) const;
    std::complex<double> evaluate(std::complex<double> x) const;

    bool is_squarefree() const;
    /// p / gcd(p, p'), monic.
    UniPoly squarefree_part() const;

  private:
    void trim();
    std::vector<Rational> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(UniPoly a, UniPoly b);

}  // namespace fano
