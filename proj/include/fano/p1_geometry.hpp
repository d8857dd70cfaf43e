#pragma once

#include "fano/exact/multipoly.hpp"
#include "fano/numeric/roots.hpp"

#include <Eigen/Dense>

#include <span>
#include <string>
#include <vector>

namespace fano {

inline constexpr double kDefaultTol = 1e-8;

/// A point [z : 1] or the point at infinity [1 : 0].
struct PointP1 {
    bool at_infinity = false;
    Complex value{};

    static PointP1 finite(Complex z) { return {false, z}; }
    static PointP1 infinity() { return {true, {}}; }
    /// Homogeneous coordinates of unit norm.
    Eigen::Vector2cd homogeneous() const;
    static PointP1 from_homogeneous(const Eigen::Vector2cd& v);
};

/// Chordal distance on the Riemann sphere (scale-free, at most 1).
double chordal_distance(const PointP1& a, const PointP1& b);

/// Binary form sum a_i x^i y^(d-i) with rational coefficients.
class BinaryForm {
  public:
    explicit BinaryForm(std::vector<Rational> coeffs);
    /// From a homogeneous polynomial in exactly two variables.
    static BinaryForm from_poly(const MultiPoly& p);

    int degree() const { return static_cast<int>(a_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return a_; }
    /// The form in variables (x_i, x_j) of a ring with `nvars` variables.
    MultiPoly to_poly(int nvars = 2, int xi = 0, int yi = 1) const;

    Complex evaluate(Complex x, Complex y) const;
    /// Coefficients (same indexing) of f(m00 x + m01 y, m10 x + m11 y).
    std::vector<Complex> compose(const Eigen::Matrix2cd& m) const;
    /// Sum of absolute coefficient values.
    double norm1() const;

    friend bool operator==(const BinaryForm& a, const BinaryForm& b) { return a.a_ == b.a_; }

  private:
    std::vector<Rational> a_;
};

struct PointSetP1 {
    std::vector<PointP1> points;
    /// Smallest pairwise chordal distance.
    double separation = 0;
};

PointSetP1 make_point_set(std::vector<PointP1> points);

/// Zeros of f on P^1. Multiple zeros are rejected exactly (InputError "multiple root");
/// each numeric root must satisfy |f| < tol * |f|_1 at unit-norm homogeneous coordinates.
PointSetP1 roots_p1(const BinaryForm& f, double tol = kDefaultTol);

/// Invertible 2x2 matrix up to scale, acting by t -> (a t + b) / (c t + d).
class Projectivity {
  public:
    Projectivity() : Projectivity(Eigen::Matrix2cd::Identity()) {}
    /// Scales so that the first entry of (numerically) largest modulus is exactly 1.
    explicit Projectivity(const Eigen::Matrix2cd& m);

    const Eigen::Matrix2cd& matrix() const { return m_; }
    PointP1 apply(const PointP1& p) const;
    /// (this o other)(p) = this(other(p)).
    Projectivity compose(const Projectivity& other) const { return Projectivity(m_ * other.m_); }
    Projectivity inverse() const { return Projectivity(m_.inverse()); }
    bool is_real(double tol) const;
    /// Smallest n >= 1 with M^n proportional to the identity; throws beyond `limit`.
    int order(int limit = 60) const;

  private:
    Eigen::Matrix2cd m_;
};

/// sin of the angle between the two matrices viewed as vectors in C^4; 0 iff equal in PGL(2).
double projective_distance(const Projectivity& a, const Projectivity& b);

/// The unique map sending src[i] to dst[i].
Projectivity mobius_from_triples(std::span<const PointP1, 3> src, std::span<const PointP1, 3> dst,
                                 double tol = kDefaultTol);

/// Every projectivity carrying the set src onto the set dst.
std::vector<Projectivity> projectivities_between(const PointSetP1& src, const PointSetP1& dst,
                                                 double tol = kDefaultTol);

struct GroupTag {
    enum class Kind { Trivial, Cyclic, Dihedral, Tetrahedral, Octahedral, Icosahedral };
    Kind kind = Kind::Trivial;
    int k = 1;

    static GroupTag trivial() { return {}; }
    static GroupTag cyclic(int k) { return {Kind::Cyclic, k}; }
    static GroupTag dihedral(int k) { return {Kind::Dihedral, k}; }
    static GroupTag tetrahedral() { return {Kind::Tetrahedral, 1}; }
    static GroupTag octahedral() { return {Kind::Octahedral, 1}; }
    static GroupTag icosahedral() { return {Kind::Icosahedral, 1}; }

    int order() const;
    /// "trivial", "cyclic:k", "dihedral:k", "T", "O", "I".
    std::string to_string() const;
    /// Inverse of to_string; also accepts "C<k>", "D<k>". Throws InputError.
    static GroupTag parse(const std::string& text);

    friend bool operator==(const GroupTag& a, const GroupTag& b) {
        return a.kind == b.kind && (a.k == b.k || (a.kind != Kind::Cyclic && a.kind != Kind::Dihedral));
    }
};

/// Identifies a finite subgroup of PGL(2, C). Throws ComputationError if the maps are not
/// closed under composition and inverse, or if the order fits no polyhedral type.
GroupTag classify_group(const std::vector<Projectivity>& maps, double tol = kDefaultTol);

}  // namespace fano
