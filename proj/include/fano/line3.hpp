#pragma once

#include "fano/numeric/roots.hpp"

#include <Eigen/Dense>

#include <array>
#include <string>

namespace fano {

using Vec4c = Eigen::Matrix<Complex, 4, 1>;
using Mat42c = Eigen::Matrix<Complex, 4, 2>;

/// Plücker coordinates in the order p12, p13, p14, p23, p24, p34.
using Plucker = std::array<Complex, 6>;

/// A line in P^3. The basis is kept in column-echelon form: the two rows of the largest
/// Plücker minor form the identity. The Plücker vector is scaled so that its
/// largest-modulus entry is exactly 1.
class Line3 {
  public:
    /// Throws InputError when the columns are (numerically) dependent.
    static Line3 from_basis(const Mat42c& basis);
    static Line3 through(const Vec4c& p, const Vec4c& q) {
        Mat42c b;
        b << p, q;
        return from_basis(b);
    }

    const Mat42c& basis() const { return basis_; }
    const Plucker& plucker() const { return plucker_; }
    /// |p12 p34 - p13 p24 + p14 p23| for the normalized vector.
    double plucker_residual() const;
    /// The normalized Plücker vector is within tol of a real vector.
    bool is_real(double tol) const;

  private:
    Mat42c basis_;
    Plucker plucker_{};
};

Plucker plucker_of(const Mat42c& basis);

/// Bilinear incidence form: zero iff the two lines meet.
Complex plucker_pairing(const Plucker& p, const Plucker& q);

/// sin of the angle between the two Plücker vectors; 0 iff the lines coincide.
double line_distance(const Line3& a, const Line3& b);

/// Deterministic total order on normalized Plücker vectors (real parts, then imaginary).
bool plucker_less(const Line3& a, const Line3& b);

}  // namespace fano
