#pragma once

#include "fano/exact/multipoly.hpp"
#include "fano/line3.hpp"
#include "fano/p1_geometry.hpp"
#include "fano/surface.hpp"

#include <cstdint>
#include <vector>

namespace fano {

/// Homogeneous ternary form f(x, y, z) of degree d >= 3.
class PlaneCurve {
  public:
    explicit PlaneCurve(MultiPoly poly);
    const MultiPoly& poly() const { return poly_; }
    int degree() const { return poly_.degree(); }
    /// The surface t^d - f(x, y, z).
    SurfaceForm covering_surface() const;

  private:
    MultiPoly poly_;
};

/// det of the matrix of second partials; zero polynomial when degenerate.
MultiPoly hessian(const PlaneCurve& c);

/// Jacobian criterion via a Groebner basis of the three partials.
bool is_smooth(const PlaneCurve& c);

struct InflectionPoint {
    Eigen::Vector3cd point;
    /// Intersection multiplicity of C and H, read off the resultant (d - 2 at a total inflection).
    int multiplicity = 1;
    /// Largest of the lower restriction coefficients to the tangent line, relative to scale.
    double residual = 0;
    enum class Kind { Total, Ordinary, Undetermined } kind = Kind::Ordinary;
};

struct InflectionReport {
    /// Distinct points of C ∩ H.
    std::vector<InflectionPoint> candidates;
    int beta = 0;
    int undetermined = 0;
    std::vector<Line3> lines;
    double max_line_residual = 0;
};

/// Locates C ∩ H through an exact resultant in a seeded generic frame and applies the
/// d-point test to each intersection point. Throws InputError for a singular curve.
InflectionReport total_inflections(const PlaneCurve& c, double tol = kDefaultTol, std::uint64_t seed = 0);

/// The beta * d lines on t^d = f, each verified on the surface.
std::vector<Line3> covering_lines(const PlaneCurve& c, double tol = kDefaultTol, std::uint64_t seed = 0);

}  // namespace fano
