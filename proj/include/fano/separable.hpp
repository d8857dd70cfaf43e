#pragma once

#include "fano/line3.hpp"
#include "fano/p1_geometry.hpp"
#include "fano/surface.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace fano {

/// The surface phi(x, y) - psi(z, t) = 0.
class SeparableSurface {
  public:
    /// Throws InputError unless both forms have the same degree d >= 3.
    SeparableSurface(BinaryForm phi, BinaryForm psi);

    const BinaryForm& phi() const { return phi_; }
    const BinaryForm& psi() const { return psi_; }
    int degree() const { return phi_.degree(); }
    SurfaceForm surface() const;

  private:
    BinaryForm phi_, psi_;
};

/// The d lines (x, y) = c M (z, t), c^d lambda = 1, attached to one projectivity M.
struct Ruling {
    Projectivity sigma;
    Complex lambda;
    std::vector<Line3> lines;
};

struct LineReport {
    int degree = 0;
    std::vector<Line3> grid_lines;
    std::vector<Ruling> rulings;
    int alpha = 0;
    int total = 0;
    /// Automorphism group of Z(phi); only when phi = psi.
    std::optional<GroupTag> group;
    /// Lines whose Plücker vector is real.
    int real_count = 0;
    /// Largest containment residual over all emitted lines.
    double max_residual = 0;

    /// Grid and ruling lines together, sorted by Plücker key.
    std::vector<Line3> all_lines() const;
};

/// Counts and emits every line. Projectivities run from Z(psi) to Z(phi). Throws
/// ComputationError on a scalar mismatch or a line failing verification.
LineReport count_and_emit(const SeparableSurface& s, double tol = kDefaultTol);

struct RealLineCount {
    /// Lines with a real Plücker vector among all emitted lines.
    int count = 0;
    /// d^2 plus 1 (d odd) or 2 (d even) per real-matrix projectivity.
    int formula = 0;
    /// phi = psi with all zeros real, the only case the formula is meant for.
    bool formula_applies = false;
    int real_projectivities = 0;
};

/// Requires phi = psi (InputError otherwise).
RealLineCount count_real_lines(const SeparableSurface& s, double tol = kDefaultTol);

/// A form of degree d whose zero set has automorphism group `tag`. Generic parameters come
/// from `seed`; the group of the result is recomputed and checked. Throws InputError for an
/// inadmissible (d, tag).
BinaryForm build_form(int d, const GroupTag& tag, std::uint64_t seed = 0);

/// Largest number of lines on a surface phi(x, y) = psi(z, t) of degree d.
long maximal_count(int d);

}  // namespace fano
