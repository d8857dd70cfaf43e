#pragma once

#include "fano/line3.hpp"
#include "fano/surface.hpp"

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fano {

/// R_d = x^(d-1) y + x y^(d-1) + z^(d-1) t + z t^(d-1).
SurfaceForm rams_surface(int d);

struct SkewCheck {
    bool ok = true;
    /// Index of the first line not on the surface.
    std::optional<std::size_t> bad_line;
    /// First pair of lines that meet.
    std::optional<std::pair<std::size_t, std::size_t>> bad_pair;
    /// Smallest normalized pairing over all pairs (infinity for fewer than two lines).
    double min_margin = std::numeric_limits<double>::infinity();
    double max_residual = 0;
    std::string message;
};

struct SkewFamily {
    int degree;
    SurfaceForm surface;
    std::vector<Line3> lines;
    int claimed_size = 0;
    SkewCheck check;
};

/// |<p, q>| / (|p| |q|) for the two Plücker vectors.
double pairing_margin(const Line3& a, const Line3& b);

bool lines_disjoint(const Line3& a, const Line3& b, double tol = kDefaultTol);

/// Exact test for lines spanned by rational points: the 4x4 determinant is nonzero.
bool lines_disjoint(const std::array<std::array<Rational, 4>, 2>& a, const std::array<std::array<Rational, 4>, 2>& b);

/// Containment of every line and pairwise disjointness, with the first violation.
/// Pairs are split over `threads` workers.
SkewCheck verify_skew_set(const SurfaceForm& s, const std::vector<Line3>& lines, double tol = kDefaultTol,
                          unsigned threads = 1);

/// The d(d-2) lines C_{l,s} and four extra lines on R_d. Requires d >= 7 odd; throws
/// InputError otherwise and ComputationError if the verification fails.
SkewFamily rams_family(int d, double tol = kDefaultTol, unsigned threads = 1);

struct SkewBounds {
    long miyaoka = 0;
    long rams_old = 0;
    long this_construction = 0;
    /// Known maximum of skew lines, only for d = 3 and 4.
    std::optional<long> known_max;
};

SkewBounds skew_bounds(int d);

}  // namespace fano
