#pragma once

namespace fano {

struct BoundTable {
    int d = 0;
    long segre = 0;          // (d-2)(11d-6)
    long uniform = 0;        // d(7d-12), under the coplanarity hypothesis
    long per_line_cap = 0;   // 8d-14
    long separable_max = 0;  // maximal_count(d)
    /// Largest line count among the surfaces known to this library: separable_max, or
    /// 352 for the octic S8.
    long known_max = 0;
    long miyaoka = 0;        // 2d(d-2) skew lines
};

/// Throws InputError for d < 3.
BoundTable bound_table(int d);

struct UniformDerivation {
    long per_line = 0;           // 8d-14 lines meeting a given line
    long off_plane_per_line = 0; // minus the d-1 other lines of the plane
    long total = 0;              // d + d(7d-13)
};

UniformDerivation uniform_bound_derivation(int d);

}  // namespace fano
