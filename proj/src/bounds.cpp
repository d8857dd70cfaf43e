#include "fano/bounds.hpp"

#include "fano/errors.hpp"
#include "fano/separable.hpp"

#include <algorithm>
#include <string>

namespace fano {

BoundTable bound_table(int d) {
    if (d < 3) throw InputError("bounds need d >= 3 (got " + std::to_string(d) + ")");
    const long n = d;
    BoundTable b;
    b.d = d;
    b.segre = (n - 2) * (11 * n - 6);
    b.uniform = n * (7 * n - 12);
    b.per_line_cap = 8 * n - 14;
    b.separable_max = maximal_count(d);
    b.known_max = d == 8 ? std::max(b.separable_max, 352L) : b.separable_max;
    b.miyaoka = 2 * n * (n - 2);
    return b;
}

UniformDerivation uniform_bound_derivation(int d) {
    if (d < 3) throw InputError("bounds need d >= 3 (got " + std::to_string(d) + ")");
    const long n = d;
    UniformDerivation u;
    u.per_line = 8 * n - 14;
    u.off_plane_per_line = u.per_line - (n - 1);
    u.total = n + n * u.off_plane_per_line;
    if (u.total != n * (7 * n - 12)) throw ComputationError("uniform bound derivation is inconsistent");
    return u;
}

}  // namespace fano
