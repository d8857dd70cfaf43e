#pragma once

#include "fano/exact/groebner.hpp"
#include "fano/line3.hpp"
#include "fano/surface.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace fano {

/// The six affine cells of the Grassmannian G(1,3), indexed by the first nonzero Plücker
/// coordinate in the order p12, p13, p14, p23, p24, p34.
inline constexpr int kStrata = 6;

struct StratumSystem {
    int stratum = 0;
    std::vector<std::string> var_names;
    /// Parametrization of the cell: two columns of polynomials in the stratum variables.
    std::array<std::array<MultiPoly, 4>, 2> columns;
    /// Coefficients of u^i v^(d-i), i = 0..d, of F(u col0 + v col1).
    std::vector<MultiPoly> equations;

    int nvars() const { return static_cast<int>(var_names.size()); }
};

StratumSystem build_stratum_system(const SurfaceForm& s, int stratum);

struct StratumCount {
    enum class Status { Finite, PositiveDimensional, BudgetExceeded };
    int stratum = 0;
    Status status = Status::Finite;
    /// Solutions counted with multiplicity (Finite only).
    std::size_t count = 0;
    /// Every variable has a squarefree eliminant, so the ideal is radical and `count`
    /// is the number of distinct lines.
    bool certified_reduced = false;
    std::vector<UniPoly> eliminants;
    GroebnerStats stats;
    double seconds = 0;
    std::string message;
    std::optional<GroebnerBasis> basis;
};

std::string to_string(StratumCount::Status status);

/// Groebner basis, quotient dimension and (when `certify`) the eliminant check.
StratumCount count_stratum(const StratumSystem& sys, const GroebnerOptions& options = {}, bool certify = true);

struct CountOptions {
    GroebnerOptions groebner;
    bool certify = true;
    bool check_smooth = true;
    /// Worker threads for the strata; 0 means hardware concurrency.
    unsigned threads = 0;
};

struct LineCount {
    std::array<StratumCount, kStrata> strata;
    std::size_t total = 0;
    /// All strata finite.
    bool complete = false;
    /// All strata certified reduced.
    bool certified = false;
};

/// Counts lines stratum by stratum (independent strata run concurrently). Throws
/// InputError for a singular surface unless the smoothness check is disabled.
LineCount count_lines(const SurfaceForm& s, const CountOptions& options = {});

/// The partial derivatives have only the origin as common zero.
bool is_smooth(const SurfaceForm& s, const GroebnerOptions& options = {});

/// Numeric line coordinates for a finite stratum: eigenvectors of a random combination of
/// multiplication matrices, refined by Gauss-Newton on the stratum equations.
std::vector<Line3> emit_stratum_lines(const StratumSystem& sys, const StratumCount& count, std::uint64_t seed = 0);

}  // namespace fano
