#pragma once

#include "fano/errors.hpp"
#include "fano/exact/multipoly.hpp"
#include "fano/exact/univariate.hpp"

#include <chrono>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace fano {

enum class PairStrategy {
    Normal,  // smallest lcm first
    Sugar,   // smallest sugar degree first, ties broken by lcm
    // Sugar first; if a basis element's coefficients outgrow `swell_limit_bits`, restart
    // with Normal and no limit.
    Auto,
};

struct GroebnerOptions {
    MonomialOrder order = MonomialOrder::DegRevLex;
    PairStrategy strategy = PairStrategy::Auto;
    /// Coefficient size (bits) that triggers a strategy switch under Auto.
    std::size_t swell_limit_bits = 4096;
    /// Cap on S-pair reductions; exceeding it raises BudgetExceeded.
    std::size_t max_pair_reductions = 1'000'000;
    /// Wall-clock cap; zero means unlimited.
    std::chrono::milliseconds time_limit{0};
};

struct GroebnerStats {
    /// Number of restarts performed by the Auto strategy.
    std::size_t restarts = 0;
    std::size_t pairs_created = 0;
    std::size_t pairs_reduced = 0;
    std::size_t zero_reductions = 0;
    std::size_t max_basis_size = 0;
};

class BudgetExceeded : public ComputationError {
  public:
    BudgetExceeded(const std::string& what, GroebnerStats stats, std::size_t pending_pairs)
        : ComputationError(what), stats_(stats), pending_(pending_pairs) {}
    const GroebnerStats& stats() const { return stats_; }
    std::size_t pending_pairs() const { return pending_; }

  private:
    GroebnerStats stats_;
    std::size_t pending_;
};

/// Reduced Groebner basis: monic generators sorted by ascending leading monomial.
class GroebnerBasis {
  public:
    GroebnerBasis(int nvars, MonomialOrder order, std::vector<MultiPoly> generators, GroebnerStats stats = {});

    int nvars() const { return nvars_; }
    MonomialOrder order() const { return order_; }
    const std::vector<MultiPoly>& generators() const { return gens_; }
    const std::vector<Monomial>& leading_monomials() const { return leads_; }
    const GroebnerStats& stats() const { return stats_; }

    bool is_unit_ideal() const;
    /// Every variable has a pure power among the leading monomials.
    bool is_zero_dimensional() const;
    /// Monomials divisible by no leading monomial, ascending in the basis order. Requires zero-dimensionality.
    std::vector<Monomial> standard_monomials() const;
    MultiPoly normal_form(const MultiPoly& p) const;
    /// The generator that is univariate in `var`, if the basis contains one.
    std::optional<MultiPoly> univariate_generator(int var) const;

    /// Sparse column j holds the coordinates of NF(x_var * m_j) on the standard monomials
    /// m_0, m_1, ... (as returned by standard_monomials()). Requires zero-dimensionality.
    using SparseColumn = std::vector<std::pair<std::size_t, Rational>>;
    std::vector<SparseColumn> multiplication_matrix(int var) const;
    /// Monic generator of the elimination ideal I ∩ Q[x_var]: read off the basis when a
    /// univariate generator exists, otherwise found as the first linear dependency among
    /// the normal forms of 1, x, x^2, ...
    UniPoly minimal_polynomial(int var) const;

  private:
    int nvars_;
    MonomialOrder order_;
    std::vector<MultiPoly> gens_;
    std::vector<Monomial> leads_;
    GroebnerStats stats_;
};

/// Multivariate division remainder: no monomial of the result is divisible by a leading
/// monomial of `divisors`.
MultiPoly normal_form(const MultiPoly& p, std::span<const MultiPoly> divisors, MonomialOrder order);

/// Buchberger's algorithm with both Buchberger criteria (Gebauer-Moeller update),
/// fraction-free reduction over Z and content removal. Deterministic for a fixed input.
GroebnerBasis buchberger(std::span<const MultiPoly> generators, const GroebnerOptions& options = {});

/// Number of standard monomials, or nullopt when the ideal is not zero-dimensional.
std::optional<std::size_t> quotient_dimension(const GroebnerBasis& basis);

/// True iff gcd(p, p') is constant. Throws for zero or non-univariate input.
bool is_squarefree_univariate(const MultiPoly& p);

/// S-polynomial of two polynomials over Q (used by verification code).
MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g, MonomialOrder order);

}  // namespace fano
