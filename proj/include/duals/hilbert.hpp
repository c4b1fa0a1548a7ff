#ifndef DUALS_HILBERT_HPP
#define DUALS_HILBERT_HPP

#include <optional>
#include <vector>

#include "duals/dual_space.hpp"

namespace duals {

/// Local Hilbert data: H_I(k) = dim D^k - dim D^{k-1} for k = 0..k_max,
/// plus the detected Hilbert-polynomial value, regularity index rho and
/// multiplicity mu.  `certified` is false when rho/mu come from the
/// stabilization-window heuristic (curve case) and true for the
/// 0-dimensional case, where the D^i = D^{i+1} criterion is exact.
struct HilbertData {
    std::vector<int> values;
    /// Empty until detection ran (hilbert_function fills values only).
    std::optional<int> hp_value;
    std::optional<int> rho;
    std::optional<int> mu;
    bool certified = false;
    int window = 0;
    int k_max = 0;
};

struct RegularityOptions {
    /// Stable-run length required before declaring the Hilbert polynomial
    /// found; defaults to max generator degree + 2.
    std::optional<int> window;
    /// Hard degree cap for the sweep; defaults to
    /// sum of generator degrees + window + 2.
    std::optional<int> k_cap;
    /// User-supplied certified values (from an external system); when both
    /// are present the sweep is skipped entirely.
    std::optional<int> assume_rho;
    std::optional<int> assume_mu;
};

/// First differences of truncated dual dimensions for k = 0..k_max.
HilbertData hilbert_function(const Ideal& ideal, int k_max, const RankPolicy& policy);

/// Detect rho_0 and mu_0 of a locally 0- or 1-dimensional ideal by sweeping
/// H_I(k) until `window` consecutive equal values occur.  A stable value of
/// 0 means the ideal is 0-dimensional: mu becomes the full dual dimension
/// and the result is certified.  A nonzero stable value is the curve case:
/// mu is the stable value, rho the first index of the run, certified false.
/// No stabilization by k_cap is an explicit StabilizationError.
HilbertData regularity_and_multiplicity(const Ideal& ideal,
                                        const RegularityOptions& options,
                                        const RankPolicy& policy);

/// Standard monomials of degree <= k (initial support of D^k under the
/// dual order) together with the complementary monomials (initial ideal
/// up to degree k); the two sets partition the degree <= k lattice.
struct StaircaseReport {
    int k = 0;
    std::vector<Exponent> standard_monomials;
    std::vector<Exponent> initial_ideal;
};

StaircaseReport standard_monomials(const Ideal& ideal, int k, const OrderSpec& order,
                                   const RankPolicy& policy);

/// Membership of f in a homogeneous ideal: f of degree d belongs to I iff
/// D^d[I] annihilates it.  Refuses non-homogeneous generators (the
/// criterion is false without homogeneity).
bool homogeneous_membership(const Polynomial& f, const Ideal& ideal,
                            const RankPolicy& policy);

} // namespace duals

#endif
