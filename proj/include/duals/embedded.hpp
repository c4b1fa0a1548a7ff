#ifndef DUALS_EMBEDDED_HPP
#define DUALS_EMBEDDED_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "duals/elim_dual.hpp"
#include "duals/hilbert.hpp"

namespace duals {

/// Evidence report of the embedded-point decision.  The test compares
/// x1 . E^k (the eliminating dual of I:<x1> at bound k-1) against E^{k-1}:
/// the containment always holds, so embedded is exactly a dimension drop.
struct EmbeddedVerdict {
    bool embedded = false;
    int k = 0;
    int rho = 0;
    int mu = 0;
    bool certified_hilbert = false;
    int dim_E_k = 0;
    int dim_xE_k = 0;
    int dim_E_km1 = 0;
    /// Seeds tried, in order; the last one produced the verdict.  Empty
    /// when no coordinate change was involved.
    std::vector<std::uint64_t> seeds;
    /// Change-of-coordinates matrix actually used (empty = identity).
    std::vector<std::vector<Scalar>> change_matrix;
    double rank_tol = 0.0;
    double point_tol = 0.0;
    int retries = 0;
    /// Populated in verbose mode for post-hoc certification.
    std::vector<DualFunctional> basis_E_k;
    std::vector<DualFunctional> basis_xE_k;
    std::vector<DualFunctional> basis_E_km1;
};

struct EmbeddedOptions {
    RegularityOptions regularity;
    std::optional<int> max_degree;
    std::uint64_t seed = 0;
    int retry_limit = 3;
    double point_tol = 1e-8;
    bool verbose = false;
    /// Index of the saturating variable (x1 of the algorithm).
    int pivot_var = 0;
};

/// Decide whether the origin is an embedded component of the curve I
/// (which must be in regular position relative to the pivot variable):
/// compute rho and mu, set k = max(rho, mu - 1, 1), compare
/// x1 . E^k[I,{x1}] with E^{k-1}[I,{x1}] as spans.  The k floor of 1
/// keeps E^{k-1} defined for smooth curves where the algorithm's
/// max(rho, mu-1) would be 0.
EmbeddedVerdict is_origin_embedded_in_curve(const Ideal& ideal,
                                            const EmbeddedOptions& options,
                                            const RankPolicy& policy);

/// Translate p to the origin, apply a seeded random invertible linear
/// change fixing the origin, and run the origin test; eliminating-dual
/// non-stabilization (a regular-position failure) retries with a fresh
/// seed up to retry_limit, recording every seed tried.
EmbeddedVerdict embedded_point_test(const Ideal& ideal, const std::vector<Scalar>& p,
                                    const EmbeddedOptions& options,
                                    const RankPolicy& policy);

/// span(b) strictly inside span(a.basis): containment is verified first
/// (a violation signals a rank-policy inconsistency and throws), then the
/// dimensions are compared.
bool subspace_strictly_contains(const EliminatingDualSpace& a,
                                const std::vector<DualFunctional>& b,
                                const RankPolicy& policy);

/// Seeded random change of coordinates fixing the origin: complex mode
/// draws entries uniformly from the unit disk and resamples until the
/// condition number is below 100; exact mode draws small integers and
/// resamples until exactly invertible.
std::vector<std::vector<Scalar>> random_linear_change(int num_vars, ScalarMode mode,
                                                      std::uint64_t seed);

} // namespace duals

#endif
