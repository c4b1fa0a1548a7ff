#ifndef DUALS_ELIM_DUAL_HPP
#define DUALS_ELIM_DUAL_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "duals/dual_space.hpp"

namespace duals {

/// Reduced basis of the eliminating truncated dual space
/// E_0^d[I, A] = { q in D_0[I] : ord_A q <= d } = D_0[I + <A>^{d+1}],
/// stored under an elimination order on A so initial terms respect the
/// A-filtration.
struct EliminatingDualSpace {
    std::vector<DualFunctional> basis;
    std::vector<int> eliminated; // A, sorted variable indices
    int d = 0;
    /// Total-degree cap the stabilization loop actually reached.
    int cap_used = 0;
    bool complete = false;
    OrderSpec order;
    std::uint64_t ideal_fingerprint = 0;
    int num_vars = 0;
    ScalarMode scalar_mode = ScalarMode::exact;

    int dim() const { return static_cast<int>(basis.size()); }
};

/// ord_A q (0 for the zero functional).
int ord_on(const DualFunctional& q, const std::vector<int>& vars);

/// Default stabilization cap for eliminating duals: d + 2 * (sum of
/// generator degrees).
int default_elim_cap(const Ideal& ideal, int d);

/// E_0^d[I, A]: augment the generators with all degree-(d+1) monomials in
/// the A variables and run the full-dual stabilization loop under an
/// elimination order for A.  Non-stabilization before max_degree returns
/// complete = false (the ideal is not in general position with respect to
/// A, e.g. a component lies inside {A = 0}).
EliminatingDualSpace eliminating_dual(const Ideal& ideal, const std::vector<int>& a_vars,
                                      int d, const RankPolicy& policy,
                                      std::optional<int> max_degree = std::nullopt);

/// E_0^d[I:<x1>, {x1}] = x1 . E_0^{d+1}[I, {x1}]: contract x1 into every
/// basis element of E (computed with A = {x1}, bound d+1, complete) and
/// re-reduce under the same elimination order.
EliminatingDualSpace quotient_eliminating_dual(const EliminatingDualSpace& e,
                                               int x1, const RankPolicy& policy);

/// g . span(space), re-reduced; a subspace of the true truncated dual of
/// I:<g> but possibly smaller, hence lower_bound_only on the result.  The
/// degree bound drops to k - val(g).
TruncatedDualSpace quotient_dual_truncated(const TruncatedDualSpace& space,
                                           const Polynomial& g,
                                           const RankPolicy& policy);

/// One-sided inclusion of the colon-ideal dual for several variables:
/// sum_i x_i . E^{d+1}[I, vars] must be contained in E^d[colon_ideal, vars]
/// when the colon ideal is supplied symbolically, and in E^d[I, vars]
/// otherwise (I is contained in the colon ideal, so its eliminating dual
/// contains the colon ideal's).  Returns the verified pass/fail.
bool colon_inclusion_check(const Ideal& ideal, const std::vector<int>& vars, int d,
                           const RankPolicy& policy,
                           const std::optional<Ideal>& colon_ideal = std::nullopt,
                           std::optional<int> max_degree = std::nullopt);

} // namespace duals

#endif
