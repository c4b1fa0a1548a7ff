#ifndef DUALS_DUAL_SPACE_HPP
#define DUALS_DUAL_SPACE_HPP

#include <cstdint>
#include <vector>

#include "duals/functional.hpp"
#include "duals/ideal.hpp"
#include "duals/linalg.hpp"
#include "duals/order.hpp"

namespace duals {

/// Reduced basis of the truncated dual space D_0^k[I] = D_0[I + m^{k+1}]:
/// basis functionals are linearly independent, each has order <= k, and
/// their initial terms under the dual order are pairwise distinct (and
/// absent from every other element's support).
struct TruncatedDualSpace {
    std::vector<DualFunctional> basis;
    int k = 0;
    OrderSpec order;
    std::uint64_t ideal_fingerprint = 0;
    int num_vars = 0;
    ScalarMode scalar_mode = ScalarMode::exact;
    /// Set by full_dual_zero_dim: truncations stabilized, so the basis
    /// spans the whole dual space.
    bool complete = false;
    /// Set by quotient_dual_truncated: the span is contained in, but may
    /// be smaller than, the true truncated dual.
    bool lower_bound_only = false;

    int dim() const { return static_cast<int>(basis.size()); }
};

/// Macaulay matrix at degree k: rows indexed by (generator i, shift beta)
/// with |beta| <= k-1, columns by all |alpha| <= k; the (row, alpha) entry
/// is the coefficient of x^alpha in truncate(x^beta f_i, k).  Nullspace
/// vectors, read as functionals sum v_alpha d^alpha, annihilate every row
/// polynomial.  The shift range |beta| <= k-1 captures all of I^k because
/// every generator has zero constant term (asserted on construction).
struct MacaulayMatrix {
    std::vector<Exponent> columns;
    std::vector<std::pair<int, Exponent>> row_index; // (generator, shift)
    ScalarMatrix entries;
    int k = 0;
};

MacaulayMatrix build_macaulay_matrix(const Ideal& ideal, int k);

/// Gaussian elimination under the dual order: same span, pairwise
/// distinct monic initial terms, each initial term absent from every
/// other element's support.  Dependent inputs are pruned.  Complex-mode
/// output rows are scaled to unit 2-norm.
std::vector<DualFunctional> reduce_basis(const std::vector<DualFunctional>& basis,
                                         const OrderSpec& order,
                                         const RankPolicy& policy);

/// D_0^k[I] via the nullspace of the degree-k Macaulay matrix.
TruncatedDualSpace truncated_dual_direct(const Ideal& ideal, int k,
                                         const RankPolicy& policy,
                                         const OrderSpec& order);
TruncatedDualSpace truncated_dual_direct(const Ideal& ideal, int k,
                                         const RankPolicy& policy);

/// D_0^k[I] via the completion scheme: D^0 = span{d^0}; each degree-i
/// candidate q is parameterized by antiderivatives of the previous basis
/// (x_j . q must lie in span D^{i-1} for every j) subject to q(f_m) = 0.
/// Spans the same space as truncated_dual_direct at every degree.
TruncatedDualSpace truncated_dual_completion(const Ideal& ideal, int k,
                                             const RankPolicy& policy,
                                             const OrderSpec& order);
TruncatedDualSpace truncated_dual_completion(const Ideal& ideal, int k,
                                             const RankPolicy& policy);

/// Incremental completion sweep; step() advances one degree and returns
/// the new truncation.  Used by the full-dual stopping criterion and the
/// Hilbert sweep so each degree is solved once.
class CompletionSweep {
public:
    CompletionSweep(const Ideal& ideal, const RankPolicy& policy,
                    const OrderSpec& order);

    /// Truncation currently held (degree == degree()).
    const TruncatedDualSpace& current() const { return current_; }
    int degree() const { return current_.k; }
    const TruncatedDualSpace& step();

private:
    Ideal ideal_;
    RankPolicy policy_;
    OrderSpec order_;
    TruncatedDualSpace current_;
};

/// Full dual space of an expected 0-dimensional ideal: iterate truncations
/// until dim D^i = dim D^{i+1} (that equality certifies stabilization);
/// on success the result has degree i and complete = true.  Reaching
/// max_degree first returns the last truncation with complete = false.
TruncatedDualSpace full_dual_zero_dim(const Ideal& ideal, const RankPolicy& policy,
                                      int max_degree,
                                      const OrderSpec& order);
TruncatedDualSpace full_dual_zero_dim(const Ideal& ideal, const RankPolicy& policy,
                                      int max_degree);

/// Initial support {in(q) : q in basis}; requires a reduced basis and has
/// cardinality dim.
std::vector<Exponent> initial_support(const TruncatedDualSpace& space);

/// Reduced basis of span(a + b); operands must agree on truncation
/// degree, order, variable count and scalar mode.
TruncatedDualSpace sum_spaces(const TruncatedDualSpace& a, const TruncatedDualSpace& b,
                              const RankPolicy& policy);

/// Reduced basis of span(a) intersect span(b), via the nullspace of the
/// stacked coordinate systems.
TruncatedDualSpace intersect_spaces(const TruncatedDualSpace& a,
                                    const TruncatedDualSpace& b,
                                    const RankPolicy& policy);

} // namespace duals

#endif
