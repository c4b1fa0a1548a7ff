#ifndef DUALS_ORDER_HPP
#define DUALS_ORDER_HPP

#include <compare>
#include <vector>

#include "duals/exponent.hpp"

namespace duals {

/// Local monomial order: 1 is the largest monomial.  Two kinds:
///
///  * graded_local      -- lower total degree compares greater, ties broken
///                         reverse-lexicographically on the variable
///                         permutation;
///  * elimination_local -- block order whose most significant block is the
///                         degree on the eliminated set A (lower A-degree
///                         compares greater), refined by the graded order.
///
/// The dual order on differential monomials is the opposite of the primal
/// order.
struct OrderSpec {
    enum class Kind { graded_local, elimination_local };

    Kind kind = Kind::graded_local;
    /// Variable indices in tie-break significance order; identity if empty.
    std::vector<int> permutation;
    /// Eliminated variable indices (sorted); only for elimination_local.
    std::vector<int> eliminated;

    static OrderSpec graded(int num_vars);
    static OrderSpec elimination(int num_vars, std::vector<int> eliminated_vars);

    int num_vars() const { return static_cast<int>(permutation.size()); }

    friend bool operator==(const OrderSpec&, const OrderSpec&) = default;
};

/// Primal comparison: returns greater when x^a > x^b.
std::strong_ordering compare_primal(const OrderSpec& order, const Exponent& a,
                                    const Exponent& b);

/// Dual comparison: d^a >= d^b iff x^a <= x^b.
std::strong_ordering compare_dual(const OrderSpec& order, const Exponent& a,
                                  const Exponent& b);

} // namespace duals

#endif
