#include "duals/order.hpp"

#include <algorithm>
#include <numeric>

namespace duals {

OrderSpec OrderSpec::graded(int num_vars) {
    OrderSpec o;
    o.kind = Kind::graded_local;
    o.permutation.resize(static_cast<size_t>(num_vars));
    std::iota(o.permutation.begin(), o.permutation.end(), 0);
    return o;
}

OrderSpec OrderSpec::elimination(int num_vars, std::vector<int> eliminated_vars) {
    OrderSpec o = graded(num_vars);
    o.kind = Kind::elimination_local;
    std::sort(eliminated_vars.begin(), eliminated_vars.end());
    for (int v : eliminated_vars)
        if (v < 0 || v >= num_vars) throw UsageError("eliminated variable out of range");
    o.eliminated = std::move(eliminated_vars);
    return o;
}

namespace {

// Reverse-lexicographic tie-break among equal-degree monomials: scanning
// the permutation from least significant position backwards, the first
// differing entry decides; the smaller entry belongs to the greater
// monomial.
std::strong_ordering grevlex_tiebreak(const std::vector<int>& perm, const Exponent& a,
                                      const Exponent& b) {
    for (auto it = perm.rbegin(); it != perm.rend(); ++it) {
        int da = a[*it], db = b[*it];
        if (da != db) return da < db ? std::strong_ordering::greater
                                     : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
}

} // namespace

std::strong_ordering compare_primal(const OrderSpec& order, const Exponent& a,
                                    const Exponent& b) {
    if (a.num_vars() != b.num_vars() || a.num_vars() != order.num_vars())
        throw UsageError("exponent length does not match order dimension");

    if (order.kind == OrderSpec::Kind::elimination_local) {
        int da = a.degree_on(order.eliminated);
        int db = b.degree_on(order.eliminated);
        // Lower A-degree is the greater monomial (the order is local).
        if (da != db) return da < db ? std::strong_ordering::greater
                                     : std::strong_ordering::less;
    }
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db ? std::strong_ordering::greater
                                 : std::strong_ordering::less;
    return grevlex_tiebreak(order.permutation, a, b);
}

std::strong_ordering compare_dual(const OrderSpec& order, const Exponent& a,
                                  const Exponent& b) {
    auto c = compare_primal(order, a, b);
    if (c == std::strong_ordering::less) return std::strong_ordering::greater;
    if (c == std::strong_ordering::greater) return std::strong_ordering::less;
    return std::strong_ordering::equal;
}

} // namespace duals
