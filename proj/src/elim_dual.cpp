#include "duals/elim_dual.hpp"

#include <algorithm>

namespace duals {

int ord_on(const DualFunctional& q, const std::vector<int>& vars) {
    return q.order_on(vars);
}

int default_elim_cap(const Ideal& ideal, int d) {
    return d + 2 * ideal.sum_generator_degrees();
}

namespace {

std::vector<int> checked_vars(std::vector<int> vars, int num_vars) {
    if (vars.empty()) throw UsageError("eliminated variable set is empty");
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    for (int v : vars)
        if (v < 0 || v >= num_vars)
            throw UsageError("eliminated variable index out of range");
    return vars;
}

// Drop coefficients the A-filtration forces to zero.  Exact mode has them
// exactly zero already; complex mode carries SVD noise on those
// coordinates, which is stripped when negligible and rejected otherwise.
std::vector<DualFunctional> enforce_a_order(std::vector<DualFunctional> basis,
                                            const std::vector<int>& a_vars, int d,
                                            const RankPolicy& policy) {
    for (auto& q : basis) {
        if (q.order_on(a_vars) <= d) continue;
        DualFunctional cleaned(q.num_vars(), q.mode());
        double dropped2 = 0.0;
        for (const auto& [e, c] : q.terms()) {
            if (e.degree_on(a_vars) <= d) {
                cleaned.add_term(e, c);
            } else if (q.mode() == ScalarMode::exact) {
                throw RankAmbiguityError("exact eliminating dual produced a basis "
                                         "element violating the A-order bound");
            } else {
                dropped2 += c.abs() * c.abs();
            }
        }
        if (q.mode() == ScalarMode::cplx &&
            std::sqrt(dropped2) > policy.tol * std::max(q.norm2(), 1e-300))
            throw RankAmbiguityError("eliminating dual basis element carries "
                                     "non-negligible weight above the A-order bound");
        q = std::move(cleaned);
    }
    return basis;
}

} // namespace

EliminatingDualSpace eliminating_dual(const Ideal& ideal, const std::vector<int>& a_vars,
                                      int d, const RankPolicy& policy,
                                      std::optional<int> max_degree) {
    if (d < 0) throw UsageError("eliminating bound d must be non-negative");
    policy.check_compatible(ideal.mode());
    const int n = ideal.num_vars();
    auto vars = checked_vars(a_vars, n);
    const int cap = std::max(max_degree.value_or(default_elim_cap(ideal, d)), 1);

    // Generator augmentation: all monomials of degree d+1 in the A
    // variables make the augmented ideal 0-dimensional whenever I is in
    // general position with respect to A.
    std::vector<Polynomial> gens = ideal.generators();
    for (const auto& sub : exponents_of_degree(static_cast<int>(vars.size()), d + 1)) {
        std::vector<int> full(static_cast<size_t>(n), 0);
        for (size_t i = 0; i < vars.size(); ++i)
            full[static_cast<size_t>(vars[i])] = sub[static_cast<int>(i)];
        gens.push_back(
            Polynomial::monomial(Exponent(std::move(full)), Scalar::one(ideal.mode())));
    }
    Ideal augmented(std::move(gens), n);

    OrderSpec order = OrderSpec::elimination(n, vars);
    TruncatedDualSpace full = full_dual_zero_dim(augmented, policy, cap, order);

    EliminatingDualSpace e;
    e.basis = enforce_a_order(std::move(full.basis), vars, d, policy);
    e.eliminated = vars;
    e.d = d;
    e.cap_used = cap;
    e.complete = full.complete;
    e.order = order;
    e.ideal_fingerprint = ideal.fingerprint();
    e.num_vars = n;
    e.scalar_mode = ideal.mode();
    return e;
}

EliminatingDualSpace quotient_eliminating_dual(const EliminatingDualSpace& e, int x1,
                                               const RankPolicy& policy) {
    if (e.eliminated != std::vector<int>{x1})
        throw UsageError("quotient eliminating dual needs A = {x1}");
    if (!e.complete)
        throw StabilizationError("eliminating dual space is incomplete; the quotient "
                                 "identity needs a stabilized E^{d+1}");
    if (e.d < 1)
        throw UsageError("quotient eliminating dual needs bound d+1 >= 1");

    Polynomial x = Polynomial::monomial(
        Exponent([&] {
            std::vector<int> v(static_cast<size_t>(e.num_vars), 0);
            v[static_cast<size_t>(x1)] = 1;
            return v;
        }()),
        Scalar::one(e.scalar_mode));

    std::vector<DualFunctional> contracted;
    contracted.reserve(e.basis.size());
    for (const auto& q : e.basis) contracted.push_back(contract(x, q));

    EliminatingDualSpace r;
    r.basis = reduce_basis(contracted, e.order, policy);
    r.eliminated = e.eliminated;
    r.d = e.d - 1;
    r.cap_used = e.cap_used;
    r.complete = true;
    r.order = e.order;
    r.ideal_fingerprint = e.ideal_fingerprint;
    r.num_vars = e.num_vars;
    r.scalar_mode = e.scalar_mode;
    return r;
}

TruncatedDualSpace quotient_dual_truncated(const TruncatedDualSpace& space,
                                           const Polynomial& g,
                                           const RankPolicy& policy) {
    if (g.is_zero()) throw UsageError("quotient by the zero polynomial");
    if (g.num_vars() != space.num_vars || g.mode() != space.scalar_mode)
        throw UsageError("quotient polynomial shape mismatch");

    std::vector<DualFunctional> contracted;
    contracted.reserve(space.basis.size());
    for (const auto& q : space.basis) contracted.push_back(contract(g, q));

    TruncatedDualSpace r;
    r.basis = reduce_basis(contracted, space.order, policy);
    r.k = std::max(space.k - g.valuation(), 0);
    r.order = space.order;
    r.ideal_fingerprint = space.ideal_fingerprint;
    r.num_vars = space.num_vars;
    r.scalar_mode = space.scalar_mode;
    r.complete = false;
    r.lower_bound_only = true;
    return r;
}

bool colon_inclusion_check(const Ideal& ideal, const std::vector<int>& vars_in, int d,
                           const RankPolicy& policy,
                           const std::optional<Ideal>& colon_ideal,
                           std::optional<int> max_degree) {
    if (d < 0) throw UsageError("colon inclusion check needs d >= 0");
    auto vars = checked_vars(vars_in, ideal.num_vars());

    EliminatingDualSpace upper = eliminating_dual(ideal, vars, d + 1, policy, max_degree);
    if (!upper.complete)
        throw StabilizationError("eliminating dual E^{d+1} did not stabilize");

    std::vector<DualFunctional> contracted;
    for (int v : vars) {
        std::vector<int> exp(static_cast<size_t>(ideal.num_vars()), 0);
        exp[static_cast<size_t>(v)] = 1;
        Polynomial xv = Polynomial::monomial(Exponent(std::move(exp)),
                                             Scalar::one(ideal.mode()));
        for (const auto& q : upper.basis) {
            DualFunctional c = contract(xv, q);
            if (!c.is_zero()) contracted.push_back(std::move(c));
        }
    }
    auto lhs = reduce_basis(contracted, upper.order, policy);

    const Ideal& rhs_ideal = colon_ideal ? *colon_ideal : ideal;
    EliminatingDualSpace rhs = eliminating_dual(rhs_ideal, vars, d, policy, max_degree);
    if (!rhs.complete)
        throw StabilizationError("eliminating dual E^d did not stabilize");

    Span rhs_span(rhs.basis, rhs.order, policy);
    return rhs_span.contains_all(lhs);
}

} // namespace duals
