#include "duals/dual_space.hpp"

#include <algorithm>
#include <stdexcept>
#include <map>

namespace duals {

namespace {

void require_vanishing(const Ideal& ideal) {
    if (!ideal.vanishes_at_origin())
        throw PointError("a generator has nonzero constant term: the ideal does not "
                         "vanish at the origin");
}

std::vector<DualFunctional> vectors_to_functionals(
    const std::vector<std::vector<Scalar>>& vectors, const std::vector<Exponent>& columns,
    int num_vars, ScalarMode mode) {
    std::vector<DualFunctional> out;
    out.reserve(vectors.size());
    for (const auto& v : vectors)
        out.push_back(vector_to_functional(v, columns, num_vars, mode));
    return out;
}

TruncatedDualSpace make_space(std::vector<DualFunctional> basis, int k,
                              const OrderSpec& order, const Ideal& ideal) {
    TruncatedDualSpace s;
    s.basis = std::move(basis);
    s.k = k;
    s.order = order;
    s.ideal_fingerprint = ideal.fingerprint();
    s.num_vars = ideal.num_vars();
    s.scalar_mode = ideal.mode();
    return s;
}

} // namespace

MacaulayMatrix build_macaulay_matrix(const Ideal& ideal, int k) {
    if (k < 0) throw UsageError("truncation degree must be non-negative");
    require_vanishing(ideal);
    const int n = ideal.num_vars();

    MacaulayMatrix m{std::vector<Exponent>(), {}, ScalarMatrix(0, ideal.mode()), k};
    m.columns = exponents_up_to(n, k);
    if (static_cast<std::int64_t>(m.columns.size()) != binomial(n + k, n))
        throw std::logic_error("Macaulay column enumeration is inconsistent");
    m.entries = ScalarMatrix(static_cast<int>(m.columns.size()), ideal.mode());

    std::map<Exponent, size_t> column_of;
    for (size_t j = 0; j < m.columns.size(); ++j) column_of.emplace(m.columns[j], j);

    const auto shifts = exponents_up_to(n, k - 1);
    for (int i = 0; i < static_cast<int>(ideal.generators().size()); ++i) {
        const auto& f = ideal.generators()[static_cast<size_t>(i)];
        for (const auto& beta : shifts) {
            Polynomial row_poly = f.shifted_by_monomial(beta).truncate(k);
            std::vector<Scalar> row(m.columns.size(), Scalar::zero(ideal.mode()));
            for (const auto& [e, c] : row_poly.terms()) row[column_of.at(e)] = c;
            m.row_index.emplace_back(i, beta);
            m.entries.add_row(std::move(row));
        }
    }
    return m;
}

std::vector<DualFunctional> reduce_basis(const std::vector<DualFunctional>& basis,
                                         const OrderSpec& order,
                                         const RankPolicy& policy) {
    std::vector<DualFunctional> nonzero;
    for (const auto& q : basis)
        if (!q.is_zero()) nonzero.push_back(q);
    if (nonzero.empty()) return {};
    policy.check_compatible(nonzero.front().mode());
    const ScalarMode mode = nonzero.front().mode();
    const int num_vars = nonzero.front().num_vars();

    auto columns = support_union(nonzero, order);
    std::vector<std::vector<Scalar>> rows;
    rows.reserve(nonzero.size());
    for (const auto& q : nonzero) rows.push_back(functional_to_vector(q, columns, mode));
    rref(rows, policy);

    if (mode == ScalarMode::cplx) {
        for (auto& row : rows) {
            double n2 = 0.0;
            for (const auto& s : row) n2 += s.abs() * s.abs();
            double n = std::sqrt(n2);
            Scalar inv = Scalar::complex({1.0 / n, 0.0});
            for (auto& s : row) s *= inv;
        }
    }
    return vectors_to_functionals(rows, columns, num_vars, mode);
}

TruncatedDualSpace truncated_dual_direct(const Ideal& ideal, int k,
                                         const RankPolicy& policy,
                                         const OrderSpec& order) {
    policy.check_compatible(ideal.mode());
    MacaulayMatrix m = build_macaulay_matrix(ideal, k);
    auto vectors = nullspace(m.entries, policy);
    auto basis = vectors_to_functionals(vectors, m.columns, ideal.num_vars(), ideal.mode());
    auto reduced = reduce_basis(basis, order, policy);
    if (reduced.size() != vectors.size())
        throw RankAmbiguityError("basis reduction lost vectors the nullspace rank "
                                 "decision had kept");
    return make_space(std::move(reduced), k, order, ideal);
}

TruncatedDualSpace truncated_dual_direct(const Ideal& ideal, int k,
                                         const RankPolicy& policy) {
    return truncated_dual_direct(ideal, k, policy, OrderSpec::graded(ideal.num_vars()));
}

CompletionSweep::CompletionSweep(const Ideal& ideal, const RankPolicy& policy,
                                 const OrderSpec& order)
    : ideal_(ideal), policy_(policy), order_(order) {
    policy_.check_compatible(ideal_.mode());
    require_vanishing(ideal_);
    std::vector<DualFunctional> b{DualFunctional::unit(ideal_.num_vars(), ideal_.mode())};
    current_ = make_space(std::move(b), 0, order_, ideal_);
}

// One completion step: candidates q for D^i are parameterized by
// antiderivative tuples (p_1,...,p_N) in span(D^{i-1})^N together with a
// constant c0.  Cross-derivative consistency x_l . p_j = x_j . p_l makes
// the coefficient map q_alpha = (p_j)_{alpha - e_j} well defined, and
// q(f_m) = 0 pins the ideal conditions; the nullspace of these constraints
// is exactly D^i.
const TruncatedDualSpace& CompletionSweep::step() {
    const int i = current_.k + 1;
    const int n = ideal_.num_vars();
    const ScalarMode mode = ideal_.mode();
    const auto& prev = current_.basis;
    const int s = static_cast<int>(prev.size());
    const int unknowns = n * s + 1; // lambda_{j,r} then c0

    // Coefficient of unknown u in q_alpha (alpha != 0): pick the first
    // variable j with alpha_j > 0; q_alpha = sum_r lambda_{j,r} *
    // prev[r]_{alpha - e_j}.
    auto first_var = [](const Exponent& e) {
        for (int j = 0; j < e.num_vars(); ++j)
            if (e[j] > 0) return j;
        return -1;
    };
    auto basis_coeff = [&](int r, const Exponent& e) {
        return prev[static_cast<size_t>(r)].coefficient(e);
    };

    ScalarMatrix system(unknowns, mode);

    // Consistency rows: for j < l and |gamma| <= i-2,
    //   sum_r lambda_{j,r} prev[r]_{gamma+e_l} - lambda_{l,r} prev[r]_{gamma+e_j} = 0.
    if (i >= 2) {
        for (int j = 0; j < n; ++j) {
            for (int l = j + 1; l < n; ++l) {
                for (const auto& gamma : exponents_up_to(n, i - 2)) {
                    std::vector<Scalar> row(static_cast<size_t>(unknowns),
                                            Scalar::zero(mode));
                    std::vector<int> gl(gamma.entries()), gj(gamma.entries());
                    gl[static_cast<size_t>(l)] += 1;
                    gj[static_cast<size_t>(j)] += 1;
                    Exponent gamma_l(std::move(gl)), gamma_j(std::move(gj));
                    bool nonzero = false;
                    for (int r = 0; r < s; ++r) {
                        Scalar a = basis_coeff(r, gamma_l);
                        Scalar b = basis_coeff(r, gamma_j);
                        if (!a.is_zero()) nonzero = true;
                        if (!b.is_zero()) nonzero = true;
                        row[static_cast<size_t>(j * s + r)] = a;
                        row[static_cast<size_t>(l * s + r)] = -b;
                    }
                    if (nonzero) system.add_row(std::move(row));
                }
            }
        }
    }

    // Generator rows: q(f_m) = 0 with q_alpha expanded through the
    // parameterization (constant terms vanish, so c0 never appears).
    for (const auto& f : ideal_.generators()) {
        std::vector<Scalar> row(static_cast<size_t>(unknowns), Scalar::zero(mode));
        bool nonzero = false;
        for (const auto& [alpha, fc] : f.terms()) {
            if (alpha.degree() > i) continue;
            if (alpha.is_zero()) continue;
            int j = first_var(alpha);
            std::vector<int> shifted(alpha.entries());
            shifted[static_cast<size_t>(j)] -= 1;
            Exponent alpha_minus(std::move(shifted));
            for (int r = 0; r < s; ++r) {
                Scalar b = basis_coeff(r, alpha_minus);
                if (b.is_zero()) continue;
                row[static_cast<size_t>(j * s + r)] += fc * b;
                nonzero = true;
            }
        }
        if (nonzero) system.add_row(std::move(row));
    }

    auto solutions = nullspace(system, policy_);

    std::vector<DualFunctional> basis;
    basis.reserve(solutions.size());
    const auto monomials = exponents_up_to(n, i);
    for (const auto& sol : solutions) {
        DualFunctional q(n, mode);
        q.add_term(Exponent::zero(n), sol[static_cast<size_t>(n * s)]);
        for (const auto& alpha : monomials) {
            if (alpha.is_zero()) continue;
            int j = first_var(alpha);
            std::vector<int> shifted(alpha.entries());
            shifted[static_cast<size_t>(j)] -= 1;
            Exponent alpha_minus(std::move(shifted));
            Scalar c = Scalar::zero(mode);
            for (int r = 0; r < s; ++r)
                c += sol[static_cast<size_t>(j * s + r)] * basis_coeff(r, alpha_minus);
            q.add_term(alpha, c);
        }
        basis.push_back(std::move(q));
    }

    auto reduced = reduce_basis(basis, order_, policy_);
    if (reduced.size() != solutions.size())
        throw RankAmbiguityError("completion step lost vectors between the nullspace "
                                 "and the basis reduction");
    current_ = make_space(std::move(reduced), i, order_, ideal_);
    return current_;
}

TruncatedDualSpace truncated_dual_completion(const Ideal& ideal, int k,
                                             const RankPolicy& policy,
                                             const OrderSpec& order) {
    if (k < 0) throw UsageError("truncation degree must be non-negative");
    CompletionSweep sweep(ideal, policy, order);
    while (sweep.degree() < k) sweep.step();
    return sweep.current();
}

TruncatedDualSpace truncated_dual_completion(const Ideal& ideal, int k,
                                             const RankPolicy& policy) {
    return truncated_dual_completion(ideal, k, policy,
                                     OrderSpec::graded(ideal.num_vars()));
}

TruncatedDualSpace full_dual_zero_dim(const Ideal& ideal, const RankPolicy& policy,
                                      int max_degree, const OrderSpec& order) {
    if (max_degree < 1) throw UsageError("max_degree must be at least 1");
    CompletionSweep sweep(ideal, policy, order);
    while (true) {
        TruncatedDualSpace prev = sweep.current();
        if (sweep.degree() >= max_degree) {
            prev.complete = false;
            return prev;
        }
        const TruncatedDualSpace& next = sweep.step();
        if (next.dim() == prev.dim()) {
            prev.complete = true;
            return prev;
        }
    }
}

TruncatedDualSpace full_dual_zero_dim(const Ideal& ideal, const RankPolicy& policy,
                                      int max_degree) {
    return full_dual_zero_dim(ideal, policy, max_degree,
                              OrderSpec::graded(ideal.num_vars()));
}

std::vector<Exponent> initial_support(const TruncatedDualSpace& space) {
    std::vector<Exponent> support;
    support.reserve(space.basis.size());
    for (const auto& q : space.basis)
        support.push_back(initial_term(space.order, q).first);
    std::vector<Exponent> sorted = support;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw UsageError("initial support requires a reduced basis (duplicate "
                         "initial terms found)");
    return support;
}

namespace {

void require_compatible(const TruncatedDualSpace& a, const TruncatedDualSpace& b) {
    if (a.k != b.k)
        throw UsageError("dual spaces truncated at different degrees");
    if (!(a.order == b.order))
        throw UsageError("dual spaces computed under different orders");
    if (a.num_vars != b.num_vars || a.scalar_mode != b.scalar_mode)
        throw UsageError("dual spaces over different rings");
}

} // namespace

TruncatedDualSpace sum_spaces(const TruncatedDualSpace& a, const TruncatedDualSpace& b,
                              const RankPolicy& policy) {
    require_compatible(a, b);
    std::vector<DualFunctional> joined = a.basis;
    joined.insert(joined.end(), b.basis.begin(), b.basis.end());
    TruncatedDualSpace r;
    r.basis = reduce_basis(joined, a.order, policy);
    r.k = a.k;
    r.order = a.order;
    r.ideal_fingerprint = a.ideal_fingerprint ^ (b.ideal_fingerprint << 1 |
                                                 b.ideal_fingerprint >> 63);
    r.num_vars = a.num_vars;
    r.scalar_mode = a.scalar_mode;
    r.complete = a.complete && b.complete;
    return r;
}

TruncatedDualSpace intersect_spaces(const TruncatedDualSpace& a,
                                    const TruncatedDualSpace& b,
                                    const RankPolicy& policy) {
    require_compatible(a, b);
    std::vector<DualFunctional> all = a.basis;
    all.insert(all.end(), b.basis.begin(), b.basis.end());
    auto columns = support_union(all, a.order);
    const ScalarMode mode = a.scalar_mode;

    // Stack the two coordinate systems: nullspace vectors (x | y) of
    // [A -B] (basis vectors as matrix columns) give the common elements
    // sum_i x_i a_i.
    const int dim_a = a.dim(), dim_b = b.dim();
    ScalarMatrix stacked(dim_a + dim_b, mode);
    std::vector<std::vector<Scalar>> a_vecs, b_vecs;
    for (const auto& q : a.basis) a_vecs.push_back(functional_to_vector(q, columns, mode));
    for (const auto& q : b.basis) b_vecs.push_back(functional_to_vector(q, columns, mode));
    for (size_t row = 0; row < columns.size(); ++row) {
        std::vector<Scalar> r;
        r.reserve(static_cast<size_t>(dim_a + dim_b));
        for (int j = 0; j < dim_a; ++j) r.push_back(a_vecs[static_cast<size_t>(j)][row]);
        for (int j = 0; j < dim_b; ++j) r.push_back(-b_vecs[static_cast<size_t>(j)][row]);
        stacked.add_row(std::move(r));
    }

    std::vector<DualFunctional> members;
    for (const auto& sol : nullspace(stacked, policy)) {
        DualFunctional q(a.num_vars, mode);
        for (int j = 0; j < dim_a; ++j) {
            Scalar c = sol[static_cast<size_t>(j)];
            if (c.is_zero()) continue;
            q += a.basis[static_cast<size_t>(j)].scaled(c);
        }
        if (!q.is_zero()) members.push_back(std::move(q));
    }

    TruncatedDualSpace r;
    r.basis = reduce_basis(members, a.order, policy);
    r.k = a.k;
    r.order = a.order;
    r.ideal_fingerprint = a.ideal_fingerprint ^ (b.ideal_fingerprint << 1 |
                                                 b.ideal_fingerprint >> 63);
    r.num_vars = a.num_vars;
    r.scalar_mode = mode;
    r.complete = a.complete && b.complete;
    return r;
}

} // namespace duals
