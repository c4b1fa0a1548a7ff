#include "oracles.hpp"

#include <algorithm>

#include "duals/linalg.hpp"

namespace oracle {

namespace {

Polynomial differentiate(const Polynomial& f, int var) {
    Polynomial df(f.num_vars(), f.mode());
    for (const auto& [e, c] : f.terms()) {
        int power = e[var];
        if (power == 0) continue;
        std::vector<int> lowered(e.entries());
        lowered[static_cast<size_t>(var)] -= 1;
        df.add_term(Exponent(std::move(lowered)), c * Scalar::integer(power, f.mode()));
    }
    return df;
}

} // namespace

Scalar apply_by_differentiation(const DualFunctional& q, const Polynomial& f) {
    Scalar total = Scalar::zero(f.mode());
    for (const auto& [alpha, c] : q.terms()) {
        Polynomial derived = f;
        Scalar factorial = Scalar::one(f.mode());
        for (int i = 0; i < f.num_vars(); ++i) {
            for (int rep = 0; rep < alpha[i]; ++rep)
                derived = differentiate(derived, i);
            for (int rep = 2; rep <= alpha[i]; ++rep)
                factorial *= Scalar::integer(rep, f.mode());
        }
        total += c * derived.constant_term() / factorial;
    }
    return total;
}

std::vector<Exponent> minimalize(std::vector<Exponent> gens) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Exponent> kept;
    for (size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < gens.size() && !redundant; ++j)
            if (i != j && gens[j].divides(gens[i])) redundant = true;
        if (!redundant) kept.push_back(gens[i]);
    }
    return kept;
}

bool monomial_member(const Exponent& m, const std::vector<Exponent>& gens) {
    return std::any_of(gens.begin(), gens.end(),
                       [&m](const Exponent& g) { return g.divides(m); });
}

bool monomial_ideal_equal(const std::vector<Exponent>& a,
                          const std::vector<Exponent>& b) {
    return std::all_of(a.begin(), a.end(),
                       [&b](const Exponent& g) { return monomial_member(g, b); }) &&
           std::all_of(b.begin(), b.end(),
                       [&a](const Exponent& g) { return monomial_member(g, a); });
}

std::vector<Exponent> staircase_standard(const std::vector<Exponent>& gens, int num_vars,
                                         int k) {
    std::vector<Exponent> standard;
    for (const auto& e : duals::exponents_up_to(num_vars, k))
        if (!monomial_member(e, gens)) standard.push_back(e);
    return standard;
}

std::vector<int> monomial_hilbert(const std::vector<Exponent>& gens, int num_vars,
                                  int kmax) {
    std::vector<int> h(static_cast<size_t>(kmax) + 1, 0);
    for (int d = 0; d <= kmax; ++d)
        for (const auto& e : duals::exponents_of_degree(num_vars, d))
            if (!monomial_member(e, gens)) ++h[static_cast<size_t>(d)];
    return h;
}

std::vector<Exponent> monomial_colon_var(const std::vector<Exponent>& gens, int var) {
    std::vector<Exponent> out;
    for (const auto& g : gens) {
        if (g[var] > 0) {
            std::vector<int> e(g.entries());
            e[static_cast<size_t>(var)] -= 1;
            out.emplace_back(std::move(e));
        } else {
            out.push_back(g);
        }
    }
    return minimalize(std::move(out));
}

std::vector<Exponent> monomial_intersect(const std::vector<Exponent>& a,
                                         const std::vector<Exponent>& b) {
    std::vector<Exponent> out;
    for (const auto& ga : a)
        for (const auto& gb : b) {
            std::vector<int> e(static_cast<size_t>(ga.num_vars()));
            for (int i = 0; i < ga.num_vars(); ++i)
                e[static_cast<size_t>(i)] = std::max(ga[i], gb[i]);
            out.emplace_back(std::move(e));
        }
    return minimalize(std::move(out));
}

std::vector<Exponent> monomial_colon_maximal(const std::vector<Exponent>& gens,
                                             int num_vars) {
    std::vector<Exponent> acc = monomial_colon_var(gens, 0);
    for (int v = 1; v < num_vars; ++v)
        acc = monomial_intersect(acc, monomial_colon_var(gens, v));
    return acc;
}

std::vector<Exponent> monomial_saturate_origin(std::vector<Exponent> gens,
                                               int num_vars) {
    gens = minimalize(std::move(gens));
    while (true) {
        auto next = monomial_colon_maximal(gens, num_vars);
        if (monomial_ideal_equal(gens, next)) return gens;
        gens = std::move(next);
    }
}

std::pair<int, int> monomial_rho_mu(const std::vector<Exponent>& gens, int num_vars) {
    int lcm_deg = 0;
    for (int v = 0; v < num_vars; ++v) {
        int top = 0;
        for (const auto& g : gens) top = std::max(top, g[v]);
        lcm_deg += top;
    }
    const int k_top = lcm_deg + num_vars + 2;
    auto h = monomial_hilbert(gens, num_vars, k_top);
    int mu = h.back();
    int rho = k_top;
    while (rho > 0 && h[static_cast<size_t>(rho) - 1] == mu) --rho;
    return {rho, mu};
}

Ideal monomial_ideal(const std::vector<Exponent>& gens, int num_vars, ScalarMode mode) {
    std::vector<Polynomial> polys;
    polys.reserve(gens.size());
    for (const auto& g : gens)
        polys.push_back(Polynomial::monomial(g, Scalar::one(mode)));
    return Ideal(std::move(polys), num_vars);
}

Polynomial random_poly(int num_vars, int max_degree, std::mt19937_64& rng,
                       bool allow_constant) {
    std::uniform_int_distribution<int> term_count(1, 4);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> den(1, 2);
    const auto pool = duals::exponents_up_to(num_vars, max_degree);
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    Polynomial p(num_vars, ScalarMode::exact);
    int terms = term_count(rng);
    for (int t = 0; t < terms; ++t) {
        const Exponent& e = pool[pick(rng)];
        if (!allow_constant && e.is_zero()) continue;
        int c = coeff(rng);
        if (c == 0) c = 1;
        p.add_term(e, Scalar::rational(mpq_class(c, den(rng))));
    }
    return p;
}

Polynomial random_vanishing_poly(int num_vars, int max_degree, std::mt19937_64& rng) {
    while (true) {
        Polynomial p = random_poly(num_vars, max_degree, rng, false);
        if (!p.is_zero()) return p;
    }
}

Ideal random_vanishing_ideal(int num_vars, int max_gens, int max_degree,
                             std::mt19937_64& rng) {
    std::uniform_int_distribution<int> count(1, max_gens);
    std::vector<Polynomial> gens;
    int n = count(rng);
    for (int i = 0; i < n; ++i)
        gens.push_back(random_vanishing_poly(num_vars, max_degree, rng));
    return Ideal(std::move(gens), num_vars);
}

std::vector<Exponent> random_monomial_gens(int num_vars, int max_degree,
                                           std::mt19937_64& rng) {
    std::uniform_int_distribution<int> count(1, 4);
    std::vector<Exponent> pool;
    for (const auto& e : duals::exponents_up_to(num_vars, max_degree))
        if (e.degree() >= 1) pool.push_back(e);
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    std::vector<Exponent> gens;
    int n = count(rng);
    for (int i = 0; i < n; ++i) gens.push_back(pool[pick(rng)]);
    return minimalize(std::move(gens));
}

DualFunctional random_functional(int num_vars, int max_order, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> term_count(1, 4);
    std::uniform_int_distribution<int> coeff(-3, 3);
    const auto pool = duals::exponents_up_to(num_vars, max_order);
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    DualFunctional q(num_vars, ScalarMode::exact);
    int terms = term_count(rng);
    for (int t = 0; t < terms; ++t) {
        int c = coeff(rng);
        if (c == 0) c = 2;
        q.add_term(pool[pick(rng)], Scalar::rational(c));
    }
    return q;
}

std::vector<Exponent> random_saturated_curve_monomial_ideal(int num_vars,
                                                            std::mt19937_64& rng) {
    std::uniform_int_distribution<int> axis_count(1, std::min(num_vars, 2));
    std::uniform_int_distribution<int> axis_pick(0, num_vars - 1);
    std::uniform_int_distribution<int> power(1, 3);

    // Each chosen axis contributes a cylinder: a 0-dimensional monomial
    // staircase in the remaining variables, free along the axis.
    std::vector<int> axes;
    int want = axis_count(rng);
    while (static_cast<int>(axes.size()) < want) {
        int a = axis_pick(rng);
        if (std::find(axes.begin(), axes.end(), a) == axes.end()) axes.push_back(a);
    }

    std::vector<Exponent> result;
    bool first = true;
    for (int axis : axes) {
        std::vector<Exponent> cylinder;
        // Pure powers of every non-axis variable keep the component
        // 0-dimensional transversally; a couple of extra mixed monomials
        // vary the staircase.
        for (int v = 0; v < num_vars; ++v) {
            if (v == axis) continue;
            std::vector<int> e(static_cast<size_t>(num_vars), 0);
            e[static_cast<size_t>(v)] = power(rng);
            cylinder.emplace_back(std::move(e));
        }
        for (int extra = 0; extra < 2; ++extra) {
            std::vector<int> e(static_cast<size_t>(num_vars), 0);
            bool nonzero = false;
            for (int v = 0; v < num_vars; ++v) {
                if (v == axis) continue;
                int p = power(rng) - 1;
                e[static_cast<size_t>(v)] = p;
                if (p > 0) nonzero = true;
            }
            if (nonzero) cylinder.emplace_back(std::move(e));
        }
        cylinder = minimalize(std::move(cylinder));
        result = first ? cylinder : monomial_intersect(result, cylinder);
        first = false;
    }
    return minimalize(std::move(result));
}

bool spans_equal(const std::vector<DualFunctional>& a,
                 const std::vector<DualFunctional>& b, const duals::OrderSpec& order,
                 const duals::RankPolicy& policy) {
    duals::Span span_a(a, order, policy);
    duals::Span span_b(b, order, policy);
    return span_a.dim() == span_b.dim() && span_a.contains_all(b) &&
           span_b.contains_all(a);
}

} // namespace oracle
