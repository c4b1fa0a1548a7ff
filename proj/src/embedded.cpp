#include "duals/embedded.hpp"

#include <algorithm>
#include <random>

#include <Eigen/Dense>

namespace duals {

bool subspace_strictly_contains(const EliminatingDualSpace& a,
                                const std::vector<DualFunctional>& b,
                                const RankPolicy& policy) {
    Span span_a(a.basis, a.order, policy);
    for (const auto& q : b)
        if (!span_a.contains(q))
            throw MathError("subspace containment violated; the rank policy made "
                            "inconsistent decisions across the two spaces",
                            "containment-violation");
    int dim_b = static_cast<int>(reduce_basis(b, a.order, policy).size());
    return dim_b < a.dim();
}

EmbeddedVerdict is_origin_embedded_in_curve(const Ideal& ideal,
                                            const EmbeddedOptions& options,
                                            const RankPolicy& policy) {
    policy.check_compatible(ideal.mode());
    const int x1 = options.pivot_var;
    if (x1 < 0 || x1 >= ideal.num_vars())
        throw UsageError("pivot variable index out of range");

    HilbertData hd = regularity_and_multiplicity(ideal, options.regularity, policy);
    const int rho = *hd.rho;
    const int mu = *hd.mu;
    // Floor k at 1 so E^{k-1} is defined even for a smooth curve point
    // (rho = 0, mu = 1).
    const int k = std::max({rho, mu - 1, 1});

    EliminatingDualSpace e_k =
        eliminating_dual(ideal, {x1}, k, policy, options.max_degree);
    if (!e_k.complete)
        throw StabilizationError(
            "eliminating dual E^" + std::to_string(k) +
            " did not stabilize by degree " + std::to_string(e_k.cap_used) +
            "; the ideal is not in regular position relative to the pivot variable");

    EliminatingDualSpace x_e = quotient_eliminating_dual(e_k, x1, policy);

    // E^{k-1} is the A-filtration slice of the reduced E^k basis: under an
    // elimination order the initial term of each element carries its full
    // ord_A, so the elements with ord_A <= k-1 span the lower space.
    EliminatingDualSpace e_km1 = e_k;
    e_km1.d = k - 1;
    e_km1.basis.clear();
    for (const auto& q : e_k.basis)
        if (q.order_on(e_k.eliminated) <= k - 1) e_km1.basis.push_back(q);

    const bool embedded = subspace_strictly_contains(e_km1, x_e.basis, policy);

    EmbeddedVerdict verdict;
    verdict.embedded = embedded;
    verdict.k = k;
    verdict.rho = rho;
    verdict.mu = mu;
    verdict.certified_hilbert = hd.certified;
    verdict.dim_E_k = e_k.dim();
    verdict.dim_xE_k = x_e.dim();
    verdict.dim_E_km1 = e_km1.dim();
    verdict.rank_tol = policy.mode == RankPolicy::Mode::exact ? 0.0 : policy.tol;
    verdict.point_tol = options.point_tol;
    if (options.verbose) {
        verdict.basis_E_k = e_k.basis;
        verdict.basis_xE_k = x_e.basis;
        verdict.basis_E_km1 = e_km1.basis;
    }
    return verdict;
}

std::vector<std::vector<Scalar>> random_linear_change(int num_vars, ScalarMode mode,
                                                      std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const int n = num_vars;

    if (mode == ScalarMode::exact) {
        std::uniform_int_distribution<int> entry(-9, 9);
        while (true) {
            std::vector<std::vector<Scalar>> m(static_cast<size_t>(n));
            ScalarMatrix mat(n, mode);
            for (auto& row : m) {
                row.reserve(static_cast<size_t>(n));
                for (int j = 0; j < n; ++j)
                    row.push_back(Scalar::rational(entry(rng)));
                mat.add_row(row);
            }
            if (rank(mat, RankPolicy::exact_policy()) == n) return m;
        }
    }

    std::uniform_real_distribution<double> coord(-1.0, 1.0);
    while (true) {
        Eigen::MatrixXcd a(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                double re, im;
                do {
                    re = coord(rng);
                    im = coord(rng);
                } while (re * re + im * im > 1.0);
                a(i, j) = std::complex<double>(re, im);
            }
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a);
        double smin = svd.singularValues()(n - 1);
        if (smin > 0.0 && svd.singularValues()(0) / smin < 100.0) {
            std::vector<std::vector<Scalar>> m(static_cast<size_t>(n));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    m[static_cast<size_t>(i)].push_back(Scalar::complex(a(i, j)));
            return m;
        }
    }
}

EmbeddedVerdict embedded_point_test(const Ideal& ideal, const std::vector<Scalar>& p,
                                    const EmbeddedOptions& options,
                                    const RankPolicy& policy) {
    if (static_cast<int>(p.size()) != ideal.num_vars())
        throw UsageError("point dimension does not match the ideal");
    Ideal at_origin = translate_to_point(ideal, p, options.point_tol);

    std::vector<std::uint64_t> seeds;
    std::string last_failure;
    for (int attempt = 0; attempt <= options.retry_limit; ++attempt) {
        std::uint64_t seed = options.seed + static_cast<std::uint64_t>(attempt);
        seeds.push_back(seed);
        auto m = random_linear_change(ideal.num_vars(), ideal.mode(), seed);
        Ideal changed = apply_linear_change(at_origin, m);
        try {
            EmbeddedVerdict verdict = is_origin_embedded_in_curve(changed, options, policy);
            verdict.seeds = seeds;
            verdict.change_matrix = m;
            verdict.retries = attempt;
            return verdict;
        } catch (const StabilizationError& e) {
            last_failure = e.what();
        }
    }
    throw MathError("embedded point test failed after " +
                        std::to_string(options.retry_limit + 1) +
                        " coordinate changes; last failure: " + last_failure,
                    "retries-exhausted");
}

} // namespace duals
