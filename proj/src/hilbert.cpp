#include "duals/hilbert.hpp"

#include <algorithm>
#include <cmath>

namespace duals {

HilbertData hilbert_function(const Ideal& ideal, int k_max, const RankPolicy& policy) {
    if (k_max < 0) throw UsageError("k_max must be non-negative");
    CompletionSweep sweep(ideal, policy, OrderSpec::graded(ideal.num_vars()));
    HilbertData data;
    data.k_max = k_max;
    int prev_dim = 0;
    for (int k = 0; k <= k_max; ++k) {
        if (k > 0) sweep.step();
        int dim = sweep.current().dim();
        data.values.push_back(dim - prev_dim);
        prev_dim = dim;
    }
    return data;
}

HilbertData regularity_and_multiplicity(const Ideal& ideal,
                                        const RegularityOptions& options,
                                        const RankPolicy& policy) {
    const int window = std::max(options.window.value_or(ideal.max_generator_degree() + 2), 1);

    if (options.assume_rho && options.assume_mu) {
        HilbertData data;
        data.rho = *options.assume_rho;
        data.mu = *options.assume_mu;
        data.hp_value = *options.assume_mu;
        data.certified = true; // externally certified by the user
        data.window = window;
        data.k_max = -1;
        return data;
    }

    const int k_cap =
        std::max(options.k_cap.value_or(ideal.sum_generator_degrees() + window + 2), 1);

    CompletionSweep sweep(ideal, policy, OrderSpec::graded(ideal.num_vars()));
    HilbertData data;
    data.window = window;

    int prev_dim = 0;
    int run_value = -1, run_start = 0, run_len = 0;
    for (int k = 0; k <= k_cap; ++k) {
        if (k > 0) sweep.step();
        const int dim = sweep.current().dim();
        const int h = dim - prev_dim;
        data.values.push_back(h);
        data.k_max = k;

        if (h == 0) {
            // dim D^{k-1} = dim D^k certifies the full dual space, so the
            // ideal is 0-dimensional here and H stays 0 from k on.
            data.hp_value = dim;
            data.mu = dim;
            data.rho = k;
            data.certified = true;
            if (options.assume_rho) data.rho = *options.assume_rho;
            if (options.assume_mu) data.mu = *options.assume_mu;
            return data;
        }

        if (h == run_value) {
            ++run_len;
        } else {
            run_value = h;
            run_start = k;
            run_len = 1;
        }
        if (run_len >= window) {
            data.hp_value = run_value;
            data.mu = run_value;
            data.rho = run_start;
            data.certified = false; // stabilization heuristic, not the
                                    // certified external algorithm
            if (options.assume_rho) data.rho = *options.assume_rho;
            if (options.assume_mu) data.mu = *options.assume_mu;
            return data;
        }
        prev_dim = dim;
    }
    throw StabilizationError(
        "Hilbert function did not show " + std::to_string(window) +
        " consecutive equal values by degree " + std::to_string(k_cap) +
        "; raise the window/cap or supply certified values");
}

StaircaseReport standard_monomials(const Ideal& ideal, int k, const OrderSpec& order,
                                   const RankPolicy& policy) {
    TruncatedDualSpace space = truncated_dual_direct(ideal, k, policy, order);
    StaircaseReport report;
    report.k = k;
    report.standard_monomials = initial_support(space);
    std::sort(report.standard_monomials.begin(), report.standard_monomials.end());

    for (const auto& e : exponents_up_to(ideal.num_vars(), k)) {
        if (!std::binary_search(report.standard_monomials.begin(),
                                report.standard_monomials.end(), e))
            report.initial_ideal.push_back(e);
    }
    return report;
}

namespace {

double poly_norm2(const Polynomial& f) {
    double s = 0.0;
    for (const auto& [e, c] : f.terms()) s += c.abs() * c.abs();
    return std::sqrt(s);
}

} // namespace

bool homogeneous_membership(const Polynomial& f, const Ideal& ideal,
                            const RankPolicy& policy) {
    for (const auto& g : ideal.generators()) {
        if (!g.is_homogeneous())
            throw UsageError("membership test needs homogeneous generators (the "
                             "dual criterion fails otherwise)");
        if (g.degree() == 0) return true; // unit ideal
    }
    if (f.is_zero()) return true;
    if (f.num_vars() != ideal.num_vars() || f.mode() != ideal.mode())
        throw UsageError("membership query polynomial shape mismatch");

    const int d = f.degree();
    TruncatedDualSpace space = truncated_dual_direct(ideal, d, policy);
    const double fnorm = poly_norm2(f);
    for (const auto& q : space.basis) {
        Scalar v = q.apply(f);
        if (ideal.mode() == ScalarMode::exact) {
            if (!v.is_zero()) return false;
        } else if (v.abs() >= policy.tol * fnorm * std::max(q.norm2(), 1e-300)) {
            return false;
        }
    }
    return true;
}

} // namespace duals
