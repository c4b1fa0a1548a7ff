#include "duals/ideal.hpp"

#include <algorithm>

#include "duals/linalg.hpp"

namespace duals {

Ideal::Ideal(std::vector<Polynomial> generators, int num_vars)
    : gens_(std::move(generators)), num_vars_(num_vars) {
    if (gens_.empty()) throw UsageError("ideal needs at least one generator");
    mode_ = gens_.front().mode();
    for (const auto& g : gens_) {
        if (g.num_vars() != num_vars_)
            throw UsageError("generator variable count mismatch");
        if (g.mode() != mode_)
            throw UsageError("generators mix scalar modes", "mode-mismatch");
        if (g.is_zero()) throw UsageError("zero generator");
    }
}

bool Ideal::vanishes_at_origin() const {
    return std::all_of(gens_.begin(), gens_.end(),
                       [](const Polynomial& g) { return g.constant_term().is_zero(); });
}

int Ideal::max_generator_degree() const {
    int d = 0;
    for (const auto& g : gens_) d = std::max(d, g.degree());
    return d;
}

int Ideal::sum_generator_degrees() const {
    int d = 0;
    for (const auto& g : gens_) d += g.degree();
    return d;
}

std::uint64_t Ideal::fingerprint() const {
    // FNV-1a over the canonical generator text.
    std::vector<std::string> names;
    for (int i = 0; i < num_vars_; ++i) names.push_back("x" + std::to_string(i));
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ull;
        }
    };
    mix(to_string(mode_));
    mix(std::to_string(num_vars_));
    for (const auto& g : gens_) mix(g.str(names));
    return h;
}

Ideal translate_to_point(const Ideal& ideal, const std::vector<Scalar>& y,
                         double point_tol) {
    std::vector<Polynomial> shifted;
    shifted.reserve(ideal.generators().size());
    for (const auto& g : ideal.generators()) {
        Polynomial s = g.translated(y);
        Scalar c = s.constant_term();
        if (ideal.mode() == ScalarMode::exact) {
            if (!c.is_zero())
                throw PointError("point is not on the variety (generator has nonzero "
                                 "constant term after translation)");
        } else if (!c.is_zero()) {
            double scale = s.max_coeff_abs();
            if (c.abs() > point_tol * scale)
                throw PointError("point is not on the variety within tolerance "
                                 "(residual " +
                                 std::to_string(c.abs()) + ", threshold " +
                                 std::to_string(point_tol * scale) + ")");
            Polynomial cleaned = s;
            cleaned.add_term(Exponent::zero(s.num_vars()), -c);
            s = std::move(cleaned);
        }
        if (s.is_zero())
            throw UsageError("generator became zero after translation");
        shifted.push_back(std::move(s));
    }
    return Ideal(std::move(shifted), ideal.num_vars());
}

Ideal apply_linear_change(const Ideal& ideal,
                          const std::vector<std::vector<Scalar>>& m) {
    const int n = ideal.num_vars();
    if (static_cast<int>(m.size()) != n)
        throw UsageError("change-of-coordinates matrix dimension mismatch");
    ScalarMatrix mat(n, ideal.mode());
    for (const auto& row : m) mat.add_row(row);
    RankPolicy policy = RankPolicy::for_mode(ideal.mode());
    if (rank(mat, policy) != n)
        throw UsageError("change-of-coordinates matrix is singular");

    std::vector<Polynomial> changed;
    changed.reserve(ideal.generators().size());
    for (const auto& g : ideal.generators()) changed.push_back(g.linear_change(m));
    return Ideal(std::move(changed), n);
}

} // namespace duals
