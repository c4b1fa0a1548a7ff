#ifndef DUALS_IDEAL_HPP
#define DUALS_IDEAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "duals/polynomial.hpp"

namespace duals {

/// Generator list for an ideal; all generators share the variable count
/// and scalar mode, and exact zeros are rejected.
class Ideal {
public:
    Ideal(std::vector<Polynomial> generators, int num_vars);

    int num_vars() const { return num_vars_; }
    ScalarMode mode() const { return mode_; }
    const std::vector<Polynomial>& generators() const { return gens_; }

    bool vanishes_at_origin() const;
    int max_generator_degree() const;
    int sum_generator_degrees() const;

    /// Provenance hash over the canonical text of the generators.
    std::uint64_t fingerprint() const;

private:
    std::vector<Polynomial> gens_;
    int num_vars_;
    ScalarMode mode_;
};

/// Substitute x -> x + y in every generator, moving the point y to the
/// origin.  Complex mode: a residual constant with magnitude at most
/// point_tol * max|coeff| of the shifted generator is dropped; a larger
/// one rejects the point.  Exact mode: any nonzero constant rejects the
/// point.
Ideal translate_to_point(const Ideal& ideal, const std::vector<Scalar>& y,
                         double point_tol = 1e-8);

/// Compose every generator with x -> Mx; M must be invertible (exact rank
/// check in exact mode, SVD in complex mode).
Ideal apply_linear_change(const Ideal& ideal,
                          const std::vector<std::vector<Scalar>>& m);

} // namespace duals

#endif
