#ifndef DUALS_LINALG_HPP
#define DUALS_LINALG_HPP

#include <optional>
#include <vector>

#include "duals/functional.hpp"
#include "duals/order.hpp"
#include "duals/scalar.hpp"

namespace duals {

/// Rank decision policy.  Exact mode ignores the tolerance.  SVD mode
/// counts singular values below tol * sigma_max as zero and raises a
/// RankAmbiguityError when any singular value falls inside the band
/// [tol * sigma_max / 10, tol * sigma_max): such a value is too small to
/// trust as nonzero and too large to discard.
struct RankPolicy {
    enum class Mode { exact, svd };

    Mode mode = Mode::exact;
    double tol = 1e-8;
    /// Optional absolute floor: singular values below it are zero
    /// unconditionally (0 disables).
    double floor = 0.0;

    static RankPolicy exact_policy() { return {Mode::exact, 1e-8, 0.0}; }
    static RankPolicy svd_policy(double tol = 1e-8, double floor = 0.0) {
        if (!(tol > 0.0 && tol < 1.0))
            throw UsageError("rank tolerance must lie in (0,1)");
        return {Mode::svd, tol, floor};
    }
    static RankPolicy for_mode(ScalarMode m, double tol = 1e-8) {
        return m == ScalarMode::exact ? exact_policy() : svd_policy(tol);
    }

    void check_compatible(ScalarMode m) const {
        if ((m == ScalarMode::exact) != (mode == Mode::exact))
            throw UsageError("rank policy mode does not match scalar mode",
                             "mode-mismatch");
    }
};

/// Dense row-major matrix of Scalars (one mode throughout).
struct ScalarMatrix {
    std::vector<std::vector<Scalar>> rows;
    int cols = 0;
    ScalarMode mode = ScalarMode::exact;

    ScalarMatrix(int num_cols, ScalarMode m) : cols(num_cols), mode(m) {}
    int row_count() const { return static_cast<int>(rows.size()); }
    void add_row(std::vector<Scalar> row);
};

/// Basis of { v : M v = 0 }.  Exact mode: reduced row echelon form with
/// the standard free-column parameterization (deterministic).  SVD mode:
/// right singular vectors of negligible singular values.
std::vector<std::vector<Scalar>> nullspace(const ScalarMatrix& m,
                                           const RankPolicy& policy);

int rank(const ScalarMatrix& m, const RankPolicy& policy);

/// In-place reduced row echelon form over the Scalar field; returns the
/// pivot column of each surviving row.  Zero rows are removed.  Complex
/// mode uses partial pivoting with threshold tol * max|entry|.
std::vector<int> rref(std::vector<std::vector<Scalar>>& rows, const RankPolicy& policy);

/// Row space of a set of functionals over a fixed column list (exponents
/// sorted descending under the dual order of `order`), supporting
/// dimension and membership queries.  Exact mode reduces exactly; complex
/// mode projects orthogonally and tests the relative residual against the
/// policy tolerance.
class Span {
public:
    Span(const std::vector<DualFunctional>& basis, const OrderSpec& order,
         const RankPolicy& policy);

    int dim() const { return static_cast<int>(reduced_.size()); }
    bool contains(const DualFunctional& q) const;
    bool contains_all(const std::vector<DualFunctional>& qs) const;

private:
    std::vector<Exponent> columns_;
    std::vector<std::vector<Scalar>> reduced_;
    std::vector<int> pivots_;
    RankPolicy policy_;
    ScalarMode mode_;
    int num_vars_;
};

/// Functionals <-> coordinate vectors over an explicit column list.
std::vector<Scalar> functional_to_vector(const DualFunctional& q,
                                         const std::vector<Exponent>& columns,
                                         ScalarMode mode);
DualFunctional vector_to_functional(const std::vector<Scalar>& v,
                                    const std::vector<Exponent>& columns,
                                    int num_vars, ScalarMode mode);

/// Union of supports, sorted descending under the dual order.
std::vector<Exponent> support_union(const std::vector<DualFunctional>& qs,
                                    const OrderSpec& order);

} // namespace duals

#endif
