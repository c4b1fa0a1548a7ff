#include "duals/linalg.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

namespace duals {

void ScalarMatrix::add_row(std::vector<Scalar> row) {
    if (static_cast<int>(row.size()) != cols)
        throw UsageError("matrix row length mismatch");
    for (const auto& s : row)
        if (s.mode() != mode) throw UsageError("matrix entry mode mismatch", "mode-mismatch");
    rows.push_back(std::move(row));
}

namespace {

double max_abs(const std::vector<std::vector<Scalar>>& rows) {
    double m = 0.0;
    for (const auto& r : rows)
        for (const auto& s : r) m = std::max(m, s.abs());
    return m;
}

Eigen::MatrixXcd to_eigen(const ScalarMatrix& m) {
    Eigen::MatrixXcd a(m.row_count(), m.cols);
    for (int i = 0; i < m.row_count(); ++i)
        for (int j = 0; j < m.cols; ++j)
            a(i, j) = m.rows[static_cast<size_t>(i)][static_cast<size_t>(j)].cx();
    return a;
}

// Count of negligible singular values under the policy; throws when a
// value falls inside the ambiguity band.
int count_zero_singular_values(const Eigen::VectorXd& sv, const RankPolicy& policy) {
    if (sv.size() == 0) return 0;
    double smax = sv(0);
    if (smax <= policy.floor || smax == 0.0) return static_cast<int>(sv.size());
    double hi = policy.tol * smax;
    double lo = hi / 10.0;
    int zeros = 0;
    for (int i = 0; i < sv.size(); ++i) {
        double s = sv(i);
        if (s <= policy.floor) {
            ++zeros;
        } else if (s < lo) {
            ++zeros;
        } else if (s < hi) {
            throw RankAmbiguityError(
                "singular value " + std::to_string(s) + " falls in the ambiguity band [" +
                std::to_string(lo) + ", " + std::to_string(hi) +
                "); rank decision is not trustworthy at this tolerance");
        }
    }
    return zeros;
}

} // namespace

std::vector<int> rref(std::vector<std::vector<Scalar>>& rows, const RankPolicy& policy) {
    if (rows.empty()) return {};
    const int ncols = static_cast<int>(rows[0].size());
    const ScalarMode mode = rows[0][0].mode();
    const double eps =
        policy.mode == RankPolicy::Mode::exact ? 0.0 : policy.tol * max_abs(rows);

    auto negligible = [&](const Scalar& s) {
        return mode == ScalarMode::exact ? s.is_zero() : s.abs() <= eps;
    };

    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < ncols && r < static_cast<int>(rows.size()); ++c) {
        // Pivot selection: first nonzero (exact) or largest magnitude
        // (complex) among the remaining rows.
        int pivot = -1;
        if (mode == ScalarMode::exact) {
            for (int i = r; i < static_cast<int>(rows.size()); ++i)
                if (!rows[static_cast<size_t>(i)][static_cast<size_t>(c)].is_zero()) {
                    pivot = i;
                    break;
                }
        } else {
            double best = eps;
            for (int i = r; i < static_cast<int>(rows.size()); ++i) {
                double a = rows[static_cast<size_t>(i)][static_cast<size_t>(c)].abs();
                if (a > best) {
                    best = a;
                    pivot = i;
                }
            }
        }
        if (pivot < 0) continue;
        std::swap(rows[static_cast<size_t>(r)], rows[static_cast<size_t>(pivot)]);
        Scalar inv = rows[static_cast<size_t>(r)][static_cast<size_t>(c)].inverse();
        for (int j = c; j < ncols; ++j)
            rows[static_cast<size_t>(r)][static_cast<size_t>(j)] *= inv;
        for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
            if (i == r) continue;
            Scalar f = rows[static_cast<size_t>(i)][static_cast<size_t>(c)];
            if (negligible(f)) {
                rows[static_cast<size_t>(i)][static_cast<size_t>(c)] =
                    Scalar::zero(mode);
                continue;
            }
            for (int j = c; j < ncols; ++j)
                rows[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
                    f * rows[static_cast<size_t>(r)][static_cast<size_t>(j)];
            rows[static_cast<size_t>(i)][static_cast<size_t>(c)] = Scalar::zero(mode);
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(pivots.size());
    return pivots;
}

std::vector<std::vector<Scalar>> nullspace(const ScalarMatrix& m,
                                           const RankPolicy& policy) {
    policy.check_compatible(m.mode);
    std::vector<std::vector<Scalar>> basis;

    if (m.row_count() == 0) {
        for (int j = 0; j < m.cols; ++j) {
            std::vector<Scalar> v(static_cast<size_t>(m.cols), Scalar::zero(m.mode));
            v[static_cast<size_t>(j)] = Scalar::one(m.mode);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    if (policy.mode == RankPolicy::Mode::exact) {
        auto rows = m.rows;
        std::vector<int> pivots = rref(rows, policy);
        std::vector<bool> is_pivot(static_cast<size_t>(m.cols), false);
        for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;
        for (int f = 0; f < m.cols; ++f) {
            if (is_pivot[static_cast<size_t>(f)]) continue;
            std::vector<Scalar> v(static_cast<size_t>(m.cols), Scalar::zero(m.mode));
            v[static_cast<size_t>(f)] = Scalar::one(m.mode);
            for (size_t r = 0; r < rows.size(); ++r)
                v[static_cast<size_t>(pivots[r])] = -rows[r][static_cast<size_t>(f)];
            basis.push_back(std::move(v));
        }
        return basis;
    }

    Eigen::MatrixXcd a = to_eigen(m);
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeFullV);
    int small = count_zero_singular_values(svd.singularValues(), policy);
    int null_dim = m.cols - (static_cast<int>(svd.singularValues().size()) - small);
    const auto& v = svd.matrixV();
    for (int j = m.cols - null_dim; j < m.cols; ++j) {
        std::vector<Scalar> vec;
        vec.reserve(static_cast<size_t>(m.cols));
        for (int i = 0; i < m.cols; ++i) vec.push_back(Scalar::complex(v(i, j)));
        basis.push_back(std::move(vec));
    }
    return basis;
}

int rank(const ScalarMatrix& m, const RankPolicy& policy) {
    policy.check_compatible(m.mode);
    if (m.row_count() == 0) return 0;
    if (policy.mode == RankPolicy::Mode::exact) {
        auto rows = m.rows;
        return static_cast<int>(rref(rows, policy).size());
    }
    Eigen::MatrixXcd a = to_eigen(m);
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(a);
    int small = count_zero_singular_values(svd.singularValues(), policy);
    return static_cast<int>(svd.singularValues().size()) - small;
}

std::vector<Scalar> functional_to_vector(const DualFunctional& q,
                                         const std::vector<Exponent>& columns,
                                         ScalarMode mode) {
    std::vector<Scalar> v(columns.size(), Scalar::zero(mode));
    size_t found = 0;
    for (size_t j = 0; j < columns.size(); ++j) {
        auto it = q.terms().find(columns[j]);
        if (it != q.terms().end()) {
            v[j] = it->second;
            ++found;
        }
    }
    if (found != q.terms().size())
        throw UsageError("functional support not covered by the column list");
    return v;
}

DualFunctional vector_to_functional(const std::vector<Scalar>& v,
                                    const std::vector<Exponent>& columns,
                                    int num_vars, ScalarMode mode) {
    DualFunctional q(num_vars, mode);
    for (size_t j = 0; j < v.size(); ++j) q.add_term(columns[j], v[j]);
    return q;
}

std::vector<Exponent> support_union(const std::vector<DualFunctional>& qs,
                                    const OrderSpec& order) {
    std::vector<Exponent> cols;
    for (const auto& q : qs)
        for (const auto& [e, c] : q.terms()) cols.push_back(e);
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    std::sort(cols.begin(), cols.end(), [&order](const Exponent& a, const Exponent& b) {
        return compare_dual(order, a, b) == std::strong_ordering::greater;
    });
    return cols;
}

Span::Span(const std::vector<DualFunctional>& basis, const OrderSpec& order,
           const RankPolicy& policy)
    : policy_(policy), mode_(ScalarMode::exact), num_vars_(order.num_vars()) {
    columns_ = support_union(basis, order);
    if (!basis.empty()) mode_ = basis.front().mode();
    policy_.check_compatible(mode_);
    for (const auto& q : basis) {
        if (q.is_zero()) continue;
        reduced_.push_back(functional_to_vector(q, columns_, mode_));
    }
    pivots_ = rref(reduced_, policy_);
}

bool Span::contains(const DualFunctional& q) const {
    if (q.is_zero()) return true;
    if (q.num_vars() != num_vars_ || q.mode() != mode_)
        throw UsageError("span membership across shapes or modes");

    // Terms outside the span's support can never be eliminated.
    std::vector<Scalar> v(columns_.size(), Scalar::zero(mode_));
    double outside = 0.0;
    for (const auto& [e, c] : q.terms()) {
        auto it = std::find(columns_.begin(), columns_.end(), e);
        if (it == columns_.end()) {
            if (mode_ == ScalarMode::exact) return false;
            outside += c.abs() * c.abs();
        } else {
            v[static_cast<size_t>(it - columns_.begin())] = c;
        }
    }

    // Eliminate the pivot coordinates with the reduced rows.
    for (size_t r = 0; r < reduced_.size(); ++r) {
        Scalar f = v[static_cast<size_t>(pivots_[r])];
        if (f.is_zero()) continue;
        for (size_t j = 0; j < v.size(); ++j) v[j] -= f * reduced_[r][j];
    }

    if (mode_ == ScalarMode::exact) {
        return std::all_of(v.begin(), v.end(),
                           [](const Scalar& s) { return s.is_zero(); });
    }
    double residual2 = outside;
    for (const auto& s : v) residual2 += s.abs() * s.abs();
    double norm = q.norm2();
    return std::sqrt(residual2) <= policy_.tol * std::max(norm, 1e-300);
}

bool Span::contains_all(const std::vector<DualFunctional>& qs) const {
    return std::all_of(qs.begin(), qs.end(),
                       [this](const DualFunctional& q) { return contains(q); });
}

} // namespace duals
