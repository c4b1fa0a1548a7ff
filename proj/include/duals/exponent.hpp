#ifndef DUALS_EXPONENT_HPP
#define DUALS_EXPONENT_HPP

#include <compare>
#include <cstdint>
#include <numeric>
#include <vector>

#include "duals/errors.hpp"

namespace duals {

/// Dense exponent vector in Z_{>=0}^N.  Doubles as a monomial x^alpha and
/// as a differential monomial index for dual functionals.
class Exponent {
public:
    Exponent() = default;
    explicit Exponent(std::vector<int> entries) : e_(std::move(entries)) {
        for (int v : e_)
            if (v < 0) throw UsageError("negative exponent entry");
    }
    static Exponent zero(int num_vars) {
        return Exponent(std::vector<int>(static_cast<size_t>(num_vars), 0));
    }

    int num_vars() const { return static_cast<int>(e_.size()); }
    int operator[](int i) const { return e_[static_cast<size_t>(i)]; }
    const std::vector<int>& entries() const { return e_; }

    /// Total degree |alpha|.
    int degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }

    /// Degree restricted to the variables listed in `vars` (sorted indices).
    int degree_on(const std::vector<int>& vars) const {
        int d = 0;
        for (int i : vars) d += e_[static_cast<size_t>(i)];
        return d;
    }

    bool is_zero() const {
        for (int v : e_)
            if (v != 0) return false;
        return true;
    }

    /// Componentwise alpha <= beta, i.e. x^alpha divides x^beta.
    bool divides(const Exponent& beta) const {
        for (size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > beta.e_[i]) return false;
        return true;
    }

    Exponent plus(const Exponent& o) const {
        std::vector<int> r(e_);
        for (size_t i = 0; i < r.size(); ++i) r[i] += o.e_[i];
        return Exponent(std::move(r));
    }

    /// alpha - beta; requires beta.divides(*this).
    Exponent minus(const Exponent& o) const {
        std::vector<int> r(e_);
        for (size_t i = 0; i < r.size(); ++i) {
            r[i] -= o.e_[i];
            if (r[i] < 0) throw UsageError("exponent subtraction went negative");
        }
        return Exponent(std::move(r));
    }

    friend auto operator<=>(const Exponent& a, const Exponent& b) = default;

private:
    std::vector<int> e_;
};

/// All exponents with |alpha| <= k in `num_vars` variables, sorted by
/// (degree, lexicographic).  Count is C(num_vars + k, num_vars).
std::vector<Exponent> exponents_up_to(int num_vars, int k);

/// All exponents of total degree exactly d.
std::vector<Exponent> exponents_of_degree(int num_vars, int d);

/// C(n, k) as int64 (small arguments only).
std::int64_t binomial(int n, int k);

} // namespace duals

#endif
