#ifndef DUALS_POLYNOMIAL_HPP
#define DUALS_POLYNOMIAL_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "duals/exponent.hpp"
#include "duals/order.hpp"
#include "duals/scalar.hpp"

namespace duals {

/// Sparse multivariate polynomial: exponent -> coefficient, no stored
/// zeros.  All terms share the scalar mode and variable count.
class Polynomial {
public:
    Polynomial(int num_vars, ScalarMode mode) : num_vars_(num_vars), mode_(mode) {}

    static Polynomial zero(int num_vars, ScalarMode mode) {
        return Polynomial(num_vars, mode);
    }
    static Polynomial monomial(const Exponent& e, const Scalar& c) {
        Polynomial p(e.num_vars(), c.mode());
        p.add_term(e, c);
        return p;
    }
    static Polynomial constant(int num_vars, const Scalar& c) {
        return monomial(Exponent::zero(num_vars), c);
    }

    int num_vars() const { return num_vars_; }
    ScalarMode mode() const { return mode_; }
    const std::map<Exponent, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    /// Accumulate c * x^e, erasing the term if the sum vanishes.
    void add_term(const Exponent& e, const Scalar& c);

    Scalar coefficient(const Exponent& e) const;
    Scalar constant_term() const { return coefficient(Exponent::zero(num_vars_)); }

    /// Max total degree; -1 for the zero polynomial.
    int degree() const;
    /// Min total degree over the support (order of vanishing at 0); -1 for 0.
    int valuation() const;
    /// All terms share one total degree (zero polynomial counts as
    /// homogeneous).
    bool is_homogeneous() const;
    /// Largest coefficient magnitude (0 for the zero polynomial).
    double max_coeff_abs() const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial scaled(const Scalar& c) const;
    Polynomial shifted_by_monomial(const Exponent& beta) const; // x^beta * f

    /// Terms with |alpha| <= k only.
    Polynomial truncate(int k) const;

    /// f(x + y): exact coordinate shift in either mode.
    Polynomial translated(const std::vector<Scalar>& y) const;

    /// Compose with x -> Mx (rows of `m` give the images of the variables:
    /// x_i -> sum_j m[i][j] x_j).
    Polynomial linear_change(const std::vector<std::vector<Scalar>>& m) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.num_vars_ == b.num_vars_ && a.mode_ == b.mode_ &&
               a.terms_ == b.terms_;
    }

    std::string str(const std::vector<std::string>& var_names) const;

private:
    int num_vars_;
    ScalarMode mode_;
    std::map<Exponent, Scalar> terms_;
};

/// in_>=(f) with its coefficient; errors on the zero polynomial.
std::pair<Exponent, Scalar> initial_term(const OrderSpec& order, const Polynomial& f);

} // namespace duals

#endif
