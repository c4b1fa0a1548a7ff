#ifndef DUALS_FUNCTIONAL_HPP
#define DUALS_FUNCTIONAL_HPP

#include <map>
#include <string>
#include <vector>

#include "duals/polynomial.hpp"

namespace duals {

/// Differential functional at the origin: a finite sum q = sum c_a d^a of
/// normalized differential monomials (d^a = (1/a!) d^|a|/dx^a).  With this
/// normalization d^a(x^b) = delta_{ab}, so the pairing with a polynomial
/// is the coefficientwise dot product over the shared support.
class DualFunctional {
public:
    DualFunctional(int num_vars, ScalarMode mode)
        : num_vars_(num_vars), mode_(mode) {}

    static DualFunctional unit(int num_vars, ScalarMode mode) {
        DualFunctional q(num_vars, mode);
        q.add_term(Exponent::zero(num_vars), Scalar::one(mode));
        return q;
    }
    static DualFunctional monomial(const Exponent& e, const Scalar& c) {
        DualFunctional q(e.num_vars(), c.mode());
        q.add_term(e, c);
        return q;
    }

    int num_vars() const { return num_vars_; }
    ScalarMode mode() const { return mode_; }
    const std::map<Exponent, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exponent& e, const Scalar& c);
    Scalar coefficient(const Exponent& e) const;

    /// ord q = max |a| over the support; 0 for the zero functional.
    int order() const;
    /// ord_A q: max over terms of the degree restricted to the variables
    /// in `vars` (sorted indices); 0 for the zero functional.
    int order_on(const std::vector<int>& vars) const;

    DualFunctional& operator+=(const DualFunctional& o);
    DualFunctional& operator-=(const DualFunctional& o);
    friend DualFunctional operator+(DualFunctional a, const DualFunctional& b) {
        return a += b;
    }
    friend DualFunctional operator-(DualFunctional a, const DualFunctional& b) {
        return a -= b;
    }
    DualFunctional scaled(const Scalar& c) const;
    double norm2() const;

    /// q(f) = sum_a q_a f_a.
    Scalar apply(const Polynomial& f) const;

    friend bool operator==(const DualFunctional& a, const DualFunctional& b) {
        return a.num_vars_ == b.num_vars_ && a.mode_ == b.mode_ &&
               a.terms_ == b.terms_;
    }

    std::string str(const std::vector<std::string>& var_names) const;

private:
    int num_vars_;
    ScalarMode mode_;
    std::map<Exponent, Scalar> terms_;
};

/// Contraction g.q: the functional f -> q(g f).  On monomials it shifts
/// exponents down, d^a -> d^{a-b}, annihilating any term that would go
/// negative.
DualFunctional contract(const Polynomial& g, const DualFunctional& q);

/// in_dual(q): term maximal under the dual order of `order`.
std::pair<Exponent, Scalar> initial_term(const OrderSpec& order,
                                         const DualFunctional& q);

} // namespace duals

#endif
