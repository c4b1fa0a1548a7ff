#include "duals/functional.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace duals {

void DualFunctional::add_term(const Exponent& e, const Scalar& c) {
    if (e.num_vars() != num_vars_)
        throw UsageError("exponent length does not match functional variables");
    if (c.mode() != mode_)
        throw UsageError("coefficient mode does not match functional mode",
                         "mode-mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Scalar DualFunctional::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar::zero(mode_) : it->second;
}

int DualFunctional::order() const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.degree());
    return d;
}

int DualFunctional::order_on(const std::vector<int>& vars) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.degree_on(vars));
    return d;
}

DualFunctional& DualFunctional::operator+=(const DualFunctional& o) {
    if (o.num_vars_ != num_vars_ || o.mode_ != mode_)
        throw UsageError("functional shape mismatch in addition");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

DualFunctional& DualFunctional::operator-=(const DualFunctional& o) {
    if (o.num_vars_ != num_vars_ || o.mode_ != mode_)
        throw UsageError("functional shape mismatch in subtraction");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

DualFunctional DualFunctional::scaled(const Scalar& c) const {
    DualFunctional r(num_vars_, mode_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms_) r.add_term(e, v * c);
    return r;
}

double DualFunctional::norm2() const {
    double s = 0.0;
    for (const auto& [e, c] : terms_) {
        double a = c.abs();
        s += a * a;
    }
    return std::sqrt(s);
}

Scalar DualFunctional::apply(const Polynomial& f) const {
    if (f.num_vars() != num_vars_)
        throw UsageError("functional applied to polynomial in different variables");
    if (f.mode() != mode_)
        throw UsageError("functional applied across scalar modes", "mode-mismatch");
    Scalar acc = Scalar::zero(mode_);
    // Iterate over the smaller support.
    if (terms_.size() <= f.terms().size()) {
        for (const auto& [e, c] : terms_) acc += c * f.coefficient(e);
    } else {
        for (const auto& [e, c] : f.terms()) acc += coefficient(e) * c;
    }
    return acc;
}

std::string DualFunctional::str(const std::vector<std::string>& var_names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        for (int i = 0; i < num_vars_; ++i) {
            if (e[i] == 0) continue;
            os << "*d" << var_names[static_cast<size_t>(i)];
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

DualFunctional contract(const Polynomial& g, const DualFunctional& q) {
    if (g.num_vars() != q.num_vars())
        throw UsageError("contraction across different variable counts");
    if (g.mode() != q.mode())
        throw UsageError("contraction across scalar modes", "mode-mismatch");
    DualFunctional r(q.num_vars(), q.mode());
    for (const auto& [beta, cb] : g.terms())
        for (const auto& [alpha, ca] : q.terms())
            if (beta.divides(alpha)) r.add_term(alpha.minus(beta), cb * ca);
    return r;
}

std::pair<Exponent, Scalar> initial_term(const OrderSpec& order,
                                         const DualFunctional& q) {
    if (q.is_zero())
        throw UsageError("initial term of the zero functional is undefined");
    const std::pair<const Exponent, Scalar>* best = nullptr;
    for (const auto& t : q.terms()) {
        if (!best || compare_dual(order, t.first, best->first) ==
                         std::strong_ordering::greater)
            best = &t;
    }
    return {best->first, best->second};
}

} // namespace duals
