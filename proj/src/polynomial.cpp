#include "duals/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace duals {

void Polynomial::add_term(const Exponent& e, const Scalar& c) {
    if (e.num_vars() != num_vars_)
        throw UsageError("exponent length does not match polynomial variables");
    if (c.mode() != mode_)
        throw UsageError("coefficient mode does not match polynomial mode",
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

Scalar Polynomial::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar::zero(mode_) : it->second;
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.degree());
    return d;
}

int Polynomial::valuation() const {
    if (terms_.empty()) return -1;
    int d = terms_.begin()->first.degree();
    for (const auto& [e, c] : terms_) d = std::min(d, e.degree());
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.degree();
    for (const auto& [e, c] : terms_)
        if (e.degree() != d) return false;
    return true;
}

double Polynomial::max_coeff_abs() const {
    double m = 0.0;
    for (const auto& [e, c] : terms_) m = std::max(m, c.abs());
    return m;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.num_vars_ != num_vars_ || o.mode_ != mode_)
        throw UsageError("polynomial shape mismatch in addition");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.num_vars_ != num_vars_ || o.mode_ != mode_)
        throw UsageError("polynomial shape mismatch in subtraction");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.num_vars_ != b.num_vars_ || a.mode_ != b.mode_)
        throw UsageError("polynomial shape mismatch in multiplication");
    Polynomial r(a.num_vars_, a.mode_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(ea.plus(eb), ca * cb);
    return r;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
    Polynomial r(num_vars_, mode_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms_) r.add_term(e, v * c);
    return r;
}

Polynomial Polynomial::shifted_by_monomial(const Exponent& beta) const {
    Polynomial r(num_vars_, mode_);
    for (const auto& [e, v] : terms_) r.add_term(e.plus(beta), v);
    return r;
}

Polynomial Polynomial::truncate(int k) const {
    if (k < 0) throw UsageError("truncation degree must be non-negative");
    Polynomial r(num_vars_, mode_);
    for (const auto& [e, v] : terms_)
        if (e.degree() <= k) r.add_term(e, v);
    return r;
}

Polynomial Polynomial::translated(const std::vector<Scalar>& y) const {
    if (static_cast<int>(y.size()) != num_vars_)
        throw UsageError("point dimension does not match polynomial variables");
    for (const auto& c : y)
        if (c.mode() != mode_)
            throw UsageError("point mode does not match polynomial mode",
                             "mode-mismatch");

    // Per variable i, (x_i + y_i)^n expands with binomial coefficients;
    // the product over variables is accumulated term by term.
    Polynomial result(num_vars_, mode_);
    for (const auto& [e, coeff] : terms_) {
        Polynomial term = Polynomial::constant(num_vars_, coeff);
        for (int i = 0; i < num_vars_; ++i) {
            int n = e[i];
            if (n == 0) continue;
            Polynomial factor(num_vars_, mode_);
            Scalar ypow = Scalar::one(mode_);
            // k runs over the x_i-degree: C(n,k) x_i^k y_i^{n-k}.
            for (int k = n; k >= 0; --k) {
                std::vector<int> exp(static_cast<size_t>(num_vars_), 0);
                exp[static_cast<size_t>(i)] = k;
                factor.add_term(Exponent(exp),
                                Scalar::integer(binomial(n, k), mode_) * ypow);
                ypow *= y[static_cast<size_t>(i)];
            }
            term = term * factor;
        }
        result += term;
    }
    return result;
}

Polynomial Polynomial::linear_change(const std::vector<std::vector<Scalar>>& m) const {
    if (static_cast<int>(m.size()) != num_vars_)
        throw UsageError("matrix dimension does not match polynomial variables");
    std::vector<Polynomial> images;
    images.reserve(static_cast<size_t>(num_vars_));
    for (int i = 0; i < num_vars_; ++i) {
        const auto& row = m[static_cast<size_t>(i)];
        if (static_cast<int>(row.size()) != num_vars_)
            throw UsageError("change-of-coordinates matrix is not square");
        Polynomial img(num_vars_, mode_);
        for (int j = 0; j < num_vars_; ++j) {
            std::vector<int> exp(static_cast<size_t>(num_vars_), 0);
            exp[static_cast<size_t>(j)] = 1;
            img.add_term(Exponent(exp), row[static_cast<size_t>(j)]);
        }
        images.push_back(std::move(img));
    }
    Polynomial result(num_vars_, mode_);
    for (const auto& [e, coeff] : terms_) {
        Polynomial term = Polynomial::constant(num_vars_, coeff);
        for (int i = 0; i < num_vars_; ++i)
            for (int p = 0; p < e[i]; ++p) term = term * images[static_cast<size_t>(i)];
        result += term;
    }
    return result;
}

std::string Polynomial::str(const std::vector<std::string>& var_names) const {
    if (terms_.empty()) return "0";
    // Ascending total degree, lexicographic within a degree: deterministic
    // and round-trip stable.
    std::vector<const std::pair<const Exponent, Scalar>*> ordered;
    for (const auto& t : terms_) ordered.push_back(&t);
    std::stable_sort(ordered.begin(), ordered.end(), [](auto* a, auto* b) {
        if (a->first.degree() != b->first.degree())
            return a->first.degree() < b->first.degree();
        return a->first < b->first;
    });

    std::ostringstream os;
    bool first = true;
    for (auto* t : ordered) {
        const auto& [e, c] = *t;
        std::string coeff = c.str();
        bool negative = false;
        if (mode_ == ScalarMode::exact && c.rat() < 0) {
            negative = true;
            coeff = (-c).str();
        }
        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        bool has_vars = !e.is_zero();
        bool unit = mode_ == ScalarMode::exact &&
                    (negative ? (-c).rat() == 1 : c.rat() == 1);
        if (!has_vars || !unit) {
            os << coeff;
            if (has_vars) os << "*";
        }
        bool first_var = true;
        for (int i = 0; i < num_vars_; ++i) {
            if (e[i] == 0) continue;
            if (!first_var) os << "*";
            first_var = false;
            os << var_names[static_cast<size_t>(i)];
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

std::pair<Exponent, Scalar> initial_term(const OrderSpec& order, const Polynomial& f) {
    if (f.is_zero())
        throw UsageError("initial term of the zero polynomial is undefined");
    const std::pair<const Exponent, Scalar>* best = nullptr;
    for (const auto& t : f.terms()) {
        if (!best || compare_primal(order, t.first, best->first) ==
                         std::strong_ordering::greater)
            best = &t;
    }
    return {best->first, best->second};
}

} // namespace duals
