#ifndef DUALS_SCALAR_HPP
#define DUALS_SCALAR_HPP

#include <complex>
#include <string>

#include <gmpxx.h>

#include "duals/errors.hpp"

namespace duals {

enum class ScalarMode { exact, cplx };

std::string to_string(ScalarMode mode);

/// Field element, tagged by mode: an exact rational (GMP-backed) or a
/// complex double.  Exact arithmetic never rounds.  Mixing modes in an
/// arithmetic operation is an error, not a coercion.
class Scalar {
public:
    Scalar() : mode_(ScalarMode::exact), rat_(0) {}

    static Scalar rational(mpq_class q) {
        Scalar s;
        s.mode_ = ScalarMode::exact;
        q.canonicalize();
        s.rat_ = std::move(q);
        return s;
    }
    static Scalar complex(std::complex<double> z) {
        Scalar s;
        s.mode_ = ScalarMode::cplx;
        s.z_ = z;
        return s;
    }
    static Scalar zero(ScalarMode mode) {
        return mode == ScalarMode::exact ? rational(0) : complex({0.0, 0.0});
    }
    static Scalar one(ScalarMode mode) {
        return mode == ScalarMode::exact ? rational(1) : complex({1.0, 0.0});
    }
    static Scalar integer(long v, ScalarMode mode) {
        return mode == ScalarMode::exact ? rational(mpq_class(v))
                                         : complex({double(v), 0.0});
    }

    ScalarMode mode() const { return mode_; }

    bool is_zero() const {
        return mode_ == ScalarMode::exact ? rat_ == 0
                                          : (z_.real() == 0.0 && z_.imag() == 0.0);
    }

    const mpq_class& rat() const {
        require(ScalarMode::exact);
        return rat_;
    }
    std::complex<double> cx() const {
        require(ScalarMode::cplx);
        return z_;
    }

    /// Value as a complex double regardless of mode (lossy for rationals).
    std::complex<double> to_complex() const {
        return mode_ == ScalarMode::exact ? std::complex<double>(rat_.get_d(), 0.0)
                                          : z_;
    }

    /// Magnitude; exact mode converts to double (used only for reporting
    /// and for relative thresholds, never for exact-mode zero tests).
    double abs() const {
        return mode_ == ScalarMode::exact ? std::abs(rat_.get_d()) : std::abs(z_);
    }

    Scalar operator-() const {
        Scalar r = *this;
        if (mode_ == ScalarMode::exact)
            r.rat_ = -rat_;
        else
            r.z_ = -z_;
        return r;
    }

    Scalar& operator+=(const Scalar& o) {
        require(o.mode_);
        if (mode_ == ScalarMode::exact)
            rat_ += o.rat_;
        else
            z_ += o.z_;
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        require(o.mode_);
        if (mode_ == ScalarMode::exact)
            rat_ -= o.rat_;
        else
            z_ -= o.z_;
        return *this;
    }
    Scalar& operator*=(const Scalar& o) {
        require(o.mode_);
        if (mode_ == ScalarMode::exact)
            rat_ *= o.rat_;
        else
            z_ *= o.z_;
        return *this;
    }
    Scalar& operator/=(const Scalar& o) {
        require(o.mode_);
        if (o.is_zero()) throw UsageError("scalar division by zero");
        if (mode_ == ScalarMode::exact)
            rat_ /= o.rat_;
        else
            z_ /= o.z_;
        return *this;
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        if (a.mode_ != b.mode_) return false;
        return a.mode_ == ScalarMode::exact ? a.rat_ == b.rat_ : a.z_ == b.z_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    Scalar inverse() const { return one(mode_) / *this; }

    /// "p/q" in exact mode ("p" when q = 1); "(a+bi)" in complex mode.
    std::string str() const;

private:
    void require(ScalarMode m) const {
        if (mode_ != m)
            throw UsageError("mixed scalar modes in arithmetic", "mode-mismatch");
    }

    ScalarMode mode_;
    mpq_class rat_;
    std::complex<double> z_{0.0, 0.0};
};

/// Parse a decimal literal ("3", "-2.25", "1e-3" is not accepted) into an
/// exact rational.
mpq_class decimal_to_rational(const std::string& text);

} // namespace duals

#endif
