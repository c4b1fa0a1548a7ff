#include "duals/scalar.hpp"

#include <sstream>

namespace duals {

std::string to_string(ScalarMode mode) {
    return mode == ScalarMode::exact ? "exact" : "complex";
}

std::string Scalar::str() const {
    if (mode_ == ScalarMode::exact) return rat_.get_str();
    std::ostringstream os;
    os.precision(17);
    os << "(" << z_.real();
    os << (z_.imag() < 0 ? "-" : "+");
    os << std::abs(z_.imag()) << "i)";
    return os.str();
}

mpq_class decimal_to_rational(const std::string& text) {
    std::string s = text;
    bool negative = false;
    size_t pos = 0;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        negative = s[pos] == '-';
        ++pos;
    }
    std::string digits;
    int frac_digits = 0;
    bool seen_dot = false, seen_digit = false;
    for (; pos < s.size(); ++pos) {
        char c = s[pos];
        if (c == '.') {
            if (seen_dot) throw UsageError("malformed decimal literal: " + text);
            seen_dot = true;
        } else if (c >= '0' && c <= '9') {
            digits.push_back(c);
            seen_digit = true;
            if (seen_dot) ++frac_digits;
        } else {
            throw UsageError("malformed decimal literal: " + text);
        }
    }
    if (!seen_digit) throw UsageError("malformed decimal literal: " + text);
    mpz_class num(digits.empty() ? "0" : digits);
    mpz_class den = 1;
    for (int i = 0; i < frac_digits; ++i) den *= 10;
    mpq_class q(num, den);
    q.canonicalize();
    if (negative) q = -q;
    return q;
}

} // namespace duals
