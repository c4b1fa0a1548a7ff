#include "duals/exponent.hpp"

#include <algorithm>

namespace duals {

namespace {

void enumerate(int num_vars, int var, int remaining, std::vector<int>& acc,
               std::vector<Exponent>& out) {
    if (var == num_vars - 1) {
        acc[static_cast<size_t>(var)] = remaining;
        out.emplace_back(acc);
        return;
    }
    for (int d = remaining; d >= 0; --d) {
        acc[static_cast<size_t>(var)] = d;
        enumerate(num_vars, var + 1, remaining - d, acc, out);
    }
}

} // namespace

std::vector<Exponent> exponents_of_degree(int num_vars, int d) {
    std::vector<Exponent> out;
    if (num_vars == 0) {
        if (d == 0) out.push_back(Exponent(std::vector<int>{}));
        return out;
    }
    std::vector<int> acc(static_cast<size_t>(num_vars), 0);
    enumerate(num_vars, 0, d, acc, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Exponent> exponents_up_to(int num_vars, int k) {
    std::vector<Exponent> out;
    for (int d = 0; d <= k; ++d) {
        auto layer = exponents_of_degree(num_vars, d);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

} // namespace duals
