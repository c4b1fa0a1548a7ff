#include "duals/json_io.hpp"

#include <sstream>

namespace duals {

using nlohmann::json;

json scalar_to_json(const Scalar& s) {
    json j;
    if (s.mode() == ScalarMode::exact) {
        j["re"] = s.rat().get_str();
        j["im"] = "0";
    } else {
        j["re"] = s.cx().real();
        j["im"] = s.cx().imag();
    }
    return j;
}

json functional_to_json(const DualFunctional& q) {
    json terms = json::array();
    for (const auto& [e, c] : q.terms()) {
        json t = scalar_to_json(c);
        t["exp"] = e.entries();
        terms.push_back(std::move(t));
    }
    return json{{"terms", std::move(terms)}, {"order", q.order()}};
}

json exponents_to_json(const std::vector<Exponent>& exps) {
    json j = json::array();
    for (const auto& e : exps) j.push_back(e.entries());
    return j;
}

json matrix_to_json(const std::vector<std::vector<Scalar>>& m) {
    json j = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (const auto& s : row) r.push_back(scalar_to_json(s));
        j.push_back(std::move(r));
    }
    return j;
}

json to_json(const TruncatedDualSpace& space) {
    json basis = json::array();
    for (const auto& q : space.basis) basis.push_back(functional_to_json(q));
    json j{{"k", space.k},
           {"dim", space.dim()},
           {"basis", std::move(basis)},
           {"initial_support", exponents_to_json(initial_support(space))}};
    if (space.lower_bound_only) j["lower_bound_only"] = true;
    return j;
}

json to_json(const EliminatingDualSpace& space,
             const std::vector<std::string>& var_names) {
    json basis = json::array();
    for (const auto& q : space.basis) basis.push_back(functional_to_json(q));
    json a = json::array();
    for (int v : space.eliminated) a.push_back(var_names[static_cast<size_t>(v)]);
    json support = json::array();
    for (const auto& q : space.basis) {
        support.push_back(initial_term(space.order, q).first.entries());
    }
    return json{{"d", space.d},
                {"dim", space.dim()},
                {"A", std::move(a)},
                {"complete", space.complete},
                {"cap_used", space.cap_used},
                {"basis", std::move(basis)},
                {"initial_support", std::move(support)}};
}

json to_json(const HilbertData& data) {
    json j{{"H", data.values},
           {"certified", data.certified},
           {"window", data.window},
           {"k_max", data.k_max}};
    j["rho"] = data.rho ? json(*data.rho) : json(nullptr);
    j["mu"] = data.mu ? json(*data.mu) : json(nullptr);
    j["hp_value"] = data.hp_value ? json(*data.hp_value) : json(nullptr);
    return j;
}

json to_json(const StaircaseReport& report) {
    return json{{"k", report.k},
                {"standard", exponents_to_json(report.standard_monomials)},
                {"initial_ideal", exponents_to_json(report.initial_ideal)}};
}

json to_json(const EmbeddedVerdict& verdict, bool verbose) {
    json j{{"embedded", verdict.embedded},
           {"k", verdict.k},
           {"rho", verdict.rho},
           {"mu", verdict.mu},
           {"certified_hilbert", verdict.certified_hilbert},
           {"dims",
            {{"E_k", verdict.dim_E_k},
             {"xE_k", verdict.dim_xE_k},
             {"E_km1", verdict.dim_E_km1}}},
           {"seed", verdict.seeds.empty() ? json(nullptr) : json(verdict.seeds.back())},
           {"seeds", verdict.seeds},
           {"matrix", matrix_to_json(verdict.change_matrix)},
           {"tolerances", {{"tol", verdict.rank_tol}, {"point_tol", verdict.point_tol}}},
           {"retries", verdict.retries}};
    if (verbose) {
        json ek = json::array(), xek = json::array(), ekm1 = json::array();
        for (const auto& q : verdict.basis_E_k) ek.push_back(functional_to_json(q));
        for (const auto& q : verdict.basis_xE_k) xek.push_back(functional_to_json(q));
        for (const auto& q : verdict.basis_E_km1) ekm1.push_back(functional_to_json(q));
        j["bases"] = {{"E_k", std::move(ek)},
                      {"xE_k", std::move(xek)},
                      {"E_km1", std::move(ekm1)}};
    }
    return j;
}

std::string m2_snippet(const std::vector<DualFunctional>& basis,
                       const std::vector<std::string>& var_names) {
    // Dual functionals print as polynomials in the variables (d^a <-> x^a),
    // the convention Macaulay2's dual-space packages use for dual bases.
    std::ostringstream os;
    os << "R = CC[";
    for (size_t i = 0; i < var_names.size(); ++i)
        os << (i ? "," : "") << var_names[i];
    os << "]\n";
    os << "dualBasis = {";
    bool first_q = true;
    for (const auto& q : basis) {
        if (!first_q) os << ", ";
        first_q = false;
        if (q.is_zero()) {
            os << "0";
            continue;
        }
        bool first_t = true;
        for (const auto& [e, c] : q.terms()) {
            if (!first_t) os << " + ";
            first_t = false;
            if (c.mode() == ScalarMode::exact) {
                os << "(" << c.rat().get_str() << ")";
            } else {
                std::ostringstream num;
                num.precision(17);
                double im = c.cx().imag();
                num << "(" << c.cx().real() << (im < 0 ? "-" : "+") << std::abs(im)
                    << "*ii)";
                os << num.str();
            }
            for (int i = 0; i < q.num_vars(); ++i) {
                if (e[i] == 0) continue;
                os << "*" << var_names[static_cast<size_t>(i)];
                if (e[i] > 1) os << "^" << e[i];
            }
        }
    }
    os << "}\n";
    return os.str();
}

} // namespace duals
