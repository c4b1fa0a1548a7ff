#ifndef DUALS_JSON_IO_HPP
#define DUALS_JSON_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "duals/dual_space.hpp"
#include "duals/elim_dual.hpp"
#include "duals/embedded.hpp"
#include "duals/hilbert.hpp"

namespace duals {

/// Rationals serialize as decimal strings "p/q", complex numbers as
/// {re, im} doubles.
nlohmann::json scalar_to_json(const Scalar& s);
nlohmann::json functional_to_json(const DualFunctional& q);
nlohmann::json exponents_to_json(const std::vector<Exponent>& exps);
nlohmann::json matrix_to_json(const std::vector<std::vector<Scalar>>& m);

nlohmann::json to_json(const TruncatedDualSpace& space);
nlohmann::json to_json(const EliminatingDualSpace& space,
                       const std::vector<std::string>& var_names);
nlohmann::json to_json(const HilbertData& data);
nlohmann::json to_json(const StaircaseReport& report);
nlohmann::json to_json(const EmbeddedVerdict& verdict, bool verbose);

/// Macaulay2-pasteable snippet of a dual basis for cross-validation.
std::string m2_snippet(const std::vector<DualFunctional>& basis,
                       const std::vector<std::string>& var_names);

} // namespace duals

#endif
