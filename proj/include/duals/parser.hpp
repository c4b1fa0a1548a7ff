#ifndef DUALS_PARSER_HPP
#define DUALS_PARSER_HPP

#include <optional>
#include <string>
#include <vector>

#include "duals/ideal.hpp"

namespace duals {

/// Parsed polynomial-system file.
///
/// Grammar (one item per line, '#' starts a comment):
///
///   vars x y z              -- variable declaration, required first
///   mode exact|complex      -- optional; inferred otherwise
///   point <c> <c> ...       -- optional point, one coordinate per variable
///   <polynomial>            -- every remaining line is a generator
///
/// Polynomial grammar: terms joined by + and -; a term is an optional
/// coefficient times var^exp factors ('*' between factors is optional).
/// Coefficients: integer "3", decimal "2.5", rational "3/4", or complex
/// "(a+bi)".  A complex literal anywhere forces complex mode unless the
/// mode line says exact, which is then an error.  Parse -> print -> parse
/// is the identity in exact mode.
struct SystemFile {
    std::vector<std::string> var_names;
    std::vector<Polynomial> generators;
    std::optional<std::vector<Scalar>> point;
    ScalarMode mode = ScalarMode::exact;
    bool mode_explicit = false;

    Ideal ideal() const { return Ideal(generators, static_cast<int>(var_names.size())); }
};

/// `force` overrides both the file's mode line and inference (a complex
/// literal under forced exact mode is still an error).
SystemFile parse_system(const std::string& text,
                        std::optional<ScalarMode> force = std::nullopt);

/// Parse one polynomial in the given variables/mode (used by the CLI for
/// membership queries).
Polynomial parse_polynomial(const std::string& text,
                            const std::vector<std::string>& var_names,
                            ScalarMode mode);

/// Canonical text of a system file; parse(print(parse(s))) == parse(s),
/// bit-exact in exact mode.
std::string print_system(const SystemFile& system);

} // namespace duals

#endif
