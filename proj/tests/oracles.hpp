#ifndef DUALS_TEST_ORACLES_HPP
#define DUALS_TEST_ORACLES_HPP

#include <random>
#include <vector>

#include "duals/functional.hpp"
#include "duals/ideal.hpp"
#include "duals/linalg.hpp"
#include "duals/polynomial.hpp"

// Test-side oracles, deliberately independent of the library's pairing /
// nullspace / staircase code paths.

namespace oracle {

using duals::DualFunctional;
using duals::Exponent;
using duals::Ideal;
using duals::Polynomial;
using duals::Scalar;
using duals::ScalarMode;

// q(f) by repeated formal differentiation: for each term c_a d^a apply
// d/dx_i a_i times, evaluate at 0, divide by a! -- no coefficient pairing.
Scalar apply_by_differentiation(const DualFunctional& q, const Polynomial& f);

// ---- monomial-ideal combinatorics (exponent lists are generator sets) ----

std::vector<Exponent> minimalize(std::vector<Exponent> gens);
bool monomial_member(const Exponent& m, const std::vector<Exponent>& gens);
bool monomial_ideal_equal(const std::vector<Exponent>& a, const std::vector<Exponent>& b);

// Standard monomials of degree <= k.
std::vector<Exponent> staircase_standard(const std::vector<Exponent>& gens, int num_vars,
                                         int k);
// H(0..kmax) by counting standard monomials per degree.
std::vector<int> monomial_hilbert(const std::vector<Exponent>& gens, int num_vars,
                                  int kmax);

// I : x_var.
std::vector<Exponent> monomial_colon_var(const std::vector<Exponent>& gens, int var);
// I : m  (intersection of the variable colons).
std::vector<Exponent> monomial_colon_maximal(const std::vector<Exponent>& gens,
                                             int num_vars);
std::vector<Exponent> monomial_intersect(const std::vector<Exponent>& a,
                                         const std::vector<Exponent>& b);
// I : m^infty.
std::vector<Exponent> monomial_saturate_origin(std::vector<Exponent> gens, int num_vars);

// (rho, mu) of a monomial ideal whose Hilbert function is eventually
// constant (dimension <= 1), found by sweeping past the lcm degree.
std::pair<int, int> monomial_rho_mu(const std::vector<Exponent>& gens, int num_vars);

Ideal monomial_ideal(const std::vector<Exponent>& gens, int num_vars, ScalarMode mode);

// ---- random fixtures (deterministic given the engine state) ----

// Random polynomial with terms of degree 1..max_degree and small integer
// coefficients; never zero, never has a constant term.
Polynomial random_vanishing_poly(int num_vars, int max_degree, std::mt19937_64& rng);
Ideal random_vanishing_ideal(int num_vars, int max_gens, int max_degree,
                             std::mt19937_64& rng);
// Random monomial generators of degree 1..max_degree (minimalized,
// nonempty).
std::vector<Exponent> random_monomial_gens(int num_vars, int max_degree,
                                           std::mt19937_64& rng);
Polynomial random_poly(int num_vars, int max_degree, std::mt19937_64& rng,
                       bool allow_constant = true);
DualFunctional random_functional(int num_vars, int max_order, std::mt19937_64& rng);

// Random saturated 1-dimensional monomial ideal: an intersection of
// cylinders over 0-dimensional staircases in the complementary variables.
std::vector<Exponent> random_saturated_curve_monomial_ideal(int num_vars,
                                                            std::mt19937_64& rng);

// Span equality through the library's Span (mutual membership).
bool spans_equal(const std::vector<DualFunctional>& a,
                 const std::vector<DualFunctional>& b, const duals::OrderSpec& order,
                 const duals::RankPolicy& policy);

} // namespace oracle

#endif
