#include <doctest.h>

#include <random>

#include "duals/parser.hpp"
#include "oracles.hpp"

using namespace duals;

namespace {
const char* cusp_file = "vars x y z\nx^2 - z^3\ny - z^2\n";
const char* cyclic4_file =
    "vars x1 x2 x3 x4\n"
    "x1 + x2 + x3 + x4\n"
    "x1*x2 + x2*x3 + x3*x4 + x4*x1\n"
    "x2*x3*x4 + x1*x3*x4 + x1*x2*x4 + x1*x2*x3\n"
    "x1*x2*x3*x4 - 1\n"
    "point (0+1i) (0+1i) (0-1i) (0-1i)\n";
} // namespace

TEST_CASE("cusp system parses") {
    SystemFile s = parse_system(cusp_file);
    CHECK(s.var_names == std::vector<std::string>{"x", "y", "z"});
    CHECK(s.generators.size() == 2);
    CHECK(s.mode == ScalarMode::exact);
    CHECK_FALSE(s.point.has_value());
    Ideal ideal = s.ideal();
    CHECK(ideal.num_vars() == 3);
    CHECK(ideal.vanishes_at_origin());
}

TEST_CASE("zero generator is an error") {
    CHECK_THROWS_AS(parse_system("vars x\n0\n").ideal(), UsageError);
}

TEST_CASE("cyclic-4 with an approximate point") {
    SystemFile s = parse_system(cyclic4_file);
    CHECK(s.mode == ScalarMode::cplx); // inferred from the complex literals
    CHECK(s.generators.size() == 4);
    REQUIRE(s.point.has_value());
    CHECK(s.point->size() == 4);
    CHECK((*s.point)[0].cx() == std::complex<double>(0.0, 1.0));
    CHECK((*s.point)[2].cx() == std::complex<double>(0.0, -1.0));
}

TEST_CASE("parse errors carry line and column") {
    try {
        parse_system("vars x y\nx + w\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 5);
        CHECK(std::string(e.what()).find("unknown variable") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_system("x + y\n"), ParseError);           // generator first
    CHECK_THROWS_AS(parse_system("vars x\n"), ParseError);          // no generators
    CHECK_THROWS_AS(parse_system("vars x x\nx\n"), ParseError);     // duplicate var
    CHECK_THROWS_AS(parse_system("vars x\nmode exact\n(1+2i)*x\n"), ParseError);
    CHECK_THROWS_AS(parse_system("vars x\npoint 1 2\nx\n"), ParseError);
}

TEST_CASE("coefficient grammar") {
    SystemFile s = parse_system("vars x y\n3/4*x^2*y - 0.5*x + 2\n");
    const Polynomial& f = s.generators[0];
    CHECK(f.coefficient(Exponent({2, 1})) == Scalar::rational(mpq_class(3, 4)));
    CHECK(f.coefficient(Exponent({1, 0})) == Scalar::rational(mpq_class(-1, 2)));
    CHECK(f.coefficient(Exponent({0, 0})) == Scalar::rational(2));

    SystemFile c = parse_system("vars x\nmode complex\n(1.5-2i)*x - 1\n");
    CHECK(c.generators[0].coefficient(Exponent({1})) ==
          Scalar::complex({1.5, -2.0}));

    // Implicit '*' and repeated variables multiply.
    SystemFile m = parse_system("vars x y\n2 x y x\n");
    CHECK(m.generators[0].coefficient(Exponent({2, 1})) == Scalar::rational(2));
}

TEST_CASE("round-trip is the identity in exact mode") {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 60; ++i) {
        SystemFile s;
        s.var_names = {"x", "y", "z"};
        s.mode = ScalarMode::exact;
        int gens = 1 + static_cast<int>(rng() % 3);
        for (int g = 0; g < gens; ++g)
            s.generators.push_back(oracle::random_poly(3, 4, rng));
        if (s.generators[0].is_zero()) continue;
        bool any_zero = false;
        for (const auto& g : s.generators) any_zero |= g.is_zero();
        if (any_zero) continue;

        std::string once = print_system(s);
        SystemFile t = parse_system(once);
        CHECK(print_system(t) == once);
        REQUIRE(t.generators.size() == s.generators.size());
        for (size_t g = 0; g < s.generators.size(); ++g)
            CHECK(t.generators[g] == s.generators[g]);
    }
}

TEST_CASE("round-trip keeps the point and mode") {
    SystemFile s = parse_system(cyclic4_file);
    SystemFile t = parse_system(print_system(s));
    CHECK(t.mode == ScalarMode::cplx);
    REQUIRE(t.point.has_value());
    for (size_t i = 0; i < 4; ++i) CHECK((*t.point)[i] == (*s.point)[i]);
    for (size_t g = 0; g < 4; ++g) CHECK(t.generators[g] == s.generators[g]);
}

TEST_CASE("forced mode overrides inference") {
    SystemFile s = parse_system("vars x\nx - 1/2\n", ScalarMode::cplx);
    CHECK(s.mode == ScalarMode::cplx);
    CHECK(s.generators[0].coefficient(Exponent({0})) == Scalar::complex({-0.5, 0.0}));
    CHECK_THROWS_AS(parse_system("vars x\n(0+1i)*x\n", ScalarMode::exact), ParseError);
}

TEST_CASE("comments and blank lines are ignored") {
    SystemFile s = parse_system("# a curve\nvars x y # two variables\n\nx*y # product\n");
    CHECK(s.generators.size() == 1);
}
