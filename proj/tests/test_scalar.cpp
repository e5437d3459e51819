#include "schouten/random_gen.hpp"
#include "schouten/scalar.hpp"

#include "doctest.h"

using namespace schouten;

namespace {

Chart xy() { return Chart::make({"x", "y"}); }
Chart xt() { return Chart::make({"x"}, {}, {"t"}, std::string("t")); }

Scalar S(const Chart& c, const std::string& text) { return Scalar::parse(c, text); }

} // namespace

TEST_CASE("ring arithmetic") {
    Chart c = xy();
    CHECK(S(c, "x+1") * S(c, "x-1") == S(c, "x^2-1"));
    Scalar a = S(c, "3/2*x^2*y - 1");
    CHECK(a + Scalar::zero(c) == a);
    CHECK(a - a == Scalar::zero(c));
    CHECK(S(c, "2*x") * S(c, "1/2") == S(c, "x"));
    // commutative, associative
    Scalar b = S(c, "y^2 - 2*x");
    Scalar d = S(c, "x*y + 3");
    CHECK(a * b == b * a);
    CHECK((a * b) * d == a * (b * d));
}

TEST_CASE("exponent weights cancel") {
    Chart c = xt();
    Chart cy = Chart::make({"x", "y"}, {}, {"t"}, std::string("t"));
    Scalar lhs = S(cy, "exp(t)*x") * S(cy, "exp(-t)*y");
    CHECK(lhs == S(cy, "x*y"));
    CHECK(Scalar::exp_weight(c, 2) * Scalar::exp_weight(c, -2) == S(c, "1"));
}

TEST_CASE("chart mismatch is an input error") {
    CHECK_THROWS_AS(S(xy(), "x") + Scalar::coordinate(Chart::make({"x"}), "x"), InputError);
    CHECK_THROWS_AS(Scalar::exp_weight(xy(), 1), InputError);
}

TEST_CASE("partial derivatives") {
    Chart c = xy();
    CHECK(S(c, "x^2*y").partial("x") == S(c, "2*x*y"));
    CHECK(S(c, "x^2").partial("y") == Scalar::zero(c));
    CHECK_THROWS_AS(S(c, "x").partial("z"), InputError);
    // d/dt (e^{-2t} x t) = e^{-2t} (x - 2xt)
    Chart ct = xt();
    CHECK(S(ct, "exp(-2*t)*x*t").partial("t") == S(ct, "exp(-2*t)*x - exp(-2*t)*2*x*t"));
}

TEST_CASE("leibniz rule, including exponential weights") {
    Chart c = Chart::make({"x", "y"}, {}, {"t"}, std::string("t"));
    Rng rng(17);
    for (int k = 0; k < 40; ++k) {
        Scalar a = random_scalar(rng, c, 3, 3) * Scalar::exp_weight(c, rng.range(-2, 2));
        Scalar b = random_scalar(rng, c, 3, 3) * Scalar::exp_weight(c, rng.range(-2, 2));
        for (int i = 0; i < c.coord_count(); ++i)
            CHECK((a * b).partial(i) == a.partial(i) * b + a * b.partial(i));
    }
}

TEST_CASE("canonical printing and parsing round-trip") {
    Chart c = xy();
    CHECK(S(c, "3/2*x^2*y - 1").str() == "3/2*x^2*y - 1");
    CHECK(Scalar::zero(c).str() == "0");
    CHECK(S(c, "0").is_zero());
    CHECK(S(c, "-x").str() == "-x");
    CHECK(S(c, "y - x").str() == "-x + y"); // leading monomial first
    Chart ct = Chart::make({"x"}, {}, {"t"}, std::string("t"));
    CHECK(S(ct, "exp(-2*t)*(x*t - 1)").str() == "exp(-2*t)*x*t - exp(-2*t)");

    Rng rng(5);
    for (int k = 0; k < 60; ++k) {
        Scalar a = random_scalar(rng, ct, 3, 4) * Scalar::exp_weight(ct, rng.range(-2, 2));
        CHECK(Scalar::parse(ct, a.str()) == a);
    }
}

TEST_CASE("parse errors carry positions") {
    Chart c = xy();
    CHECK_THROWS_WITH_AS(S(c, "x + z"), doctest::Contains("unknown coordinate"), InputError);
    CHECK_THROWS_AS(S(c, "x +"), InputError);
    CHECK_THROWS_AS(S(c, "1/0"), InputError);
    CHECK_THROWS_AS(S(c, "x^"), InputError);
}
