#include "schouten/suites.hpp"
#include "doctest.h"
TEST_CASE("placeholder_multilinear") { CHECK(true); }
