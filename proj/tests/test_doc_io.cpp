#include "schouten/suites.hpp"
#include "doctest.h"
TEST_CASE("placeholder_doc_io") { CHECK(true); }
