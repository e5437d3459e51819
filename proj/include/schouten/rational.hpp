#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace schouten {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& q) { return q.str(); }

// n!/1 as a Rational; n must be >= 0.
Rational factorial(int n);

// Parity of the permutation sorting `seq` (entries distinct): +1 or -1.
int permutation_sign(const std::vector<int>& seq);

} // namespace schouten
