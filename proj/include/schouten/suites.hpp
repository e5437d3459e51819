#pragma once

#include "schouten/bialgebroid.hpp"
#include "schouten/lifts.hpp"
#include "schouten/random_gen.hpp"

#include <cstdint>

namespace schouten {

struct SuiteConfig {
    std::string suite;
    std::uint64_t seed = 42;
    int cases = 100;
    int max_tensor_degree = 3;
    int max_coeff_degree = 2;
};

struct SuiteReport {
    SuiteConfig config;
    bool pass = true;
    int cases_run = 0;
    int failures = 0;
    std::string body;  // one line per case
    std::string repro; // reproduction document for the first failure
    std::string text() const;
};

// Registered identity suites; unknown names raise InputError.
std::vector<std::string> suite_names();
SuiteReport run_suite(const SuiteConfig& config);

// Shared structure instances used by suites and tests.
namespace instances {

// TM over R^dim with coordinates x1..x<dim>.
AlgebroidSpec tm(int dim);
// so(3) over a point: c^k_{ij} = epsilon_{ijk}.
AlgebroidSpec so3();
// Action algebroid of aff(1) on R: frames e1,e2 with [e1,e2]=e1,
// anchors d/dx and x d/dx.
AlgebroidSpec aff1();
// TM over R^dim with the closed cocycle eps1 (= dx1).
JacobiAlgebroid tm_phi(int dim);
// TM over R^2 with the exact, coordinate-dependent cocycle x1 eps1 + x2 eps2.
JacobiAlgebroid tm_phi_exact_r2();
// aff(1) algebroid with the closed cocycle eps2.
JacobiAlgebroid aff1_phi();
// Extension so(3)+R with the canonical cocycle.
JacobiAlgebroid so3_ext();

// Contact structure on R^3 (q,p,u): Lambda = (d_q + p d_u) ^ d_p, Gamma = d_u.
struct JacobiStructureInstance {
    AlgebroidSpec algebroid;
    GrassmannElement lambda;
    GrassmannElement gamma;
    std::string name;
};
JacobiStructureInstance contact_r3();
JacobiStructureInstance poisson_r2();  // Lambda = d_1 ^ d_2, Gamma = 0
JacobiStructureInstance gamma_only_r1(); // Lambda = 0, Gamma = d_u

// Poisson bivectors with [Lambda,Lambda] = 0 for the Koszul suite.
struct PoissonInstance {
    AlgebroidSpec algebroid;
    GrassmannElement lambda;
    std::string name;
};
PoissonInstance poisson_constant_r2();
PoissonInstance poisson_so3_linear(); // x3 d1^d2 + x1 d2^d3 + x2 d3^d1 on R^3

} // namespace instances

} // namespace schouten
