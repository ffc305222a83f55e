#pragma once

#include "nvcat/complex.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace nvcat {

/// Sum of signed cocycle values along an edge path. Throws ValidationError if
/// two consecutive vertices do not span an edge of x.
std::int64_t integrate_path(const SimplicialComplex& x, const IntegralCocycle& xi, std::span<const int> path);

/// Non-negative generator of the image of the period homomorphism H_1(X) -> Z.
/// Throws ValidationError for a disconnected complex.
std::int64_t periods(const SimplicialComplex& x, const IntegralCocycle& xi);

struct ExactnessWitness {
    bool exact = false;
    /// f(j) - f(i) = xi(ij) on every edge, f(0) = 0. Filled when exact.
    std::vector<std::int64_t> potential;
    /// Closed vertex path with nonzero integral. Filled when not exact.
    std::vector<int> loop;
    std::int64_t loop_integral = 0;
};

ExactnessWitness exactness_witness(const SimplicialComplex& x, const IntegralCocycle& xi);

struct Divisibility {
    std::int64_t lambda = 0;
    IntegralCocycle eta;  // xi - lambda * eta is exact, periods(eta) = 1
};

/// Writes xi = lambda * eta + (exact). Throws ContractError if xi is exact.
Divisibility divisibility(const SimplicialComplex& x, const IntegralCocycle& xi);

}  // namespace nvcat
