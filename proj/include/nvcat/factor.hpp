#pragma once

#include "nvcat/laurent.hpp"

#include <cstdint>
#include <vector>

namespace nvcat {

struct IrreducibleFactor {
    LaurentPoly poly;  // canonical
    unsigned multiplicity = 1;
};

/// Factorization of a nonzero polynomial into canonical irreducibles over its
/// base field, up to a unit. Sorted by (span, coefficients).
/// Over Q: squarefree split, rational roots, Kronecker's method for the rest
/// (LimitError beyond degree 12). Over F_p: Cantor-Zassenhaus with a seeded RNG.
std::vector<IrreducibleFactor> factor_irreducible(const LaurentPoly& p, std::uint64_t seed = 0);

/// Distinct roots of p in its base field, ascending. Roots are never 0.
std::vector<Scalar> roots(const LaurentPoly& p);

}  // namespace nvcat
