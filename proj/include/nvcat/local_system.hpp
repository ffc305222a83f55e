#pragma once

#include "nvcat/cochain.hpp"
#include "nvcat/cover.hpp"

#include <json.hpp>

#include <cstdint>
#include <span>
#include <vector>

namespace nvcat {

/// Rank-one local system a^xi.
struct Monodromy {
    Scalar a;
    const IntegralCocycle* xi = nullptr;

    Monodromy(Scalar value, const IntegralCocycle& cocycle);
    /// a^{<xi, gamma>} for a closed edge path gamma.
    Scalar along(const SimplicialComplex& x, std::span<const int> loop) const;
};

/// delta_a u for the twist a carried by u (untwisted when u.twist is empty).
Cochain twisted_coboundary(const SimplicialComplex& x, const IntegralCocycle& xi, const Cochain& u);

/// H^q(X; a^xi) for every q in [0, dim X].
struct TwistedCohomologyBasis {
    Scalar a;
    std::vector<CohomologySpace> degrees;

    std::vector<std::size_t> dims() const;
};

TwistedCohomologyBasis twisted_cohomology(const SimplicialComplex& x, const IntegralCocycle& xi, const Scalar& a);
CohomologySpace twisted_cohomology(const SimplicialComplex& x, const IntegralCocycle& xi, const Scalar& a, int q);

/// `count` distinct values a with neither a nor a^-1 in supp. Over Q the candidates
/// run through p, 1/p for primes p starting at the seed-th prime; over F_p they
/// walk the residues cyclically from 2 + seed. Throws LimitError if the field is too small.
std::vector<Scalar> pick_generic(const std::vector<Scalar>& supp, Field f, std::size_t count, std::uint64_t seed);
std::vector<Scalar> pick_generic(const TorsionSummary& supp, std::size_t count, std::uint64_t seed);

/// Cup product H^p(a^xi) x H^q(b^xi) -> H^{p+q}((ab)^xi) at cochain level.
Cochain cup_twisted(const SimplicialComplex& x, const IntegralCocycle& xi, const Cochain& u, const Cochain& v);

/// Sparse form: {"degree": q, "twist": "a" or null, "values": [[simplex, "c"], ...]}.
nlohmann::json cochain_json(const SimplicialComplex& x, const Cochain& c);
Cochain cochain_from_json(const SimplicialComplex& x, Field f, const nlohmann::json& doc);

nlohmann::json to_json(const TwistedCohomologyBasis& h);

}  // namespace nvcat
