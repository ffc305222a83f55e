#pragma once

#include "nvcat/complex.hpp"
#include "nvcat/factor.hpp"
#include "nvcat/laurent.hpp"

#include <json.hpp>

#include <optional>
#include <vector>

namespace nvcat {

/// Lambda-chain complex of the infinite cyclic cover determined by xi.
struct TwistedChainComplex {
    Field field;
    SimplicialComplex complex;
    /// boundary[q]: C_q -> C_{q-1}, shape count(q-1) x count(q); boundary[0] has no rows.
    std::vector<LaurentMatrix> boundary;

    int top_degree() const { return static_cast<int>(boundary.size()) - 1; }
    std::size_t chain_dim(int q) const { return complex.count(q); }
    /// d_q for 0 <= q <= top_degree() + 1 (the last one has no columns).
    LaurentMatrix boundary_matrix(int q) const;
};

/// d~[v0..vq] = t^{xi(v0 v1)} [v1..vq] + sum_{i>=1} (-1)^i d_i.
/// Throws ValidationError if xi fails the cocycle condition.
TwistedChainComplex build_twisted_complex(const SimplicialComplex& x, const IntegralCocycle& xi, Field f);

struct CoverDegree {
    int degree = 0;
    std::size_t free_rank = 0;
    std::vector<LaurentPoly> invariant_factors;
};

struct MovabilityResult {
    bool movable = false;
    std::optional<LaurentPoly> annihilator;  // minimal canonical annihilator when movable
};

/// H_*(X~; k) as Lambda-modules, with the SNF data needed to locate individual cycles.
class CoverHomology {
public:
    explicit CoverHomology(const TwistedChainComplex& c);

    Field field() const { return field_; }
    const std::vector<CoverDegree>& degrees() const { return degrees_; }
    const CoverDegree& degree(int q) const { return degrees_.at(static_cast<std::size_t>(q)); }
    /// sum (-1)^q free_rank_q
    long free_euler_characteristic() const;

    /// Whether [z] is Lambda-torsion, i.e. movable to +-infinity in the cover.
    /// Throws ContractError if z is not a cycle of degree q.
    MovabilityResult is_movable(const std::vector<LaurentPoly>& z, int q) const;

private:
    struct Stage {
        LaurentMatrix boundary;         // d_q
        std::size_t boundary_rank = 0;  // rank of d_q
        LaurentMatrix v_inverse;        // from SNF(d_q)
        LaurentMatrix u_presentation;   // U of SNF(M), M = rows [rank..) of V^-1 d_{q+1}
        std::vector<LaurentPoly> diagonal;
        std::size_t presentation_rank = 0;
    };

    Field field_;
    std::vector<CoverDegree> degrees_;
    std::vector<Stage> stages_;
};

CoverHomology cover_homology(const TwistedChainComplex& c);

struct TorsionSummary {
    Field field;
    std::int64_t lambda = 1;
    std::vector<std::vector<LaurentPoly>> invariant_factors;  // per degree
    LaurentPoly delta;                                        // product of all invariant factors
    std::vector<IrreducibleFactor> factorization;             // of delta over the base field
    std::vector<Scalar> supp;                                 // base-field points, discovery order
    std::size_t torsion_dim = 0;

    bool in_supp(const Scalar& a) const;
};

/// Supp from the cover homology of the indivisible class eta, for xi = lambda * eta:
/// the base-field a with a^lambda = s^-1 for some root s of an invariant factor.
TorsionSummary torsion_summary(const CoverHomology& h, std::int64_t lambda, Field f);

/// Full pipeline: reduce xi to eta, build the cover, summarize torsion.
/// Throws ContractError if xi is exact.
struct CoverAnalysis {
    std::int64_t lambda = 1;
    IntegralCocycle eta;
    TwistedChainComplex chains;
    CoverHomology homology;
    TorsionSummary torsion;
};
CoverAnalysis analyze_cover(const SimplicialComplex& x, const IntegralCocycle& xi, Field f);

nlohmann::json to_json(const CoverDegree& d);
nlohmann::json to_json(const TorsionSummary& s);

}  // namespace nvcat
