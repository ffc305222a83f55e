#pragma once

#include "nvcat/cochain.hpp"
#include "nvcat/cover.hpp"
#include "nvcat/local_system.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nvcat {

struct BoundOptions {
    Field field = Field::rationals();
    std::uint64_t seed = 0;
    int max_r = 4;
    int survivor_order = 4;
    std::optional<Scalar> a;
    std::optional<Scalar> b;  // defaults to a^-1
};

/// Nonzero class u cup v cup w_1 ... cup w_r over (ab)^xi, with a cycle z of the
/// dual complex pairing nontrivially with the product.
struct CupCertificate {
    Scalar a;
    Scalar b;
    Cochain u;
    Cochain v;
    std::vector<Cochain> w;
    Cochain product;
    Vec witness;

    int r() const { return static_cast<int>(w.size()); }
};

struct CupBoundResult {
    int r_best = -1;  // -1 when even u cup v vanishes for every pair
    std::optional<CupCertificate> certificate;
    std::vector<Scalar> supp;

    /// cat(X, xi) >= bound
    int bound() const { return r_best + 1; }
};

/// Largest r <= max_r with a nonzero u cup v cup w_1..w_r, u over a^xi, v over b^xi,
/// w_j untwisted of positive degree. Throws ContractError if xi is exact.
CupBoundResult cup_length_bound(const SimplicialComplex& x, const IntegralCocycle& xi, const BoundOptions& opt,
                                const TorsionSummary* supp = nullptr);

/// Nonzero product of m untwisted positive-degree classes.
struct ProductCertificate {
    std::vector<Cochain> factors;
    Cochain product;
    Vec witness;
};

struct ClassicalResult {
    int cup_length = 0;
    std::optional<ProductCertificate> certificate;  // empty when cup_length == 0

    /// cat(X) >= bound
    int bound() const { return cup_length + 1; }
};

ClassicalResult classical_cup_length(const SimplicialComplex& x, Field f);

enum class MasseyStatus { Vanishes, NonzeroModLastStage, Undecided };
std::string to_string(MasseyStatus s);

/// <v, xi, ..., xi> with r copies of xi. The defining system uses the cochains
/// xi_[m](e) = binom(xi(e), m) and v_n with
///   delta v_n = (-1)^q sum_{m=1..n} v_{n-m} cup xi_[m],  v_0 = v.
struct MasseyResult {
    int order = 1;
    MasseyStatus status = MasseyStatus::Undecided;
    std::optional<Cochain> representative;  // sum_m v_{r-m} cup xi_[m]; set unless the status is Vanishes
    std::vector<Cochain> defining_system;   // v_1..v_order when the status is Vanishes
};

/// Throws ContractError if v is not an untwisted cocycle, or if r >= 2 and the order r-1 product does not vanish.
MasseyResult massey_power(const SimplicialComplex& x, const Cochain& v, const IntegralCocycle& xi, int r);

/// Binomial cochain xi_[m].
Cochain binomial_cochain(const SimplicialComplex& x, const IntegralCocycle& xi, Field f, int m);

/// Checks the tower equations for v_0 = v and the given v_1..v_R.
bool check_tower(const SimplicialComplex& x, const IntegralCocycle& xi, const Cochain& v, const std::vector<Cochain>& tower);

/// A class whose Massey powers vanish through `order`, with its defining system.
struct Survivor {
    Cochain cocycle;
    std::vector<Cochain> tower;
};

/// Basis of the subspace of H^q made of classes whose Massey powers <v, xi, ..., xi> vanish through `order`.
std::vector<Survivor> survivor_basis(const SimplicialComplex& x, const IntegralCocycle& xi, Field f, int q, int order);

struct MasseyBoundResult {
    int r = 0;  // number of factors; 0 when no two survivors have a nonzero product
    std::int64_t lambda = 1;
    int survivor_order = 4;
    std::optional<ProductCertificate> certificate;
    std::vector<Survivor> survivors;  // towers for the first two factors

    /// cat(X, xi) >= bound
    int bound() const { return r >= 2 ? r - 1 : 0; }
};

/// Largest r <= max_r + 2 with w_1 cup ... cup w_r != 0 and w_1, w_2 survivors through
/// the given order. Divisible xi is reduced to its indivisible part. Throws ContractError if xi is exact.
MasseyBoundResult massey_bound(const SimplicialComplex& x, const IntegralCocycle& xi, const BoundOptions& opt);

struct BoundEntry {
    int value = 0;
    std::string theorem;  // "cup", "massey", "classical"
    nlohmann::json certificate;
};

struct CatBoundReport {
    bool xi_exact = false;
    int best = 0;
    std::vector<BoundEntry> bounds;
    std::vector<std::string> relations;
    std::string interpretation;
    nlohmann::json context;  // field, seed, supp, generic values
};

/// Runs every applicable bound and assembles the report.
CatBoundReport compute_bounds(const SimplicialComplex& x, const IntegralCocycle& xi, const BoundOptions& opt);

nlohmann::json to_json(const SimplicialComplex& x, const CupCertificate& c);
nlohmann::json to_json(const SimplicialComplex& x, const ProductCertificate& c);
nlohmann::json to_json(const CatBoundReport& r);

struct ReplayVerdict {
    std::string theorem;
    int value = 0;
    bool ok = false;
    std::string reason;
};

/// Re-verifies every certificate of a report against the raw input alone.
std::vector<ReplayVerdict> replay_report(const SimplicialComplex& x, const IntegralCocycle& xi, const nlohmann::json& report);

}  // namespace nvcat
