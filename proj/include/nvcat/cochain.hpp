#pragma once

#include "nvcat/complex.hpp"
#include "nvcat/linalg.hpp"

#include <optional>

namespace nvcat {

/// Cochain of a given degree; values are indexed like x.simplices(degree).
/// A present `twist` a means the coefficient system a^xi; absent means constant k.
struct Cochain {
    int degree = 0;
    Vec values;
    std::optional<Scalar> twist;

    /// Twist value, 1 when untwisted.
    Scalar twist_value(Field f) const { return twist ? *twist : Scalar::one(f); }
};

/// Normalizes a twist: a == 1 is stored as "untwisted".
std::optional<Scalar> normalize_twist(const Scalar& a);

/// Matrix of the a-twisted coboundary C^q -> C^{q+1} (rows: (q+1)-simplices):
/// (delta_a u)[v0..v_{q+1}] = a^{xi(v0v1)} u[v1..] + sum_{i>=1} (-1)^i u(d_i).
/// xi is ignored when a == 1.
Matrix coboundary_matrix(const SimplicialComplex& x, const IntegralCocycle& xi, const Scalar& a, int q);
/// Untwisted coboundary matrix.
Matrix coboundary_matrix(const SimplicialComplex& x, Field f, int q);

/// Untwisted coboundary of u; throws if u is twisted or has the wrong length.
Cochain coboundary(const SimplicialComplex& x, const Cochain& u);

/// Front-face/back-face product with parallel transport of the back value:
/// (u cup v)[v0..v_{p+q}] = u[v0..vp] * b^{xi(v0 vp)} * v[vp..v_{p+q}], b = twist of v.
/// The result carries the twist ab.
Cochain cup(const SimplicialComplex& x, const IntegralCocycle& xi, const Cochain& u, const Cochain& v);
/// Untwisted cup product; throws if either factor is twisted.
Cochain cup_untwisted(const SimplicialComplex& x, const Cochain& u, const Cochain& v);

/// H^q = ker(outgoing) / im(incoming) with exact linear algebra.
class CohomologySpace {
public:
    /// incoming: C^{q-1} -> C^q, outgoing: C^q -> C^{q+1}.
    CohomologySpace(int degree, Matrix incoming, Matrix outgoing);

    int degree() const { return degree_; }
    std::size_t dimension() const { return reps_.size(); }
    std::size_t cochain_dim() const { return outgoing_.cols(); }
    Field field() const { return outgoing_.field(); }
    /// Cocycles whose classes form a basis.
    const std::vector<Vec>& representatives() const { return reps_; }

    bool is_cocycle(const Vec& c) const;
    /// Coordinates of the class of c in the representative basis. Throws if c is not a cocycle.
    Vec coordinates(const Vec& c) const;
    bool is_exact(const Vec& c) const;
    /// Some y with incoming * y = c.
    std::optional<Vec> primitive(const Vec& c) const;
    /// A vector z with incoming^T z = 0 and <c, z> != 0; exists iff c is not exact.
    std::optional<Vec> dual_witness(const Vec& c) const;

    const Matrix& incoming() const { return incoming_; }
    const Matrix& outgoing() const { return outgoing_; }

private:
    int degree_;
    Matrix incoming_;
    Matrix outgoing_;
    LinearSolver incoming_solver_;
    std::vector<Vec> reps_;
    std::optional<LinearSolver> class_solver_;  // columns: reps, then incoming
    std::vector<Vec> dual_cycles_;              // basis of ker(incoming^T)
};

/// a-twisted cohomology in degree q (a == 1 gives the untwisted groups).
CohomologySpace cohomology_space(const SimplicialComplex& x, const IntegralCocycle& xi, const Scalar& a, int q);

/// Basis of H^q(X;k) by cocycle representatives.
CohomologySpace untwisted_cohomology(const SimplicialComplex& x, Field f, int q);

}  // namespace nvcat
