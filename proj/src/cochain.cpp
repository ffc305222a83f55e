#include "nvcat/cochain.hpp"

#include "nvcat/errors.hpp"

#include <stdexcept>

namespace nvcat {

std::optional<Scalar> normalize_twist(const Scalar& a) {
    if (a.is_zero()) throw ContractError("twist value must be nonzero");
    if (a.is_one()) return std::nullopt;
    return a;
}

Matrix coboundary_matrix(const SimplicialComplex& x, const IntegralCocycle& xi, const Scalar& a, int q) {
    const Field f = a.field();
    if (a.is_zero()) throw ContractError("twist value must be nonzero");
    const auto& rows = x.simplices(q + 1);
    Matrix m(f, rows.size(), q >= 0 ? x.count(q) : 0);
    if (q < 0) return m;
    const bool twisted = !a.is_one();
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const Simplex& s = rows[r];
        for (std::size_t i = 0; i < s.size(); ++i) {
            std::size_t c = x.index(face(s, i));
            if (i == 0)
                m(r, c) = twisted ? a.pow(xi.value(s[0], s[1])) : Scalar::one(f);
            else
                m(r, c) = Scalar(f, i % 2 ? -1 : 1);
        }
    }
    return m;
}

Matrix coboundary_matrix(const SimplicialComplex& x, Field f, int q) {
    return coboundary_matrix(x, IntegralCocycle(), Scalar::one(f), q);
}

Cochain coboundary(const SimplicialComplex& x, const Cochain& u) {
    if (u.twist) throw ContractError("coboundary: cochain is twisted; use twisted_coboundary");
    if (u.values.size() != x.count(u.degree)) throw ContractError("coboundary: cochain does not match the complex");
    if (u.values.empty() && x.count(u.degree + 1) == 0) return {u.degree + 1, {}, std::nullopt};
    Field f = u.values.empty() ? Field::rationals() : u.values.front().field();
    return {u.degree + 1, coboundary_matrix(x, f, u.degree).apply(u.values), std::nullopt};
}

Cochain cup(const SimplicialComplex& x, const IntegralCocycle& xi, const Cochain& u, const Cochain& v) {
    if (u.values.size() != x.count(u.degree) || v.values.size() != x.count(v.degree))
        throw ContractError("cup: cochains do not match the complex");
    const int p = u.degree;
    const int d = u.degree + v.degree;
    const auto& top = x.simplices(d);
    Field f;
    if (!u.values.empty())
        f = u.values.front().field();
    else if (!v.values.empty())
        f = v.values.front().field();
    else if (u.twist)
        f = u.twist->field();
    const Scalar a = u.twist_value(f);
    const Scalar b = v.twist_value(f);
    Cochain out{d, zero_vec(f, top.size()), normalize_twist(a * b)};
    for (std::size_t k = 0; k < top.size(); ++k) {
        const Simplex& s = top[k];
        Simplex front(s.begin(), s.begin() + p + 1);
        Simplex back(s.begin() + p, s.end());
        const Scalar& uf = u.values[x.index(front)];
        if (uf.is_zero()) continue;
        const Scalar& vb = v.values[x.index(back)];
        if (vb.is_zero()) continue;
        Scalar value = uf * vb;
        if (v.twist && p > 0) value *= b.pow(xi.value(s[0], s[p]));
        out.values[k] = value;
    }
    return out;
}

Cochain cup_untwisted(const SimplicialComplex& x, const Cochain& u, const Cochain& v) {
    if (u.twist || v.twist) throw ContractError("cup_untwisted: twisted factor");
    return cup(x, IntegralCocycle(), u, v);
}

CohomologySpace::CohomologySpace(int degree, Matrix incoming, Matrix outgoing)
    : degree_(degree), incoming_(std::move(incoming)), outgoing_(std::move(outgoing)), incoming_solver_(incoming_) {
    if (incoming_.rows() != outgoing_.cols()) throw std::invalid_argument("CohomologySpace: shape mismatch");
    const Field f = outgoing_.field();
    const std::size_t n = outgoing_.cols();
    SpanBasis span(f, n);
    for (std::size_t j = 0; j < incoming_.cols(); ++j) span.add(incoming_.column(j));
    for (auto& z : LinearSolver(outgoing_).kernel())
        if (span.add(z)) reps_.push_back(std::move(z));

    std::vector<Vec> cols = reps_;
    for (std::size_t j = 0; j < incoming_.cols(); ++j) cols.push_back(incoming_.column(j));
    class_solver_.emplace(Matrix::from_columns(f, n, cols));
    dual_cycles_ = LinearSolver(incoming_.transpose()).kernel();
}

bool CohomologySpace::is_cocycle(const Vec& c) const {
    if (c.size() != cochain_dim()) throw ContractError("cochain length does not match degree " + std::to_string(degree_));
    return nvcat::is_zero(outgoing_.apply(c));
}

Vec CohomologySpace::coordinates(const Vec& c) const {
    if (!is_cocycle(c)) throw ContractError("coordinates: not a cocycle");
    auto x = class_solver_->solve(c);
    if (!x) throw std::logic_error("cocycle outside ker/im decomposition");
    return Vec(x->begin(), x->begin() + static_cast<std::ptrdiff_t>(reps_.size()));
}

bool CohomologySpace::is_exact(const Vec& c) const { return nvcat::is_zero(coordinates(c)); }

std::optional<Vec> CohomologySpace::primitive(const Vec& c) const { return incoming_solver_.solve(c); }

std::optional<Vec> CohomologySpace::dual_witness(const Vec& c) const {
    for (const auto& z : dual_cycles_)
        if (!dot(c, z).is_zero()) return z;
    return std::nullopt;
}

CohomologySpace cohomology_space(const SimplicialComplex& x, const IntegralCocycle& xi, const Scalar& a, int q) {
    return CohomologySpace(q, coboundary_matrix(x, xi, a, q - 1), coboundary_matrix(x, xi, a, q));
}

CohomologySpace untwisted_cohomology(const SimplicialComplex& x, Field f, int q) {
    return cohomology_space(x, IntegralCocycle(), Scalar::one(f), q);
}

}  // namespace nvcat
