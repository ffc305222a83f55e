#include "nvcat/local_system.hpp"

#include "nvcat/errors.hpp"
#include "nvcat/forms.hpp"

#include <algorithm>

namespace nvcat {

Monodromy::Monodromy(Scalar value, const IntegralCocycle& cocycle) : a(std::move(value)), xi(&cocycle) {
    if (a.is_zero()) throw ContractError("monodromy value must be nonzero");
}

Scalar Monodromy::along(const SimplicialComplex& x, std::span<const int> loop) const {
    if (loop.empty() || loop.front() != loop.back()) throw ContractError("monodromy: path is not closed");
    return a.pow(integrate_path(x, *xi, loop));
}

Cochain twisted_coboundary(const SimplicialComplex& x, const IntegralCocycle& xi, const Cochain& u) {
    if (u.values.size() != x.count(u.degree)) throw ContractError("twisted_coboundary: cochain does not match the complex");
    Field f = u.twist ? u.twist->field() : (u.values.empty() ? Field::rationals() : u.values.front().field());
    Scalar a = u.twist_value(f);
    if (a.is_zero()) throw ContractError("twist value must be nonzero");
    return {u.degree + 1, coboundary_matrix(x, xi, a, u.degree).apply(u.values), normalize_twist(a)};
}

std::vector<std::size_t> TwistedCohomologyBasis::dims() const {
    std::vector<std::size_t> d;
    for (const auto& h : degrees) d.push_back(h.dimension());
    return d;
}

TwistedCohomologyBasis twisted_cohomology(const SimplicialComplex& x, const IntegralCocycle& xi, const Scalar& a) {
    TwistedCohomologyBasis b{a, {}};
    for (int q = 0; q <= x.dimension(); ++q) b.degrees.push_back(cohomology_space(x, xi, a, q));
    return b;
}

CohomologySpace twisted_cohomology(const SimplicialComplex& x, const IntegralCocycle& xi, const Scalar& a, int q) {
    return cohomology_space(x, xi, a, q);
}

namespace {

bool excluded(const std::vector<Scalar>& supp, const Scalar& a) {
    const Scalar inv = a.inverse();
    return std::any_of(supp.begin(), supp.end(), [&](const Scalar& s) { return s == a || s == inv; });
}

std::int64_t nth_prime(std::uint64_t n) {
    std::int64_t p = 1;
    for (std::uint64_t k = 0; k <= n;)
        if (is_prime(++p)) ++k;
    return p;
}

}  // namespace

std::vector<Scalar> pick_generic(const std::vector<Scalar>& supp, Field f, std::size_t count, std::uint64_t seed) {
    std::vector<Scalar> out;
    if (f.is_rational()) {
        if (seed > 100000) throw LimitError("seed too large for generic sampling over Q");
        for (std::uint64_t k = seed; out.size() < count; ++k) {
            Scalar p(f, nth_prime(k));
            for (const Scalar& a : {p, p.inverse()})
                if (out.size() < count && !excluded(supp, a)) out.push_back(a);
        }
        return out;
    }
    const std::int64_t p = f.characteristic();
    if (p < 3) throw LimitError("field F_" + std::to_string(p) + " too small for generic sampling");
    const std::int64_t span = p - 2;  // residues 2..p-1
    const auto start = static_cast<std::int64_t>(seed % static_cast<std::uint64_t>(span));
    for (std::int64_t k = 0; k < span && out.size() < count; ++k) {
        Scalar a(f, 2 + (start + k) % span);
        if (!excluded(supp, a)) out.push_back(a);
    }
    if (out.size() < count)
        throw LimitError("field " + f.name() + " has too few elements outside Supp for " + std::to_string(count) + " generic values");
    return out;
}

std::vector<Scalar> pick_generic(const TorsionSummary& supp, std::size_t count, std::uint64_t seed) {
    return pick_generic(supp.supp, supp.field, count, seed);
}

Cochain cup_twisted(const SimplicialComplex& x, const IntegralCocycle& xi, const Cochain& u, const Cochain& v) {
    if ((u.twist && u.twist->is_zero()) || (v.twist && v.twist->is_zero())) throw ContractError("cup_twisted: zero twist");
    return cup(x, xi, u, v);
}

nlohmann::json cochain_json(const SimplicialComplex& x, const Cochain& c) {
    nlohmann::json values = nlohmann::json::array();
    const auto& cells = x.simplices(c.degree);
    for (std::size_t i = 0; i < c.values.size(); ++i)
        if (!c.values[i].is_zero()) values.push_back({simplex_json(cells[i]), c.values[i].to_string()});
    return {{"degree", c.degree}, {"twist", c.twist ? nlohmann::json(c.twist->to_string()) : nlohmann::json(nullptr)}, {"values", values}};
}

Cochain cochain_from_json(const SimplicialComplex& x, Field f, const nlohmann::json& doc) {
    try {
        Cochain c;
        c.degree = doc.at("degree").get<int>();
        if (c.degree < 0 || c.degree > x.dimension()) throw ValidationError("cochain degree out of range");
        if (!doc.at("twist").is_null()) c.twist = normalize_twist(Scalar::parse(f, doc.at("twist").get<std::string>()));
        c.values = zero_vec(f, x.count(c.degree));
        for (const auto& entry : doc.at("values")) {
            Simplex s = entry.at(0).get<Simplex>();
            auto idx = x.find(s);
            if (!idx || static_cast<int>(s.size()) != c.degree + 1) throw ValidationError("cochain names a simplex not in the complex: " + entry.at(0).dump());
            c.values[*idx] = Scalar::parse(f, entry.at(1).get<std::string>());
        }
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("malformed cochain: ") + e.what());
    }
}

nlohmann::json to_json(const TwistedCohomologyBasis& h) { return {{"a", h.a.to_string()}, {"dims", h.dims()}}; }

}  // namespace nvcat
