#include "nvcat/cover.hpp"

#include "nvcat/errors.hpp"
#include "nvcat/forms.hpp"
#include "nvcat/parallel.hpp"

#include <algorithm>

namespace nvcat {

LaurentMatrix TwistedChainComplex::boundary_matrix(int q) const {
    if (q >= 0 && q <= top_degree()) return boundary[static_cast<std::size_t>(q)];
    if (q == top_degree() + 1) return LaurentMatrix(field, chain_dim(q - 1), 0);
    throw std::out_of_range("boundary_matrix: degree " + std::to_string(q));
}

TwistedChainComplex build_twisted_complex(const SimplicialComplex& x, const IntegralCocycle& xi, Field f) {
    auto report = validate_cocycle(x, xi);
    if (!report.ok) {
        std::vector<std::string> details;
        for (const auto& s : report.violations) details.push_back("cocycle condition fails on triangle " + simplex_json(s).dump());
        throw ValidationError("xi is not a cocycle", details);
    }
    TwistedChainComplex c{f, x, {}};
    c.boundary.emplace_back(f, 0, x.count(0));
    const Scalar one = Scalar::one(f);
    for (int q = 1; q <= x.dimension(); ++q) {
        const auto& cells = x.simplices(q);
        LaurentMatrix d(f, x.count(q - 1), cells.size());
        for (std::size_t col = 0; col < cells.size(); ++col) {
            const Simplex& s = cells[col];
            for (std::size_t i = 0; i < s.size(); ++i) {
                std::size_t row = x.index(face(s, i));
                if (i == 0)
                    d(row, col) = LaurentPoly::monomial(one, xi.value(s[0], s[1]));
                else
                    d(row, col) = LaurentPoly::constant(i % 2 ? -one : one);
            }
        }
        c.boundary.push_back(std::move(d));
    }
    return c;
}

CoverHomology::CoverHomology(const TwistedChainComplex& c) : field_(c.field) {
    const int top = c.top_degree();
    auto snfs = parallel_map(static_cast<std::size_t>(top + 1), [&](std::size_t q) { return smith_normal_form(c.boundary[q]); });
    stages_ = parallel_map(static_cast<std::size_t>(top + 1), [&](std::size_t qi) {
        const int q = static_cast<int>(qi);
        const LaurentSNF& s = snfs[qi];
        const std::size_t n = c.chain_dim(q);
        LaurentMatrix next = s.v_inverse * c.boundary_matrix(q + 1);
        LaurentMatrix m = next.submatrix(s.rank, n, 0, next.cols());
        LaurentSNF p = smith_normal_form(m);
        return Stage{c.boundary[qi], s.rank, s.v_inverse, std::move(p.u), std::move(p.diagonal), p.rank};
    });
    for (int q = 0; q <= top; ++q) {
        const Stage& st = stages_[static_cast<std::size_t>(q)];
        CoverDegree d;
        d.degree = q;
        d.free_rank = c.chain_dim(q) - st.boundary_rank - st.presentation_rank;
        for (std::size_t k = 0; k < st.presentation_rank; ++k)
            if (!st.diagonal[k].is_unit()) d.invariant_factors.push_back(st.diagonal[k]);
        degrees_.push_back(std::move(d));
    }
}

long CoverHomology::free_euler_characteristic() const {
    long chi = 0;
    for (const auto& d : degrees_) chi += (d.degree % 2 ? -1 : 1) * static_cast<long>(d.free_rank);
    return chi;
}

MovabilityResult CoverHomology::is_movable(const std::vector<LaurentPoly>& z, int q) const {
    if (q < 0 || q >= static_cast<int>(stages_.size())) throw ContractError("is_movable: degree out of range");
    const Stage& st = stages_[static_cast<std::size_t>(q)];
    if (z.size() != st.boundary.cols()) throw ContractError("is_movable: chain length does not match degree " + std::to_string(q));
    for (const auto& e : st.boundary.apply(z))
        if (!e.is_zero()) throw ContractError("is_movable: not a cycle");
    auto c = st.v_inverse.apply(z);
    std::vector<LaurentPoly> tail(c.begin() + static_cast<std::ptrdiff_t>(st.boundary_rank), c.end());
    auto y = st.u_presentation.apply(tail);
    for (std::size_t i = st.presentation_rank; i < y.size(); ++i)
        if (!y[i].is_zero()) return {false, std::nullopt};
    LaurentPoly ann = LaurentPoly::constant(Scalar::one(field_));
    for (std::size_t i = 0; i < st.presentation_rank; ++i) {
        const LaurentPoly& d = st.diagonal[i];
        if (d.is_unit() || y[i].is_zero()) continue;
        ann = poly_lcm(ann, exact_div(d, poly_gcd(d, y[i])));
    }
    return {true, ann.canonical()};
}

CoverHomology cover_homology(const TwistedChainComplex& c) { return CoverHomology(c); }

bool TorsionSummary::in_supp(const Scalar& a) const {
    return std::any_of(supp.begin(), supp.end(), [&](const Scalar& s) { return s == a; });
}

TorsionSummary torsion_summary(const CoverHomology& h, std::int64_t lambda, Field f) {
    if (lambda < 1) throw ContractError("torsion_summary: lambda must be positive");
    TorsionSummary s{f, lambda, {}, LaurentPoly::constant(Scalar::one(f)), {}, {}, 0};
    std::vector<Scalar> base;
    auto add_unique = [](std::vector<Scalar>& v, const Scalar& x) {
        if (std::none_of(v.begin(), v.end(), [&](const Scalar& y) { return y == x; })) v.push_back(x);
    };
    for (const auto& d : h.degrees()) {
        s.invariant_factors.push_back(d.invariant_factors);
        for (const auto& p : d.invariant_factors) {
            s.delta = s.delta * p;
            s.torsion_dim += static_cast<std::size_t>(p.span());
            for (const auto& r : roots(p)) add_unique(base, r.inverse());
        }
    }
    s.delta = s.delta.canonical();
    s.factorization = factor_irreducible(s.delta);
    if (lambda == 1) {
        s.supp = base;
    } else {
        const Scalar one = Scalar::one(f);
        for (const auto& b : base) {
            LaurentPoly eq = LaurentPoly::monomial(one, lambda) - LaurentPoly::constant(b);
            for (const auto& r : roots(eq)) add_unique(s.supp, r);
        }
    }
    return s;
}

CoverAnalysis analyze_cover(const SimplicialComplex& x, const IntegralCocycle& xi, Field f) {
    auto div = divisibility(x, xi);
    auto chains = build_twisted_complex(x, div.eta, f);
    CoverHomology h(chains);
    auto summary = torsion_summary(h, div.lambda, f);
    return CoverAnalysis{div.lambda, div.eta, std::move(chains), std::move(h), std::move(summary)};
}

nlohmann::json to_json(const CoverDegree& d) {
    nlohmann::json factors = nlohmann::json::array();
    for (const auto& p : d.invariant_factors) factors.push_back(p.to_string());
    return {{"degree", d.degree}, {"free_rank", d.free_rank}, {"invariant_factors", factors}};
}

nlohmann::json to_json(const TorsionSummary& s) {
    nlohmann::json supp = nlohmann::json::array();
    for (const auto& a : s.supp) supp.push_back(a.to_string());
    nlohmann::json factors = nlohmann::json::array();
    for (const auto& f : s.factorization) factors.push_back({{"factor", f.poly.to_string()}, {"multiplicity", f.multiplicity}});
    return {{"supp", supp}, {"torsion_dim", s.torsion_dim}, {"lambda", s.lambda}, {"delta", s.delta.to_string()}, {"factorization", factors}};
}

}  // namespace nvcat
