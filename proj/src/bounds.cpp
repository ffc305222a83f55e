#include "nvcat/bounds.hpp"

#include "nvcat/errors.hpp"
#include "nvcat/forms.hpp"
#include "nvcat/parallel.hpp"

#include <future>

namespace nvcat {

namespace {

struct Product {
    Cochain cocycle;
    std::vector<Cochain> factors;
    std::vector<std::size_t> survivor_ids;  // massey search only
};

// Span of product classes, kept per degree with explicit factor tuples.
class ProductSpan {
public:
    explicit ProductSpan(const std::vector<CohomologySpace>& h) : h_(&h) {
        for (const auto& space : h) spans_.emplace_back(space.field(), space.dimension());
    }

    void add(Product p) {
        const auto d = static_cast<std::size_t>(p.cocycle.degree);
        if (d >= h_->size()) return;
        if (spans_[d].add((*h_)[d].coordinates(p.cocycle.values))) basis_.push_back(std::move(p));
    }

    const std::vector<Product>& basis() const { return basis_; }
    bool empty() const { return basis_.empty(); }

private:
    const std::vector<CohomologySpace>* h_;
    std::vector<SpanBasis> spans_;
    std::vector<Product> basis_;
};

std::vector<CohomologySpace> untwisted_spaces(const SimplicialComplex& x, Field f) {
    std::vector<CohomologySpace> h;
    for (int q = 0; q <= x.dimension(); ++q) h.push_back(untwisted_cohomology(x, f, q));
    return h;
}

std::vector<Cochain> positive_classes(const std::vector<CohomologySpace>& h) {
    std::vector<Cochain> out;
    for (std::size_t q = 1; q < h.size(); ++q)
        for (const auto& rep : h[q].representatives()) out.push_back({static_cast<int>(q), rep, std::nullopt});
    return out;
}

ProductSpan saturate(const SimplicialComplex& x, const ProductSpan& current, const std::vector<Cochain>& positive,
                     const std::vector<CohomologySpace>& h) {
    ProductSpan next(h);
    for (const auto& p : current.basis())
        for (const auto& w : positive) {
            if (p.cocycle.degree + w.degree > x.dimension()) continue;
            Product q{cup_untwisted(x, p.cocycle, w), p.factors, p.survivor_ids};
            q.factors.push_back(w);
            next.add(std::move(q));
        }
    return next;
}

ProductCertificate certify(const Product& p, const std::vector<CohomologySpace>& h) {
    auto z = h[static_cast<std::size_t>(p.cocycle.degree)].dual_witness(p.cocycle.values);
    if (!z) throw std::logic_error("product basis element has no dual witness");
    return {p.factors, p.cocycle, *z};
}

Cochain unit_cochain(const SimplicialComplex& x, Field f) {
    return {0, Vec(x.count(0), Scalar::one(f)), std::nullopt};
}

// Matrix of u -> u cup c on C^q for a 1-cochain c.
Matrix right_cup_matrix(const SimplicialComplex& x, Field f, const Cochain& c, int q) {
    const auto& cells = x.simplices(q + 1);
    Matrix m(f, cells.size(), x.count(q));
    for (std::size_t r = 0; r < cells.size(); ++r) {
        const Simplex& s = cells[r];
        Simplex front(s.begin(), s.end() - 1);
        m(r, x.index(front)) = c.values[x.index({s[s.size() - 2], s.back()})];
    }
    return m;
}

Scalar parity_sign(Field f, int q) { return Scalar(f, q % 2 ? -1 : 1); }

// Assembles a block matrix from (row block, column block) -> matrix.
struct BlockMatrix {
    BlockMatrix(Field f, std::size_t row_blocks, std::size_t row_size, std::size_t col_blocks, std::size_t col_size)
        : m(f, row_blocks * row_size, col_blocks * col_size), rs(row_size), cs(col_size) {}

    void set(std::size_t bi, std::size_t bj, const Matrix& block, const Scalar& scale) {
        for (std::size_t i = 0; i < block.rows(); ++i)
            for (std::size_t j = 0; j < block.cols(); ++j)
                if (!block(i, j).is_zero()) m(bi * rs + i, bj * cs + j) = block(i, j) * scale;
    }

    Matrix m;
    std::size_t rs, cs;
};

std::vector<Cochain> split_blocks(const Vec& x, std::size_t first, std::size_t count, std::size_t size, int degree) {
    std::vector<Cochain> out;
    for (std::size_t k = 0; k < count; ++k) {
        auto begin = x.begin() + static_cast<std::ptrdiff_t>((first + k) * size);
        out.push_back({degree, Vec(begin, begin + static_cast<std::ptrdiff_t>(size)), std::nullopt});
    }
    return out;
}

// Solves for v_1..v_r in the tower equations with v_0 fixed.
std::optional<std::vector<Cochain>> solve_tower(const SimplicialComplex& x, const Cochain& v, const std::vector<Cochain>& beta, int r) {
    const Field f = v.values.empty() ? Field::rationals() : v.values.front().field();
    const int q = v.degree;
    if (r == 0) return std::vector<Cochain>{};
    const std::size_t nq = x.count(q), nq1 = x.count(q + 1);
    const Scalar s = parity_sign(f, q);
    const Matrix delta = coboundary_matrix(x, f, q);
    BlockMatrix a(f, static_cast<std::size_t>(r), nq1, static_cast<std::size_t>(r), nq);
    Vec rhs = zero_vec(f, static_cast<std::size_t>(r) * nq1);
    for (int n = 1; n <= r; ++n) {
        a.set(n - 1, n - 1, delta, Scalar::one(f));
        for (int k = 1; k < n; ++k) a.set(n - 1, k - 1, right_cup_matrix(x, f, beta[static_cast<std::size_t>(n - k)], q), -s);
        Vec term = cup_untwisted(x, v, beta[static_cast<std::size_t>(n)]).values;
        for (std::size_t i = 0; i < nq1; ++i) rhs[(n - 1) * nq1 + i] = s * term[i];
    }
    auto sol = LinearSolver(a.m).solve(rhs);
    if (!sol) return std::nullopt;
    return split_blocks(*sol, 0, static_cast<std::size_t>(r), nq, q);
}

std::vector<Cochain> binomial_cochains(const SimplicialComplex& x, const IntegralCocycle& xi, Field f, int r) {
    std::vector<Cochain> beta{Cochain{1, zero_vec(f, x.count(1)), std::nullopt}};  // index 0 unused
    for (int m = 1; m <= r; ++m) beta.push_back(binomial_cochain(x, xi, f, m));
    return beta;
}

void require_untwisted_cocycle(const SimplicialComplex& x, const Cochain& v) {
    if (v.twist) throw ContractError("expected an untwisted cochain");
    if (v.values.size() != x.count(v.degree)) throw ContractError("cochain does not match the complex");
    if (!is_zero(coboundary(x, v).values)) throw ContractError("expected a cocycle");
}

Field field_of(const Cochain& c) {
    if (c.twist) return c.twist->field();
    return c.values.empty() ? Field::rationals() : c.values.front().field();
}

std::string interpretation(int bound, bool exact) {
    const std::string n = std::to_string(bound);
    if (exact)
        return "xi is cohomologous to zero, so closed 1-forms in its class are differentials of functions; on a closed "
               "manifold every such function has at least " + n + (bound == 1 ? " critical point" : " critical points");
    std::string text = "any closed 1-form in the class of xi whose gradient-like field has no homoclinic cycles has at least " + n +
                       (bound == 1 ? " zero" : " zeros") + "; some closed 1-form in the class has at most one zero";
    if (bound > 1) text += ", so a form with at most one zero in this class must carry homoclinic cycles";
    return text;
}

}  // namespace

// ---- twisted cup-length ----------------------------------------------------

CupBoundResult cup_length_bound(const SimplicialComplex& x, const IntegralCocycle& xi, const BoundOptions& opt, const TorsionSummary* supp) {
    if (periods(x, xi) == 0) throw ContractError("cup_length_bound: xi is exact; use classical_cup_length");
    const Field f = opt.field;
    std::optional<CoverAnalysis> cover;
    if (!supp) {
        cover.emplace(analyze_cover(x, xi, f));
        supp = &cover->torsion;
    }
    CupBoundResult result;
    result.supp = supp->supp;
    Scalar a = opt.a ? *opt.a : pick_generic(*supp, 1, opt.seed).front();
    Scalar b = opt.b ? *opt.b : a.inverse();
    for (const Scalar& s : {a, b}) {
        if (!(s.field() == f)) throw ValidationError("generic value " + s.to_string() + " is not in the selected field");
        if (s.is_zero()) throw ValidationError("generic value must be nonzero");
        if (supp->in_supp(s) || supp->in_supp(s.inverse())) throw ValidationError("value " + s.to_string() + " is not generic: it or its inverse lies in Supp");
    }
    const Scalar ab = a * b;
    auto ha = twisted_cohomology(x, xi, a);
    auto hb = twisted_cohomology(x, xi, b);
    auto hab = twisted_cohomology(x, xi, ab);
    auto h = untwisted_spaces(x, f);
    auto positive = positive_classes(h);

    ProductSpan level(h);
    level.add({unit_cochain(x, f), {}, {}});
    for (int r = 0; r <= opt.max_r && !level.empty(); ++r) {
        std::optional<CupCertificate> found;
        for (std::size_t q = 0; q < ha.degrees.size() && !found; ++q)
            for (const auto& u : ha.degrees[q].representatives()) {
                if (found) break;
                Cochain uc{static_cast<int>(q), u, normalize_twist(a)};
                for (std::size_t q2 = 0; q + q2 < hb.degrees.size() && !found; ++q2)
                    for (const auto& v : hb.degrees[q2].representatives()) {
                        if (found) break;
                        Cochain vc{static_cast<int>(q2), v, normalize_twist(b)};
                        Cochain uv = cup_twisted(x, xi, uc, vc);
                        for (const auto& p : level.basis()) {
                            if (uv.degree + p.cocycle.degree > x.dimension()) continue;
                            Cochain c = r == 0 ? uv : cup_twisted(x, xi, uv, p.cocycle);
                            auto z = hab.degrees[static_cast<std::size_t>(c.degree)].dual_witness(c.values);
                            if (!z) continue;
                            found = CupCertificate{a, b, uc, vc, p.factors, c, *z};
                            break;
                        }
                    }
            }
        if (!found) break;
        result.r_best = r;
        result.certificate = std::move(found);
        if (r == 0) {
            level = ProductSpan(h);
            for (const auto& w : positive) level.add({w, {w}, {}});
        } else {
            level = saturate(x, level, positive, h);
        }
    }
    return result;
}

ClassicalResult classical_cup_length(const SimplicialComplex& x, Field f) {
    auto h = untwisted_spaces(x, f);
    auto positive = positive_classes(h);
    ProductSpan level(h);
    for (const auto& w : positive) level.add({w, {w}, {}});
    ClassicalResult result;
    for (int m = 1; !level.empty(); ++m) {
        result.cup_length = m;
        result.certificate = certify(level.basis().front(), h);
        level = saturate(x, level, positive, h);
    }
    return result;
}

// ---- Massey powers ---------------------------------------------------------

std::string to_string(MasseyStatus s) {
    switch (s) {
        case MasseyStatus::Vanishes: return "vanishes";
        case MasseyStatus::NonzeroModLastStage: return "nonzero_mod_last_stage";
        case MasseyStatus::Undecided: return "undecided";
    }
    return "undecided";
}

Cochain binomial_cochain(const SimplicialComplex& x, const IntegralCocycle& xi, Field f, int m) {
    Cochain c{1, {}, std::nullopt};
    for (const auto& e : x.simplices(1)) c.values.push_back(binomial(f, xi.value(e[0], e[1]), m));
    return c;
}

bool check_tower(const SimplicialComplex& x, const IntegralCocycle& xi, const Cochain& v, const std::vector<Cochain>& tower) {
    const Field f = field_of(v);
    const int q = v.degree;
    const auto beta = binomial_cochains(x, xi, f, static_cast<int>(tower.size()));
    const Scalar s = parity_sign(f, q);
    for (std::size_t n = 1; n <= tower.size(); ++n) {
        const Cochain& vn = tower[n - 1];
        if (vn.degree != q || vn.twist || vn.values.size() != x.count(q)) return false;
        Vec rhs = zero_vec(f, x.count(q + 1));
        for (std::size_t m = 1; m <= n; ++m) {
            const Cochain& prev = m == n ? v : tower[n - m - 1];
            axpy(rhs, s, cup_untwisted(x, prev, beta[m]).values);
        }
        if (coboundary(x, vn).values != rhs) return false;
    }
    return true;
}

MasseyResult massey_power(const SimplicialComplex& x, const Cochain& v, const IntegralCocycle& xi, int r) {
    if (r < 1) throw ContractError("massey_power: order must be at least 1");
    require_untwisted_cocycle(x, v);
    const Field f = field_of(v);
    const int q = v.degree;
    const auto beta = binomial_cochains(x, xi, f, r);
    MasseyResult result;
    result.order = r;
    if (auto tower = solve_tower(x, v, beta, r)) {
        result.status = MasseyStatus::Vanishes;
        result.defining_system = std::move(*tower);
        return result;
    }
    auto lower = solve_tower(x, v, beta, r - 1);
    if (!lower) throw ContractError("massey_power: order " + std::to_string(r - 1) + " does not vanish");
    // The obstruction is (-1)^q times this sum; the sign does not affect its status.
    Vec rho = zero_vec(f, x.count(q + 1));
    for (int m = 1; m <= r; ++m) {
        const Cochain& prev = m == r ? v : (*lower)[static_cast<std::size_t>(r - m - 1)];
        axpy(rho, Scalar::one(f), cup_untwisted(x, prev, beta[static_cast<std::size_t>(m)]).values);
    }
    result.representative = Cochain{q + 1, rho, std::nullopt};
    if (r == 1) {
        result.status = MasseyStatus::NonzeroModLastStage;
        return result;
    }
    // Last-stage indeterminacy: exact cochains, H^q cup xi and v cup H^1.
    const Matrix incoming = coboundary_matrix(x, f, q);
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < incoming.cols(); ++j) cols.push_back(incoming.column(j));
    for (const auto& h : untwisted_cohomology(x, f, q).representatives())
        cols.push_back(cup_untwisted(x, Cochain{q, h, std::nullopt}, beta[1]).values);
    if (q + 1 <= x.dimension())
        for (const auto& k : untwisted_cohomology(x, f, 1).representatives())
            cols.push_back(cup_untwisted(x, v, Cochain{1, k, std::nullopt}).values);
    const bool inside = LinearSolver(Matrix::from_columns(f, rho.size(), cols)).in_image(rho);
    result.status = inside ? MasseyStatus::Undecided : MasseyStatus::NonzeroModLastStage;
    return result;
}

std::vector<Survivor> survivor_basis(const SimplicialComplex& x, const IntegralCocycle& xi, Field f, int q, int order) {
    if (order < 1) throw ContractError("survivor order must be at least 1");
    auto h = untwisted_cohomology(x, f, q);
    std::vector<Survivor> out;
    if (h.dimension() == 0) return out;
    const auto beta = binomial_cochains(x, xi, f, order);
    const std::size_t nq = x.count(q), nq1 = x.count(q + 1);
    const auto blocks = static_cast<std::size_t>(order) + 1;
    const Scalar s = parity_sign(f, q);
    const Matrix delta = coboundary_matrix(x, f, q);
    BlockMatrix a(f, blocks, nq1, blocks, nq);
    a.set(0, 0, delta, Scalar::one(f));
    for (std::size_t n = 1; n < blocks; ++n) {
        a.set(n, n, delta, Scalar::one(f));
        for (std::size_t k = 0; k < n; ++k) a.set(n, k, right_cup_matrix(x, f, beta[n - k], q), -s);
    }
    SpanBasis span(f, h.dimension());
    for (const auto& kv : LinearSolver(a.m).kernel()) {
        auto parts = split_blocks(kv, 0, blocks, nq, q);
        if (!span.add(h.coordinates(parts[0].values))) continue;
        out.push_back({parts[0], std::vector<Cochain>(parts.begin() + 1, parts.end())});
        if (out.size() == h.dimension()) break;
    }
    return out;
}

MasseyBoundResult massey_bound(const SimplicialComplex& x, const IntegralCocycle& xi, const BoundOptions& opt) {
    auto div = divisibility(x, xi);
    const Field f = opt.field;
    MasseyBoundResult result;
    result.lambda = div.lambda;
    result.survivor_order = opt.survivor_order;
    auto h = untwisted_spaces(x, f);
    auto positive = positive_classes(h);

    auto per_degree = parallel_map(static_cast<std::size_t>(std::max(x.dimension(), 0)), [&](std::size_t i) {
        return survivor_basis(x, div.eta, f, static_cast<int>(i) + 1, opt.survivor_order);
    });
    std::vector<Survivor> survivors;
    for (auto& d : per_degree)
        for (auto& s : d) survivors.push_back(std::move(s));

    ProductSpan level(h);
    for (std::size_t i = 0; i < survivors.size(); ++i)
        for (std::size_t j = 0; j < survivors.size(); ++j) {
            const Cochain& s1 = survivors[i].cocycle;
            const Cochain& s2 = survivors[j].cocycle;
            if (s1.degree + s2.degree > x.dimension()) continue;
            level.add({cup_untwisted(x, s1, s2), {s1, s2}, {i, j}});
        }
    const int cap = opt.max_r + 2;
    for (int r = 2; r <= cap && !level.empty(); ++r) {
        const Product& p = level.basis().front();
        result.r = r;
        result.certificate = certify(p, h);
        result.survivors = {survivors[p.survivor_ids[0]], survivors[p.survivor_ids[1]]};
        if (r < cap) level = saturate(x, level, positive, h);
    }
    return result;
}

// ---- report ----------------------------------------------------------------

nlohmann::json to_json(const SimplicialComplex& x, const CupCertificate& c) {
    nlohmann::json w = nlohmann::json::array();
    for (const auto& f : c.w) w.push_back(cochain_json(x, f));
    Cochain z{c.product.degree, c.witness, std::nullopt};
    return {{"a", c.a.to_string()}, {"b", c.b.to_string()}, {"r", c.r()}, {"u", cochain_json(x, c.u)}, {"v", cochain_json(x, c.v)},
            {"w", w}, {"product", cochain_json(x, c.product)}, {"witness", cochain_json(x, z)}};
}

nlohmann::json to_json(const SimplicialComplex& x, const ProductCertificate& c) {
    nlohmann::json factors = nlohmann::json::array();
    for (const auto& f : c.factors) factors.push_back(cochain_json(x, f));
    Cochain z{c.product.degree, c.witness, std::nullopt};
    return {{"factors", factors}, {"product", cochain_json(x, c.product)}, {"witness", cochain_json(x, z)}};
}

CatBoundReport compute_bounds(const SimplicialComplex& x, const IntegralCocycle& xi, const BoundOptions& opt) {
    if (opt.max_r < 0) throw ValidationError("max_r must be non-negative");
    if (opt.survivor_order < 1) throw ValidationError("survivor order must be at least 1");
    CatBoundReport report;
    report.context = {{"field", opt.field.selector()}, {"seed", opt.seed}, {"max_r", opt.max_r}, {"survivor_order", opt.survivor_order}};
    report.xi_exact = periods(x, xi) == 0;
    if (report.xi_exact) {
        auto classical = classical_cup_length(x, opt.field);
        nlohmann::json cert = classical.certificate ? to_json(x, *classical.certificate) : nlohmann::json{{"factors", nlohmann::json::array()}};
        report.bounds.push_back({classical.bound(), "classical", cert});
        report.best = classical.bound();
        report.relations = {"cat(X,xi) = cat(X) because xi is cohomologous to zero",
                            "cat(X) >= " + std::to_string(classical.bound()) + " from cup-length " + std::to_string(classical.cup_length)};
        report.interpretation = interpretation(report.best, true);
        return report;
    }

    auto cover = analyze_cover(x, xi, opt.field);
    const TorsionSummary& supp = cover.torsion;
    nlohmann::json supp_json = nlohmann::json::array();
    for (const auto& s : supp.supp) supp_json.push_back(s.to_string());
    report.context["supp"] = supp_json;
    report.context["lambda"] = cover.lambda;

    auto policy = thread_cap() > 1 ? std::launch::async : std::launch::deferred;
    auto massey_future = std::async(policy, [&] { return massey_bound(x, xi, opt); });
    auto classical_future = std::async(policy, [&] { return classical_cup_length(x, opt.field); });
    auto cup = cup_length_bound(x, xi, opt, &supp);
    auto massey = massey_future.get();
    auto classical = classical_future.get();

    if (cup.certificate) {
        report.context["a"] = cup.certificate->a.to_string();
        report.context["b"] = cup.certificate->b.to_string();
        report.bounds.push_back({cup.bound(), "cup", to_json(x, *cup.certificate)});
    }
    if (massey.certificate && massey.bound() > 0) {
        nlohmann::json cert = to_json(x, *massey.certificate);
        cert["r"] = massey.r;
        cert["lambda"] = massey.lambda;
        cert["survivor_order"] = massey.survivor_order;
        cert["survivor_status"] = "verified through order " + std::to_string(massey.survivor_order);
        nlohmann::json towers = nlohmann::json::array();
        for (const auto& s : massey.survivors) {
            nlohmann::json tower = nlohmann::json::array();
            for (const auto& c : s.tower) tower.push_back(cochain_json(x, c));
            towers.push_back(tower);
        }
        cert["towers"] = towers;
        report.bounds.push_back({massey.bound(), "massey", cert});
    }
    for (const auto& b : report.bounds) report.best = std::max(report.best, b.value);
    report.relations = {"cat(X,xi) <= cat(X) - 1 since xi is nonzero",
                        "cat(X) >= " + std::to_string(classical.bound()) + " from cup-length " + std::to_string(classical.cup_length)};
    report.interpretation = interpretation(report.best, false);
    return report;
}

nlohmann::json to_json(const CatBoundReport& r) {
    nlohmann::json bounds = nlohmann::json::array();
    for (const auto& b : r.bounds) bounds.push_back({{"value", b.value}, {"theorem", b.theorem}, {"certificate", b.certificate}});
    return {{"version", 1}, {"xi_exact", r.xi_exact}, {"best_bound", r.best}, {"bounds", bounds},
            {"relations", r.relations}, {"interpretation", r.interpretation}, {"context", r.context}};
}

// ---- replay ----------------------------------------------------------------

namespace {

struct ReplayFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void expect(bool cond, const std::string& reason) {
    if (!cond) throw ReplayFailure(reason);
}

// Checks <product, z> != 0 and z is a cycle of the dual complex (coboundaries pair to zero).
void check_witness(const SimplicialComplex& x, const IntegralCocycle& xi, const Scalar& twist, const Cochain& product, const Cochain& z) {
    expect(z.degree == product.degree, "witness degree differs from the product degree");
    const Matrix incoming = coboundary_matrix(x, xi, twist, product.degree - 1);
    expect(is_zero(incoming.apply_transpose(z.values)), "witness is not a cycle");
    expect(!dot(product.values, z.values).is_zero(), "witness pairs to zero with the product");
}

Cochain cochain_product(const SimplicialComplex& x, const IntegralCocycle& xi, Cochain acc, const std::vector<Cochain>& factors) {
    for (const auto& w : factors) acc = cup_twisted(x, xi, acc, w);
    return acc;
}

void replay_cup(const SimplicialComplex& x, const IntegralCocycle& xi, Field f, const nlohmann::json& c, int value) {
    const Scalar a = Scalar::parse(f, c.at("a").get<std::string>());
    const Scalar b = Scalar::parse(f, c.at("b").get<std::string>());
    expect(!a.is_zero() && !b.is_zero(), "zero twist");
    const auto supp = analyze_cover(x, xi, f).torsion;
    for (const Scalar& s : {a, b}) expect(!supp.in_supp(s) && !supp.in_supp(s.inverse()), s.to_string() + " meets Supp");
    Cochain u = cochain_from_json(x, f, c.at("u"));
    Cochain v = cochain_from_json(x, f, c.at("v"));
    expect(u.twist_value(f) == a && v.twist_value(f) == b, "factor twists disagree with a and b");
    expect(is_zero(twisted_coboundary(x, xi, u).values), "u is not a twisted cocycle");
    expect(is_zero(twisted_coboundary(x, xi, v).values), "v is not a twisted cocycle");
    std::vector<Cochain> w;
    for (const auto& j : c.at("w")) {
        w.push_back(cochain_from_json(x, f, j));
        expect(!w.back().twist && w.back().degree > 0, "w factors must be untwisted of positive degree");
        expect(is_zero(coboundary(x, w.back()).values), "w factor is not a cocycle");
    }
    expect(static_cast<int>(w.size()) + 1 == value, "bound value does not match the number of factors");
    Cochain product = cochain_product(x, xi, cup_twisted(x, xi, u, v), w);
    check_witness(x, xi, a * b, product, cochain_from_json(x, f, c.at("witness")));
}

std::vector<Cochain> untwisted_factors(const SimplicialComplex& x, Field f, const nlohmann::json& c) {
    std::vector<Cochain> out;
    for (const auto& j : c.at("factors")) {
        out.push_back(cochain_from_json(x, f, j));
        expect(!out.back().twist && out.back().degree > 0, "factors must be untwisted of positive degree");
        expect(is_zero(coboundary(x, out.back()).values), "factor is not a cocycle");
    }
    return out;
}

void replay_product(const SimplicialComplex& x, Field f, const std::vector<Cochain>& factors, const nlohmann::json& c) {
    Cochain product = cochain_product(x, IntegralCocycle(), unit_cochain(x, f), factors);
    check_witness(x, IntegralCocycle(), Scalar::one(f), product, cochain_from_json(x, f, c.at("witness")));
}

void replay_massey(const SimplicialComplex& x, const IntegralCocycle& xi, Field f, const nlohmann::json& c, int value) {
    auto div = divisibility(x, xi);
    auto factors = untwisted_factors(x, f, c);
    expect(factors.size() >= 2 && static_cast<int>(factors.size()) - 1 == value, "bound value does not match the number of factors");
    const int order = c.at("survivor_order").get<int>();
    expect(order >= 1, "survivor order must be positive");
    const auto& towers = c.at("towers");
    expect(towers.size() == 2, "expected towers for two survivors");
    for (std::size_t k = 0; k < 2; ++k) {
        std::vector<Cochain> tower;
        for (const auto& j : towers[k]) tower.push_back(cochain_from_json(x, f, j));
        expect(static_cast<int>(tower.size()) == order, "tower length differs from the survivor order");
        expect(check_tower(x, div.eta, factors[k], tower), "survivor tower fails the defining equations");
    }
    replay_product(x, f, factors, c);
}

void replay_classical(const SimplicialComplex& x, Field f, const nlohmann::json& c, int value) {
    auto factors = untwisted_factors(x, f, c);
    expect(static_cast<int>(factors.size()) + 1 == value, "bound value does not match the number of factors");
    if (!factors.empty()) replay_product(x, f, factors, c);
}

}  // namespace

std::vector<ReplayVerdict> replay_report(const SimplicialComplex& x, const IntegralCocycle& xi, const nlohmann::json& report) {
    std::vector<ReplayVerdict> out;
    Field f;
    try {
        f = Field::parse(report.at("context").at("field").get<std::string>());
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("malformed report: ") + e.what());
    }
    for (const auto& entry : report.at("bounds")) {
        ReplayVerdict v;
        try {
            v.theorem = entry.at("theorem").get<std::string>();
            v.value = entry.at("value").get<int>();
            const auto& cert = entry.at("certificate");
            if (v.theorem == "cup")
                replay_cup(x, xi, f, cert, v.value);
            else if (v.theorem == "massey")
                replay_massey(x, xi, f, cert, v.value);
            else if (v.theorem == "classical")
                replay_classical(x, f, cert, v.value);
            else
                throw ReplayFailure("unknown bound source " + v.theorem);
            v.ok = true;
        } catch (const ReplayFailure& e) {
            v.reason = e.what();
        } catch (const nlohmann::json::exception& e) {
            v.reason = std::string("malformed certificate: ") + e.what();
        } catch (const ValidationError& e) {
            v.reason = e.what();
        } catch (const ContractError& e) {
            v.reason = e.what();
        }
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace nvcat
