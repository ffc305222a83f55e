// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "nvcat/cli.hpp"
#include "support.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>

using namespace nvcat;

namespace {

const Field Q = Field::rationals();

// Wall-clock limits in seconds; 0 means none.
constexpr double kTorusLimit = 5.0;
constexpr double kTelescopeLimit = 5.0;
constexpr double kGenus2Limit = 60.0;
constexpr double kBouquetLimit = 60.0;

// Random cases per structural identity.
constexpr int kStructuralCases = 200;

constexpr std::size_t kGenericSamples = 5;
constexpr std::size_t kMovabilityMaxSimplices = 30;

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && pass) {
            pass = false;
            detail = what;
        }
    }
};

std::string join(const std::vector<std::string>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
    return s + "}";
}

std::vector<std::string> strings(const std::vector<LaurentPoly>& ps) {
    std::vector<std::string> out;
    for (const auto& p : ps) out.push_back(p.to_string());
    return out;
}

BoundOptions defaults() { return BoundOptions{}; }

Outcome torus_vanishing() {
    Outcome o;
    auto in = testkit::corpus("torus");
    auto cover = analyze_cover(in.complex, in.xi, Q);
    auto values = pick_generic(cover.torsion, kGenericSamples, 0);
    o.require(values.size() == kGenericSamples, "too few generic values");
    std::string used;
    for (const auto& a : values) {
        auto dims = twisted_cohomology(in.complex, in.xi, a).dims();
        o.require(std::all_of(dims.begin(), dims.end(), [](std::size_t d) { return d == 0; }), "nonzero dimension at a = " + a.to_string());
        used += (used.empty() ? "" : ",") + a.to_string();
    }
    int best = compute_bounds(in.complex, in.xi, defaults()).best;
    o.require(best == 0, "best bound " + std::to_string(best));
    if (o.pass) o.detail = "dims 0 at a in {" + used + "}, best bound 0";
    return o;
}

Outcome telescope_torsion() {
    Outcome o;
    auto in = testkit::corpus("mapping_torus_deg2");
    auto c = analyze_cover(in.complex, in.xi, Q);
    const auto& d = c.homology.degrees();
    o.require(d.size() == 3, "unexpected number of degrees");
    if (!o.pass) return o;
    for (const auto& deg : d) o.require(deg.free_rank == 0, "free part in degree " + std::to_string(deg.degree));
    o.require(strings(d[0].invariant_factors) == std::vector<std::string>{"t-1"}, "degree 0: " + join(strings(d[0].invariant_factors)));
    o.require(strings(d[1].invariant_factors) == std::vector<std::string>{"t-2"}, "degree 1: " + join(strings(d[1].invariant_factors)));
    o.require(d[2].invariant_factors.empty(), "degree 2 has torsion");
    std::vector<std::string> supp;
    for (const auto& s : c.torsion.supp) supp.push_back(s.to_string());
    o.require(supp == std::vector<std::string>{"1", "1/2"}, "Supp = " + join(supp));
    if (o.pass) o.detail = "factors t-1 (deg 0), t-2 (deg 1); Supp = " + join(supp);
    return o;
}

Outcome genus2_bounds() {
    Outcome o;
    auto in = testkit::corpus("genus2");
    auto report = compute_bounds(in.complex, in.xi, defaults());
    const BoundEntry* cup = nullptr;
    const BoundEntry* massey = nullptr;
    for (const auto& b : report.bounds) {
        if (b.theorem == "cup") cup = &b;
        if (b.theorem == "massey") massey = &b;
    }
    o.require(cup != nullptr, "no cup certificate");
    o.require(massey != nullptr, "no Massey certificate");
    if (!o.pass) return o;
    o.require(cup->certificate.at("r") == 0 && cup->value >= 1, "cup certificate r = " + cup->certificate.at("r").dump());
    o.require(massey->certificate.at("r") == 2 && massey->value >= 1, "Massey certificate r = " + massey->certificate.at("r").dump());
    o.require(massey->certificate.at("survivor_order") == 4, "survivor order " + massey->certificate.at("survivor_order").dump());
    const auto& towers = massey->certificate.at("towers");
    const auto& factors = massey->certificate.at("factors");
    o.require(towers.size() == 2 && factors.size() >= 2, "expected two survivors");
    if (!o.pass) return o;
    auto div = divisibility(in.complex, in.xi);
    for (std::size_t k = 0; k < 2; ++k) {
        Cochain v = cochain_from_json(in.complex, Q, factors[k]);
        std::vector<Cochain> tower;
        for (const auto& c : towers[k]) tower.push_back(cochain_from_json(in.complex, Q, c));
        o.require(tower.size() == 4 && check_tower(in.complex, div.eta, v, tower), "survivor " + std::to_string(k) + " fails order 4");
    }
    for (const auto& v : replay_report(in.complex, in.xi, to_json(report)))
        o.require(v.ok, v.theorem + " certificate does not replay: " + v.reason);
    if (o.pass) o.detail = "cup r=0, Massey r=2 through order 4, both replay; best bound " + std::to_string(report.best);
    return o;
}

Outcome bouquet_massey() {
    Outcome o;
    auto in = testkit::corpus("bouquet_torus_circle");
    int b = massey_bound(in.complex, in.xi, defaults()).bound();
    o.require(b == 1, "massey_bound = " + std::to_string(b));
    if (o.pass) o.detail = "massey_bound = 1";
    return o;
}

Outcome structural() {
    Outcome o;
    std::mt19937_64 rng(20240601);
    int boundary = 0, coboundary = 0, leibniz = 0, snf = 0, specialization = 0;
    for (int i = 0; i < kStructuralCases; ++i) {
        auto c = testkit::random_case(rng);
        Field f = testkit::random_field(rng);
        auto chains = build_twisted_complex(c.complex, c.xi, f);
        for (int k = 1; k <= chains.top_degree(); ++k)
            o.require((chains.boundary_matrix(k) * chains.boundary_matrix(k + 1)).is_zero(), "boundary squared nonzero");
        ++boundary;

        Scalar a = testkit::random_nonzero(rng, f), b = testkit::random_nonzero(rng, f);
        const int top = c.complex.dimension();
        Cochain u{0, testkit::random_vec(rng, f, c.complex.count(0)), normalize_twist(a)};
        auto du = twisted_coboundary(c.complex, c.xi, u);
        o.require(is_zero(twisted_coboundary(c.complex, c.xi, du).values), "twisted coboundary squared nonzero");
        for (int k = 0; k + 1 < top; ++k)
            o.require((coboundary_matrix(c.complex, c.xi, a, k + 1) * coboundary_matrix(c.complex, c.xi, a, k)).is_zero(),
                      "twisted coboundary matrices compose to nonzero");
        ++coboundary;

        int p = static_cast<int>(rng() % 2), r = static_cast<int>(rng() % 2);
        if (p + r + 1 > top) p = r = 0;
        Cochain u2{p, testkit::random_vec(rng, f, c.complex.count(p)), normalize_twist(a)};
        Cochain v{r, testkit::random_vec(rng, f, c.complex.count(r)), normalize_twist(b)};
        auto lhs = twisted_coboundary(c.complex, c.xi, cup_twisted(c.complex, c.xi, u2, v)).values;
        auto rhs = cup_twisted(c.complex, c.xi, twisted_coboundary(c.complex, c.xi, u2), v).values;
        axpy(rhs, Scalar(f, p % 2 ? -1 : 1), cup_twisted(c.complex, c.xi, u2, twisted_coboundary(c.complex, c.xi, v)).values);
        o.require(lhs == rhs, "Leibniz rule fails");
        ++leibniz;

        auto m = testkit::random_laurent_matrix(rng, f, 1 + rng() % 4, 1 + rng() % 4);
        auto s = smith_normal_form(m);
        LaurentMatrix d(f, m.rows(), m.cols());
        for (std::size_t j = 0; j < s.diagonal.size(); ++j) d(j, j) = s.diagonal[j];
        o.require(s.u * m * s.v == d, "U A V is not the diagonal");
        o.require(determinant(s.u).is_unit() && determinant(s.v).is_unit(), "SNF transforms are not invertible");
        for (std::size_t j = 0; j + 1 < s.diagonal.size(); ++j) {
            const auto& dj = s.diagonal[j];
            o.require(dj.is_zero() ? s.diagonal[j + 1].is_zero() : divides(dj, s.diagonal[j + 1]), "d_i does not divide d_{i+1}");
        }
        ++snf;

        auto h = cover_homology(chains);
        for (int k = 0; k <= top; ++k) {
            std::size_t betti = untwisted_cohomology(c.complex, f, k).dimension();
            o.require(testkit::specialized_betti(chains, Scalar::one(f), k) == betti, "t := 1 rank mismatch");
            o.require(testkit::predicted_betti(h, Scalar::one(f), k) == betti, "t := 1 module prediction mismatch");
        }
        ++specialization;
    }
    if (o.pass) {
        std::ostringstream s;
        s << boundary << " boundary, " << coboundary << " coboundary, " << leibniz << " Leibniz, " << snf << " SNF, "
          << specialization << " specialization cases";
        o.detail = s.str();
    }
    return o;
}

Outcome genericity() {
    Outcome o;
    std::size_t inputs = 0;
    for (const auto& name : testkit::corpus_names()) {
        auto in = testkit::corpus(name);
        auto h = cover_homology(build_twisted_complex(in.complex, in.xi, Q));
        std::vector<Scalar> values = periods(in.complex, in.xi) == 0
                                         ? pick_generic(std::vector<Scalar>{}, Q, kGenericSamples, 0)
                                         : pick_generic(analyze_cover(in.complex, in.xi, Q).torsion, kGenericSamples, 0);
        for (const auto& a : values) {
            auto dims = twisted_cohomology(in.complex, in.xi, a).dims();
            for (int k = 0; k <= in.complex.dimension(); ++k)
                o.require(dims[k] == h.degree(k).free_rank, name + ": degree " + std::to_string(k) + " at a = " + a.to_string());
        }
        ++inputs;
    }
    if (o.pass) o.detail = std::to_string(inputs) + " inputs x " + std::to_string(kGenericSamples) + " values";
    return o;
}

Outcome movability() {
    Outcome o;
    std::mt19937_64 rng(7);
    std::size_t complexes = 0, torsion = 0, free = 0;
    for (const auto& name : testkit::corpus_names()) {
        auto in = testkit::corpus(name);
        if (in.complex.total_count() > kMovabilityMaxSimplices) continue;
        ++complexes;
        auto chains = build_twisted_complex(in.complex, in.xi, Q);
        auto h = cover_homology(chains);
        for (int k = 0; k <= in.complex.dimension(); ++k)
            for (const auto& z : testkit::sample_cycles(chains, k, rng, 16)) {
                auto got = h.is_movable(z, k);
                auto want = testkit::brute_force_movability(chains, z, k);
                o.require(got.movable == want.torsion, name + ": torsion verdict differs in degree " + std::to_string(k));
                if (got.movable) {
                    o.require(want.annihilator.has_value(), name + ": brute-force search found no annihilator");
                    if (want.annihilator) o.require(*got.annihilator == *want.annihilator, name + ": annihilators differ");
                    ++torsion;
                } else {
                    ++free;
                }
            }
    }
    o.require(torsion > 0 && free > 0, "sample did not exercise both outcomes");
    if (o.pass)
        o.detail = std::to_string(complexes) + " complexes, " + std::to_string(torsion) + " movable and " + std::to_string(free) + " non-movable cycles";
    return o;
}

Outcome determinism() {
    Outcome o;
    std::size_t inputs = 0;
    for (const auto& name : testkit::corpus_names()) {
        auto a = run_cli({"nvcat", "bound", testkit::corpus_path(name), "--json", "--seed", "1"});
        auto b = run_cli({"nvcat", "bound", testkit::corpus_path(name), "--json", "--seed", "1"});
        o.require(a.exit_code == 0, name + ": exit code " + std::to_string(a.exit_code));
        o.require(a.output == b.output, name + ": outputs differ");
        ++inputs;
    }
    auto g2 = testkit::corpus_path("genus2");
    setenv("NVCAT_THREADS", "1", 1);
    auto serial = run_cli({"nvcat", "bound", g2, "--json"}).output;
    unsetenv("NVCAT_THREADS");
    o.require(serial == run_cli({"nvcat", "bound", g2, "--json"}).output, "output depends on the worker count");
    if (o.pass) o.detail = std::to_string(inputs) + " inputs byte-identical across runs and worker counts";
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double limit;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "T^2 fibration vanishing", kTorusLimit, torus_vanishing},
        {2, "degree-2 mapping torus torsion", kTelescopeLimit, telescope_torsion},
        {3, "genus-2 cup and Massey certificates", kGenus2Limit, genus2_bounds},
        {4, "T^2 v S^1 Massey bound", kBouquetLimit, bouquet_massey},
        {5, "structural identities", 0, structural},
        {6, "genericity cross-check", 0, genericity},
        {7, "movability oracle", 0, movability},
        {8, "determinism", 0, determinism},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit > 0 && secs > c.limit) {
            o.pass = false;
            o.detail += " [over the " + std::to_string(static_cast<int>(c.limit)) + " s limit]";
        }
        failed += !o.pass;
        std::printf("%s %d %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed ? 1 : 0;
}
