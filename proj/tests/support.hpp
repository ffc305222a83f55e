#pragma once

// Shared fixtures and independent oracles for the unit tests and the acceptance runner.

#include "nvcat/bounds.hpp"
#include "nvcat/cochain.hpp"
#include "nvcat/complex.hpp"
#include "nvcat/cover.hpp"
#include "nvcat/forms.hpp"
#include "nvcat/laurent.hpp"
#include "nvcat/linalg.hpp"
#include "nvcat/local_system.hpp"

#include <algorithm>
#include <filesystem>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace testkit {

using namespace nvcat;

inline std::string corpus_path(const std::string& name) { return std::string(NVCAT_CORPUS_DIR) + "/" + name + ".json"; }

inline Input corpus(const std::string& name) { return load_input_file(corpus_path(name)); }

inline std::vector<std::string> corpus_names() {
    std::vector<std::string> names;
    for (const auto& e : std::filesystem::directory_iterator(NVCAT_CORPUS_DIR))
        if (e.path().extension() == ".json") names.push_back(e.path().stem().string());
    std::sort(names.begin(), names.end());
    return names;
}

inline Scalar q(long n, long d = 1) { return Scalar(Field::rationals(), mpq_class(n, d)); }

inline Scalar random_scalar(std::mt19937_64& rng, Field f, int range = 3) {
    std::uniform_int_distribution<int> num(-range, range);
    if (!f.is_rational()) return Scalar(f, num(rng));
    std::uniform_int_distribution<int> den(1, 3);
    return Scalar(f, mpq_class(num(rng), den(rng)));
}

inline Scalar random_nonzero(std::mt19937_64& rng, Field f, int range = 3) {
    for (;;) {
        Scalar s = random_scalar(rng, f, range);
        if (!s.is_zero()) return s;
    }
}

inline Field random_field(std::mt19937_64& rng) {
    static const std::int64_t choices[] = {0, 0, 7, 101};
    std::int64_t p = choices[rng() % 4];
    return p == 0 ? Field::rationals() : Field::prime(p);
}

inline Vec random_vec(std::mt19937_64& rng, Field f, std::size_t n) {
    Vec v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(rng() % 3 == 0 ? Scalar::zero(f) : random_scalar(rng, f));
    return v;
}

inline LaurentPoly random_poly(std::mt19937_64& rng, Field f) {
    if (rng() % 3 == 0) return LaurentPoly(f);
    std::int64_t low = static_cast<std::int64_t>(rng() % 3) - 1;
    std::size_t len = 1 + rng() % 3;
    Vec c;
    for (std::size_t i = 0; i < len; ++i) c.push_back(random_scalar(rng, f, 2));
    return LaurentPoly::from_scalars(f, low, c);
}

inline LaurentMatrix random_laurent_matrix(std::mt19937_64& rng, Field f, std::size_t rows, std::size_t cols) {
    LaurentMatrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_poly(rng, f);
    return m;
}

/// A random subcomplex of a corpus complex, with xi restricted and shifted by a random coboundary.
struct RandomCase {
    SimplicialComplex complex;
    IntegralCocycle xi;
};

inline RandomCase random_case(std::mt19937_64& rng) {
    static const char* bases[] = {"torus", "genus2", "mapping_torus_deg2", "bouquet_torus_circle", "annulus", "mobius", "c3_double"};
    const Input base = corpus(bases[rng() % 7]);
    const int top = base.complex.dimension();
    std::vector<Simplex> kept;
    for (const auto& s : base.complex.simplices(top))
        if (rng() % 10 < 7) kept.push_back(s);
    if (kept.empty()) kept.push_back(base.complex.simplices(top).front());
    RandomCase c;
    c.complex = SimplicialComplex::from_maximal(base.complex.vertex_count(), kept);
    std::vector<std::int64_t> g(static_cast<std::size_t>(base.complex.vertex_count()));
    for (auto& v : g) v = static_cast<std::int64_t>(rng() % 5) - 2;
    for (const auto& e : c.complex.simplices(1))
        c.xi.set(e[0], e[1], base.xi.value(e[0], e[1]) + g[static_cast<std::size_t>(e[1])] - g[static_cast<std::size_t>(e[0])]);
    return c;
}

// ---- rank over k(t) ----------------------------------------------------------

/// Evaluation points used to read off ranks over the fraction field; the rank at a
/// point never exceeds the generic rank, so the maximum over enough points equals it.
inline std::vector<Scalar> sample_points(Field f) {
    std::vector<Scalar> pts;
    if (f.is_rational()) {
        for (long p : {101L, 103L, 107L, 109L, 113L, 127L}) {
            pts.push_back(Scalar(f, mpq_class(p, 7)));
            pts.push_back(Scalar(f, mpq_class(-p, 11)));
        }
    } else {
        for (std::int64_t r = 2; r < f.characteristic() && pts.size() < 12; r += 3) pts.push_back(Scalar(f, r));
    }
    return pts;
}

inline std::size_t generic_rank(const LaurentMatrix& m) {
    std::size_t best = 0;
    for (const auto& a : sample_points(m.field())) best = std::max(best, rank(m.evaluate(a)));
    return best;
}

// ---- determinantal divisors ---------------------------------------------------

inline void choose(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    if (k > n) return;
    for (;;) {
        out.push_back(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

/// gcd of all k x k minors (zero polynomial when they all vanish).
inline LaurentPoly determinantal_divisor(const LaurentMatrix& a, std::size_t k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    choose(a.rows(), k, rs);
    choose(a.cols(), k, cs);
    LaurentPoly g(a.field());
    for (const auto& r : rs)
        for (const auto& c : cs) {
            LaurentMatrix sub(a.field(), k, k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) sub(i, j) = a(r[i], c[j]);
            LaurentPoly d = determinant(sub);
            if (d.is_zero()) continue;
            g = g.is_zero() ? d.canonical() : poly_gcd(g, d);
        }
    return g;
}

// ---- homology of the specialization C (x)_Lambda k_a ----------------------

/// dim H_q of the chain complex with t := a, by ranks of evaluated matrices.
inline std::size_t specialized_betti(const TwistedChainComplex& c, const Scalar& a, int q) {
    const std::size_t n = c.chain_dim(q);
    const std::size_t r_out = q == 0 ? 0 : rank(c.boundary_matrix(q).evaluate(a));
    const std::size_t r_in = rank(c.boundary_matrix(q + 1).evaluate(a));
    return n - r_out - r_in;
}

/// The same quantity predicted from the module structure: free rank plus the
/// number of invariant factors vanishing at a, in degrees q and q-1.
inline std::size_t predicted_betti(const CoverHomology& h, const Scalar& a, int q) {
    auto vanishing = [&](int d) {
        if (d < 0 || d >= static_cast<int>(h.degrees().size())) return std::size_t{0};
        std::size_t n = 0;
        for (const auto& p : h.degree(d).invariant_factors) n += p.eval(a).is_zero();
        return n;
    };
    return h.degree(q).free_rank + vanishing(q) + vanishing(q - 1);
}

// ---- brute-force movability ---------------------------------------------------

struct OracleVerdict {
    bool torsion = false;
    std::optional<LaurentPoly> annihilator;  // minimal, canonical; empty if the search range was exceeded
};

/// [z] is torsion iff z lies in the k(t)-span of the columns of d_{q+1}. The minimal
/// annihilator is found by testing p z in im d_{q+1} for monic p of increasing span,
/// with the preimage restricted to exponents in [-window, window].
inline OracleVerdict brute_force_movability(const TwistedChainComplex& c, const std::vector<LaurentPoly>& z, int q,
                                            int max_span = 4, int window = 8) {
    const Field f = c.field;
    const LaurentMatrix d = c.boundary_matrix(q + 1);
    const std::size_t n = d.rows();
    const std::size_t m = d.cols();
    OracleVerdict out;
    bool z_zero = std::all_of(z.begin(), z.end(), [](const LaurentPoly& p) { return p.is_zero(); });
    if (z_zero) {
        out.torsion = true;
        out.annihilator = LaurentPoly::constant(Scalar::one(f));
        return out;
    }
    LaurentMatrix aug(f, n, m + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) aug(i, j) = d(i, j);
        aug(i, m) = z[i];
    }
    out.torsion = generic_rank(aug) == generic_rank(d);
    if (!out.torsion) return out;

    std::int64_t lo = 0, hi = 0;
    bool seen = false;
    auto widen = [&](const LaurentPoly& p) {
        if (p.is_zero()) return;
        lo = seen ? std::min(lo, p.low()) : p.low();
        hi = seen ? std::max(hi, p.high()) : p.high();
        seen = true;
    };
    std::int64_t dlo = 0, dhi = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (!d(i, j).is_zero()) {
                dlo = std::min(dlo, d(i, j).low());
                dhi = std::max(dhi, d(i, j).high());
            }
    for (const auto& p : z) widen(p);

    for (int s = 0; s <= max_span; ++s) {
        const std::int64_t emin = std::min<std::int64_t>(lo, dlo - window);
        const std::int64_t emax = std::max<std::int64_t>(hi + s, dhi + window);
        const std::size_t width = static_cast<std::size_t>(emax - emin + 1);
        const std::size_t ywidth = static_cast<std::size_t>(2 * window + 1);
        // unknowns: p_0..p_{s-1}, then y_j at exponents -window..window
        const std::size_t unknowns = static_cast<std::size_t>(s) + m * ywidth;
        Matrix sys(f, n * width, unknowns);
        Vec rhs = zero_vec(f, n * width);
        auto row = [&](std::size_t i, std::int64_t e) { return i * width + static_cast<std::size_t>(e - emin); };
        for (std::size_t i = 0; i < n; ++i) {
            if (z[i].is_zero()) continue;
            for (std::int64_t e = z[i].low(); e <= z[i].high(); ++e) {
                const Scalar c0 = z[i].coeff(e);
                if (c0.is_zero()) continue;
                for (int k = 0; k < s; ++k) sys(row(i, e + k), static_cast<std::size_t>(k)) += c0;
                rhs[row(i, e + s)] -= c0;
            }
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                const LaurentPoly& p = d(i, j);
                if (p.is_zero()) continue;
                for (std::int64_t e = p.low(); e <= p.high(); ++e) {
                    const Scalar c0 = p.coeff(e);
                    if (c0.is_zero()) continue;
                    for (int w = -window; w <= window; ++w)
                        sys(row(i, e + w), static_cast<std::size_t>(s) + j * ywidth + static_cast<std::size_t>(w + window)) -= c0;
                }
            }
        auto sol = LinearSolver(sys).solve(rhs);
        if (!sol) continue;
        Vec coeffs(sol->begin(), sol->begin() + s);
        coeffs.push_back(Scalar::one(f));
        out.annihilator = LaurentPoly::from_scalars(f, 0, coeffs);
        return out;
    }
    return out;
}

/// Lambda-cycles of degree q: random combinations of a kernel basis read off SNF(d_q).
inline std::vector<std::vector<LaurentPoly>> sample_cycles(const TwistedChainComplex& c, int q, std::mt19937_64& rng, int count) {
    const Field f = c.field;
    const std::size_t n = c.chain_dim(q);
    std::vector<std::vector<LaurentPoly>> basis;
    if (q == 0) {
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<LaurentPoly> e(n, LaurentPoly(f));
            e[i] = LaurentPoly::constant(Scalar::one(f));
            basis.push_back(e);
        }
    } else {
        auto snf = smith_normal_form(c.boundary_matrix(q));
        for (std::size_t j = snf.rank; j < n; ++j) {
            std::vector<LaurentPoly> col;
            for (std::size_t i = 0; i < n; ++i) col.push_back(snf.v(i, j));
            basis.push_back(col);
        }
    }
    std::vector<std::vector<LaurentPoly>> out;
    if (basis.empty()) return out;
    const LaurentPoly coeffs[] = {LaurentPoly(f),
                                  LaurentPoly::constant(Scalar::one(f)),
                                  LaurentPoly::constant(Scalar(f, -1)),
                                  LaurentPoly::monomial(Scalar::one(f), 1),
                                  LaurentPoly::monomial(Scalar::one(f), -1),
                                  LaurentPoly::from_ints(f, 0, {1, -1})};
    for (const auto& b : basis) out.push_back(b);
    while (static_cast<int>(out.size()) < count) {
        std::vector<LaurentPoly> z(n, LaurentPoly(f));
        for (const auto& b : basis) {
            const LaurentPoly& k = coeffs[rng() % 6];
            for (std::size_t i = 0; i < n; ++i) z[i] += k * b[i];
        }
        out.push_back(z);
    }
    return out;
}

inline std::vector<LaurentPoly> chain(Field f, const SimplicialComplex& x, int q, const std::vector<std::pair<Simplex, int>>& terms) {
    std::vector<LaurentPoly> z(x.count(q), LaurentPoly(f));
    for (const auto& [s, c] : terms) z[x.index(s)] += LaurentPoly::constant(Scalar(f, c));
    return z;
}

}  // namespace testkit
