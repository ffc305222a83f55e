#include "nvcat/factor.hpp"

#include "nvcat/errors.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace nvcat {

namespace {

// Ordinary polynomial in k[t]: c[i] is the coefficient of t^i, no trailing zeros.
struct Poly {
    Field f;
    Vec c;

    int deg() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    bool is_one() const { return c.size() == 1 && c[0].is_one(); }
    const Scalar& lead() const { return c.back(); }

    Poly& trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
        return *this;
    }
};

Poly constant(Field f, const Scalar& s) { return Poly{f, {s}}.trim(); }
Poly variable(Field f) { return Poly{f, {Scalar::zero(f), Scalar::one(f)}}; }

Poly operator+(const Poly& a, const Poly& b) {
    Poly r{a.f, a.c};
    if (r.c.size() < b.c.size()) r.c.resize(b.c.size(), Scalar::zero(a.f));
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    return r.trim();
}

Poly operator-(const Poly& a, const Poly& b) {
    Poly nb{b.f, b.c};
    for (auto& x : nb.c) x = -x;
    return a + nb;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly{a.f, {}};
    Poly r{a.f, zero_vec(a.f, a.c.size() + b.c.size() - 1)};
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    }
    return r.trim();
}

void divrem(const Poly& a, const Poly& b, Poly& q, Poly& r) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    r = a;
    q = Poly{a.f, {}};
    if (a.deg() < b.deg()) return;
    q.c.assign(static_cast<std::size_t>(a.deg() - b.deg() + 1), Scalar::zero(a.f));
    const Scalar inv = b.lead().inverse();
    for (int k = a.deg(); k >= b.deg(); --k) {
        const Scalar coef = r.c[static_cast<std::size_t>(k)] * inv;
        if (coef.is_zero()) continue;
        q.c[static_cast<std::size_t>(k - b.deg())] = coef;
        for (int j = 0; j <= b.deg(); ++j) r.c[static_cast<std::size_t>(k - b.deg() + j)] -= coef * b.c[static_cast<std::size_t>(j)];
    }
    r.trim();
    q.trim();
}

Poly operator%(const Poly& a, const Poly& b) {
    Poly q, r;
    divrem(a, b, q, r);
    return r;
}

Poly operator/(const Poly& a, const Poly& b) {
    Poly q, r;
    divrem(a, b, q, r);
    if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
    return q;
}

Poly monic(Poly a) {
    if (a.is_zero()) return a;
    const Scalar inv = a.lead().inverse();
    for (auto& x : a.c) x *= inv;
    return a;
}

Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(std::move(a));
}

Poly derivative(const Poly& a) {
    Poly d{a.f, {}};
    for (std::size_t i = 1; i < a.c.size(); ++i) d.c.push_back(a.c[i] * Scalar(a.f, static_cast<std::int64_t>(i)));
    return d.trim();
}

Poly powmod(Poly base, mpz_class e, const Poly& m) {
    Poly r = constant(base.f, Scalar::one(base.f)) % m;
    base = base % m;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = (r * base) % m;
        e >>= 1;
        if (e > 0) base = (base * base) % m;
    }
    return r;
}

Poly from_laurent(const LaurentPoly& p) { return Poly{p.field(), p.canonical().coeffs()}; }
LaurentPoly to_laurent(const Poly& p) { return LaurentPoly::from_scalars(p.f, 0, monic(p).c).canonical(); }

using Factors = std::vector<std::pair<Poly, unsigned>>;

// ---- characteristic 0 ------------------------------------------------------

Factors squarefree_char0(const Poly& f) {
    Factors out;
    Poly fp = derivative(f);
    Poly a = gcd(f, fp);
    Poly b = f / a;
    Poly c = fp / a;
    Poly d = c - derivative(b);
    for (unsigned i = 1; !(b.deg() <= 0); ++i) {
        Poly g = gcd(b, d);
        if (g.deg() > 0) out.emplace_back(g, i);
        b = b / g;
        c = d / g;
        d = c - derivative(b);
    }
    return out;
}

// Primitive integer multiple of a polynomial over Q, positive leading coefficient.
std::vector<mpz_class> integer_form(const Poly& p) {
    mpz_class den = 1;
    for (const auto& x : p.c) den = lcm(den, x.rational().get_den());
    std::vector<mpz_class> z;
    mpz_class content = 0;
    for (const auto& x : p.c) {
        mpq_class v = x.rational() * den;
        z.push_back(v.get_num());
        content = gcd(content, z.back());
    }
    if (z.back() < 0) content = -content;
    for (auto& v : z) v /= content;
    return z;
}

const mpz_class kDivisorLimit("1000000000000");

std::vector<mpz_class> positive_divisors(mpz_class n) {
    n = abs(n);
    if (n == 0) throw std::logic_error("divisors of zero");
    if (n > kDivisorLimit) throw LimitError("integer too large for divisor enumeration: " + n.get_str());
    std::vector<std::pair<mpz_class, int>> primes;
    for (mpz_class p = 2; p * p <= n; ++p) {
        int e = 0;
        while (n % p == 0) n /= p, ++e;
        if (e) primes.emplace_back(p, e);
    }
    if (n > 1) primes.emplace_back(n, 1);
    std::vector<mpz_class> divs{1};
    for (const auto& [p, e] : primes) {
        std::size_t base = divs.size();
        mpz_class pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

Scalar eval(const Poly& p, const Scalar& x) {
    Scalar acc = Scalar::zero(p.f);
    for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

// Splits off the rational roots of a squarefree polynomial over Q.
Poly strip_rational_roots(Poly f, std::vector<Poly>& linear) {
    if (f.deg() < 1) return f;
    auto z = integer_form(f);
    if (z.front() == 0) throw std::logic_error("polynomial with zero constant term");
    const Field q = f.f;
    for (const auto& num : positive_divisors(z.front()))
        for (const auto& den : positive_divisors(z.back()))
            for (int sign : {1, -1}) {
                if (gcd(num, den) != 1) continue;
                Scalar r(q, mpq_class(sign * num, den));
                if (f.deg() >= 1 && eval(f, r).is_zero()) {
                    Poly lin{q, {-r, Scalar::one(q)}};
                    linear.push_back(lin);
                    f = f / lin;
                }
            }
    return monic(f);
}

Poly interpolate(Field q, const std::vector<mpz_class>& xs, const std::vector<mpz_class>& ys) {
    // Newton divided differences.
    const std::size_t n = xs.size();
    std::vector<mpq_class> coef(ys.begin(), ys.end());
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i) {
            coef[i] = (coef[i] - coef[i - 1]) / mpq_class(xs[i] - xs[i - j]);
            if (i == j) break;
        }
    Poly p{q, {Scalar(q, coef[n - 1])}};
    for (std::size_t k = n - 1; k-- > 0;) p = p * Poly{q, {Scalar(q, mpq_class(-xs[k])), Scalar::one(q)}} + constant(q, Scalar(q, coef[k]));
    return p.trim();
}

const std::uint64_t kKroneckerCombinations = 2000000;

// Kronecker's method on a squarefree polynomial without rational roots.
void kronecker(const Poly& f, std::vector<Poly>& out) {
    const int n = f.deg();
    if (n <= 3) {
        out.push_back(monic(f));
        return;
    }
    if (n > 12) throw LimitError("irreducible factorization over Q limited to degree 12 (got " + std::to_string(n) + ")");
    const Field q = f.f;
    const auto z = integer_form(f);
    Poly zf{q, {}};
    for (const auto& v : z) zf.c.emplace_back(q, mpq_class(v));
    for (int d = 2; d <= n / 2; ++d) {
        std::vector<mpz_class> xs;
        std::vector<std::vector<mpz_class>> choices;
        std::uint64_t total = 1;
        for (int k = 0; static_cast<int>(xs.size()) <= d; ++k) {
            mpz_class x = (k % 2 ? 1 : -1) * mpz_class((k + 1) / 2);
            mpq_class v = eval(zf, Scalar(q, mpq_class(x))).rational();
            xs.push_back(x);
            auto divs = positive_divisors(v.get_num());
            std::vector<mpz_class> opts;
            for (const auto& dv : divs) {
                opts.push_back(dv);
                if (xs.size() > 1) opts.push_back(-dv);
            }
            total *= opts.size();
            if (total > kKroneckerCombinations) throw LimitError("Kronecker factorization search too large");
            choices.push_back(std::move(opts));
        }
        std::vector<std::size_t> idx(choices.size(), 0);
        for (;;) {
            std::vector<mpz_class> ys;
            for (std::size_t i = 0; i < idx.size(); ++i) ys.push_back(choices[i][idx[i]]);
            Poly h = interpolate(q, xs, ys);
            if (h.deg() == d) {
                Poly quo, rem;
                divrem(zf, h, quo, rem);
                if (rem.is_zero()) {
                    kronecker(monic(h), out);
                    kronecker(monic(quo), out);
                    return;
                }
            }
            std::size_t k = 0;
            while (k < idx.size() && ++idx[k] == choices[k].size()) idx[k++] = 0;
            if (k == idx.size()) break;
        }
    }
    out.push_back(monic(f));
}

Factors factor_rationals(const Poly& f) {
    Factors out;
    for (const auto& [part, mult] : squarefree_char0(f)) {
        std::vector<Poly> pieces;
        Poly rest = strip_rational_roots(part, pieces);
        if (rest.deg() > 0) kronecker(rest, pieces);
        for (auto& p : pieces) out.emplace_back(std::move(p), mult);
    }
    return out;
}

// ---- prime fields ----------------------------------------------------------

Poly pth_root(const Poly& f) {
    const auto p = static_cast<std::size_t>(f.f.characteristic());
    Poly r{f.f, {}};
    for (std::size_t i = 0; i < f.c.size(); i += p) r.c.push_back(f.c[i]);
    return r.trim();
}

void squarefree_fp(const Poly& f, unsigned scale, Factors& out) {
    Poly g = derivative(f);
    if (g.is_zero()) {
        squarefree_fp(pth_root(f), scale * static_cast<unsigned>(f.f.characteristic()), out);
        return;
    }
    Poly c = gcd(f, g);
    Poly w = f / c;
    for (unsigned i = 1; w.deg() > 0; ++i) {
        Poly y = gcd(w, c);
        Poly fac = w / y;
        if (fac.deg() > 0) out.emplace_back(fac, i * scale);
        w = y;
        c = c / y;
    }
    if (c.deg() > 0) squarefree_fp(pth_root(c), scale * static_cast<unsigned>(f.f.characteristic()), out);
}

std::vector<std::pair<Poly, int>> distinct_degree(Poly f) {
    std::vector<std::pair<Poly, int>> out;
    const mpz_class p = f.f.characteristic();
    const Poly x = variable(f.f);
    Poly h = x % f;
    for (int i = 1; f.deg() >= 2 * i; ++i) {
        h = powmod(h, p, f);
        Poly g = gcd(f, h - x);
        if (g.deg() > 0) {
            out.emplace_back(g, i);
            f = f / g;
            h = h % f;
        }
    }
    if (f.deg() > 0) out.emplace_back(f, f.deg());
    return out;
}

void equal_degree(const Poly& f, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
    if (f.deg() == d) {
        out.push_back(monic(f));
        return;
    }
    const Field k = f.f;
    const std::int64_t p = k.characteristic();
    std::uniform_int_distribution<std::int64_t> coef(0, p - 1);
    mpz_class e;
    mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
    e = (e - 1) / 2;
    for (;;) {
        Poly a{k, {}};
        for (int i = 0; i < f.deg(); ++i) a.c.emplace_back(k, coef(rng));
        a.trim();
        if (a.deg() < 1) continue;
        Poly b;
        if (p == 2) {
            b = a;
            Poly sq = a;
            for (int i = 1; i < d; ++i) {
                sq = (sq * sq) % f;
                b = b + sq;
            }
            b = b % f;
        } else {
            b = powmod(a, e, f) - constant(k, Scalar::one(k));
        }
        Poly g = gcd(f, b);
        if (g.deg() > 0 && g.deg() < f.deg()) {
            equal_degree(g, d, rng, out);
            equal_degree(f / g, d, rng, out);
            return;
        }
    }
}

Factors factor_prime(const Poly& f, std::uint64_t seed) {
    Factors sqf, out;
    squarefree_fp(f, 1, sqf);
    std::mt19937_64 rng(seed);
    for (const auto& [part, mult] : sqf)
        for (const auto& [block, d] : distinct_degree(part)) {
            std::vector<Poly> pieces;
            equal_degree(block, d, rng, pieces);
            for (auto& p : pieces) out.emplace_back(std::move(p), mult);
        }
    return out;
}

bool poly_less(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.span() != b.span()) return a.span() < b.span();
    for (std::int64_t e = a.low(); e <= a.high(); ++e) {
        auto c = a.coeff(e).compare(b.coeff(e));
        if (c != 0) return c < 0;
    }
    return false;
}

}  // namespace

std::vector<IrreducibleFactor> factor_irreducible(const LaurentPoly& p, std::uint64_t seed) {
    if (p.is_zero()) throw ContractError("cannot factor the zero polynomial");
    std::vector<IrreducibleFactor> out;
    if (p.is_unit()) return out;
    Poly f = from_laurent(p);
    Factors raw = p.field().is_rational() ? factor_rationals(f) : factor_prime(f, seed);
    for (auto& [poly, mult] : raw) {
        LaurentPoly lp = to_laurent(poly);
        auto it = std::find_if(out.begin(), out.end(), [&](const IrreducibleFactor& x) { return x.poly == lp; });
        if (it != out.end())
            it->multiplicity += mult;
        else
            out.push_back({lp, mult});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return poly_less(a.poly, b.poly); });
    return out;
}

std::vector<Scalar> roots(const LaurentPoly& p) {
    if (p.is_zero()) throw ContractError("roots of the zero polynomial");
    std::vector<Scalar> out;
    std::vector<Poly> linear;
    if (p.is_unit()) return out;
    if (p.field().is_rational()) {
        // Only rational roots are needed; skip the search for higher-degree factors.
        for (const auto& [part, mult] : squarefree_char0(from_laurent(p))) strip_rational_roots(part, linear);
    } else {
        for (const auto& fac : factor_irreducible(p))
            if (fac.poly.span() == 1) linear.push_back(from_laurent(fac.poly));
    }
    for (const auto& l : linear) out.push_back(-l.c[0] / l.c[1]);
    std::sort(out.begin(), out.end(), [](const Scalar& a, const Scalar& b) { return a.compare(b) < 0; });
    return out;
}

}  // namespace nvcat
