#include "nvcat/laurent.hpp"

#include "nvcat/errors.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace nvcat {

// ---- LaurentPoly -----------------------------------------------------------

LaurentPoly LaurentPoly::constant(const Scalar& c) { return monomial(c, 0); }

LaurentPoly LaurentPoly::monomial(const Scalar& c, std::int64_t exponent) {
    LaurentPoly p(c.field());
    if (!c.is_zero()) {
        p.low_ = exponent;
        p.coeffs_.push_back(c);
    }
    return p;
}

LaurentPoly LaurentPoly::from_ints(Field f, std::int64_t low, const std::vector<std::int64_t>& coeffs) {
    Vec v;
    for (auto c : coeffs) v.emplace_back(f, c);
    return from_scalars(f, low, std::move(v));
}

LaurentPoly LaurentPoly::from_scalars(Field f, std::int64_t low, Vec coeffs) {
    LaurentPoly p(f);
    p.low_ = low;
    p.coeffs_ = std::move(coeffs);
    for (const auto& c : p.coeffs_)
        if (!(c.field() == f)) throw std::invalid_argument("field mismatch in LaurentPoly coefficients");
    p.trim();
    return p;
}

LaurentPoly LaurentPoly::linear(const Scalar& c) { return from_scalars(c.field(), 0, {-c, Scalar::one(c.field())}); }

void LaurentPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
    if (lead) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
        low_ += static_cast<std::int64_t>(lead);
    }
    if (coeffs_.empty()) low_ = 0;
}

void LaurentPoly::check_same(const LaurentPoly& o) const {
    if (!(field_ == o.field_)) throw std::invalid_argument("field mismatch: " + field_.name() + " vs " + o.field_.name());
}

Scalar LaurentPoly::coeff(std::int64_t e) const {
    if (is_zero() || e < low_ || e > high()) return Scalar::zero(field_);
    return coeffs_[static_cast<std::size_t>(e - low_)];
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p = *this;
    for (auto& c : p.coeffs_) c = -c;
    return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    check_same(o);
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    std::int64_t lo = std::min(low_, o.low_);
    std::int64_t hi = std::max(high(), o.high());
    if (lo < low_) {
        coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), Scalar::zero(field_));
        low_ = lo;
    }
    coeffs_.resize(static_cast<std::size_t>(hi - lo + 1), Scalar::zero(field_));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[static_cast<std::size_t>(o.low_ - lo) + k] += o.coeffs_[k];
    trim();
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_same(b);
    LaurentPoly p(a.field_);
    if (a.is_zero() || b.is_zero()) return p;
    p.low_ = a.low_ + b.low_;
    p.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar::zero(a.field_));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            if (!b.coeffs_[j].is_zero()) p.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    p.trim();
    return p;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.field_ == b.field_ && a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
}

LaurentPoly LaurentPoly::scaled(const Scalar& c) const {
    if (c.is_zero()) return LaurentPoly(field_);
    LaurentPoly p = *this;
    for (auto& x : p.coeffs_) x *= c;
    return p;
}

LaurentPoly LaurentPoly::shifted(std::int64_t e) const {
    LaurentPoly p = *this;
    if (!p.is_zero()) p.low_ += e;
    return p;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
    LaurentPoly r = constant(Scalar::one(field_));
    LaurentPoly b = *this;
    while (n) {
        if (n & 1) r = r * b;
        n >>= 1;
        if (n) b = b * b;
    }
    return r;
}

LaurentPoly LaurentPoly::canonical() const {
    if (is_zero()) return *this;
    LaurentPoly p = scaled(leading().inverse());
    p.low_ = 0;
    return p;
}

LaurentPoly LaurentPoly::unit_part() const {
    if (is_zero()) throw std::domain_error("zero has no unit part");
    return monomial(leading(), low_);
}

LaurentPoly LaurentPoly::unit_inverse() const {
    if (!is_unit()) throw std::domain_error("not a unit of the Laurent ring: " + to_string());
    return monomial(coeffs_[0].inverse(), -low_);
}

Scalar LaurentPoly::eval(const Scalar& a) const {
    if (!(a.field() == field_)) throw std::invalid_argument("field mismatch in eval");
    Scalar acc = Scalar::zero(field_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * a + *it;
    if (!is_zero() && low_ != 0) acc *= a.pow(low_);
    return acc;
}

std::size_t LaurentPoly::size_hint() const {
    std::size_t s = 0;
    for (const auto& c : coeffs_) s += c.size_hint();
    return s;
}

std::string LaurentPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::int64_t e = high(); e >= low_; --e) {
        Scalar c = coeff(e);
        if (c.is_zero()) continue;
        std::string cs = c.to_string();
        bool negative = field_.is_rational() && cs[0] == '-';
        if (negative) cs.erase(0, 1);
        if (!out.empty())
            out += negative ? "-" : "+";
        else if (negative)
            out += "-";
        if (e == 0) {
            out += cs;
            continue;
        }
        if (cs != "1") out += cs + "*";
        out += "t";
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

// ---- Euclidean structure ---------------------------------------------------

DivMod divmod(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by the zero Laurent polynomial");
    if (!(a.field() == b.field())) throw std::invalid_argument("field mismatch in divmod");
    const Field f = a.field();
    if (a.is_zero() || a.span() < b.span()) return {LaurentPoly(f), a};
    Vec r = a.coeffs();
    const Vec& d = b.coeffs();
    const std::size_t n = d.size() - 1;
    Vec q(r.size() - n, Scalar::zero(f));
    const Scalar lead_inv = d.back().inverse();
    for (std::size_t k = r.size(); k-- > n;) {
        if (r[k].is_zero()) continue;
        Scalar c = r[k] * lead_inv;
        q[k - n] = c;
        for (std::size_t j = 0; j <= n; ++j)
            if (!d[j].is_zero()) r[k - n + j] -= c * d[j];
    }
    r.resize(n);
    return {LaurentPoly::from_scalars(f, a.low() - b.low(), std::move(q)), LaurentPoly::from_scalars(f, a.low(), std::move(r))};
}

bool divides(const LaurentPoly& d, const LaurentPoly& a) {
    if (d.is_zero()) return a.is_zero();
    return divmod(a, d).remainder.is_zero();
}

LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
    auto qr = divmod(a, b);
    if (!qr.remainder.is_zero()) throw std::domain_error("inexact division: " + a.to_string() + " / " + b.to_string());
    return qr.quotient;
}

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() && b.is_zero()) throw ContractError("gcd of two zero polynomials");
    LaurentPoly x = a, y = b;
    while (!y.is_zero()) {
        LaurentPoly r = divmod(x, y).remainder;
        x = std::move(y);
        y = std::move(r);
    }
    return x.canonical();
}

LaurentPoly poly_lcm(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return LaurentPoly(a.field());
    return exact_div(a * b, poly_gcd(a, b)).canonical();
}

Bezout extended_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() && b.is_zero()) throw ContractError("gcd of two zero polynomials");
    const Field f = a.field();
    LaurentPoly r0 = a, r1 = b;
    LaurentPoly s0 = LaurentPoly::constant(Scalar::one(f)), s1(f);
    LaurentPoly t0(f), t1 = LaurentPoly::constant(Scalar::one(f));
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::exchange(r1, r);
        s0 = std::exchange(s1, s0 - q * s1);
        t0 = std::exchange(t1, t0 - q * t1);
    }
    LaurentPoly u = r0.unit_part().unit_inverse();
    return {r0 * u, s0 * u, t0 * u};
}

// ---- LaurentMatrix ---------------------------------------------------------

LaurentMatrix::LaurentMatrix(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, LaurentPoly(f)) {}

LaurentMatrix LaurentMatrix::identity(Field f, std::size_t n) {
    LaurentMatrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = LaurentPoly::constant(Scalar::one(f));
    return m;
}

LaurentMatrix LaurentMatrix::operator*(const LaurentMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("LaurentMatrix product: shape mismatch");
    LaurentMatrix p(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const LaurentPoly& a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                if (!o(k, j).is_zero()) p(i, j) += a * o(k, j);
        }
    return p;
}

std::vector<LaurentPoly> LaurentMatrix::apply(const std::vector<LaurentPoly>& x) const {
    if (x.size() != cols_) throw std::invalid_argument("LaurentMatrix apply: length mismatch");
    std::vector<LaurentPoly> y(rows_, LaurentPoly(field_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!(*this)(i, j).is_zero() && !x[j].is_zero()) y[i] += (*this)(i, j) * x[j];
    return y;
}

bool operator==(const LaurentMatrix& a, const LaurentMatrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

bool LaurentMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const LaurentPoly& p) { return p.is_zero(); });
}

Matrix LaurentMatrix::evaluate(const Scalar& a) const {
    Matrix m(field_, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!(*this)(i, j).is_zero()) m(i, j) = (*this)(i, j).eval(a);
    return m;
}

LaurentMatrix LaurentMatrix::submatrix(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const {
    LaurentMatrix s(field_, r1 - r0, c1 - c0);
    for (std::size_t i = r0; i < r1; ++i)
        for (std::size_t j = c0; j < c1; ++j) s(i - r0, j - c0) = (*this)(i, j);
    return s;
}

std::string LaurentMatrix::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < rows_; ++i) {
        out += "[";
        for (std::size_t j = 0; j < cols_; ++j) out += (j ? ", " : "") + (*this)(i, j).to_string();
        out += "]\n";
    }
    return out;
}

LaurentPoly determinant(const LaurentMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = a.rows();
    const Field f = a.field();
    if (n == 0) return LaurentPoly::constant(Scalar::one(f));
    LaurentMatrix m = a;
    LaurentPoly prev = LaurentPoly::constant(Scalar::one(f));
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k).is_zero()) {
            std::size_t swap = k + 1;
            while (swap < n && m(swap, k).is_zero()) ++swap;
            if (swap == n) return LaurentPoly(f);
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) m(i, j) = exact_div(m(k, k) * m(i, j) - m(i, k) * m(k, j), prev);
        prev = m(k, k);
    }
    return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

// ---- Smith normal form -----------------------------------------------------

namespace {

class SmithReducer {
public:
    explicit SmithReducer(const LaurentMatrix& a)
        : f_(a.field()), m_(a.rows()), n_(a.cols()), d_(a), u_(LaurentMatrix::identity(f_, m_)),
          v_(LaurentMatrix::identity(f_, n_)), vinv_(LaurentMatrix::identity(f_, n_)) {}

    LaurentSNF run() {
        std::size_t t = 0;
        const std::size_t limit = std::min(m_, n_);
        for (; t < limit; ++t) {
            auto pivot = best_entry(t, t, m_, t, n_);
            if (!pivot) break;
            move_to(t, pivot->first, pivot->second);
            reduce_pivot(t);
            LaurentPoly unit_inv = d_(t, t).unit_part().unit_inverse();
            scale_row(t, unit_inv);
        }
        LaurentSNF out{{}, std::move(u_), std::move(v_), std::move(vinv_), t};
        for (std::size_t k = 0; k < limit; ++k) out.diagonal.push_back(d_(k, k));
        return out;
    }

private:
    using Key = std::tuple<std::int64_t, std::size_t, std::size_t, std::size_t>;

    std::optional<std::pair<std::size_t, std::size_t>> best_entry(std::size_t t, std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const {
        (void)t;
        std::optional<Key> best;
        for (std::size_t i = r0; i < r1; ++i)
            for (std::size_t j = c0; j < c1; ++j) {
                const LaurentPoly& p = d_(i, j);
                if (p.is_zero()) continue;
                Key k{p.span(), p.size_hint(), i, j};
                if (!best || k < *best) best = k;
            }
        if (!best) return std::nullopt;
        return std::make_pair(std::get<2>(*best), std::get<3>(*best));
    }

    void move_to(std::size_t t, std::size_t i, std::size_t j) {
        if (i != t) swap_rows(t, i);
        if (j != t) swap_cols(t, j);
    }

    // Clears row t and column t outside the pivot and enforces divisibility of the trailing block.
    void reduce_pivot(std::size_t t) {
        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < m_; ++i) {
                if (d_(i, t).is_zero()) continue;
                auto [q, r] = divmod(d_(i, t), d_(t, t));
                add_row(i, t, -q);
                if (!r.is_zero()) clean = false;
            }
            for (std::size_t j = t + 1; j < n_; ++j) {
                if (d_(t, j).is_zero()) continue;
                auto [q, r] = divmod(d_(t, j), d_(t, t));
                add_col(j, t, -q);
                if (!r.is_zero()) clean = false;
            }
            if (!clean) {
                // A remainder of smaller span exists in row or column t; make it the pivot.
                std::size_t bi = t, bj = t;
                Key best{d_(t, t).span(), d_(t, t).size_hint(), t, t};
                for (std::size_t i = t + 1; i < m_; ++i)
                    if (!d_(i, t).is_zero()) {
                        Key k{d_(i, t).span(), d_(i, t).size_hint(), i, t};
                        if (k < best) best = k, bi = i, bj = t;
                    }
                for (std::size_t j = t + 1; j < n_; ++j)
                    if (!d_(t, j).is_zero()) {
                        Key k{d_(t, j).span(), d_(t, j).size_hint(), t, j};
                        if (k < best) best = k, bi = t, bj = j;
                    }
                move_to(t, bi, bj);
                continue;
            }
            if (d_(t, t).is_unit()) return;
            bool fixed = false;
            for (std::size_t i = t + 1; i < m_ && !fixed; ++i)
                for (std::size_t j = t + 1; j < n_; ++j) {
                    if (d_(i, j).is_zero() || divides(d_(t, t), d_(i, j))) continue;
                    add_row(t, i, LaurentPoly::constant(Scalar::one(f_)));
                    fixed = true;
                    break;
                }
            if (!fixed) return;
        }
    }

    // row_i += c * row_k
    void add_row(std::size_t i, std::size_t k, const LaurentPoly& c) {
        if (c.is_zero()) return;
        for (std::size_t j = 0; j < n_; ++j)
            if (!d_(k, j).is_zero()) d_(i, j) += c * d_(k, j);
        for (std::size_t j = 0; j < m_; ++j)
            if (!u_(k, j).is_zero()) u_(i, j) += c * u_(k, j);
    }

    // col_j += c * col_k; V gets the same column op, V^-1 the inverse row op.
    void add_col(std::size_t j, std::size_t k, const LaurentPoly& c) {
        if (c.is_zero()) return;
        for (std::size_t i = 0; i < m_; ++i)
            if (!d_(i, k).is_zero()) d_(i, j) += c * d_(i, k);
        for (std::size_t i = 0; i < n_; ++i)
            if (!v_(i, k).is_zero()) v_(i, j) += c * v_(i, k);
        for (std::size_t i = 0; i < n_; ++i)
            if (!vinv_(j, i).is_zero()) vinv_(k, i) -= c * vinv_(j, i);
    }

    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < n_; ++j) std::swap(d_(a, j), d_(b, j));
        for (std::size_t j = 0; j < m_; ++j) std::swap(u_(a, j), u_(b, j));
    }

    void swap_cols(std::size_t a, std::size_t b) {
        for (std::size_t i = 0; i < m_; ++i) std::swap(d_(i, a), d_(i, b));
        for (std::size_t i = 0; i < n_; ++i) std::swap(v_(i, a), v_(i, b));
        for (std::size_t i = 0; i < n_; ++i) std::swap(vinv_(a, i), vinv_(b, i));
    }

    void scale_row(std::size_t i, const LaurentPoly& unit) {
        for (std::size_t j = 0; j < n_; ++j)
            if (!d_(i, j).is_zero()) d_(i, j) = d_(i, j) * unit;
        for (std::size_t j = 0; j < m_; ++j)
            if (!u_(i, j).is_zero()) u_(i, j) = u_(i, j) * unit;
    }

    Field f_;
    std::size_t m_, n_;
    LaurentMatrix d_, u_, v_, vinv_;
};

}  // namespace

LaurentSNF smith_normal_form(const LaurentMatrix& a) { return SmithReducer(a).run(); }

ModulePresentation module_presentation(const LaurentMatrix& a) {
    auto snf = smith_normal_form(a);
    ModulePresentation p;
    p.free_rank = a.rows() - snf.rank;
    for (std::size_t k = 0; k < snf.rank; ++k)
        if (!snf.diagonal[k].is_unit()) p.invariant_factors.push_back(snf.diagonal[k]);
    return p;
}

}  // namespace nvcat
