#pragma once

#include "nvcat/field.hpp"
#include "nvcat/linalg.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace nvcat {

/// Element of the Laurent ring k[t, t^-1].
///
/// Stored as t^low * (c_0 + c_1 t + ... + c_n t^n) with c_0 != 0 and c_n != 0;
/// the zero polynomial has no coefficients. Units are exactly c t^m with c != 0.
class LaurentPoly {
public:
    explicit LaurentPoly(Field f = Field::rationals()) : field_(f) {}

    static LaurentPoly constant(const Scalar& c);
    static LaurentPoly monomial(const Scalar& c, std::int64_t exponent);
    /// t^low * (coeffs[0] + coeffs[1] t + ...), integer coefficients.
    static LaurentPoly from_ints(Field f, std::int64_t low, const std::vector<std::int64_t>& coeffs);
    static LaurentPoly from_scalars(Field f, std::int64_t low, Vec coeffs);
    /// t - c
    static LaurentPoly linear(const Scalar& c);

    Field field() const { return field_; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_unit() const { return coeffs_.size() == 1; }
    bool is_one() const { return coeffs_.size() == 1 && low_ == 0 && coeffs_[0].is_one(); }

    /// Lowest / highest exponent; undefined for zero.
    std::int64_t low() const { return low_; }
    std::int64_t high() const { return low_ + static_cast<std::int64_t>(coeffs_.size()) - 1; }
    /// high - low: the Euclidean degree. -1 for zero.
    std::int64_t span() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
    Scalar coeff(std::int64_t e) const;
    const Vec& coeffs() const { return coeffs_; }
    const Scalar& leading() const { return coeffs_.back(); }

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

    LaurentPoly scaled(const Scalar& c) const;
    LaurentPoly shifted(std::int64_t e) const;
    LaurentPoly pow(unsigned n) const;

    /// Canonical associate: lowest exponent 0, leading coefficient 1. Zero stays zero.
    LaurentPoly canonical() const;
    /// The unit u = c t^m with *this == u * canonical().
    LaurentPoly unit_part() const;
    /// Inverse of a unit; throws otherwise.
    LaurentPoly unit_inverse() const;

    Scalar eval(const Scalar& a) const;
    std::size_t size_hint() const;
    /// "t^2-3*t+2", "1/2*t^-1+1", "0".
    std::string to_string() const;

private:
    void check_same(const LaurentPoly& o) const;
    void trim();

    Field field_;
    std::int64_t low_ = 0;
    Vec coeffs_;
};

struct DivMod {
    LaurentPoly quotient;
    LaurentPoly remainder;
};

/// a = q b + r with span(r) < span(b), by division in k[t] after shifting both
/// to nonzero constant term. Throws on b == 0.
DivMod divmod(const LaurentPoly& a, const LaurentPoly& b);
bool divides(const LaurentPoly& d, const LaurentPoly& a);
/// a / b, which must be exact.
LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);

/// Canonical gcd. Throws ContractError when both are zero.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly poly_lcm(const LaurentPoly& a, const LaurentPoly& b);

struct Bezout {
    LaurentPoly gcd;  // canonical
    LaurentPoly s;
    LaurentPoly t;    // s a + t b = gcd
};
Bezout extended_gcd(const LaurentPoly& a, const LaurentPoly& b);

/// Dense matrix of Laurent polynomials.
class LaurentMatrix {
public:
    LaurentMatrix(Field f, std::size_t rows, std::size_t cols);
    static LaurentMatrix identity(Field f, std::size_t n);

    Field field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    LaurentPoly& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const LaurentPoly& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    LaurentMatrix operator*(const LaurentMatrix& o) const;
    std::vector<LaurentPoly> apply(const std::vector<LaurentPoly>& x) const;
    friend bool operator==(const LaurentMatrix& a, const LaurentMatrix& b);
    bool is_zero() const;

    /// Entrywise t := a.
    Matrix evaluate(const Scalar& a) const;
    /// Rows [r0, r1), columns [c0, c1).
    LaurentMatrix submatrix(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const;
    /// Debug dump: one line per row.
    std::string to_string() const;

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<LaurentPoly> data_;
};

/// Fraction-free (Bareiss) determinant of a square matrix.
LaurentPoly determinant(const LaurentMatrix& a);

/// U A V = diag(diagonal), d_i | d_{i+1}, canonical associates, zeros last.
struct LaurentSNF {
    std::vector<LaurentPoly> diagonal;  // length min(rows, cols)
    LaurentMatrix u;                    // rows x rows
    LaurentMatrix v;                    // cols x cols
    LaurentMatrix v_inverse;            // cols x cols
    std::size_t rank = 0;
};

LaurentSNF smith_normal_form(const LaurentMatrix& a);

struct ModulePresentation {
    std::size_t free_rank = 0;
    std::vector<LaurentPoly> invariant_factors;  // non-unit, nonzero, canonical, d_i | d_{i+1}
};

/// Decomposition of coker(A) = Lambda^free_rank + sum Lambda/(d_i).
ModulePresentation module_presentation(const LaurentMatrix& a);

}  // namespace nvcat
