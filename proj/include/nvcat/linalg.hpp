#pragma once

#include "nvcat/field.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace nvcat {

using Vec = std::vector<Scalar>;

Vec zero_vec(Field f, std::size_t n);
bool is_zero(const Vec& v);
/// y += c * x
void axpy(Vec& y, const Scalar& c, const Vec& x);
Scalar dot(const Vec& x, const Vec& y);

/// Dense row-major matrix over a Field.
class Matrix {
public:
    Matrix(Field f, std::size_t rows, std::size_t cols);

    static Matrix from_columns(Field f, std::size_t rows, const std::vector<Vec>& columns);
    static Matrix identity(Field f, std::size_t n);

    Field field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i][j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i][j]; }
    Vec& row(std::size_t i) { return data_[i]; }
    const Vec& row(std::size_t i) const { return data_[i]; }
    Vec column(std::size_t j) const;

    Vec apply(const Vec& x) const;
    Vec apply_transpose(const Vec& y) const;
    Matrix transpose() const;
    Matrix operator*(const Matrix& o) const;
    bool is_zero() const;

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Vec> data_;
};

/// Gauss-Jordan factorization of a fixed matrix, reusable for many right-hand sides.
class LinearSolver {
public:
    explicit LinearSolver(Matrix a);

    std::size_t rank() const { return pivots_.size(); }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    /// Some x with A x = b, or nullopt when b is outside the column space.
    std::optional<Vec> solve(const Vec& b) const;
    bool in_image(const Vec& b) const;
    /// Basis of the null space, one vector per free column (in column order).
    std::vector<Vec> kernel() const;
    const std::vector<std::size_t>& pivot_columns() const { return pivots_; }

private:
    struct RowOp {
        enum Kind { Swap, Scale, Add } kind;
        std::size_t target;
        std::size_t source;
        Scalar factor;
    };
    void apply_ops(Vec& b) const;

    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    Matrix rref_;
    std::vector<std::size_t> pivots_;
    std::vector<RowOp> ops_;
};

std::size_t rank(const Matrix& a);
std::vector<Vec> kernel_basis(const Matrix& a);

/// Incrementally grown echelon basis of a subspace of k^n.
class SpanBasis {
public:
    SpanBasis(Field f, std::size_t dim) : field_(f), dim_(dim) {}

    /// Inserts v if it is independent of the current span; returns whether it was.
    bool add(const Vec& v);
    bool contains(const Vec& v) const;
    std::size_t size() const { return basis_.size(); }
    std::size_t dim() const { return dim_; }

private:
    Vec reduce(Vec v) const;

    Field field_;
    std::size_t dim_;
    std::vector<Vec> basis_;
    std::vector<std::size_t> pivot_;
};

}  // namespace nvcat
