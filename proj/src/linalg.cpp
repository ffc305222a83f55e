#include "nvcat/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace nvcat {

Vec zero_vec(Field f, std::size_t n) { return Vec(n, Scalar::zero(f)); }

bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

void axpy(Vec& y, const Scalar& c, const Vec& x) {
    if (y.size() != x.size()) throw std::invalid_argument("axpy: length mismatch");
    if (c.is_zero()) return;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero()) y[i] += c * x[i];
}

Scalar dot(const Vec& x, const Vec& y) {
    if (x.size() != y.size()) throw std::invalid_argument("dot: length mismatch");
    if (x.empty()) return Scalar();
    Scalar s = Scalar::zero(x.front().field());
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero() && !y[i].is_zero()) s += x[i] * y[i];
    return s;
}

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows, zero_vec(f, cols)) {}

Matrix Matrix::from_columns(Field f, std::size_t rows, const std::vector<Vec>& columns) {
    Matrix m(f, rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != rows) throw std::invalid_argument("from_columns: column length mismatch");
        for (std::size_t i = 0; i < rows; ++i) m.data_[i][j] = columns[j][i];
    }
    return m;
}

Matrix Matrix::identity(Field f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i][i] = Scalar::one(f);
    return m;
}

Vec Matrix::column(std::size_t j) const {
    Vec c;
    c.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c.push_back(data_[i][j]);
    return c;
}

Vec Matrix::apply(const Vec& x) const {
    if (x.size() != cols_) throw std::invalid_argument("apply: length mismatch");
    Vec y = zero_vec(field_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) y[i] = dot(data_[i], x);
    return y;
}

Vec Matrix::apply_transpose(const Vec& y) const {
    if (y.size() != rows_) throw std::invalid_argument("apply_transpose: length mismatch");
    Vec x = zero_vec(field_, cols_);
    for (std::size_t i = 0; i < rows_; ++i) axpy(x, y[i], data_[i]);
    return x;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.data_[j][i] = data_[i][j];
    return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    Matrix p(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k)
            if (!data_[i][k].is_zero()) axpy(p.data_[i], data_[i][k], o.data_[k]);
    return p;
}

bool Matrix::is_zero() const {
    for (const auto& r : data_)
        if (!nvcat::is_zero(r)) return false;
    return true;
}

LinearSolver::LinearSolver(Matrix a) : field_(a.field()), rows_(a.rows()), cols_(a.cols()), rref_(std::move(a)) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        // Smallest entry as pivot keeps rational growth down.
        std::size_t best = rows_;
        std::size_t best_size = 0;
        for (std::size_t i = r; i < rows_; ++i) {
            const Scalar& x = rref_(i, c);
            if (x.is_zero()) continue;
            std::size_t s = x.size_hint();
            if (best == rows_ || s < best_size) {
                best = i;
                best_size = s;
            }
        }
        if (best == rows_) continue;
        if (best != r) {
            std::swap(rref_.row(best), rref_.row(r));
            ops_.push_back({RowOp::Swap, r, best, Scalar()});
        }
        Scalar inv = rref_(r, c).inverse();
        if (!inv.is_one()) {
            for (auto& x : rref_.row(r))
                if (!x.is_zero()) x *= inv;
            ops_.push_back({RowOp::Scale, r, r, inv});
        }
        std::vector<std::size_t> support;
        for (std::size_t j = c; j < cols_; ++j)
            if (!rref_(r, j).is_zero()) support.push_back(j);
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r || rref_(i, c).is_zero()) continue;
            Scalar f = -rref_(i, c);
            for (std::size_t j : support) rref_(i, j) += f * rref_(r, j);
            ops_.push_back({RowOp::Add, i, r, f});
        }
        pivots_.push_back(c);
        ++r;
    }
}

void LinearSolver::apply_ops(Vec& b) const {
    for (const auto& op : ops_) {
        switch (op.kind) {
        case RowOp::Swap:
            std::swap(b[op.target], b[op.source]);
            break;
        case RowOp::Scale:
            b[op.target] *= op.factor;
            break;
        case RowOp::Add:
            if (!b[op.source].is_zero()) b[op.target] += op.factor * b[op.source];
            break;
        }
    }
}

std::optional<Vec> LinearSolver::solve(const Vec& b) const {
    if (b.size() != rows_) throw std::invalid_argument("solve: length mismatch");
    Vec e = b;
    apply_ops(e);
    for (std::size_t i = pivots_.size(); i < rows_; ++i)
        if (!e[i].is_zero()) return std::nullopt;
    Vec x = zero_vec(field_, cols_);
    for (std::size_t i = 0; i < pivots_.size(); ++i) x[pivots_[i]] = e[i];
    return x;
}

bool LinearSolver::in_image(const Vec& b) const { return solve(b).has_value(); }

std::vector<Vec> LinearSolver::kernel() const {
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots_) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        Vec x = zero_vec(field_, cols_);
        x[f] = Scalar::one(field_);
        for (std::size_t i = 0; i < pivots_.size(); ++i)
            if (!rref_(i, f).is_zero()) x[pivots_[i]] = -rref_(i, f);
        basis.push_back(std::move(x));
    }
    return basis;
}

std::size_t rank(const Matrix& a) { return LinearSolver(a).rank(); }

std::vector<Vec> kernel_basis(const Matrix& a) { return LinearSolver(a).kernel(); }

Vec SpanBasis::reduce(Vec v) const {
    if (v.size() != dim_) throw std::invalid_argument("SpanBasis: length mismatch");
    for (std::size_t k = 0; k < basis_.size(); ++k) {
        const Scalar& c = v[pivot_[k]];
        if (!c.is_zero()) axpy(v, -c, basis_[k]);
    }
    return v;
}

bool SpanBasis::add(const Vec& v) {
    Vec r = reduce(v);
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (r[i].is_zero()) continue;
        Scalar inv = r[i].inverse();
        for (auto& x : r)
            if (!x.is_zero()) x *= inv;
        basis_.push_back(std::move(r));
        pivot_.push_back(i);
        return true;
    }
    return false;
}

bool SpanBasis::contains(const Vec& v) const { return nvcat::is_zero(reduce(v)); }

}  // namespace nvcat
