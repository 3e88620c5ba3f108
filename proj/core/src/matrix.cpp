#include "sbalg/matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace sbalg {

template <Field K>
Matrix<K>::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, from_int<K>(0))
{
}

template <Field K>
Matrix<K>::Matrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size())
{
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_)
            throw std::invalid_argument("ragged matrix literal");
        for (long v : row)
            data_.push_back(from_int<K>(v));
    }
}

template <Field K>
Matrix<K> Matrix<K>::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = from_int<K>(1);
    return m;
}

template <Field K>
bool Matrix<K>::is_zero() const
{
    for (const auto& x : data_)
        if (!sbalg::is_zero(x))
            return false;
    return true;
}

template <Field K>
Matrix<K> Matrix<K>::transpose() const
{
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

template <Field K>
Matrix<K> Matrix<K>::column(std::size_t j) const
{
    return block(0, j, rows_, 1);
}

template <Field K>
Matrix<K> Matrix<K>::select_columns(std::span<const std::size_t> idx) const
{
    Matrix out(rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < idx.size(); ++k)
            out(i, k) = (*this)(i, idx[k]);
    return out;
}

template <Field K>
Matrix<K> Matrix<K>::select_rows(std::span<const std::size_t> idx) const
{
    Matrix out(idx.size(), cols_);
    for (std::size_t k = 0; k < idx.size(); ++k)
        for (std::size_t j = 0; j < cols_; ++j)
            out(k, j) = (*this)(idx[k], j);
    return out;
}

template <Field K>
Matrix<K> Matrix<K>::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
{
    if (r0 + nr > rows_ || c0 + nc > cols_)
        throw std::out_of_range("matrix block out of range");
    Matrix out(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j)
            out(i, j) = (*this)(r0 + i, c0 + j);
    return out;
}

template <Field K>
void Matrix<K>::set_block(std::size_t r0, std::size_t c0, const Matrix& b)
{
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_)
        throw std::out_of_range("matrix block out of range");
    for (std::size_t i = 0; i < b.rows_; ++i)
        for (std::size_t j = 0; j < b.cols_; ++j)
            (*this)(r0 + i, c0 + j) = b(i, j);
}

template <Field K>
Matrix<K> Matrix<K>::operator*(const Matrix& rhs) const
{
    if (cols_ != rhs.rows_)
        throw std::invalid_argument("matrix product shape mismatch: " + std::to_string(rows_) + "x" +
                                    std::to_string(cols_) + " * " + std::to_string(rhs.rows_) + "x" +
                                    std::to_string(rhs.cols_));
    Matrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const K& a = (*this)(i, k);
            if (sbalg::is_zero(a))
                continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                const K& b = rhs(k, j);
                if (!sbalg::is_zero(b))
                    out(i, j) += a * b;
            }
        }
    return out;
}

template <Field K>
Matrix<K> Matrix<K>::operator+(const Matrix& rhs) const
{
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("matrix sum shape mismatch");
    Matrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] += rhs.data_[i];
    return out;
}

template <Field K>
Matrix<K> Matrix<K>::operator-(const Matrix& rhs) const
{
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("matrix difference shape mismatch");
    Matrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] -= rhs.data_[i];
    return out;
}

template <Field K>
Matrix<K> Matrix<K>::scaled(const K& s) const
{
    Matrix out = *this;
    for (auto& x : out.data_)
        x *= s;
    return out;
}

template <Field K>
Matrix<K> Matrix<K>::hstack(const Matrix& a, const Matrix& b)
{
    if (a.rows_ != b.rows_)
        throw std::invalid_argument("hstack row mismatch");
    Matrix out(a.rows_, a.cols_ + b.cols_);
    out.set_block(0, 0, a);
    out.set_block(0, a.cols_, b);
    return out;
}

template <Field K>
Matrix<K> Matrix<K>::vstack(const Matrix& a, const Matrix& b)
{
    if (a.cols_ != b.cols_)
        throw std::invalid_argument("vstack column mismatch");
    Matrix out(a.rows_ + b.rows_, a.cols_);
    out.set_block(0, 0, a);
    out.set_block(a.rows_, 0, b);
    return out;
}

template <Field K>
Matrix<K> Matrix<K>::block_diagonal(std::span<const Matrix> blocks)
{
    std::size_t r = 0, c = 0;
    for (const auto& b : blocks) {
        r += b.rows_;
        c += b.cols_;
    }
    Matrix out(r, c);
    r = c = 0;
    for (const auto& b : blocks) {
        out.set_block(r, c, b);
        r += b.rows_;
        c += b.cols_;
    }
    return out;
}

template <Field K>
std::string Matrix<K>::to_string() const
{
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < cols_; ++j)
            os << (j ? " " : "") << sbalg::to_string((*this)(i, j));
    }
    os << "]";
    return os.str();
}

template <Field K>
RrefResult<K> rref(Matrix<K> m)
{
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivots;
    std::vector<std::size_t> support;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t best = rows;
        std::size_t best_cost = 0;
        for (std::size_t i = r; i < rows; ++i) {
            if (is_zero(m(i, c)))
                continue;
            const std::size_t cost = FieldTraits<K>::pivot_cost(m(i, c));
            if (best == rows || cost < best_cost) {
                best = i;
                best_cost = cost;
            }
        }
        if (best == rows)
            continue;
        if (best != r)
            for (std::size_t j = c; j < cols; ++j)
                std::swap(m(r, j), m(best, j));

        const K inv = from_int<K>(1) / m(r, c);
        support.clear();
        for (std::size_t j = c; j < cols; ++j)
            if (!is_zero(m(r, j))) {
                m(r, j) *= inv;
                support.push_back(j);
            }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || is_zero(m(i, c)))
                continue;
            const K f = m(i, c);
            for (std::size_t j : support)
                m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

template <Field K>
std::size_t rank(const Matrix<K>& m)
{
    return rref(m).rank();
}

template <Field K>
Matrix<K> kernel_basis(const Matrix<K>& m)
{
    const auto red = rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : red.pivots)
        is_pivot[p] = true;
    std::vector<std::size_t> free;
    for (std::size_t j = 0; j < n; ++j)
        if (!is_pivot[j])
            free.push_back(j);
    Matrix<K> k(n, free.size());
    for (std::size_t f = 0; f < free.size(); ++f) {
        k(free[f], f) = from_int<K>(1);
        for (std::size_t i = 0; i < red.pivots.size(); ++i)
            if (!is_zero(red.matrix(i, free[f])))
                k(red.pivots[i], f) = -red.matrix(i, free[f]);
    }
    return k;
}

template <Field K>
std::optional<Matrix<K>> solve(const Matrix<K>& m, const Matrix<K>& b)
{
    if (m.rows() != b.rows())
        throw std::invalid_argument("solve: row count mismatch");
    const std::size_t n = m.cols();
    const auto red = rref(Matrix<K>::hstack(m, b));
    Matrix<K> x(n, b.cols());
    for (std::size_t i = 0; i < red.pivots.size(); ++i) {
        const std::size_t p = red.pivots[i];
        if (p >= n)
            return std::nullopt;
        for (std::size_t j = 0; j < b.cols(); ++j)
            x(p, j) = red.matrix(i, n + j);
    }
    return x;
}

template <Field K>
std::optional<Matrix<K>> inverse(const Matrix<K>& m)
{
    if (m.rows() != m.cols())
        return std::nullopt;
    const std::size_t n = m.rows();
    const auto red = rref(Matrix<K>::hstack(m, Matrix<K>::identity(n)));
    if (red.rank() < n || (n > 0 && red.pivots[n - 1] != n - 1))
        return std::nullopt;
    return red.matrix.block(0, n, n, n);
}

template <Field K>
Matrix<K> column_space_basis(const Matrix<K>& m)
{
    const auto red = rref(m);
    return m.select_columns(red.pivots);
}

template <Field K>
std::vector<std::size_t> complement_indices(const Matrix<K>& basis)
{
    const std::size_t n = basis.rows();
    const std::size_t k = basis.cols();
    const auto red = rref(Matrix<K>::hstack(basis, Matrix<K>::identity(n)));
    std::vector<std::size_t> out;
    for (auto p : red.pivots)
        if (p >= k)
            out.push_back(p - k);
    return out;
}

template class Matrix<Rational>;
template class Matrix<ModP>;

#define SBALG_INSTANTIATE(K)                                                        \
    template RrefResult<K> rref(Matrix<K>);                                         \
    template std::size_t rank(const Matrix<K>&);                                    \
    template Matrix<K> kernel_basis(const Matrix<K>&);                              \
    template std::optional<Matrix<K>> solve(const Matrix<K>&, const Matrix<K>&);    \
    template std::optional<Matrix<K>> inverse(const Matrix<K>&);                    \
    template Matrix<K> column_space_basis(const Matrix<K>&);                        \
    template std::vector<std::size_t> complement_indices(const Matrix<K>&);

SBALG_INSTANTIATE(Rational)
SBALG_INSTANTIATE(ModP)

}  // namespace sbalg
