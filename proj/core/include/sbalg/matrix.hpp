#pragma once

#include "sbalg/field.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sbalg {

// Dense row-major matrix over an exact field.
template <Field K>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::initializer_list<std::initializer_list<long>> rows);

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    K& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const K& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_zero() const;
    friend bool operator==(const Matrix&, const Matrix&) = default;

    Matrix transpose() const;
    Matrix column(std::size_t j) const;
    Matrix select_columns(std::span<const std::size_t> idx) const;
    Matrix select_rows(std::span<const std::size_t> idx) const;
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const Matrix& b);

    Matrix operator*(const Matrix& rhs) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix scaled(const K& s) const;

    static Matrix hstack(const Matrix& a, const Matrix& b);
    static Matrix vstack(const Matrix& a, const Matrix& b);
    static Matrix block_diagonal(std::span<const Matrix> blocks);

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<K> data_;
};

template <Field K>
struct RrefResult {
    Matrix<K> matrix;
    std::vector<std::size_t> pivots;
    std::size_t rank() const { return pivots.size(); }
};

template <Field K>
RrefResult<K> rref(Matrix<K> m);

template <Field K>
std::size_t rank(const Matrix<K>& m);

// Columns form a basis of {x : m x = 0}.
template <Field K>
Matrix<K> kernel_basis(const Matrix<K>& m);

// Some X with m X = b, or nullopt when b leaves the column space of m.
template <Field K>
std::optional<Matrix<K>> solve(const Matrix<K>& m, const Matrix<K>& b);

template <Field K>
std::optional<Matrix<K>> inverse(const Matrix<K>& m);

// Maximal independent subset of the columns of m (the pivot columns).
template <Field K>
Matrix<K> column_space_basis(const Matrix<K>& m);

// Indices j such that the standard vectors e_j complete the (independent)
// columns of `basis` to a basis of the ambient space.
template <Field K>
std::vector<std::size_t> complement_indices(const Matrix<K>& basis);

extern template class Matrix<Rational>;
extern template class Matrix<ModP>;

}  // namespace sbalg
