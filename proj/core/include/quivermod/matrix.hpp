#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "quivermod/field.hpp"

namespace quivermod {

/// Dense matrix over an exact field.  Row-major; all entries share the
/// field of the matrix.  0xk and kx0 shapes are legal and behave
/// uniformly (framed quivers produce them).
class Matrix {
  public:
    Matrix() : field_(FieldSpec::rationals()) {}
    Matrix(FieldSpec field, std::size_t rows, std::size_t cols);

    static Matrix identity(FieldSpec field, std::size_t n);
    static Matrix from_rows(FieldSpec field, const std::vector<std::vector<Scalar>>& rows);
    /// Convenience for fixtures: entries given as scalar literals.
    static Matrix of_strings(FieldSpec field, const std::vector<std::vector<std::string>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldSpec& field() const { return field_; }

    Scalar& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    bool operator==(const Matrix& rhs) const;
    bool operator!=(const Matrix& rhs) const { return !(*this == rhs); }

    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix operator*(const Matrix& rhs) const;
    Matrix operator-() const;
    Matrix scaled(const Scalar& c) const;

    Matrix transpose() const;
    Matrix hstack(const Matrix& right) const;
    Matrix vstack(const Matrix& below) const;
    Matrix column(std::size_t c) const;
    Matrix columns(const std::vector<std::size_t>& sel) const;
    Matrix submatrix(const std::vector<std::size_t>& row_sel,
                     const std::vector<std::size_t>& col_sel) const;

    bool is_zero() const;
    bool is_identity() const;

    /// Reduced row-echelon form; optionally reports the pivot columns.
    Matrix rref(std::vector<std::size_t>* pivot_cols = nullptr) const;
    std::size_t rank() const;
    Scalar det() const;
    std::optional<Matrix> inverse() const;
    /// A particular solution X of (*this) * X = rhs, if consistent.
    std::optional<Matrix> solve(const Matrix& rhs) const;
    /// Basis of the right kernel as columns (not canonicalized).
    Matrix kernel_matrix() const;

    /// Characteristic polynomial coefficients (a_0, ..., a_{n-1}) with the
    /// monic leading term implicit, low degree first.
    std::vector<Scalar> char_poly() const;

    std::string to_string() const;

  private:
    void check_same_shape(const Matrix& rhs) const;

    FieldSpec field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> entries_;
};

struct RationalSpectrum {
    std::vector<std::pair<mpq_class, int>> eigenvalues;  // (value, multiplicity), ascending
    bool complete = false;                               // multiplicities sum to n
};

/// Rational eigenvalues with multiplicity of a square matrix over Q.
RationalSpectrum rational_eigenvalues(const Matrix& m);

Matrix reduce_mod_p(const Matrix& m, std::uint32_t p);

}  // namespace quivermod
