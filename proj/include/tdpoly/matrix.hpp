#pragma once

#include <span>
#include <string>
#include <vector>

#include "tdpoly/field.hpp"

namespace tdpoly {

/// Dense exact matrix over a field. Desk-scale only: everything is plain
/// Gaussian elimination with exact arithmetic.
class Matrix {
public:
    Matrix(const Field& f, int rows, int cols);

    static Matrix identity(const Field& f, int n);

    const Field& field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    FieldElement& at(int r, int c) { return data_[index(r, c)]; }
    const FieldElement& at(int r, int c) const { return data_[index(r, c)]; }

    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix operator*(const Matrix& rhs) const;
    Matrix scale(const FieldElement& c) const;

    std::vector<FieldElement> apply(std::span<const FieldElement> v) const;

    bool operator==(const Matrix& rhs) const;
    bool operator!=(const Matrix& rhs) const { return !(*this == rhs); }
    bool is_zero() const;

    int rank() const;

    /// Exact inverse by Gauss-Jordan elimination; throws if singular.
    Matrix inverse() const;

    std::string to_string() const;  // rows joined by "; ", entries by ", "

private:
    size_t index(int r, int c) const;
    void require_same_shape(const Matrix& rhs) const;

    Field field_;
    int rows_, cols_;
    std::vector<FieldElement> data_;
};

/// Columns spanning the column space (a subset of the input columns in
/// reduced form is not required; any exact basis works).
std::vector<std::vector<FieldElement>> column_space(const Matrix& m);

/// Basis of the span of the given vectors.
std::vector<std::vector<FieldElement>> span_basis(
    const Field& f, const std::vector<std::vector<FieldElement>>& vectors);

/// Basis of the intersection of two spans.
std::vector<std::vector<FieldElement>> intersect_spans(
    const Field& f, const std::vector<std::vector<FieldElement>>& left,
    const std::vector<std::vector<FieldElement>>& right);

}  // namespace tdpoly
