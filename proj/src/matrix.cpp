#include "tdpoly/matrix.hpp"

namespace tdpoly {
namespace {

// Row-reduces in place; returns the pivot column of each reduced row.
std::vector<int> row_reduce(std::vector<std::vector<FieldElement>>& rows, const Field& f) {
    std::vector<int> pivots;
    if (rows.empty()) return pivots;
    const int cols = static_cast<int>(rows[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
        int pivot = -1;
        for (int i = r; i < static_cast<int>(rows.size()); ++i)
            if (!rows[static_cast<size_t>(i)][static_cast<size_t>(c)].is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[static_cast<size_t>(r)], rows[static_cast<size_t>(pivot)]);
        FieldElement inv = rows[static_cast<size_t>(r)][static_cast<size_t>(c)].inverse();
        for (auto& x : rows[static_cast<size_t>(r)]) x = x * inv;
        for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
            if (i == r) continue;
            FieldElement factor = rows[static_cast<size_t>(i)][static_cast<size_t>(c)];
            if (factor.is_zero()) continue;
            for (int j = 0; j < cols; ++j)
                rows[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
                    factor * rows[static_cast<size_t>(r)][static_cast<size_t>(j)];
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(pivots.size(), std::vector<FieldElement>(static_cast<size_t>(cols),
                                                         FieldElement::zero(f)));
    return pivots;
}

}  // namespace

Matrix::Matrix(const Field& f, int rows, int cols)
    : field_(f), rows_(rows), cols_(cols),
      data_(static_cast<size_t>(rows) * static_cast<size_t>(cols), FieldElement::zero(f)) {
    if (rows < 0 || cols < 0) throw DomainError("negative matrix dimensions");
}

size_t Matrix::index(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw DomainError("matrix index out of range");
    return static_cast<size_t>(r) * static_cast<size_t>(cols_) + static_cast<size_t>(c);
}

Matrix Matrix::identity(const Field& f, int n) {
    Matrix m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = FieldElement::one(f);
    return m;
}

void Matrix::require_same_shape(const Matrix& rhs) const {
    if (field_ != rhs.field_ || rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw DomainError("matrix shape or field mismatch");
}

Matrix Matrix::operator+(const Matrix& rhs) const {
    require_same_shape(rhs);
    Matrix out(field_, rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + rhs.data_[i];
    return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
    require_same_shape(rhs);
    Matrix out(field_, rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - rhs.data_[i];
    return out;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (field_ != rhs.field_ || cols_ != rhs.rows_)
        throw DomainError("matrix product shape mismatch");
    Matrix out(field_, rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const FieldElement& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < rhs.cols_; ++j) out.at(i, j) += a * rhs.at(k, j);
        }
    return out;
}

Matrix Matrix::scale(const FieldElement& c) const {
    Matrix out(field_, rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * c;
    return out;
}

std::vector<FieldElement> Matrix::apply(std::span<const FieldElement> v) const {
    if (static_cast<int>(v.size()) != cols_) throw DomainError("vector length mismatch");
    std::vector<FieldElement> out(static_cast<size_t>(rows_), FieldElement::zero(field_));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out[static_cast<size_t>(i)] += at(i, j) * v[static_cast<size_t>(j)];
    return out;
}

bool Matrix::operator==(const Matrix& rhs) const {
    if (field_ != rhs.field_ || rows_ != rhs.rows_ || cols_ != rhs.cols_) return false;
    for (size_t i = 0; i < data_.size(); ++i)
        if (data_[i] != rhs.data_[i]) return false;
    return true;
}

bool Matrix::is_zero() const {
    for (const FieldElement& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

int Matrix::rank() const {
    std::vector<std::vector<FieldElement>> rows;
    rows.reserve(static_cast<size_t>(rows_));
    for (int i = 0; i < rows_; ++i) {
        std::vector<FieldElement> row;
        row.reserve(static_cast<size_t>(cols_));
        for (int j = 0; j < cols_; ++j) row.push_back(at(i, j));
        rows.push_back(std::move(row));
    }
    return static_cast<int>(row_reduce(rows, field_).size());
}

Matrix Matrix::inverse() const {
    if (rows_ != cols_) throw DomainError("only square matrices can be inverted");
    // Eliminate on [this | I].
    std::vector<std::vector<FieldElement>> rows;
    rows.reserve(static_cast<size_t>(rows_));
    for (int i = 0; i < rows_; ++i) {
        std::vector<FieldElement> row;
        row.reserve(static_cast<size_t>(2 * cols_));
        for (int j = 0; j < cols_; ++j) row.push_back(at(i, j));
        for (int j = 0; j < cols_; ++j)
            row.push_back(i == j ? FieldElement::one(field_) : FieldElement::zero(field_));
        rows.push_back(std::move(row));
    }
    std::vector<int> pivots = row_reduce(rows, field_);
    for (int i = 0; i < rows_; ++i)
        if (i >= static_cast<int>(pivots.size()) || pivots[static_cast<size_t>(i)] != i)
            throw DomainError("matrix is singular");
    Matrix out(field_, rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            out.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(cols_ + j)];
    return out;
}

std::string Matrix::to_string() const {
    std::string out;
    for (int i = 0; i < rows_; ++i) {
        if (i) out += "; ";
        for (int j = 0; j < cols_; ++j) {
            if (j) out += ", ";
            out += at(i, j).to_string();
        }
    }
    return out;
}

std::vector<std::vector<FieldElement>> column_space(const Matrix& m) {
    std::vector<std::vector<FieldElement>> cols;
    cols.reserve(static_cast<size_t>(m.cols()));
    for (int j = 0; j < m.cols(); ++j) {
        std::vector<FieldElement> col;
        col.reserve(static_cast<size_t>(m.rows()));
        for (int i = 0; i < m.rows(); ++i) col.push_back(m.at(i, j));
        cols.push_back(std::move(col));
    }
    return span_basis(m.field(), cols);
}

std::vector<std::vector<FieldElement>> span_basis(
    const Field& f, const std::vector<std::vector<FieldElement>>& vectors) {
    std::vector<std::vector<FieldElement>> rows = vectors;
    row_reduce(rows, f);
    return rows;
}

std::vector<std::vector<FieldElement>> intersect_spans(
    const Field& f, const std::vector<std::vector<FieldElement>>& left,
    const std::vector<std::vector<FieldElement>>& right) {
    if (left.empty() || right.empty()) return {};
    const size_t n = left[0].size();
    const size_t kl = left.size(), kr = right.size();

    // Solve [L | -R] (x, y)^T = 0 columnwise: nullspace vectors give
    // intersection elements L x.
    std::vector<std::vector<FieldElement>> rows(
        n, std::vector<FieldElement>(kl + kr, FieldElement::zero(f)));
    for (size_t j = 0; j < kl; ++j)
        for (size_t i = 0; i < n; ++i) rows[i][j] = left[j][i];
    for (size_t j = 0; j < kr; ++j)
        for (size_t i = 0; i < n; ++i) rows[i][kl + j] = -right[j][i];

    std::vector<int> pivots = row_reduce(rows, f);
    std::vector<bool> is_pivot(kl + kr, false);
    for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;

    std::vector<std::vector<FieldElement>> basis;
    for (size_t free_col = 0; free_col < kl + kr; ++free_col) {
        if (is_pivot[free_col]) continue;
        // Back-substitute the nullspace vector with 1 in this free column.
        std::vector<FieldElement> sol(kl + kr, FieldElement::zero(f));
        sol[free_col] = FieldElement::one(f);
        for (size_t r = 0; r < pivots.size(); ++r)
            sol[static_cast<size_t>(pivots[r])] = -rows[r][free_col];
        std::vector<FieldElement> vec(n, FieldElement::zero(f));
        for (size_t j = 0; j < kl; ++j)
            for (size_t i = 0; i < n; ++i) vec[i] += left[j][i] * sol[j];
        basis.push_back(std::move(vec));
    }
    return span_basis(f, basis);
}

}  // namespace tdpoly
