#include "quivermod/matrix.hpp"

#include <sstream>

#include "quivermod/error.hpp"
#include "quivermod/poly.hpp"

namespace quivermod {

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, Scalar(field)) {}

Matrix Matrix::identity(FieldSpec field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t k = 0; k < n; ++k) m.at(k, k) = Scalar::one(field);
    return m;
}

Matrix Matrix::from_rows(FieldSpec field, const std::vector<std::vector<Scalar>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    Matrix m(field, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw Error("ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j) {
            if (rows[i][j].field() != field) throw Error("matrix entry field mismatch");
            m.at(i, j) = rows[i][j];
        }
    }
    return m;
}

Matrix Matrix::of_strings(FieldSpec field, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::vector<Scalar>> parsed(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (const auto& text : rows[i]) parsed[i].push_back(Scalar::from_string(field, text));
    return from_rows(field, parsed);
}

bool Matrix::operator==(const Matrix& rhs) const {
    return field_ == rhs.field_ && rows_ == rhs.rows_ && cols_ == rhs.cols_ &&
           entries_ == rhs.entries_;
}

void Matrix::check_same_shape(const Matrix& rhs) const {
    if (field_ != rhs.field_ || rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw Error("matrix shape/field mismatch");
}

Matrix Matrix::operator+(const Matrix& rhs) const {
    check_same_shape(rhs);
    Matrix out = *this;
    for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] += rhs.entries_[k];
    return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
    check_same_shape(rhs);
    Matrix out = *this;
    for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] -= rhs.entries_[k];
    return out;
}

Matrix Matrix::operator-() const {
    Matrix out = *this;
    for (auto& e : out.entries_) e = -e;
    return out;
}

Matrix Matrix::scaled(const Scalar& c) const {
    Matrix out = *this;
    for (auto& e : out.entries_) e *= c;
    return out;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (field_ != rhs.field_) throw Error("matrix field mismatch in product");
    if (cols_ != rhs.rows_)
        throw Error("matrix shape mismatch in product: " + std::to_string(cols_) + " vs " +
                    std::to_string(rhs.rows_));
    Matrix out(field_, rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                out.at(i, j) += a * rhs.at(k, j);
        }
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

Matrix Matrix::hstack(const Matrix& right) const {
    if (field_ != right.field_ || rows_ != right.rows_) throw Error("hstack shape mismatch");
    Matrix out(field_, rows_, cols_ + right.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
        for (std::size_t j = 0; j < right.cols_; ++j) out.at(i, cols_ + j) = right.at(i, j);
    }
    return out;
}

Matrix Matrix::vstack(const Matrix& below) const {
    if (field_ != below.field_ || cols_ != below.cols_) throw Error("vstack shape mismatch");
    Matrix out(field_, rows_ + below.rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
    for (std::size_t i = 0; i < below.rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(rows_ + i, j) = below.at(i, j);
    return out;
}

Matrix Matrix::column(std::size_t c) const { return columns({c}); }

Matrix Matrix::columns(const std::vector<std::size_t>& sel) const {
    Matrix out(field_, rows_, sel.size());
    for (std::size_t j = 0; j < sel.size(); ++j)
        for (std::size_t i = 0; i < rows_; ++i) out.at(i, j) = at(i, sel[j]);
    return out;
}

Matrix Matrix::submatrix(const std::vector<std::size_t>& row_sel,
                         const std::vector<std::size_t>& col_sel) const {
    Matrix out(field_, row_sel.size(), col_sel.size());
    for (std::size_t i = 0; i < row_sel.size(); ++i)
        for (std::size_t j = 0; j < col_sel.size(); ++j)
            out.at(i, j) = at(row_sel[i], col_sel[j]);
    return out;
}

bool Matrix::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    return *this == identity(field_, rows_);
}

Matrix Matrix::rref(std::vector<std::size_t>* pivot_cols) const {
    Matrix m = *this;
    if (pivot_cols) pivot_cols->clear();
    std::size_t lead = 0;
    for (std::size_t col = 0; col < cols_ && lead < rows_; ++col) {
        std::size_t pivot = lead;
        while (pivot < rows_ && m.at(pivot, col).is_zero()) ++pivot;
        if (pivot == rows_) continue;
        if (pivot != lead)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(pivot, j), m.at(lead, j));
        const Scalar inv = m.at(lead, col).inverse();
        for (std::size_t j = col; j < cols_; ++j) m.at(lead, j) *= inv;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == lead || m.at(r, col).is_zero()) continue;
            const Scalar f = m.at(r, col);
            for (std::size_t j = col; j < cols_; ++j) m.at(r, j) -= f * m.at(lead, j);
        }
        if (pivot_cols) pivot_cols->push_back(col);
        ++lead;
    }
    return m;
}

std::size_t Matrix::rank() const {
    std::vector<std::size_t> pivots;
    rref(&pivots);
    return pivots.size();
}

Scalar Matrix::det() const {
    if (rows_ != cols_) throw Error("determinant of a non-square matrix");
    Matrix m = *this;
    Scalar result = Scalar::one(field_);
    for (std::size_t col = 0; col < cols_; ++col) {
        std::size_t pivot = col;
        while (pivot < rows_ && m.at(pivot, col).is_zero()) ++pivot;
        if (pivot == rows_) return Scalar::zero(field_);
        if (pivot != col) {
            for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(pivot, j), m.at(col, j));
            result = -result;
        }
        result *= m.at(col, col);
        const Scalar inv = m.at(col, col).inverse();
        for (std::size_t r = col + 1; r < rows_; ++r) {
            if (m.at(r, col).is_zero()) continue;
            const Scalar f = m.at(r, col) * inv;
            for (std::size_t j = col; j < cols_; ++j) m.at(r, j) -= f * m.at(col, j);
        }
    }
    return result;
}

std::optional<Matrix> Matrix::solve(const Matrix& rhs) const {
    if (field_ != rhs.field_ || rows_ != rhs.rows_) throw Error("solve shape mismatch");
    std::vector<std::size_t> pivots;
    const Matrix red = hstack(rhs).rref(&pivots);
    for (const auto p : pivots)
        if (p >= cols_) return std::nullopt;  // inconsistent system
    Matrix x(field_, cols_, rhs.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r)
        for (std::size_t j = 0; j < rhs.cols(); ++j) x.at(pivots[r], j) = red.at(r, cols_ + j);
    return x;
}

std::optional<Matrix> Matrix::inverse() const {
    if (rows_ != cols_) throw Error("inverse of a non-square matrix");
    auto x = solve(identity(field_, rows_));
    if (!x) return std::nullopt;
    if (rank() != rows_) return std::nullopt;
    return x;
}

Matrix Matrix::kernel_matrix() const {
    std::vector<std::size_t> pivots;
    const Matrix red = rref(&pivots);
    std::vector<bool> is_pivot(cols_, false);
    for (const auto p : pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < cols_; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Matrix ker(field_, cols_, free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const std::size_t f = free_cols[k];
        ker.at(f, k) = Scalar::one(field_);
        for (std::size_t r = 0; r < pivots.size(); ++r) ker.at(pivots[r], k) = -red.at(r, f);
    }
    return ker;
}

namespace {

// Similarity reduction to upper Hessenberg form; valid over any field.
Matrix hessenberg(Matrix h) {
    const std::size_t n = h.rows();
    if (n < 3) return h;
    for (std::size_t j = 0; j + 2 < n; ++j) {
        std::size_t pivot = j + 1;
        while (pivot < n && h.at(pivot, j).is_zero()) ++pivot;
        if (pivot == n) continue;
        if (pivot != j + 1) {
            for (std::size_t c = 0; c < n; ++c) std::swap(h.at(pivot, c), h.at(j + 1, c));
            for (std::size_t r = 0; r < n; ++r) std::swap(h.at(r, pivot), h.at(r, j + 1));
        }
        const Scalar inv = h.at(j + 1, j).inverse();
        for (std::size_t r = j + 2; r < n; ++r) {
            if (h.at(r, j).is_zero()) continue;
            const Scalar f = h.at(r, j) * inv;
            // Row operation paired with the inverse column operation keeps
            // the matrix in the same conjugacy class.
            for (std::size_t c = 0; c < n; ++c) h.at(r, c) -= f * h.at(j + 1, c);
            for (std::size_t r2 = 0; r2 < n; ++r2) h.at(r2, j + 1) += f * h.at(r2, r);
        }
    }
    return h;
}

}  // namespace

std::vector<Scalar> Matrix::char_poly() const {
    if (rows_ != cols_) throw Error("char_poly of a non-square matrix");
    const std::size_t n = rows_;
    const Matrix h = hessenberg(*this);

    // p_k for the leading principal k x k blocks of the Hessenberg form,
    // each stored low degree first with explicit leading 1.
    std::vector<std::vector<Scalar>> p(n + 1);
    p[0] = {Scalar::one(field_)};
    for (std::size_t k = 1; k <= n; ++k) {
        const auto& prev = p[k - 1];
        std::vector<Scalar> cur(k + 1, Scalar::zero(field_));
        // (t - h_{kk}) * p_{k-1}
        for (std::size_t d = 0; d < prev.size(); ++d) {
            cur[d + 1] += prev[d];
            cur[d] -= h.at(k - 1, k - 1) * prev[d];
        }
        Scalar subdiag = Scalar::one(field_);
        for (std::size_t i = k - 1; i >= 1; --i) {
            subdiag *= h.at(i, i - 1);
            if (subdiag.is_zero()) break;
            const Scalar coeff = h.at(i - 1, k - 1) * subdiag;
            if (coeff.is_zero()) continue;
            for (std::size_t d = 0; d < p[i - 1].size(); ++d) cur[d] -= coeff * p[i - 1][d];
        }
        p[k] = std::move(cur);
    }
    std::vector<Scalar> out(p[n].begin(), p[n].end() - 1);  // drop the monic lead
    return out;
}

RationalSpectrum rational_eigenvalues(const Matrix& m) {
    if (m.field() != FieldSpec::rationals())
        throw Error("rational_eigenvalues requires a matrix over the rationals");
    const auto coeffs = m.char_poly();
    unipoly::Poly p;
    p.reserve(coeffs.size() + 1);
    for (const auto& c : coeffs) p.push_back(c.rational());
    p.push_back(1);  // monic lead
    if (m.rows() == 0) return RationalSpectrum{{}, true};
    const auto roots = unipoly::rational_roots(p);
    return RationalSpectrum{roots.roots, roots.complete};
}

Matrix reduce_mod_p(const Matrix& m, std::uint32_t p) {
    if (m.field() != FieldSpec::rationals())
        throw Error("reduce_mod_p expects a matrix over the rationals");
    Matrix out(FieldSpec::prime(p), m.rows(), m.cols());
    std::string bad;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            try {
                out.at(i, j) = reduce_mod_p(m.at(i, j), p);
            } catch (const Error&) {
                if (!bad.empty()) bad += ", ";
                bad += m.at(i, j).to_string() + " at (" + std::to_string(i) + "," +
                       std::to_string(j) + ")";
            }
        }
    if (!bad.empty()) throw Error("bad prime: entries not reducible mod " + std::to_string(p) + ": " + bad);
    return out;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " [");
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << ", ";
            os << at(i, j).to_string();
        }
        os << "]";
        if (i + 1 < rows_) os << "\n";
    }
    os << "]";
    return os.str();
}

}  // namespace quivermod
