#include "quivermod/subspace.hpp"

#include <algorithm>

#include "quivermod/error.hpp"

namespace quivermod {

Subspace::Subspace(FieldSpec field, std::size_t ambient_dim)
    : ambient_(ambient_dim), basis_(field, ambient_dim, 0) {}

Subspace Subspace::span(const Matrix& columns) {
    std::vector<std::size_t> pivots;
    const Matrix red = columns.transpose().rref(&pivots);
    Matrix basis(columns.field(), columns.rows(), pivots.size());
    for (std::size_t r = 0; r < pivots.size(); ++r)
        for (std::size_t c = 0; c < columns.rows(); ++c) basis.at(c, r) = red.at(r, c);
    Subspace s(columns.field(), columns.rows());
    s.basis_ = std::move(basis);
    return s;
}

Subspace Subspace::full(FieldSpec field, std::size_t ambient_dim) {
    return span(Matrix::identity(field, ambient_dim));
}

namespace {

std::size_t pivot_row_of(const Matrix& basis, std::size_t col) {
    for (std::size_t r = 0; r < basis.rows(); ++r)
        if (!basis.at(r, col).is_zero()) return r;
    throw Error("zero column in echelon basis");
}

}  // namespace

bool Subspace::contains_vector(const Matrix& column) const {
    if (column.rows() != ambient_ || column.cols() != 1 || column.field() != field())
        throw Error("vector/ambient mismatch in subspace membership");
    Matrix v = column;
    for (std::size_t j = 0; j < basis_.cols(); ++j) {
        const std::size_t pr = pivot_row_of(basis_, j);
        const Scalar c = v.at(pr, 0);
        if (c.is_zero()) continue;
        for (std::size_t r = 0; r < ambient_; ++r) v.at(r, 0) -= c * basis_.at(r, j);
    }
    return v.is_zero();
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_ || other.field() != field())
        throw Error("ambient mismatch in subspace containment");
    if (other.dim() > dim()) return false;
    for (std::size_t j = 0; j < other.basis_.cols(); ++j)
        if (!contains_vector(other.basis_.column(j))) return false;
    return true;
}

bool Subspace::operator==(const Subspace& rhs) const {
    return ambient_ == rhs.ambient_ && basis_ == rhs.basis_;
}

Matrix Subspace::coordinates_of(const Matrix& columns) const {
    if (columns.rows() != ambient_ || columns.field() != field())
        throw Error("ambient mismatch in subspace coordinates");
    Matrix coords(field(), dim(), columns.cols());
    for (std::size_t c = 0; c < columns.cols(); ++c) {
        Matrix v = columns.column(c);
        for (std::size_t j = 0; j < basis_.cols(); ++j) {
            const std::size_t pr = pivot_row_of(basis_, j);
            const Scalar f = v.at(pr, 0);
            if (f.is_zero()) continue;
            coords.at(j, c) = f;
            for (std::size_t r = 0; r < ambient_; ++r) v.at(r, 0) -= f * basis_.at(r, j);
        }
        if (!v.is_zero()) throw Error("column lies outside the subspace");
    }
    return coords;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim() || a.field() != b.field())
        throw Error("ambient dimension mismatch in subspace sum");
    return Subspace::span(a.basis().hstack(b.basis()));
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim() || a.field() != b.field())
        throw Error("ambient dimension mismatch in subspace intersection");
    if (a.is_zero() || b.is_zero()) return Subspace(a.field(), a.ambient_dim());
    const Matrix ker = a.basis().hstack(-b.basis()).kernel_matrix();
    std::vector<std::size_t> top(a.dim());
    for (std::size_t k = 0; k < a.dim(); ++k) top[k] = k;
    std::vector<std::size_t> all_cols(ker.cols());
    for (std::size_t k = 0; k < ker.cols(); ++k) all_cols[k] = k;
    return Subspace::span(a.basis() * ker.submatrix(top, all_cols));
}

Subspace preimage(const Matrix& m, const Subspace& s) {
    if (m.rows() != s.ambient_dim() || m.field() != s.field())
        throw Error("dimension mismatch in preimage");
    const Matrix ker = m.hstack(s.basis()).kernel_matrix();
    std::vector<std::size_t> top(m.cols());
    for (std::size_t k = 0; k < m.cols(); ++k) top[k] = k;
    std::vector<std::size_t> all_cols(ker.cols());
    for (std::size_t k = 0; k < ker.cols(); ++k) all_cols[k] = k;
    return Subspace::span(ker.submatrix(top, all_cols));
}

Subspace kernel_basis(const Matrix& m) { return Subspace::span(m.kernel_matrix()); }

Subspace image_basis(const Matrix& m) { return Subspace::span(m); }

mpz_class count_subspaces(std::uint32_t p, std::size_t dim) {
    mpz_class total = 0;
    mpz_class pz(p);
    for (std::size_t k = 0; k <= dim; ++k) {
        mpz_class num = 1, den = 1;
        for (std::size_t i = 0; i < k; ++i) {
            mpz_class ph, pl;
            mpz_pow_ui(ph.get_mpz_t(), pz.get_mpz_t(), static_cast<unsigned long>(dim - i));
            mpz_pow_ui(pl.get_mpz_t(), pz.get_mpz_t(), static_cast<unsigned long>(i + 1));
            num *= ph - 1;
            den *= pl - 1;
        }
        total += num / den;
    }
    return total;
}

SubspaceIndexer::SubspaceIndexer(FieldSpec prime_field, std::size_t ambient_dim)
    : field_(prime_field), ambient_(ambient_dim) {
    if (!field_.is_prime_field()) throw Error("subspace enumeration requires a prime field");
    total_ = count_subspaces(field_.p, ambient_);
    if (total_ > mpz_class("18446744073709551615"))
        throw Error("subspace enumeration size exceeds 2^64");

    std::uint64_t offset = 0;
    for (std::size_t k = 0; k <= ambient_; ++k) {
        // Pivot-row combinations in lexicographic order.
        std::vector<std::size_t> combo(k);
        for (std::size_t i = 0; i < k; ++i) combo[i] = i;
        while (true) {
            Block b;
            b.dim = k;
            b.pivot_rows = combo;
            std::vector<bool> is_pivot(ambient_, false);
            for (const auto r : combo) is_pivot[r] = true;
            for (std::size_t j = 0; j < k; ++j)
                for (std::size_t c = combo[j] + 1; c < ambient_; ++c)
                    if (!is_pivot[c]) b.free_positions.emplace_back(j, c);
            std::uint64_t size = 1;
            for (std::size_t e = 0; e < b.free_positions.size(); ++e) size *= field_.p;
            b.size = size;
            b.offset = offset;
            offset += size;
            blocks_.push_back(std::move(b));

            if (k == 0) break;
            // next pivot combination in lexicographic order
            bool advanced = false;
            for (std::size_t i = k; i-- > 0;) {
                if (combo[i] + (k - i) < ambient_) {
                    ++combo[i];
                    for (std::size_t j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
                    advanced = true;
                    break;
                }
            }
            if (!advanced) break;
        }
    }
}

Subspace SubspaceIndexer::at(std::uint64_t index) const {
    // Locate the block containing this index.
    std::size_t lo = 0, hi = blocks_.size();
    while (lo + 1 < hi) {
        const std::size_t mid = (lo + hi) / 2;
        if (blocks_[mid].offset <= index)
            lo = mid;
        else
            hi = mid;
    }
    const Block& b = blocks_[lo];
    std::uint64_t rem = index - b.offset;

    // Decode free entries, first position most significant.
    const std::size_t nfree = b.free_positions.size();
    std::vector<std::uint32_t> digits(nfree, 0);
    for (std::size_t i = nfree; i-- > 0;) {
        digits[i] = static_cast<std::uint32_t>(rem % field_.p);
        rem /= field_.p;
    }

    Matrix basis(field_, ambient_, b.dim);
    for (std::size_t j = 0; j < b.dim; ++j)
        basis.at(b.pivot_rows[j], j) = Scalar::one(field_);
    for (std::size_t i = 0; i < nfree; ++i) {
        const auto [row_j, col_c] = b.free_positions[i];
        basis.at(col_c, row_j) = Scalar(field_, static_cast<long>(digits[i]));
    }
    return Subspace::span(basis);
}

}  // namespace quivermod
