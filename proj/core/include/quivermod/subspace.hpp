#pragma once

#include <cstdint>
#include <vector>

#include "quivermod/matrix.hpp"

namespace quivermod {

/// A linear subspace of F^d carrying a canonical basis: the columns of
/// `basis()` are in reduced column-echelon form (the transpose of the
/// reduced row-echelon form of the transposed span), so equal subspaces
/// compare structurally equal.
class Subspace {
  public:
    Subspace(FieldSpec field, std::size_t ambient_dim);  // the zero subspace
    static Subspace span(const Matrix& columns);
    static Subspace full(FieldSpec field, std::size_t ambient_dim);

    const FieldSpec& field() const { return basis_.field(); }
    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.cols(); }
    const Matrix& basis() const { return basis_; }

    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == ambient_; }

    bool contains_vector(const Matrix& column) const;
    bool contains(const Subspace& other) const;
    bool operator==(const Subspace& rhs) const;
    bool operator!=(const Subspace& rhs) const { return !(*this == rhs); }

    /// Coordinates of the given columns in this basis; errors when a
    /// column lies outside the subspace.
    Matrix coordinates_of(const Matrix& columns) const;

  private:
    std::size_t ambient_;
    Matrix basis_;
};

Subspace subspace_intersect(const Subspace& a, const Subspace& b);
Subspace subspace_sum(const Subspace& a, const Subspace& b);
/// preimage(M, S) = { v : M v in S }.
Subspace preimage(const Matrix& m, const Subspace& s);

Subspace kernel_basis(const Matrix& m);
Subspace image_basis(const Matrix& m);

/// Number of subspaces of F_p^d (sum of Gaussian binomial coefficients).
mpz_class count_subspaces(std::uint32_t p, std::size_t dim);

/// Random access into the canonical enumeration of the subspaces of
/// F_p^d: dimension ascending, pivot-row sets in lexicographic order,
/// free entries in row-major lexicographic order.  Index 0 is the zero
/// subspace, the last index is the full space.
class SubspaceIndexer {
  public:
    SubspaceIndexer(FieldSpec prime_field, std::size_t ambient_dim);

    const mpz_class& count() const { return total_; }
    Subspace at(std::uint64_t index) const;

  private:
    struct Block {
        std::size_t dim;
        std::vector<std::size_t> pivot_rows;
        std::vector<std::pair<std::size_t, std::size_t>> free_positions;
        std::uint64_t size;    // p^(free positions)
        std::uint64_t offset;  // cumulative start index
    };

    FieldSpec field_;
    std::size_t ambient_;
    mpz_class total_;
    std::vector<Block> blocks_;
};

}  // namespace quivermod
