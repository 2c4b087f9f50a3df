#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "coderco/rational.hpp"

namespace coderco {

using Index = std::int64_t;

// base^exp with the result checked against config().index_bound.
Index checked_pow(Index base, int exp);

// a*b with the result checked against config().index_bound.
Index checked_mul(Index a, Index b);

// Sparse matrix over the rationals. Zero entries are never stored, so
// operator== is equality of the underlying linear maps. Entry iteration is
// row-major and deterministic.
class SparseMat {
public:
    using EntryMap = std::map<std::pair<Index, Index>, Rat>;

    SparseMat(Index rows, Index cols);

    static SparseMat identity(Index n);

    Index rows() const { return rows_; }
    Index cols() const { return cols_; }
    Index nnz() const { return static_cast<Index>(data_.size()); }
    bool is_zero() const { return data_.empty(); }

    const EntryMap& entries() const { return data_; }

    // Zero when the entry is absent.
    Rat at(Index row, Index col) const;
    void set(Index row, Index col, Rat value);
    void add_at(Index row, Index col, const Rat& value);

    SparseMat transpose() const;
    SparseMat scaled(const Rat& factor) const;

    friend SparseMat operator+(const SparseMat& a, const SparseMat& b);
    friend SparseMat operator-(const SparseMat& a, const SparseMat& b);
    SparseMat operator-() const;
    // Composition of linear maps: (a*b)(x) = a(b(x)).
    friend SparseMat operator*(const SparseMat& a, const SparseMat& b);
    friend bool operator==(const SparseMat& a, const SparseMat& b);

private:
    Index rows_;
    Index cols_;
    EntryMap data_;

    void check_index(Index row, Index col) const;
};

// Kronecker product with big-endian index order:
// (a kron b)[ia*b.rows + ib, ja*b.cols + jb] = a[ia,ja] * b[ib,jb].
SparseMat kron(const SparseMat& a, const SparseMat& b);

// Sparse column vector in an ambient space of dimension dim.
struct SparseVec {
    Index dim = 0;
    std::map<Index, Rat> entries;

    SparseVec() = default;
    explicit SparseVec(Index dimension) : dim(dimension) {}

    bool is_zero() const { return entries.empty(); }
    Rat at(Index i) const;
    void set(Index i, Rat value);
    void add_at(Index i, const Rat& value);

    friend bool operator==(const SparseVec& a, const SparseVec& b);
};

SparseVec column(const SparseMat& m, Index col);
// The nonzero columns of m in ascending column order; spans the image.
std::vector<SparseVec> nonzero_columns(const SparseMat& m);
SparseMat columns_to_mat(Index dim, const std::vector<SparseVec>& cols);
SparseVec mat_vec(const SparseMat& m, const SparseVec& v);

// Column-major flattening: vec(F)[col*rows + row] = F[row, col].
SparseVec vec_column_major(const SparseMat& m);
SparseMat unvec_column_major(const SparseVec& v, Index rows, Index cols);

// Scales v so its lowest-index nonzero coordinate becomes 1.
SparseVec normalize_leading(SparseVec v);

Index rank(const SparseMat& a);

// Basis of {x : a*x = 0} read off the reduced row-echelon form: free
// columns in ascending order are set to 1 one at a time, pivot coordinates
// filled by back-substitution. Deterministic.
std::vector<SparseVec> kernel_basis(const SparseMat& a);

// One solution of a*x = b with every free variable set to zero, or nullopt
// when the system is inconsistent.
std::optional<SparseVec> solve(const SparseMat& a, const SparseVec& b);

// Same convention for many right-hand sides sharing one elimination pass.
std::vector<std::optional<SparseVec>> solve_many(const SparseMat& a,
                                                 const std::vector<SparseVec>& rhs);

// Incremental row-echelon span of a set of vectors.
class RowSpan {
public:
    explicit RowSpan(Index dim);

    // Adds v to the span; returns true when the span grew.
    bool insert(const SparseVec& v);
    bool contains(const SparseVec& v) const;
    // Remainder of v after elimination against the current span.
    SparseVec reduce(const SparseVec& v) const;
    Index rank() const { return static_cast<Index>(rows_.size()); }
    Index dim() const { return dim_; }

private:
    Index dim_;
    // Echelon rows keyed by leading index; each row is sorted by index and
    // scaled to leading coefficient 1.
    std::map<Index, std::vector<std::pair<Index, Rat>>> rows_;
};

struct QuotientResult {
    Index dim = 0;
    // Members of big completing a basis of span(sub), greedily in input
    // order, each normalized to leading coordinate 1.
    std::vector<SparseVec> reps;
};

// dim(span(big)/span(sub)). Throws ContainmentError unless every vector of
// sub lies in span(big).
QuotientResult quotient_dim(const std::vector<SparseVec>& big,
                            const std::vector<SparseVec>& sub);

}  // namespace coderco
