#pragma once

#include "pathhom/integer.hpp"
#include "pathhom/ring.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pathhom {

/// Dense row-major matrix. All matrices in this library are small (a few
/// hundred columns at most), so dense storage is the interface.
template <class T>
class BasicMatrix {
public:
    BasicMatrix() = default;
    BasicMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

    static BasicMatrix identity(std::size_t n) {
        BasicMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<T> column(std::size_t c) const {
        std::vector<T> out(rows_);
        for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
        return out;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
    }

    bool is_zero() const {
        for (const auto& v : data_)
            if (!(v == T(0))) return false;
        return true;
    }

    friend bool operator==(const BasicMatrix& a, const BasicMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using Matrix = BasicMatrix<Integer>;

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& m);
/// Columns [first, first + count) of m.
Matrix column_block(const Matrix& m, std::size_t first, std::size_t count);
Matrix from_rows(const std::vector<std::vector<long long>>& rows);
std::string to_string(const Matrix& m);

/// Column Hermite normal form H = M * U with U unimodular.
///
/// H is lower echelon: column j < rank has its first nonzero entry at
/// pivot_rows[j] (strictly increasing), that entry is positive, and entries of
/// earlier columns in a pivot row are reduced into [0, pivot). Columns
/// rank..cols-1 of H are zero, so the matching columns of U span ker M.
struct HermiteDecomposition {
    Matrix hermite;
    Matrix transform;
    std::vector<std::size_t> pivot_rows;

    std::size_t rank() const { return pivot_rows.size(); }
    Matrix kernel_columns() const;
};

HermiteDecomposition hnf(const Matrix& m);

/// Canonical basis (column HNF) of the saturated lattice ker M ∩ Z^cols.
/// Saturation of the result is checked on every call.
Matrix integer_kernel(const Matrix& m);

/// Z^rows / (column lattice) is torsion free. Columns must be independent.
bool is_saturated(const Matrix& basis);

/// U * M * V = S with S diagonal, d_1 | d_2 | ... | d_r, all positive.
struct SmithDecomposition {
    Matrix left;      // U, rows x rows
    Matrix right;     // V, cols x cols
    Matrix diagonal;  // S, same shape as M
    std::vector<Integer> invariant_factors;

    std::size_t rank() const { return invariant_factors.size(); }
};

SmithDecomposition snf(const Matrix& m);

/// Some integer x with B x = y, or nullopt when none exists.
std::optional<std::vector<Integer>> integer_solve(const Matrix& b, std::span<const Integer> y);

/// Fraction-free (Bareiss) elimination; no HNF/SNF involved.
std::size_t rational_rank(const Matrix& m);
/// Primitive integer columns spanning ker M over Q.
Matrix rational_kernel(const Matrix& m);

std::size_t modular_rank(const Matrix& m, std::uint64_t p);
/// Columns with entries in [0, p) spanning ker M over F_p.
Matrix modular_kernel(const Matrix& m, std::uint64_t p);

/// Rank / kernel over a field ring (Rationals or PrimeField).
std::size_t field_rank(const Matrix& m, const Ring& ring);
Matrix field_kernel(const Matrix& m, const Ring& ring);

using SparseVector = std::vector<std::pair<std::size_t, Integer>>;

/// A lattice given by columns already in column Hermite form, kept sparse.
/// Solving is substitution along the pivot rows.
class EchelonLattice {
public:
    EchelonLattice() = default;
    /// Columns must be sorted by index, nonzero, with strictly increasing first indices.
    EchelonLattice(std::size_t ambient_dim, std::vector<SparseVector> columns);

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t rank() const { return columns_.size(); }
    const std::vector<SparseVector>& columns() const { return columns_; }
    std::size_t pivot_row(std::size_t j) const { return columns_[j].front().first; }

    std::optional<std::vector<Integer>> solve(const SparseVector& y) const;
    Matrix to_matrix() const;

private:
    std::size_t ambient_dim_ = 0;
    std::vector<SparseVector> columns_;
};

/// Turns a dense matrix in column echelon form into sparse columns.
std::vector<SparseVector> sparse_columns(const Matrix& m);

/// Every hnf/snf call multiplies its certificate back out (H == M U,
/// U M V == S). These counters record how many were checked and how many
/// failed; a failure also throws Error(InternalConsistency).
struct CertificateStats {
    std::uint64_t hnf_checked = 0;
    std::uint64_t snf_checked = 0;
    std::uint64_t saturation_checked = 0;
    std::uint64_t failures = 0;
};

CertificateStats certificate_stats();
void reset_certificate_stats();

}  // namespace pathhom
