#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "dodgson/scalar.hpp"

namespace dodgson {

/// Rows and columns to delete, 1-based, kept sorted. Duplicates are rejected;
/// bounds are checked against the matrix at use time.
class MinorSpec {
public:
    MinorSpec(std::vector<int> removed_rows, std::vector<int> removed_cols);
    const std::vector<int>& removed_rows() const { return rows_; }
    const std::vector<int>& removed_cols() const { return cols_; }

private:
    std::vector<int> rows_;
    std::vector<int> cols_;
};

/// Dense matrix over one exact domain. Indexing is 1-based at the interface,
/// matching the usual a_{i,j} convention.
class Matrix {
public:
    Matrix(RingDomain domain, int rows, int cols);  // zero-filled
    static Matrix identity(const RingDomain& d, int n);
    /// Convenience builder from integer literals, embedded into the domain.
    static Matrix from_ints(const RingDomain& d,
                            std::initializer_list<std::initializer_list<long>> rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }
    /// Side length; throws unless square.
    int n() const;
    const RingDomain& domain() const { return domain_; }

    const Scalar& at(int i, int j) const;  // 1-based
    void set(int i, int j, Scalar v);      // 1-based, domain-checked

    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    /// FNV-1a content hash over domain, shape and entries.
    std::uint64_t digest() const;

private:
    RingDomain domain_;
    int rows_, cols_;
    std::vector<Scalar> entries_;
};

/// Deletes the listed rows and columns, keeping the rest in order.
Matrix minor(const Matrix& A, const MinorSpec& spec);
Matrix minor(const Matrix& A, std::vector<int> removed_rows, std::vector<int> removed_cols);

/// Strips the first and last row and column (the condensation divisor block).
Matrix interior(const Matrix& A);

Matrix swap_rows(const Matrix& A, int r1, int r2);
Matrix scale_row(const Matrix& A, int r, const Scalar& c);

/// Determinant by recursive first-row Laplace expansion. Independent
/// reference path, kept simple on purpose; refuses n > max_n.
Scalar det_cofactor(const Matrix& A, int max_n = 10);

/// Determinant by fraction-free (Bareiss) elimination over integers and
/// rationals; over a prime field this is plain pivoted Gaussian elimination,
/// where fraction-free bookkeeping buys nothing.
Scalar det_bareiss(const Matrix& A);

/// The (n-2)x(n-2) matrix keeping rows 1..n-3 and n, columns 1..n-3, with
/// column n-k of A appended as the last column. Requires n >= 4, 0 <= k <= n-1.
/// For k >= 3 the appended column repeats column n-k, so the determinant is 0.
Matrix build_A_k(const Matrix& A, int k);

/// A with row n overwritten by a copy of row n-l. Requires n >= 2,
/// 0 <= l <= n-1. l = 0 returns A itself; any other l duplicates a row.
Matrix build_B_l(const Matrix& A, int l);

}  // namespace dodgson
