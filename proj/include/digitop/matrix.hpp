#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace digitop {

/// Exact arbitrary-precision integer scalar.
using BigInt = mpz_class;

/// Narrowing helper; throws OverflowError when the value does not fit.
std::int64_t to_int64(const BigInt& v);

/// Dense exact-integer matrix.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols) {}

    static IntegerMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    BigInt& at(int i, int j) { return data_[index(i, j)]; }
    const BigInt& at(int i, int j) const { return data_[index(i, j)]; }

    IntegerMatrix operator*(const IntegerMatrix& other) const;
    IntegerMatrix operator+(const IntegerMatrix& other) const;
    IntegerMatrix operator-(const IntegerMatrix& other) const;
    IntegerMatrix operator-() const;
    bool operator==(const IntegerMatrix& other) const = default;

    bool is_zero() const;
    IntegerMatrix transposed() const;

    void swap_rows(int a, int b);
    void swap_cols(int a, int b);
    void negate_row(int i);
    void negate_col(int j);
    /// row[i] += c * row[s]
    void add_row_multiple(int i, int s, const BigInt& c);
    /// col[j] += c * col[s]
    void add_col_multiple(int j, int s, const BigInt& c);

    /// Columns selected by index list, in the given order.
    IntegerMatrix select_cols(const std::vector<int>& idx) const;
    IntegerMatrix select_rows(const std::vector<int>& idx) const;

private:
    std::size_t index(int i, int j) const;
    int rows_ = 0;
    int cols_ = 0;
    std::vector<BigInt> data_;
};

/// U * M * V = D with D diagonal, each diagonal entry nonnegative and
/// dividing the next, U and V unimodular. Uinv and Vinv are the exact
/// inverses, maintained alongside.
struct SmithResult {
    IntegerMatrix U, Uinv, D, V, Vinv;
    int rank = 0;
    std::vector<BigInt> diagonal() const;
};

SmithResult smith_normal_form(const IntegerMatrix& M);

/// One integer solution x of A x = b (b a column vector), or nullopt when
/// no integral solution exists. Used as an independent boundary oracle.
std::optional<IntegerMatrix> solve_integer(const IntegerMatrix& A, const IntegerMatrix& b);

} // namespace digitop
