#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <span>
#include <vector>

namespace normalcx {

using BigInt = boost::multiprecision::cpp_int;
using BigVector = std::vector<BigInt>;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::initializer_list<long long> values);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntMatrix operator*(const IntMatrix& other) const;
    BigVector operator*(std::span<const BigInt> x) const;
    bool operator==(const IntMatrix&) const = default;

    IntMatrix transposed() const;
    bool is_zero() const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    /// row[dst] += factor * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const BigInt& factor);
    /// col[dst] += factor * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, const BigInt& factor);
    void negate_row(std::size_t r);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigInt> data_;
};

/// U * A * V = D with U, V unimodular and D diagonal with d1 | d2 | ... | dr > 0.
struct SmithDecomposition {
    IntMatrix U;
    IntMatrix D;
    IntMatrix V;
    /// The nonzero diagonal entries d1..dr.
    BigVector invariant_factors;
    std::size_t rank() const { return invariant_factors.size(); }
};

/// Pivots on the nonzero entry of least absolute value (lowest row, then
/// lowest column, on ties).
SmithDecomposition smith_normal_form(const IntMatrix& a);

enum class SolveStatus { Solved, NoRationalSolution, NotIntegral };

struct SolveResult {
    SolveStatus status = SolveStatus::NoRationalSolution;
    BigVector x;
    bool solved() const { return status == SolveStatus::Solved; }
};

/// One integer solution of A x = b, with free coordinates set to zero in
/// the Smith basis. Throws std::invalid_argument on a dimension mismatch.
SolveResult solve_integer(const IntMatrix& a, std::span<const BigInt> b);
SolveResult solve_integer(const SmithDecomposition& smith, std::span<const BigInt> b);

/// A lattice basis of the integer kernel.
std::vector<BigVector> kernel_basis(const IntMatrix& a);

/// Row-style Hermite normal form: nonzero rows only, positive pivots
/// strictly moving right, entries above each pivot reduced into [0, pivot).
/// Two matrices have the same row lattice iff their forms are equal.
IntMatrix hermite_normal_form(const IntMatrix& a);

/// Bareiss fraction-free determinant of a square matrix.
BigInt determinant(const IntMatrix& a);

}  // namespace normalcx
