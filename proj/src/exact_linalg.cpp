#include "normalcx/exact_linalg.hpp"

#include <optional>
#include <stdexcept>
#include <utility>

namespace normalcx {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::initializer_list<long long> values)
    : IntMatrix(rows, cols) {
    if (values.size() != rows * cols) throw std::invalid_argument("IntMatrix: wrong number of entries");
    std::size_t k = 0;
    for (long long v : values) data_[k++] = v;
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
    return out;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("IntMatrix: dimension mismatch in product");
    IntMatrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const BigInt& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
        }
    return out;
}

BigVector IntMatrix::operator*(std::span<const BigInt> x) const {
    if (x.size() != cols_) throw std::invalid_argument("IntMatrix: dimension mismatch in product");
    BigVector y(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
    return y;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

bool IntMatrix::is_zero() const {
    for (const auto& x : data_)
        if (x != 0) return false;
    return true;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const BigInt& factor) {
    if (factor == 0) return;
    for (std::size_t j = 0; j < cols_; ++j)
        if ((*this)(src, j) != 0) (*this)(dst, j) += factor * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const BigInt& factor) {
    if (factor == 0) return;
    for (std::size_t i = 0; i < rows_; ++i)
        if ((*this)(i, src) != 0) (*this)(i, dst) += factor * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t r) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
}

namespace {

std::optional<std::pair<std::size_t, std::size_t>> least_pivot(const IntMatrix& d, std::size_t t) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    BigInt best_abs;
    for (std::size_t i = t; i < d.rows(); ++i)
        for (std::size_t j = t; j < d.cols(); ++j) {
            if (d(i, j) == 0) continue;
            BigInt a = abs(d(i, j));
            if (!best || a < best_abs) {
                best = {i, j};
                best_abs = std::move(a);
            }
        }
    return best;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if ((a - q * b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
    const std::size_t m = a.rows(), n = a.cols();
    SmithDecomposition out{IntMatrix::identity(m), a, IntMatrix::identity(n), {}};
    IntMatrix& d = out.D;

    for (std::size_t t = 0; t < std::min(m, n); ++t) {
        bool finished = false;
        while (true) {
            auto pivot = least_pivot(d, t);
            if (!pivot) {
                finished = true;
                break;
            }
            d.swap_rows(t, pivot->first);
            out.U.swap_rows(t, pivot->first);
            d.swap_cols(t, pivot->second);
            out.V.swap_cols(t, pivot->second);

            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (d(i, t) == 0) continue;
                BigInt q = d(i, t) / d(t, t);
                d.add_row_multiple(i, t, -q);
                out.U.add_row_multiple(i, t, -q);
                if (d(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (d(t, j) == 0) continue;
                BigInt q = d(t, j) / d(t, t);
                d.add_col_multiple(j, t, -q);
                out.V.add_col_multiple(j, t, -q);
                if (d(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // The pivot must divide the whole remaining block.
            std::optional<std::size_t> offending_row;
            for (std::size_t i = t + 1; i < m && !offending_row; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        offending_row = i;
                        break;
                    }
            if (!offending_row) break;
            d.add_row_multiple(t, *offending_row, 1);
            out.U.add_row_multiple(t, *offending_row, 1);
        }
        if (finished) break;
        if (d(t, t) < 0) {
            d.negate_row(t);
            out.U.negate_row(t);
        }
        out.invariant_factors.push_back(d(t, t));
    }
    return out;
}

SolveResult solve_integer(const SmithDecomposition& smith, std::span<const BigInt> b) {
    const std::size_t m = smith.D.rows(), n = smith.D.cols(), r = smith.rank();
    if (b.size() != m) throw std::invalid_argument("solve_integer: right-hand side has wrong length");
    BigVector c = smith.U * b;
    for (std::size_t i = r; i < m; ++i)
        if (c[i] != 0) return {SolveStatus::NoRationalSolution, {}};
    BigVector y(n);
    bool integral = true;
    for (std::size_t i = 0; i < r; ++i) {
        if (c[i] % smith.invariant_factors[i] != 0) integral = false;
        y[i] = c[i] / smith.invariant_factors[i];
    }
    if (!integral) return {SolveStatus::NotIntegral, {}};
    return {SolveStatus::Solved, smith.V * std::span<const BigInt>(y)};
}

SolveResult solve_integer(const IntMatrix& a, std::span<const BigInt> b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve_integer: right-hand side has wrong length");
    return solve_integer(smith_normal_form(a), b);
}

std::vector<BigVector> kernel_basis(const IntMatrix& a) {
    const SmithDecomposition s = smith_normal_form(a);
    std::vector<BigVector> out;
    for (std::size_t j = s.rank(); j < a.cols(); ++j) {
        BigVector v(a.cols());
        for (std::size_t i = 0; i < a.cols(); ++i) v[i] = s.V(i, j);
        out.push_back(std::move(v));
    }
    return out;
}

IntMatrix hermite_normal_form(const IntMatrix& a) {
    IntMatrix h = a;
    const std::size_t m = h.rows(), n = h.cols();
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        while (true) {
            std::optional<std::size_t> best;
            for (std::size_t i = row; i < m; ++i)
                if (h(i, col) != 0 && (!best || abs(h(i, col)) < abs(h(*best, col)))) best = i;
            if (!best) break;
            h.swap_rows(row, *best);
            bool clean = true;
            for (std::size_t i = row + 1; i < m; ++i) {
                if (h(i, col) == 0) continue;
                h.add_row_multiple(i, row, -(h(i, col) / h(row, col)));
                if (h(i, col) != 0) clean = false;
            }
            if (clean) break;
        }
        if (h(row, col) == 0) continue;
        if (h(row, col) < 0) h.negate_row(row);
        for (std::size_t i = 0; i < row; ++i) h.add_row_multiple(i, row, -floor_div(h(i, col), h(row, col)));
        ++row;
    }
    IntMatrix out(row, n);
    for (std::size_t i = 0; i < row; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = h(i, j);
    return out;
}

BigInt determinant(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    IntMatrix m = a;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t swap_with = k;
            for (std::size_t i = k + 1; i < n; ++i)
                if (m(i, k) != 0) {
                    swap_with = i;
                    break;
                }
            if (swap_with == k) return 0;
            m.swap_rows(k, swap_with);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

}  // namespace normalcx
