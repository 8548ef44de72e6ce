#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "kreg/rational.hpp"

namespace kreg {

/// Dense row-major matrix over an exact scalar field (Rat or GaussRat).
/// Immutable in all public algorithms; every result is computed exactly.
template <class S>
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, S(Rat(0))) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = S(Rat(1));
        return m;
    }

    static Matrix from_rows(const std::vector<std::vector<S>>& rows) {
        std::size_t r = rows.size();
        std::size_t c = r == 0 ? 0 : rows.front().size();
        Matrix m(r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c) throw std::invalid_argument("Matrix: ragged rows");
            for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    S& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const S& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    std::vector<S> apply(const std::vector<S>& x) const {
        if (x.size() != cols_) throw std::invalid_argument("Matrix::apply: size mismatch");
        std::vector<S> y(rows_, S(Rat(0)));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
        return y;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<S> a_;
};

namespace detail {

template <class S>
struct Echelon {
    Matrix<S> m;
    std::vector<std::size_t> pivot_cols;  // pivot of row r is at pivot_cols[r]
};

/// Rescales each row by the lcm of its entries' denominators so the
/// fraction-free recurrence works on (Gaussian) integers. Row scaling by a
/// nonzero constant changes neither rank nor right kernel.
template <class S>
void integerize_rows(Matrix<S>& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        mpz_class l(1);
        for (std::size_t j = 0; j < m.cols(); ++j) {
            mpz_class d = denominator_lcm(m(i, j));
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
        }
        if (l == 1) continue;
        S f{Rat(l)};
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) *= f;
    }
}

/// Forward elimination, Bareiss one-step fraction-free recurrence with
/// deterministic pivoting (first nonzero entry in column order). Divisions by
/// the previous pivot are exact on integerized input.
template <class S>
Echelon<S> fraction_free_echelon(Matrix<S> m) {
    integerize_rows(m);
    std::vector<std::size_t> pivots;
    S prev(Rat(1));
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && is_zero(m(p, c))) ++p;
        if (p == m.rows()) continue;
        if (p != r) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(p, j));
        }
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            for (std::size_t j = c + 1; j < m.cols(); ++j) {
                m(i, j) = (m(r, c) * m(i, j) - m(i, c) * m(r, j)) / prev;
            }
            m(i, c) = S(Rat(0));
        }
        prev = m(r, c);
        pivots.push_back(c);
        ++r;
    }
    // zero out the rows below the last pivot explicitly
    for (std::size_t i = r; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = S(Rat(0));
    return {std::move(m), std::move(pivots)};
}

/// Reduced row echelon form: pivots normalized to 1, zeros above pivots.
template <class S>
Echelon<S> reduced_echelon(Matrix<S> m) {
    auto ech = fraction_free_echelon(std::move(m));
    auto& a = ech.m;
    for (std::size_t r = ech.pivot_cols.size(); r-- > 0;) {
        std::size_t c = ech.pivot_cols[r];
        S inv = S(Rat(1)) / a(r, c);
        for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
        for (std::size_t i = 0; i < r; ++i) {
            S f = a(i, c);
            if (is_zero(f)) continue;
            for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
        }
    }
    return ech;
}

}  // namespace detail

/// Exact rank over the matrix's scalar field.
template <class S>
std::size_t rank(const Matrix<S>& m) {
    return detail::fraction_free_echelon(m).pivot_cols.size();
}

/// Basis of the right null space in the reduced-echelon convention: one
/// vector per free column, that free variable set to 1, pivots solved.
/// Empty exactly when rank equals the column count.
template <class S>
std::vector<std::vector<S>> kernel_basis(const Matrix<S>& m) {
    auto ech = detail::reduced_echelon(m);
    std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto c : ech.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<S>> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<S> v(n, S(Rat(0)));
        v[f] = S(Rat(1));
        for (std::size_t r = 0; r < ech.pivot_cols.size(); ++r) {
            v[ech.pivot_cols[r]] = -ech.m(r, f);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

/// One exact solution of M x = b with free variables pinned to 0, or nullopt
/// when the system is inconsistent.
template <class S>
std::optional<std::vector<S>> solve_particular(const Matrix<S>& m, const std::vector<S>& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve_particular: rhs length mismatch");
    Matrix<S> aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    auto ech = detail::reduced_echelon(std::move(aug));
    std::vector<S> x(m.cols(), S(Rat(0)));
    for (std::size_t r = 0; r < ech.pivot_cols.size(); ++r) {
        if (ech.pivot_cols[r] == m.cols()) return std::nullopt;  // pivot in the rhs column
        x[ech.pivot_cols[r]] = ech.m(r, m.cols());
    }
    return x;
}

}  // namespace kreg
