#pragma once

// Test-only oracles, kept independent of the library's elimination path.

#include <cstdint>
#include <vector>

#include "kreg/matrix.hpp"
#include "kreg/monomial.hpp"
#include "kreg/rng.hpp"

namespace kreg::testsupport {

/// Naive textbook Gauss-Jordan rank over the scalar field: divide by the
/// pivot, eliminate everywhere, count pivots. No fraction-free tricks.
template <class S>
std::size_t naive_rank(Matrix<S> m) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && is_zero(m(p, c))) ++p;
        if (p == m.rows()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(p, j));
        S inv = S(Rat(1)) / m(r, c);
        for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || is_zero(m(i, c))) continue;
            S f = m(i, c);
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    return r;
}

/// Brute-force monomial generator: odometer over exponent boxes, filter by
/// total degree. Independent of the library's recursive enumeration.
inline std::vector<Monomial> brute_force_monomials(std::size_t n, std::uint32_t d_max) {
    std::vector<Monomial> out;
    std::vector<std::uint32_t> e(n, 0);
    for (;;) {
        std::uint64_t total = 0;
        for (auto x : e) total += x;
        if (total <= d_max) out.emplace_back(e);
        std::size_t i = 0;
        while (i < n) {
            if (e[i] < d_max) {
                ++e[i];
                for (std::size_t q = 0; q < i; ++q) e[q] = 0;
                break;
            }
            ++i;
        }
        if (i == n) break;
    }
    return out;
}

/// Random matrix with bounded-height rational entries.
inline Matrix<Rat> random_matrix(SplitMix64& g, std::size_t rows, std::size_t cols,
                                 long num_abs, long den_max) {
    Matrix<Rat> m(rows, cols);
    SamplerConfig cfg;
    cfg.num_abs = num_abs;
    cfg.den_max = den_max;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = sample_rat(g, cfg);
    return m;
}

/// Random rank-deficient matrix: product of rows x inner and inner x cols
/// factors, so the rank is at most `inner`.
inline Matrix<Rat> random_low_rank_matrix(SplitMix64& g, std::size_t rows, std::size_t cols,
                                          std::size_t inner, long num_abs, long den_max) {
    auto a = random_matrix(g, rows, inner, num_abs, den_max);
    auto b = random_matrix(g, inner, cols, num_abs, den_max);
    Matrix<Rat> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            Rat s(0);
            for (std::size_t t = 0; t < inner; ++t) s += a(i, t) * b(t, j);
            m(i, j) = s;
        }
    return m;
}

}  // namespace kreg::testsupport
