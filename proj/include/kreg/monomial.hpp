#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace kreg {

/// Exponent vector of a monomial in a fixed number of variables.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

    static Monomial constant(std::size_t n) { return Monomial(std::vector<std::uint32_t>(n, 0)); }

    static Monomial variable(std::size_t n, std::size_t i, std::uint32_t power = 1) {
        if (i >= n) throw std::invalid_argument("Monomial: variable index out of range");
        std::vector<std::uint32_t> e(n, 0);
        e[i] = power;
        return Monomial(std::move(e));
    }

    std::size_t nvars() const { return exps_.size(); }

    std::uint64_t degree() const {
        return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
    }

    std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
    const std::vector<std::uint32_t>& exps() const { return exps_; }

    bool is_constant() const { return degree() == 0; }

    /// True when exactly one exponent is nonzero (x_i^a with a >= 1).
    bool is_pure_power() const {
        int nonzero = 0;
        for (auto e : exps_)
            if (e != 0) ++nonzero;
        return nonzero == 1;
    }

    bool divides(const Monomial& other) const {
        if (nvars() != other.nvars()) return false;
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > other.exps_[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& o) const {
        if (nvars() != o.nvars()) throw std::invalid_argument("Monomial: variable count mismatch");
        std::vector<std::uint32_t> e(exps_);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += o.exps_[i];
        return Monomial(std::move(e));
    }

    /// Componentwise difference other/this; requires divides(other).
    Monomial quotient_of(const Monomial& other) const {
        if (!divides(other)) throw std::invalid_argument("Monomial: quotient not divisible");
        std::vector<std::uint32_t> e(other.exps_);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] -= exps_[i];
        return Monomial(std::move(e));
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

    std::string str(const std::vector<std::string>& names = {}) const;

    friend std::ostream& operator<<(std::ostream& os, const Monomial& m) { return os << m.str(); }

private:
    std::vector<std::uint32_t> exps_;
};

/// Graded lexicographic enumeration order: lower total degree first; within a
/// degree, lexicographically larger exponent vector first (x_1 > x_2 > ...).
/// This is the order monomial lists and map components are emitted in.
inline bool grlex_enum_less(const Monomial& a, const Monomial& b) {
    std::uint64_t da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.exps() > b.exps();  // lexicographically larger vector enumerates first
}

/// Leading-term-first order for polynomial term storage: higher degree first,
/// then lexicographically larger exponent vector. begin() of a term map is
/// the graded-lex leading term.
struct GrlexLeadFirst {
    bool operator()(const Monomial& a, const Monomial& b) const {
        std::uint64_t da = a.degree(), db = b.degree();
        if (da != db) return da > db;
        return a.exps() > b.exps();
    }
};

/// All monomials in n variables of total degree <= d_max, constant included,
/// in graded lexicographic enumeration order. Throws for n = 0.
std::vector<Monomial> enumerate_monomials(std::size_t n, std::uint32_t d_max);

/// All monomials of total degree exactly d, lexicographically descending.
std::vector<Monomial> enumerate_monomials_exact(std::size_t n, std::uint32_t d);

}  // namespace kreg
