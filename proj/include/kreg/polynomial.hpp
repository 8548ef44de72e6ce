#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "kreg/monomial.hpp"
#include "kreg/rational.hpp"

namespace kreg {

/// Strictly positive integer weights, one per variable, for the torus action
/// that rescales coordinate i by lambda^{w_i}.
class WeightVector {
public:
    explicit WeightVector(std::vector<std::uint64_t> w) : w_(std::move(w)) {
        if (w_.empty()) throw std::invalid_argument("WeightVector: empty");
        for (auto x : w_)
            if (x == 0) throw std::invalid_argument("WeightVector: weights must be positive");
    }

    std::size_t size() const { return w_.size(); }
    std::uint64_t operator[](std::size_t i) const { return w_[i]; }
    const std::vector<std::uint64_t>& values() const { return w_; }

    friend bool operator==(const WeightVector& a, const WeightVector& b) { return a.w_ == b.w_; }

private:
    std::vector<std::uint64_t> w_;
};

/// Sparse multivariate polynomial over Q. Terms are kept in a map ordered
/// leading-term-first (graded lex), which doubles as the canonical
/// serialization order. No zero coefficient is ever stored.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rat, GrlexLeadFirst>;

    explicit Polynomial(std::size_t nvars) : n_(nvars) {
        if (n_ == 0) throw std::invalid_argument("Polynomial: need at least one variable");
    }

    static Polynomial zero(std::size_t n) { return Polynomial(n); }

    static Polynomial constant(std::size_t n, Rat c) {
        Polynomial p(n);
        p.add_term(Monomial::constant(n), std::move(c));
        return p;
    }

    static Polynomial monomial(std::size_t n, Monomial m, Rat c = Rat(1)) {
        Polynomial p(n);
        if (m.nvars() != n) throw std::invalid_argument("Polynomial: monomial arity mismatch");
        p.add_term(std::move(m), std::move(c));
        return p;
    }

    static Polynomial variable(std::size_t n, std::size_t i) {
        return monomial(n, Monomial::variable(n, i));
    }

    std::size_t nvars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /// Total degree of the leading term. Undefined for the zero polynomial.
    std::uint64_t degree() const {
        if (is_zero()) throw std::invalid_argument("Polynomial: degree of zero polynomial");
        return terms_.begin()->first.degree();
    }

    const Monomial& leading_monomial() const {
        if (is_zero()) throw std::invalid_argument("Polynomial: zero polynomial has no leading term");
        return terms_.begin()->first;
    }

    Rat coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    /// Accumulates c * m, dropping the term if the sum cancels.
    void add_term(Monomial m, Rat c) {
        if (m.nvars() != n_) throw std::invalid_argument("Polynomial: term arity mismatch");
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(std::move(m), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Polynomial operator-() const {
        Polynomial r(n_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) {
        check_same_ring(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        check_same_ring(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    Polynomial& operator*=(const Rat& c) {
        if (c.is_zero()) {
            terms_.clear();
        } else {
            for (auto& [m, v] : terms_) v *= c;
        }
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rat& c) { return a *= c; }
    friend Polynomial operator*(const Rat& c, Polynomial a) { return a *= c; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_same_ring(b);
        Polynomial r(a.n_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Exact evaluation at a point with coordinates in S (Rat or GaussRat).
    template <class S>
    S eval(const std::vector<S>& point) const {
        if (point.size() != n_)
            throw std::invalid_argument("Polynomial::eval: point length mismatch");
        S acc(Rat(0));
        for (const auto& [m, c] : terms_) {
            S t(c);
            for (std::size_t i = 0; i < n_; ++i) {
                if (m[i] != 0) t *= scalar_pow(point[i], m[i]);
            }
            acc += t;
        }
        return acc;
    }

    std::string str(const std::vector<std::string>& names = {}) const;

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
        return os << p.str();
    }

private:
    void check_same_ring(const Polynomial& o) const {
        if (n_ != o.n_) throw std::invalid_argument("Polynomial: variable count mismatch");
    }

    std::size_t n_;
    TermMap terms_;
};

/// Common weighted degree of all terms under w, or nullopt when the terms
/// disagree (the polynomial is inhomogeneous for this weighting). The zero
/// polynomial has no degree and is rejected; callers treat it as vacuously
/// homogeneous.
inline std::optional<std::uint64_t> weighted_degree(const Polynomial& p, const WeightVector& w) {
    if (w.size() != p.nvars())
        throw std::invalid_argument("weighted_degree: weight length mismatch");
    if (p.is_zero()) throw std::invalid_argument("weighted_degree: zero polynomial");
    std::optional<std::uint64_t> deg;
    for (const auto& [m, c] : p.terms()) {
        std::uint64_t d = 0;
        for (std::size_t i = 0; i < w.size(); ++i) d += w[i] * m[i];
        if (!deg) {
            deg = d;
        } else if (*deg != d) {
            return std::nullopt;
        }
    }
    return deg;
}

/// Ordered list of N nonzero polynomial components in a common variable set.
/// Component order is part of the identity: it fixes the column order of
/// evaluation matrices and the canonical serialization.
class PolyMap {
public:
    PolyMap(std::size_t nvars, std::vector<Polynomial> components)
        : n_(nvars), comps_(std::move(components)) {
        if (n_ == 0) throw std::invalid_argument("PolyMap: need at least one variable");
        if (comps_.empty()) throw std::invalid_argument("PolyMap: need at least one component");
        for (const auto& c : comps_) {
            if (c.nvars() != n_) throw std::invalid_argument("PolyMap: component arity mismatch");
            if (c.is_zero()) throw std::invalid_argument("PolyMap: zero component rejected");
        }
    }

    std::size_t nvars() const { return n_; }
    std::size_t size() const { return comps_.size(); }
    const Polynomial& operator[](std::size_t i) const { return comps_[i]; }
    const std::vector<Polynomial>& components() const { return comps_; }

    auto begin() const { return comps_.begin(); }
    auto end() const { return comps_.end(); }

    template <class S>
    std::vector<S> eval(const std::vector<S>& point) const {
        std::vector<S> out;
        out.reserve(comps_.size());
        for (const auto& f : comps_) out.push_back(f.template eval<S>(point));
        return out;
    }

    friend bool operator==(const PolyMap& a, const PolyMap& b) {
        return a.n_ == b.n_ && a.comps_ == b.comps_;
    }

private:
    std::size_t n_;
    std::vector<Polynomial> comps_;
};

}  // namespace kreg
