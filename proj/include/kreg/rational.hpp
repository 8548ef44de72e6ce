#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace kreg {

/// Exact rational scalar backed by GMP. Always in lowest terms with a
/// positive denominator; the canonical zero is 0/1.
class Rat {
public:
    Rat() : q_(0) {}
    Rat(long n) : q_(n) {}  // NOLINT: implicit, integer literals are rationals
    Rat(long num, long den) : q_(num, den) { canonicalize_checked(); }
    explicit Rat(const mpz_class& z) : q_(z) {}
    explicit Rat(mpq_class q) : q_(std::move(q)) { canonicalize_checked(); }

    /// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed
    /// input or zero denominator.
    static Rat from_string(const std::string& s);

    const mpq_class& raw() const { return q_; }
    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    /// Canonical decimal form: "p" when the denominator is 1, else "p/q".
    std::string str() const { return q_.get_str(); }

    Rat operator-() const {
        Rat r;
        r.q_ = -q_;
        return r;
    }

    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw std::invalid_argument("Rat: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.q_ >= b.q_; }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) {
        return os << r.str();
    }

private:
    void canonicalize_checked() {
        if (q_.get_den() == 0) throw std::invalid_argument("Rat: zero denominator");
        q_.canonicalize();
    }

    mpq_class q_;
};

inline Rat Rat::from_string(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) {
        throw std::invalid_argument("Rat: cannot parse '" + s + "'");
    }
    if (q.get_den() == 0) throw std::invalid_argument("Rat: zero denominator in '" + s + "'");
    q.canonicalize();
    return Rat(std::move(q));
}

/// Gaussian rational a + b*i. Field arithmetic under the relation i^2 = -1;
/// used for test points that need genuinely complex coordinates.
struct GaussRat {
    Rat re;
    Rat im;

    GaussRat() = default;
    GaussRat(Rat r) : re(std::move(r)) {}  // NOLINT: implicit lift from Q
    GaussRat(long n) : re(n) {}            // NOLINT
    GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    static GaussRat i() { return GaussRat(Rat(0), Rat(1)); }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    GaussRat conj() const { return GaussRat(re, -im); }
    Rat norm() const { return re * re + im * im; }

    std::string str() const {
        if (im.is_zero()) return re.str();
        return re.str() + (im.sign() < 0 ? "" : "+") + im.str() + "i";
    }

    GaussRat operator-() const { return GaussRat(-re, -im); }

    GaussRat& operator+=(const GaussRat& o) { re += o.re; im += o.im; return *this; }
    GaussRat& operator-=(const GaussRat& o) { re -= o.re; im -= o.im; return *this; }
    GaussRat& operator*=(const GaussRat& o) {
        Rat r = re * o.re - im * o.im;
        Rat i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
    GaussRat& operator/=(const GaussRat& o) {
        if (o.is_zero()) throw std::invalid_argument("GaussRat: division by zero");
        Rat n = o.norm();
        *this *= o.conj();
        re /= n;
        im /= n;
        return *this;
    }

    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
    friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
    friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }

    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const GaussRat& g) {
        return os << g.str();
    }
};

inline bool is_zero(const Rat& x) { return x.is_zero(); }
inline bool is_zero(const GaussRat& x) { return x.is_zero(); }

/// Least common multiple of the denominators hiding in a scalar; used to
/// rescale matrix rows to integral entries before fraction-free elimination.
inline mpz_class denominator_lcm(const Rat& x) { return x.denominator(); }
inline mpz_class denominator_lcm(const GaussRat& x) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), x.re.denominator().get_mpz_t(), x.im.denominator().get_mpz_t());
    return l;
}

template <class S>
S scalar_pow(const S& base, std::uint64_t e) {
    S acc(Rat(1));
    S b = base;
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

}  // namespace kreg
