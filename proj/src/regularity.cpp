#include "kreg/regularity.hpp"

namespace kreg {

namespace {

// Clears denominators and divides out the gcd; input must be strictly
// positive componentwise.
WeightVector minimal_integer_representative(const std::vector<Rat>& v) {
    mpz_class l(1);
    for (const auto& x : v) {
        mpz_class d = x.denominator();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    std::vector<mpz_class> ints;
    ints.reserve(v.size());
    for (const auto& x : v) {
        Rat y = x * Rat(l);
        ints.push_back(y.numerator());
    }
    mpz_class g(0);
    for (const auto& z : ints) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    std::vector<std::uint64_t> w;
    w.reserve(ints.size());
    for (auto& z : ints) {
        mpz_class q = z / g;
        if (!q.fits_ulong_p()) throw std::overflow_error("torus weights exceed 64 bits");
        w.push_back(q.get_ui());
    }
    return WeightVector(std::move(w));
}

bool strictly_positive(const std::vector<Rat>& v) {
    for (const auto& x : v)
        if (x.sign() <= 0) return false;
    return true;
}

}  // namespace

std::optional<WeightVector> find_torus_weights(const PolyMap& map) {
    const std::size_t n = map.nvars();

    // one constraint row per extra term of each component: the exponent
    // difference against the leading term must pair to zero with the weights
    std::vector<std::vector<Rat>> rows;
    for (const auto& f : map) {
        auto it = f.terms().begin();
        const Monomial& lead = it->first;
        for (++it; it != f.terms().end(); ++it) {
            std::vector<Rat> row(n, Rat(0));
            for (std::size_t i = 0; i < n; ++i)
                row[i] = Rat(static_cast<long>(lead[i]) - static_cast<long>(it->first[i]));
            rows.push_back(std::move(row));
        }
    }

    std::vector<std::vector<Rat>> kern;
    if (rows.empty()) {
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<Rat> e(n, Rat(0));
            e[i] = Rat(1);
            kern.push_back(std::move(e));
        }
    } else {
        kern = kernel_basis(Matrix<Rat>::from_rows(rows));
    }
    if (kern.empty()) return std::nullopt;

    if (kern.size() == 1) {
        auto v = kern.front();
        auto neg = v;
        for (auto& x : neg) x = -x;
        if (strictly_positive(v)) return minimal_integer_representative(v);
        if (strictly_positive(neg)) return minimal_integer_representative(neg);
        return std::nullopt;
    }

    // higher-dimensional kernel: search small integer combinations, smallest
    // max-coefficient first, lexicographic within
    constexpr long kBudget = 5;
    const std::size_t dim = kern.size();
    for (long radius = 1; radius <= kBudget; ++radius) {
        std::vector<long> a(dim, -radius);
        for (;;) {
            long maxabs = 0;
            for (auto c : a) maxabs = std::max(maxabs, c < 0 ? -c : c);
            if (maxabs == radius) {
                std::vector<Rat> v(n, Rat(0));
                for (std::size_t b = 0; b < dim; ++b) {
                    if (a[b] == 0) continue;
                    for (std::size_t i = 0; i < n; ++i) v[i] += Rat(a[b]) * kern[b][i];
                }
                if (strictly_positive(v)) return minimal_integer_representative(v);
            }
            std::size_t pos = dim;
            while (pos > 0) {
                if (a[pos - 1] < radius) {
                    ++a[pos - 1];
                    for (std::size_t q = pos; q < dim; ++q) a[q] = -radius;
                    break;
                }
                --pos;
            }
            if (pos == 0) break;
        }
    }
    return std::nullopt;
}

}  // namespace kreg
