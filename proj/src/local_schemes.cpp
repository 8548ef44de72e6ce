#include "kreg/local_schemes.hpp"

#include <algorithm>
#include <stdexcept>

namespace kreg {

FiniteLocalAlgebra FiniteLocalAlgebra::curvilinear(std::uint32_t k) {
    if (k < 1) throw std::invalid_argument("curvilinear: need k >= 1");
    FiniteLocalAlgebra a;
    a.kind_ = AlgebraKind::curvilinear;
    a.k_ = k;
    a.nvars_ = 1;
    for (std::uint32_t d = 0; d < k; ++d) a.basis_.push_back(Monomial({d}));
    for (std::size_t i = 0; i < a.basis_.size(); ++i) a.basis_index_.emplace(a.basis_[i], i);
    return a;
}

FiniteLocalAlgebra FiniteLocalAlgebra::special(std::uint32_t k) {
    if (k < 4) throw std::invalid_argument("special: need k >= 4");
    FiniteLocalAlgebra a;
    a.kind_ = AlgebraKind::special;
    a.k_ = k;
    a.nvars_ = 2;
    for (std::uint32_t d = 0; d <= k - 2; ++d) a.basis_.push_back(Monomial({d, 0}));
    a.basis_.push_back(Monomial({0, 1}));  // y
    for (std::size_t i = 0; i < a.basis_.size(); ++i) a.basis_index_.emplace(a.basis_[i], i);
    return a;
}

FiniteLocalAlgebra FiniteLocalAlgebra::monomial_quotient(std::size_t nvars,
                                                         std::vector<Monomial> generators) {
    if (nvars == 0) throw std::invalid_argument("monomial_quotient: need at least one variable");
    std::vector<std::uint32_t> bound(nvars, 0);
    for (const auto& g : generators) {
        if (g.nvars() != nvars)
            throw std::invalid_argument("monomial_quotient: generator arity mismatch");
        if (g.is_constant())
            throw std::invalid_argument("monomial_quotient: constant generator gives zero algebra");
    }
    // finite iff each variable has a pure-power generator
    for (std::size_t i = 0; i < nvars; ++i) {
        std::uint32_t best = 0;
        for (const auto& g : generators) {
            if (g.is_pure_power() && g[i] > 0) best = best == 0 ? g[i] : std::min(best, g[i]);
        }
        if (best == 0)
            throw std::invalid_argument(
                "monomial_quotient: not finite, variable x" + std::to_string(i + 1) +
                " has no pure-power generator");
        bound[i] = best;
    }
    FiniteLocalAlgebra a;
    a.kind_ = AlgebraKind::monomial_quotient;
    a.nvars_ = nvars;
    a.generators_ = std::move(generators);
    std::uint32_t dmax = 0;
    for (auto b : bound) dmax += b - 1;
    for (auto& m : enumerate_monomials(nvars, dmax)) {
        bool in_ideal = false;
        for (const auto& g : a.generators_) in_ideal = in_ideal || g.divides(m);
        if (!in_ideal) a.basis_.push_back(m);
    }
    for (std::size_t i = 0; i < a.basis_.size(); ++i) a.basis_index_.emplace(a.basis_[i], i);
    return a;
}

std::optional<std::size_t> FiniteLocalAlgebra::reduce(const Monomial& product) const {
    switch (kind_) {
        case AlgebraKind::curvilinear:
            return product[0] < k_ ? std::optional<std::size_t>(product[0]) : std::nullopt;
        case AlgebraKind::special: {
            std::uint32_t ex = product[0], ey = product[1];
            // rewrite y^2 -> x^{k-2}, then xy -> 0, then truncate x^{k-1} -> 0
            while (ey >= 2) {
                ey -= 2;
                ex += k_ - 2;
            }
            if (ex > 0 && ey > 0) return std::nullopt;
            if (ey == 1) return dim() - 1;  // y is the last basis element
            if (ex <= k_ - 2) return ex;
            return std::nullopt;
        }
        case AlgebraKind::monomial_quotient: {
            for (const auto& g : generators_)
                if (g.divides(product)) return std::nullopt;
            auto it = basis_index_.find(product);
            if (it == basis_index_.end())
                throw std::logic_error("monomial_quotient: normal form outside basis");
            return it->second;
        }
    }
    throw std::logic_error("bad AlgebraKind");
}

std::optional<std::size_t> FiniteLocalAlgebra::mul_basis(std::size_t i, std::size_t j) const {
    return reduce(basis_[i] * basis_[j]);
}

std::string FiniteLocalAlgebra::str() const {
    switch (kind_) {
        case AlgebraKind::curvilinear: return "curvilinear:" + std::to_string(k_);
        case AlgebraKind::special: return "special:" + std::to_string(k_);
        case AlgebraKind::monomial_quotient: {
            std::string s = "monomial:";
            for (std::size_t i = 0; i < generators_.size(); ++i) {
                if (i) s += ",";
                s += generators_[i].str();
            }
            return s;
        }
    }
    throw std::logic_error("bad AlgebraKind");
}

AlgebraElement algebra_zero(const FiniteLocalAlgebra& a) {
    return {std::vector<Rat>(a.dim(), Rat(0))};
}

AlgebraElement algebra_one(const FiniteLocalAlgebra& a) {
    auto e = algebra_zero(a);
    e.coords[0] = Rat(1);
    return e;
}

AlgebraElement algebra_basis_element(const FiniteLocalAlgebra& a, std::size_t i) {
    auto e = algebra_zero(a);
    e.coords.at(i) = Rat(1);
    return e;
}

namespace {

void check_element(const FiniteLocalAlgebra& a, const AlgebraElement& x) {
    if (x.coords.size() != a.dim())
        throw std::invalid_argument("algebra element has wrong dimension");
}

}  // namespace

AlgebraElement algebra_add(const FiniteLocalAlgebra& a, const AlgebraElement& x,
                           const AlgebraElement& y) {
    check_element(a, x);
    check_element(a, y);
    AlgebraElement r = x;
    for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += y.coords[i];
    return r;
}

AlgebraElement algebra_scale(const FiniteLocalAlgebra& a, const Rat& c, const AlgebraElement& x) {
    check_element(a, x);
    AlgebraElement r = x;
    for (auto& v : r.coords) v *= c;
    return r;
}

AlgebraElement algebra_mul(const FiniteLocalAlgebra& a, const AlgebraElement& x,
                           const AlgebraElement& y) {
    check_element(a, x);
    check_element(a, y);
    AlgebraElement r = algebra_zero(a);
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (x.coords[i].is_zero()) continue;
        for (std::size_t j = 0; j < a.dim(); ++j) {
            if (y.coords[j].is_zero()) continue;
            if (auto t = a.mul_basis(i, j)) r.coords[*t] += x.coords[i] * y.coords[j];
        }
    }
    return r;
}

Embedding::Embedding(FiniteLocalAlgebra alg, std::vector<AlgebraElement> imgs)
    : algebra(std::move(alg)), images(std::move(imgs)) {
    if (images.empty()) throw std::invalid_argument("Embedding: need at least one image");
    for (const auto& im : images) {
        if (im.coords.size() != algebra.dim())
            throw std::invalid_argument("Embedding: image dimension mismatch");
        if (!im.coords[0].is_zero())
            throw std::invalid_argument(
                "Embedding: images must lie in the maximal ideal (zero constant term)");
    }
}

AlgebraElement push_polynomial(const Embedding& e, const Polynomial& p) {
    if (p.nvars() != e.images.size())
        throw std::invalid_argument("push_polynomial: variable count mismatch");
    const auto& a = e.algebra;
    AlgebraElement acc = algebra_zero(a);
    for (const auto& [m, c] : p.terms()) {
        AlgebraElement t = algebra_one(a);
        for (std::size_t i = 0; i < p.nvars(); ++i) {
            for (std::uint32_t rep = 0; rep < m[i]; ++rep) {
                t = algebra_mul(a, t, e.images[i]);
                if (t.is_zero()) break;
            }
            if (t.is_zero()) break;
        }
        acc = algebra_add(a, acc, algebra_scale(a, c, t));
    }
    return acc;
}

HilbertFn hilbert_function(const FiniteLocalAlgebra& a) {
    // Spanning sets of m^i as coefficient rows; dim m^i via exact rank.
    std::vector<std::vector<Rat>> span;
    for (std::size_t i = 1; i < a.dim(); ++i)
        span.push_back(algebra_basis_element(a, i).coords);

    HilbertFn h;
    std::size_t prev = a.dim();  // dim m^0 = dim A
    while (true) {
        std::size_t cur = span.empty() ? 0 : rank(Matrix<Rat>::from_rows(span));
        h.values.push_back(prev - cur);
        if (cur == 0) break;
        prev = cur;
        // m^{i+1} spanned by products of m^i spanning vectors with the
        // maximal-ideal basis monomials
        std::vector<std::vector<Rat>> next;
        for (const auto& row : span) {
            AlgebraElement u{row};
            for (std::size_t b = 1; b < a.dim(); ++b) {
                auto prod = algebra_mul(a, u, algebra_basis_element(a, b));
                if (!prod.is_zero()) next.push_back(std::move(prod.coords));
            }
        }
        span = std::move(next);
    }
    h.trim();
    return h;
}

std::vector<int> check_hilbert_properties(const HilbertFn& h, std::uint64_t length,
                                          bool gorenstein) {
    std::vector<int> violated;
    const auto& v = h.values;

    bool seen_zero = false, zeros_terminal = true;
    for (auto x : v) {
        if (x == 0) seen_zero = true;
        else if (seen_zero) zeros_terminal = false;
    }
    if (!zeros_terminal) violated.push_back(1);

    if (v.empty() || v[0] != 1) violated.push_back(2);

    // (3) finite support holds for any finite sequence

    if (h.sum() != length) violated.push_back(4);

    if (gorenstein) {
        std::uint64_t last = 0;
        for (auto x : v)
            if (x != 0) last = x;
        if (last != 1) violated.push_back(5);
    }

    if (v.size() > 1 && v[1] == 1) {
        for (auto x : v)
            if (x > 1) {
                violated.push_back(6);
                break;
            }
    }
    return violated;
}

Polynomial contract(const Monomial& op, const Polynomial& f) {
    if (op.nvars() != f.nvars()) throw std::invalid_argument("contract: arity mismatch");
    Polynomial out(f.nvars());
    for (const auto& [m, c] : f.terms()) {
        if (!op.divides(m)) continue;
        mpz_class factor(1);
        for (std::size_t i = 0; i < m.nvars(); ++i) {
            for (std::uint32_t t = 0; t < op[i]; ++t) factor *= m[i] - t;  // falling factorial
        }
        out.add_term(op.quotient_of(m), c * Rat(factor));
    }
    return out;
}

std::vector<Polynomial> apolar_annihilator(const Polynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("apolar_annihilator: zero polynomial");
    const std::size_t n = f.nvars();
    const std::uint64_t dmax = f.degree() + 1;

    std::vector<Polynomial> gens;
    for (std::uint32_t d = 1; d <= dmax; ++d) {
        auto ops = enumerate_monomials_exact(n, d);

        // kernel of the contraction pairing on degree-d operators
        std::map<Monomial, std::size_t, GrlexLeadFirst> row_index;
        std::vector<Polynomial> images;
        images.reserve(ops.size());
        for (const auto& op : ops) {
            Polynomial img = contract(op, f);
            for (const auto& [m, c] : img.terms()) row_index.try_emplace(m, row_index.size());
            images.push_back(std::move(img));
        }
        Matrix<Rat> pairing(row_index.size(), ops.size());
        for (std::size_t j = 0; j < ops.size(); ++j)
            for (const auto& [m, c] : images[j].terms()) pairing(row_index.at(m), j) = c;
        auto kern = kernel_basis(pairing);
        if (kern.empty()) continue;

        // degree-d slice of the ideal generated so far
        std::vector<std::vector<Rat>> known;
        for (const auto& g : gens) {
            std::uint32_t gap = d - static_cast<std::uint32_t>(g.degree());
            for (const auto& m : enumerate_monomials_exact(n, gap)) {
                Polynomial shifted = g * Polynomial::monomial(n, m);
                std::vector<Rat> row(ops.size(), Rat(0));
                std::size_t j = 0;
                for (const auto& op : ops) row[j++] = shifted.coeff(op);
                known.push_back(std::move(row));
            }
        }

        // keep the kernel vectors that grow the span: those are new minimal
        // generators
        std::size_t base_rank = known.empty() ? 0 : rank(Matrix<Rat>::from_rows(known));
        for (const auto& v : kern) {
            known.push_back(v);
            std::size_t r = rank(Matrix<Rat>::from_rows(known));
            if (r > base_rank) {
                base_rank = r;
                Polynomial g(n);
                for (std::size_t j = 0; j < ops.size(); ++j) g.add_term(ops[j], v[j]);
                gens.push_back(std::move(g));
            } else {
                known.pop_back();
            }
        }
    }
    return gens;
}

HilbertFn apolar_hilbert(const Polynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("apolar_hilbert: zero polynomial");
    std::optional<std::uint64_t> deg;
    for (const auto& [m, c] : f.terms()) {
        if (!deg) deg = m.degree();
        else if (*deg != m.degree())
            throw std::invalid_argument("apolar_hilbert: polynomial is not homogeneous");
    }
    const auto d = static_cast<std::uint32_t>(*deg);
    const std::size_t n = f.nvars();

    HilbertFn h;
    for (std::uint32_t i = 0; i <= d; ++i) {
        auto ops = enumerate_monomials_exact(n, i);
        auto targets = enumerate_monomials_exact(n, d - i);
        std::map<Monomial, std::size_t, GrlexLeadFirst> row_index;
        for (std::size_t r = 0; r < targets.size(); ++r) row_index.emplace(targets[r], r);
        Matrix<Rat> cat(targets.size(), ops.size());
        for (std::size_t j = 0; j < ops.size(); ++j) {
            Polynomial img = contract(ops[j], f);
            for (const auto& [m, c] : img.terms()) cat(row_index.at(m), j) = c;
        }
        h.values.push_back(rank(cat));
    }
    h.trim();
    return h;
}

std::vector<std::vector<Rat>> scheme_span_kernel(const PolyMap& map, const Embedding& e) {
    if (map.nvars() != e.images.size())
        throw std::invalid_argument("scheme_span_kernel: variable count mismatch");
    const std::size_t dim = e.algebra.dim();
    Matrix<Rat> cols(dim, map.size());
    for (std::size_t j = 0; j < map.size(); ++j) {
        AlgebraElement img = push_polynomial(e, map[j]);
        for (std::size_t i = 0; i < dim; ++i) cols(i, j) = img.coords[i];
    }
    return kernel_basis(cols);
}

bool point_in_span(const std::vector<Rat>& point, const PolyMap& map, const Embedding& e) {
    if (point.size() != map.size())
        throw std::invalid_argument("point_in_span: point length must match component count");
    for (const auto& functional : scheme_span_kernel(map, e)) {
        Rat v(0);
        for (std::size_t j = 0; j < point.size(); ++j) v += functional[j] * point[j];
        if (!v.is_zero()) return false;
    }
    return true;
}

FiniteLocalAlgebra SchemeFamily::make() const {
    switch (kind) {
        case AlgebraKind::curvilinear: return FiniteLocalAlgebra::curvilinear(k);
        case AlgebraKind::special: return FiniteLocalAlgebra::special(k);
        case AlgebraKind::monomial_quotient:
            throw std::invalid_argument("SchemeFamily: monomial quotients are not a sampled family");
    }
    throw std::logic_error("bad AlgebraKind");
}

std::string SchemeFamily::str() const {
    return (kind == AlgebraKind::curvilinear ? "curvilinear:" : "special:") + std::to_string(k);
}

SchemeFamily SchemeFamily::parse(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("scheme family must look like curvilinear:4 or special:5");
    std::string name = s.substr(0, colon);
    std::uint32_t k = 0;
    try {
        k = static_cast<std::uint32_t>(std::stoul(s.substr(colon + 1)));
    } catch (const std::exception&) {
        throw std::invalid_argument("scheme family has a malformed parameter: " + s);
    }
    if (name == "curvilinear") return {AlgebraKind::curvilinear, k};
    if (name == "special") return {AlgebraKind::special, k};
    throw std::invalid_argument("unknown scheme family '" + name + "'");
}

Embedding sample_embedding(const FiniteLocalAlgebra& a, std::size_t nvars, SplitMix64& rng,
                           const SamplerConfig& cfg) {
    std::vector<std::size_t> linear;
    for (std::size_t i = 1; i < a.dim(); ++i)
        if (a.basis()[i].degree() == 1) linear.push_back(i);

    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<AlgebraElement> images;
        bool linear_seen = false;
        for (std::size_t v = 0; v < nvars; ++v) {
            AlgebraElement img = algebra_zero(a);
            for (std::size_t i = 1; i < a.dim(); ++i) img.coords[i] = sample_rat(rng, cfg);
            for (auto i : linear) linear_seen = linear_seen || !img.coords[i].is_zero();
            images.push_back(std::move(img));
        }
        if (linear_seen) return Embedding(a, std::move(images));
    }
    throw std::runtime_error("sample_embedding: sampler produced no linear terms");
}

AvoidanceReport avoidance_experiment(const PolyMap& map, const std::vector<Rat>& center,
                                     const SchemeFamily& family, std::uint64_t trials,
                                     std::int64_t seed, const SamplerConfig& cfg) {
    if (trials < 1) throw std::invalid_argument("avoidance_experiment: need trials >= 1");
    if (center.size() != map.size())
        throw std::invalid_argument("avoidance_experiment: center length must match map");
    FiniteLocalAlgebra a = family.make();
    AvoidanceReport rep;
    rep.trials = trials;
    rep.seed = seed;
    rep.config_digest =
        fnv1a_hex("avoid;family=" + family.str() + ";trials=" + std::to_string(trials) + ";" +
                  cfg.digest_fragment());
    for (std::uint64_t t = 0; t < trials; ++t) {
        SplitMix64 rng(trial_stream(seed, t));
        Embedding e = sample_embedding(a, map.nvars(), rng, cfg);
        if (point_in_span(center, map, e)) {
            ++rep.violations;
            if (rep.witnesses.size() < 4) rep.witnesses.push_back(e);
        }
    }
    return rep;
}

}  // namespace kreg
