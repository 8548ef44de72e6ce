#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "kreg/rational.hpp"

namespace kreg {

/// splitmix64. Fixed algorithm, no std:: distributions, so every sampled
/// value is identical across platforms and standard libraries.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t state) : s_(state) {}

    std::uint64_t next() {
        std::uint64_t z = (s_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish value in [0, n). Modulo bias is irrelevant here; fixedness is.
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

    bool coin() { return (next() & 1) != 0; }

private:
    std::uint64_t s_;
};

/// Stream state for trial `trial` of a campaign seeded with `seed`. Each
/// trial draws from its own stream, so reports do not depend on execution
/// order or parallelism.
inline std::uint64_t trial_stream(std::int64_t seed, std::uint64_t trial) {
    SplitMix64 g(static_cast<std::uint64_t>(seed));
    std::uint64_t base = g.next();
    return base ^ (0xD1B54A32D192ED03ULL * (trial + 1));
}

/// Bounded-height rational point sampler: numerators in [-num_abs, num_abs],
/// denominators in [1, den_max]. `isotropic` only affects Gaussian tuples:
/// roughly a quarter of tuples are placed on a random isotropic line
/// (direction v with v.v = 0), the configurations that defeat maps which are
/// only real k-regular.
struct SamplerConfig {
    std::int64_t num_abs = 10;
    std::int64_t den_max = 8;
    bool isotropic = false;

    std::string digest_fragment() const {
        return "numabs=" + std::to_string(num_abs) + ";denmax=" + std::to_string(den_max) +
               ";isotropic=" + (isotropic ? "1" : "0");
    }
};

inline Rat sample_rat(SplitMix64& g, const SamplerConfig& cfg) {
    long num = static_cast<long>(g.below(2 * cfg.num_abs + 1)) - cfg.num_abs;
    long den = 1 + static_cast<long>(g.below(cfg.den_max));
    return Rat(num, den);
}

inline Rat sample_nonzero_rat(SplitMix64& g, const SamplerConfig& cfg) {
    for (;;) {
        Rat r = sample_rat(g, cfg);
        if (!r.is_zero()) return r;
    }
}

inline GaussRat sample_gauss(SplitMix64& g, const SamplerConfig& cfg) {
    Rat re = sample_rat(g, cfg);
    Rat im = sample_rat(g, cfg);
    return GaussRat(std::move(re), std::move(im));
}

template <class S>
S sample_scalar(SplitMix64& g, const SamplerConfig& cfg) {
    if constexpr (std::is_same_v<S, GaussRat>) {
        return sample_gauss(g, cfg);
    } else {
        return sample_rat(g, cfg);
    }
}

template <class S>
std::vector<S> sample_point(SplitMix64& g, std::size_t n, const SamplerConfig& cfg) {
    std::vector<S> p;
    p.reserve(n);
    for (std::size_t i = 0; i < n; ++i) p.push_back(sample_scalar<S>(g, cfg));
    return p;
}

template <class S>
bool pairwise_distinct(const std::vector<std::vector<S>>& pts) {
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (pts[i] == pts[j]) return false;
    return true;
}

namespace detail {

/// k distinct points on a random isotropic line: direction supported on two
/// coordinates (c, +-i c), scaled by distinct rational parameters. Every
/// coordinate vector v on such a line satisfies sum v_i^2 = 0.
inline std::vector<std::vector<GaussRat>> sample_isotropic_tuple(SplitMix64& g, std::size_t k,
                                                                 std::size_t n,
                                                                 const SamplerConfig& cfg) {
    std::size_t a = g.below(n);
    std::size_t b = g.below(n - 1);
    if (b >= a) ++b;
    Rat c = sample_nonzero_rat(g, cfg);
    Rat d = g.coin() ? c : -c;
    std::vector<GaussRat> dir(n, GaussRat(Rat(0)));
    dir[a] = GaussRat(c, Rat(0));
    dir[b] = GaussRat(Rat(0), d);

    std::vector<Rat> ts;
    while (ts.size() < k) {
        Rat t = sample_rat(g, cfg);
        bool dup = false;
        for (const auto& u : ts) dup = dup || u == t;
        if (!dup) ts.push_back(std::move(t));
    }
    std::vector<std::vector<GaussRat>> pts;
    for (const auto& t : ts) {
        std::vector<GaussRat> p;
        p.reserve(n);
        for (const auto& v : dir) p.push_back(v * GaussRat(t));
        pts.push_back(std::move(p));
    }
    return pts;
}

}  // namespace detail

/// k pairwise-distinct points in n coordinates. For Gaussian sampling with
/// cfg.isotropic set and n >= 2, about one tuple in four lies on an
/// isotropic line.
template <class S>
std::vector<std::vector<S>> sample_tuple(SplitMix64& g, std::size_t k, std::size_t n,
                                         const SamplerConfig& cfg) {
    if constexpr (std::is_same_v<S, GaussRat>) {
        if (cfg.isotropic && n >= 2 && k >= 2 && g.below(4) == 0) {
            return detail::sample_isotropic_tuple(g, k, n, cfg);
        }
    }
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<std::vector<S>> pts;
        pts.reserve(k);
        for (std::size_t i = 0; i < k; ++i) pts.push_back(sample_point<S>(g, n, cfg));
        if (pairwise_distinct(pts)) return pts;
    }
    throw std::runtime_error("sample_tuple: could not draw distinct points; widen the sampler");
}

/// FNV-1a over a canonical config string; cited in search reports so a run
/// is reproducible from its JSON alone.
inline std::string fnv1a_hex(const std::string& s) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 0x100000001B3ULL;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[h & 0xF];
        h >>= 4;
    }
    return out;
}

}  // namespace kreg
