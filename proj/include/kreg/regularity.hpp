#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "kreg/matrix.hpp"
#include "kreg/polynomial.hpp"
#include "kreg/rng.hpp"

namespace kreg {

/// k coordinate vectors, pairwise distinct where the operations require it.
template <class S>
using PointTuple = std::vector<std::vector<S>>;

template <class S>
void require_distinct(const PointTuple<S>& tuple) {
    for (std::size_t i = 0; i < tuple.size(); ++i)
        for (std::size_t j = i + 1; j < tuple.size(); ++j)
            if (tuple[i] == tuple[j])
                throw std::invalid_argument("point tuple contains duplicate points");
}

/// k x N matrix with entry (i, j) = f_j(P_i), exact.
template <class S>
Matrix<S> eval_matrix(const PolyMap& map, const PointTuple<S>& tuple) {
    Matrix<S> m(tuple.size(), map.size());
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (tuple[i].size() != map.nvars())
            throw std::invalid_argument("eval_matrix: point length must equal variable count");
        for (std::size_t j = 0; j < map.size(); ++j)
            m(i, j) = map[j].template eval<S>(tuple[i]);
    }
    return m;
}

struct TupleVerdict {
    bool regular;
    std::size_t rank;
};

/// A tuple of k distinct points is regular iff its evaluation matrix has
/// rank k. Duplicate points are rejected, not deduplicated.
template <class S>
TupleVerdict check_tuple(const PolyMap& map, const PointTuple<S>& tuple) {
    require_distinct(tuple);
    std::size_t r = rank(eval_matrix(map, tuple));
    return {r == tuple.size(), r};
}

template <class S>
struct Counterexample {
    std::uint64_t trial = 0;
    std::optional<Rat> scale;  // cluster searches record the collapse scale
    PointTuple<S> points;
    std::size_t rank = 0;
};

template <class S>
struct SearchReport {
    std::uint64_t trials_requested = 0;
    std::uint64_t trials_run = 0;
    std::int64_t seed = 0;
    std::string config_digest;
    std::optional<Counterexample<S>> counterexample;

    friend bool operator==(const SearchReport& a, const SearchReport& b) {
        auto key = [](const SearchReport& r) {
            return std::tuple(r.trials_requested, r.trials_run, r.seed, r.config_digest,
                              r.counterexample.has_value());
        };
        if (key(a) != key(b)) return false;
        if (!a.counterexample) return true;
        return a.counterexample->trial == b.counterexample->trial &&
               a.counterexample->scale == b.counterexample->scale &&
               a.counterexample->points == b.counterexample->points &&
               a.counterexample->rank == b.counterexample->rank;
    }
};

/// Draws `trials` independent k-tuples of distinct points and rank-checks
/// each; stops at the first deficient tuple. Trial randomness is derived
/// from (seed, trial index), so the report is execution-order independent.
template <class S>
SearchReport<S> random_search(const PolyMap& map, std::size_t k, std::uint64_t trials,
                              std::int64_t seed, const SamplerConfig& cfg = {}) {
    if (trials < 1) throw std::invalid_argument("random_search: need trials >= 1");
    SearchReport<S> rep;
    rep.trials_requested = trials;
    rep.seed = seed;
    rep.config_digest = fnv1a_hex("random;k=" + std::to_string(k) + ";trials=" +
                                  std::to_string(trials) + ";" + cfg.digest_fragment());
    for (std::uint64_t t = 0; t < trials; ++t) {
        SplitMix64 rng(trial_stream(seed, t));
        auto tuple = sample_tuple<S>(rng, k, map.nvars(), cfg);
        auto verdict = check_tuple(map, tuple);
        rep.trials_run = t + 1;
        if (!verdict.regular) {
            rep.counterexample = Counterexample<S>{t, std::nullopt, std::move(tuple), verdict.rank};
            return rep;
        }
    }
    return rep;
}

/// Scales 2^0, 2^-1, ..., 2^-12: the collapse schedule of cluster searches.
inline std::vector<Rat> default_cluster_scales() {
    std::vector<Rat> s;
    long den = 1;
    for (int m = 0; m <= 12; ++m) {
        s.emplace_back(1, den);
        den *= 2;
    }
    return s;
}

struct ClusterConfig {
    std::uint32_t curve_degree = 3;
    std::vector<Rat> scales = default_cluster_scales();

    std::string digest_fragment() const {
        std::string s = "curvedeg=" + std::to_string(curve_degree) + ";scales=";
        for (const auto& e : scales) s += e.str() + ",";
        return s;
    }
};

/// Adversarial near-collision search: each trial draws a base point p and a
/// random degree-`curve_degree` curve through p, then rank-checks the tuples
/// {gamma(eps * j) : j = 1..k} as eps runs down the scale schedule. Points on
/// a common collapsing curve approximate the curvilinear limits the areole is
/// made of, configurations plain random search essentially never hits.
template <class S>
SearchReport<S> cluster_search(const PolyMap& map, std::size_t k, std::uint64_t trials,
                               std::int64_t seed, const ClusterConfig& cc = {},
                               const SamplerConfig& cfg = {}) {
    if (trials < 1) throw std::invalid_argument("cluster_search: need trials >= 1");
    if (cc.curve_degree < 1) throw std::invalid_argument("cluster_search: need curve_degree >= 1");
    for (const auto& e : cc.scales)
        if (e.is_zero()) throw std::invalid_argument("cluster_search: zero scale");

    const std::size_t n = map.nvars();
    SearchReport<S> rep;
    rep.trials_requested = trials;
    rep.seed = seed;
    rep.config_digest = fnv1a_hex("cluster;k=" + std::to_string(k) + ";trials=" +
                                  std::to_string(trials) + ";" + cc.digest_fragment() + ";" +
                                  cfg.digest_fragment());

    for (std::uint64_t t = 0; t < trials; ++t) {
        SplitMix64 rng(trial_stream(seed, t));
        // curve gamma(s) = p + sum_d v_d s^d; resampled until every scale
        // yields k distinct points
        std::vector<S> base;
        std::vector<std::vector<S>> coeffs;
        std::vector<PointTuple<S>> tuples;
        for (int attempt = 0;; ++attempt) {
            if (attempt >= 100)
                throw std::runtime_error("cluster_search: degenerate curve sampling");
            base = sample_point<S>(rng, n, cfg);
            coeffs.clear();
            bool nonzero = false;
            for (std::uint32_t d = 0; d < cc.curve_degree; ++d) {
                auto v = sample_point<S>(rng, n, cfg);
                for (const auto& x : v) nonzero = nonzero || !is_zero(x);
                coeffs.push_back(std::move(v));
            }
            if (!nonzero) continue;
            tuples.clear();
            bool ok = true;
            for (const auto& eps : cc.scales) {
                PointTuple<S> tuple;
                for (std::size_t j = 1; j <= k; ++j) {
                    Rat s = eps * Rat(static_cast<long>(j));
                    std::vector<S> pt = base;
                    Rat spow(1);
                    for (std::uint32_t d = 0; d < cc.curve_degree; ++d) {
                        spow *= s;
                        for (std::size_t i = 0; i < n; ++i) pt[i] += coeffs[d][i] * S(spow);
                    }
                    tuple.push_back(std::move(pt));
                }
                ok = ok && pairwise_distinct(tuple);
                tuples.push_back(std::move(tuple));
            }
            if (ok) break;
        }
        rep.trials_run = t + 1;
        for (std::size_t si = 0; si < cc.scales.size(); ++si) {
            std::size_t r = rank(eval_matrix(map, tuples[si]));
            if (r < k) {
                rep.counterexample =
                    Counterexample<S>{t, cc.scales[si], std::move(tuples[si]), r};
                return rep;
            }
        }
    }
    return rep;
}

/// Positive integer weights making every component weighted-homogeneous:
/// kernel of the per-component exponent-difference constraints, searched for
/// a strictly positive vector and normalized to the minimal integer
/// representative. For kernels of dimension >= 2 small integer combinations
/// (coefficients up to 5 in absolute value) are tried; "none" past that
/// budget is a documented incompleteness, not a proof of absence.
std::optional<WeightVector> find_torus_weights(const PolyMap& map);

/// The torus action: coordinate i of every point scales by lambda^{w_i}.
template <class S>
PointTuple<S> torus_scale(const WeightVector& w, const PointTuple<S>& tuple, const Rat& lambda) {
    PointTuple<S> out = tuple;
    for (auto& pt : out) {
        if (pt.size() != w.size())
            throw std::invalid_argument("torus_scale: weight/point length mismatch");
        for (std::size_t i = 0; i < pt.size(); ++i)
            pt[i] *= S(scalar_pow(lambda, w[i]));
    }
    return out;
}

/// Exact statement behind the local-to-global step: scaling a tuple by the
/// torus action only rescales evaluation-matrix columns, so the rank cannot
/// move. Requires every component to be homogeneous under w and lambda != 0.
template <class S>
bool rescale_invariance_check(const PolyMap& map, const WeightVector& w,
                              const PointTuple<S>& tuple, const Rat& lambda) {
    if (lambda.is_zero())
        throw std::invalid_argument("rescale_invariance_check: lambda must be nonzero");
    for (const auto& f : map)
        if (!weighted_degree(f, w))
            throw std::invalid_argument(
                "rescale_invariance_check: component inhomogeneous under the weights");
    std::size_t before = rank(eval_matrix(map, tuple));
    std::size_t after = rank(eval_matrix(map, torus_scale(w, tuple, lambda)));
    return before == after;
}

}  // namespace kreg
