#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "kreg/regularity.hpp"

namespace kreg {

/// Raised when interpolation nodes are rank-deficient for the map. A
/// k-regular map can never trigger this, so catching it is diagnostic
/// evidence against regularity of the map on those nodes.
class NotRegularOnNodes : public std::runtime_error {
public:
    NotRegularOnNodes(std::size_t rank, std::size_t k)
        : std::runtime_error("interpolation nodes are rank-deficient: rank " +
                             std::to_string(rank) + " < k = " + std::to_string(k)),
          rank_(rank),
          k_(k) {}

    std::size_t rank() const { return rank_; }
    std::size_t k() const { return k_; }

private:
    std::size_t rank_, k_;
};

/// Interpolation data: match values[i] at nodes[i] with a functional in the
/// span of the map's components.
template <class S>
struct InterpolationProblem {
    PolyMap map;
    PointTuple<S> nodes;
    std::vector<S> values;
};

/// Coefficient vector c with sum_j c_j f_j(P_i) = values[i] exactly for all
/// i, chosen deterministically (free variables pinned to 0). Throws
/// NotRegularOnNodes if the evaluation matrix has rank below k and
/// std::invalid_argument on duplicate nodes.
template <class S>
std::vector<S> interpolate(const PolyMap& map, const PointTuple<S>& nodes,
                           const std::vector<S>& values) {
    require_distinct(nodes);
    if (values.size() != nodes.size())
        throw std::invalid_argument("interpolate: one value per node required");
    Matrix<S> m = eval_matrix(map, nodes);
    std::size_t r = rank(m);
    if (r < nodes.size()) throw NotRegularOnNodes(r, nodes.size());
    auto x = solve_particular(m, values);
    if (!x) throw std::logic_error("interpolate: full-row-rank system reported inconsistent");
    return *x;
}

template <class S>
std::vector<S> interpolate(const InterpolationProblem<S>& prob) {
    return interpolate(prob.map, prob.nodes, prob.values);
}

/// The interpolant expanded in the ambient variables: sum_j c_j f_j.
inline Polynomial as_polynomial(const PolyMap& map, const std::vector<Rat>& c) {
    if (c.size() != map.size())
        throw std::invalid_argument("as_polynomial: coefficient count must match components");
    Polynomial p(map.nvars());
    for (std::size_t j = 0; j < map.size(); ++j) {
        if (c[j].is_zero()) continue;
        p += map[j] * c[j];
    }
    return p;
}

}  // namespace kreg
