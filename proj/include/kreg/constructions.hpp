#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kreg/polynomial.hpp"

namespace kreg {

std::uint64_t binomial_coefficient(std::uint64_t n, std::uint64_t k);

/// All monomials of degree <= r, constant first, graded-lex order.
/// N = C(n+r, n). This is the affine chart of the r-th Veronese embedding and
/// is k-regular for every k <= r+1.
PolyMap veronese_map(std::size_t n, std::uint32_t r);

/// All monomials of degree <= k-2 followed by the n pure powers x_i^{k-1}.
/// N = C(n+k-2, n) + n; k-regular for every n.
PolyMap base_map(std::size_t n, std::uint32_t k);

/// The C(n+k-2, k-2)+1 component family (k > 3, n >= 2): monomials of degree
/// <= k-3, mixed monomials of degree k-2, the n-1 binomials pairing
/// consecutive pure powers, and the two leftover pure powers. `mirror`
/// reverses variable indices (j -> n+1-j) before emission; mirror=true
/// reproduces the published 4-regular 11-tuple for (n,k) = (3,4).
PolyMap thm3_map(std::size_t n, std::uint32_t k, bool mirror = false);

/// The C(n+k-3, n)+n+1 component family (k > 4, n >= 2): monomials of degree
/// <= k-3, the n-1 binomials, and the two leftover pure powers. mirror=false
/// reproduces the published 5-regular 14-tuple for (n,k) = (3,5).
PolyMap thm4_map(std::size_t n, std::uint32_t k, bool mirror = false);

/// (1, x_1, ..., x_n, sum x_i^2): 3-regular over R but not over C, the
/// standard negative control for complex verification.
PolyMap real3reg_map(std::size_t n);

/// Linear projection written in map coordinates. Pivot p is the first
/// nonzero entry of the functional; the result has components
/// { f_j - (c_j / c_p) f_p : j != p } in the original order. Its span,
/// together with the deleted direction, equals the original span; the center
/// of the realized projection is the line through the functional's
/// coordinate vector.
PolyMap project_off(const PolyMap& map, const std::vector<Rat>& functional);

/// Minimal N for which generic degree >= k-1 polynomials give a k-regular
/// map C^n -> C^N: (n+1)k - 1 with the published exceptions (n=1 -> k-1;
/// (2,4) -> 9; (2,5) -> 13; k=3 -> 3n-1).
std::uint64_t generic_bound(std::size_t n, std::uint32_t k);

enum class MapFamily { veronese, base, thm3, thm4, real3reg };

MapFamily map_family_from_string(const std::string& s);
std::string to_string(MapFamily f);

/// CLI-facing recipe; `k` doubles as the Veronese degree r.
struct MapRecipe {
    MapFamily family;
    std::size_t n = 0;
    std::uint32_t k = 0;
    bool mirror = false;
};

PolyMap build_map(const MapRecipe& recipe);

/// Index of the component equal to the given monomial (coefficient 1).
/// Throws when the map has no such component.
std::size_t component_index_of_monomial(const PolyMap& map, const Monomial& m);

/// One projection of the published constructions: the map being projected
/// and the center to avoid, in that map's coordinates.
struct ProjectionStep {
    PolyMap map;
    std::vector<Rat> center;
    std::string label;
};

struct ProjectionPipeline {
    std::vector<ProjectionStep> steps;
    PolyMap result;
};

/// base_map(n,k) projected consecutively from the points with equal nonzero
/// coordinates at x_j^{k-1} and x_{j+1}^{k-2}, j = 1..n-1. The resulting
/// component set is thm3_map(n, k, mirror=true).
ProjectionPipeline thm3_pipeline(std::size_t n, std::uint32_t k);

/// base_map(n,k) projected off every mixed monomial of degree k-2 (unit
/// centers), then from the points pairing x_{j+1}^{k-1} with x_j^{k-2}. The
/// resulting component set is thm4_map(n, k, mirror=false).
ProjectionPipeline thm4_pipeline(std::size_t n, std::uint32_t k);

/// Unit centers on the mixed top-degree coordinates of veronese_map(n, k-1),
/// the centers the top-degree projection starts from.
std::vector<ProjectionStep> veronese_mixed_centers(std::size_t n, std::uint32_t k);

}  // namespace kreg
