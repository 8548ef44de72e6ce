#include "kreg/constructions.hpp"

#include <algorithm>
#include <stdexcept>

namespace kreg {

std::uint64_t binomial_coefficient(std::uint64_t n, std::uint64_t k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    if (!b.fits_ulong_p()) throw std::overflow_error("binomial_coefficient: overflow");
    return b.get_ui();
}

PolyMap veronese_map(std::size_t n, std::uint32_t r) {
    if (n < 1 || r < 1) throw std::invalid_argument("veronese_map: need n >= 1 and r >= 1");
    std::vector<Polynomial> comps;
    for (auto& m : enumerate_monomials(n, r)) comps.push_back(Polynomial::monomial(n, m));
    return PolyMap(n, std::move(comps));
}

PolyMap base_map(std::size_t n, std::uint32_t k) {
    if (n < 1 || k < 2) throw std::invalid_argument("base_map: need n >= 1 and k >= 2");
    std::vector<Polynomial> comps;
    for (auto& m : enumerate_monomials(n, k - 2)) comps.push_back(Polynomial::monomial(n, m));
    for (std::size_t i = 0; i < n; ++i)
        comps.push_back(Polynomial::monomial(n, Monomial::variable(n, i, k - 1)));
    return PolyMap(n, std::move(comps));
}

namespace {

// Canonical component classes for the projected families. Within a total
// degree: mixed monomials, pure-power monomials, binomials, then the two
// leftover pure-power extras. This reproduces the published tuples exactly.
enum class CompClass : int { mixed = 0, pure = 1, binomial = 2, extra = 3 };

struct Tagged {
    Polynomial poly;
    std::uint64_t degree;
    CompClass cls;
};

PolyMap emit_sorted(std::size_t n, std::vector<Tagged> parts) {
    std::stable_sort(parts.begin(), parts.end(), [](const Tagged& a, const Tagged& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        if (a.cls != b.cls) return static_cast<int>(a.cls) < static_cast<int>(b.cls);
        return a.poly.leading_monomial().exps() > b.poly.leading_monomial().exps();
    });
    std::vector<Polynomial> comps;
    comps.reserve(parts.size());
    for (auto& t : parts) comps.push_back(std::move(t.poly));
    return PolyMap(n, std::move(comps));
}

// Variable relabeling j -> n+1-j: the two binomial index conventions are
// mirror images; the flag picks the one matching the published tuples.
std::size_t var_index(std::size_t n, std::size_t j, bool mirror) {
    return mirror ? n - 1 - j : j;
}

Tagged tag_monomial(std::size_t n, const Monomial& m) {
    CompClass cls = m.degree() >= 2 && !m.is_pure_power() ? CompClass::mixed : CompClass::pure;
    return {Polynomial::monomial(n, m), m.degree(), cls};
}

// x_{hi}^{k-1} - x_lo^{k-2} in 0-based relabeled indices.
Tagged tag_binomial(std::size_t n, std::uint32_t k, std::size_t hi, std::size_t lo) {
    Polynomial p(n);
    p.add_term(Monomial::variable(n, hi, k - 1), Rat(1));
    p.add_term(Monomial::variable(n, lo, k - 2), Rat(-1));
    return {std::move(p), k - 1u, CompClass::binomial};
}

Tagged tag_extra(std::size_t n, std::size_t var, std::uint32_t power) {
    return {Polynomial::monomial(n, Monomial::variable(n, var, power)), power, CompClass::extra};
}

}  // namespace

PolyMap thm3_map(std::size_t n, std::uint32_t k, bool mirror) {
    if (n < 2 || k <= 3)
        throw std::invalid_argument("thm3_map: unsupported parameters, need n >= 2 and k > 3");
    std::vector<Tagged> parts;
    for (auto& m : enumerate_monomials(n, k - 3)) parts.push_back(tag_monomial(n, m));
    for (auto& m : enumerate_monomials_exact(n, k - 2))
        if (!m.is_pure_power()) parts.push_back(tag_monomial(n, m));
    for (std::size_t i = 0; i + 1 < n; ++i)
        parts.push_back(tag_binomial(n, k, var_index(n, i + 1, mirror), var_index(n, i, mirror)));
    parts.push_back(tag_extra(n, var_index(n, 0, mirror), k - 1));
    parts.push_back(tag_extra(n, var_index(n, n - 1, mirror), k - 2));
    return emit_sorted(n, std::move(parts));
}

PolyMap thm4_map(std::size_t n, std::uint32_t k, bool mirror) {
    if (n < 2 || k <= 4)
        throw std::invalid_argument("thm4_map: unsupported parameters, need n >= 2 and k > 4");
    std::vector<Tagged> parts;
    for (auto& m : enumerate_monomials(n, k - 3)) parts.push_back(tag_monomial(n, m));
    for (std::size_t i = 0; i + 1 < n; ++i)
        parts.push_back(tag_binomial(n, k, var_index(n, i + 1, mirror), var_index(n, i, mirror)));
    parts.push_back(tag_extra(n, var_index(n, 0, mirror), k - 1));
    parts.push_back(tag_extra(n, var_index(n, n - 1, mirror), k - 2));
    return emit_sorted(n, std::move(parts));
}

PolyMap real3reg_map(std::size_t n) {
    if (n < 1) throw std::invalid_argument("real3reg_map: need n >= 1");
    std::vector<Polynomial> comps;
    comps.push_back(Polynomial::constant(n, Rat(1)));
    for (std::size_t i = 0; i < n; ++i) comps.push_back(Polynomial::variable(n, i));
    Polynomial q(n);
    for (std::size_t i = 0; i < n; ++i) q.add_term(Monomial::variable(n, i, 2), Rat(1));
    comps.push_back(std::move(q));
    return PolyMap(n, std::move(comps));
}

PolyMap project_off(const PolyMap& map, const std::vector<Rat>& functional) {
    if (functional.size() != map.size())
        throw std::invalid_argument("project_off: functional length must match component count");
    std::size_t pivot = functional.size();
    for (std::size_t j = 0; j < functional.size(); ++j) {
        if (!functional[j].is_zero()) {
            pivot = j;
            break;
        }
    }
    if (pivot == functional.size()) throw std::invalid_argument("project_off: zero functional");
    std::vector<Polynomial> comps;
    comps.reserve(map.size() - 1);
    for (std::size_t j = 0; j < map.size(); ++j) {
        if (j == pivot) continue;
        if (functional[j].is_zero()) {
            comps.push_back(map[j]);
        } else {
            comps.push_back(map[j] - map[pivot] * (functional[j] / functional[pivot]));
        }
    }
    return PolyMap(map.nvars(), std::move(comps));
}

std::uint64_t generic_bound(std::size_t n, std::uint32_t k) {
    if (n < 1 || k < 1) throw std::invalid_argument("generic_bound: need n >= 1 and k >= 1");
    if (n == 1) return k - 1;
    if (k == 3) return 3 * static_cast<std::uint64_t>(n) - 1;
    if (n == 2 && k == 4) return 9;
    if (n == 2 && k == 5) return 13;
    return (static_cast<std::uint64_t>(n) + 1) * k - 1;
}

MapFamily map_family_from_string(const std::string& s) {
    if (s == "veronese") return MapFamily::veronese;
    if (s == "base") return MapFamily::base;
    if (s == "thm3") return MapFamily::thm3;
    if (s == "thm4") return MapFamily::thm4;
    if (s == "real3reg") return MapFamily::real3reg;
    throw std::invalid_argument("unknown map family '" + s + "'");
}

std::string to_string(MapFamily f) {
    switch (f) {
        case MapFamily::veronese: return "veronese";
        case MapFamily::base: return "base";
        case MapFamily::thm3: return "thm3";
        case MapFamily::thm4: return "thm4";
        case MapFamily::real3reg: return "real3reg";
    }
    throw std::logic_error("bad MapFamily");
}

PolyMap build_map(const MapRecipe& r) {
    switch (r.family) {
        case MapFamily::veronese: return veronese_map(r.n, r.k);
        case MapFamily::base: return base_map(r.n, r.k);
        case MapFamily::thm3: return thm3_map(r.n, r.k, r.mirror);
        case MapFamily::thm4: return thm4_map(r.n, r.k, r.mirror);
        case MapFamily::real3reg: return real3reg_map(r.n);
    }
    throw std::logic_error("bad MapFamily");
}

std::size_t component_index_of_monomial(const PolyMap& map, const Monomial& m) {
    Polynomial target = Polynomial::monomial(map.nvars(), m);
    for (std::size_t j = 0; j < map.size(); ++j)
        if (map[j] == target) return j;
    throw std::invalid_argument("component_index_of_monomial: no component equals " + m.str());
}

namespace {

std::vector<Rat> two_point_center(const PolyMap& map, const Monomial& a, const Monomial& b) {
    std::vector<Rat> c(map.size(), Rat(0));
    c[component_index_of_monomial(map, a)] = Rat(1);
    c[component_index_of_monomial(map, b)] = Rat(1);
    return c;
}

std::vector<Rat> unit_center(const PolyMap& map, const Monomial& m) {
    std::vector<Rat> c(map.size(), Rat(0));
    c[component_index_of_monomial(map, m)] = Rat(1);
    return c;
}

}  // namespace

ProjectionPipeline thm3_pipeline(std::size_t n, std::uint32_t k) {
    if (n < 2 || k <= 3) throw std::invalid_argument("thm3_pipeline: need n >= 2 and k > 3");
    ProjectionPipeline pipe{{}, base_map(n, k)};
    for (std::size_t j = 0; j + 1 < n; ++j) {
        auto center = two_point_center(pipe.result, Monomial::variable(n, j, k - 1),
                                       Monomial::variable(n, j + 1, k - 2));
        pipe.steps.push_back({pipe.result, center, "P" + std::to_string(j + 1)});
        pipe.result = project_off(pipe.result, center);
    }
    return pipe;
}

ProjectionPipeline thm4_pipeline(std::size_t n, std::uint32_t k) {
    if (n < 2 || k <= 4) throw std::invalid_argument("thm4_pipeline: need n >= 2 and k > 4");
    ProjectionPipeline pipe{{}, base_map(n, k)};
    for (auto& m : enumerate_monomials_exact(n, k - 2)) {
        if (m.is_pure_power()) continue;
        auto center = unit_center(pipe.result, m);
        pipe.steps.push_back({pipe.result, center, "P_" + m.str()});
        pipe.result = project_off(pipe.result, center);
    }
    for (std::size_t j = 0; j + 1 < n; ++j) {
        auto center = two_point_center(pipe.result, Monomial::variable(n, j + 1, k - 1),
                                       Monomial::variable(n, j, k - 2));
        pipe.steps.push_back({pipe.result, center, "P" + std::to_string(j + 1)});
        pipe.result = project_off(pipe.result, center);
    }
    return pipe;
}

std::vector<ProjectionStep> veronese_mixed_centers(std::size_t n, std::uint32_t k) {
    if (n < 1 || k < 3) throw std::invalid_argument("veronese_mixed_centers: need k >= 3");
    PolyMap v = veronese_map(n, k - 1);
    std::vector<ProjectionStep> steps;
    for (auto& m : enumerate_monomials_exact(n, k - 1)) {
        if (m.is_pure_power()) continue;
        steps.push_back({v, unit_center(v, m), "L_" + m.str()});
    }
    return steps;
}

}  // namespace kreg
