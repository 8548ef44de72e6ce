#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "kreg/constructions.hpp"
#include "kreg/parse.hpp"
#include "kreg/regularity.hpp"

using namespace kreg;

namespace {

// `parse_polynomial` assigns bare letters by first appearance, which is wrong
// for tuple fragments like "t*u"; pin the published (s, t, u) reading.
std::string stu_to_indexed(const std::string& expr) {
    std::string out;
    for (char c : expr) {
        if (c == 's') out += "x1";
        else if (c == 't') out += "x2";
        else if (c == 'u') out += "x3";
        else out += c;
    }
    return out;
}

std::vector<Polynomial> parsed(std::initializer_list<const char*> exprs, std::size_t n) {
    std::vector<Polynomial> out;
    for (const char* e : exprs) out.push_back(parse_polynomial(stu_to_indexed(e), n));
    return out;
}

bool same_component_set(const PolyMap& a, const std::vector<Polynomial>& b) {
    if (a.size() != b.size()) return false;
    std::vector<Polynomial> rest = b;
    for (const auto& f : a) {
        auto it = std::find(rest.begin(), rest.end(), f);
        if (it == rest.end()) return false;
        rest.erase(it);
    }
    return true;
}

Polynomial substitute_reversed(const Polynomial& p) {
    std::size_t n = p.nvars();
    Polynomial out(n);
    for (const auto& [m, c] : p.terms()) {
        std::vector<std::uint32_t> e(m.exps().rbegin(), m.exps().rend());
        out.add_term(Monomial(std::move(e)), c);
    }
    return out;
}

}  // namespace

TEST_CASE("veronese_map") {
    auto v13 = veronese_map(1, 3);
    REQUIRE(v13.size() == 4);
    CHECK(v13[0] == parse_polynomial("1", 1));
    CHECK(v13[1] == parse_polynomial("x1", 1));
    CHECK(v13[2] == parse_polynomial("x1^2", 1));
    CHECK(v13[3] == parse_polynomial("x1^3", 1));

    CHECK(veronese_map(3, 3).size() == 20);

    auto v22 = veronese_map(2, 2);
    auto expect = parsed({"1", "x1", "x2", "x1^2", "x1*x2", "x2^2"}, 2);
    CHECK(v22.components() == expect);

    CHECK_THROWS_AS(veronese_map(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(veronese_map(2, 0), std::invalid_argument);
}

TEST_CASE("base_map") {
    CHECK(base_map(3, 4).size() == 13);  // C(5,3) + 3
    CHECK(base_map(3, 5).size() == 23);  // C(6,3) + 3

    auto b14 = base_map(1, 4);
    REQUIRE(b14.size() == 4);  // collapses to the rational normal curve
    CHECK(b14[0] == parse_polynomial("1", 1));
    CHECK(b14[3] == parse_polynomial("x1^3", 1));

    // last n components are the pure powers x_i^{k-1} in variable order
    auto b34 = base_map(3, 4);
    CHECK(b34[10] == parse_polynomial("x1^3", 3));
    CHECK(b34[11] == parse_polynomial("x2^3", 3));
    CHECK(b34[12] == parse_polynomial("x3^3", 3));
}

TEST_CASE("thm3_map reproduces the published 11-component tuple exactly") {
    auto m = thm3_map(3, 4, true);
    auto expect = parsed({"1", "s", "t", "u", "s*t", "s*u", "t*u", "s^2",
                          "s^3 - t^2", "t^3 - u^2", "u^3"},
                         3);
    REQUIRE(m.size() == 11);
    CHECK(m.components() == expect);
}

TEST_CASE("thm3_map unmirrored convention is the mirror image") {
    auto m = thm3_map(3, 4, false);
    REQUIRE(m.size() == 11);
    auto expect = parsed({"1", "s", "t", "u", "s*t", "s*u", "t*u", "u^2",
                          "t^3 - s^2", "u^3 - t^2", "s^3"},
                         3);
    CHECK(m.components() == expect);
}

TEST_CASE("mirror equals variable reversal as a component set") {
    for (std::uint32_t k : {4u, 5u, 6u}) {
        for (std::size_t n : {2u, 3u, 4u}) {
            auto plain = thm3_map(n, k, false);
            auto mirrored = thm3_map(n, k, true);
            std::vector<Polynomial> reversed;
            for (const auto& f : plain) reversed.push_back(substitute_reversed(f));
            CHECK(same_component_set(mirrored, reversed));
        }
    }
    auto plain = thm4_map(3, 5, false);
    std::vector<Polynomial> reversed;
    for (const auto& f : plain) reversed.push_back(substitute_reversed(f));
    CHECK(same_component_set(thm4_map(3, 5, true), reversed));
}

TEST_CASE("thm4_map reproduces the published 14-component tuple exactly") {
    auto m = thm4_map(3, 5, false);
    auto expect = parsed({"1", "s", "t", "u", "s*t", "s*u", "t*u", "s^2", "t^2", "u^2",
                          "u^3", "t^4 - s^3", "u^4 - t^3", "s^4"},
                         3);
    REQUIRE(m.size() == 14);
    CHECK(m.components() == expect);
}

TEST_CASE("component-count identities") {
    for (std::size_t n = 2; n <= 4; ++n) {
        for (std::uint32_t k = 4; k <= 6; ++k) {
            CHECK(thm3_map(n, k).size() == binomial_coefficient(n + k - 2, k - 2) + 1);
            if (k > 4) CHECK(thm4_map(n, k).size() == binomial_coefficient(n + k - 3, n) + n + 1);
        }
    }
    CHECK(thm3_map(4, 5).size() == 36);
    CHECK(thm4_map(2, 6).size() == 13);
    CHECK(thm4_map(3, 5).size() == 14);
}

TEST_CASE("unsupported parameters are rejected") {
    CHECK_THROWS_AS(thm3_map(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(thm3_map(1, 5), std::invalid_argument);
    CHECK_THROWS_AS(thm4_map(3, 4), std::invalid_argument);
    CHECK_THROWS_AS(base_map(3, 1), std::invalid_argument);
}

TEST_CASE("every constructed component is nonzero of degree <= k-1") {
    auto check_family = [](const PolyMap& m, std::uint32_t k) {
        for (const auto& f : m) {
            REQUIRE(!f.is_zero());
            CHECK(f.degree() <= k - 1);
        }
    };
    check_family(thm3_map(3, 4, true), 4);
    check_family(thm4_map(3, 5, false), 5);
    check_family(base_map(3, 4), 4);
    check_family(veronese_map(3, 3), 4);
}

TEST_CASE("real3reg_map") {
    auto m = real3reg_map(2);
    REQUIRE(m.size() == 4);
    CHECK(m[0] == parse_polynomial("1", 2));
    CHECK(m[1] == parse_polynomial("x1", 2));
    CHECK(m[2] == parse_polynomial("x2", 2));
    CHECK(m[3] == parse_polynomial("x1^2 + x2^2", 2));
    CHECK(real3reg_map(1).size() == 3);
    CHECK(real3reg_map(3).size() == 5);
}

TEST_CASE("project_off semantics") {
    auto v = veronese_map(1, 2);  // (1, x, x^2)
    std::vector<Rat> pick_last{Rat(0), Rat(0), Rat(1)};
    auto proj = project_off(v, pick_last);
    REQUIRE(proj.size() == 2);
    CHECK(proj[0] == parse_polynomial("1", 1));
    CHECK(proj[1] == parse_polynomial("x1", 1));

    std::vector<Rat> e1{Rat(1), Rat(0), Rat(0)};
    auto drop_first = project_off(v, e1);
    CHECK(drop_first[0] == parse_polynomial("x1", 1));

    // center with equal coordinates on the x1^3 and x2^2 columns of
    // base_map(3,4): pivot is the earlier x2^2 column, so x1^3 - x2^2 appears
    auto b = base_map(3, 4);
    std::vector<Rat> center(b.size(), Rat(0));
    center[component_index_of_monomial(b, Monomial::variable(3, 0, 3))] = Rat(1);
    center[component_index_of_monomial(b, Monomial::variable(3, 1, 2))] = Rat(1);
    auto merged = project_off(b, center);
    CHECK(merged.size() == 12);
    auto binom = parse_polynomial("x1^3 - x2^2", 3);
    CHECK(std::count(merged.begin(), merged.end(), binom) == 1);

    // the opposite pairing merges x2^3 with x1^2 and yields x2^3 - x1^2
    std::vector<Rat> center2(b.size(), Rat(0));
    center2[component_index_of_monomial(b, Monomial::variable(3, 1, 3))] = Rat(1);
    center2[component_index_of_monomial(b, Monomial::variable(3, 0, 2))] = Rat(1);
    auto merged2 = project_off(b, center2);
    auto binom2 = parse_polynomial("x2^3 - x1^2", 3);
    CHECK(std::count(merged2.begin(), merged2.end(), binom2) == 1);

    CHECK_THROWS_AS(project_off(v, std::vector<Rat>(3, Rat(0))), std::invalid_argument);
}

TEST_CASE("project_off realizes a projection with the functional as center") {
    // dimension formula: the projected span of any point set has rank
    // rank(old rows + center row) - 1, exactly
    auto b = base_map(3, 4);
    std::vector<Rat> center(b.size(), Rat(0));
    center[component_index_of_monomial(b, Monomial::variable(3, 0, 3))] = Rat(1);
    center[component_index_of_monomial(b, Monomial::variable(3, 1, 2))] = Rat(1);
    auto projected = project_off(b, center);

    SplitMix64 g(617);
    SamplerConfig cfg;
    for (int rep = 0; rep < 15; ++rep) {
        std::size_t k = 2 + g.below(3);
        auto tuple = sample_tuple<Rat>(g, k, 3, cfg);
        auto new_rank = rank(eval_matrix(projected, tuple));

        Matrix<Rat> with_center(k + 1, b.size());
        for (std::size_t i = 0; i < k; ++i) {
            auto row = b.eval<Rat>(tuple[i]);
            for (std::size_t j = 0; j < b.size(); ++j) with_center(i, j) = row[j];
        }
        for (std::size_t j = 0; j < b.size(); ++j) with_center(k, j) = center[j];
        CHECK(new_rank == rank(with_center) - 1);
    }
}

TEST_CASE("generic_bound") {
    CHECK(generic_bound(3, 4) == 15);
    CHECK(generic_bound(2, 4) == 9);
    CHECK(generic_bound(2, 5) == 13);
    CHECK(generic_bound(5, 3) == 14);
    CHECK(generic_bound(1, 5) == 4);  // printed bound k-1, caveat documented
    CHECK(generic_bound(3, 5) == 19);

    // the constructions beat generic projections
    CHECK(thm3_map(3, 4, true).size() == 11);
    CHECK(generic_bound(3, 4) == 15);
    CHECK(thm4_map(3, 5).size() == 14);
    CHECK(generic_bound(3, 5) == 19);
}

TEST_CASE("projection pipelines end at the published component sets") {
    auto p3 = thm3_pipeline(3, 4);
    CHECK(p3.steps.size() == 2);
    CHECK(p3.result.size() == 11);
    CHECK(same_component_set(p3.result,
                             thm3_map(3, 4, true).components()));

    auto p4 = thm4_pipeline(3, 5);
    CHECK(p4.steps.size() == 7 + 2);  // mixed degree-3 centers, then binomial centers
    CHECK(p4.result.size() == 14);
    CHECK(same_component_set(p4.result, thm4_map(3, 5, false).components()));

    auto mixed = veronese_mixed_centers(3, 4);
    CHECK(mixed.size() == 7);  // mixed degree-3 monomials in 3 variables
    for (const auto& step : mixed) {
        CHECK(step.map.size() == 20);
        std::size_t nonzero = 0;
        for (const auto& c : step.center) nonzero += !c.is_zero();
        CHECK(nonzero == 1);
    }
}

TEST_CASE("build_map dispatch") {
    CHECK(build_map({MapFamily::thm3, 3, 4, true}).size() == 11);
    CHECK(build_map({MapFamily::veronese, 2, 2, false}).size() == 6);
    CHECK(build_map({MapFamily::real3reg, 2, 0, false}).size() == 4);
    CHECK(map_family_from_string("thm4") == MapFamily::thm4);
    CHECK_THROWS_AS(map_family_from_string("nope"), std::invalid_argument);
}
