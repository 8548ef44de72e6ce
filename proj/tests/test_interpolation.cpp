#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kreg/constructions.hpp"
#include "kreg/interpolation.hpp"
#include "kreg/parse.hpp"

using namespace kreg;

namespace {

PointTuple<Rat> rational_points(std::initializer_list<std::initializer_list<long>> pts) {
    PointTuple<Rat> out;
    for (const auto& p : pts) {
        std::vector<Rat> row;
        for (long v : p) row.emplace_back(v);
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace

TEST_CASE("cubic interpolation through the powers of two") {
    auto v = veronese_map(1, 3);
    PointTuple<Rat> nodes{{Rat(0)}, {Rat(1)}, {Rat(2)}, {Rat(3)}};
    std::vector<Rat> values{Rat(1), Rat(2), Rat(4), Rat(8)};
    auto c = interpolate(v, nodes, values);
    REQUIRE(c.size() == 4);

    auto p = as_polynomial(v, c);
    for (std::size_t i = 0; i < 4; ++i) CHECK(p.eval<Rat>(nodes[i]) == values[i]);

    // unique Vandermonde solution, solved by hand: 1 + (5/6)x + (1/6)x^3
    CHECK(c == std::vector<Rat>{Rat(1), Rat(5, 6), Rat(0), Rat(1, 6)});
    CHECK(p.eval<Rat>({Rat(4)}) == Rat(1) + Rat(5, 6) * Rat(4) + Rat(1, 6) * Rat(64));
}

TEST_CASE("all-zero values give the zero interpolant") {
    auto v = veronese_map(1, 3);
    PointTuple<Rat> nodes{{Rat(0)}, {Rat(1)}, {Rat(2)}, {Rat(3)}};
    std::vector<Rat> values(4, Rat(0));
    auto c = interpolate(v, nodes, values);
    for (const auto& x : c) CHECK(x.is_zero());
    CHECK(as_polynomial(v, c).is_zero());
}

TEST_CASE("interpolation on the 11-component 4-regular map") {
    auto m = thm3_map(3, 4, true);
    auto nodes = rational_points({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    std::vector<Rat> values{Rat(1), Rat(2), Rat(3), Rat(4)};
    auto c = interpolate(m, nodes, values);
    REQUIRE(c.size() == 11);
    auto p = as_polynomial(m, c);
    for (std::size_t i = 0; i < 4; ++i) CHECK(p.eval<Rat>(nodes[i]) == values[i]);
}

TEST_CASE("as_polynomial basics") {
    auto m = thm3_map(3, 4, true);
    std::vector<Rat> e1(m.size(), Rat(0));
    e1[0] = Rat(1);
    CHECK(as_polynomial(m, e1) == parse_polynomial("1", 3));
    CHECK(as_polynomial(m, std::vector<Rat>(m.size(), Rat(0))).is_zero());
    CHECK_THROWS_AS(as_polynomial(m, std::vector<Rat>(3, Rat(0))), std::invalid_argument);
}

TEST_CASE("rank deficiency fails loudly with the observed rank") {
    auto r3 = real3reg_map(2);
    GaussRat i = GaussRat::i();
    PointTuple<GaussRat> iso{{GaussRat(Rat(1)), i},
                             {GaussRat(Rat(2)), GaussRat(Rat(2)) * i},
                             {GaussRat(Rat(3)), GaussRat(Rat(3)) * i}};
    std::vector<GaussRat> values{GaussRat(Rat(1)), GaussRat(Rat(0)), GaussRat(Rat(0))};
    try {
        interpolate(r3, iso, values);
        FAIL("expected NotRegularOnNodes");
    } catch (const NotRegularOnNodes& e) {
        CHECK(e.rank() == 2);
        CHECK(e.k() == 3);
    }

    auto v = veronese_map(1, 3);
    CHECK_THROWS_AS(interpolate(v, PointTuple<Rat>{{Rat(1)}, {Rat(1)}, {Rat(2)}, {Rat(3)}},
                                std::vector<Rat>(4, Rat(0))),
                    std::invalid_argument);
}

TEST_CASE("coefficients are additive in the values") {
    auto m = thm3_map(3, 4, true);
    auto nodes = rational_points({{1, 2, 3}, {-1, 0, 2}, {0, 5, 1}, {2, 2, 2}});
    std::vector<Rat> lam{Rat(1), Rat(-2), Rat(1, 3), Rat(0)};
    std::vector<Rat> mu{Rat(7), Rat(1, 2), Rat(-1), Rat(4)};
    std::vector<Rat> sum, expect;
    auto cl = interpolate(m, nodes, lam);
    auto cm = interpolate(m, nodes, mu);
    for (std::size_t i = 0; i < 4; ++i) sum.push_back(lam[i] + mu[i]);
    auto cs = interpolate(m, nodes, sum);
    for (std::size_t j = 0; j < m.size(); ++j) expect.push_back(cl[j] + cm[j]);
    CHECK(cs == expect);
}

TEST_CASE("round trips on every constructed family") {
    SplitMix64 g(2024);
    SamplerConfig cfg;
    struct Family {
        PolyMap map;
        std::size_t k;
    };
    std::vector<Family> families{{thm3_map(3, 4, true), 4},
                                 {thm4_map(3, 5, false), 5},
                                 {veronese_map(2, 2), 3},
                                 {base_map(3, 4), 4},
                                 {real3reg_map(2), 3}};
    for (auto& fam : families) {
        for (int rep = 0; rep < 10; ++rep) {
            auto nodes = sample_tuple<Rat>(g, fam.k, fam.map.nvars(), cfg);
            std::vector<Rat> values;
            for (std::size_t i = 0; i < fam.k; ++i) values.push_back(sample_rat(g, cfg));
            auto c = interpolate(fam.map, nodes, values);
            auto p = as_polynomial(fam.map, c);
            for (std::size_t i = 0; i < fam.k; ++i) {
                if (p.is_zero()) {
                    CHECK(values[i].is_zero());
                } else {
                    CHECK(p.eval<Rat>(nodes[i]) == values[i]);
                }
            }
        }
    }
}

TEST_CASE("gaussian-valued interpolation works through the same path") {
    auto m = real3reg_map(2);
    PointTuple<GaussRat> nodes{{GaussRat(Rat(0)), GaussRat(Rat(0))},
                               {GaussRat(Rat(1)), GaussRat(Rat(1))},
                               {GaussRat(Rat(2)), GaussRat::i()}};
    std::vector<GaussRat> values{GaussRat(Rat(1)), GaussRat::i(), GaussRat(Rat(0))};
    auto c = interpolate(m, nodes, values);
    // re-evaluate through the map and compare
    for (std::size_t i = 0; i < 3; ++i) {
        GaussRat acc(Rat(0));
        auto img = m.eval<GaussRat>(nodes[i]);
        for (std::size_t j = 0; j < m.size(); ++j) acc += c[j] * img[j];
        CHECK(acc == values[i]);
    }
}
