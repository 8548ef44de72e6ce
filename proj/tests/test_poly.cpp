#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "kreg/constructions.hpp"
#include "kreg/parse.hpp"
#include "kreg/polynomial.hpp"
#include "kreg/rng.hpp"
#include "support/oracle.hpp"

using namespace kreg;

namespace {

Polynomial rand_poly(SplitMix64& g, std::size_t n, std::uint32_t dmax, std::size_t nterms) {
    SamplerConfig cfg;
    Polynomial p(n);
    for (std::size_t t = 0; t < nterms; ++t) {
        std::vector<std::uint32_t> e(n);
        for (auto& x : e) x = static_cast<std::uint32_t>(g.below(dmax + 1));
        p.add_term(Monomial(std::move(e)), sample_rat(g, cfg));
    }
    return p;
}

}  // namespace

TEST_CASE("enumerate_monomials basic shapes") {
    auto m12 = enumerate_monomials(1, 2);
    REQUIRE(m12.size() == 3);
    CHECK(m12[0] == Monomial({0}));
    CHECK(m12[1] == Monomial({1}));
    CHECK(m12[2] == Monomial({2}));

    auto m31 = enumerate_monomials(3, 1);
    REQUIRE(m31.size() == 4);
    CHECK(m31[0] == Monomial({0, 0, 0}));
    CHECK(m31[1] == Monomial({1, 0, 0}));
    CHECK(m31[2] == Monomial({0, 1, 0}));
    CHECK(m31[3] == Monomial({0, 0, 1}));

    CHECK(enumerate_monomials(3, 3).size() == 20);
    CHECK_THROWS_AS(enumerate_monomials(0, 2), std::invalid_argument);
}

TEST_CASE("enumeration order is graded lex with x1 > x2 > ... within a grade") {
    auto m22 = enumerate_monomials(2, 2);
    std::vector<Monomial> expect = {Monomial({0, 0}), Monomial({1, 0}), Monomial({0, 1}),
                                    Monomial({2, 0}), Monomial({1, 1}), Monomial({0, 2})};
    CHECK(m22 == expect);
    CHECK(std::is_sorted(m22.begin(), m22.end(), grlex_enum_less));
}

TEST_CASE("enumeration counts match the brute-force generator and C(n+d, n)") {
    for (std::size_t n = 1; n <= 4; ++n) {
        for (std::uint32_t d = 0; d <= 6; ++d) {
            auto fast = enumerate_monomials(n, d);
            auto brute = testsupport::brute_force_monomials(n, d);
            CHECK(fast.size() == brute.size());
            CHECK(fast.size() == binomial_coefficient(n + d, n));
            // same set: every brute monomial appears exactly once in fast
            std::sort(brute.begin(), brute.end(), grlex_enum_less);
            auto sorted = fast;
            std::sort(sorted.begin(), sorted.end(), grlex_enum_less);
            CHECK(sorted == brute);
        }
    }
}

TEST_CASE("poly_eval matches hand values") {
    // x1^2 + x2 at (2, 3) -> 7
    Polynomial p(2);
    p.add_term(Monomial({2, 0}), Rat(1));
    p.add_term(Monomial({0, 1}), Rat(1));
    CHECK(p.eval<Rat>({Rat(2), Rat(3)}) == Rat(7));

    Polynomial one = Polynomial::constant(2, Rat(1));
    CHECK(one.eval<Rat>({Rat(17), Rat(-4)}) == Rat(1));
    CHECK(one.eval<Rat>({Rat(0), Rat(0)}) == Rat(1));

    // x1^3 - x2^2 at (1, 1) -> 0
    Polynomial q = parse_polynomial("x1^3 - x2^2");
    CHECK(q.eval<Rat>({Rat(1), Rat(1)}) == Rat(0));

    CHECK_THROWS_AS(p.eval<Rat>({Rat(1)}), std::invalid_argument);
}

TEST_CASE("poly_eval is a ring homomorphism at fixed points") {
    SplitMix64 g(11);
    SamplerConfig cfg;
    for (int rep = 0; rep < 40; ++rep) {
        auto p = rand_poly(g, 3, 3, 4);
        auto q = rand_poly(g, 3, 3, 4);
        auto pt = sample_point<Rat>(g, 3, cfg);
        CHECK((p + q).eval<Rat>(pt) == p.eval<Rat>(pt) + q.eval<Rat>(pt));
        CHECK((p * q).eval<Rat>(pt) == p.eval<Rat>(pt) * q.eval<Rat>(pt));
    }
}

TEST_CASE("evaluation over gaussian rationals") {
    // x1^2 + x2^2 vanishes on the isotropic line (t, it)
    Polynomial p = parse_polynomial("x1^2 + x2^2");
    GaussRat t(Rat(3, 2));
    CHECK(p.eval<GaussRat>({t, t * GaussRat::i()}) == GaussRat(Rat(0)));
    CHECK(p.eval<GaussRat>({GaussRat(Rat(1)), GaussRat(Rat(1))}) == GaussRat(Rat(2)));
}

TEST_CASE("weighted_degree examples") {
    // s^3 - t^2 with weights (4, 6, 9): 3*4 = 2*6 = 12
    Polynomial b(3);
    b.add_term(Monomial({3, 0, 0}), Rat(1));
    b.add_term(Monomial({0, 2, 0}), Rat(-1));
    WeightVector w({4, 6, 9});
    auto d = weighted_degree(b, w);
    REQUIRE(d.has_value());
    CHECK(*d == 12);

    Polynomial p = parse_polynomial("x1 + x2^2");
    CHECK(*weighted_degree(p, WeightVector({2, 1})) == 2);

    Polynomial q = parse_polynomial("x1 + x2");
    CHECK(!weighted_degree(q, WeightVector({1, 2})).has_value());

    CHECK_THROWS_AS(weighted_degree(Polynomial::zero(2), WeightVector({1, 1})),
                    std::invalid_argument);
}

TEST_CASE("weighted homogeneity is exactly torus equivariance") {
    SplitMix64 g(23);
    SamplerConfig cfg;
    WeightVector w({4, 6, 9});
    Polynomial b(3);
    b.add_term(Monomial({3, 0, 0}), Rat(1));
    b.add_term(Monomial({0, 2, 0}), Rat(-1));
    auto d = *weighted_degree(b, w);
    for (int rep = 0; rep < 30; ++rep) {
        Rat lambda = sample_nonzero_rat(g, cfg);
        auto x = sample_point<Rat>(g, 3, cfg);
        std::vector<Rat> scaled = x;
        for (std::size_t i = 0; i < 3; ++i) scaled[i] *= scalar_pow(lambda, w[i]);
        CHECK(b.eval<Rat>(scaled) == scalar_pow(lambda, d) * b.eval<Rat>(x));
    }
}

TEST_CASE("polynomial term storage is leading-first graded lex") {
    Polynomial p = parse_polynomial("x2^2 - x1^3");
    auto it = p.terms().begin();
    CHECK(it->first == Monomial({3, 0}));  // degree 3 term leads
    CHECK(it->second == Rat(-1));
    ++it;
    CHECK(it->first == Monomial({0, 2}));
}

TEST_CASE("zero coefficients never stored; cancellation removes terms") {
    Polynomial p(2);
    p.add_term(Monomial({1, 0}), Rat(0));
    CHECK(p.is_zero());
    p.add_term(Monomial({1, 0}), Rat(2));
    p.add_term(Monomial({1, 0}), Rat(-2));
    CHECK(p.is_zero());
    CHECK(p.term_count() == 0);
}

TEST_CASE("polymap rejects zero components and mixed arities") {
    std::vector<Polynomial> comps;
    comps.push_back(Polynomial::constant(2, Rat(1)));
    comps.push_back(Polynomial::zero(2));
    CHECK_THROWS_AS(PolyMap(2, std::move(comps)), std::invalid_argument);

    std::vector<Polynomial> comps2;
    comps2.push_back(Polynomial::constant(2, Rat(1)));
    comps2.push_back(Polynomial::constant(3, Rat(1)));
    CHECK_THROWS_AS(PolyMap(2, std::move(comps2)), std::invalid_argument);
}

TEST_CASE("polynomial parser") {
    CHECK(parse_polynomial("y1^2+y2^2").str() == "x1^2 + x2^2");
    CHECK(parse_polynomial("x1x2").term_count() == 1);
    CHECK(parse_polynomial("2/3*x^4 - y").nvars() == 2);
    CHECK(parse_polynomial("y^4").nvars() == 1);  // bare letters by first appearance
    CHECK(parse_polynomial("s + t^2 + u", 3).nvars() == 3);
    CHECK_THROWS_AS(parse_polynomial("x1 + y"), std::invalid_argument);
    CHECK_THROWS_AS(parse_polynomial(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_polynomial("x1 +"), std::invalid_argument);
}
