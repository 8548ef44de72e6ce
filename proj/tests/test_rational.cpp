#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kreg/rational.hpp"
#include "kreg/rng.hpp"

using namespace kreg;

TEST_CASE("rationals are stored in lowest terms with positive denominator") {
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(3, -6) == Rat(-1, 2));
    CHECK(Rat(3, -6).denominator() == 2);
    CHECK(Rat(0, 7) == Rat(0));
    CHECK(Rat(0).str() == "0");
    CHECK(Rat(-10, 5).str() == "-2");
    CHECK(Rat(5, 3).str() == "5/3");
}

TEST_CASE("rational parsing") {
    CHECK(Rat::from_string("7") == Rat(7));
    CHECK(Rat::from_string("-3/9") == Rat(-1, 3));
    CHECK(Rat::from_string("2/4") == Rat(1, 2));
    CHECK_THROWS_AS(Rat::from_string("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::from_string("abc"), std::invalid_argument);
    CHECK_THROWS_AS(Rat(1, 0), std::invalid_argument);
}

TEST_CASE("rational arithmetic") {
    CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
    CHECK(Rat(1, 2) - Rat(1, 2) == Rat(0));
    CHECK(Rat(2, 3) * Rat(3, 4) == Rat(1, 2));
    CHECK(Rat(1, 2) / Rat(1, 4) == Rat(2));
    CHECK_THROWS_AS(Rat(1) / Rat(0), std::invalid_argument);
    CHECK(Rat(1, 3) < Rat(1, 2));
    CHECK(-Rat(1, 2) == Rat(-1, 2));
}

TEST_CASE("field axioms hold on random rationals") {
    SplitMix64 g(42);
    SamplerConfig cfg;
    for (int i = 0; i < 300; ++i) {
        Rat a = sample_rat(g, cfg), b = sample_rat(g, cfg), c = sample_rat(g, cfg);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK(a / a == Rat(1));
        CHECK(a + (-a) == Rat(0));
    }
}

TEST_CASE("gaussian rational arithmetic follows i^2 = -1") {
    GaussRat i = GaussRat::i();
    CHECK(i * i == GaussRat(Rat(-1)));
    GaussRat z(Rat(1), Rat(2));
    GaussRat w(Rat(-3), Rat(1, 2));
    CHECK(z * w == GaussRat(Rat(-4), Rat(-11, 2)));
    CHECK(z + w == GaussRat(Rat(-2), Rat(5, 2)));
    CHECK(z.conj() == GaussRat(Rat(1), Rat(-2)));
    CHECK(z.norm() == Rat(5));
    CHECK((z / w) * w == z);
    CHECK_THROWS_AS(z / GaussRat(Rat(0)), std::invalid_argument);
}

TEST_CASE("gaussian field axioms on random values") {
    SplitMix64 g(7);
    SamplerConfig cfg;
    for (int i = 0; i < 200; ++i) {
        GaussRat a = sample_gauss(g, cfg), b = sample_gauss(g, cfg), c = sample_gauss(g, cfg);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        if (!a.is_zero()) CHECK(a / a == GaussRat(Rat(1)));
    }
}

TEST_CASE("scalar_pow") {
    CHECK(scalar_pow(Rat(2), 10) == Rat(1024));
    CHECK(scalar_pow(Rat(-1, 2), 3) == Rat(-1, 8));
    CHECK(scalar_pow(Rat(5), 0) == Rat(1));
    CHECK(scalar_pow(GaussRat::i(), 4) == GaussRat(Rat(1)));
    CHECK(scalar_pow(GaussRat::i(), 3) == GaussRat(Rat(0), Rat(-1)));
}

TEST_CASE("denominator lcm used by row integerization") {
    CHECK(denominator_lcm(Rat(3, 4)) == 4);
    CHECK(denominator_lcm(GaussRat(Rat(1, 6), Rat(1, 4))) == 12);
}

TEST_CASE("splitmix64 streams are deterministic and trial-indexed") {
    SplitMix64 a(123), b(123);
    for (int i = 0; i < 10; ++i) CHECK(a.next() == b.next());
    CHECK(trial_stream(5, 0) != trial_stream(5, 1));
    CHECK(trial_stream(5, 3) == trial_stream(5, 3));
}
