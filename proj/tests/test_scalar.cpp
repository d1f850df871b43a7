#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "qca/errors.hpp"
#include "qca/scalar.hpp"

using qca::Scalar;

namespace {

Scalar q(int h, long c = 1) { return Scalar::qpow(h, c); }

Scalar random_scalar(std::mt19937& rng, bool positive = false) {
    std::uniform_int_distribution<int> h(-6, 6), c(positive ? 0 : -3, 3), n(0, 4);
    Scalar s;
    for (int t = n(rng); t > 0; --t) s.add_term(h(rng), c(rng));
    return s;
}

}  // namespace

TEST_CASE("arithmetic examples") {
    const Scalar sym = q(2) + q(-2);
    CHECK(sym + Scalar(0) == sym);
    CHECK((q(2) - q(-2)) * (q(2) + q(-2)) == q(4) - q(-4));
    CHECK(q(1) * q(1) == q(2));
    CHECK(qca::q_minus_qinv() == q(2) - q(-2));
    CHECK(qca::q_plus_qinv() == sym);
    CHECK((q(3) - q(3)).is_zero());
}

TEST_CASE("bar") {
    CHECK(q(1).bar() == q(-1));
    CHECK((q(2) + q(-2)).bar() == q(2) + q(-2));
    CHECK((q(2) + q(-2)).is_bar_invariant());
    std::mt19937 rng(11);
    for (int t = 0; t < 200; ++t) {
        Scalar a = random_scalar(rng), b = random_scalar(rng);
        CHECK(a.bar().bar() == a);
        CHECK((a * b).bar() == a.bar() * b.bar());
        CHECK((a + b).bar() == a.bar() + b.bar());
    }
}

TEST_CASE("positivity") {
    CHECK((q(1) + Scalar(2)).is_positive());
    CHECK_FALSE((q(2) - q(-2)).is_positive());
    CHECK(Scalar(0).is_positive());
    std::mt19937 rng(12);
    for (int t = 0; t < 200; ++t) {
        Scalar a = random_scalar(rng, true), b = random_scalar(rng, true);
        REQUIRE(a.is_positive());
        CHECK((a * b).is_positive());
        CHECK((a + b).is_positive());
    }
}

TEST_CASE("exact division") {
    const Scalar d = q(2) - q(-2);
    CHECK(qca::div_exact(d, d) == Scalar(1));
    CHECK(qca::div_exact(q(4) - q(-4), d) == q(2) + q(-2));
    CHECK_THROWS_AS(qca::div_exact(Scalar(1), d), qca::NotDivisible);
    CHECK_THROWS_AS(qca::div_exact(d, Scalar(0)), qca::Error);
    std::mt19937 rng(13);
    for (int t = 0; t < 200; ++t) {
        Scalar a = random_scalar(rng), b = random_scalar(rng);
        if (b.is_zero()) continue;
        CHECK(qca::div_exact(a * b, b) == a);
    }
}

TEST_CASE("big coefficients stay exact") {
    Scalar s = q(1) + Scalar(1);
    Scalar p(1);
    for (int t = 0; t < 80; ++t) p *= s;
    // coefficient of q^{40/2} in (1 + q^{1/2})^80 is C(80,40)
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), 80, 40);
    CHECK(p.terms().at(40) == binom);
    CHECK(qca::div_exact(p, s) * s == p);
}

TEST_CASE("text form round trip") {
    CHECK(Scalar(0).str() == "0");
    CHECK(Scalar::parse("q^(1/2)") == q(1));
    CHECK(Scalar::parse(q(3, -2).str()) == q(3, -2));
    std::mt19937 rng(14);
    for (int t = 0; t < 100; ++t) {
        Scalar a = random_scalar(rng);
        CHECK(Scalar::parse(a.str()) == a);
    }
    CHECK_THROWS_AS(Scalar::parse("2*x"), qca::ParseError);
}

TEST_CASE("units") {
    CHECK(q(3, -1).is_unit());
    CHECK_FALSE(q(3, 2).is_unit());
    CHECK(q(3, -1) * q(3, -1).unit_inverse() == Scalar(1));
    CHECK_THROWS_AS((q(1) + q(2)).unit_inverse(), qca::NotInvertible);
}
