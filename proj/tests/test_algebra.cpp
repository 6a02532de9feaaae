#include <doctest.h>

#include <map>

#include "mz/polynomial.hpp"
#include "helpers.hpp"

using namespace mz;

namespace {
const Polynomial kQuartic{{224, -120, 0, 0, 1}};  // x^4 - 120x + 224
}

TEST_CASE("poly_eval: exact Horner") {
    CHECK(poly_eval(kQuartic, 2) == 0);
    CHECK(poly_eval(kQuartic, 8) == 3360);
    CHECK(poly_eval(Polynomial::zero(), 7) == 0);
    CHECK(poly_eval(kQuartic, Rational(1, 2)) == Rational(224 * 16 - 120 * 8 + 1, 16));
}

TEST_CASE("poly_eval_complex: value and derivative") {
    auto [v1, d1] = poly_eval_complex(Polynomial{{1, 0, 1}}, Complex(0, 1));
    CHECK(std::abs(v1) < 1e-15);
    CHECK(std::abs(d1 - Complex(0, 2)) < 1e-15);

    auto [v2, d2] = poly_eval_complex(Polynomial{{28, 6, 1}}, Complex(-3, std::sqrt(19.0)));
    (void)d2;
    CHECK(std::abs(v2) < 1e-10);

    auto [v3, d3] = poly_eval_complex(Polynomial{{-2, 1}}, Complex(5, 0));
    CHECK(v3 == Complex(3, 0));
    CHECK(d3 == Complex(1, 0));
}

TEST_CASE("poly_div_linear: synthetic division") {
    auto [q1, r1] = poly_div_linear(kQuartic, 2);
    CHECK(q1 == Polynomial{{-112, 4, 2, 1}});
    CHECK(r1 == 0);

    auto [q2, r2] = poly_div_linear(Polynomial{{Rational(-7, 3), 1}}, Rational(7, 3));
    CHECK(q2 == Polynomial{{1}});
    CHECK(r2 == 0);

    auto [q3, r3] = poly_div_linear(Polynomial{{0, 0, 1}}, 1);
    CHECK(q3 == Polynomial{{1, 1}});
    CHECK(r3 == 1);

    CHECK_THROWS_AS(poly_div_linear(Polynomial{{5}}, 1), DegreeTooSmall);
}

TEST_CASE("poly_from_roots: exact expansion") {
    CHECK(poly_from_roots({2, 4}) == Polynomial{{8, -6, 1}});
    CHECK(poly_from_roots({4, 6}) == Polynomial{{24, -10, 1}});
    CHECK(poly_from_roots({}, 3) == Polynomial::constant(3));
}

TEST_CASE("power_sums: Newton identities") {
    CHECK(power_sums(Polynomial{{8, -6, 1}}, 2) == std::vector<Rational>{6, 20});
    CHECK(power_sums(Polynomial{{0, 0, 1}}, 3) == std::vector<Rational>{0, 0, 0});
    CHECK(power_sums(Polynomial{{16, -10, 1}}, 1) == std::vector<Rational>{10});
    CHECK_THROWS_AS(power_sums(Polynomial::zero(), 1), ZeroPolynomial);
}

TEST_CASE("rational_roots: exact pre-pass") {
    auto r1 = rational_roots(kQuartic);
    CHECK(r1.roots == std::map<Rational, int>{{2, 1}, {4, 1}});
    CHECK(r1.deflated == Polynomial{{28, 6, 1}});

    auto r2 = rational_roots(Polynomial{{-80, 112, -35, 3}});
    CHECK(r2.roots == std::map<Rational, int>{{1, 1}, {4, 1}, {Rational(20, 3), 1}});
    CHECK(r2.deflated.degree() == 0);

    auto r3 = rational_roots(Polynomial{{1, 0, 1}});
    CHECK(r3.roots.empty());
    CHECK(r3.deflated == Polynomial{{1, 0, 1}});
}

TEST_CASE("property: poly_from_roots round-trips through rational_roots") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 40; ++trial) {
        std::uniform_int_distribution<int> size(1, 6);
        const int count = size(rng);
        std::vector<Rational> roots;
        std::map<Rational, int> expect;
        for (int i = 0; i < count; ++i) {
            Rational r = mztest::rand_rational(rng, 8, 3);
            roots.push_back(r);
            ++expect[r];
        }
        auto got = rational_roots(poly_from_roots(roots, mztest::rand_nonzero_rational(rng)));
        CHECK(got.roots == expect);
        CHECK(got.deflated.degree() == 0);
    }
}

TEST_CASE("property: division identity (x - A) * quotient + remainder = p") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 40; ++trial) {
        std::uniform_int_distribution<int> deg(1, 8);
        std::vector<Rational> coeffs;
        const int d = deg(rng);
        for (int i = 0; i < d; ++i) coeffs.push_back(mztest::rand_rational(rng));
        coeffs.push_back(mztest::rand_nonzero_rational(rng));
        const Polynomial p{coeffs};
        const Rational a = mztest::rand_rational(rng);
        auto [q, r] = poly_div_linear(p, a);
        CHECK(q * Polynomial{{-a, 1}} + Polynomial::constant(r) == p);
        CHECK(r == poly_eval(p, a));
    }
}

TEST_CASE("property: power_sums agree with direct sums over known roots") {
    std::mt19937 rng(999);
    for (int trial = 0; trial < 30; ++trial) {
        std::uniform_int_distribution<int> size(1, 6);
        const int count = size(rng);
        std::vector<Rational> roots;
        for (int i = 0; i < count; ++i) roots.push_back(mztest::rand_rational(rng, 6, 3));
        const Polynomial p = poly_from_roots(roots);
        auto sums = power_sums(p, count);
        for (int j = 1; j <= count; ++j) {
            Rational direct = 0;
            for (const auto& r : roots) direct += rational_pow(r, j);
            CHECK(sums[static_cast<size_t>(j - 1)] == direct);
        }
    }
}

TEST_CASE("property: rational arithmetic stays canonical") {
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 50; ++trial) {
        Rational a = mztest::rand_rational(rng), b = mztest::rand_nonzero_rational(rng);
        for (const Rational& v :
             {Rational(a + b), Rational(a - b), Rational(a * b), Rational(a / b)}) {
            CHECK(den(v) > 0);
            if (num(v) == 0)
                CHECK(den(v) == 1);
            else
                CHECK(boost::multiprecision::gcd(BigInt(boost::multiprecision::abs(num(v))),
                                                 BigInt(den(v))) == 1);
        }
    }
}
