// SPDX-License-Identifier: Apache-2.0

#include <random>

#include "capplan/money_time.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace capplan;

TEST_CASE("growth_factor matches direct compounding") {
    CHECK(growth_factor(0.02, 34) == doctest::Approx(1.9608).epsilon(1e-4));
    CHECK(growth_factor(0.02, 34) ==
          doctest::Approx(testutil::growth_factor_oracle(0.02, 34)).epsilon(1e-12));
    CHECK(growth_factor(0.0, 0) == 1.0);
    CHECK(growth_factor(0.17, 0) == 1.0);
    CHECK(growth_factor(-0.3, 0) == 1.0);
}

TEST_CASE("discount_factor is the reciprocal compound factor") {
    CHECK(discount_factor(0.06, 24) == doctest::Approx(0.2470).epsilon(1e-4));
    CHECK(discount_factor(0.06, 24) * growth_factor(0.06, 24) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("growth_factor rejects bad input") {
    CHECK_THROWS_AS(growth_factor(0.02, -1), std::invalid_argument);
    CHECK_THROWS_AS(growth_factor(-1.0, 3), std::invalid_argument);
    CHECK_THROWS_AS(growth_factor(-1.5, 3), std::invalid_argument);
}

TEST_CASE("growth_factor is multiplicative across split periods") {
    std::mt19937 rng(7101);
    std::uniform_real_distribution<double> rate(-0.499, 0.499);
    std::uniform_int_distribution<int> years(0, 50);
    for (int i = 0; i < 300; ++i) {
        const double r = rate(rng);
        const int a = years(rng), b = years(rng);
        const double joint = growth_factor(r, a + b);
        const double split = growth_factor(r, a) * growth_factor(r, b);
        CHECK(joint == doctest::Approx(split).epsilon(1e-12));
    }
}

TEST_CASE("real_rate follows the exact Fisher relation") {
    CHECK(real_rate(0.054, 0.0) == doctest::Approx(0.054).epsilon(1e-15));
    CHECK(real_rate(0.054, 0.02) == doctest::Approx(0.03333).epsilon(1e-5));
    // Inflation value that reconciles a 5.4% nominal with a 2.8% real rate.
    CHECK(real_rate(0.054, 0.0253) == doctest::Approx(0.0280).epsilon(5e-4));
    CHECK_THROWS_AS(real_rate(-1.0, 0.02), std::invalid_argument);
    CHECK_THROWS_AS(real_rate(0.05, -1.0), std::invalid_argument);
}

TEST_CASE("nominal_rate inverts real_rate") {
    std::mt19937 rng(7102);
    std::uniform_real_distribution<double> rate(-0.5, 0.5);
    for (int i = 0; i < 300; ++i) {
        const double nominal = rate(rng), inflation = rate(rng);
        const double recovered = nominal_rate(real_rate(nominal, inflation), inflation);
        CHECK(recovered == doctest::Approx(nominal).epsilon(1e-12));
    }
}

TEST_CASE("annualized_growth recovers the compound rate") {
    CHECK(annualized_growth(Money{201000.0}, Money{574000.0}, 20) ==
          doctest::Approx(0.0539).epsilon(5e-4 / 0.0539));
    CHECK(annualized_growth(Money{42000.0}, Money{42000.0}, 7) == doctest::Approx(0.0));
    CHECK(annualized_growth(Money{100.0}, Money{200.0}, 1) == doctest::Approx(1.0));
    CHECK_THROWS_AS(annualized_growth(Money{0.0}, Money{1.0}, 1), std::invalid_argument);
    CHECK_THROWS_AS(annualized_growth(Money{1.0}, Money{-2.0}, 1), std::invalid_argument);
    CHECK_THROWS_AS(annualized_growth(Money{1.0}, Money{2.0}, 0), std::invalid_argument);
}

TEST_CASE("annualized_growth inverts growth_factor") {
    std::mt19937 rng(7103);
    std::uniform_real_distribution<double> rate(-0.199, 0.199);
    std::uniform_int_distribution<int> years(1, 50);
    std::uniform_real_distribution<double> base(1.0, 500000.0);
    for (int i = 0; i < 300; ++i) {
        const double r = rate(rng);
        const int n = years(rng);
        const Money start{base(rng)};
        const Money end = start * growth_factor(r, n);
        CHECK(std::abs(annualized_growth(start, end, n) - r) <= 1e-9);
    }
}

TEST_CASE("money rounds half away from zero at presentation only") {
    CHECK(Money{2.5}.rounded_pounds() == 3);
    CHECK(Money{-2.5}.rounded_pounds() == -3);
    CHECK(Money{2.4}.rounded_pounds() == 2);
    CHECK(Money{-2.4}.rounded_pounds() == -2);
    CHECK(Money{0.0}.rounded_pounds() == 0);
    CHECK(Money{17.25}.pounds() == 17.25);  // internal value untouched
    CHECK_THROWS_AS(Money{std::numeric_limits<double>::quiet_NaN()}.rounded_pounds(),
                    std::invalid_argument);
}

TEST_CASE("money arithmetic and comparisons") {
    const Money a{100.0}, b{40.0};
    CHECK((a + b).pounds() == 140.0);
    CHECK((a - b).pounds() == 60.0);
    CHECK((a * 1.5).pounds() == 150.0);
    CHECK((0.5 * a).pounds() == 50.0);
    CHECK(a / b == 2.5);
    CHECK((-a).pounds() == -100.0);
    CHECK(abs(Money{-3.0}) == Money{3.0});
    CHECK(a > b);
    CHECK(Money{} == Money{0.0});
}

TEST_CASE("horizon bounds and lookup") {
    const Horizon h{2016, 2050};
    h.validate();
    CHECK(h.length() == 35);
    CHECK(h.contains(2016));
    CHECK(h.contains(2050));
    CHECK_FALSE(h.contains(2051));
    CHECK(h.index_of(2020) == 4);

    CHECK_THROWS_AS((Horizon{2050, 2016}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((Horizon{1800, 2000}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((Horizon{2000, 2300}.validate()), std::invalid_argument);
    Horizon single{2020, 2020};
    single.validate();
    CHECK(single.length() == 1);
}

TEST_CASE("money convention labels") {
    CHECK(to_string(MoneyConvention::BaseYearReal) == "base-year real");
    CHECK(to_string(MoneyConvention::Nominal) == "nominal");
}
