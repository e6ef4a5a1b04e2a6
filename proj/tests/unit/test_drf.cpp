#include "doctest.h"

#include "fitsim/drf.hpp"

#include <cmath>
#include <stdexcept>

using namespace fitsim;

TEST_CASE("negative step switches off strictly above the threshold") {
    const auto f = DisparityResponse::negative_step(1.5);
    CHECK(f(1.2) == 1.0);
    CHECK(f(1.5) == 1.0);
    CHECK(f(1.6) == 0.0);
    CHECK(f(0.0) == 1.0);
}

TEST_CASE("positive step switches on strictly above the threshold") {
    const auto f = DisparityResponse::positive_step(1.0);
    CHECK(f(1.0) == 0.0);
    CHECK(f(0.2) == 0.0);
    CHECK(f(1.0000001) == 1.0);
}

TEST_CASE("linear response passes through (1, 1) and clamps at zero") {
    for (double intercept : {1.05, 1.55, 2.05}) {
        const auto f = DisparityResponse::linear(intercept);
        CHECK(f(1.0) == 1.0);
        CHECK(f(0.0) == intercept);
        const double crossing = intercept / (intercept - 1.0);
        CHECK(f(crossing) <= 1e-15);
        CHECK(f(crossing * (1.0 + 1e-12)) == 0.0);
        CHECK(f(crossing + 1.0) == 0.0);
    }
}

TEST_CASE("inverse response") {
    const auto f = DisparityResponse::inverse();
    CHECK(f(2.0) == 0.5);
    CHECK(f(1.0) == 1.0);
    CHECK(f(0.25) == 4.0);
    CHECK_THROWS_AS(f(0.0), std::domain_error);
}

TEST_CASE("convex response is normalized at zero and capped") {
    const auto f = DisparityResponse::convex_exp_sum(10.0);
    CHECK(f(0.0) == 1.0);
    CHECK(f(20.0) == 10.0);
    // Unlike the step/linear/inverse families this curve does not pass
    // through (1, 1); it dips below before climbing again.
    CHECK(f(1.0) < 0.5);
    CHECK(f(1.0) == doctest::Approx((std::exp(-0.5) + std::exp(-0.65)) /
                                    (std::exp(1.0) + std::exp(-1.0))));
}

TEST_CASE("convex response has its interior minimum between 1.5 and 2.5") {
    const auto f = DisparityResponse::convex_exp_sum(10.0);
    double best_x = 0.0, best = f(0.0);
    for (double x = 0.0; x <= 6.0; x += 1e-3) {
        const double v = f(x);
        if (v < best) {
            best = v;
            best_x = x;
        }
    }
    CHECK(best_x > 1.5);
    CHECK(best_x < 2.5);
    CHECK(best > 0.0);
}

TEST_CASE("all families stay nonnegative; bounded families respect their bound") {
    const auto instances = standard_instances();
    for (const auto& f : instances) {
        const double bound = std::max({1.0, f.param()});
        for (double x = 0.0; x <= 30.0; x += 0.01) {
            if (f.kind() == DrfKind::Inverse && x == 0.0) continue;
            const double v = f(x);
            CHECK(v >= 0.0);
            // The inverse response is unbounded as x -> 0+; every other
            // family is capped by its parameter (or 1).
            if (f.kind() != DrfKind::Inverse || x >= 1.0) CHECK(v <= bound);
        }
    }
}

TEST_CASE("monotonicity by family") {
    auto non_increasing = [](const DisparityResponse& f) {
        double prev = f(1e-6);
        for (double x = 1e-6; x <= 20.0; x += 0.01) {
            const double v = f(x);
            if (v > prev + 1e-15) return false;
            prev = v;
        }
        return true;
    };
    CHECK(non_increasing(DisparityResponse::negative_step(1.3)));
    CHECK(non_increasing(DisparityResponse::linear(1.55)));
    CHECK(non_increasing(DisparityResponse::inverse()));

    const auto pos = DisparityResponse::positive_step(1.0);
    double prev = pos(0.0);
    for (double x = 0.0; x <= 5.0; x += 0.01) {
        CHECK(pos(x) >= prev);
        prev = pos(x);
    }
}

TEST_CASE("responses equal 1 at disparity 1 where the parameter admits it") {
    CHECK(DisparityResponse::negative_step(1.0)(1.0) == 1.0);
    CHECK(DisparityResponse::negative_step(2.6)(1.0) == 1.0);
    CHECK(DisparityResponse::positive_step(0.5)(1.0) == 1.0);
    CHECK(DisparityResponse::linear(1.05)(1.0) == 1.0);
    CHECK(DisparityResponse::linear(2.05)(1.0) == 1.0);
    CHECK(DisparityResponse::inverse()(1.0) == 1.0);
}

TEST_CASE("negative disparities are rejected") {
    CHECK_THROWS_AS(DisparityResponse::inverse()(-0.5), std::invalid_argument);
    CHECK_THROWS_AS(DisparityResponse::negative_step(1.0)(-1e-9), std::invalid_argument);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(DisparityResponse::negative_step(0.0), std::invalid_argument);
    CHECK_THROWS_AS(DisparityResponse::positive_step(-1.0), std::invalid_argument);
    CHECK_THROWS_AS(DisparityResponse::linear(1.0), std::invalid_argument);
    CHECK_THROWS_AS(DisparityResponse::convex_exp_sum(0.0), std::invalid_argument);
}

TEST_CASE("standard instances enumerate the sweep set") {
    const auto instances = standard_instances();
    REQUIRE(instances.size() == 27);

    int neg = 0, linear = 0, inverse = 0, convex = 0, pos = 0;
    double neg_min = 1e9, neg_max = -1e9;
    for (const auto& f : instances) {
        switch (f.kind()) {
        case DrfKind::NegativeStep:
            ++neg;
            neg_min = std::min(neg_min, f.param());
            neg_max = std::max(neg_max, f.param());
            break;
        case DrfKind::Linear: ++linear; break;
        case DrfKind::Inverse: ++inverse; break;
        case DrfKind::ConvexExpSum: ++convex; break;
        case DrfKind::PositiveStep: ++pos; break;
        }
    }
    CHECK(neg == 21);
    CHECK(neg_min == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(neg_max == doctest::Approx(2.6).epsilon(1e-12));
    CHECK(linear == 3);
    CHECK(inverse == 1);
    CHECK(convex == 1);
    CHECK(pos == 1);

    CHECK(instances[21].param() == 1.05);
    CHECK(instances[22].param() == 1.55);
    CHECK(instances[23].param() == 2.05);
    CHECK(instances[25].param() == 10.0);
    CHECK(instances[26].param() == 1.0);

    // Even spacing of the threshold grid.
    for (int i = 1; i < 21; ++i)
        CHECK(instances[i].param() - instances[i - 1].param() ==
              doctest::Approx(0.105).epsilon(1e-12));
}

TEST_CASE("spec strings parse and round trip") {
    for (const auto& f : standard_instances())
        CHECK(DisparityResponse::parse(f.spec_string()) == f);

    CHECK(DisparityResponse::parse("neg-step:1.5") == DisparityResponse::negative_step(1.5));
    CHECK(DisparityResponse::parse("inverse") == DisparityResponse::inverse());
}

TEST_CASE("malformed spec strings name the offending token") {
    CHECK_THROWS_WITH_AS(DisparityResponse::parse("neg-step:abc"),
                         doctest::Contains("abc"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(DisparityResponse::parse("sigmoid:2"),
                         doctest::Contains("sigmoid"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(DisparityResponse::parse("neg-step"),
                         doctest::Contains("neg-step"), std::invalid_argument);
    CHECK_THROWS_AS(DisparityResponse::parse("inverse:2"), std::invalid_argument);
    CHECK_THROWS_AS(DisparityResponse::parse("linear:"), std::invalid_argument);
}
