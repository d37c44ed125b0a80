#include <stdexcept>

#include "doctest.h"

#include "scrambler/adaptation.hpp"
#include "scrambler/prng.hpp"

using namespace scrambler;

namespace {

const RiskSample kZero{0, 1};
const RiskSample kFull{1, 1};

} // namespace

TEST_CASE("high risk raises redundancy immediately") {
    RedundancyController controller({}, 5);
    CHECK(controller.publish() == 5);

    const auto event = controller.observe(kFull, 1);
    REQUIRE(event.has_value());
    CHECK(event->cycle == 1);
    CHECK(event->new_level == 7);
    CHECK(event->cause == RedundancyEvent::Cause::raised);
    CHECK(controller.publish() == 7);
}

TEST_CASE("the raise threshold is strict") {
    RedundancyController controller({}, 5);
    CHECK_FALSE(controller.observe(RiskSample{1, 2}, 1).has_value()); // exactly 1/2
    CHECK(controller.publish() == 5);
    CHECK(controller.observe(RiskSample{2, 3}, 2).has_value()); // just above
    CHECK(controller.publish() == 7);
}

TEST_CASE("a full calm window lowers redundancy once") {
    RedundancyController controller({}, 5);
    for (std::uint64_t cycle = 1; cycle < 1000; ++cycle)
        CHECK_FALSE(controller.observe(kZero, cycle).has_value());
    const auto event = controller.observe(kZero, 1000);
    REQUIRE(event.has_value());
    CHECK(event->cycle == 1000);
    CHECK(event->new_level == 3);
    CHECK(event->cause == RedundancyEvent::Cause::lowered);
    CHECK(controller.calm_count() == 0); // the change restarts the window
}

TEST_CASE("saturation is silent at both bounds") {
    RedundancyController top({}, 11);
    CHECK_FALSE(top.observe(kFull, 1).has_value());
    CHECK(top.publish() == 11);
    CHECK(top.calm_count() == 0);

    RedundancyController bottom({}, 3);
    for (std::uint64_t cycle = 1; cycle <= 3000; ++cycle)
        CHECK_FALSE(bottom.observe(kZero, cycle).has_value());
    CHECK(bottom.publish() == 3);
}

TEST_CASE("any nonzero risk restarts the calm window") {
    RedundancyController controller({}, 5);
    for (std::uint64_t cycle = 1; cycle <= 999; ++cycle)
        controller.observe(kZero, cycle);
    CHECK(controller.calm_count() == 999);
    // Low-grade risk (below the raise threshold) still interrupts calm.
    CHECK_FALSE(controller.observe(RiskSample{1, 3}, 1000).has_value());
    CHECK(controller.calm_count() == 0);
    for (std::uint64_t cycle = 1001; cycle <= 1999; ++cycle)
        CHECK_FALSE(controller.observe(kZero, cycle).has_value());
    const auto event = controller.observe(kZero, 2000);
    REQUIRE(event.has_value());
    CHECK(event->cycle == 2000);
}

TEST_CASE("consecutive lowerings are at least one window apart") {
    RedundancyController controller({}, 7);
    std::uint64_t cycle = 0;
    std::uint64_t first = 0;
    std::uint64_t second = 0;
    while (second == 0) {
        const auto event = controller.observe(kZero, ++cycle);
        if (!event) continue;
        if (first == 0)
            first = event->cycle;
        else
            second = event->cycle;
    }
    CHECK(first == 1000);
    CHECK(second == 2000);
    CHECK(controller.publish() == 3);
}

TEST_CASE("cycles must be strictly increasing") {
    RedundancyController controller({}, 5);
    controller.observe(kZero, 10);
    CHECK_THROWS_AS(controller.observe(kZero, 10), std::invalid_argument);
    CHECK_THROWS_AS(controller.observe(kZero, 9), std::invalid_argument);
}

TEST_CASE("construction validates the initial level and policy") {
    CHECK_THROWS_AS(RedundancyController({}, 4), std::invalid_argument);
    CHECK_THROWS_AS(RedundancyController({}, 1), std::invalid_argument);
    CHECK_THROWS_AS(RedundancyController({}, 13), std::invalid_argument);

    AdaptationPolicy bad;
    bad.calm_window = 0;
    CHECK_THROWS_AS(RedundancyController(bad, 5), std::invalid_argument);
    bad = {};
    bad.step = 1;
    CHECK_THROWS_AS(RedundancyController(bad, 5), std::invalid_argument);
    bad = {};
    bad.min_redundancy = 9;
    bad.max_redundancy = 3;
    CHECK_THROWS_AS(RedundancyController(bad, 5), std::invalid_argument);
}

TEST_CASE("levels stay odd and bounded under random risk streams") {
    Prng rng(99);
    RedundancyController controller({}, 5);
    int previous_level = 5;
    std::uint64_t previous_cycle = 0;
    for (std::uint64_t cycle = 1; cycle <= 200000; ++cycle) {
        // Mostly calm stream with occasional disturbances of every grade.
        RiskSample risk = kZero;
        const std::uint64_t roll = rng.uniform_index(1000);
        if (roll < 3)
            risk = kFull;
        else if (roll < 6)
            risk = RiskSample{2, 3};
        else if (roll < 9)
            risk = RiskSample{1, 3};
        const auto event = controller.observe(risk, cycle);
        const int level = controller.publish();
        REQUIRE(level >= 3);
        REQUIRE(level <= 11);
        REQUIRE(level % 2 == 1);
        if (event) {
            REQUIRE(event->new_level == level);
            REQUIRE(event->cycle == cycle);
            REQUIRE(event->cycle > previous_cycle);
            REQUIRE((event->new_level - previous_level == 2 ||
                     event->new_level - previous_level == -2));
            previous_cycle = event->cycle;
            previous_level = event->new_level;
        }
    }
}
