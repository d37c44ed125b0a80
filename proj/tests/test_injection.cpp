#include <cstdint>
#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "scrambler/injection.hpp"

using namespace scrambler;

namespace {

std::vector<Word> snapshot(const PhysicalMemory& memory) {
    std::vector<Word> image(memory.capacity());
    for (std::size_t addr = 0; addr < memory.capacity(); ++addr)
        image[addr] = memory.load(addr);
    return image;
}

} // namespace

TEST_CASE("scramble consumes draws only per repetition") {
    PhysicalMemory memory(1000);
    InjectionEngine engine(memory, 1);

    engine.scramble(0, 1.0);
    CHECK(engine.rng() == Prng(1)); // zero repetitions, zero draws

    engine.scramble(1, 0.0);
    Prng expected(1);
    expected.next_u64(); // index draw
    expected.next_u64(); // bernoulli draw; no mask on failure
    CHECK(engine.rng() == expected);
    CHECK(engine.scrambled_count() == 0);
    CHECK(snapshot(memory) == std::vector<Word>(1000, 0));
}

TEST_CASE("a forced scramble corrupts exactly the predicted word") {
    PhysicalMemory memory(1000);
    InjectionEngine engine(memory, 7);

    Prng reference(7);
    const std::uint64_t addr = reference.uniform_index(1000);
    reference.bernoulli(1.0);
    const Word mask = static_cast<Word>(reference.next_u64());
    REQUIRE(mask != 0); // this seed's first mask draw needs no redraw

    engine.scramble(1, 1.0);
    CHECK(engine.scrambled_count() == 1);
    CHECK(engine.rng() == reference);
    for (std::size_t a = 0; a < memory.capacity(); ++a)
        CHECK(memory.load(a) == (a == addr ? mask : 0));
}

TEST_CASE("a degenerate burst equals a forced single scramble") {
    PhysicalMemory scrambled(500);
    PhysicalMemory bursted(500);
    InjectionEngine a(scrambled, 99);
    InjectionEngine b(bursted, 99);

    a.scramble(1, 1.0);
    b.burst(1, 1.0, 1);
    CHECK(snapshot(scrambled) == snapshot(bursted));
    CHECK(a.scrambled_count() == b.scrambled_count());
}

TEST_CASE("a burst fires as a whole and flips every covered word") {
    PhysicalMemory memory(1000);
    InjectionEngine engine(memory, 5);

    Prng reference(5);
    const std::uint64_t start = reference.uniform_index(1000 - 10 + 1);

    engine.burst(1, 1.0, 10);
    CHECK(engine.scrambled_count() == 10);
    const auto image = snapshot(memory);
    for (std::size_t addr = 0; addr < memory.capacity(); ++addr) {
        if (addr >= start && addr < start + 10)
            CHECK(image[addr] != 0); // fresh nonzero mask per covered word
        else
            CHECK(image[addr] == 0);
    }
}

TEST_CASE("a gated-out burst consumes two draws and changes nothing") {
    PhysicalMemory memory(1000);
    InjectionEngine engine(memory, 11);

    engine.burst(1, 0.0, 10);
    Prng expected(11);
    expected.next_u64();
    expected.next_u64();
    CHECK(engine.rng() == expected);
    CHECK(engine.scrambled_count() == 0);
    CHECK(snapshot(memory) == std::vector<Word>(1000, 0));
}

TEST_CASE("burst length is bounded by the memory capacity") {
    PhysicalMemory memory(100);
    InjectionEngine engine(memory, 1);
    CHECK_THROWS_AS(engine.burst(1, 1.0, 101), std::invalid_argument);
    CHECK_THROWS_AS(engine.burst(1, 1.0, 0), std::invalid_argument);
    engine.burst(1, 1.0, 100); // exactly capacity is fine: start must be 0
    CHECK(engine.scrambled_count() == 100);
}

TEST_CASE("identical seed and commands give identical corruption") {
    PhysicalMemory first(2000);
    PhysicalMemory second(2000);
    InjectionEngine a(first, 1234);
    InjectionEngine b(second, 1234);
    for (int i = 0; i < 3; ++i) {
        a.scramble(500, 0.5);
        b.scramble(500, 0.5);
        a.burst(20, 0.5, 7);
        b.burst(20, 0.5, 7);
    }
    CHECK(snapshot(first) == snapshot(second));
    CHECK(a.scrambled_count() == b.scrambled_count());

    PhysicalMemory third(2000);
    InjectionEngine c(third, 1235);
    for (int i = 0; i < 3; ++i) {
        c.scramble(500, 0.5);
        c.burst(20, 0.5, 7);
    }
    CHECK(snapshot(third) != snapshot(first)); // a different seed moves the faults
}

TEST_CASE("scrambled_count statistics match the reference script") {
    PhysicalMemory memory(220000);
    InjectionEngine engine(memory, 1);
    for (int i = 0; i < 4; ++i) engine.scramble(10000, 0.9183156388887342);
    // Expectation 40000 * 0.91832 = 36733; tolerance 3%.
    CHECK(engine.scrambled_count() >= 35631);
    CHECK(engine.scrambled_count() <= 37835);
}

TEST_CASE("single-command counts land near n*p") {
    PhysicalMemory memory(50000);
    InjectionEngine engine(memory, 42);
    engine.scramble(10000, 0.9183156388887342);
    const double expected = 9183.0;
    CHECK(static_cast<double>(engine.scrambled_count()) > expected * 0.97);
    CHECK(static_cast<double>(engine.scrambled_count()) < expected * 1.03);
}
