#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

#include "scrambler/voting.hpp"

namespace scrambler {

/// Flat array of words standing in for the raw storage device. Fresh
/// memory is zero-filled. Fault injection flips bits through toggle();
/// nothing else in the system mutates storage behind the store's back.
class PhysicalMemory {
public:
    explicit PhysicalMemory(std::size_t capacity) : words_(capacity, 0) {}

    std::size_t capacity() const { return words_.size(); }

    Word load(std::size_t addr) const {
        assert(addr < words_.size());
        return words_[addr];
    }

    void store(std::size_t addr, Word value) {
        assert(addr < words_.size());
        words_[addr] = value;
    }

    /// XORs `mask` into the word at `addr` (models radiation-style bit flips).
    void toggle(std::size_t addr, Word mask) {
        assert(addr < words_.size());
        words_[addr] ^= mask;
    }

private:
    std::vector<Word> words_;
};

} // namespace scrambler
