#pragma once

#include <cstddef>
#include <cstdint>

namespace scrambler {

/// Block-interleaved placement of cell replicas in flat physical memory.
///
/// Cells are grouped in blocks of `stride` consecutive cells; each block
/// owns a contiguous region of stride * r_max words in which replica j of
/// every member cell lives in the j-th slice. Replicas of one cell are
/// therefore exactly `stride` words apart, so a physically contiguous
/// fault burst shorter than the stride touches at most one replica per
/// cell.
class LayoutMap {
public:
    /// Requires n_cells > 0, stride in [1, n_cells], n_cells divisible by
    /// stride, and odd r_max in [3, 11]; throws std::invalid_argument
    /// otherwise.
    LayoutMap(std::uint64_t n_cells, std::uint64_t stride, int r_max);

    /// Physical address of replica `replica` of cell `cell`.
    std::size_t addr(std::uint64_t cell, int replica) const {
        const std::uint64_t block = cell / stride_;
        const std::uint64_t slot = cell % stride_;
        return block * (stride_ * r_max_) + static_cast<std::uint64_t>(replica) * stride_ + slot;
    }

    std::uint64_t n_cells() const { return n_cells_; }
    std::uint64_t stride() const { return stride_; }
    int r_max() const { return r_max_; }

    /// Total physical words: n_cells * r_max.
    std::size_t capacity() const { return n_cells_ * r_max_; }

private:
    std::uint64_t n_cells_;
    std::uint64_t stride_;
    std::uint64_t r_max_;
};

} // namespace scrambler
