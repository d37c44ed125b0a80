#include "scrambler/layout.hpp"

#include <stdexcept>

namespace scrambler {

LayoutMap::LayoutMap(std::uint64_t n_cells, std::uint64_t stride, int r_max)
    : n_cells_(n_cells), stride_(stride), r_max_(static_cast<std::uint64_t>(r_max)) {
    if (n_cells == 0)
        throw std::invalid_argument("layout: n_cells must be positive");
    if (stride == 0 || stride > n_cells)
        throw std::invalid_argument("layout: stride must be within [1, n_cells]");
    if (n_cells % stride != 0)
        throw std::invalid_argument("layout: n_cells must be a multiple of stride");
    if (r_max < 3 || r_max > 11 || r_max % 2 == 0)
        throw std::invalid_argument("layout: r_max must be odd and within [3, 11]");
}

} // namespace scrambler
