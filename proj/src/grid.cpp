#include "qsm/grid.hpp"

#include <string>

namespace qsm {

GridSpec make_grid(int q)
{
    if (q < 1) {
        throw InvalidArgument("price-limit percent q must be >= 1, got " + std::to_string(q));
    }
    return GridSpec{q, 2 * q + 1};
}

} // namespace qsm
