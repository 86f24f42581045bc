#pragma once

#include <span>

#include "vvfm/grid.hpp"

namespace vvfm::detail {

/// Unnormalised in-place DFT over a d-dimensional n^d array (row-major).
/// sign = -1 computes sum x_j e^{-2 pi i jk/n}; sign = +1 the conjugate kernel.
void dft_in_place(std::span<cplx> data, int dim, std::size_t n, int sign);

}  // namespace vvfm::detail
