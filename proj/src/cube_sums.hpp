#pragma once

// Block sums over the dyadic cubes of one scale, for grids whose torus is a
// union of such cubes. Blocks are numbered row-major (b0 * nb + b1).

#include <span>
#include <vector>

#include "vvfm/dyadic.hpp"
#include "vvfm/grid.hpp"

namespace vvfm::detail {

/// Grid cells per side of a scale-nu cube (2^{finest - nu}); throws if nu is
/// finer than the grid or coarser than the torus.
std::size_t block_width(const GridSpec& grid, int nu);

/// Number of scale-nu cubes per axis.
std::size_t blocks_per_axis(const GridSpec& grid, int nu);

/// Means of `values` over every scale-nu cube.
std::vector<double> block_means(std::span<const double> values, const GridSpec& grid, int nu);

/// Block index of the scale-nu cube containing flat sample i.
std::size_t block_of(const GridSpec& grid, int nu, std::size_t flat);

/// The dyadic cube of a block index.
DyadicCube block_cube(const GridSpec& grid, int nu, std::size_t block);

/// Adds `value` to every grid sample inside q.
void paint_add(std::span<double> target, const GridSpec& grid, const DyadicCube& q, double value);
/// target = max(target, value) over q.
void paint_max(std::span<double> target, const GridSpec& grid, const DyadicCube& q, double value);

}  // namespace vvfm::detail
