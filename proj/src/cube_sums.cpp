#include "cube_sums.hpp"

#include <algorithm>
#include <sstream>

namespace vvfm::detail {

std::size_t block_width(const GridSpec& grid, int nu) {
    const int J = grid.dyadic_level();
    const int finest = grid.finest_scale();
    if (nu < -J || nu > finest) {
        std::ostringstream msg;
        msg << "scale " << nu << " outside [" << -J << ", " << finest << "] for " << grid.describe();
        throw DomainError(msg.str());
    }
    return std::size_t{1} << (finest - nu);
}

std::size_t blocks_per_axis(const GridSpec& grid, int nu) { return grid.n() / block_width(grid, nu); }

std::vector<double> block_means(std::span<const double> values, const GridSpec& grid, int nu) {
    const std::size_t w = block_width(grid, nu);
    const std::size_t n = grid.n();
    const std::size_t nb = n / w;
    if (grid.dim() == 1) {
        std::vector<double> out(nb, 0.0);
        for (std::size_t i = 0; i < n; ++i) out[i / w] += values[i];
        for (auto& v : out) v /= static_cast<double>(w);
        return out;
    }
    // Rows first, then columns.
    std::vector<double> rows(n * nb, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) rows[i * nb + j / w] += values[i * n + j];
    std::vector<double> out(nb * nb, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t b = 0; b < nb; ++b) out[(i / w) * nb + b] += rows[i * nb + b];
    const double cells = static_cast<double>(w * w);
    for (auto& v : out) v /= cells;
    return out;
}

std::size_t block_of(const GridSpec& grid, int nu, std::size_t flat) {
    const std::size_t w = block_width(grid, nu);
    const auto idx = grid.unflatten(flat);
    if (grid.dim() == 1) return idx[0] / w;
    return (idx[0] / w) * (grid.n() / w) + idx[1] / w;
}

DyadicCube block_cube(const GridSpec& grid, int nu, std::size_t block) {
    const std::size_t nb = blocks_per_axis(grid, nu);
    // -L = -2^J sits at cube index -2^{J + nu}.
    const std::int64_t offset = std::int64_t{1} << (grid.dyadic_level() + nu);
    if (grid.dim() == 1) return DyadicCube::make(1, nu, static_cast<std::int64_t>(block) - offset);
    return DyadicCube::make(2, nu, static_cast<std::int64_t>(block / nb) - offset,
                            static_cast<std::int64_t>(block % nb) - offset);
}

namespace {

template <typename Op>
void paint(std::span<double> target, const GridSpec& grid, const DyadicCube& q, Op op) {
    const CubeCells cells = cube_cells(q, grid);
    if (grid.dim() == 1) {
        for (std::size_t i = 0; i < cells.width; ++i) op(target[cells.start[0] + i]);
        return;
    }
    for (std::size_t i = 0; i < cells.width; ++i)
        for (std::size_t j = 0; j < cells.width; ++j) op(target[grid.flatten(cells.start[0] + i, cells.start[1] + j)]);
}

}  // namespace

void paint_add(std::span<double> target, const GridSpec& grid, const DyadicCube& q, double value) {
    paint(target, grid, q, [value](double& t) { t += value; });
}

void paint_max(std::span<double> target, const GridSpec& grid, const DyadicCube& q, double value) {
    paint(target, grid, q, [value](double& t) { t = std::max(t, value); });
}

}  // namespace vvfm::detail
