#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <vector>

#include "vvfm/grid.hpp"

namespace vvfm {

/// Q_{k,l} = { x : 2^-k l_i <= x_i <= 2^-k (l_i + 1) }. Integer indexed throughout.
struct DyadicCube {
    int dim = 1;
    int k = 0;
    std::array<std::int64_t, 2> l{0, 0};

    static DyadicCube make(int dim, int k, std::int64_t l0, std::int64_t l1 = 0);

    double side() const;
    double volume() const;
    double corner(int axis) const;

    /// The unique cube of scale nu <= k containing this one.
    DyadicCube ancestor(int nu) const;
    /// True when `inner` is contained in this cube (scales may be equal).
    bool contains(const DyadicCube& inner) const;

    auto operator<=>(const DyadicCube&) const = default;
    bool operator==(const DyadicCube&) const = default;
};

/// Axis-aligned box of scale-k cells [lo_i, hi_i) (integers, in units of 2^-k).
/// Concentric dilates 9P and 81P of a dyadic cube are boxes of this kind.
struct DyadicBox {
    int dim = 1;
    int k = 0;
    std::array<std::int64_t, 2> lo{0, 0};
    std::array<std::int64_t, 2> hi{1, 1};

    bool contains(const DyadicCube& q) const;
    bool contains(const DyadicBox& b) const;
};

/// Concentric dilate by an odd factor (9 for P*, 81 for P**).
DyadicBox dilate(const DyadicCube& p, std::int64_t odd_factor);

/// All Q in D_k with Q inside P: 2^{(k - scale(P)) d} cubes. Empty when k < scale(P).
std::vector<DyadicCube> cubes_in(int k, const DyadicCube& p);

/// All cubes of scale k tiling the torus [-L, L)^d. Requires k >= -J (L = 2^J).
std::vector<DyadicCube> cubes_at(int k, const GridSpec& grid);

/// True when the cube lies inside [-L, L)^d without wrapping.
bool fits_in_torus(const DyadicCube& q, const GridSpec& grid);

/// First grid index (per axis) and number of grid cells per side covered by Q.
/// Throws GridCompatibilityError unless the corners are grid points.
struct CubeCells {
    std::array<std::size_t, 2> start{0, 0};
    std::size_t width = 0;
};
CubeCells cube_cells(const DyadicCube& q, const GridSpec& grid);

struct DyadicCubeHash {
    std::size_t operator()(const DyadicCube& q) const noexcept;
};

}  // namespace vvfm
