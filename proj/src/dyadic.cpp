#include "vvfm/dyadic.hpp"

#include <cmath>
#include <sstream>

namespace vvfm {
namespace {

// floor(l / 2^shift) for signed l; arithmetic right shift rounds toward -inf.
std::int64_t floor_shift(std::int64_t l, int shift) { return l >> shift; }

void check_dim(int dim) {
    if (dim != 1 && dim != 2) throw DomainError("dyadic cube dimension must be 1 or 2");
}

}  // namespace

DyadicCube DyadicCube::make(int dim, int k, std::int64_t l0, std::int64_t l1) {
    check_dim(dim);
    return DyadicCube{dim, k, {l0, dim == 2 ? l1 : 0}};
}

double DyadicCube::side() const { return std::ldexp(1.0, -k); }

double DyadicCube::volume() const { return std::ldexp(1.0, -k * dim); }

double DyadicCube::corner(int axis) const { return std::ldexp(static_cast<double>(l[axis]), -k); }

DyadicCube DyadicCube::ancestor(int nu) const {
    if (nu > k) throw DomainError("ancestor scale must not exceed the cube scale");
    DyadicCube p = *this;
    p.k = nu;
    for (int i = 0; i < dim; ++i) p.l[i] = floor_shift(l[i], k - nu);
    return p;
}

bool DyadicCube::contains(const DyadicCube& inner) const {
    if (inner.dim != dim || inner.k < k) return false;
    return inner.ancestor(k) == *this;
}

bool DyadicBox::contains(const DyadicCube& q) const {
    if (q.dim != dim || q.k < k) return false;
    const DyadicCube a = q.ancestor(k);
    for (int i = 0; i < dim; ++i) {
        if (a.l[i] < lo[i] || a.l[i] >= hi[i]) return false;
    }
    return true;
}

bool DyadicBox::contains(const DyadicBox& b) const {
    if (b.dim != dim || b.k < k) return false;
    // Scale b's box to this box's cells: [lo, hi) at scale b.k covers
    // [floor(lo/2^s), ceil(hi/2^s)) at scale k.
    const int s = b.k - k;
    for (int i = 0; i < dim; ++i) {
        const std::int64_t blo = floor_shift(b.lo[i], s);
        const std::int64_t bhi = -floor_shift(-b.hi[i], s);
        if (blo < lo[i] || bhi > hi[i]) return false;
    }
    return true;
}

DyadicBox dilate(const DyadicCube& p, std::int64_t odd_factor) {
    if (odd_factor < 1 || odd_factor % 2 == 0) throw DomainError("dilation factor must be a positive odd integer");
    const std::int64_t half = (odd_factor - 1) / 2;
    DyadicBox box{p.dim, p.k, {0, 0}, {1, 1}};
    for (int i = 0; i < p.dim; ++i) {
        box.lo[i] = p.l[i] - half;
        box.hi[i] = p.l[i] + half + 1;
    }
    return box;
}

std::vector<DyadicCube> cubes_in(int k, const DyadicCube& p) {
    std::vector<DyadicCube> out;
    if (k < p.k) return out;
    const int shift = k - p.k;
    if (shift * p.dim > 40) throw DomainError("cubes_in: refusing to enumerate more than 2^40 cubes");
    const std::int64_t per_axis = std::int64_t{1} << shift;
    const std::int64_t base0 = p.l[0] * per_axis;
    if (p.dim == 1) {
        out.reserve(static_cast<std::size_t>(per_axis));
        for (std::int64_t a = 0; a < per_axis; ++a) out.push_back(DyadicCube::make(1, k, base0 + a));
    } else {
        const std::int64_t base1 = p.l[1] * per_axis;
        out.reserve(static_cast<std::size_t>(per_axis * per_axis));
        for (std::int64_t a = 0; a < per_axis; ++a)
            for (std::int64_t b = 0; b < per_axis; ++b) out.push_back(DyadicCube::make(2, k, base0 + a, base1 + b));
    }
    return out;
}

std::vector<DyadicCube> cubes_at(int k, const GridSpec& grid) {
    const int J = grid.dyadic_level();
    if (k < -J) {
        std::ostringstream msg;
        msg << "scale " << k << " cubes do not fit in the torus of half-width 2^" << J;
        throw DomainError(msg.str());
    }
    // The torus is the union of the 2^d cubes of scale -J with l in {-1, 0}^d.
    std::vector<DyadicCube> out;
    const int d = grid.dim();
    for (std::int64_t a = -1; a <= 0; ++a) {
        for (std::int64_t b = (d == 2 ? -1 : 0); b <= 0; ++b) {
            auto part = cubes_in(k, DyadicCube::make(d, -J, a, b));
            out.insert(out.end(), part.begin(), part.end());
        }
    }
    return out;
}

bool fits_in_torus(const DyadicCube& q, const GridSpec& grid) {
    if (q.dim != grid.dim()) return false;
    const int J = grid.dyadic_level();
    if (q.k < -J) return false;
    const std::int64_t half = std::int64_t{1} << (q.k + J);  // L in units of 2^-k
    for (int i = 0; i < q.dim; ++i) {
        if (q.l[i] < -half || q.l[i] >= half) return false;
    }
    return true;
}

CubeCells cube_cells(const DyadicCube& q, const GridSpec& grid) {
    if (!fits_in_torus(q, grid)) throw GridCompatibilityError("cube does not fit inside the torus");
    if (q.k > grid.finest_scale()) {
        std::ostringstream msg;
        msg << "cube side 2^" << -q.k << " is finer than the grid spacing of " << grid.describe();
        throw GridCompatibilityError(msg.str());
    }
    CubeCells cells;
    cells.width = std::size_t{1} << (grid.finest_scale() - q.k);
    for (int i = 0; i < q.dim; ++i) cells.start[i] = grid.axis_index_of(q.corner(i));
    return cells;
}

std::size_t DyadicCubeHash::operator()(const DyadicCube& q) const noexcept {
    std::size_t h = std::hash<std::int64_t>{}(q.l[0]);
    h ^= std::hash<std::int64_t>{}(q.l[1]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= std::hash<int>{}(q.k * 4 + q.dim) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

}  // namespace vvfm
