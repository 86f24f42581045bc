#include "vvfm/phi_transform.hpp"

#include <cmath>
#include <sstream>

namespace vvfm {
namespace {

void require_compatible(const PsiFamily& fam, const VectorField& F) {
    require_same_grid(fam.grid(), F.grid(), "phi-transform");
    if (!F.empty() && (F.kmin() < fam.kmin() || F.kmax() > fam.kmax())) {
        throw DimensionError("phi-transform: field scales outside the Psi family range");
    }
}

// Comb of b_Q |Q|^{1/2} / h^d at the corners of the scale-k cubes.
SampledFunction coefficient_comb(const CubeCoefficients& b, int k, const GridSpec& grid) {
    std::vector<cplx> comb(grid.size());
    const double inv_cell = 1.0 / grid.cell_volume();
    const DyadicCube lo = DyadicCube::make(grid.dim(), k, INT64_MIN, INT64_MIN);
    for (auto it = b.entries().lower_bound(lo); it != b.end() && it->first.k == k; ++it) {
        const auto& [q, value] = *it;
        const CubeCells cells = cube_cells(q, grid);
        comb[grid.flatten(cells.start[0], cells.start[1])] += value * std::sqrt(q.volume()) * inv_cell;
    }
    return SampledFunction(grid, std::move(comb));
}

}  // namespace

CubeCoefficients analyze(const VectorField& F) {
    const GridSpec& grid = F.grid();
    CubeCoefficients b(grid.dim());
    for (int k = F.kmin(); k <= F.kmax(); ++k) {
        const SampledFunction& fk = F[k];
        const double amp = std::sqrt(std::ldexp(1.0, -k * grid.dim()));
        for (const auto& q : cubes_at(k, grid)) {
            const CubeCells cells = cube_cells(q, grid);
            b.set(q, amp * fk[grid.flatten(cells.start[0], cells.start[1])]);
        }
    }
    return b;
}

VectorField synthesize(const PsiFamily& fam, const CubeCoefficients& b) {
    const GridSpec& grid = fam.grid();
    if (b.dim() != grid.dim()) throw DimensionError("synthesize: coefficient dimension differs from grid");
    if (!b.empty() && (b.min_scale() < fam.kmin() || b.max_scale() > fam.kmax())) {
        throw DimensionError("synthesize: coefficient scales outside the Psi family range");
    }
    VectorField out(grid, fam.kmin(), fam.kmax(), 0.5);
    for (int k = fam.kmin(); k <= fam.kmax(); ++k) {
        const SampledFunction comb = coefficient_comb(b, k, grid);
        out.set(k, fft_inverse(fft_forward(comb) * fam.psi_spectrum(k)));
    }
    return out;
}

VectorField roundtrip(const PsiFamily& fam, const VectorField& F) {
    require_compatible(fam, F);
    F.require_band(0.25, "roundtrip (needs f_k band-limited to 2^{k-2})");
    return synthesize(fam, analyze(F));
}

cplx duality_pairing(const PsiFamily& fam, const VectorField& F, const CubeCoefficients& b) {
    require_compatible(fam, F);
    const GridSpec& grid = F.grid();
    cplx total{};
    if (F.empty()) return total;
    const VectorField v = synthesize(fam, b);
    for (int k = F.kmin(); k <= F.kmax(); ++k) {
        const auto f = F[k].samples();
        const auto g = v[k].samples();
        cplx acc{};
        for (std::size_t i = 0; i < f.size(); ++i) acc += f[i] * g[i];
        total += acc * grid.cell_volume();
    }
    return total;
}

cplx coefficient_pairing(const VectorField& F, const CubeCoefficients& b) {
    const CubeCoefficients u = analyze(F);
    cplx total{};
    for (const auto& [q, value] : b) total += u.get(q) * value;
    return total;
}

}  // namespace vvfm
