#include "vvfm/norms.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "cube_sums.hpp"

namespace vvfm {
namespace {

void require_positive(double v, const char* what) {
    if (!(v > 0.0)) throw DomainError(std::string(what) + " must be positive");
}

void require_finite_q(double q) {
    if (!(q > 0.0) || std::isinf(q)) throw DomainError("q must lie in (0, inf)");
}

// Per-sample l^q combination across scales, accumulated one scale at a time.
struct LqAccumulator {
    double q;
    std::vector<double> acc;

    LqAccumulator(double q_, std::size_t size) : q(q_), acc(size, 0.0) {}

    void add(std::size_t i, double magnitude) {
        if (std::isinf(q)) {
            acc[i] = std::max(acc[i], magnitude);
        } else if (q == 2.0) {
            acc[i] += magnitude * magnitude;
        } else {
            acc[i] += std::pow(magnitude, q);
        }
    }

    std::vector<cplx> finish() const {
        std::vector<cplx> out(acc.size());
        for (std::size_t i = 0; i < acc.size(); ++i) out[i] = std::isinf(q) ? acc[i] : std::pow(acc[i], 1.0 / q);
        return out;
    }
};

// sup_P mean_P(sum_{k >= scale(P)} u_k) over scales nu in [mu, finest], with
// u given per scale k in [kmin, kmax] on the grid.
double sup_cube_average(const std::vector<std::vector<double>>& u, int kmin, const GridSpec& grid, int mu) {
    const int kmax = kmin + static_cast<int>(u.size()) - 1;
    const int finest = grid.finest_scale();
    double best = 0.0;
    std::vector<double> tail(grid.size(), 0.0);
    // Walk nu downwards so the tail sum grows one scale at a time.
    int added_down_to = kmax + 1;
    for (int nu = finest; nu >= mu; --nu) {
        while (added_down_to > std::max(nu, kmin) && added_down_to - 1 >= kmin) {
            --added_down_to;
            const auto& row = u[static_cast<std::size_t>(added_down_to - kmin)];
            for (std::size_t i = 0; i < tail.size(); ++i) tail[i] += row[i];
        }
        if (nu > kmax) continue;
        for (double m : detail::block_means(tail, grid, nu)) best = std::max(best, m);
    }
    return best;
}

void require_mu(const GridSpec& grid, int mu) {
    const int J = grid.dyadic_level();
    if (mu < -J || mu > grid.finest_scale()) {
        std::ostringstream msg;
        msg << "mu = " << mu << " outside the available scales [" << -J << ", " << grid.finest_scale() << "]";
        throw DomainError(msg.str());
    }
}

double cube_density(const DyadicCube& q, cplx b) { return std::abs(b) / std::sqrt(q.volume()); }

}  // namespace

static std::vector<SampledFunction> components_of(const VectorField& F) {
    std::vector<SampledFunction> out;
    for (int k = F.kmin(); k <= F.kmax(); ++k) out.push_back(F[k]);
    return out;
}

double lp_lq_norm(std::span<const SampledFunction> components, double p, double q) {
    require_positive(p, "p");
    require_positive(q, "q");
    if (components.empty()) return 0.0;
    const GridSpec& grid = components.front().grid();
    LqAccumulator acc(q, grid.size());
    for (const auto& f : components) {
        require_same_grid(grid, f.grid(), "lp_lq_norm");
        const auto samples = f.samples();
        for (std::size_t i = 0; i < samples.size(); ++i) acc.add(i, std::abs(samples[i]));
    }
    return weighted_lp(acc.finish(), grid.cell_volume(), p);
}

double lp_lq_norm(const VectorField& F, double p, double q, bool* empty_range) {
    if (empty_range) *empty_range = F.empty();
    return lp_lq_norm(components_of(F), p, q);
}

double finfty_q_norm(std::span<const SampledFunction> components, int kmin, double q, int mu) {
    require_finite_q(q);
    if (components.empty()) return 0.0;
    const GridSpec& grid = components.front().grid();
    require_mu(grid, mu);
    std::vector<std::vector<double>> u;
    for (const auto& f : components) {
        require_same_grid(grid, f.grid(), "finfty_q_norm");
        std::vector<double> row(grid.size());
        const auto samples = f.samples();
        for (std::size_t i = 0; i < row.size(); ++i) row[i] = std::pow(std::abs(samples[i]), q);
        u.push_back(std::move(row));
    }
    return std::pow(sup_cube_average(u, kmin, grid, mu), 1.0 / q);
}

double finfty_q_norm(const VectorField& F, double q, int mu) {
    require_finite_q(q);
    require_mu(F.grid(), mu);
    return finfty_q_norm(components_of(F), F.kmin(), q, mu);
}

SampledFunction gq_function(const CubeCoefficients& b, double q, const GridSpec& grid) {
    require_positive(q, "q");
    if (b.dim() != grid.dim()) throw DimensionError("gq_function: coefficient and grid dimensions differ");
    std::vector<double> acc(grid.size(), 0.0);
    for (const auto& [cube, value] : b) {
        const double c = cube_density(cube, value);
        if (std::isinf(q)) {
            detail::paint_max(acc, grid, cube, c);
        } else {
            detail::paint_add(acc, grid, cube, std::pow(c, q));
        }
    }
    std::vector<cplx> samples(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) samples[i] = std::isinf(q) ? acc[i] : std::pow(acc[i], 1.0 / q);
    return SampledFunction(grid, std::move(samples));
}

double fpq_discrete_norm(const CubeCoefficients& b, double p, double q) {
    require_positive(p, "p");
    require_positive(q, "q");
    if (b.empty()) return 0.0;
    const int finest = b.max_scale();
    // g^q is constant on the scale-`finest` descendants of the entries.
    std::size_t work = 0;
    for (const auto& [cube, value] : b) {
        const int shift = (finest - cube.k) * cube.dim;
        if (shift > 26) throw DomainError("fpq_discrete_norm: scale spread too large for exact evaluation");
        work += std::size_t{1} << shift;
        if (work > (std::size_t{1} << 27)) throw DomainError("fpq_discrete_norm: too many leaf cubes");
    }
    std::map<DyadicCube, double> leaves;
    for (const auto& [cube, value] : b) {
        const double c = cube_density(cube, value);
        const double contrib = std::isinf(q) ? c : std::pow(c, q);
        for (const auto& leaf : cubes_in(finest, cube)) {
            double& slot = leaves[leaf];
            slot = std::isinf(q) ? std::max(slot, contrib) : slot + contrib;
        }
    }
    std::vector<cplx> values;
    values.reserve(leaves.size());
    for (const auto& [leaf, acc] : leaves) values.emplace_back(std::isinf(q) ? acc : std::pow(acc, 1.0 / q));
    const double leaf_volume = std::ldexp(1.0, -finest * b.dim());
    return weighted_lp(values, leaf_volume, p);
}

double fpq_discrete_norm(const CubeCoefficients& b, double p, double q, const GridSpec& grid) {
    require_positive(p, "p");
    return lp_norm(gq_function(b, q, grid), p);
}

double finfty_discrete_norm(const CubeCoefficients& b, double q, int mu) {
    require_finite_q(q);
    if (b.empty()) return 0.0;
    // Only ancestors of entries can carry a nonzero sum.
    std::map<DyadicCube, double> sums;
    for (const auto& [cube, value] : b) {
        if (cube.k < mu) continue;
        const double term = std::pow(cube_density(cube, value), q) * cube.volume();
        for (int nu = mu; nu <= cube.k; ++nu) sums[cube.ancestor(nu)] += term;
    }
    double best = 0.0;
    for (const auto& [p, s] : sums) best = std::max(best, s / p.volume());
    return std::pow(best, 1.0 / q);
}

double finfty_discrete_norm_quadrature(const CubeCoefficients& b, double q, int mu, const GridSpec& grid) {
    require_finite_q(q);
    require_mu(grid, mu);
    if (b.dim() != grid.dim()) throw DimensionError("finfty_discrete_norm_quadrature: dimension mismatch");
    if (b.empty()) return 0.0;
    const int kmin = b.min_scale();
    const int kmax = b.max_scale();
    std::vector<std::vector<double>> u(static_cast<std::size_t>(kmax - kmin + 1), std::vector<double>(grid.size(), 0.0));
    for (const auto& [cube, value] : b) {
        detail::paint_add(u[static_cast<std::size_t>(cube.k - kmin)], grid, cube, std::pow(cube_density(cube, value), q));
    }
    return std::pow(sup_cube_average(u, kmin, grid, mu), 1.0 / q);
}

double sobolev_norm(const SampledFunction& f, double s, double r) { return lp_norm(bessel_potential(f, s), r); }

double embedding_ratio(const SampledFunction& m, double B, double s, double r0, double r1) {
    if (!(B > 0.0) || !(r0 >= 1.0) || !(r1 > r0)) throw DomainError("embedding_ratio needs B > 0 and 1 <= r0 < r1");
    const GridSpec& g = m.grid();
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] != cplx{} && g.coordinate_norm(i) > B) {
            std::ostringstream msg;
            msg << "embedding_ratio: sample at |x| = " << g.coordinate_norm(i) << " outside the support radius " << B;
            throw DomainError(msg.str());
        }
    }
    const double lo = sobolev_norm(m, s, r0);
    if (lo == 0.0) return 0.0;
    const double d = g.dim();
    return lo / (std::pow(B, d / r0 - d / r1) * sobolev_norm(m, s, r1));
}

double multiplier_functional(const MultiplierFamily& M, double s, double r) {
    double best = 0.0;
    for (int l = M.kmin(); l <= M.kmax(); ++l) best = std::max(best, sobolev_norm(M.profile(l), s, r));
    return best;
}

VectorField alpha_weighted(const VectorField& F, double alpha) {
    VectorField out(F.grid(), F.kmin(), F.kmax(), F.band_constant());
    for (int k = F.kmin(); k <= F.kmax(); ++k) out.set(k, cplx(std::pow(2.0, alpha * k)) * F[k]);
    return out;
}

}  // namespace vvfm
