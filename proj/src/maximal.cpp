#include "vvfm/maximal.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <sstream>

#include "cube_sums.hpp"

namespace vvfm {
namespace {

std::vector<double> magnitudes(const SampledFunction& f) {
    std::vector<double> a(f.size());
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = std::abs(f[i]);
    return a;
}

SampledFunction as_function(const GridSpec& grid, const std::vector<double>& v) {
    return SampledFunction(grid, std::vector<cplx>(v.begin(), v.end()));
}

// out[x] = max of in[s] over the w circular positions s = x - w + 1, ..., x.
void circular_trailing_max(const double* in, double* out, std::size_t n, std::size_t w, std::size_t stride) {
    std::deque<std::size_t> dq;  // positions in the unrolled sequence, values decreasing
    const std::size_t total = n + w - 1;
    for (std::size_t t = 0; t < total; ++t) {
        const double v = in[((t + n - (w - 1)) % n) * stride];
        while (!dq.empty() && in[((dq.back() + n - (w - 1)) % n) * stride] <= v) dq.pop_back();
        dq.push_back(t);
        if (dq.front() + w <= t) dq.pop_front();
        if (t >= w - 1) out[(t - (w - 1)) * stride] = in[((dq.front() + n - (w - 1)) % n) * stride];
    }
}

std::vector<double> all_cubes_maximal_1d(const std::vector<double>& a) {
    const std::size_t n = a.size();
    std::vector<double> prefix(2 * n + 1, 0.0);
    for (std::size_t i = 0; i < 2 * n; ++i) prefix[i + 1] = prefix[i] + a[i % n];
    std::vector<double> best(n, 0.0), means(n), window_max(n);
    for (std::size_t w = 1; w <= n; ++w) {
        for (std::size_t s = 0; s < n; ++s) means[s] = (prefix[s + w] - prefix[s]) / static_cast<double>(w);
        circular_trailing_max(means.data(), window_max.data(), n, w, 1);
        for (std::size_t x = 0; x < n; ++x) best[x] = std::max(best[x], window_max[x]);
    }
    return best;
}

std::vector<double> all_cubes_maximal_2d(const std::vector<double>& a, std::size_t n) {
    const std::size_t m = 2 * n + 1;
    std::vector<double> prefix(m * m, 0.0);
    for (std::size_t i = 0; i < 2 * n; ++i)
        for (std::size_t j = 0; j < 2 * n; ++j)
            prefix[(i + 1) * m + j + 1] =
                a[(i % n) * n + j % n] + prefix[i * m + j + 1] + prefix[(i + 1) * m + j] - prefix[i * m + j];
    std::vector<double> best(n * n, 0.0), means(n * n), rows(n * n), cols(n * n);
    for (std::size_t w = 1; w <= n; ++w) {
        const double area = static_cast<double>(w * w);
        for (std::size_t s0 = 0; s0 < n; ++s0)
            for (std::size_t s1 = 0; s1 < n; ++s1)
                means[s0 * n + s1] = (prefix[(s0 + w) * m + s1 + w] - prefix[s0 * m + s1 + w] -
                                      prefix[(s0 + w) * m + s1] + prefix[s0 * m + s1]) / area;
        for (std::size_t r = 0; r < n; ++r) circular_trailing_max(&means[r * n], &rows[r * n], n, w, 1);
        for (std::size_t c = 0; c < n; ++c) circular_trailing_max(&rows[c], &cols[c], n, w, n);
        for (std::size_t i = 0; i < n * n; ++i) best[i] = std::max(best[i], cols[i]);
    }
    return best;
}

std::vector<double> dyadic_maximal_values(const std::vector<double>& a, const GridSpec& grid) {
    std::vector<double> best(a.size(), 0.0);
    for (int nu = -grid.dyadic_level(); nu <= grid.finest_scale(); ++nu) {
        const auto means = detail::block_means(a, grid, nu);
        for (std::size_t i = 0; i < a.size(); ++i) best[i] = std::max(best[i], means[detail::block_of(grid, nu, i)]);
    }
    return best;
}

std::vector<double> maximal_values(const std::vector<double>& a, const GridSpec& grid, WindowFamily window) {
    if (window == WindowFamily::Dyadic) return dyadic_maximal_values(a, grid);
    return grid.dim() == 1 ? all_cubes_maximal_1d(a) : all_cubes_maximal_2d(a, grid.n());
}

}  // namespace

void MaximalConfig::validate() const {
    if (!(t_power > 0.0)) throw DomainError("maximal config: t_power must be positive");
    if (!(sigma > 0.0)) throw DomainError("maximal config: sigma must be positive");
}

SampledFunction hl_maximal(const SampledFunction& f, const MaximalConfig& config) {
    config.validate();
    return as_function(f.grid(), maximal_values(magnitudes(f), f.grid(), config.window));
}

SampledFunction power_maximal(const SampledFunction& f, double t, const MaximalConfig& config) {
    config.validate();
    if (!(t > 0.0)) throw DomainError("power_maximal: t must be positive");
    auto a = magnitudes(f);
    if (t != 1.0) {
        for (auto& v : a) v = std::pow(v, t);
    }
    auto m = maximal_values(a, f.grid(), config.window);
    if (t != 1.0) {
        for (auto& v : m) v = std::pow(v, 1.0 / t);
    }
    return as_function(f.grid(), m);
}

SampledFunction peetre_maximal(const SampledFunction& f, int k, double sigma) {
    if (!(sigma > 0.0)) throw DomainError("peetre_maximal: sigma must be positive");
    const GridSpec& grid = f.grid();
    const std::size_t n = grid.n();
    const double h = grid.spacing();
    const double scale = std::ldexp(1.0, k);
    auto axis_dist = [&](std::size_t j) { return static_cast<double>(std::min(j, n - j)) * h; };
    const auto a = magnitudes(f);
    std::vector<double> out(a.size(), 0.0);
    if (grid.dim() == 1) {
        std::vector<double> inv_weight(n);
        for (std::size_t j = 0; j < n; ++j) inv_weight[j] = std::pow(1.0 + scale * axis_dist(j), -sigma);
        for (std::size_t x = 0; x < n; ++x) {
            double best = 0.0;
            for (std::size_t j = 0; j < n; ++j) best = std::max(best, a[(x + n - j) % n] * inv_weight[j]);
            out[x] = best;
        }
    } else {
        std::vector<double> inv_weight(n * n);
        for (std::size_t j0 = 0; j0 < n; ++j0)
            for (std::size_t j1 = 0; j1 < n; ++j1)
                inv_weight[j0 * n + j1] = std::pow(1.0 + scale * std::hypot(axis_dist(j0), axis_dist(j1)), -sigma);
        for (std::size_t x0 = 0; x0 < n; ++x0)
            for (std::size_t x1 = 0; x1 < n; ++x1) {
                double best = 0.0;
                for (std::size_t j0 = 0; j0 < n; ++j0)
                    for (std::size_t j1 = 0; j1 < n; ++j1)
                        best = std::max(best, a[((x0 + n - j0) % n) * n + (x1 + n - j1) % n] * inv_weight[j0 * n + j1]);
                out[x0 * n + x1] = best;
            }
    }
    return as_function(grid, out);
}

SampledFunction dyadic_maximal(const SampledFunction& f) {
    return as_function(f.grid(), dyadic_maximal_values(magnitudes(f), f.grid()));
}

SampledFunction dyadic_sharp(const SampledFunction& f) {
    const GridSpec& grid = f.grid();
    std::vector<double> best(f.size(), 0.0);
    std::vector<double> re(f.size()), im(f.size()), osc(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        re[i] = f[i].real();
        im[i] = f[i].imag();
    }
    for (int nu = -grid.dyadic_level(); nu <= grid.finest_scale(); ++nu) {
        const auto mre = detail::block_means(re, grid, nu);
        const auto mim = detail::block_means(im, grid, nu);
        for (std::size_t i = 0; i < f.size(); ++i) {
            const std::size_t b = detail::block_of(grid, nu, i);
            osc[i] = std::abs(f[i] - cplx(mre[b], mim[b]));
        }
        const auto mosc = detail::block_means(osc, grid, nu);
        for (std::size_t i = 0; i < f.size(); ++i) best[i] = std::max(best[i], mosc[detail::block_of(grid, nu, i)]);
    }
    return as_function(grid, best);
}

SampledFunction sharp_vector_function(const VectorField& F, double q) {
    if (!(q > 0.0) || std::isinf(q)) throw DomainError("sharp_vector_function: q must lie in (0, inf)");
    const GridSpec& grid = F.grid();
    std::vector<double> best(grid.size(), 0.0);
    if (F.empty()) return as_function(grid, best);
    std::vector<double> tail(grid.size(), 0.0);
    int added_down_to = F.kmax() + 1;
    for (int nu = grid.finest_scale(); nu >= -grid.dyadic_level(); --nu) {
        while (added_down_to > std::max(nu, F.kmin())) {
            --added_down_to;
            const auto s = F[added_down_to].samples();
            for (std::size_t i = 0; i < tail.size(); ++i) tail[i] += std::pow(std::abs(s[i]), q);
        }
        if (nu > F.kmax()) continue;
        const auto means = detail::block_means(tail, grid, nu);
        for (std::size_t i = 0; i < best.size(); ++i) best[i] = std::max(best[i], means[detail::block_of(grid, nu, i)]);
    }
    for (auto& v : best) v = std::pow(v, 1.0 / q);
    return as_function(grid, best);
}

double sharp_vector_functional(const VectorField& F, double q, double p) {
    if (!(q > 0.0) || !(p > q) || std::isinf(p)) {
        std::ostringstream msg;
        msg << "sharp_vector_functional needs 0 < q < p < inf (got q = " << q << ", p = " << p << ")";
        throw DomainError(msg.str());
    }
    return lp_norm(sharp_vector_function(F, q), p);
}

std::vector<SampledFunction> power_maximal_field(const VectorField& F, double t) {
    std::vector<SampledFunction> out;
    for (int k = F.kmin(); k <= F.kmax(); ++k) out.push_back(power_maximal(F[k], t));
    return out;
}

std::vector<SampledFunction> peetre_maximal_field(const VectorField& F, double sigma) {
    std::vector<SampledFunction> out;
    for (int k = F.kmin(); k <= F.kmax(); ++k) out.push_back(peetre_maximal(F[k], k, sigma));
    return out;
}

}  // namespace vvfm
