#include "vvfm/counterexample.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "vvfm/fields.hpp"
#include "vvfm/frames.hpp"
#include "vvfm/quadrature.hpp"

namespace vvfm {
namespace {

std::string fmt_num(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

bool is_dyadic(double r) {
    int e = 0;
    return r > 0.0 && std::frexp(r, &e) == 0.5;
}

}  // namespace

double CounterexampleParams::min1pq() const { return std::min({1.0, p, q}); }
double CounterexampleParams::t() const { return dim / min1pq(); }
double CounterexampleParams::tau() const { return ExponentTuple{dim, p, q, s, 2.0}.tau_spq(); }
double CounterexampleParams::finiteness_exponent() const { return tau() * gamma / 2.0; }
double CounterexampleParams::blowup_exponent() const { return gamma * min1pq() / 2.0; }

std::vector<std::string> CounterexampleParams::violations() const {
    std::vector<std::string> out;
    if (dim != 1 && dim != 2) out.push_back("d in {1, 2} required (d = " + std::to_string(dim) + ")");
    if (!(p > 0.0) || !(q > 0.0)) {
        out.push_back("p, q > 0 required");
        return out;
    }
    const double d = dim, m = min1pq();
    const double lo = d / m - d, hi = d / m;
    if (!(s > lo)) out.push_back("s > d/min(1,p,q) - d required (s = " + fmt_num(s) + ", bound = " + fmt_num(lo) + ")");
    if (!(s < hi)) out.push_back("s < d/min(1,p,q) required (s = " + fmt_num(s) + ", bound = " + fmt_num(hi) + ")");
    if (s > lo) {
        const double glo = 2.0 / tau();
        if (!(gamma > glo))
            out.push_back("gamma > 2/tau(s,p,q) required (gamma = " + fmt_num(gamma) + ", bound = " + fmt_num(glo) + ")");
    }
    if (!(gamma < 2.0 / m))
        out.push_back("gamma < 2/min(1,p,q) required (gamma = " + fmt_num(gamma) + ", bound = " + fmt_num(2.0 / m) + ")");
    return out;
}

void CounterexampleParams::validate() const {
    const auto v = violations();
    if (v.empty()) return;
    std::string msg = "counterexample parameters: ";
    for (std::size_t i = 0; i < v.size(); ++i) msg += (i ? "; " : "") + v[i];
    throw DomainError(msg);
}

double h_value(const CounterexampleParams& params, double r) {
    const double w = 1.0 + 4.0 * kPi * kPi * r * r;
    return std::pow(w, -params.t() / 2.0) * std::pow(1.0 + std::log(w), -params.gamma / 2.0);
}

SampledFunction h_function(const CounterexampleParams& params, const GridSpec& grid) {
    params.validate();
    if (params.dim != grid.dim()) throw DimensionError("h_function: parameter and grid dimensions differ");
    return SampledFunction::from_radial(grid, [&](double r) { return h_value(params, r); });
}

EtaShape EtaShape::preset(int dim) {
    if (dim == 1) return {1.0 / 100, 1.0 / 20};
    if (dim == 2) return {1.0 / 8, 1.0 / 4};
    throw DomainError("EtaShape: dimension must be 1 or 2");
}

SampledFunction build_eta(const GridSpec& grid, const EtaShape& shape) {
    if (!(grid.spacing() < shape.flat_radius)) {
        std::ostringstream msg;
        msg << "build_eta: spacing " << grid.spacing() << " does not resolve the flat radius " << shape.flat_radius;
        throw DomainError(msg.str());
    }
    if (shape.support_radius < 4.0 * grid.frequency_spacing()) {
        std::ostringstream msg;
        msg << "build_eta: support radius " << shape.support_radius << " spans fewer than four frequency cells of "
            << grid.describe() << " (half-width too small)";
        throw DomainError(msg.str());
    }
    if (!(2.0 * shape.support_radius < grid.nyquist())) throw DomainError("build_eta: support beyond Nyquist");
    const double rho = shape.support_radius;
    const auto g = fft_inverse(Spectrum::from_radial(grid, [rho](double r) { return smooth_step(r, rho / 2.0, rho); }));
    std::vector<cplx> v(grid.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::norm(g[i]);
    return SampledFunction(grid, std::move(v));
}

SampledFunction build_eta(const GridSpec& grid) { return build_eta(grid, EtaShape::preset(grid.dim())); }

SampledFunction build_K(const CounterexampleParams& params, const GridSpec& grid) {
    return convolve(h_function(params, grid), build_eta(grid));
}

SampledFunction build_mk(const SampledFunction& K, int k) {
    const GridSpec& grid = K.grid();
    const GridSpec dilated(grid.dim(), grid.n(), std::ldexp(grid.half_width(), -k));
    const double factor = std::ldexp(1.0, k * grid.dim());
    std::vector<cplx> v(K.samples().begin(), K.samples().end());
    for (auto& z : v) z *= factor;
    const auto profile = spectrum_as_function(fft_forward(SampledFunction(dilated, std::move(v))));
    const GridSpec eta_grid(grid.dim(), grid.n(), grid.nyquist());
    return SampledFunction(eta_grid, std::vector<cplx>(profile.samples().begin(), profile.samples().end()));
}

double conv_integral(double a, double R) {
    if (!(R >= 1.0)) throw DomainError("conv_integral: R >= 1 required");
    if (R == 1.0) return 0.0;
    // Substituting u = e^w turns the integrand into (1 + 2w)^{-a} on [0, ln R].
    return adaptive_simpson([a](double w) { return std::pow(1.0 + 2.0 * w, -a); }, 0.0, std::log(R), 1e-9);
}

double conv_integral_closed(double a, double R) {
    if (!(R >= 1.0)) throw DomainError("conv_integral_closed: R >= 1 required");
    const double v = 1.0 + 2.0 * std::log(R);
    if (a == 1.0) return 0.5 * std::log(v);
    return 0.5 * (1.0 - std::pow(v, 1.0 - a)) / (a - 1.0);
}

double blowup_integral(int dim, double b, double R) {
    if (dim != 1 && dim != 2) throw DomainError("blowup_integral: d must be 1 or 2");
    if (!(R >= 0.0)) throw DomainError("blowup_integral: R >= 0 required");
    const double d = dim;
    auto radial = [d, b](double r) {
        const double w = 1.0 + 4.0 * kPi * kPi * r * r;
        return std::pow(w, -d / 2.0) * std::pow(1.0 + std::log(w), -b);
    };
    if (dim == 1) return 2.0 * dyadic_panel_integral(radial, 0.0, R);
    return 2.0 * kPi * dyadic_panel_integral([&](double r) { return r * radial(r); }, 0.0, R);
}

double IncrementTrend::log_slope(std::size_t tail) const {
    const std::size_t n = increments.size();
    if (tail < 2 || tail > n) throw DomainError("log_slope: need 2 <= tail <= number of increments");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = n - tail; i < n; ++i) {
        if (!(increments[i] > 0.0) || !(radii[i] > 1.0)) throw DomainError("log_slope: increments must be positive past R = 1");
        const double x = std::log(std::log(radii[i])), y = std::log(increments[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double m = static_cast<double>(tail);
    return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

namespace {

IncrementTrend make_trend(const std::vector<double>& radii, const std::function<double(double)>& value) {
    IncrementTrend t;
    t.radii = radii;
    for (double R : radii) t.values.push_back(value(R));
    for (std::size_t i = 0; i + 1 < t.values.size(); ++i) t.increments.push_back(t.values[i + 1] - t.values[i]);
    return t;
}

}  // namespace

FinitenessReport check_L_finiteness(double exponent, const std::vector<double>& radii) {
    FinitenessReport r;
    r.exponent = exponent;
    r.quadrature = make_trend(radii, [exponent](double R) { return conv_integral(exponent, R); });
    for (double R : radii) r.closed_form.push_back(conv_integral_closed(exponent, R));
    return r;
}

FinitenessReport check_L_finiteness(const CounterexampleParams& params, const std::vector<double>& radii) {
    params.validate();
    return check_L_finiteness(params.finiteness_exponent(), radii);
}

BlowupReport check_blowup(int dim, double exponent, const std::vector<double>& radii) {
    BlowupReport r;
    r.exponent = exponent;
    r.quadrature = make_trend(radii, [dim, exponent](double R) { return blowup_integral(dim, exponent, R); });
    return r;
}

BlowupReport check_blowup(const CounterexampleParams& params, const std::vector<double>& radii, double torus_spacing) {
    params.validate();
    BlowupReport r = check_blowup(params.dim, params.blowup_exponent(), radii);
    const double m = params.min1pq();
    for (double R : radii) {
        if (!is_dyadic(R) || R < 1.0) continue;
        const auto n = static_cast<std::size_t>(std::llround(2.0 * R / torus_spacing));
        if (n < 8 || (n & (n - 1)) != 0 || (params.dim == 2 && n > 4096) || n > (std::size_t{1} << 22)) continue;
        const GridSpec g(params.dim, n, R);
        // H^min on the torus equals the J integrand (t min = d); the box is the ball in d = 1.
        double acc = 0.0;
        for (std::size_t i = 0; i < g.size(); ++i) {
            const double rr = g.coordinate_norm(i);
            if (params.dim == 2 && rr > R) continue;
            acc += std::pow(h_value(params, rr), m);
        }
        r.torus_radii.push_back(R);
        r.torus_values.push_back(acc * g.cell_volume());
    }
    return r;
}

GridNormTrend multiplier_norm_trend(const CounterexampleParams& params, const std::vector<double>& half_widths, double spacing) {
    params.validate();
    GridNormTrend t;
    for (double L : half_widths) {
        const auto n = static_cast<std::size_t>(std::llround(2.0 * L / spacing));
        const GridSpec g(params.dim, n, L);
        const auto profile = build_mk(build_K(params, g), 0);
        t.half_widths.push_back(L);
        t.norms.push_back(lp_norm(bessel_potential(profile, params.s), params.tau()));
    }
    return t;
}

DecayCheck check_decay_estimate(const CounterexampleParams& params, const GridSpec& grid, double fit_lo, double headroom,
                                double large_cap) {
    params.validate();
    if (params.dim != 1 || grid.dim() != 1) throw DimensionError("check_decay_estimate is a d = 1 check");
    if (!(fit_lo > 0.0 && fit_lo < 1.0) || !(headroom >= 1.0)) throw DomainError("check_decay_estimate: bad fit band");
    const double d = 1.0, t = params.t(), s = params.s, gamma = params.gamma;
    // (I - Delta)^{s/2} acting on H_hat is the transform of (1 + 4 pi^2 x^2)^{s/2} H(x).
    const auto hs = SampledFunction::from_radial(grid, [&](double r) {
        return std::pow(1.0 + 4.0 * kPi * kPi * r * r, s / 2.0) * h_value(params, r);
    });
    const auto F = fft_forward(hs);
    auto small_shape = [&](double xi) { return std::pow(xi, -(d - t + s)) * std::pow(1.0 + 2.0 * std::log(1.0 / xi), -gamma / 2.0); };
    DecayCheck out;
    double fit = 0.0;
    for (std::size_t i = 0; i < grid.n(); ++i) {
        const double xi = grid.frequency_norm(i);
        if (xi >= fit_lo && xi <= 1.0) fit = std::max(fit, std::abs(F[i]) / small_shape(xi));
    }
    out.fitted_c = fit * headroom;
    for (std::size_t i = 0; i < grid.n(); ++i) {
        const double xi = grid.frequency_norm(i);
        if (xi > 0.0 && xi <= 1.0) {
            out.worst_small_ratio = std::max(out.worst_small_ratio, std::abs(F[i]) / (out.fitted_c * small_shape(xi)));
        } else if (xi > 1.0 && xi <= large_cap) {
            out.worst_large_ratio = std::max(out.worst_large_ratio, std::abs(F[i]) / (out.fitted_c * std::exp(-xi / 2.0)));
        }
    }
    out.small_pass = out.worst_small_ratio <= 1.0;
    out.large_pass = out.worst_large_ratio <= 1.0;
    return out;
}

NecessaryNorms necessary_condition_norms(const SampledFunction& K, double p, double q) {
    if (!(p > 0.0) || !(q > 0.0)) throw DomainError("necessary_condition_norms: p, q > 0 required");
    NecessaryNorms out;
    SampledFunction k = K;
    // Round-off from the spectral convolution is not a band violation.
    if (!is_band_limited(K, 2.0, 1e-12)) {
        k = band_project(K, 2.0);
        out.projected = true;
    }
    out.r_min = std::min({p, q, dual_exponent(p), dual_exponent(q)});
    out.norm_r_min = lp_norm(k, out.r_min);
    out.norm_min1pq = lp_norm(k, std::min({1.0, p, q}));
    const auto F = fft_forward(k);
    out.fourier_sup = lp_norm(F, kInfinity);
    out.l1 = lp_norm(k, 1.0);
    out.fourier_at_zero = F[0].real();
    // Nonnegative up to round-off of the transforms that produced K.
    const double floor = 1e-12 * lp_norm(k, kInfinity);
    out.nonnegative = std::all_of(k.samples().begin(), k.samples().end(),
                                  [floor](cplx z) { return z.real() >= -floor && std::abs(z.imag()) <= floor; });
    out.l1_matches = out.nonnegative && std::abs(out.l1 - out.fourier_at_zero) <= 1e-8 * std::max(1.0, out.l1);
    return out;
}

}  // namespace vvfm
