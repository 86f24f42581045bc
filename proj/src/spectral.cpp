#include "vvfm/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fft_engine.hpp"

namespace vvfm {
namespace {

// (-1)^{sum of indices}: the phase e^{-2 pi i (-L) xi} of the half-torus offset.
double half_torus_phase(const GridSpec& grid, std::size_t flat) {
    const auto idx = grid.unflatten(flat);
    return ((idx[0] + idx[1]) & 1U) ? -1.0 : 1.0;
}

void require_finite(std::span<const cplx> v, const char* what) {
    for (const auto& z : v) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw DomainError(std::string(what) + ": non-finite sample");
        }
    }
}

template <typename Fn>
std::vector<cplx> sample_grid(const GridSpec& grid, Fn&& point_value) {
    std::vector<cplx> out(grid.size());
    for (std::size_t flat = 0; flat < out.size(); ++flat) out[flat] = point_value(grid.unflatten(flat));
    return out;
}

}  // namespace

// ---------------------------------------------------------------- Spectrum

Spectrum::Spectrum(GridSpec grid, std::vector<cplx> values) : grid_(grid), values_(std::move(values)) {
    if (values_.size() != grid_.size()) {
        throw DimensionError("Spectrum: value count does not match " + grid_.describe());
    }
}

Spectrum Spectrum::zeros(const GridSpec& grid) { return Spectrum(grid, std::vector<cplx>(grid.size())); }

Spectrum Spectrum::from_symbol(const GridSpec& grid, const std::function<cplx(std::span<const double>)>& symbol) {
    auto values = sample_grid(grid, [&](const std::array<std::size_t, 2>& idx) {
        const std::array<double, 2> xi{grid.frequency(idx[0]), grid.dim() == 2 ? grid.frequency(idx[1]) : 0.0};
        return symbol(std::span<const double>(xi.data(), static_cast<std::size_t>(grid.dim())));
    });
    return Spectrum(grid, std::move(values));
}

Spectrum Spectrum::from_radial(const GridSpec& grid, const std::function<double(double)>& profile) {
    std::vector<cplx> values(grid.size());
    for (std::size_t i = 0; i < values.size(); ++i) values[i] = profile(grid.frequency_norm(i));
    return Spectrum(grid, std::move(values));
}

Spectrum& Spectrum::operator*=(const Spectrum& other) {
    require_same_grid(grid_, other.grid_, "Spectrum product");
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] *= other.values_[i];
    return *this;
}

cplx Spectrum::at_signed(std::int64_t m0, std::int64_t m1) const {
    const auto n = static_cast<std::int64_t>(grid_.n());
    auto wrap = [n](std::int64_t m) { return static_cast<std::size_t>(((m % n) + n) % n); };
    return values_[grid_.flatten(wrap(m0), grid_.dim() == 2 ? wrap(m1) : 0)];
}

// --------------------------------------------------------- SampledFunction

SampledFunction::SampledFunction(GridSpec grid, std::vector<cplx> samples)
    : grid_(grid), samples_(std::move(samples)) {
    if (samples_.size() != grid_.size()) {
        throw DimensionError("SampledFunction: sample count does not match " + grid_.describe());
    }
}

SampledFunction SampledFunction::zeros(const GridSpec& grid) {
    return fft_inverse(Spectrum::zeros(grid));
}

SampledFunction SampledFunction::constant(const GridSpec& grid, cplx value) {
    return SampledFunction(grid, std::vector<cplx>(grid.size(), value));
}

SampledFunction SampledFunction::from_function(const GridSpec& grid,
                                               const std::function<cplx(std::span<const double>)>& fn) {
    auto values = sample_grid(grid, [&](const std::array<std::size_t, 2>& idx) {
        const std::array<double, 2> x{grid.coordinate(idx[0]), grid.dim() == 2 ? grid.coordinate(idx[1]) : 0.0};
        return fn(std::span<const double>(x.data(), static_cast<std::size_t>(grid.dim())));
    });
    return SampledFunction(grid, std::move(values));
}

SampledFunction SampledFunction::from_radial(const GridSpec& grid, const std::function<double(double)>& profile) {
    std::vector<cplx> values(grid.size());
    for (std::size_t i = 0; i < values.size(); ++i) values[i] = profile(grid.coordinate_norm(i));
    return SampledFunction(grid, std::move(values));
}

SampledFunction& SampledFunction::operator+=(const SampledFunction& other) {
    require_same_grid(grid_, other.grid_, "SampledFunction sum");
    for (std::size_t i = 0; i < samples_.size(); ++i) samples_[i] += other.samples_[i];
    if (spectrum_ && other.spectrum_) {
        auto sum = *spectrum_;
        auto values = sum.values();
        const auto rhs = other.spectrum_->values();
        for (std::size_t i = 0; i < values.size(); ++i) values[i] += rhs[i];
        spectrum_ = std::make_shared<const Spectrum>(std::move(sum));
    } else {
        spectrum_.reset();
    }
    return *this;
}

SampledFunction& SampledFunction::operator*=(cplx scalar) {
    for (auto& v : samples_) v *= scalar;
    if (spectrum_) {
        auto scaled = *spectrum_;
        for (auto& v : scaled.values()) v *= scalar;
        spectrum_ = std::make_shared<const Spectrum>(std::move(scaled));
    }
    return *this;
}

// ------------------------------------------------------------- transforms

Spectrum fft_forward(const SampledFunction& f) {
    if (const Spectrum* cached = f.spectrum_cache()) return *cached;
    const GridSpec& grid = f.grid();
    require_finite(f.samples(), "fft_forward");
    std::vector<cplx> data(f.samples().begin(), f.samples().end());
    detail::dft_in_place(data, grid.dim(), grid.n(), -1);
    const double cell = grid.cell_volume();
    for (std::size_t i = 0; i < data.size(); ++i) data[i] *= cell * half_torus_phase(grid, i);
    return Spectrum(grid, std::move(data));
}

SampledFunction fft_inverse(const Spectrum& spectrum) {
    const GridSpec& grid = spectrum.grid();
    std::vector<cplx> data(spectrum.values().begin(), spectrum.values().end());
    const double cell = grid.frequency_cell_volume();
    for (std::size_t i = 0; i < data.size(); ++i) data[i] *= cell * half_torus_phase(grid, i);
    detail::dft_in_place(data, grid.dim(), grid.n(), +1);
    SampledFunction out(grid, std::move(data));
    out.spectrum_ = std::make_shared<const Spectrum>(spectrum);
    return out;
}

SampledFunction band_project(const SampledFunction& f, double radius) {
    const GridSpec& grid = f.grid();
    if (!(radius >= 0.0) || radius >= grid.nyquist()) {
        std::ostringstream msg;
        msg << "band_project: radius " << radius << " must lie in [0, Nyquist=" << grid.nyquist() << ")";
        throw DomainError(msg.str());
    }
    Spectrum F = fft_forward(f);
    auto values = F.values();
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (grid.frequency_norm(i) > radius) values[i] = 0.0;
    }
    return fft_inverse(F);
}

bool is_band_limited(const SampledFunction& f, double radius, double rel_tol) {
    const Spectrum F = fft_forward(f);
    const GridSpec& grid = f.grid();
    double peak = 0.0;
    for (const auto& v : F.values()) peak = std::max(peak, std::abs(v));
    const double threshold = rel_tol * peak;
    for (std::size_t i = 0; i < F.size(); ++i) {
        if (grid.frequency_norm(i) > radius && std::abs(F[i]) > threshold) return false;
    }
    return true;
}

SampledFunction bessel_potential(const SampledFunction& f, double s) {
    if (s == 0.0) return f;
    Spectrum F = fft_forward(f);
    const GridSpec& grid = f.grid();
    auto values = F.values();
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double xi = grid.frequency_norm(i);
        values[i] *= std::pow(1.0 + 4.0 * kPi * kPi * xi * xi, 0.5 * s);
    }
    return fft_inverse(F);
}

SampledFunction convolve(const SampledFunction& f, const SampledFunction& g) {
    require_same_grid(f.grid(), g.grid(), "convolve");
    return fft_inverse(fft_forward(f) * fft_forward(g));
}

SampledFunction apply_symbol(const SampledFunction& f, const Spectrum& symbol) {
    require_same_grid(f.grid(), symbol.grid(), "apply_symbol");
    return fft_inverse(fft_forward(f) * symbol);
}

SampledFunction translate(const SampledFunction& f, std::span<const double> shift) {
    const GridSpec& grid = f.grid();
    if (static_cast<int>(shift.size()) != grid.dim()) throw DimensionError("translate: shift dimension");
    Spectrum F = fft_forward(f);
    auto values = F.values();
    for (std::size_t i = 0; i < values.size(); ++i) {
        const auto idx = grid.unflatten(i);
        double phase = grid.frequency(idx[0]) * shift[0];
        if (grid.dim() == 2) phase += grid.frequency(idx[1]) * shift[1];
        values[i] *= std::polar(1.0, -2.0 * kPi * phase);
    }
    return fft_inverse(F);
}

double weighted_lp(std::span<const cplx> values, double cell, double p) {
    if (!(p > 0.0)) throw DomainError("L^p exponent must be positive");
    if (std::isinf(p)) {
        double m = 0.0;
        for (const auto& v : values) m = std::max(m, std::abs(v));
        return m;
    }
    double acc = 0.0;
    if (p == 2.0) {
        for (const auto& v : values) acc += std::norm(v);
    } else {
        for (const auto& v : values) acc += std::pow(std::abs(v), p);
    }
    return std::pow(acc * cell, 1.0 / p);
}

double lp_norm(const SampledFunction& f, double p) { return weighted_lp(f.samples(), f.grid().cell_volume(), p); }

double lp_norm(const Spectrum& F, double p) { return weighted_lp(F.values(), F.grid().frequency_cell_volume(), p); }

SampledFunction spectrum_as_function(const Spectrum& F) {
    const GridSpec& grid = F.grid();
    const std::size_t n = grid.n();
    const GridSpec dual(grid.dim(), n, static_cast<double>(n) / (4.0 * grid.half_width()));
    std::vector<cplx> samples(grid.size());
    for (std::size_t flat = 0; flat < samples.size(); ++flat) {
        const auto idx = grid.unflatten(flat);
        const std::size_t a = (idx[0] + n / 2) % n;
        const std::size_t b = grid.dim() == 2 ? (idx[1] + n / 2) % n : 0;
        samples[flat] = F[grid.flatten(a, b)];
    }
    return SampledFunction(dual, std::move(samples));
}

}  // namespace vvfm
