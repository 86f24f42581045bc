#pragma once

#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "vvfm/grid.hpp"

namespace vvfm {

/// Frequency-side samples on the grid frequencies of a GridSpec, in FFT order.
///
/// Values approximate the continuum transform f_hat(xi) = int f(x) e^{-2 pi i x xi} dx
/// by the Riemann sum with cell volume h^d.
class Spectrum {
public:
    Spectrum(GridSpec grid, std::vector<cplx> values);
    static Spectrum zeros(const GridSpec& grid);
    /// Samples a frequency-side function xi -> value at every grid frequency.
    static Spectrum from_symbol(const GridSpec& grid, const std::function<cplx(std::span<const double>)>& symbol);
    /// Samples a radial profile |xi| -> value.
    static Spectrum from_radial(const GridSpec& grid, const std::function<double(double)>& profile);

    const GridSpec& grid() const { return grid_; }
    std::span<const cplx> values() const { return values_; }
    std::span<cplx> values() { return values_; }
    cplx operator[](std::size_t i) const { return values_[i]; }
    cplx& operator[](std::size_t i) { return values_[i]; }
    std::size_t size() const { return values_.size(); }

    /// Pointwise product (convolution theorem on the spatial side).
    Spectrum& operator*=(const Spectrum& other);
    friend Spectrum operator*(Spectrum a, const Spectrum& b) { return a *= b; }

    /// Value at the grid frequency with the given signed indices (per axis).
    cplx at_signed(std::int64_t m0, std::int64_t m1 = 0) const;

private:
    GridSpec grid_;
    std::vector<cplx> values_;
};

/// Complex samples of a function on the torus grid.
///
/// A function produced from a Spectrum remembers it, so band-limitation tests on
/// spectrally constructed functions are exact rather than up to round-off.
class SampledFunction {
public:
    SampledFunction(GridSpec grid, std::vector<cplx> samples);
    static SampledFunction zeros(const GridSpec& grid);
    static SampledFunction constant(const GridSpec& grid, cplx value);
    static SampledFunction from_function(const GridSpec& grid, const std::function<cplx(std::span<const double>)>& fn);
    static SampledFunction from_radial(const GridSpec& grid, const std::function<double(double)>& profile);

    const GridSpec& grid() const { return grid_; }
    std::span<const cplx> samples() const { return samples_; }
    cplx operator[](std::size_t i) const { return samples_[i]; }
    std::size_t size() const { return samples_.size(); }

    bool has_spectrum_cache() const { return static_cast<bool>(spectrum_); }
    const Spectrum* spectrum_cache() const { return spectrum_.get(); }

    SampledFunction& operator+=(const SampledFunction& other);
    SampledFunction& operator*=(cplx scalar);
    friend SampledFunction operator+(SampledFunction a, const SampledFunction& b) { return a += b; }
    friend SampledFunction operator*(cplx s, SampledFunction a) { return a *= s; }

private:
    friend SampledFunction fft_inverse(const Spectrum& spectrum);

    GridSpec grid_;
    std::vector<cplx> samples_;
    std::shared_ptr<const Spectrum> spectrum_;
};

Spectrum fft_forward(const SampledFunction& f);
SampledFunction fft_inverse(const Spectrum& spectrum);

/// Zeroes every grid frequency with |xi| > radius. Refuses radius >= Nyquist.
SampledFunction band_project(const SampledFunction& f, double radius);

/// True when the spectrum vanishes at every grid frequency with |xi| > radius,
/// up to rel_tol times the largest spectral magnitude (0 means exactly).
bool is_band_limited(const SampledFunction& f, double radius, double rel_tol = 0.0);

/// (I - Delta)^{s/2}: spectrum multiplied by (1 + 4 pi^2 |xi|^2)^{s/2}.
SampledFunction bessel_potential(const SampledFunction& f, double s);

/// Circular convolution with Riemann-sum normalisation: (f*g)_hat = f_hat g_hat.
SampledFunction convolve(const SampledFunction& f, const SampledFunction& g);

/// Multiplies the spectrum by a symbol sampled on the same grid.
SampledFunction apply_symbol(const SampledFunction& f, const Spectrum& symbol);

/// Translation by a grid vector, done spectrally: f(x - shift).
SampledFunction translate(const SampledFunction& f, std::span<const double> shift);

/// Discrete L^p quasi-norm of samples with weight `cell` per sample; p may be +inf.
double weighted_lp(std::span<const cplx> values, double cell, double p);

/// Cell-weighted L^p norm of the samples of f (Riemann sum; p = inf is the grid max).
double lp_norm(const SampledFunction& f, double p);

/// Frequency-cell-weighted L^p norm of a spectrum.
double lp_norm(const Spectrum& F, double p);

/// Samples of a spectrum viewed as a function on the dual torus: a GridSpec with
/// half-width n/(4L) whose sample j sits at frequency -n/(4L) + j/(2L).
SampledFunction spectrum_as_function(const Spectrum& F);

}  // namespace vvfm
