#pragma once

#include <string>
#include <vector>

#include "vvfm/spectral.hpp"

namespace vvfm {

/// Exponents of the sharpness example. t = d/min(1,p,q) is derived; gamma is free
/// inside 2/tau^(s,p,q) < gamma < 2/min(1,p,q).
struct CounterexampleParams {
    int dim = 1;
    double p = 1.0;
    double q = 1.0;
    double s = 0.6;
    double gamma = 1.6;

    double min1pq() const;
    double t() const;
    double tau() const;
    /// tau gamma / 2: the exponent that makes the multiplier norm finite when > 1.
    double finiteness_exponent() const;
    /// gamma min(1,p,q) / 2: the exponent that makes ||K||_{L^min} infinite when < 1.
    double blowup_exponent() const;

    /// Each violated hypothesis, stated with its computed sides.
    std::vector<std::string> violations() const;
    void validate() const;
};

/// H(x) = (1 + 4 pi^2 |x|^2)^{-t/2} (1 + ln(1 + 4 pi^2 |x|^2))^{-gamma/2}.
double h_value(const CounterexampleParams& params, double r);
SampledFunction h_function(const CounterexampleParams& params, const GridSpec& grid);

/// eta = |g|^2 with g_hat = smooth_step(|xi|, rho/2, rho): nonnegative, spectrum in
/// |xi| <= 2 rho, and bounded below on |x| <= flat_radius.
struct EtaShape {
    double flat_radius;
    double support_radius;  // rho

    /// d = 1: (1/100, 1/20). d = 2: (1/8, 1/4), a relaxed radius that fits desk grids.
    static EtaShape preset(int dim);
};

/// Refuses grids that do not resolve the shape: h must be below the flat radius
/// and rho must span at least four frequency cells.
SampledFunction build_eta(const GridSpec& grid, const EtaShape& shape);
SampledFunction build_eta(const GridSpec& grid);

/// K = H * eta (spectral convolution on the torus).
SampledFunction build_K(const CounterexampleParams& params, const GridSpec& grid);

/// eta -> m_k(2^k eta) where m_k = (K_k)^, K_k(x) = 2^{kd} K(2^k x). The dilation is
/// done on a torus of half-width 2^-k L, so the result lives on the dual grid of K
/// (half-width n/(4L)) for every k.
SampledFunction build_mk(const SampledFunction& K, int k);

/// I(R) = int_1^R u^{-1} (1 + 2 ln u)^{-a} du by adaptive quadrature, and its closed form.
double conv_integral(double a, double R);
double conv_integral_closed(double a, double R);

/// J(R) = int_{|x| <= R} (1 + 4 pi^2 |x|^2)^{-d/2} (1 + ln(1 + 4 pi^2 |x|^2))^{-b} dx.
double blowup_integral(int dim, double b, double R);

struct IncrementTrend {
    std::vector<double> radii;
    std::vector<double> values;
    /// values[i+1] - values[i] (radii are expected to double).
    std::vector<double> increments;
    /// Least-squares slope of ln(increment) against ln(ln R) over the last `tail`
    /// increments: below -1 the doubling increments are summable, above -1 not.
    double log_slope(std::size_t tail) const;
};

struct FinitenessReport {
    double exponent = 0.0;
    IncrementTrend quadrature;
    std::vector<double> closed_form;
};

/// Quadrature and closed form of I over the radii. The exponent defaults to tau gamma / 2.
FinitenessReport check_L_finiteness(const CounterexampleParams& params, const std::vector<double>& radii);
FinitenessReport check_L_finiteness(double exponent, const std::vector<double>& radii);

struct BlowupReport {
    double exponent = 0.0;
    IncrementTrend quadrature;
    /// ||H||_{L^min}^min as a Riemann sum on the torus of half-width R (spacing h),
    /// for every radius that is a power of two. Compared against quadrature.
    std::vector<double> torus_radii;
    std::vector<double> torus_values;
};

BlowupReport check_blowup(const CounterexampleParams& params, const std::vector<double>& radii, double torus_spacing = 1.0 / 16);
BlowupReport check_blowup(int dim, double exponent, const std::vector<double>& radii);

/// Grid-side L^r_s norm (r = tau) of eta -> m(eta) = (K)^(eta) as the torus grows
/// at fixed spacing h: the discrete counterpart of the finiteness estimate.
struct GridNormTrend {
    std::vector<double> half_widths;
    std::vector<double> norms;
};
GridNormTrend multiplier_norm_trend(const CounterexampleParams& params, const std::vector<double>& half_widths, double spacing);

/// The decay estimate for (I - Delta)^{s/2} H_hat, d = 1:
///   |.| <= C |xi|^{-(d - t + s)} (1 + 2 ln(1/|xi|))^{-gamma/2}  for 0 < |xi| <= 1,
///   |.| <= C e^{-|xi|/2}                                          for |xi| > 1.
/// C is fitted on fit_lo <= |xi| <= 1 and multiplied by `headroom`; the check then
/// covers every grid frequency with 0 < |xi| <= 1. The large-frequency side is
/// evaluated up to large_cap, where e^{-|xi|/2} is still above the periodisation floor.
struct DecayCheck {
    double fitted_c = 0.0;
    double worst_small_ratio = 0.0;  // max |value| / (C shape) over 0 < |xi| <= 1
    double worst_large_ratio = 0.0;  // same over 1 < |xi| <= large_cap
    bool small_pass = false;
    bool large_pass = false;
};
DecayCheck check_decay_estimate(const CounterexampleParams& params, const GridSpec& grid, double fit_lo = 0.125,
                                double headroom = 2.0, double large_cap = 16.0);

struct NecessaryNorms {
    bool projected = false;   // K was not in E(1) and has been band-projected
    double r_min = 0.0;       // min(p, q, p', q')
    double norm_r_min = 0.0;  // ||K||_{L^{r_min}}
    double norm_min1pq = 0.0; // ||K||_{L^{min(1,p,q)}}
    double fourier_sup = 0.0; // ||K_hat||_inf
    double l1 = 0.0;
    double fourier_at_zero = 0.0;
    bool nonnegative = false;
    bool l1_matches = false;  // only meaningful when nonnegative
};
/// Norms entering the necessary conditions; K is projected to E(1) (radius 2) when its
/// spectrum beyond radius 2 exceeds round-off (1e-12 relative).
NecessaryNorms necessary_condition_norms(const SampledFunction& K, double p, double q);

}  // namespace vvfm
