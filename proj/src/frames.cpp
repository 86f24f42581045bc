#include "vvfm/frames.hpp"

#include <cmath>
#include <sstream>

namespace vvfm {
namespace {

double g(double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; }

void require_range(int kmin, int kmax) {
    if (kmin > kmax) throw DomainError("empty scale range: kmin > kmax");
}

}  // namespace

double smooth_step(double t, double a, double b) {
    if (t <= a) return 1.0;
    if (t >= b) return 0.0;
    const double u = g(b - t);
    const double v = g(t - a);
    return u / (u + v);
}

// ---------------------------------------------------------------- LPFamily

LPFamily::LPFamily(const GridSpec& grid, int kmin, int kmax)
    : grid_(grid), kmin_(kmin), kmax_(kmax), phi0_(Spectrum::from_radial(grid, &LPFamily::phi0_hat)) {
    require_range(kmin, kmax);
    if (std::ldexp(1.0, kmax + 1) > grid.nyquist()) {
        std::ostringstream msg;
        msg << "LPFamily: annulus radius 2^" << kmax + 1 << " exceeds Nyquist " << grid.nyquist();
        throw DomainError(msg.str());
    }
}

double LPFamily::phi0_hat(double xi_norm) { return smooth_step(xi_norm, 1.0, 2.0); }

double LPFamily::phi_hat(int k, double xi_norm) {
    return phi0_hat(std::ldexp(xi_norm, -k)) - phi0_hat(std::ldexp(xi_norm, -k + 1));
}

Spectrum LPFamily::phi_spectrum(int k) const {
    return Spectrum::from_radial(grid_, [k](double r) { return phi_hat(k, r); });
}

Spectrum LPFamily::partition_sum() const {
    Spectrum sum = Spectrum::zeros(grid_);
    auto values = sum.values();
    for (int k = kmin_; k <= kmax_; ++k) {
        for (std::size_t i = 0; i < values.size(); ++i) values[i] += phi_hat(k, grid_.frequency_norm(i));
    }
    return sum;
}

double LPFamily::partition_error() const {
    const Spectrum sum = partition_sum();
    const double lo = std::ldexp(1.0, kmin_);
    const double hi = std::ldexp(1.0, kmax_ - 1);
    double worst = 0.0;
    for (std::size_t i = 0; i < sum.size(); ++i) {
        const double r = grid_.frequency_norm(i);
        if (r >= lo && r <= hi) worst = std::max(worst, std::abs(sum[i] - 1.0));
    }
    return worst;
}

// --------------------------------------------------------------- PsiFamily

PsiFamily::PsiFamily(const GridSpec& grid, int kmin, int kmax)
    : grid_(grid), kmin_(kmin), kmax_(kmax), psi0_(Spectrum::from_radial(grid, &PsiFamily::psi0_hat)) {
    require_range(kmin, kmax);
    if (std::ldexp(1.0, kmax) > grid.nyquist()) {
        std::ostringstream msg;
        msg << "PsiFamily: scale 2^" << kmax << " exceeds Nyquist " << grid.nyquist();
        throw DomainError(msg.str());
    }
}

double PsiFamily::psi0_hat(double xi_norm) { return smooth_step(xi_norm, kPsiInner, kPsiOuter); }

double PsiFamily::psi_hat(int k, double xi_norm) { return psi0_hat(std::ldexp(xi_norm, -k)); }

void PsiFamily::require_scale(int k) const {
    if (k < kmin_ || k > kmax_) {
        std::ostringstream msg;
        msg << "scale " << k << " outside the family range [" << kmin_ << ", " << kmax_ << "]";
        throw DomainError(msg.str());
    }
}

Spectrum PsiFamily::psi_spectrum(int k) const {
    require_scale(k);
    return Spectrum::from_radial(grid_, [k](double r) { return psi_hat(k, r); });
}

SampledFunction PsiFamily::psi_function(int k) const { return fft_inverse(psi_spectrum(k)); }

SampledFunction psi_translate(const PsiFamily& fam, const DyadicCube& q) {
    const GridSpec& grid = fam.grid();
    if (q.dim != grid.dim()) throw DimensionError("psi_translate: cube dimension differs from grid");
    fam.require_scale(q.k);
    if (!fits_in_torus(q, grid)) throw DomainError("psi_translate: cube corner outside the torus");
    Spectrum s = fam.psi_spectrum(q.k);
    const double amp = std::sqrt(q.volume());
    // xi . x_Q = (m . l) / 2^{k+J+1}: reduce the phase in integers so large
    // frequencies and corners do not lose digits.
    const std::int64_t period = std::int64_t{1} << (q.k + grid.dyadic_level() + 1);
    auto values = s.values();
    for (std::size_t i = 0; i < values.size(); ++i) {
        const auto idx = grid.unflatten(i);
        std::int64_t num = grid.signed_frequency_index(idx[0]) * q.l[0];
        if (grid.dim() == 2) num += grid.signed_frequency_index(idx[1]) * q.l[1];
        num = ((num % period) + period) % period;
        const double frac = static_cast<double>(num) / static_cast<double>(period);
        values[i] *= amp * std::polar(1.0, -2.0 * kPi * frac);
    }
    return fft_inverse(s);
}

}  // namespace vvfm
