#include "vvfm/random.hpp"

#include <cmath>

#include "vvfm/frames.hpp"

namespace vvfm {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

TrialRng::TrialRng(std::uint64_t master, std::uint64_t index) : engine_(splitmix64(master ^ splitmix64(index))) {}

cplx TrialRng::complex_normal() {
    const double a = normal();
    const double b = normal();
    return {a * M_SQRT1_2, b * M_SQRT1_2};
}

int TrialRng::uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

namespace {

// Spectrum with coefficient draws at signed indices |m| dxi <= radius, walked in
// lexicographic order of m, scaled by scale(|xi|) / sqrt(#modes).
template <typename Weight>
Spectrum random_spectrum(const GridSpec& grid, double radius, TrialRng& rng, Weight weight) {
    if (radius >= grid.nyquist()) throw DomainError("random spectrum radius must lie below Nyquist");
    const double dxi = grid.frequency_spacing();
    const auto M = static_cast<std::int64_t>(std::floor(radius / dxi + 1e-9));
    const auto n = static_cast<std::int64_t>(grid.n());
    auto wrap = [n](std::int64_t m) { return static_cast<std::size_t>((m + n) % n); };
    Spectrum out = Spectrum::zeros(grid);
    auto values = out.values();
    std::size_t modes = 0;
    const double cell = grid.dim() == 1 ? 2.0 * grid.half_width() : 4.0 * grid.half_width() * grid.half_width();
    for (std::int64_t a = -M; a <= M; ++a) {
        for (std::int64_t b = (grid.dim() == 2 ? -M : 0); b <= (grid.dim() == 2 ? M : 0); ++b) {
            const double r = std::hypot(static_cast<double>(a), static_cast<double>(b)) * dxi;
            if (r > radius) continue;
            values[grid.flatten(wrap(a), wrap(b))] = rng.complex_normal() * weight(r) * cell;
            ++modes;
        }
    }
    const double norm = 1.0 / std::sqrt(static_cast<double>(std::max<std::size_t>(modes, 1)));
    for (auto& v : values) v *= norm;
    return out;
}

}  // namespace

SampledFunction random_band_limited(const GridSpec& grid, double radius, TrialRng& rng) {
    return fft_inverse(random_spectrum(grid, radius, rng, [](double) { return 1.0; }));
}

VectorField random_field(const GridSpec& grid, int kmin, int kmax, TrialRng& rng) {
    VectorField F(grid, kmin, kmax);
    for (int k = kmin; k <= kmax; ++k) F.set(k, random_band_limited(grid, std::ldexp(1.0, k - 2), rng));
    return F;
}

SampledFunction random_profile(const GridSpec& profile_grid, double envelope_a, double cutoff, TrialRng& rng) {
    // Dual variable of the profile grid = its frequency variable.
    const auto raw = fft_inverse(random_spectrum(profile_grid, cutoff, rng, [envelope_a](double y) {
        return std::pow(1.0 + y * y, -0.5 * envelope_a);
    }));
    std::vector<cplx> samples(raw.samples().begin(), raw.samples().end());
    for (std::size_t i = 0; i < samples.size(); ++i) samples[i] *= PsiFamily::psi0_hat(profile_grid.coordinate_norm(i));
    return SampledFunction(profile_grid, std::move(samples));
}

SampledFunction random_compact(const GridSpec& grid, double B, double band, TrialRng& rng) {
    if (!(B > 0.0) || B > grid.half_width()) throw DomainError("random_compact: support radius must lie in (0, L]");
    const auto raw = random_band_limited(grid, band, rng);
    std::vector<cplx> samples(raw.samples().begin(), raw.samples().end());
    for (std::size_t i = 0; i < samples.size(); ++i) samples[i] *= smooth_step(grid.coordinate_norm(i), 0.5 * B, B);
    return SampledFunction(grid, std::move(samples));
}

}  // namespace vvfm
