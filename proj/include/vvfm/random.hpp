#pragma once

#include <cstdint>
#include <random>

#include "vvfm/fields.hpp"

namespace vvfm {

std::uint64_t splitmix64(std::uint64_t x);

/// Independent stream for trial `index` of a run seeded with `master`; the
/// stream depends only on (master, index), never on scheduling.
class TrialRng {
public:
    TrialRng(std::uint64_t master, std::uint64_t index);

    double normal() { return normal_(engine_); }
    double uniform() { return uniform_(engine_); }
    /// Standard complex Gaussian (E|z|^2 = 1).
    cplx complex_normal();
    int uniform_int(int lo, int hi);
    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
    std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

/// Trigonometric polynomial with i.i.d. complex Gaussian coefficients at every
/// grid frequency with |xi| <= radius, normalised by the number of modes.
/// Coefficients are drawn in frequency order, so the same stream gives the same
/// continuum function on any grid with the same half-width.
SampledFunction random_band_limited(const GridSpec& grid, double radius, TrialRng& rng);

/// Field with independent components f_k in E(2^{k-2}) (band radius 2^{k-2}).
VectorField random_field(const GridSpec& grid, int kmin, int kmax, TrialRng& rng);

/// Random multiplier profile on a profile grid: Gaussian coefficients at dual
/// frequencies |y| <= cutoff with envelope (1 + |y|^2)^{-a/2}, times Psi0_hat.
/// The envelope exponent a tunes the Sobolev regularity.
SampledFunction random_profile(const GridSpec& profile_grid, double envelope_a, double cutoff, TrialRng& rng);

/// Band-limited draw of radius `band` times smooth_step(|x|, B/2, B): smooth and
/// supported in |x| <= B.
SampledFunction random_compact(const GridSpec& grid, double B, double band, TrialRng& rng);

}  // namespace vvfm
