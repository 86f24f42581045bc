#pragma once

#include <functional>
#include <vector>

#include "vvfm/spectral.hpp"

namespace vvfm {

/// Family {m_k}, k in [kmin, kmax], stored through the normalised profiles
/// eta -> m_k(2^k eta) sampled on a dedicated profile grid.
///
/// The profile grid spacing must divide 2^-k / (2L) for every k in range, so
/// m_k at a signal grid frequency xi is read off the profile at eta = 2^-k xi
/// with no interpolation. Profiles are taken to vanish outside the profile
/// box [-Lp, Lp)^d.
class MultiplierFamily {
public:
    MultiplierFamily(const GridSpec& signal_grid, const GridSpec& profile_grid, int kmin, int kmax);

    const GridSpec& signal_grid() const { return signal_; }
    const GridSpec& profile_grid() const { return profile_grid_; }
    int kmin() const { return kmin_; }
    int kmax() const { return kmax_; }
    bool has_scale(int k) const { return k >= kmin_ && k <= kmax_; }
    bool support_certified() const { return certified_; }

    /// eta -> m_k(2^k eta) on the profile grid.
    const SampledFunction& profile(int k) const;
    void set_profile(int k, SampledFunction profile);
    void set_profile(int k, const std::function<cplx(std::span<const double>)>& profile_fn);
    /// Same profile for every scale: m_k(xi) = m0(2^-k xi).
    void set_all(const std::function<cplx(std::span<const double>)>& profile_fn);

    /// m_k sampled at the signal grid frequencies.
    Spectrum symbol(int k) const;

    /// Checks supp m_k within |xi| <= 2^k on every signal grid frequency and,
    /// on success, records the certification.
    bool certify_support();
    void mark_support_certified(bool v) { certified_ = v; }

private:
    std::size_t profile_index(int k, std::int64_t m) const;

    GridSpec signal_;
    GridSpec profile_grid_;
    int kmin_;
    int kmax_;
    bool certified_ = false;
    std::vector<SampledFunction> profiles_;
};

/// Profile grid with half-width `profile_half_width` and spacing 2^-kmax/(2L)
/// for the signal grid, the coarsest grid that makes every scale an index map.
GridSpec matching_profile_grid(const GridSpec& signal_grid, int kmax, double profile_half_width);

}  // namespace vvfm
