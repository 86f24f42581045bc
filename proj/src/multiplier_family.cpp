#include "vvfm/multiplier_family.hpp"

#include <cmath>
#include <sstream>

namespace vvfm {
namespace {

// Number of profile cells per signal frequency step at scale k, or 0 if not integral.
std::int64_t profile_stride(const GridSpec& signal, const GridSpec& profile, int k) {
    const double ratio = std::ldexp(signal.frequency_spacing(), -k) / profile.spacing();
    const double rounded = std::round(ratio);
    if (rounded < 1.0 || rounded != ratio) return 0;
    return static_cast<std::int64_t>(rounded);
}

}  // namespace

MultiplierFamily::MultiplierFamily(const GridSpec& signal_grid, const GridSpec& profile_grid, int kmin, int kmax)
    : signal_(signal_grid), profile_grid_(profile_grid), kmin_(kmin), kmax_(kmax) {
    if (kmin > kmax) throw DomainError("MultiplierFamily: empty scale range");
    if (signal_grid.dim() != profile_grid.dim()) throw DimensionError("MultiplierFamily: profile and signal dimensions differ");
    if (profile_stride(signal_grid, profile_grid, kmax) == 0) {
        std::ostringstream msg;
        msg << "profile grid spacing " << profile_grid.spacing() << " does not divide 2^-kmax/(2L) = "
            << std::ldexp(signal_grid.frequency_spacing(), -kmax);
        throw GridCompatibilityError(msg.str());
    }
    for (int k = kmin; k <= kmax; ++k) profiles_.push_back(SampledFunction::zeros(profile_grid));
}

const SampledFunction& MultiplierFamily::profile(int k) const {
    if (!has_scale(k)) throw DomainError("MultiplierFamily: no multiplier at scale " + std::to_string(k));
    return profiles_[static_cast<std::size_t>(k - kmin_)];
}

void MultiplierFamily::set_profile(int k, SampledFunction p) {
    if (!has_scale(k)) throw DomainError("MultiplierFamily: no multiplier at scale " + std::to_string(k));
    require_same_grid(profile_grid_, p.grid(), "MultiplierFamily::set_profile");
    profiles_[static_cast<std::size_t>(k - kmin_)] = std::move(p);
    certified_ = false;
}

void MultiplierFamily::set_profile(int k, const std::function<cplx(std::span<const double>)>& profile_fn) {
    set_profile(k, SampledFunction::from_function(profile_grid_, profile_fn));
}

void MultiplierFamily::set_all(const std::function<cplx(std::span<const double>)>& profile_fn) {
    const auto p = SampledFunction::from_function(profile_grid_, profile_fn);
    for (int k = kmin_; k <= kmax_; ++k) set_profile(k, p);
}

std::size_t MultiplierFamily::profile_index(int k, std::int64_t m) const {
    const auto np = static_cast<std::int64_t>(profile_grid_.n());
    const std::int64_t j = m * profile_stride(signal_, profile_grid_, k) + np / 2;
    return (j < 0 || j >= np) ? profile_grid_.n() : static_cast<std::size_t>(j);
}

Spectrum MultiplierFamily::symbol(int k) const {
    const SampledFunction& p = profile(k);
    Spectrum out = Spectrum::zeros(signal_);
    auto values = out.values();
    const std::size_t np = profile_grid_.n();
    for (std::size_t i = 0; i < values.size(); ++i) {
        const auto idx = signal_.unflatten(i);
        const std::size_t a = profile_index(k, signal_.signed_frequency_index(idx[0]));
        if (a == np) continue;
        if (signal_.dim() == 1) {
            values[i] = p[a];
        } else {
            const std::size_t b = profile_index(k, signal_.signed_frequency_index(idx[1]));
            if (b == np) continue;
            values[i] = p[profile_grid_.flatten(a, b)];
        }
    }
    return out;
}

bool MultiplierFamily::certify_support() {
    for (int k = kmin_; k <= kmax_; ++k) {
        const Spectrum s = symbol(k);
        const double radius = std::ldexp(1.0, k);
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (signal_.frequency_norm(i) > radius && s[i] != cplx{}) {
                certified_ = false;
                return false;
            }
        }
    }
    certified_ = true;
    return true;
}

GridSpec matching_profile_grid(const GridSpec& signal_grid, int kmax, double profile_half_width) {
    const double h = std::ldexp(signal_grid.frequency_spacing(), -kmax);
    const double n = 2.0 * profile_half_width / h;
    if (n < 8.0 || n > 1e9 || n != std::round(n)) {
        throw DomainError("matching_profile_grid: unsupported profile size");
    }
    return GridSpec(signal_grid.dim(), static_cast<std::size_t>(n), profile_half_width);
}

}  // namespace vvfm
