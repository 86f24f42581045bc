#include "vvfm/fields.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace vvfm {

VectorField::VectorField(const GridSpec& grid, int kmin, int kmax, double band_constant)
    : grid_(grid), kmin_(kmin), kmax_(kmax), band_(band_constant) {
    if (!(band_constant > 0.0)) throw DomainError("band constant A must be positive");
    if (empty()) return;
    const int J = grid.dyadic_level();
    if (kmin < -J) {
        std::ostringstream msg;
        msg << "kmin = " << kmin << " gives cubes larger than the torus (need kmin >= " << -J << ")";
        throw DomainError(msg.str());
    }
    if (kmax > grid.finest_scale()) {
        std::ostringstream msg;
        msg << "kmax = " << kmax << " puts cube corners off the grid of " << grid.describe()
            << " (need kmax <= " << grid.finest_scale() << ")";
        throw GridCompatibilityError(msg.str());
    }
    if (band_radius(kmax) >= grid.nyquist()) {
        std::ostringstream msg;
        msg << "band radius A 2^{kmax+1} = " << band_radius(kmax) << " is not below Nyquist " << grid.nyquist();
        throw DomainError(msg.str());
    }
    components_.reserve(static_cast<std::size_t>(kmax - kmin + 1));
    for (int k = kmin; k <= kmax; ++k) components_.push_back(SampledFunction::zeros(grid));
}

double VectorField::band_radius(int k) const { return band_ * std::ldexp(1.0, k + 1); }

const SampledFunction& VectorField::operator[](int k) const {
    if (!has_scale(k)) throw DomainError("scale " + std::to_string(k) + " outside the field range");
    return components_[static_cast<std::size_t>(k - kmin_)];
}

void VectorField::set(int k, SampledFunction f) {
    if (!has_scale(k)) throw DomainError("scale " + std::to_string(k) + " outside the field range");
    require_same_grid(grid_, f.grid(), "VectorField::set");
    if (!is_band_limited(f, band_radius(k))) {
        std::ostringstream msg;
        msg << "component at scale " << k << " is not band-limited to A 2^{k+1} = " << band_radius(k);
        throw DomainError(msg.str());
    }
    components_[static_cast<std::size_t>(k - kmin_)] = std::move(f);
}

void VectorField::require_band(double radius_scale_factor, const char* what) const {
    for (int k = kmin_; k <= kmax_; ++k) {
        const double radius = radius_scale_factor * std::ldexp(1.0, k);
        if (!is_band_limited((*this)[k], radius)) {
            std::ostringstream msg;
            msg << what << ": component at scale " << k << " is not band-limited to " << radius;
            throw DomainError(msg.str());
        }
    }
}

// ------------------------------------------------------- CubeCoefficients

void CubeCoefficients::set(const DyadicCube& q, cplx value) {
    if (q.dim != dim_) throw DimensionError("cube dimension differs from coefficient dimension");
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
        throw DomainError("cube coefficients must be finite");
    }
    entries_[q] = value;
}

void CubeCoefficients::add(const DyadicCube& q, cplx value) { set(q, get(q) + value); }

cplx CubeCoefficients::get(const DyadicCube& q) const {
    auto it = entries_.find(q);
    return it == entries_.end() ? cplx{} : it->second;
}

int CubeCoefficients::min_scale() const {
    if (entries_.empty()) throw DomainError("no coefficients");
    return entries_.begin()->first.k;
}

int CubeCoefficients::max_scale() const {
    if (entries_.empty()) throw DomainError("no coefficients");
    return entries_.rbegin()->first.k;
}

double CubeCoefficients::max_abs_difference(const CubeCoefficients& other) const {
    double worst = 0.0;
    for (const auto& [q, v] : entries_) worst = std::max(worst, std::abs(v - other.get(q)));
    for (const auto& [q, v] : other.entries_) {
        if (!contains(q)) worst = std::max(worst, std::abs(v));
    }
    return worst;
}

// ----------------------------------------------------------- ExponentTuple

double ExponentTuple::min1p() const { return std::min(1.0, p); }

double ExponentTuple::min1pq() const { return std::min({1.0, p, q}); }

double ExponentTuple::tau_sp() const { return dim / (s - (dim / min1p() - dim)); }

double ExponentTuple::tau_spq() const { return dim / (s - (dim / min1pq() - dim)); }

double dual_exponent(double p) {
    if (!(p >= 1.0)) throw DomainError("dual exponent needs p >= 1");
    if (p == 1.0) return std::numeric_limits<double>::infinity();
    if (std::isinf(p)) return 1.0;
    return p / (p - 1.0);
}

}  // namespace vvfm
