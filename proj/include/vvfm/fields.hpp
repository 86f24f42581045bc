#pragma once

#include <map>
#include <string>
#include <vector>

#include "vvfm/dyadic.hpp"
#include "vvfm/spectral.hpp"

namespace vvfm {

inline constexpr double kDefaultBandConstant = 0.25;

/// Finite family {f_k}, k in [kmin, kmax], each f_k in E(A 2^k), i.e. its
/// spectrum vanishes beyond radius A 2^{k+1}.
///
/// Construction enforces the grid contract: every scale's cubes fit in the
/// torus (kmin >= -J), all cube corners are grid points (2^-kmax a multiple of
/// h) and the top band radius sits strictly below Nyquist. An empty range
/// (kmax < kmin) is allowed and carries no components.
class VectorField {
public:
    VectorField(const GridSpec& grid, int kmin, int kmax, double band_constant = kDefaultBandConstant);

    const GridSpec& grid() const { return grid_; }
    int kmin() const { return kmin_; }
    int kmax() const { return kmax_; }
    double band_constant() const { return band_; }
    bool empty() const { return kmax_ < kmin_; }
    std::size_t scale_count() const { return components_.size(); }
    bool has_scale(int k) const { return k >= kmin_ && k <= kmax_; }
    double band_radius(int k) const;

    const SampledFunction& operator[](int k) const;
    /// Replaces f_k; refuses off-grid or out-of-band components.
    void set(int k, SampledFunction f);

    /// Throws DomainError when the requested class radius is violated at any scale.
    void require_band(double radius_scale_factor, const char* what) const;

private:
    GridSpec grid_;
    int kmin_;
    int kmax_;
    double band_;
    std::vector<SampledFunction> components_;
};

/// b_Q indexed by dyadic cubes, kept sorted by (scale, position).
class CubeCoefficients {
public:
    explicit CubeCoefficients(int dim = 1) : dim_(dim) {}

    int dim() const { return dim_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    void set(const DyadicCube& q, cplx value);
    void add(const DyadicCube& q, cplx value);
    cplx get(const DyadicCube& q) const;
    bool contains(const DyadicCube& q) const { return entries_.count(q) != 0; }

    const std::map<DyadicCube, cplx>& entries() const { return entries_; }
    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    /// Smallest and largest scale present; throws on empty.
    int min_scale() const;
    int max_scale() const;

    /// Largest |b_Q - c_Q| over the union of supports.
    double max_abs_difference(const CubeCoefficients& other) const;

private:
    int dim_;
    std::map<DyadicCube, cplx> entries_;
};

/// Exponent tuple with the derived critical indices.
struct ExponentTuple {
    int dim = 1;
    double p = 2.0;
    double q = 2.0;
    double s = 1.0;
    double r = 2.0;

    double min1pq() const;
    double min1p() const;
    /// d / (s - (d/min(1,p) - d)).
    double tau_sp() const;
    /// d / (s - (d/min(1,p,q) - d)); positive only when s > d/min(1,p,q) - d.
    double tau_spq() const;
};

/// Dual exponent p' (1/p + 1/p' = 1), with 1' = inf and inf' = 1.
double dual_exponent(double p);

}  // namespace vvfm
